#include <doctest.h>

#include <random>

#include "semifair/instance.hpp"

using namespace semifair;

TEST_CASE("knapsack instance parsing") {
  auto inst = parse_knapsack_instance(R"({"weights":[1,2,3,4],"capacity":5,"m":2})");
  CHECK(inst.n() == 4);
  CHECK(inst.m_items == 2);
  CHECK(inst.twice_capacity == 10);
  CHECK(inst.capacity_is_integral());

  auto one = parse_knapsack_instance(R"({"weights":[5],"capacity":4,"m":1})");
  CHECK(one.n() == 1);
  CHECK(one.m_items == 1);

  CHECK_THROWS_AS(parse_knapsack_instance(R"({"weights":[1,-2],"capacity":3,"m":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_knapsack_instance(R"({"weights":[1,2],"capacity":3,"m":5})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_knapsack_instance(R"({"weights":[],"capacity":3,"m":0})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_knapsack_instance("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_knapsack_instance(R"({"weights":[1],"m":0})"), std::invalid_argument);
}

TEST_CASE("half-integral capacities") {
  auto inst = parse_knapsack_instance(R"({"weights":[2,1],"capacity":"3/2","m":1})");
  CHECK(inst.twice_capacity == 3);
  CHECK_FALSE(inst.capacity_is_integral());
  CHECK(inst.capacity_str() == "3/2");

  auto from_float = parse_knapsack_instance(R"({"weights":[2,1],"capacity":1.5,"m":1})");
  CHECK(from_float.twice_capacity == 3);

  CHECK_THROWS_AS(parse_knapsack_instance(R"({"weights":[1],"capacity":"1/3","m":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_knapsack_instance(R"({"weights":[1],"capacity":1.3,"m":1})"),
                  std::invalid_argument);
}

TEST_CASE("allocation instance parsing") {
  auto inst = parse_allocation_instance(R"({"a":[8,4,6,5],"b":[5,8,7,7]})");
  CHECK(inst.n() == 4);

  auto two = parse_allocation_instance(R"({"a":[3,1],"b":[1,3]})");
  CHECK(two.n() == 2);

  CHECK_THROWS_AS(parse_allocation_instance(R"({"a":[1,2],"b":[1]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_allocation_instance(R"({"a":[1,0],"b":[1,1]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_allocation_instance(R"({"a":[],"b":[]})"), std::invalid_argument);
}

TEST_CASE("serialization round-trips") {
  std::mt19937_64 seeds(7);
  for (int trial = 0; trial < 50; ++trial) {
    GeneratorSpec spec;
    spec.kind = trial % 2 == 0 ? GeneratorSpec::Kind::knapsack : GeneratorSpec::Kind::allocation;
    spec.n = 1 + static_cast<int>(seeds() % 12);
    spec.max_value = 1 + static_cast<std::int64_t>(seeds() % 30);
    spec.seed = seeds();
    Instance inst = generate_instance(spec);
    if (auto* k = std::get_if<KnapsackInstance>(&inst)) {
      auto back = parse_knapsack_instance(serialize(*k));
      CHECK(back.weights == k->weights);
      CHECK(back.twice_capacity == k->twice_capacity);
      CHECK(back.m_items == k->m_items);
    } else {
      auto& a = std::get<AllocationInstance>(inst);
      auto back = parse_allocation_instance(serialize(a));
      CHECK(back.a == a.a);
      CHECK(back.b == a.b);
    }
  }
  // half-integral capacity round-trip
  auto inst = KnapsackInstance::make_half({3, 4}, 5, 1);
  auto back = parse_knapsack_instance(serialize(inst));
  CHECK(back.twice_capacity == 5);
}

TEST_CASE("generator determinism and rules") {
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::knapsack;
  spec.n = 10;
  spec.max_value = 50;
  spec.seed = 42;
  auto first = std::get<KnapsackInstance>(generate_instance(spec));
  auto second = std::get<KnapsackInstance>(generate_instance(spec));
  CHECK(first.weights == second.weights);
  CHECK(first.twice_capacity == second.twice_capacity);
  CHECK(first.m_items == second.m_items);

  // capacity_rule = 1/2 gives floor(sum(w) / 2)
  WeightSum total = 0;
  for (auto w : first.weights) total += w;
  CHECK(first.twice_capacity == (total / 2) * 2);

  GeneratorSpec alloc;
  alloc.kind = GeneratorSpec::Kind::allocation;
  alloc.n = 5;
  alloc.max_value = 9;
  alloc.seed = 3;
  auto inst = std::get<AllocationInstance>(generate_instance(alloc));
  for (auto v : inst.a) {
    CHECK(v >= 1);
    CHECK(v <= 9);
  }
  for (auto v : inst.b) {
    CHECK(v >= 1);
    CHECK(v <= 9);
  }

  // generated instances always validate
  std::mt19937_64 seeds(11);
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorSpec s;
    s.kind = trial % 2 == 0 ? GeneratorSpec::Kind::knapsack : GeneratorSpec::Kind::allocation;
    s.n = 1 + static_cast<int>(seeds() % 20);
    s.max_value = 1 + static_cast<std::int64_t>(seeds() % 100);
    s.seed = seeds();
    if (trial % 4 == 0) s.fixed_m = static_cast<int>(seeds() % (static_cast<unsigned>(s.n) + 1));
    CHECK_NOTHROW(generate_instance(s));
  }

  GeneratorSpec bad;
  bad.n = 0;
  CHECK_THROWS_AS(generate_instance(bad), std::invalid_argument);
}
