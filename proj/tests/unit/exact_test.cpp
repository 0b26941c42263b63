#include <doctest.h>

#include <random>

#include "semifair/allocations.hpp"
#include "semifair/exact.hpp"

using namespace semifair;

namespace {

KnapsackInstance random_knapsack(std::mt19937_64& rng, int max_n, std::int64_t max_w) {
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::knapsack;
  spec.n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
  spec.max_value = max_w;
  spec.seed = rng();
  spec.capacity_rule = Rational(1 + static_cast<int>(rng() % 4), 4);
  return std::get<KnapsackInstance>(generate_instance(spec));
}

AllocationInstance random_allocation(std::mt19937_64& rng, int max_n, std::int64_t max_v) {
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::allocation;
  spec.n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
  spec.max_value = max_v;
  spec.seed = rng();
  return std::get<AllocationInstance>(generate_instance(spec));
}

}  // namespace

TEST_CASE("brute force count basics") {
  // the empty knapsack is a solution when no items are requested
  CHECK(brute_force_count(KnapsackInstance::make({7, 9}, 0, 0)) == 1);
  CHECK(brute_force_count(KnapsackInstance::make({5}, 4, 1)) == 0);
  CHECK(brute_force_count(KnapsackInstance::make({1, 2, 3, 4}, 5, 2)) == 4);
  CHECK(brute_force_count(KnapsackInstance::make({0, 0}, 0, 2)) == 1);

  KnapsackInstance too_big = KnapsackInstance::make(std::vector<std::int64_t>(26, 1), 3, 2);
  CHECK_THROWS_AS(brute_force_count(too_big), guard_error);
}

TEST_CASE("dp count matches examples") {
  CHECK(dp_exact_count(KnapsackInstance::make({1, 2, 3, 4}, 5, 2)) == 4);
  CHECK(dp_exact_count(KnapsackInstance::make({1, 1, 1}, 2, 2)) == 3);
  CHECK(dp_exact_count(KnapsackInstance::make({7}, 0, 0)) == 1);
  CHECK(dp_exact_count(KnapsackInstance::make_half({2, 1}, 3, 1)) == 1);

  ExactGuards tiny;
  tiny.dp_memory_budget = 100;
  CHECK_THROWS_AS(dp_exact_count(KnapsackInstance::make({1000, 1000}, 1999, 1), tiny),
                  guard_error);
}

TEST_CASE("dp count equals brute force on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    KnapsackInstance inst = random_knapsack(rng, 12, 30);
    CHECK(dp_exact_count(inst) == brute_force_count(inst));
  }
}

TEST_CASE("count is monotone in the capacity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    KnapsackInstance inst = random_knapsack(rng, 10, 25);
    KnapsackInstance wider = inst;
    wider.twice_capacity += 2 * static_cast<WeightSum>(rng() % 20);
    CHECK(dp_exact_count(inst) <= dp_exact_count(wider));
  }
}

TEST_CASE("tau basics") {
  KnapsackInstance inst = KnapsackInstance::make({3, 7}, 100, 2);
  CHECK(tau_exact(inst, 0, 1, Rational(1)) == ExtendedCapacity::finite(0));
  CHECK(tau_exact(inst, 0, 2, Rational(1)) == ExtendedCapacity::finite(0));
  CHECK(tau_exact(inst, 2, 1, Rational(1)).is_infinite());
  CHECK(tau_exact(inst, 1, 2, Rational(2)) == ExtendedCapacity::finite(7));
  CHECK(tau_exact(inst, 1, 2, Rational(1)) == ExtendedCapacity::finite(3));
  CHECK(tau_exact(inst, 2, 2, Rational(1)) == ExtendedCapacity::finite(10));
  // required counts above binomial(i, m) are unreachable
  CHECK(tau_exact(inst, 1, 2, Rational(3)).is_infinite());
  // literal convention at a = 0
  CHECK(tau_exact(inst, 1, 2, Rational(0)).is_infinite());
  // fractional requirements behave like their ceiling
  CHECK(tau_exact(inst, 1, 2, Rational(3, 2)) == tau_exact(inst, 1, 2, Rational(2)));
  CHECK_THROWS_AS(tau_exact(inst, -1, 2, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(tau_exact(inst, 1, 5, Rational(1)), std::invalid_argument);
}

TEST_CASE("tau is non-decreasing in the required count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    KnapsackInstance inst = random_knapsack(rng, 8, 20);
    const int n = inst.n();
    for (int i = 0; i <= n; ++i) {
      for (int m = 0; m <= i; ++m) {
        ExtendedCapacity prev = ExtendedCapacity::finite(0);
        BigInt limit = binomial(i, m);
        for (BigInt a = 1; a <= limit; ++a) {
          ExtendedCapacity cur = tau_exact_count(inst, m, i, a);
          CHECK(prev <= cur);
          prev = cur;
        }
      }
    }
  }
}

TEST_CASE("tau satisfies the split recursion") {
  // tau(m, i, a) = min over integer splits r of a of
  //   max(tau(m-1, i-1, r) + w_i, tau(m, i-1, a - r)),
  // where a zero-count branch drops out of the max.
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    KnapsackInstance inst = random_knapsack(rng, 6, 12);
    const int n = inst.n();
    for (int i = 1; i <= n; ++i) {
      const std::int64_t w = inst.weights[static_cast<std::size_t>(i) - 1];
      for (int m = 1; m <= i; ++m) {
        BigInt limit = binomial(i, m);
        for (BigInt a = 1; a <= limit; ++a) {
          ExtendedCapacity best = ExtendedCapacity::infinite();
          for (BigInt r = 0; r <= a; ++r) {
            ExtendedCapacity take = r > 0 ? tau_exact_count(inst, m - 1, i - 1, r).plus(w)
                                          : ExtendedCapacity::finite(0);
            ExtendedCapacity skip = r < a ? tau_exact_count(inst, m, i - 1, a - r)
                                          : ExtendedCapacity::finite(0);
            ExtendedCapacity branch = r == 0 ? skip : (r == a ? take : std::max(take, skip));
            best = std::min(best, branch);
          }
          CHECK(tau_exact_count(inst, m, i, a) == best);
        }
      }
    }
  }
}

TEST_CASE("census examples") {
  AllocationInstance inst;
  inst.a = {3, 1};
  inst.b = {1, 3};
  auto census = brute_force_allocation_census(inst);
  CHECK(census.lpv.nontrivial == 1);  // only ({1}, {2})
  CHECK(census.lpv.trivial == 2);     // totals tie, both one-sided splits qualify
  CHECK(census.ltv.nontrivial == 1);

  AllocationInstance even;
  even.a = {2, 2};
  even.b = {1, 1};
  auto census2 = brute_force_allocation_census(even);
  CHECK(census2.ltv.nontrivial == 2);  // both orderings tie at sum(d)/2

  AllocationInstance single;
  single.a = {2};
  single.b = {1};
  auto census3 = brute_force_allocation_census(single);
  CHECK(census3.lpv.trivial == 1);  // (S, {}) only
  CHECK(census3.lpv.nontrivial == 0);

  AllocationInstance big;
  big.a.assign(23, 1);
  big.b.assign(23, 1);
  CHECK_THROWS_AS(brute_force_allocation_census(big), guard_error);
}

TEST_CASE("census agrees with the classification predicates") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    AllocationInstance inst = random_allocation(rng, 8, 12);
    const int n = inst.n();
    AllocationCensus census = brute_force_allocation_census(inst);
    ClassTally lpv, ltv, ef, sef_a, sef_b;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      std::vector<int> set_a;
      for (int g = 1; g <= n; ++g)
        if (mask & (1ull << (g - 1))) set_a.push_back(g);
      ClassFlags flags = classify(inst, Allocation::from_set_a(set_a, n));
      const bool trivial = mask == 0 || mask + 1 == (1ull << n);
      auto bump = [&](ClassTally& t, bool f) {
        if (f) ++(trivial ? t.trivial : t.nontrivial);
      };
      bump(lpv, flags.lpv);
      bump(ltv, flags.ltv);
      bump(ef, flags.ef);
      bump(sef_a, flags.sef_a);
      bump(sef_b, flags.sef_b);
    }
    CHECK(census.lpv.nontrivial == lpv.nontrivial);
    CHECK(census.lpv.trivial == lpv.trivial);
    CHECK(census.ltv.nontrivial == ltv.nontrivial);
    CHECK(census.ef.nontrivial == ef.nontrivial);
    CHECK(census.sef_a.nontrivial == sef_a.nontrivial);
    CHECK(census.sef_b.nontrivial == sef_b.nontrivial);
  }
}
