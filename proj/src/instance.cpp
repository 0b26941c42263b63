#include "semifair/instance.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

namespace semifair {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("instance document must be a JSON object");
  return doc;
}

std::vector<std::int64_t> int_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw std::invalid_argument(std::string("missing array field \"") + key + "\"");
  std::vector<std::int64_t> out;
  out.reserve(doc[key].size());
  for (const auto& v : doc[key]) {
    if (!v.is_number_integer())
      throw std::invalid_argument(std::string("non-integer entry in \"") + key + "\"");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

// Capacity is an integer, a float with denominator 2, or a string "p" / "p/2".
WeightSum parse_capacity(const json& v) {
  if (v.is_number_integer()) {
    return static_cast<WeightSum>(v.get<std::int64_t>()) * 2;
  }
  if (v.is_number_float()) {
    double d = v.get<double>();
    double twice = d * 2.0;
    if (twice != std::floor(twice) || std::abs(twice) > 9.0e18)
      throw std::invalid_argument("capacity must have denominator 1 or 2");
    return static_cast<WeightSum>(static_cast<std::int64_t>(twice));
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    Rational r = Rational::parse(s);
    Rational twice = r * Rational(2);
    if (twice.den() != 1 || (twice.num() != twice.ceil()))
      throw std::invalid_argument("capacity must have denominator 1 or 2: " + s);
    BigInt t = twice.num();
    if (t > BigInt(std::numeric_limits<std::int64_t>::max()) ||
        t < BigInt(std::numeric_limits<std::int64_t>::min()))
      throw std::invalid_argument("capacity out of range: " + s);
    return static_cast<WeightSum>(t.convert_to<std::int64_t>());
  }
  throw std::invalid_argument("capacity must be a number or a \"p/2\" string");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // unbiased, independent of the standard library's distribution internals
  std::uint64_t threshold = (-bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

std::string KnapsackInstance::capacity_str() const {
  if (capacity_is_integral()) return to_string(twice_capacity / 2);
  return to_string(twice_capacity) + "/2";
}

void KnapsackInstance::validate() const {
  if (weights.empty()) throw std::invalid_argument("instance needs at least one item");
  for (std::int64_t w : weights)
    if (w < 0) throw std::invalid_argument("negative weight");
  if (m_items < 0 || m_items > n())
    throw std::invalid_argument("m out of range [0, n]");
  if (twice_capacity < 0) throw std::invalid_argument("negative capacity");
}

KnapsackInstance KnapsackInstance::make(std::vector<std::int64_t> weights, std::int64_t capacity,
                                        int m_items) {
  return make_half(std::move(weights), static_cast<WeightSum>(capacity) * 2, m_items);
}

KnapsackInstance KnapsackInstance::make_half(std::vector<std::int64_t> weights,
                                             WeightSum twice_capacity, int m_items) {
  KnapsackInstance inst;
  inst.weights = std::move(weights);
  inst.twice_capacity = twice_capacity;
  inst.m_items = m_items;
  inst.validate();
  return inst;
}

void AllocationInstance::validate() const {
  if (a.empty()) throw std::invalid_argument("instance needs at least one good");
  if (a.size() != b.size())
    throw std::invalid_argument("valuation vectors differ in length");
  for (std::int64_t v : a)
    if (v < 1) throw std::invalid_argument("valuations must be positive");
  for (std::int64_t v : b)
    if (v < 1) throw std::invalid_argument("valuations must be positive");
}

void Allocation::validate(int n) const {
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  auto mark = [&](const std::vector<int>& side) {
    for (int g : side) {
      if (g < 1 || g > n) throw std::invalid_argument("good index out of range");
      if (seen[g]) throw std::invalid_argument("good assigned twice");
      seen[g] = 1;
    }
  };
  mark(set_a);
  mark(set_b);
  if (static_cast<int>(set_a.size() + set_b.size()) != n)
    throw std::invalid_argument("allocation is not a partition of the goods");
}

Allocation Allocation::from_set_a(const std::vector<int>& set_a, int n) {
  Allocation alloc;
  alloc.set_a = set_a;
  std::sort(alloc.set_a.begin(), alloc.set_a.end());
  std::vector<char> in_a(static_cast<std::size_t>(n) + 1, 0);
  for (int g : alloc.set_a) {
    if (g < 1 || g > n) throw std::invalid_argument("good index out of range");
    if (in_a[g]) throw std::invalid_argument("good listed twice");
    in_a[g] = 1;
  }
  for (int g = 1; g <= n; ++g)
    if (!in_a[g]) alloc.set_b.push_back(g);
  alloc.validate(n);
  return alloc;
}

void GeneratorSpec::validate() const {
  if (n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (max_value < 1) throw std::invalid_argument("generator needs max_value >= 1");
  if (capacity_rule.is_negative()) throw std::invalid_argument("capacity_rule must be >= 0");
  if (fixed_m && (*fixed_m < 0 || *fixed_m > n))
    throw std::invalid_argument("fixed m out of range [0, n]");
}

KnapsackInstance parse_knapsack_instance(const std::string& text) {
  json doc = parse_document(text);
  KnapsackInstance inst;
  inst.weights = int_array(doc, "weights");
  if (!doc.contains("capacity")) throw std::invalid_argument("missing \"capacity\"");
  inst.twice_capacity = parse_capacity(doc["capacity"]);
  if (!doc.contains("m") || !doc["m"].is_number_integer())
    throw std::invalid_argument("missing integer field \"m\"");
  inst.m_items = doc["m"].get<int>();
  inst.validate();
  return inst;
}

AllocationInstance parse_allocation_instance(const std::string& text) {
  json doc = parse_document(text);
  AllocationInstance inst;
  inst.a = int_array(doc, "a");
  inst.b = int_array(doc, "b");
  inst.validate();
  return inst;
}

std::string serialize(const KnapsackInstance& inst) {
  json doc;
  doc["weights"] = inst.weights;
  if (inst.capacity_is_integral())
    doc["capacity"] = static_cast<std::int64_t>(inst.twice_capacity / 2);
  else
    doc["capacity"] = inst.capacity_str();
  doc["m"] = inst.m_items;
  return doc.dump();
}

std::string serialize(const AllocationInstance& inst) {
  json doc;
  doc["a"] = inst.a;
  doc["b"] = inst.b;
  return doc.dump();
}

Instance generate_instance(const GeneratorSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  if (spec.kind == GeneratorSpec::Kind::allocation) {
    AllocationInstance inst;
    inst.a.reserve(spec.n);
    inst.b.reserve(spec.n);
    for (int i = 0; i < spec.n; ++i)
      inst.a.push_back(1 + static_cast<std::int64_t>(
                               uniform_below(rng, static_cast<std::uint64_t>(spec.max_value))));
    for (int i = 0; i < spec.n; ++i)
      inst.b.push_back(1 + static_cast<std::int64_t>(
                               uniform_below(rng, static_cast<std::uint64_t>(spec.max_value))));
    inst.validate();
    return inst;
  }

  KnapsackInstance inst;
  inst.weights.reserve(spec.n);
  BigInt total = 0;
  for (int i = 0; i < spec.n; ++i) {
    auto w = static_cast<std::int64_t>(
        uniform_below(rng, static_cast<std::uint64_t>(spec.max_value) + 1));
    inst.weights.push_back(w);
    total += w;
  }
  BigInt cap = (total * spec.capacity_rule.num()) / spec.capacity_rule.den();
  inst.twice_capacity = static_cast<WeightSum>(cap.convert_to<std::int64_t>()) * 2;
  inst.m_items = spec.fixed_m ? *spec.fixed_m
                              : static_cast<int>(uniform_below(
                                    rng, static_cast<std::uint64_t>(spec.n) + 1));
  inst.validate();
  return inst;
}

}  // namespace semifair
