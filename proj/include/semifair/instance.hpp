#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semifair/numeric.hpp"

namespace semifair {

/// A knapsack instance with a prescribed number of items. The capacity is a
/// non-negative rational with denominator 1 or 2 and is stored doubled, so
/// every capacity comparison in the library is integral.
struct KnapsackInstance {
  std::vector<std::int64_t> weights;  // all >= 0
  WeightSum twice_capacity = 0;       // 2*C >= 0
  int m_items = 0;                    // 0 <= m_items <= n

  int n() const { return static_cast<int>(weights.size()); }
  bool capacity_is_integral() const { return twice_capacity % 2 == 0; }
  Rational capacity() const { return Rational(to_bigint(twice_capacity), 2); }
  std::string capacity_str() const;

  /// Throws std::invalid_argument if any invariant is violated.
  void validate() const;

  static KnapsackInstance make(std::vector<std::int64_t> weights, std::int64_t capacity,
                               int m_items);
  static KnapsackInstance make_half(std::vector<std::int64_t> weights, WeightSum twice_capacity,
                                    int m_items);
};

/// Two players' valuations over the same n goods, all strictly positive.
struct AllocationInstance {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  int n() const { return static_cast<int>(a.size()); }
  void validate() const;
};

/// A partition of the goods {1..n} into the two players' bundles.
/// Indices are 1-based; either side may be empty.
struct Allocation {
  std::vector<int> set_a;
  std::vector<int> set_b;

  /// Throws unless set_a and set_b partition {1..n}.
  void validate(int n) const;

  static Allocation from_set_a(const std::vector<int>& set_a, int n);
};

struct GeneratorSpec {
  enum class Kind { knapsack, allocation };
  Kind kind = Kind::knapsack;
  int n = 1;
  std::int64_t max_value = 1;
  std::uint64_t seed = 0;
  Rational capacity_rule = Rational(1, 2);  // knapsack: C = floor(sum(w) * rule)
  std::optional<int> fixed_m;               // knapsack: absent = uniform in [0, n]

  void validate() const;
};

using Instance = std::variant<KnapsackInstance, AllocationInstance>;

KnapsackInstance parse_knapsack_instance(const std::string& text);
AllocationInstance parse_allocation_instance(const std::string& text);

std::string serialize(const KnapsackInstance& inst);
std::string serialize(const AllocationInstance& inst);

/// Deterministic: the result is a pure function of the spec (seed included).
Instance generate_instance(const GeneratorSpec& spec);

}  // namespace semifair
