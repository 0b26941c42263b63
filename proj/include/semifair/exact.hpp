#pragma once

#include <vector>

#include "semifair/instance.hpp"
#include "semifair/numeric.hpp"

namespace semifair {

/// Resource guards for the exact oracles. The defaults keep test runtimes
/// predictable; callers may raise them explicitly.
struct ExactGuards {
  int max_enum_n = 25;                            // subset enumeration is 2^n
  int max_census_n = 22;                          // partition enumeration is 2^n
  std::size_t dp_memory_budget = 256u << 20;      // bytes for the counting table
};

/// |{S : sum(w_S) <= C, |S| = m_items}| by enumeration of all 2^n subsets.
BigInt brute_force_count(const KnapsackInstance& inst, const ExactGuards& guards = {});

/// One enumeration pass, counts for every cardinality 0..n at the instance
/// capacity.
std::vector<BigInt> brute_force_count_by_m(const KnapsackInstance& inst,
                                           const ExactGuards& guards = {});

/// Pseudo-polynomial counting table: number of subsets per (cardinality,
/// weight), with cumulative queries. Weights enter in integral units; pass
/// doubled weights and capacities when the original capacity is half-integral.
class KnapsackCountTable {
 public:
  KnapsackCountTable(const std::vector<std::int64_t>& unit_weights, WeightSum capacity_limit,
                     int max_m, std::size_t memory_budget);

  /// Number of subsets of cardinality m with total weight <= capacity.
  /// Capacities above the table limit are clamped (every subset that can
  /// matter is already inside the table).
  BigInt count_at_most(int m, WeightSum capacity) const;

  WeightSum capacity_limit() const { return cap_; }

 private:
  WeightSum cap_;
  int max_m_;
  std::vector<std::vector<BigInt>> cumulative_;  // [m][c] = count with weight <= c
};

/// Exact count via the dynamic program; agrees with brute_force_count
/// wherever both run.
BigInt dp_exact_count(const KnapsackInstance& inst, const ExactGuards& guards = {});

/// tau(m, i, a): minimum capacity c such that at least ceil(a) feasible
/// solutions with exactly m of the first i items exist; infinite when m > i
/// or ceil(a) exceeds binomial(i, m). Follows the literal convention
/// tau = infinity at a = 0.
ExtendedCapacity tau_exact(const KnapsackInstance& inst, int m, int i, const Rational& a,
                           const ExactGuards& guards = {});

/// Same with the required count already an integer.
ExtendedCapacity tau_exact_count(const KnapsackInstance& inst, int m, int i,
                                 const BigInt& required, const ExactGuards& guards = {});

struct ClassTally {
  BigInt nontrivial = 0;  // both bundles nonempty
  BigInt trivial = 0;     // one bundle empty
};

/// Exhaustive classification of all 2^n partitions.
struct AllocationCensus {
  ClassTally lpv, ltv, ef, sef_a, sef_b;
};

AllocationCensus brute_force_allocation_census(const AllocationInstance& inst,
                                               const ExactGuards& guards = {});

}  // namespace semifair
