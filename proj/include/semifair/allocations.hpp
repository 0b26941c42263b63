#pragma once

#include "semifair/exact.hpp"
#include "semifair/fptas.hpp"
#include "semifair/instance.hpp"

namespace semifair {

/// Membership of one partition in each allocation class.
/// Always: ef == (sef_a && sef_b), lpv implies (sef_a || sef_b),
/// and both ef and lpv imply ltv.
struct ClassFlags {
  bool ef = false;
  bool sef_a = false;
  bool sef_b = false;
  bool lpv = false;
  bool ltv = false;
};

ClassFlags classify(const AllocationInstance& inst, const Allocation& alloc);

/// A reduced knapsack series: counting bundles S_B of size m with reduced
/// weight sum at most per-m capacity counts exactly the nontrivial
/// allocations of the corresponding class.
struct ReducedSeries {
  std::vector<std::int64_t> weights;  // all >= 1
  std::int64_t shift = 0;             // max b_i (LPV) or 1 - min d_i (LTV)
  WeightSum twice_base = 0;           // 0 for LPV, sum(a_i - b_i) for LTV
  bool swapped = false;               // LPV only: roles exchanged when sum(a) < sum(b)
  int n = 0;

  /// 2 * capacity(m) = twice_base + 2 m shift; may be negative for LTV, in
  /// which case that term counts zero subsets.
  WeightSum twice_capacity(int m) const {
    return twice_base + 2 * static_cast<WeightSum>(m) * shift;
  }
};

ReducedSeries reduce_lpv(const AllocationInstance& inst);
ReducedSeries reduce_ltv(const AllocationInstance& inst);

enum class CountMode { exact, approximate };

struct AllocationCountOptions {
  ExactGuards guards;     // exact mode
  BuildOptions build;     // approximate mode
};

/// Number of LPV allocations: the sum over m = 1..n-1 of prescribed-
/// cardinality knapsack counts of the reduced series, each counted exactly
/// (dynamic program) or approximately. include_trivial adds the two
/// directly-checked one-sided partitions as exact increments.
CountResult count_lpv(const AllocationInstance& inst, CountMode mode, const Rational& epsilon,
                      bool include_trivial = false, const AllocationCountOptions& options = {});

/// Same for LTV allocations; the capacity series is half-integral when
/// sum(a_i - b_i) is odd.
CountResult count_ltv(const AllocationInstance& inst, CountMode mode, const Rational& epsilon,
                      bool include_trivial = false, const AllocationCountOptions& options = {});

}  // namespace semifair
