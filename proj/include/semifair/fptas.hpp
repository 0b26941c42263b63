#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "semifair/instance.hpp"
#include "semifair/numeric.hpp"

namespace semifair {

/// Geometric grid parameters for a given item count and accuracy target.
/// Required solution counts are rounded to powers of q = 1 + eps/(n+1); the
/// grid has s+1 exponents with q^s >= 2^n, so it covers every possible count.
struct ApproxParams {
  Rational epsilon;
  Rational q;      // exact grid ratio, in lowest terms
  double ln_q = 0.0;
  long s = 0;
  int n = 0;
};

ApproxParams approx_params(int n, const Rational& epsilon);

/// Shared index tables for one grid. floor_h(t) = floor(log_q(1 - q^-t))
/// turns every candidate of the minimization into pure integer index
/// arithmetic; it only depends on the distance t between grid exponents.
class GridGeometry {
 public:
  explicit GridGeometry(const ApproxParams& params, int n);

  long s() const { return s_; }

  /// <= 0; defined for t in [1, s]. Monotone non-decreasing in t.
  long floor_h(long t) const { return floor_h_[static_cast<std::size_t>(t)]; }

  /// Largest j whose required count q^j is not provably above binomial(i, m);
  /// -1 when every j is excluded. Cells beyond this bound are infinite.
  long guard_jmax(int i, int m) const;

 private:
  long s_;
  double ln_q_;
  std::vector<std::int32_t> floor_h_;
  std::vector<double> ln_fact_;
};

struct BuildOptions {
  unsigned threads = 0;                       // 0 = hardware concurrency
  std::size_t table_budget = 1u << 30;        // bytes, full-table builds only
};

/// The full capacity table T[m][i][j]: an approximation of the minimal
/// capacity admitting q^j solutions with exactly m of the first i items.
/// Intended for inspection and tests; approx_count uses a rolling variant
/// that only keeps two item-columns alive.
class CapacityTable {
 public:
  CapacityTable(ApproxParams params, int m_items, int n);

  ExtendedCapacity at(int m, int i, long j) const {
    return cells_[index(m, i, j)];
  }

  /// Row (m, i) is contiguous over j.
  const ExtendedCapacity* row(int m, int i) const { return &cells_[index(m, i, 0)]; }

  const ApproxParams& params() const { return params_; }
  const GridGeometry& geometry() const { return *geom_; }
  int n() const { return n_; }
  int m_items() const { return m_items_; }

  ExtendedCapacity& cell(int m, int i, long j) { return cells_[index(m, i, j)]; }

 private:
  std::size_t index(int m, int i, long j) const {
    return (static_cast<std::size_t>(m) * static_cast<std::size_t>(n_ + 1) +
            static_cast<std::size_t>(i)) *
               static_cast<std::size_t>(params_.s + 1) +
           static_cast<std::size_t>(j);
  }

  ApproxParams params_;
  int m_items_;
  int n_;
  std::shared_ptr<const GridGeometry> geom_;
  std::vector<ExtendedCapacity> cells_;
};

CapacityTable build_capacity_table(const KnapsackInstance& inst, const ApproxParams& params,
                                   const BuildOptions& options = {});

/// One cell of the grid recursion, minimized over the candidate set
/// S1 = {q^-j..q^0} and S2 = {1-q^0..1-q^-j} with two binary searches.
/// Rows (m-1, i-1) and (m, i-1) of the table must be complete.
ExtendedCapacity minimize_step(const CapacityTable& table, int m, int i, long j, std::int64_t w_i);

/// An exact or approximate count. Approximate values are kept in log form:
/// the value is sum(q^e for e in exponents) + exact_part, which for a plain
/// knapsack count is a single power q^(j'+1). Counts of zero are exact.
struct CountResult {
  enum class Mode { exact, approximate };

  Mode mode = Mode::exact;
  Rational q;                   // grid ratio; meaningful in approximate mode
  std::vector<long> exponents;  // one entry per nonzero approximated term
  BigInt exact_part = 0;        // exact value, or exactly-counted additions

  bool is_zero() const { return exponents.empty() && exact_part == 0; }
  Rational value() const;
  std::string decimal(int digits = 12) const { return value().to_decimal(digits); }

  static CountResult exact(BigInt value);
  static CountResult zero_approximate(Rational q);
  static CountResult single_power(Rational q, long exponent);
};

/// Algorithm: build the grid table for the instance, locate the largest grid
/// exponent whose capacity bound fits, and return q^(j'+1). Guarantees
/// Z <= Z' <= q^(n+1) Z <= e^eps Z against the exact count Z, and detects
/// zero exactly.
CountResult approx_count(const KnapsackInstance& inst, const Rational& epsilon,
                         const BuildOptions& options = {});

/// Variant reusing precomputed parameters (the grid depends only on n and
/// epsilon, so series of counts over the same items can share them).
CountResult approx_count(const KnapsackInstance& inst, const ApproxParams& params,
                         const BuildOptions& options = {});

}  // namespace semifair
