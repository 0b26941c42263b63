#include "semifair/fptas.hpp"

#include <atomic>
#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include <boost/integer/common_factor.hpp>

namespace semifair {

namespace {

constexpr double kGuardMargin = 1e-9;

unsigned effective_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 16u);
}

// Runs fn(row) for every row in [begin, end), pulling rows off a shared
// counter. Rows are independent, so the result does not depend on the split.
template <typename F>
void for_each_row(int begin, int end, unsigned threads, F&& fn) {
  if (threads <= 1 || end - begin < 2) {
    for (int m = begin; m < end; ++m) fn(m);
    return;
  }
  std::atomic<int> next{begin};
  auto worker = [&] {
    for (;;) {
      int m = next.fetch_add(1);
      if (m >= end) return;
      fn(m);
    }
  };
  unsigned spawn = std::min<unsigned>(threads, static_cast<unsigned>(end - begin)) - 1;
  std::vector<std::thread> pool;
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

// Monotone false->true predicate search on [0, limit], with limit+1 acting
// as a virtual true sentinel. The hint narrows the bracket first; the result
// is the exact first true index regardless of the hint.
template <typename P>
long first_true(long limit, long hint, const P& pred) {
  auto at = [&](long x) { return x > limit ? true : pred(x); };
  long lo = 0, hi = limit + 1;
  hint = std::clamp<long>(hint, 0, limit + 1);
  if (at(hint)) {
    hi = hint;
    long step = 1;
    while (hi - step >= 0 && at(hi - step)) {
      hi -= step;
      step <<= 1;
    }
    lo = std::max<long>(0, hi - step + 1);
  } else {
    lo = hint + 1;
    long step = 2;
    long probe = hint + step;
    while (probe <= limit && !at(probe)) {
      lo = probe + 1;
      step <<= 1;
      probe = hint + step;
    }
    hi = std::min(probe, limit + 1);
  }
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (at(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// One cell of the recursion. take = row (m-1, i-1), skip = row (m, i-1).
// Candidates come in two sorted families sharing the floor_h index table:
//   S1, r in [0, j]:  k = q^(r-j); indices (r, j + floor_h(j-r)); r = j drops
//                     the skip branch (k = 1).
//   S2, t in [0, j]:  k = 1 - q^(-t); indices (j + floor_h(t), j - t); t = 0
//                     drops the take branch (k = 0).
// In each family the take branch is non-decreasing and the skip branch
// non-increasing, so the minimum of the pointwise max sits at the crossover;
// probing the crossover and its left neighbor is exact.
struct CellSolver {
  const ExtendedCapacity* take;
  const ExtendedCapacity* skip;
  long lf_take;  // last finite index of the take row, -1 if none
  std::int64_t w;
  const GridGeometry* geom;

  long s1_hint = 0;
  long s2_hint = 0;

  ExtendedCapacity s1_value(long j, long r) const {
    ExtendedCapacity first = take[r].plus(w);
    if (r == j) return first;
    long idx = j + geom->floor_h(j - r);
    if (idx < 0) idx = 0;
    return std::max(first, skip[idx]);
  }

  ExtendedCapacity s2_value(long j, long t) const {
    ExtendedCapacity second = skip[j - t];
    if (t == 0) return second;
    long idx = j + geom->floor_h(t);
    if (idx < 0) idx = 0;
    return std::max(take[idx].plus(w), second);
  }

  ExtendedCapacity solve(long j) {
    // S1: first r where take[r] + w >= skip branch. Beyond the take row's
    // finite prefix the predicate is vacuously true, so the search range can
    // be clipped there.
    long limit1 = std::min(j, lf_take + 1);
    long r_star = first_true(limit1, s1_hint, [&](long r) {
      ExtendedCapacity first = take[r].plus(w);
      if (r == j) return true;
      long idx = j + geom->floor_h(j - r);
      if (idx < 0) idx = 0;
      return first >= skip[idx];
    });
    s1_hint = r_star;
    ExtendedCapacity best = ExtendedCapacity::infinite();
    if (r_star <= limit1) best = s1_value(j, r_star);
    if (r_star > 0) best = std::min(best, s1_value(j, r_star - 1));

    long t_star = first_true(j, s2_hint, [&](long t) {
      if (t == 0) return false;  // take branch dropped: never >= a real value
      long idx = j + geom->floor_h(t);
      if (idx < 0) idx = 0;
      return take[idx].plus(w) >= skip[j - t];
    });
    s2_hint = t_star;
    if (t_star <= j) best = std::min(best, s2_value(j, t_star));
    if (t_star > 0) best = std::min(best, s2_value(j, t_star - 1));
    return best;
  }
};

// Fills out[0..s] for one (m, i) row; returns the last finite index.
long fill_row(const ExtendedCapacity* take, long lf_take, const ExtendedCapacity* skip,
              ExtendedCapacity* out, long jmax, long s, std::int64_t w,
              const GridGeometry& geom) {
  CellSolver solver{take, skip, lf_take, w, &geom};
  long lf = -1;
  long j = 0;
  for (; j <= jmax; ++j) {
    ExtendedCapacity v = solver.solve(j);
    out[j] = v;
    if (v.is_infinite()) break;  // rows are monotone in j: infinite stays infinite
    lf = j;
  }
  for (; j <= s; ++j) out[j] = ExtendedCapacity::infinite();
  return lf;
}

// Column-rolling table construction: column i only needs column i-1. Rows of
// a column are mutually independent and may be filled concurrently; the
// resulting cells are identical for any thread count.
struct BuildResult {
  std::vector<ExtendedCapacity> final_row;  // row m_items of column n
  long final_lf = -1;
};

using RowSink = std::function<void(int m, int i, const ExtendedCapacity* row, long lf)>;

BuildResult run_build(const KnapsackInstance& inst, const ApproxParams& params,
                      const GridGeometry& geom, const BuildOptions& options,
                      const RowSink& sink) {
  const int n = inst.n();
  const int m_items = inst.m_items;
  const long s = params.s;
  const std::size_t row_len = static_cast<std::size_t>(s) + 1;
  const std::size_t col_len = row_len * (static_cast<std::size_t>(m_items) + 1);
  const unsigned threads = effective_threads(options.threads);

  if (col_len > (3u << 30) / 16)
    throw guard_error("capacity table columns would exceed the memory budget");

  std::vector<ExtendedCapacity> col_prev(col_len), col_cur(col_len);
  std::vector<long> lf_prev(static_cast<std::size_t>(m_items) + 1, -1);
  std::vector<long> lf_cur(static_cast<std::size_t>(m_items) + 1, -1);

  auto row_ptr = [&](std::vector<ExtendedCapacity>& col, int m) {
    return col.data() + static_cast<std::size_t>(m) * row_len;
  };

  // column i = 0: one empty-set solution at j = 0, nothing anywhere else
  std::fill(col_prev.begin(), col_prev.end(), ExtendedCapacity::infinite());
  std::fill(col_cur.begin(), col_cur.end(), ExtendedCapacity::infinite());
  col_prev[0] = ExtendedCapacity::finite(0);
  col_cur[0] = ExtendedCapacity::finite(0);  // m = 0 rows never change across columns
  lf_prev[0] = 0;
  lf_cur[0] = 0;
  if (sink)
    for (int m = 0; m <= m_items; ++m) sink(m, 0, row_ptr(col_prev, m), lf_prev[m]);

  for (int i = 1; i <= n; ++i) {
    const std::int64_t w = inst.weights[static_cast<std::size_t>(i) - 1];
    const int rows = std::min(i, m_items);
    for_each_row(1, rows + 1, threads, [&](int m) {
      long jmax = geom.guard_jmax(i, m);
      lf_cur[static_cast<std::size_t>(m)] =
          fill_row(row_ptr(col_prev, m - 1), lf_prev[static_cast<std::size_t>(m) - 1],
                   row_ptr(col_prev, m), row_ptr(col_cur, m), jmax, s, w, geom);
    });
    for (int m = rows + 1; m <= m_items; ++m) {
      std::fill_n(row_ptr(col_cur, m), row_len, ExtendedCapacity::infinite());
      lf_cur[static_cast<std::size_t>(m)] = -1;
    }
    if (sink)
      for (int m = 0; m <= m_items; ++m) sink(m, i, row_ptr(col_cur, m), lf_cur[m]);
    col_prev.swap(col_cur);
    lf_prev.swap(lf_cur);
  }

  BuildResult result;
  result.final_row.assign(row_ptr(col_prev, m_items), row_ptr(col_prev, m_items) + row_len);
  result.final_lf = lf_prev[static_cast<std::size_t>(m_items)];
  return result;
}

}  // namespace

ApproxParams approx_params(int n, const Rational& epsilon) {
  if (n < 1) throw std::invalid_argument("approx_params needs n >= 1");
  if (epsilon.num() <= 0 || epsilon >= Rational(1))
    throw std::invalid_argument("epsilon must lie in (0, 1)");

  ApproxParams p;
  p.n = n;
  p.epsilon = epsilon;
  BigInt qnum = epsilon.den() * (n + 1) + epsilon.num();
  BigInt qden = epsilon.den() * (n + 1);
  BigInt g = boost::integer::gcd(qnum, qden);
  p.q = Rational(qnum / g, qden / g);

  p.ln_q = std::log1p(Rational(epsilon.num(), qden).to_double());
  double target = static_cast<double>(n) * M_LN2;
  long s = static_cast<long>(std::ceil(target / p.ln_q));
  // outward rounding: nudge s up until q^s >= 2^n holds with a provable margin
  while (static_cast<double>(s) * (p.ln_q * (1.0 - 1e-14)) < target * (1.0 + 1e-14)) ++s;
  if (s > (1l << 31) - 2) throw guard_error("grid size s out of range");
  p.s = s;
  return p;
}

GridGeometry::GridGeometry(const ApproxParams& params, int n)
    : s_(params.s), ln_q_(params.ln_q) {
  floor_h_.resize(static_cast<std::size_t>(s_) + 1, 0);
  std::int32_t prev = static_cast<std::int32_t>(-std::min<long>(s_ + 2, INT32_MAX / 2));
  for (long t = 1; t <= s_; ++t) {
    double one_minus = -std::expm1(-static_cast<double>(t) * ln_q_);
    double h = std::log(one_minus) / ln_q_;  // <= 0
    long f = static_cast<long>(std::floor(h));
    f = std::max<long>(f, -(s_ + 2));
    // h is monotone in t; enforce it on the floored table as well
    auto v = static_cast<std::int32_t>(f);
    if (v < prev) v = prev;
    floor_h_[static_cast<std::size_t>(t)] = v;
    prev = v;
  }
  ln_fact_.resize(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 2; k <= n; ++k) ln_fact_[static_cast<std::size_t>(k)] = std::lgamma(k + 1.0);
}

long GridGeometry::guard_jmax(int i, int m) const {
  if (m < 0 || m > i) return -1;
  double ln_binom = ln_fact_[static_cast<std::size_t>(i)] -
                    ln_fact_[static_cast<std::size_t>(m)] -
                    ln_fact_[static_cast<std::size_t>(i - m)];
  double bound = (ln_binom + kGuardMargin) / ln_q_;
  if (bound >= static_cast<double>(s_)) return s_;
  return static_cast<long>(std::floor(bound));
}

CapacityTable::CapacityTable(ApproxParams params, int m_items, int n)
    : params_(std::move(params)), m_items_(m_items), n_(n) {
  geom_ = std::make_shared<GridGeometry>(params_, n_);
  const std::size_t total = (static_cast<std::size_t>(m_items_) + 1) *
                            (static_cast<std::size_t>(n_) + 1) *
                            (static_cast<std::size_t>(params_.s) + 1);
  cells_.assign(total, ExtendedCapacity::infinite());
}

CapacityTable build_capacity_table(const KnapsackInstance& inst, const ApproxParams& params,
                                   const BuildOptions& options) {
  inst.validate();
  if (params.n != inst.n())
    throw std::invalid_argument("params were computed for a different item count");
  const std::size_t total = (static_cast<std::size_t>(inst.m_items) + 1) *
                            (static_cast<std::size_t>(inst.n()) + 1) *
                            (static_cast<std::size_t>(params.s) + 1);
  if (total > options.table_budget / sizeof(ExtendedCapacity))
    throw guard_error("full capacity table would exceed the table budget");

  CapacityTable table(params, inst.m_items, inst.n());
  const long s = params.s;
  run_build(inst, params, table.geometry(), options,
            [&](int m, int i, const ExtendedCapacity* row, long) {
              for (long j = 0; j <= s; ++j) table.cell(m, i, j) = row[j];
            });
  return table;
}

ExtendedCapacity minimize_step(const CapacityTable& table, int m, int i, long j,
                               std::int64_t w_i) {
  if (m < 1 || m > table.m_items() || i < 1 || i > table.n() || j < 0 || j > table.params().s)
    throw std::invalid_argument("minimize_step indices out of range");
  if (w_i < 0) throw std::invalid_argument("negative weight");
  // lf_take = j disables the finite-prefix clip; the searches stay O(log s)
  CellSolver solver{table.row(m - 1, i - 1), table.row(m, i - 1), j, w_i, &table.geometry()};
  return solver.solve(j);
}

Rational CountResult::value() const {
  if (exponents.empty()) return Rational(exact_part);
  long emax = *std::max_element(exponents.begin(), exponents.end());
  BigInt den = boost::multiprecision::pow(q.den(), static_cast<unsigned long>(emax));
  BigInt num = 0;
  for (long e : exponents) {
    num += boost::multiprecision::pow(q.num(), static_cast<unsigned long>(e)) *
           boost::multiprecision::pow(q.den(), static_cast<unsigned long>(emax - e));
  }
  num += exact_part * den;
  return Rational(num, den);
}

CountResult CountResult::exact(BigInt value) {
  CountResult r;
  r.mode = Mode::exact;
  r.exact_part = std::move(value);
  return r;
}

CountResult CountResult::zero_approximate(Rational q) {
  CountResult r;
  r.mode = Mode::approximate;
  r.q = std::move(q);
  return r;
}

CountResult CountResult::single_power(Rational q, long exponent) {
  CountResult r;
  r.mode = Mode::approximate;
  r.q = std::move(q);
  r.exponents.push_back(exponent);
  return r;
}

CountResult approx_count(const KnapsackInstance& inst, const ApproxParams& params,
                         const BuildOptions& options) {
  inst.validate();
  if (params.n != inst.n())
    throw std::invalid_argument("params were computed for a different item count");
  GridGeometry geom(params, inst.n());
  BuildResult built = run_build(inst, params, geom, options, nullptr);

  // j' = max j with T[M][n][j] <= C; the row is monotone in j and infinite
  // past built.final_lf. T[M][n][0] equals the exact one-solution threshold,
  // so "no j fits" is exact zero detection.
  long j_prime = -1;
  for (long j = built.final_lf; j >= 0; --j) {
    const ExtendedCapacity c = built.final_row[static_cast<std::size_t>(j)];
    if (!c.is_infinite() && 2 * c.value() <= inst.twice_capacity) {
      j_prime = j;
      break;
    }
  }
  if (j_prime < 0) return CountResult::exact(0);
  return CountResult::single_power(params.q, j_prime + 1);
}

CountResult approx_count(const KnapsackInstance& inst, const Rational& epsilon,
                         const BuildOptions& options) {
  return approx_count(inst, approx_params(inst.n(), epsilon), options);
}

}  // namespace semifair
