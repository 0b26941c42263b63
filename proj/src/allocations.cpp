#include "semifair/allocations.hpp"

#include <algorithm>
#include <numeric>

namespace semifair {

namespace {

WeightSum sum_over(const std::vector<int>& goods, const std::vector<std::int64_t>& values) {
  WeightSum s = 0;
  for (int g : goods) s += values[static_cast<std::size_t>(g) - 1];
  return s;
}

struct TrivialChecks {
  bool all_to_a = false;  // (S, {}) belongs to the class
  bool all_to_b = false;  // ({}, S) belongs to the class
  int count() const { return (all_to_a ? 1 : 0) + (all_to_b ? 1 : 0); }
};

// A class count over the reduced series, shared by the LPV and LTV counters.
CountResult count_series(const ReducedSeries& series, CountMode mode, const Rational& epsilon,
                         const TrivialChecks& trivial, bool include_trivial,
                         const AllocationCountOptions& options) {
  const int n = series.n;
  BigInt trivial_add = include_trivial ? trivial.count() : 0;

  if (mode == CountMode::exact) {
    // one counting table serves every m: capacities only grow with m
    BigInt total = trivial_add;
    if (n >= 2) {
      const bool halves = series.twice_base % 2 != 0;
      std::vector<std::int64_t> unit_weights = series.weights;
      if (halves)
        for (auto& w : unit_weights) w *= 2;
      auto to_units = [&](WeightSum twice_cap) {
        return halves ? twice_cap : twice_cap / 2;
      };
      WeightSum max_cap = 0;
      for (int m = 1; m <= n - 1; ++m)
        max_cap = std::max(max_cap, to_units(series.twice_capacity(m)));
      KnapsackCountTable table(unit_weights, max_cap, n - 1, options.guards.dp_memory_budget);
      for (int m = 1; m <= n - 1; ++m) {
        WeightSum twice_cap = series.twice_capacity(m);
        if (twice_cap < 0) continue;  // no subset of positive weights fits
        total += table.count_at_most(m, to_units(twice_cap));
      }
    }
    return CountResult::exact(total);
  }

  if (n < 2) return CountResult::exact(std::move(trivial_add));
  ApproxParams params = approx_params(n, epsilon);
  CountResult result = CountResult::zero_approximate(params.q);
  result.exact_part = trivial_add;
  for (int m = 1; m <= n - 1; ++m) {
    WeightSum twice_cap = series.twice_capacity(m);
    if (twice_cap < 0) continue;
    KnapsackInstance sub = KnapsackInstance::make_half(series.weights, twice_cap, m);
    CountResult term = approx_count(sub, params, options.build);
    if (!term.is_zero()) result.exponents.push_back(term.exponents.front());
  }
  // a series with no surviving approximate term is exactly known
  if (result.exponents.empty()) return CountResult::exact(std::move(result.exact_part));
  return result;
}

}  // namespace

ClassFlags classify(const AllocationInstance& inst, const Allocation& alloc) {
  inst.validate();
  alloc.validate(inst.n());
  const WeightSum a_on_a = sum_over(alloc.set_a, inst.a);
  const WeightSum b_on_a = sum_over(alloc.set_a, inst.b);
  const WeightSum a_on_b = sum_over(alloc.set_b, inst.a);
  const WeightSum b_on_b = sum_over(alloc.set_b, inst.b);

  ClassFlags f;
  f.sef_a = a_on_a >= a_on_b;
  f.sef_b = b_on_b >= b_on_a;
  f.ef = f.sef_a && f.sef_b;
  f.lpv = a_on_a >= b_on_a && b_on_b >= a_on_b;
  f.ltv = a_on_a - b_on_a >= a_on_b - b_on_b;
  return f;
}

ReducedSeries reduce_lpv(const AllocationInstance& inst) {
  inst.validate();
  const WeightSum sum_a = std::accumulate(inst.a.begin(), inst.a.end(), WeightSum(0));
  const WeightSum sum_b = std::accumulate(inst.b.begin(), inst.b.end(), WeightSum(0));

  ReducedSeries series;
  series.n = inst.n();
  series.swapped = sum_a < sum_b;
  const auto& own = series.swapped ? inst.b : inst.a;
  const auto& other = series.swapped ? inst.a : inst.b;
  series.shift = *std::max_element(other.begin(), other.end());
  series.weights.reserve(own.size());
  for (std::size_t i = 0; i < own.size(); ++i)
    series.weights.push_back(own[i] - other[i] + series.shift);
  series.twice_base = 0;
  return series;
}

ReducedSeries reduce_ltv(const AllocationInstance& inst) {
  inst.validate();
  ReducedSeries series;
  series.n = inst.n();
  std::int64_t beta = inst.a[0] - inst.b[0];
  WeightSum sum_d = 0;
  for (std::size_t i = 0; i < inst.a.size(); ++i) {
    const std::int64_t d = inst.a[i] - inst.b[i];
    beta = std::min(beta, d);
    sum_d += d;
  }
  series.shift = 1 - beta;
  series.weights.reserve(inst.a.size());
  for (std::size_t i = 0; i < inst.a.size(); ++i)
    series.weights.push_back(inst.a[i] - inst.b[i] - beta + 1);
  series.twice_base = sum_d;
  return series;
}

CountResult count_lpv(const AllocationInstance& inst, CountMode mode, const Rational& epsilon,
                      bool include_trivial, const AllocationCountOptions& options) {
  ReducedSeries series = reduce_lpv(inst);
  const WeightSum sum_a = std::accumulate(inst.a.begin(), inst.a.end(), WeightSum(0));
  const WeightSum sum_b = std::accumulate(inst.b.begin(), inst.b.end(), WeightSum(0));
  TrivialChecks trivial;
  trivial.all_to_a = sum_a >= sum_b;  // (S, {}): player A must value S at least as B does
  trivial.all_to_b = sum_b >= sum_a;
  return count_series(series, mode, epsilon, trivial, include_trivial, options);
}

CountResult count_ltv(const AllocationInstance& inst, CountMode mode, const Rational& epsilon,
                      bool include_trivial, const AllocationCountOptions& options) {
  ReducedSeries series = reduce_ltv(inst);
  TrivialChecks trivial;
  trivial.all_to_a = series.twice_base >= 0;  // sum(d) >= 0
  trivial.all_to_b = series.twice_base <= 0;
  return count_series(series, mode, epsilon, trivial, include_trivial, options);
}

}  // namespace semifair
