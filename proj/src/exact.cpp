#include "semifair/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace semifair {

namespace {

void check_enum_guard(int n, int limit, const char* what) {
  if (n > std::min(limit, 63))
    throw guard_error(std::string(what) + " enumeration guard exceeded: n = " + std::to_string(n) +
                      " > " + std::to_string(std::min(limit, 63)));
}

// Units for integral comparisons: doubled only when the capacity is
// half-integral, so oracle tables stay as small as possible.
struct Units {
  std::vector<std::int64_t> weights;
  WeightSum capacity;
};

Units to_units(const KnapsackInstance& inst) {
  Units u;
  if (inst.capacity_is_integral()) {
    u.weights = inst.weights;
    u.capacity = inst.twice_capacity / 2;
  } else {
    u.weights.reserve(inst.weights.size());
    for (std::int64_t w : inst.weights) u.weights.push_back(2 * w);
    u.capacity = inst.twice_capacity;
  }
  return u;
}

}  // namespace

std::vector<BigInt> brute_force_count_by_m(const KnapsackInstance& inst,
                                           const ExactGuards& guards) {
  inst.validate();
  check_enum_guard(inst.n(), guards.max_enum_n, "subset");
  const int n = inst.n();
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
  for (std::uint64_t mask = 0;; ++mask) {
    WeightSum sum = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
      sum += inst.weights[static_cast<std::size_t>(std::countr_zero(rest))];
    if (2 * sum <= inst.twice_capacity)
      ++tally[static_cast<std::size_t>(std::popcount(mask))];
    if (mask == full) break;
  }
  return std::vector<BigInt>(tally.begin(), tally.end());
}

BigInt brute_force_count(const KnapsackInstance& inst, const ExactGuards& guards) {
  return brute_force_count_by_m(inst, guards)[static_cast<std::size_t>(inst.m_items)];
}

KnapsackCountTable::KnapsackCountTable(const std::vector<std::int64_t>& unit_weights,
                                       WeightSum capacity_limit, int max_m,
                                       std::size_t memory_budget)
    : max_m_(max_m) {
  if (capacity_limit < 0) capacity_limit = -1;  // empty table: every query counts 0 subsets
  WeightSum total = 0;
  for (std::int64_t w : unit_weights) {
    if (w < 0) throw std::invalid_argument("negative weight");
    total += w;
  }
  cap_ = std::min(capacity_limit, total);
  if (cap_ < 0) return;  // every query counts zero subsets
  const std::size_t cols = static_cast<std::size_t>(cap_ + 1);
  const std::size_t rows = static_cast<std::size_t>(max_m_) + 1;
  // rough per-cell footprint of a small cpp_int
  if (rows * cols > memory_budget / 48)
    throw guard_error("counting table would exceed the memory budget");

  std::vector<std::vector<BigInt>> exact(rows, std::vector<BigInt>(cols, BigInt(0)));
  exact[0][0] = 1;
  int seen = 0;
  for (std::int64_t w : unit_weights) {
    ++seen;
    if (w > cap_) continue;  // cannot appear in any counted subset
    const auto ws = static_cast<std::size_t>(w);
    for (int m = std::min(seen, max_m_); m >= 1; --m) {
      auto& row = exact[static_cast<std::size_t>(m)];
      const auto& prev = exact[static_cast<std::size_t>(m) - 1];
      for (std::size_t c = cols; c-- > ws;) row[c] += prev[c - ws];
    }
  }
  for (auto& row : exact)
    for (std::size_t c = 1; c < cols; ++c) row[c] += row[c - 1];
  cumulative_ = std::move(exact);
}

BigInt KnapsackCountTable::count_at_most(int m, WeightSum capacity) const {
  if (m < 0 || m > max_m_) return 0;
  if (capacity < 0 || cap_ < 0) return 0;
  const auto c = static_cast<std::size_t>(std::min(capacity, cap_));
  return cumulative_[static_cast<std::size_t>(m)][c];
}

BigInt dp_exact_count(const KnapsackInstance& inst, const ExactGuards& guards) {
  inst.validate();
  Units u = to_units(inst);
  KnapsackCountTable table(u.weights, u.capacity, inst.m_items, guards.dp_memory_budget);
  return table.count_at_most(inst.m_items, u.capacity);
}

ExtendedCapacity tau_exact_count(const KnapsackInstance& inst, int m, int i,
                                 const BigInt& required, const ExactGuards& guards) {
  inst.validate();
  if (m < 0 || m > inst.n() || i < 0 || i > inst.n())
    throw std::invalid_argument("tau indices out of range");
  if (required < 0) throw std::invalid_argument("required count must be non-negative");
  if (required == 0) return ExtendedCapacity::infinite();  // literal convention
  if (m > i || required > binomial(i, m)) return ExtendedCapacity::infinite();
  check_enum_guard(i, guards.max_enum_n, "tau");

  // required-th smallest total weight over all m-subsets of the first i items
  std::vector<WeightSum> sums;
  sums.reserve(binomial(i, m).convert_to<std::size_t>());
  std::vector<int> pick(static_cast<std::size_t>(m));
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    WeightSum s = 0;
    for (int idx : pick) s += inst.weights[static_cast<std::size_t>(idx)];
    sums.push_back(s);
    int p = m - 1;
    while (p >= 0 && pick[static_cast<std::size_t>(p)] == i - m + p) --p;
    if (p < 0) break;
    ++pick[static_cast<std::size_t>(p)];
    for (int t = p + 1; t < m; ++t)
      pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t) - 1] + 1;
  }
  auto rank = required.convert_to<std::size_t>() - 1;
  std::nth_element(sums.begin(), sums.begin() + static_cast<std::ptrdiff_t>(rank), sums.end());
  return ExtendedCapacity::finite(sums[rank]);
}

ExtendedCapacity tau_exact(const KnapsackInstance& inst, int m, int i, const Rational& a,
                           const ExactGuards& guards) {
  if (a.is_negative()) throw std::invalid_argument("required count must be non-negative");
  return tau_exact_count(inst, m, i, a.ceil(), guards);
}

AllocationCensus brute_force_allocation_census(const AllocationInstance& inst,
                                               const ExactGuards& guards) {
  inst.validate();
  const int n = inst.n();
  check_enum_guard(n, guards.max_census_n, "census");

  WeightSum total_a = 0, total_b = 0;
  for (std::int64_t v : inst.a) total_a += v;
  for (std::int64_t v : inst.b) total_b += v;

  struct Tally {
    std::uint64_t nontrivial = 0, trivial = 0;
  };
  Tally lpv, ltv, ef, sef_a, sef_b;
  const std::uint64_t full = (1ull << n) - 1;
  for (std::uint64_t mask_a = 0;; ++mask_a) {
    WeightSum sum_a = 0;  // player A's value of S_A
    WeightSum sum_b = 0;  // player B's value of S_A
    for (std::uint64_t rest = mask_a; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      sum_a += inst.a[i];
      sum_b += inst.b[i];
    }
    const bool is_trivial = mask_a == 0 || mask_a == full;
    const bool f_sef_a = 2 * sum_a >= total_a;
    const bool f_sef_b = 2 * (total_b - sum_b) >= total_b;
    const bool f_ef = f_sef_a && f_sef_b;
    const bool f_lpv = sum_a >= sum_b && total_b - sum_b >= total_a - sum_a;
    const bool f_ltv = 2 * (sum_a - sum_b) >= total_a - total_b;
    auto bump = [&](Tally& t, bool flag) {
      if (flag) ++(is_trivial ? t.trivial : t.nontrivial);
    };
    bump(lpv, f_lpv);
    bump(ltv, f_ltv);
    bump(ef, f_ef);
    bump(sef_a, f_sef_a);
    bump(sef_b, f_sef_b);
    if (mask_a == full) break;
  }

  AllocationCensus census;
  auto out = [](const Tally& t) {
    ClassTally c;
    c.nontrivial = t.nontrivial;
    c.trivial = t.trivial;
    return c;
  };
  census.lpv = out(lpv);
  census.ltv = out(ltv);
  census.ef = out(ef);
  census.sef_a = out(sef_a);
  census.sef_b = out(sef_b);
  return census;
}

}  // namespace semifair
