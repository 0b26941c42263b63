#pragma once

#include <string>
#include <vector>

#include "semifair/numeric.hpp"

namespace semifair {

struct BenchRow {
  std::string problem;
  int n = 0;
  std::string epsilon;
  double wall_ms = 0.0;
  std::string result;
};

struct BenchConfig {
  std::vector<std::string> problems = {"knapsack", "lpv", "ltv"};
  int max_n = 40;
  std::vector<Rational> epsilons = {Rational(1, 10)};
  std::uint64_t seed = 1;
  std::int64_t max_value = 100;
  unsigned threads = 0;
};

/// Approximate counts over generated instances with n doubling from 5 up to
/// max_n. Instances are a pure function of (seed, problem, n), so repeated
/// runs produce identical result columns.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Header "problem,n,epsilon,wall_ms,result" plus one row per line.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace semifair
