#include "semifair/bench.hpp"

#include <chrono>
#include <sstream>

#include "semifair/allocations.hpp"
#include "semifair/fptas.hpp"
#include "semifair/instance.hpp"

namespace semifair {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.max_n < 5) throw std::invalid_argument("bench needs max_n >= 5");
  if (config.epsilons.empty()) throw std::invalid_argument("bench needs at least one epsilon");

  std::vector<BenchRow> rows;
  for (const std::string& problem : config.problems) {
    for (int n = 5; n <= config.max_n; n *= 2) {
      GeneratorSpec gen;
      gen.n = n;
      gen.max_value = config.max_value;
      gen.seed = config.seed * 1000003u + static_cast<std::uint64_t>(n);
      for (const Rational& eps : config.epsilons) {
        BenchRow row;
        row.problem = problem;
        row.n = n;
        row.epsilon = eps.to_decimal(6);
        if (problem == "knapsack") {
          gen.kind = GeneratorSpec::Kind::knapsack;
          gen.fixed_m = n / 2;
          auto inst = std::get<KnapsackInstance>(generate_instance(gen));
          BuildOptions build;
          build.threads = config.threads;
          auto start = Clock::now();
          CountResult r = approx_count(inst, eps, build);
          row.wall_ms = ms_since(start);
          row.result = r.decimal();
        } else if (problem == "lpv" || problem == "ltv") {
          gen.kind = GeneratorSpec::Kind::allocation;
          gen.fixed_m.reset();
          auto inst = std::get<AllocationInstance>(generate_instance(gen));
          AllocationCountOptions options;
          options.build.threads = config.threads;
          auto start = Clock::now();
          CountResult r = problem == "lpv"
                              ? count_lpv(inst, CountMode::approximate, eps, false, options)
                              : count_ltv(inst, CountMode::approximate, eps, false, options);
          row.wall_ms = ms_since(start);
          row.result = r.decimal();
        } else {
          throw std::invalid_argument("unknown bench problem: " + problem);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "problem,n,epsilon,wall_ms,result\n";
  for (const BenchRow& row : rows) {
    out << row.problem << ',' << row.n << ',' << row.epsilon << ',' << row.wall_ms << ','
        << row.result << '\n';
  }
  return out.str();
}

}  // namespace semifair
