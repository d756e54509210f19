#pragma once

// Wall-clock complexity harness. For each size: one discarded warm-up batch,
// then `reps` timed batches. A batch repeats the call enough times to fill
// min_batch_seconds, and the per-call time is batch time / repetitions.
// A least-squares line through (log size, log mean) gives the exponent.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wheel6 {

enum class BenchMethod : std::uint8_t { Naive, Table, EratosthenesSieve, WheelSieve };

std::string_view to_string(BenchMethod m) noexcept;
std::optional<BenchMethod> parse_bench_method(std::string_view name) noexcept;

struct BenchConfig {
  BenchMethod method = BenchMethod::Naive;
  std::vector<std::uint64_t> sizes;  // n for naive/table, limit for sieves
  unsigned reps = 5;
  double min_batch_seconds = 2e-3;
};

struct BenchPoint {
  std::uint64_t size = 0;
  std::uint64_t input = 0;  // largest prime <= size for naive/table; size otherwise
  std::uint64_t calls_per_batch = 0;
  double mean_seconds = 0;
  double stddev_seconds = 0;
};

struct PowerFit {
  double exponent = 0;
  double r_squared = 0;
};

struct BenchReport {
  BenchMethod method = BenchMethod::Naive;
  std::vector<BenchPoint> points;
  PowerFit fit;
};

// Throws std::invalid_argument for fewer than 3 sizes, sizes not strictly
// increasing, a size < 2, or reps < 3. RangeError for sizes over the ceilings.
void validate(const BenchConfig& config);

BenchReport run_bench(const BenchConfig& config);

// Least squares on (log x, log y). Needs >= 2 points with positive values.
PowerFit fit_power_law(std::span<const double> xs, std::span<const double> ys);

// Largest prime <= n by trial division; n >= 2.
std::uint64_t largest_prime_at_most(std::uint64_t n);

// method,size,mean_seconds,stddev_seconds rows plus
// "# fitted_exponent=<x> r2=<y>".
void write_bench_csv(std::ostream& out, const BenchReport& report);

}  // namespace wheel6
