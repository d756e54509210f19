#include "wheel6/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "wheel6/errors.hpp"
#include "wheel6/oracle.hpp"
#include "wheel6/primality.hpp"
#include "wheel6/sieve.hpp"

namespace wheel6 {

std::string_view to_string(BenchMethod m) noexcept {
  switch (m) {
    case BenchMethod::Naive: return "naive";
    case BenchMethod::Table: return "table";
    case BenchMethod::EratosthenesSieve: return "eratosthenes-sieve";
    case BenchMethod::WheelSieve: return "wheel-sieve";
  }
  return "?";
}

std::optional<BenchMethod> parse_bench_method(std::string_view name) noexcept {
  for (auto m : {BenchMethod::Naive, BenchMethod::Table, BenchMethod::EratosthenesSieve,
                 BenchMethod::WheelSieve}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::uint64_t largest_prime_at_most(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("largest_prime_at_most: n must be >= 2");
  while (!oracle::is_prime(n)) --n;
  return n;
}

void validate(const BenchConfig& config) {
  if (config.sizes.size() < 3) throw std::invalid_argument("bench: need at least 3 sizes");
  if (config.reps < 3) throw std::invalid_argument("bench: reps must be >= 3");
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    if (config.sizes[i] < 2) throw std::invalid_argument("bench: sizes must be >= 2");
    if (i > 0 && config.sizes[i] <= config.sizes[i - 1]) {
      throw std::invalid_argument("bench: sizes must be strictly increasing");
    }
  }
  const std::uint64_t largest = config.sizes.back();
  switch (config.method) {
    case BenchMethod::Naive:
      if (largest > kMaxValue) throw RangeError("bench: size exceeds 2^62");
      break;
    case BenchMethod::Table:
      if (sieve_kmax(largest) > kMaxTableIndex) throw RangeError("bench: size exceeds the table ceiling");
      break;
    case BenchMethod::EratosthenesSieve:
    case BenchMethod::WheelSieve:
      if (largest > kMaxSieveLimit) throw RangeError("bench: size exceeds the sieve ceiling");
      break;
  }
}

PowerFit fit_power_law(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("fit_power_law: need >= 2 paired points");
  }
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0)) throw std::invalid_argument("fit_power_law: values must be positive");
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(ys[i]));
    sx += lx.back();
    sy += ly.back();
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit_power_law: x values must differ");
  PowerFit fit;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (intercept + fit.exponent * lx[i]);
    ss_res += e * e;
  }
  fit.r_squared = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

namespace {

using Clock = std::chrono::steady_clock;

// Keeps results observable so the timed calls are not elided.
volatile std::uint64_t g_sink = 0;

double time_batch(const std::function<std::uint64_t()>& call, std::uint64_t calls) {
  std::uint64_t acc = 0;
  const auto start = Clock::now();
  for (std::uint64_t c = 0; c < calls; ++c) acc += call();
  const auto stop = Clock::now();
  g_sink = g_sink + acc;
  return std::chrono::duration<double>(stop - start).count();
}

BenchPoint measure(std::uint64_t size, std::uint64_t input,
                   const std::function<std::uint64_t()>& call, const BenchConfig& config) {
  BenchPoint p{size, input, 1, 0, 0};
  // Warm-up, discarded; doubles as calibration.
  double t = time_batch(call, 1);
  while (t < config.min_batch_seconds) {
    const double scale = t > 0 ? config.min_batch_seconds / t : 16.0;
    p.calls_per_batch = static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(p.calls_per_batch) * std::min(scale * 1.2, 16.0)));
    t = time_batch(call, p.calls_per_batch);
  }

  std::vector<double> per_call;
  per_call.reserve(config.reps);
  for (unsigned r = 0; r < config.reps; ++r) {
    per_call.push_back(time_batch(call, p.calls_per_batch) /
                       static_cast<double>(p.calls_per_batch));
  }
  double sum = 0;
  for (double v : per_call) sum += v;
  p.mean_seconds = sum / static_cast<double>(per_call.size());
  double var = 0;
  for (double v : per_call) var += (v - p.mean_seconds) * (v - p.mean_seconds);
  p.stddev_seconds = std::sqrt(var / static_cast<double>(per_call.size() - 1));
  return p;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  validate(config);
  BenchReport report;
  report.method = config.method;

  // Built outside every timed region.
  CompositeIndexTable table;
  if (config.method == BenchMethod::Table) {
    table = build_composite_index_table(sieve_kmax(config.sizes.back()));
  }

  for (std::uint64_t size : config.sizes) {
    std::uint64_t input = size;
    std::function<std::uint64_t()> call;
    switch (config.method) {
      case BenchMethod::Naive:
        input = largest_prime_at_most(size);
        call = [input] { return is_prime_naive(input).is_prime() ? 1u : 0u; };
        break;
      case BenchMethod::Table:
        input = largest_prime_at_most(size);
        call = [input, &table] { return table_verdict(input, table) == Verdict::Prime ? 1u : 0u; };
        break;
      case BenchMethod::EratosthenesSieve:
        call = [input] { return static_cast<std::uint64_t>(oracle::eratosthenes(input).size()); };
        break;
      case BenchMethod::WheelSieve:
        call = [input] { return static_cast<std::uint64_t>(primes_up_to(input).size()); };
        break;
    }
    report.points.push_back(measure(size, input, call, config));
  }

  std::vector<double> xs, ys;
  for (const auto& p : report.points) {
    xs.push_back(static_cast<double>(p.size));
    ys.push_back(p.mean_seconds);
  }
  report.fit = fit_power_law(xs, ys);
  return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  char buf[128];
  out << "method,size,mean_seconds,stddev_seconds\n";
  for (const auto& p : report.points) {
    std::snprintf(buf, sizeof buf, "%.9e,%.9e", p.mean_seconds, p.stddev_seconds);
    out << to_string(report.method) << ',' << p.size << ',' << buf << '\n';
  }
  std::snprintf(buf, sizeof buf, "# fitted_exponent=%.6f r2=%.6f", report.fit.exponent,
                report.fit.r_squared);
  out << buf << '\n';
}

}  // namespace wheel6
