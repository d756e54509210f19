#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "wheel6/bench.hpp"
#include "wheel6/counting.hpp"
#include "wheel6/errors.hpp"
#include "wheel6/oracle.hpp"
#include "wheel6/primality.hpp"
#include "wheel6/residue.hpp"
#include "wheel6/selectors.hpp"
#include "wheel6/sieve.hpp"
#include "wheel6/table_io.hpp"

namespace wheel6::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Writes to --out when given, otherwise to stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw FormatError("cannot open " + path + " for writing");
    stream_ = file_.get();
  }

  std::ostream& operator*() { return *stream_; }

  void finish(const std::string& path) {
    stream_->flush();
    if (!*stream_) throw FormatError("write to " + (path.empty() ? "stdout" : path) + " failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::vector<std::uint64_t> parse_size_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item(text.data() + pos, comma - pos);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("--sizes: '" + std::string(item) + "' is not a natural number");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

void cmd_classify(std::uint64_t n, std::ostream& out) {
  const ClassifiedNumber c = classify(n);
  out << "n=" << c.n << " class=" << to_string(c.cls);
  if (c.k) out << " k=" << *c.k;
  out << " status=" << to_string(trivial_status(c.cls, c.k.value_or(0))) << '\n';
}

void cmd_is_prime(std::uint64_t n, const std::string& method, const std::string& table_file,
                  std::ostream& out) {
  if (n == 0) throw RangeError("is-prime: n must be >= 1");
  if (n > kMaxValue) throw RangeError("is-prime: n exceeds 2^62");
  if (n == 1) {
    out << to_string(Verdict::Unit) << '\n';
    return;
  }
  if (method == "naive") {
    out << format_verdict(is_prime_naive(n)) << '\n';
  } else if (method == "table") {
    CompositeIndexTable table;
    if (!table_file.empty()) {
      table = read_table_file(table_file);
    } else {
      table = build_composite_index_table(std::max<std::uint64_t>(1, sieve_kmax(n)));
    }
    out << format_verdict(is_prime_table(n, table)) << '\n';
  } else {
    const auto v = oracle::trial_division(n);
    if (v.verdict == oracle::OracleClass::Prime) {
      out << "PRIME\n";
    } else {
      out << "COMPOSITE = " << *v.smallest_factor << " x " << n / *v.smallest_factor << '\n';
    }
  }
}

void cmd_primes(std::uint64_t limit, const std::string& method, const std::string& path,
                std::ostream& stdout_) {
  if (limit < 2) throw RangeError("primes: --limit must be >= 2");
  const PrimeList list = method == "wheel" ? primes_up_to(limit) : oracle::eratosthenes(limit);
  Sink sink(path, stdout_);
  std::string buf;
  for (std::uint64_t p : list.primes) {
    buf += std::to_string(p);
    buf += '\n';
    if (buf.size() > (1 << 16)) {
      *sink << buf;
      buf.clear();
    }
  }
  *sink << buf;
  sink.finish(path);
}

void cmd_selectors(std::uint64_t kmax, const std::string& kind, const std::string& path,
                   std::ostream& stdout_) {
  if (kmax == 0) throw RangeError("selectors: --kmax must be >= 1");
  if (kmax > kMaxTableIndex) throw RangeError("selectors: --kmax exceeds the ceiling");
  Sink sink(path, stdout_);
  *sink << "kind,i,j,k,value\n";
  for (SelectorKind sk : kAllSelectorKinds) {
    if (kind != "all" && kind != to_string(sk)) continue;
    for (const SelectorWitness& w : enumerate_selector_pairs(sk, kmax)) {
      *sink << to_string(w.kind) << ',' << w.i << ',' << w.j << ',' << w.k << ',' << w.value()
            << '\n';
    }
  }
  sink.finish(path);
}

void cmd_build_table(std::uint64_t kmax, const std::string& path, std::ostream& out) {
  const CompositeIndexTable table = build_composite_index_table(kmax);
  write_table_file(path, table);
  out << "wrote " << path << ": kmax=" << table.kmax() << " a_composite=" << table.a_count()
      << " b_composite=" << table.b_count() << '\n';
}

void cmd_count_report(std::uint64_t kmax, const std::string& path, std::ostream& out) {
  if (kmax == 0) throw RangeError("count-report: --kmax must be >= 1");
  if (kmax > kMaxTableIndex) throw RangeError("count-report: --kmax exceeds the ceiling");
  const auto rows = count_report(kmax);
  Sink sink(path, out);
  write_count_report_csv(*sink, rows);
  sink.finish(path);

  const CountReportRow& last = rows.back();
  out << "k=" << last.k << " exact_A=" << last.exact_a << " exact_B=" << last.exact_b
      << " ratio_BA=" << format_ratio(last.ratio_ba.to_double()) << " formula_ratio_BA="
      << (last.formula_ratio_ba ? format_ratio(*last.formula_ratio_ba) : std::string("undefined"))
      << '\n';
}

void cmd_bench(const std::string& method, const std::string& sizes, unsigned reps,
               const std::string& path, std::ostream& out) {
  BenchConfig config;
  const auto m = parse_bench_method(method);
  if (!m) throw UsageError("bench: unknown method '" + method + "'");
  config.method = *m;
  config.sizes = parse_size_list(sizes);
  config.reps = reps;
  validate(config);
  const BenchReport report = run_bench(config);
  Sink sink(path, out);
  write_bench_csv(*sink, report);
  sink.finish(path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wheel6: 6k-1/6k+1 prime generation and primality testing"};
  app.name("wheel6");
  app.require_subcommand(1);

  std::uint64_t n = 0, limit = 0, kmax = 0;
  unsigned reps = 0;
  std::string method, table_file, path, kind = "all", sizes;

  auto* classify_cmd = app.add_subcommand("classify", "Residue class and wheel index of n");
  classify_cmd->add_option("n", n, "Natural number >= 1")->required();

  auto* prime_cmd = app.add_subcommand("is-prime", "Primality verdict for n");
  prime_cmd->add_option("n", n, "Natural number >= 1")->required();
  prime_cmd->add_option("--method", method, "naive | table | oracle")
      ->default_val("naive")
      ->check(CLI::IsMember({"naive", "table", "oracle"}));
  prime_cmd->add_option("--table-file", table_file, "Prebuilt table for --method table");

  auto* primes_cmd = app.add_subcommand("primes", "All primes up to a limit, one per line");
  primes_cmd->add_option("--limit", limit, "Upper bound (>= 2)")->required();
  primes_cmd->add_option("--method", method, "wheel | eratosthenes")
      ->default_val("wheel")
      ->check(CLI::IsMember({"wheel", "eratosthenes"}));
  primes_cmd->add_option("--out", path, "Output file (default stdout)");

  auto* sel_cmd = app.add_subcommand("selectors", "Selector pairs with value <= kmax as CSV");
  sel_cmd->add_option("--kmax", kmax, "Largest wheel index")->required();
  sel_cmd->add_option("--kind", kind, "s1 | s2 | s3 | all")
      ->check(CLI::IsMember({"s1", "s2", "s3", "all"}));
  sel_cmd->add_option("--out", path, "Output file (default stdout)");

  auto* build_cmd = app.add_subcommand("build-table", "Write a composite-index table file");
  build_cmd->add_option("--kmax", kmax, "Largest wheel index")->required();
  build_cmd->add_option("--out", path, "Table file")->required();

  auto* report_cmd = app.add_subcommand("count-report", "Exact vs formula prime counts as CSV");
  report_cmd->add_option("--kmax", kmax, "Largest wheel index")->required();
  report_cmd->add_option("--out", path, "CSV file")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Time a method across sizes and fit the exponent");
  bench_cmd->add_option("--method", method, "naive | table | eratosthenes-sieve | wheel-sieve")
      ->required();
  bench_cmd->add_option("--sizes", sizes, "Comma-separated sizes, at least 3")->required();
  bench_cmd->add_option("--reps", reps, "Timed repetitions per size, at least 3")->required();
  bench_cmd->add_option("--out", path, "CSV file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) {
      cmd_classify(n, out);
    } else if (*prime_cmd) {
      cmd_is_prime(n, method, table_file, out);
    } else if (*primes_cmd) {
      cmd_primes(limit, method, path, out);
    } else if (*sel_cmd) {
      cmd_selectors(kmax, kind, path, out);
    } else if (*build_cmd) {
      cmd_build_table(kmax, path, out);
    } else if (*report_cmd) {
      cmd_count_report(kmax, path, out);
    } else if (*bench_cmd) {
      cmd_bench(method, sizes, reps, path, out);
    }
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kRange;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kFormat;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace wheel6::cli
