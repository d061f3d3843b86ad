#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lyndon2d/lw2d.hpp"

namespace lyndon2d {

enum class BenchMode {
  /// Periods drawn from {1, 2, 3, 4, 6}: LCM_m <= 12.
  small_lcm,
  /// Row i gets the i-th prime: LCM_m is a primorial.
  prime_lcm,
};

BenchMode parse_bench_mode(const std::string& name);

struct BenchOptions {
  BenchMode mode = BenchMode::small_lcm;
  std::vector<std::size_t> sizes{8, 16, 32};
  std::size_t repeats = 5;
  /// Runs the sizes on separate threads.
  bool parallel = false;
  std::uint64_t seed = 1;
  Word cap = kDefaultCap;
};

struct BenchRow {
  std::size_t m = 0;
  BigNat lcm = 0;
  /// Median nanoseconds; empty when the naive algorithm is cap-blocked.
  std::optional<std::uint64_t> naive_ns;
  std::uint64_t alg1_ns = 0;
  std::uint64_t alg2_ns = 0;
};

/// The summary column benchmarked for size m.
SummaryColumn bench_column(BenchMode mode, std::size_t m, std::uint64_t seed);

/// Cross-checks all runnable algorithms on each column, then times them.
/// Throws std::logic_error if the algorithms disagree.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// Decimal LCM, shortened to "<first digits>...(<n> digits)" past 24 digits.
std::string abbreviate_decimal(const BigNat& value);

/// Header line plus one tab-separated line per row.
std::string format_bench_tsv(const std::vector<BenchRow>& rows);

/// Least-squares slope of log(t) against log(m).
double fitted_exponent(const std::vector<std::size_t>& m, const std::vector<double>& t);

} // namespace lyndon2d
