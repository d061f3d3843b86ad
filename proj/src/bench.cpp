#include "lyndon2d/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <stdexcept>

#include "lyndon2d/error.hpp"

namespace lyndon2d {
namespace {

std::vector<Word> first_primes(std::size_t count) {
  std::vector<Word> out;
  for (Word n = 2; out.size() < count; ++n) {
    bool prime = true;
    for (Word d = 2; d * d <= n && prime; ++d)
      prime = n % d != 0;
    if (prime)
      out.push_back(n);
  }
  return out;
}

template <typename F>
std::uint64_t median_ns(std::size_t repeats, F&& run) {
  std::vector<std::uint64_t> samples;
  samples.reserve(repeats);
  for (std::size_t k = 0; k < repeats; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    run();
    const auto t1 = std::chrono::steady_clock::now();
    samples.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return samples[samples.size() / 2];
}

// Keeps results observable so timed calls are not elided.
std::atomic<std::size_t> g_sink{0};

} // namespace

BenchMode parse_bench_mode(const std::string& name) {
  if (name == "small-lcm")
    return BenchMode::small_lcm;
  if (name == "prime-lcm")
    return BenchMode::prime_lcm;
  throw InvalidInput("unknown bench mode '" + name + "'");
}

SummaryColumn bench_column(BenchMode mode, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * m));
  std::vector<Word> periods;
  if (mode == BenchMode::prime_lcm) {
    periods = first_primes(m);
  } else {
    static constexpr Word kSmall[] = {1, 2, 3, 4, 6};
    for (std::size_t i = 0; i < m; ++i)
      periods.push_back(kSmall[rng() % std::size(kSmall)]);
  }
  std::vector<Word> lwpos;
  for (const Word p : periods)
    lwpos.push_back(rng() % p);
  return SummaryColumn::from_arrays(std::move(periods), std::move(lwpos));
}

namespace {

BenchRow bench_one(const BenchOptions& options, std::size_t m) {
  if (m == 0)
    throw InvalidInput("bench sizes must be positive");
  const SummaryColumn col = bench_column(options.mode, m, options.seed);
  BenchRow row;
  row.m = m;

  const TwoDLyndonWord a2 = alg2_2dlw(col);
  const TwoDLyndonWord a1 = alg1_2dlw(col);
  row.lcm = a2.lcm();
  if (!(a1 == a2))
    throw std::logic_error("bench: alg1 and alg2 disagree at m = " + std::to_string(m));
  const bool naive_ok = row.lcm <= options.cap;
  if (naive_ok && !(naive_2dlw(col, options.cap) == a2))
    throw std::logic_error("bench: naive and alg2 disagree at m = " + std::to_string(m));

  if (naive_ok)
    row.naive_ns = median_ns(options.repeats, [&] {
      g_sink.fetch_add(naive_2dlw(col, options.cap).offsets.size(), std::memory_order_relaxed);
    });
  row.alg1_ns = median_ns(options.repeats, [&] {
    g_sink.fetch_add(alg1_2dlw(col).offsets.size(), std::memory_order_relaxed);
  });
  row.alg2_ns = median_ns(options.repeats, [&] {
    g_sink.fetch_add(alg2_2dlw(col).offsets.size(), std::memory_order_relaxed);
  });
  return row;
}

} // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.repeats == 0)
    throw InvalidInput("repeats must be positive");
  std::vector<BenchRow> out;
  if (!options.parallel) {
    for (const std::size_t m : options.sizes)
      out.push_back(bench_one(options, m));
    return out;
  }
  std::vector<std::future<BenchRow>> jobs;
  for (const std::size_t m : options.sizes)
    jobs.push_back(std::async(std::launch::async, bench_one, std::cref(options), m));
  for (auto& job : jobs)
    out.push_back(job.get());
  return out;
}

std::string abbreviate_decimal(const BigNat& value) {
  const std::string s = to_decimal(value);
  if (s.size() <= 24)
    return s;
  return s.substr(0, 12) + "...(" + std::to_string(s.size()) + " digits)";
}

std::string format_bench_tsv(const std::vector<BenchRow>& rows) {
  std::string out = "m\tLCM_m\tt_naive\tt_alg1\tt_alg2\n";
  for (const auto& r : rows) {
    out += std::to_string(r.m) + '\t' + abbreviate_decimal(r.lcm) + '\t' +
           (r.naive_ns ? std::to_string(*r.naive_ns) : std::string("cap")) + '\t' +
           std::to_string(r.alg1_ns) + '\t' + std::to_string(r.alg2_ns) + '\n';
  }
  return out;
}

double fitted_exponent(const std::vector<std::size_t>& m, const std::vector<double>& t) {
  if (m.size() != t.size() || m.size() < 2)
    throw InvalidInput("fitted_exponent: need at least two paired samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double x = std::log(static_cast<double>(m[k]));
    const double y = std::log(std::max(t[k], 1.0));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace lyndon2d
