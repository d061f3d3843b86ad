#include "lyndon2d/classify.hpp"

#include "lyndon2d/error.hpp"

namespace lyndon2d {
namespace {

// FNV-1a over the little-endian bytes of each value.
struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
};

} // namespace

std::uint64_t MatrixClassKey::digest() const noexcept {
  Fnv f;
  f.add(names.size());
  for (auto n : names)
    f.add(n);
  for (auto o : offsets)
    f.add(o);
  return f.h;
}

std::string_view to_string(Algorithm a) {
  switch (a) {
  case Algorithm::naive:
    return "naive";
  case Algorithm::alg1:
    return "alg1";
  case Algorithm::alg2:
    return "alg2";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "naive")
    return Algorithm::naive;
  if (name == "alg1")
    return Algorithm::alg1;
  if (name == "alg2")
    return Algorithm::alg2;
  throw InvalidInput("unknown algorithm '" + std::string(name) + "'");
}

ClassifiedMatrix classify_matrix(std::span<const std::string> rows, NameRegistry& registry,
                                 const ClassifyOptions& options) {
  if (rows.empty())
    throw InvalidInput("classify_matrix: no rows");
  const std::size_t width = rows[0].size();
  std::vector<RowSummary> summaries;
  summaries.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width)
      throw InvalidInput("row " + std::to_string(i) + ": width " +
                         std::to_string(rows[i].size()) + " differs from " +
                         std::to_string(width));
    try {
      summaries.push_back(summarize_row(rows[i], registry, options.fraction));
    } catch (const NotSufficientlyPeriodic& e) {
      throw e.with_row(i);
    }
  }

  ClassifiedMatrix out;
  out.summaries = SummaryColumn::from_rows(summaries);
  out.rows = rows.size();
  out.width = width;

  TwoDLyndonWord lw;
  switch (options.algorithm) {
  case Algorithm::naive:
    lw = naive_2dlw(out.summaries, options.cap);
    break;
  case Algorithm::alg1:
    lw = alg1_2dlw(out.summaries, options.alg1_bound, options.cap);
    break;
  case Algorithm::alg2:
    lw = alg2_2dlw(out.summaries);
    break;
  }
  out.key.names = out.summaries.names;
  out.key.offsets = std::move(lw.offsets);
  out.z = std::move(lw.z);
  out.lcm = lw.lcm_prefix.back();
  return out;
}

std::optional<BigNat> conjugacy_shift(const ClassifiedMatrix& a, const ClassifiedMatrix& b) {
  if (a.rows != b.rows)
    throw InvalidQuery("conjugacy_shift: row counts differ (" + std::to_string(a.rows) +
                       " vs " + std::to_string(b.rows) + ")");
  if (a.key != b.key)
    return std::nullopt;
  // equal names imply equal periods and therefore equal lcm
  return (a.z + a.lcm - b.z) % a.lcm;
}

std::optional<std::size_t> longest_suffix_prefix(const ClassifiedMatrix& a,
                                                 const ClassifiedMatrix& b) {
  if (a.rows != b.rows || a.width != b.width)
    throw InvalidQuery("longest_suffix_prefix: dimensions differ (" + std::to_string(a.rows) +
                       "x" + std::to_string(a.width) + " vs " + std::to_string(b.rows) + "x" +
                       std::to_string(b.width) + ")");
  const auto shift = conjugacy_shift(a, b);
  if (!shift)
    return std::nullopt;
  const std::size_t m = a.width;
  if (*shift > m / 2)
    return std::nullopt;
  return m - static_cast<std::size_t>(*shift);
}

} // namespace lyndon2d
