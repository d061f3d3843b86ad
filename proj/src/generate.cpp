#include "lyndon2d/generate.hpp"

#include <sstream>

#include "lyndon2d/error.hpp"
#include "lyndon2d/strings1d.hpp"

namespace lyndon2d {

PeriodSpec PeriodSpec::parse(const std::string& text) {
  PeriodSpec out;
  if (text == "primes" || text == "prime-set") {
    out.kind = PeriodKind::primes;
    return out;
  }
  if (text == "random") {
    out.kind = PeriodKind::random;
    return out;
  }
  out.kind = PeriodKind::list;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v == 0)
      throw InvalidInput("bad period '" + item + "' in '" + text + "'");
    out.list.push_back(static_cast<std::size_t>(v));
  }
  if (out.list.empty())
    throw InvalidInput("empty period list");
  return out;
}

std::string alphabet_letters(std::size_t k) {
  static const std::string all =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  if (k == 0 || k > all.size())
    throw InvalidInput("alphabet size must be in [1, " + std::to_string(all.size()) + "]");
  return all.substr(0, k);
}

std::string random_primitive_word(std::size_t period, std::size_t alphabet,
                                  std::mt19937_64& rng) {
  const std::string letters = alphabet_letters(alphabet);
  if (period == 0)
    throw InvalidInput("period must be positive");
  if (period > 1 && alphabet < 2)
    throw InvalidInput("no primitive word of length " + std::to_string(period) +
                       " over a 1-letter alphabet");
  std::string word(period, letters[0]);
  // Over >= 2 letters at least half of all words are primitive.
  do {
    for (auto& c : word)
      c = letters[rng() % letters.size()];
  } while (!is_primitive(word));
  return word;
}

std::string periodic_row(const std::string& word, std::size_t width, std::uint64_t phase) {
  std::string row(width, ' ');
  const std::size_t p = word.size();
  const std::size_t start = static_cast<std::size_t>(phase % p);
  for (std::size_t j = 0; j < width; ++j)
    row[j] = word[(start + j) % p];
  return row;
}

namespace {

std::vector<std::size_t> primes_up_to(std::size_t limit) {
  std::vector<std::size_t> out;
  for (std::size_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (std::size_t d = 2; d * d <= n && prime; ++d)
      prime = n % d != 0;
    if (prime)
      out.push_back(n);
  }
  return out;
}

} // namespace

std::vector<std::size_t> resolve_periods(const GenOptions& options, std::mt19937_64& rng) {
  if (options.width == 0)
    throw InvalidInput("width must be positive");
  const std::size_t limit = options.strict ? options.width / 4 : options.width / 2;
  std::size_t rows = options.rows;
  if (rows == 0)
    rows = options.periods.kind == PeriodKind::list ? options.periods.list.size()
                                                    : options.width;

  std::vector<std::size_t> out(rows);
  switch (options.periods.kind) {
  case PeriodKind::list:
    for (std::size_t i = 0; i < rows; ++i)
      out[i] = options.periods.list[i % options.periods.list.size()];
    break;
  case PeriodKind::primes: {
    const auto primes = primes_up_to(limit);
    if (primes.empty())
      throw InvalidInput("no prime period fits width " + std::to_string(options.width));
    for (std::size_t i = 0; i < rows; ++i)
      out[i] = primes[i % primes.size()];
    break;
  }
  case PeriodKind::random:
    if (limit == 0)
      throw InvalidInput("width " + std::to_string(options.width) + " admits no period");
    for (std::size_t i = 0; i < rows; ++i)
      out[i] = 1 + static_cast<std::size_t>(rng() % limit);
    break;
  }
  for (const auto p : out)
    if (p > limit)
      throw InvalidInput("period " + std::to_string(p) + " exceeds " +
                         (options.strict ? "width/4" : "width/2") + " = " +
                         std::to_string(limit));
  return out;
}

Matrix generate_matrix(const GenOptions& options) {
  std::mt19937_64 rng(options.seed);
  const auto periods = resolve_periods(options, rng);
  Matrix out;
  out.reserve(periods.size());
  for (const auto p : periods)
    out.push_back(periodic_row(random_primitive_word(p, options.alphabet, rng), options.width,
                               options.rotate));
  return out;
}

Matrix rotate_left(const Matrix& rows, const BigNat& c) {
  Matrix out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string& row = rows[i];
    const std::size_t p = compute_period(row);
    if (!kHalf.admits(p, row.size()))
      throw NotSufficientlyPeriodic(p, row.size(), i);
    out.push_back(periodic_row(row.substr(0, p), row.size(), mod_word(c, p)));
  }
  return out;
}

void plant_periodic(Matrix& text, const Matrix& pattern, std::size_t row, std::size_t col) {
  if (row + pattern.size() > text.size())
    throw InvalidInput("plant_periodic: pattern overruns text rows");
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    std::string& line = text[row + i];
    if (col + pattern[i].size() > line.size())
      throw InvalidInput("plant_periodic: pattern overruns text columns");
    const std::size_t p = compute_period(pattern[i]);
    const std::string word = pattern[i].substr(0, p);
    // line[k] = word[(k - col) mod p]
    line = periodic_row(word, line.size(), (p - col % p) % p);
  }
}

} // namespace lyndon2d
