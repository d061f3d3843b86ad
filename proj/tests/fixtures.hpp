#pragma once

// Generators for dictionary-matching inputs whose text rows are uniformly
// periodic across the whole width.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "lyndon2d/dictmatch.hpp"
#include "lyndon2d/generate.hpp"
#include "lyndon2d/strings1d.hpp"
#include "oracles.hpp"

namespace fixture {

using lyndon2d::Matrix;

struct Planted {
  Matrix text;
  std::vector<oracle::Hit> planted;  // positions we planted on purpose
};

/// Pool of primitive words per period, so that patterns and background
/// share row classes and candidates are plentiful.
struct WordPool {
  std::vector<std::vector<std::string>> by_period;  // index = period

  WordPool(std::size_t max_p, std::size_t per_period, std::size_t alphabet,
           std::mt19937_64& rng)
      : by_period(max_p + 1) {
    for (std::size_t p = 1; p <= max_p; ++p)
      for (std::size_t k = 0; k < per_period; ++k)
        by_period[p].push_back(oracle::primitive_word(p, p == 1 ? 2 : alphabet, rng));
  }

  const std::string& pick(std::size_t p, std::mt19937_64& rng) const {
    return by_period[p][rng() % by_period[p].size()];
  }
};

inline std::string row_of(const std::string& word, std::size_t width, std::size_t phase) {
  std::string out(width, ' ');
  for (std::size_t j = 0; j < width; ++j)
    out[j] = word[(j + phase) % word.size()];
  return out;
}

/// m x m pattern; each row's period is drawn from `periods`.
inline Matrix random_pattern(std::size_t m, const std::vector<std::size_t>& periods,
                             const WordPool& pool, std::mt19937_64& rng) {
  Matrix out;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t p = periods[rng() % periods.size()];
    out.push_back(row_of(pool.pick(p, rng), m, rng() % p));
  }
  return out;
}

/// Text of n1 x n2 uniformly periodic rows. Bands of m rows alternate between
/// planted patterns, decoys (a pattern with one row's phase nudged) and
/// background drawn from the same word pool.
inline Planted planted_text(std::size_t n1, std::size_t n2, const std::vector<Matrix>& patterns,
                            const std::vector<std::size_t>& periods, const WordPool& pool,
                            std::mt19937_64& rng) {
  Planted out;
  for (std::size_t i = 0; i < n1; ++i) {
    const std::size_t p = periods[rng() % periods.size()];
    out.text.push_back(row_of(pool.pick(p, rng), n2, rng() % p));
  }
  const std::size_t m = patterns[0].size();
  std::size_t next = 0;
  for (std::size_t top = 0; top + m <= n1; top += m) {
    const Matrix& pat = patterns[next++ % patterns.size()];
    const std::size_t col = rng() % (n2 - m + 1);
    const int kind = static_cast<int>(rng() % 4);
    if (kind == 3)
      continue;  // background band
    lyndon2d::plant_periodic(out.text, pat, top, col);
    if (kind == 2) {
      // decoy: same row names, one row out of phase
      const std::size_t i = top + rng() % m;
      const std::size_t p = oracle::period(pat[i - top]);
      if (p > 1)
        out.text[i] = oracle::extend(out.text[i], n2, 1 + rng() % (p - 1));
      continue;
    }
    out.planted.push_back({(next - 1) % patterns.size(), top, col});
  }
  return out;
}

/// Row i is Lyndon word words[i] read from position phase[i] onwards.
inline Matrix rows_from(const std::vector<std::string>& words,
                        const std::vector<std::size_t>& phase, std::size_t width,
                        std::size_t shift_right = 0) {
  Matrix out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t p = words[i].size();
    // row[j] = word[(j - shift_right + phase) mod p]
    out.push_back(row_of(words[i], width, (phase[i] + p - shift_right % p) % p));
  }
  return out;
}

/// Summaries computed with the known generating words (no period limit).
inline lyndon2d::SummaryColumn summaries_of(const Matrix& rows,
                                            const std::vector<std::string>& words,
                                            lyndon2d::NameRegistry& reg) {
  lyndon2d::SummaryColumn col;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    col.periods.push_back(words[i].size());
    const std::string head = rows[i].substr(0, words[i].size());
    col.lwpos.push_back((head + head).find(words[i]));
    col.names.push_back(reg.intern(words[i]));
  }
  return col;
}

inline std::set<std::size_t> shifts_by_chars(const Matrix& pattern, const Matrix& window) {
  std::set<std::size_t> out;
  const std::size_t m = pattern[0].size();
  for (std::size_t s = 0; s + m <= window[0].size(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < pattern.size() && ok; ++i)
      ok = window[i].compare(s, m, pattern[i]) == 0;
    if (ok)
      out.insert(s);
  }
  return out;
}

inline std::vector<oracle::Hit> as_hits(const std::vector<lyndon2d::Occurrence>& occ) {
  std::vector<oracle::Hit> out;
  for (const auto& o : occ)
    out.push_back({o.pattern, o.row, o.col});
  return out;
}

} // namespace fixture
