#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lyndon2d/dictmatch.hpp"
#include "lyndon2d/lw2d.hpp"

namespace lyndon2d {

enum class PeriodKind { list, primes, random };

struct PeriodSpec {
  PeriodKind kind = PeriodKind::random;
  std::vector<std::size_t> list;

  /// "primes", "random" or a comma-separated list such as "2,3,1".
  static PeriodSpec parse(const std::string& text);
};

struct GenOptions {
  /// 0 means: the list length for list periods, otherwise the width.
  std::size_t rows = 0;
  std::size_t width = 8;
  PeriodSpec periods;
  std::size_t alphabet = 2;
  std::uint64_t seed = 1;
  /// Left column rotation applied to every row's periodic extension.
  std::uint64_t rotate = 0;
  /// Limit periods to width/4 instead of width/2.
  bool strict = false;
};

/// Letters used for an alphabet of size k: a-z, then A-Z, then 0-9.
std::string alphabet_letters(std::size_t k);

/// Random primitive word of length `period` over the first `alphabet` letters.
/// Throws InvalidInput when no such word exists.
std::string random_primitive_word(std::size_t period, std::size_t alphabet, std::mt19937_64& rng);

/// `word` repeated to `width` characters, starting at position `phase`.
std::string periodic_row(const std::string& word, std::size_t width, std::uint64_t phase = 0);

/// The periods each generated row will have.
std::vector<std::size_t> resolve_periods(const GenOptions& options, std::mt19937_64& rng);

/// Deterministic for a fixed seed. Rows are periodic extensions of random
/// primitive words with the requested periods.
Matrix generate_matrix(const GenOptions& options);

/// Column rotation of the periodic extension: out[i][j] = row_i[(j + c) mod p_i].
/// Rows must have period <= width/2.
Matrix rotate_left(const Matrix& rows, const BigNat& c);

/// Overwrites text rows [row, row + h) with the periodic extensions of the
/// pattern rows, aligned so that the pattern occurs at column `col`.
void plant_periodic(Matrix& text, const Matrix& pattern, std::size_t row, std::size_t col);

} // namespace lyndon2d
