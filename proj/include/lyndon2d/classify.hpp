#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lyndon2d/lw2d.hpp"
#include "lyndon2d/strings1d.hpp"

namespace lyndon2d {

/// Identity of a horizontal 2D conjugacy class of LCM-matrices: the row
/// Lyndon classes plus the 2D Lyndon word offsets.
struct MatrixClassKey {
  std::vector<NameId> names;
  std::vector<Word> offsets;

  /// 64-bit digest for hash maps; equality still compares the full key.
  std::uint64_t digest() const noexcept;

  friend bool operator==(const MatrixClassKey&, const MatrixClassKey&) = default;
};

enum class Algorithm { naive, alg1, alg2 };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

struct ClassifyOptions {
  Fraction fraction = kQuarter;
  Algorithm algorithm = Algorithm::alg2;
  Word cap = kDefaultCap;
  Alg1Bound alg1_bound = Alg1Bound::period;
};

struct ClassifiedMatrix {
  MatrixClassKey key;
  BigNat z = 0;
  BigNat lcm = 1;
  std::size_t rows = 0;
  std::size_t width = 0;
  /// Per-row periods and LWpos values the key was computed from.
  SummaryColumn summaries;
};

/// Names every row and computes the 2D Lyndon word of the matrix. Throws
/// InvalidInput on ragged rows and NotSufficientlyPeriodic (with the row
/// index) when a row's period exceeds the fraction of the width.
ClassifiedMatrix classify_matrix(std::span<const std::string> rows, NameRegistry& registry,
                                 const ClassifyOptions& options = {});

/// Rotation c with rot_left(a, c) conjugate to b in the LCM-matrix sense,
/// i.e. (z_a - z_b) mod lcm, or nullopt when the classes differ.
std::optional<BigNat> conjugacy_shift(const ClassifiedMatrix& a, const ClassifiedMatrix& b);

/// Width of the widest horizontal suffix of `a` equal to a prefix of `b`,
/// when that width is at least ceil(m/2). Uses only the class keys and shifts.
std::optional<std::size_t> longest_suffix_prefix(const ClassifiedMatrix& a,
                                                 const ClassifiedMatrix& b);

} // namespace lyndon2d

template <>
struct std::hash<lyndon2d::MatrixClassKey> {
  std::size_t operator()(const lyndon2d::MatrixClassKey& k) const noexcept {
    return static_cast<std::size_t>(k.digest());
  }
};
