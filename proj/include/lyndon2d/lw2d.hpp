#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lyndon2d/bignat.hpp"
#include "lyndon2d/strings1d.hpp"

namespace lyndon2d {

/// Enumeration cap for the naive algorithm and LCM-matrix materialization.
inline constexpr Word kDefaultCap = Word{1} << 22;

/// The three per-row arrays that every 2D Lyndon word algorithm consumes.
struct SummaryColumn {
  std::vector<Word> periods;
  std::vector<Word> lwpos;
  std::vector<NameId> names;

  std::size_t rows() const noexcept { return periods.size(); }

  /// Builds a column from row summaries, preserving their order.
  static SummaryColumn from_rows(std::span<const RowSummary> rows);

  /// Builds an unnamed column (names all kNoName) from raw arrays.
  static SummaryColumn from_arrays(std::vector<Word> periods, std::vector<Word> lwpos);

  /// Throws InvalidInput unless the arrays share length m >= 1, every period
  /// is positive and every lwpos lies in [0, period).
  void validate() const;

  friend bool operator==(const SummaryColumn&, const SummaryColumn&) = default;
};

/// Canonical offsets of a matrix's LCM-matrix together with the column z at
/// which that conjugate begins and the running LCM of the row periods.
struct TwoDLyndonWord {
  std::vector<Word> offsets;
  BigNat z = 0;
  std::vector<BigNat> lcm_prefix;

  const BigNat& lcm() const { return lcm_prefix.back(); }

  friend bool operator==(const TwoDLyndonWord&, const TwoDLyndonWord&) = default;
};

/// result[i] = lcm(result[i-1], periods[i]); result[0] = periods[0].
std::vector<BigNat> lcm_prefixes(std::span<const Word> periods);

/// x in [0, n) with a*x = 1 (mod n) by the extended Euclidean algorithm.
/// mod_inverse(a, 1) is 0. Throws NoInverse when gcd(a, n) != 1.
Word mod_inverse(const BigNat& a, Word n);

/// LWpos array of the conjugate that begins at column c of the LCM-matrix:
/// result[i] = (lwpos[i] - c) mod periods[i].
std::vector<Word> conjugate_offsets(const SummaryColumn& col, const BigNat& c);

/// Enumerates every conjugate of the LCM-matrix and keeps the smallest LWpos
/// array (smallest column on ties). Throws CapExceeded when LCM_m > cap.
TwoDLyndonWord naive_2dlw(const SummaryColumn& col, Word cap = kDefaultCap);

enum class Alg1Bound {
  /// x ranges over [0, LCM[i]/LCM[i-1]), one period of the residue sequence.
  period,
  /// x ranges while z + x*LCM[i-1] < LCM_m; requires LCM_m <= cap.
  faithful,
};

/// Incremental column elimination: each row keeps only the columns whose
/// offset in that row is minimal.
TwoDLyndonWord alg1_2dlw(const SummaryColumn& col, Alg1Bound bound = Alg1Bound::period,
                         Word cap = kDefaultCap);

/// One row of the modular-arithmetic algorithm. Row 0 only sets `x` and
/// `offset`; the remaining fields are zero there.
struct Alg2Step {
  Word gcd = 0;
  Word ell_mod_p = 0;  // (LCM[i-1] / gcd) mod p
  Word p = 0;      // period[i] / gcd
  Word ell_inv = 0;
  Word first_shift = 0;
  Word x = 0;
  Word offset = 0;
};

/// Runs the modular-arithmetic algorithm one row at a time. Every arithmetic
/// operation on a big or modular operand bumps `ops()`.
class Alg2Accumulator {
public:
  Alg2Accumulator() = default;

  /// Optional precomputed LCM prefixes (must cover every pushed row).
  explicit Alg2Accumulator(std::span<const BigNat> known_lcm) : known_lcm_(known_lcm) {}

  const Alg2Step& push(Word period, Word lwpos);

  std::size_t rows() const noexcept { return offsets_.size(); }
  const std::vector<Word>& offsets() const noexcept { return offsets_; }
  const BigNat& z() const noexcept { return z_; }
  const BigNat& lcm() const { return lcm_.back(); }
  const std::vector<BigNat>& lcm_prefix() const noexcept { return lcm_; }
  const std::vector<Alg2Step>& steps() const noexcept { return steps_; }
  std::uint64_t ops() const noexcept { return ops_; }

  TwoDLyndonWord result() const { return {offsets_, z_, lcm_}; }

private:
  std::span<const BigNat> known_lcm_;
  std::vector<Word> offsets_;
  std::vector<BigNat> lcm_;
  std::vector<Alg2Step> steps_;
  BigNat z_ = 0;
  std::uint64_t ops_ = 0;
};

/// Closed-form computation of each canonical offset via modular inverses;
/// never touches columns of the LCM-matrix.
TwoDLyndonWord alg2_2dlw(const SummaryColumn& col);

/// The rows truncated or periodically extended to width LCM_m. Each row must
/// have period <= width/2. Throws CapExceeded when LCM_m > cap.
std::vector<std::string> materialize_lcm_matrix(std::span<const std::string> rows,
                                                Word cap = kDefaultCap);

} // namespace lyndon2d
