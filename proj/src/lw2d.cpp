#include "lyndon2d/lw2d.hpp"

#include <algorithm>
#include <numeric>

#include "lyndon2d/error.hpp"

namespace lyndon2d {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

Word mulmod(Word a, Word b, Word n) {
  return static_cast<Word>(static_cast<u128>(a) * b % n);
}

/// (a - b) mod n for a, b already reduced mod n.
Word submod(Word a, Word b, Word n) { return a >= b ? a - b : n - (b - a); }

Word inverse_word(Word a, Word n) {
  if (n == 1)
    return 0;
  i128 old_r = a % n, r = n;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1)
    throw NoInverse("no inverse of " + std::to_string(a) + " mod " + std::to_string(n));
  i128 x = old_s % static_cast<i128>(n);
  if (x < 0)
    x += n;
  return static_cast<Word>(x);
}

std::string cap_str(Word cap) { return std::to_string(cap); }

Word lcm_within_cap(const SummaryColumn& col, Word cap) {
  const auto prefix = lcm_prefixes(col.periods);
  if (prefix.back() > cap)
    throw CapExceeded(to_decimal(prefix.back()), cap_str(cap));
  return static_cast<Word>(prefix.back());
}

} // namespace

SummaryColumn SummaryColumn::from_rows(std::span<const RowSummary> rows) {
  SummaryColumn col;
  col.periods.reserve(rows.size());
  col.lwpos.reserve(rows.size());
  col.names.reserve(rows.size());
  for (const auto& r : rows) {
    col.periods.push_back(r.period);
    col.lwpos.push_back(r.lwpos);
    col.names.push_back(r.name);
  }
  return col;
}

SummaryColumn SummaryColumn::from_arrays(std::vector<Word> periods, std::vector<Word> lwpos) {
  SummaryColumn col;
  col.names.assign(periods.size(), kNoName);
  col.periods = std::move(periods);
  col.lwpos = std::move(lwpos);
  return col;
}

void SummaryColumn::validate() const {
  if (periods.empty())
    throw InvalidInput("summary column has no rows");
  if (lwpos.size() != periods.size() || names.size() != periods.size())
    throw InvalidInput("summary column arrays differ in length");
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (periods[i] == 0)
      throw InvalidInput("row " + std::to_string(i) + ": zero period");
    if (lwpos[i] >= periods[i])
      throw InvalidInput("row " + std::to_string(i) + ": lwpos outside [0, period)");
  }
}

std::vector<BigNat> lcm_prefixes(std::span<const Word> periods) {
  std::vector<BigNat> out;
  out.reserve(periods.size());
  for (const Word p : periods) {
    if (p == 0)
      throw InvalidInput("lcm_prefixes: zero period");
    if (out.empty()) {
      out.emplace_back(p);
      continue;
    }
    const BigNat& prev = out.back();
    const Word g = gcd_word(prev, p);
    out.push_back(prev * (p / g));
  }
  return out;
}

Word mod_inverse(const BigNat& a, Word n) {
  if (n == 0)
    throw InvalidInput("mod_inverse: zero modulus");
  return inverse_word(mod_word(a, n), n);
}

std::vector<Word> conjugate_offsets(const SummaryColumn& col, const BigNat& c) {
  std::vector<Word> out(col.rows());
  for (std::size_t i = 0; i < col.rows(); ++i) {
    const Word p = col.periods[i];
    out[i] = submod(col.lwpos[i] % p, mod_word(c, p), p);
  }
  return out;
}

TwoDLyndonWord naive_2dlw(const SummaryColumn& col, Word cap) {
  col.validate();
  const Word lcm = lcm_within_cap(col, cap);
  const std::size_t m = col.rows();

  std::vector<Word> best(m), cand(m);
  Word best_c = 0;
  for (Word c = 0; c < lcm; ++c) {
    for (std::size_t i = 0; i < m; ++i)
      cand[i] = submod(col.lwpos[i], c % col.periods[i], col.periods[i]);
    if (c == 0 || cand < best) {
      best.swap(cand);
      best_c = c;
    }
  }
  return {std::move(best), BigNat(best_c), lcm_prefixes(col.periods)};
}

TwoDLyndonWord alg1_2dlw(const SummaryColumn& col, Alg1Bound bound, Word cap) {
  col.validate();
  const std::size_t m = col.rows();
  BigNat lcm_m = 0;
  if (bound == Alg1Bound::faithful)
    lcm_m = lcm_within_cap(col, cap);

  TwoDLyndonWord out;
  out.offsets.assign(m, 0);
  out.z = col.lwpos[0];
  out.lcm_prefix.reserve(m);
  out.lcm_prefix.emplace_back(col.periods[0]);

  for (std::size_t i = 1; i < m; ++i) {
    const Word p = col.periods[i];
    const BigNat& prev = out.lcm_prefix.back();
    const Word g = gcd_word(prev, p);
    out.lcm_prefix.push_back(prev * (p / g));

    const Word first_shift = submod(col.lwpos[i], mod_word(out.z, p), p);
    if (g == p) {
      // period[i] divides LCM[i-1]: every surviving column agrees on this row
      out.offsets[i] = first_shift;
      continue;
    }

    const Word step = mod_word(prev, p);
    Word count = p / g;
    if (bound == Alg1Bound::faithful) {
      // columns z, z + LCM[i-1], ... below LCM_m
      const BigNat span = lcm_m - out.z;
      count = static_cast<Word>((span + prev - 1) / prev);
    }
    Word best = p, best_x = 0, value = first_shift;
    for (Word x = 0; x < count; ++x) {
      if (value < best) {
        best = value;
        best_x = x;
      }
      value = submod(value, step, p);
    }
    out.offsets[i] = best;
    out.z += prev * best_x;
  }
  return out;
}

const Alg2Step& Alg2Accumulator::push(Word period, Word lwpos) {
  if (period == 0 || lwpos >= period)
    throw InvalidInput("Alg2Accumulator: lwpos outside [0, period)");

  Alg2Step step;
  if (offsets_.empty()) {
    z_ = lwpos;
    step.x = lwpos;
    offsets_.push_back(0);
    if (!known_lcm_.empty())
      lcm_.push_back(known_lcm_[0]);
    else
      lcm_.emplace_back(period);
    steps_.push_back(std::move(step));
    ops_ += 1;
    return steps_.back();
  }

  const BigNat& prev = lcm_.back();
  // g divides both LCM[i-1] and period, so (LCM[i-1]/g) mod (period/g) is
  // (LCM[i-1] mod period)/g and no big division is needed.
  const Word prev_mod = mod_word(prev, period);
  step.gcd = std::gcd(prev_mod, period);
  step.p = period / step.gcd;
  step.ell_mod_p = (prev_mod / step.gcd) % step.p;
  step.ell_inv = inverse_word(step.ell_mod_p, step.p);
  ops_ += 4;

  BigNat next = known_lcm_.size() > lcm_.size() ? known_lcm_[lcm_.size()]
                                                : prev * step.p;
  step.first_shift = submod(lwpos, mod_word(z_, period), period);
  const Word div_first_shift = step.first_shift / step.gcd;
  step.x = mulmod(step.ell_inv, div_first_shift, step.p);
  step.offset = submod(step.first_shift, mulmod(step.x, prev_mod, period), period);
  if (step.x != 0)
    z_ += prev * step.x;
  ops_ += 6;

  lcm_.push_back(std::move(next));
  offsets_.push_back(step.offset);
  steps_.push_back(std::move(step));
  return steps_.back();
}

TwoDLyndonWord alg2_2dlw(const SummaryColumn& col) {
  col.validate();
  Alg2Accumulator acc;
  for (std::size_t i = 0; i < col.rows(); ++i)
    acc.push(col.periods[i], col.lwpos[i]);
  return acc.result();
}

std::vector<std::string> materialize_lcm_matrix(std::span<const std::string> rows, Word cap) {
  if (rows.empty())
    throw InvalidInput("materialize_lcm_matrix: no rows");
  std::vector<Word> periods;
  periods.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw InvalidInput("row " + std::to_string(i) + ": ragged width");
    const std::size_t p = compute_period(rows[i]);
    if (!kHalf.admits(p, rows[i].size()))
      throw NotSufficientlyPeriodic(p, rows[i].size(), i);
    periods.push_back(p);
  }
  const BigNat lcm = lcm_prefixes(periods).back();
  if (lcm > cap)
    throw CapExceeded(to_decimal(lcm), cap_str(cap));
  const auto width = static_cast<std::size_t>(lcm);

  std::vector<std::string> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i].resize(width);
    for (std::size_t j = 0; j < width; ++j)
      out[i][j] = rows[i][j % periods[i]];
  }
  return out;
}

} // namespace lyndon2d
