#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lyndon2d {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: empty strings, ragged matrices, bad parameters.
class InvalidInput : public Error {
public:
  using Error::Error;
};

class NotPrimitive : public Error {
public:
  using Error::Error;
};

class NotLyndon : public Error {
public:
  using Error::Error;
};

class NoInverse : public Error {
public:
  using Error::Error;
};

/// A query between two classified matrices of incompatible dimensions.
class InvalidQuery : public Error {
public:
  using Error::Error;
};

/// A row whose smallest period exceeds the allowed fraction of its width.
class NotSufficientlyPeriodic : public Error {
public:
  NotSufficientlyPeriodic(std::size_t period, std::size_t width,
                          std::size_t row = npos)
      : Error(describe(period, width, row)), period_(period), width_(width),
        row_(row) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t period() const noexcept { return period_; }
  std::size_t width() const noexcept { return width_; }
  /// Offending row index, or npos when raised for a lone string.
  std::size_t row() const noexcept { return row_; }

  NotSufficientlyPeriodic with_row(std::size_t row) const {
    return NotSufficientlyPeriodic(period_, width_, row);
  }

private:
  static std::string describe(std::size_t period, std::size_t width,
                              std::size_t row) {
    std::string msg = "period " + std::to_string(period) +
                      " too large for width " + std::to_string(width);
    if (row != npos)
      msg = "row " + std::to_string(row) + ": " + msg;
    return msg;
  }

  std::size_t period_;
  std::size_t width_;
  std::size_t row_;
};

/// The LCM-matrix is wider than an enumeration cap. Carries LCM_m in decimal.
class CapExceeded : public Error {
public:
  CapExceeded(std::string lcm_decimal, std::string cap_decimal)
      : Error("LCM " + lcm_decimal + " exceeds enumeration cap " + cap_decimal),
        lcm_(std::move(lcm_decimal)) {}

  const std::string& lcm() const noexcept { return lcm_; }

private:
  std::string lcm_;
};

} // namespace lyndon2d
