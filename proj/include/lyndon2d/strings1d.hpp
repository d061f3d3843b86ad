#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lyndon2d {

/// Dense identifier of a Lyndon-word class.
using NameId = std::uint32_t;

/// Assigned to text rows that are not periodic enough or whose Lyndon word is
/// unknown to the registry; it never equals an interned id.
inline constexpr NameId kNoName = static_cast<NameId>(-1);

/// A nonnegative rational bound on period/width, e.g. {1, 4}.
struct Fraction {
  std::size_t num = 1;
  std::size_t den = 2;

  /// True when period <= num/den * width.
  bool admits(std::size_t period, std::size_t width) const noexcept {
    return period * den <= num * width;
  }

  static Fraction parse(std::string_view text);
  std::string str() const;
};

inline constexpr Fraction kHalf{1, 2};
inline constexpr Fraction kQuarter{1, 4};

struct Rotation {
  std::size_t offset = 0;
  std::string word;
};

/// Per-row triple of Lyndon word naming, plus the width it summarizes.
struct RowSummary {
  std::size_t period = 0;
  std::size_t lwpos = 0;
  NameId name = kNoName;
  std::size_t width = 0;

  friend bool operator==(const RowSummary&, const RowSummary&) = default;
};

/// Interns Lyndon words as dense ids. Built by a single writer; afterwards it
/// may be shared read-only.
class NameRegistry {
public:
  /// Returns the id of `word`, assigning the next dense id on first sight.
  /// Throws NotLyndon when `word` is not a Lyndon word.
  NameId intern(std::string_view word);

  std::optional<NameId> find(std::string_view word) const;

  const std::string& word(NameId id) const { return words_.at(id); }
  std::size_t size() const noexcept { return words_.size(); }

private:
  std::unordered_map<std::string, NameId> ids_;
  std::vector<std::string> words_;
};

/// Smallest p with s[j] == s[j + p] for every valid j, from the border array.
std::size_t compute_period(std::string_view s);

/// True when s is not a proper power of a shorter string.
bool is_primitive(std::string_view s);

/// Offset and value of the lexicographically least rotation of a primitive s.
Rotation least_rotation(std::string_view s);

bool is_lyndon(std::string_view s);

/// Names one periodic row. Requires `fraction` <= 1/2 so the Lyndon word
/// occurrence at lwpos fits inside the row.
RowSummary summarize_row(std::string_view s, NameRegistry& registry,
                         Fraction max_period_fraction);

/// Read-only variant used on text rows: returns a summary whose name is
/// kNoName when the row is too aperiodic or its class was never interned.
RowSummary lookup_row(std::string_view s, const NameRegistry& registry,
                      std::size_t max_period);

} // namespace lyndon2d
