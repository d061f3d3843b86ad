#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lyndon2d/aho_corasick.hpp"
#include "lyndon2d/lw2d.hpp"
#include "lyndon2d/strings1d.hpp"

namespace lyndon2d {

using Matrix = std::vector<std::string>;

struct Occurrence {
  std::size_t pattern = 0;
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  /// Orders by (row, col, pattern).
  friend std::strong_ordering operator<=>(const Occurrence& a, const Occurrence& b) {
    if (auto c = a.row <=> b.row; c != 0)
      return c;
    if (auto c = a.col <=> b.col; c != 0)
      return c;
    return a.pattern <=> b.pattern;
  }
};

/// A pattern's column z_p[r] in the LCM-matrix of its first r rows.
struct PatternEntry {
  std::size_t pattern = 0;
  BigNat z = 0;
};

/// Patterns sharing 2D_LW[1..r]; keyed by the LWpos array of rows r+1..m
/// shifted to column z_p[r]. Empty keys when r == m.
using Subgroup = std::map<std::vector<Word>, std::vector<PatternEntry>>;

/// All patterns with one vertical sequence of row names.
struct PatternGroup {
  std::vector<NameId> name_seq;
  std::vector<Word> periods;
  std::size_t m = 0;
  /// Number of leading rows: the least r with LCM_r > m, or m if none.
  std::size_t r = 0;
  std::vector<BigNat> lcm_prefix_r;
  std::map<std::vector<Word>, Subgroup> subgroups;

  PatternGroup() = default;
  PatternGroup(std::vector<NameId> names, std::vector<Word> periods, std::size_t width);

  /// Indexes one pattern from its per-row LWpos values.
  void add(std::size_t pattern, std::span<const Word> lwpos);

  std::size_t pattern_count() const;
};

struct DictionaryIndex {
  NameRegistry registry;
  /// Keyword k is groups[k].name_seq.
  AhoCorasick<NameId> automaton;
  std::vector<PatternGroup> groups;
  std::size_t m = 0;
  std::size_t d = 0;
};

/// Counters filled in by verification and search.
struct VerifyStats {
  std::uint64_t candidates = 0;
  std::uint64_t ops = 0;
  /// Largest op count spent on a single candidate row.
  std::uint64_t max_ops_per_candidate = 0;
  std::uint64_t windows = 0;

  void merge(const VerifyStats& other);
};

/// Names, groups and indexes d square m x m patterns whose rows all have
/// period <= m/4. Pattern ids are positions in `patterns`.
DictionaryIndex build_index(std::span<const Matrix> patterns);

/// Arithmetic verification of one candidate: the m rows starting at a text
/// row, summarized over a window of `window_width` columns. Returns
/// (pattern id, column within window) for every pattern occurrence.
std::vector<std::pair<std::size_t, std::size_t>>
verify_candidate(const SummaryColumn& window_rows, const PatternGroup& group,
                 std::size_t window_width, VerifyStats* stats = nullptr);

struct SearchOptions {
  bool parallel = false;
  VerifyStats* stats = nullptr;
};

/// All pattern occurrences in `text`, sorted by (row, col, pattern). Every
/// reported occurrence is genuine. Occurrences are guaranteed to be found
/// when each text row overlapping them is uniformly periodic (period <= m/4)
/// across the surrounding window of 3m/2 columns.
std::vector<Occurrence> search_text(std::span<const std::string> text,
                                    const DictionaryIndex& index,
                                    const SearchOptions& options = {});

/// Direct character comparison at every position; sorted like search_text.
std::vector<Occurrence> brute_search(std::span<const std::string> text,
                                     std::span<const Matrix> patterns);

} // namespace lyndon2d
