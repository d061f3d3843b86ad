#include "lyndon2d/dictmatch.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "lyndon2d/error.hpp"

namespace lyndon2d {
namespace {

Word submod(Word a, Word b, Word n) { return a >= b ? a - b : n - (b - a); }

/// (lwpos[i] - base) mod periods[i] for rows [from, m).
std::vector<Word> shifted_tail(std::span<const Word> periods, std::span<const Word> lwpos,
                               const BigNat& base, std::size_t from) {
  std::vector<Word> out;
  out.reserve(periods.size() - from);
  for (std::size_t i = from; i < periods.size(); ++i)
    out.push_back(submod(lwpos[i], mod_word(base, periods[i]), periods[i]));
  return out;
}

} // namespace

void VerifyStats::merge(const VerifyStats& other) {
  candidates += other.candidates;
  ops += other.ops;
  windows += other.windows;
  max_ops_per_candidate = std::max(max_ops_per_candidate, other.max_ops_per_candidate);
}

PatternGroup::PatternGroup(std::vector<NameId> names, std::vector<Word> row_periods,
                           std::size_t width)
    : name_seq(std::move(names)), periods(std::move(row_periods)), m(width) {
  if (periods.empty() || periods.size() != name_seq.size())
    throw InvalidInput("PatternGroup: names and periods differ in length");
  const auto prefix = lcm_prefixes(periods);
  r = periods.size();
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] > m) {
      r = i + 1;
      break;
    }
  }
  lcm_prefix_r.assign(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(r));
}

void PatternGroup::add(std::size_t pattern, std::span<const Word> lwpos) {
  if (lwpos.size() != periods.size())
    throw InvalidInput("PatternGroup::add: LWpos array has wrong length");
  Alg2Accumulator acc(lcm_prefix_r);
  for (std::size_t i = 0; i < r; ++i)
    acc.push(periods[i], lwpos[i]);
  auto tail = shifted_tail(periods, lwpos, acc.z(), r);
  subgroups[acc.offsets()][std::move(tail)].push_back({pattern, acc.z()});
}

std::size_t PatternGroup::pattern_count() const {
  std::size_t n = 0;
  for (const auto& [key, sub] : subgroups)
    for (const auto& [tail, entries] : sub)
      n += entries.size();
  return n;
}

DictionaryIndex build_index(std::span<const Matrix> patterns) {
  if (patterns.empty())
    throw InvalidInput("build_index: empty dictionary");
  DictionaryIndex index;
  index.m = patterns[0].size();
  index.d = patterns.size();
  if (index.m == 0)
    throw InvalidInput("build_index: empty pattern");

  std::map<std::vector<NameId>, std::size_t> group_of;
  for (std::size_t id = 0; id < patterns.size(); ++id) {
    const Matrix& pat = patterns[id];
    if (pat.size() != index.m)
      throw InvalidInput("pattern " + std::to_string(id) + ": expected " +
                         std::to_string(index.m) + " rows, got " + std::to_string(pat.size()));
    std::vector<RowSummary> rows;
    rows.reserve(index.m);
    for (std::size_t i = 0; i < index.m; ++i) {
      if (pat[i].size() != index.m)
        throw InvalidInput("pattern " + std::to_string(id) + " row " + std::to_string(i) +
                           ": not square (width " + std::to_string(pat[i].size()) + ")");
      try {
        rows.push_back(summarize_row(pat[i], index.registry, kQuarter));
      } catch (const NotSufficientlyPeriodic& e) {
        throw NotSufficientlyPeriodic(e.period(), e.width(), i);
      }
    }
    const SummaryColumn col = SummaryColumn::from_rows(rows);
    auto [it, fresh] = group_of.try_emplace(col.names, index.groups.size());
    if (fresh)
      index.groups.emplace_back(col.names, col.periods, index.m);
    index.groups[it->second].add(id, col.lwpos);
  }

  for (const auto& g : index.groups)
    index.automaton.add(std::span<const NameId>(g.name_seq));
  index.automaton.build();
  return index;
}

std::vector<std::pair<std::size_t, std::size_t>>
verify_candidate(const SummaryColumn& window_rows, const PatternGroup& group,
                 std::size_t window_width, VerifyStats* stats) {
  const std::size_t m = group.m;
  if (window_rows.rows() != group.periods.size() || window_rows.periods != group.periods)
    throw InvalidInput("verify_candidate: window rows do not match the group");

  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (window_width < m)
    return out;
  const std::size_t max_shift = window_width - m;
  std::uint64_t ops = 0;

  // Step 1: 2D_LW[1..r] and z_t[r] of the window rows.
  Alg2Accumulator acc(group.lcm_prefix_r);
  for (std::size_t i = 0; i < group.r; ++i)
    acc.push(window_rows.periods[i], window_rows.lwpos[i]);
  ops += acc.ops();

  auto finish = [&] {
    if (stats) {
      stats->candidates += 1;
      stats->ops += ops;
      stats->max_ops_per_candidate = std::max(stats->max_ops_per_candidate, ops);
    }
  };

  const auto sub = group.subgroups.find(acc.offsets());
  ops += 1;
  if (sub == group.subgroups.end()) {
    finish();
    return out;
  }

  const BigNat& lcm_r = group.lcm_prefix_r.back();
  const std::size_t rows = window_rows.rows();
  if (group.r == rows) {
    // Whole 2D_LW already equal: every s = z_t - z_p (mod LCM_m) that fits.
    const auto hit = sub->second.find({});
    if (hit != sub->second.end()) {
      for (const auto& entry : hit->second) {
        const BigNat s0 = (acc.z() + lcm_r - entry.z) % lcm_r;
        ops += 1;
        if (s0 > max_shift)
          continue;
        const std::size_t step =
            lcm_r > max_shift ? max_shift + 1 : static_cast<std::size_t>(lcm_r);
        for (auto s = static_cast<std::size_t>(s0); s <= max_shift; s += step)
          out.emplace_back(entry.pattern, s);
      }
    }
    finish();
    return out;
  }

  // Steps 2-4 for w in {0, LCM_r}.
  std::map<std::size_t, int> admissible;
  for (int branch = 0; branch < 2; ++branch) {
    const BigNat base = branch == 0 ? acc.z() : acc.z() + lcm_r;
    const auto tail = shifted_tail(window_rows.periods, window_rows.lwpos, base, group.r);
    ops += 1 + (rows - group.r);
    const auto hit = sub->second.find(tail);
    ops += 1;
    if (hit == sub->second.end())
      continue;
    for (const auto& entry : hit->second) {
      const BigNat s = base - entry.z;
      ops += 1;
      if (s < 0 || s > max_shift)
        continue;
      if (++admissible[entry.pattern] > 1)
        throw std::logic_error("verify_candidate: both w branches admissible");
      out.emplace_back(entry.pattern, static_cast<std::size_t>(s));
    }
  }
  finish();
  return out;
}

namespace {

void search_window(std::span<const std::string> text, const DictionaryIndex& index,
                   std::size_t start, std::size_t width, std::vector<Occurrence>& out,
                   VerifyStats& stats) {
  const std::size_t m = index.m;
  std::vector<RowSummary> rows;
  rows.reserve(text.size());
  std::vector<NameId> names;
  names.reserve(text.size());
  for (const auto& line : text) {
    rows.push_back(lookup_row(std::string_view(line).substr(start, width), index.registry, m / 4));
    names.push_back(rows.back().name);
  }
  stats.windows += 1;

  index.automaton.match(std::span<const NameId>(names), [&](std::size_t group_id,
                                                            std::size_t top) {
    const PatternGroup& group = index.groups[group_id];
    const SummaryColumn window_rows = SummaryColumn::from_rows(
        std::span<const RowSummary>(rows).subspan(top, m));
    for (const auto& [pattern, s] : verify_candidate(window_rows, group, width, &stats))
      out.push_back({pattern, top, start + s});
  });
}

} // namespace

std::vector<Occurrence> search_text(std::span<const std::string> text,
                                    const DictionaryIndex& index,
                                    const SearchOptions& options) {
  std::vector<Occurrence> out;
  const std::size_t m = index.m;
  if (m == 0 || text.size() < m)
    return out;
  const std::size_t n2 = text[0].size();
  for (const auto& line : text)
    if (line.size() != n2)
      throw InvalidInput("search_text: ragged text");
  if (n2 < m)
    return out;

  // Windows of width m + m/2 stepping by m/2: every start column lands in
  // the first m/2 columns of some window.
  const std::size_t step = std::max<std::size_t>(1, m / 2);
  std::vector<std::pair<std::size_t, std::size_t>> windows;
  for (std::size_t start = 0; start + m <= n2; start += step)
    windows.emplace_back(start, std::min(m + step, n2 - start));

  VerifyStats total;
  if (!options.parallel || windows.size() < 2) {
    for (const auto& [start, width] : windows)
      search_window(text, index, start, width, out, total);
  } else {
    const std::size_t workers =
        std::min<std::size_t>(windows.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::vector<Occurrence>> partial(workers);
    std::vector<VerifyStats> partial_stats(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t k = w; k < windows.size(); k += workers)
            search_window(text, index, windows[k].first, windows[k].second, partial[w],
                          partial_stats[w]);
        });
    }
    for (std::size_t w = 0; w < workers; ++w) {
      out.insert(out.end(), partial[w].begin(), partial[w].end());
      total.merge(partial_stats[w]);
    }
  }
  if (options.stats)
    options.stats->merge(total);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Occurrence> brute_search(std::span<const std::string> text,
                                     std::span<const Matrix> patterns) {
  std::vector<Occurrence> out;
  const std::size_t n1 = text.size();
  const std::size_t n2 = n1 ? text[0].size() : 0;
  for (std::size_t id = 0; id < patterns.size(); ++id) {
    const Matrix& pat = patterns[id];
    const std::size_t h = pat.size();
    const std::size_t w = h ? pat[0].size() : 0;
    if (h == 0 || w == 0 || h > n1 || w > n2)
      continue;
    for (std::size_t row = 0; row + h <= n1; ++row)
      for (std::size_t col = 0; col + w <= n2; ++col) {
        bool ok = true;
        for (std::size_t i = 0; i < h && ok; ++i)
          ok = text[row + i].compare(col, w, pat[i]) == 0;
        if (ok)
          out.push_back({id, row, col});
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace lyndon2d
