#include "lyndon2d/strings1d.hpp"

#include <algorithm>
#include <charconv>

#include "lyndon2d/error.hpp"

namespace lyndon2d {

Fraction Fraction::parse(std::string_view text) {
  auto parse_part = [&](std::string_view part) {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || end != part.data() + part.size() || part.empty())
      throw InvalidInput("bad fraction '" + std::string(text) + "'");
    return value;
  };
  Fraction f;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    f.num = parse_part(text.substr(0, slash));
    f.den = parse_part(text.substr(slash + 1));
  } else {
    f.num = parse_part(text);
    f.den = 1;
  }
  if (f.den == 0 || f.num == 0)
    throw InvalidInput("bad fraction '" + std::string(text) + "'");
  return f;
}

std::string Fraction::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

NameId NameRegistry::intern(std::string_view word) {
  if (auto it = ids_.find(std::string(word)); it != ids_.end())
    return it->second;
  if (!is_lyndon(word))
    throw NotLyndon("not a Lyndon word: '" + std::string(word) + "'");
  const auto id = static_cast<NameId>(words_.size());
  words_.emplace_back(word);
  ids_.emplace(words_.back(), id);
  return id;
}

std::optional<NameId> NameRegistry::find(std::string_view word) const {
  if (auto it = ids_.find(std::string(word)); it != ids_.end())
    return it->second;
  return std::nullopt;
}

std::size_t compute_period(std::string_view s) {
  if (s.empty())
    throw InvalidInput("compute_period: empty string");
  const std::size_t n = s.size();
  // border[i]: length of the longest proper border of s[0..i]
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && s[i] != s[k])
      k = border[k - 1];
    if (s[i] == s[k])
      ++k;
    border[i] = k;
  }
  return n - border[n - 1];
}

bool is_primitive(std::string_view s) {
  const std::size_t p = compute_period(s);
  return p == s.size() || s.size() % p != 0;
}

Rotation least_rotation(std::string_view s) {
  if (s.empty())
    throw InvalidInput("least_rotation: empty string");
  if (!is_primitive(s))
    throw NotPrimitive("least_rotation: '" + std::string(s) + "' is a proper power");

  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const char a = s[(i + k) % n];
    const char b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    // unsigned compare: code-point order for bytes >= 0x80
    if (static_cast<unsigned char>(a) > static_cast<unsigned char>(b))
      i += k + 1;
    else
      j += k + 1;
    if (i == j)
      ++j;
    k = 0;
  }
  const std::size_t offset = std::min(i, j);

  Rotation r;
  r.offset = offset;
  r.word.reserve(n);
  r.word.append(s.substr(offset));
  r.word.append(s.substr(0, offset));
  return r;
}

bool is_lyndon(std::string_view s) {
  if (s.empty() || !is_primitive(s))
    return false;
  return least_rotation(s).offset == 0;
}

RowSummary summarize_row(std::string_view s, NameRegistry& registry,
                         Fraction max_period_fraction) {
  if (s.empty())
    throw InvalidInput("summarize_row: empty row");
  if (max_period_fraction.num * 2 > max_period_fraction.den)
    throw InvalidInput("summarize_row: period fraction above 1/2");

  const std::size_t period = compute_period(s);
  if (!max_period_fraction.admits(period, s.size()))
    throw NotSufficientlyPeriodic(period, s.size());

  Rotation rot = least_rotation(s.substr(0, period));
  RowSummary out;
  out.period = period;
  out.lwpos = rot.offset;
  out.name = registry.intern(rot.word);
  out.width = s.size();
  return out;
}

RowSummary lookup_row(std::string_view s, const NameRegistry& registry,
                      std::size_t max_period) {
  RowSummary out;
  out.width = s.size();
  if (s.empty())
    return out;
  out.period = compute_period(s);
  if (out.period > max_period || 2 * out.period > s.size())
    return out;
  Rotation rot = least_rotation(s.substr(0, out.period));
  out.lwpos = rot.offset;
  out.name = registry.find(rot.word).value_or(kNoName);
  return out;
}

} // namespace lyndon2d
