#pragma once

#include <cstddef>
#include <map>
#include <queue>
#include <span>
#include <vector>

namespace lyndon2d {

/// Multi-pattern automaton over an arbitrary ordered symbol type. Keywords
/// are added first, then build() links failures; matching is read-only.
template <typename Symbol>
class AhoCorasick {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  AhoCorasick() { nodes_.emplace_back(); }

  /// Adds a keyword and returns its id (dense, in insertion order).
  std::size_t add(std::span<const Symbol> keyword) {
    std::size_t node = 0;
    for (const Symbol& s : keyword) {
      auto it = nodes_[node].next.find(s);
      if (it == nodes_[node].next.end()) {
        nodes_.emplace_back();
        nodes_[node].next.emplace(s, nodes_.size() - 1);
        node = nodes_.size() - 1;
      } else {
        node = it->second;
      }
    }
    if (nodes_[node].keyword == npos) {
      nodes_[node].keyword = lengths_.size();
      lengths_.push_back(keyword.size());
    }
    return nodes_[node].keyword;
  }

  void build() {
    std::queue<std::size_t> bfs;
    for (auto& [sym, child] : nodes_[0].next) {
      nodes_[child].fail = 0;
      bfs.push(child);
    }
    while (!bfs.empty()) {
      const std::size_t u = bfs.front();
      bfs.pop();
      for (auto& [sym, child] : nodes_[u].next) {
        nodes_[child].fail = step(nodes_[u].fail, sym);
        const std::size_t f = nodes_[child].fail;
        nodes_[child].output = nodes_[f].keyword != npos ? f : nodes_[f].output;
        bfs.push(child);
      }
    }
  }

  std::size_t keyword_count() const noexcept { return lengths_.size(); }
  std::size_t keyword_length(std::size_t id) const { return lengths_.at(id); }

  /// Calls on_match(keyword id, start position) for every occurrence.
  template <typename OnMatch>
  void match(std::span<const Symbol> text, OnMatch&& on_match) const {
    std::size_t node = 0;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      node = step(node, text[pos]);
      for (std::size_t out = nodes_[node].keyword != npos ? node : nodes_[node].output;
           out != npos; out = nodes_[out].output) {
        const std::size_t id = nodes_[out].keyword;
        on_match(id, pos + 1 - lengths_[id]);
      }
    }
  }

private:
  struct Node {
    std::map<Symbol, std::size_t> next;
    std::size_t fail = 0;
    std::size_t output = npos;  // nearest proper suffix node that ends a keyword
    std::size_t keyword = npos;
  };

  std::size_t step(std::size_t node, const Symbol& s) const {
    while (true) {
      if (auto it = nodes_[node].next.find(s); it != nodes_[node].next.end())
        return it->second;
      if (node == 0)
        return 0;
      node = nodes_[node].fail;
    }
  }

  std::vector<Node> nodes_;
  std::vector<std::size_t> lengths_;
};

} // namespace lyndon2d
