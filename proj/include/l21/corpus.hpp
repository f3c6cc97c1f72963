#pragma once

// Canonical codes for free trees, exhaustive enumeration of non-isomorphic
// trees under a degree cap, and seeded random trees.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "l21/tree.hpp"

namespace l21 {

// One or two centres, found by peeling leaves.
inline std::vector<Vertex> tree_centers(const Tree& t) {
  const int n = t.size();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex y : t.neighbors(v))
        if (--deg[y] == 1) next.push_back(y);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace detail {

inline std::string ahu(const Tree& t, Vertex v, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex y : t.neighbors(v))
    if (y != parent) parts.push_back(ahu(t, y, v));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (auto& p : parts) s += p;
  return s + ")";
}

}  // namespace detail

// Parenthesis string of the tree rooted at its centre; with two centres the
// smaller of the two rootings.
inline std::string canonical_code(const Tree& t) {
  std::string best;
  for (Vertex c : tree_centers(t)) {
    std::string s = detail::ahu(t, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

class CorpusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultEnumerationBound = 16;

// One tree per isomorphism class on n vertices with max degree <= maxdeg,
// sorted by canonical code. Built level by level: every class on n vertices
// arises from one on n-1 vertices by hanging a leaf somewhere.
inline std::vector<Tree> enumerate_trees(int n, int maxdeg = 3,
                                         int bound = kDefaultEnumerationBound) {
  if (n < 1 || n > bound) throw CorpusError("n outside [1, " + std::to_string(bound) + "]");
  if (maxdeg < 0) throw CorpusError("negative degree cap");
  std::vector<Tree> level{Tree()};
  for (int m = 2; m <= n; ++m) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Tree>> next;
    for (const Tree& t : level) {
      auto edges = t.edges();
      for (Vertex v = 0; v < t.size(); ++v) {
        if (t.degree(v) >= maxdeg) continue;
        auto e = edges;
        e.emplace_back(v, m - 1);
        Tree grown(m, e);
        std::string code = canonical_code(grown);
        if (seen.insert(code).second) next.emplace_back(std::move(code), std::move(grown));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, t] : next) level.push_back(std::move(t));
  }
  return level;
}

// Attaches each new vertex to a uniformly chosen vertex below the cap, then
// shuffles the ids.
inline Tree random_tree(int n, int maxdeg, std::uint64_t seed) {
  if (n < 1) throw CorpusError("n must be positive");
  if (n >= 2 && maxdeg < 1) throw CorpusError("no tree on n >= 2 vertices with max degree < 1");
  if (n >= 3 && maxdeg < 2) throw CorpusError("no tree on n >= 3 vertices with max degree < 2");
  std::mt19937_64 rng(seed);
  std::vector<int> deg(n, 0);
  std::vector<Edge> edges;
  std::vector<Vertex> open{0};
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const std::size_t i = pick(rng);
    const Vertex p = open[i];
    edges.emplace_back(p, v);
    if (++deg[p] >= maxdeg) {
      open[i] = open.back();
      open.pop_back();
    }
    if (++deg[v] < maxdeg) open.push_back(v);
  }
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : edges) {
    a = perm[a];
    b = perm[b];
  }
  return Tree(n, edges);
}

}  // namespace l21
