#pragma once

// Ground truth that never looks at weights: exact lambda, exhaustive
// enumeration of labelings, and feasible-label sets of an anchored subtree.

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "l21/labeling.hpp"
#include "l21/weights.hpp"

namespace l21 {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Smallest feasible span, trying max(0, Δ+1) first and counting up.
inline int lambda_exact(const Tree& t) {
  if (t.size() == 1) return 0;
  for (int s = t.max_degree() + 1;; ++s)
    if (span_feasible(t, s)) return s;
}

struct EnumerationOptions {
  double budget = 1e8;  // cap on (span+1)^n
};

// Calls `visit` for every valid labeling with labels in [0, span], in
// lexicographic order along a BFS from vertex 0. `visit` returns false to
// stop early. Returns the number of labelings visited.
inline std::uint64_t enumerate_labelings(const Tree& t, int span,
                                         const std::function<bool(const Labeling&)>& visit,
                                         EnumerationOptions opt = {}) {
  if (std::pow(static_cast<double>(span + 1), t.size()) > opt.budget)
    throw BudgetExceeded("(span+1)^n exceeds the enumeration budget");
  std::vector<Vertex> order{0};
  std::vector<char> seen(t.size(), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex y : t.neighbors(order[i]))
      if (!seen[y]) {
        seen[y] = 1;
        order.push_back(y);
      }

  Labeling f{span, std::vector<int>(t.size(), -1)};
  std::uint64_t count = 0;
  bool stop = false;

  // A label fits if it clashes with no labelled vertex within distance 2.
  auto fits = [&](Vertex v, int l) {
    for (Vertex x : t.neighbors(v)) {
      if (f.labels[x] >= 0 && std::abs(f.labels[x] - l) < 2) return false;
      for (Vertex y : t.neighbors(x))
        if (y != v && f.labels[y] == l) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == order.size()) {
      ++count;
      if (!visit(f)) stop = true;
      return;
    }
    const Vertex v = order[i];
    for (int l = 0; l <= span && !stop; ++l)
      if (fits(v, l)) {
        f.labels[v] = l;
        rec(i + 1);
        f.labels[v] = -1;
      }
  };
  rec(0);
  return count;
}

inline std::uint64_t count_labelings(const Tree& t, int span, EnumerationOptions opt = {}) {
  return enumerate_labelings(t, span, [](const Labeling&) { return true; }, opt);
}

// { f(probe) : f a span-4 labeling of host with f(anchor) = anchor_label }.
// Empty when the host cannot be labelled that way at all.
inline LabelSet sset(const Tree& host, Vertex anchor, Vertex probe, int anchor_label = 0) {
  if (!host.has_edge(anchor, probe)) throw std::invalid_argument("probe must neighbour the anchor");
  LabelSet out;
  LabelMasks masks(host.size(), 0);
  masks[anchor] = 1u << anchor_label;
  for (int l = 0; l <= 4; ++l) {
    masks[probe] = 1u << l;
    if (span_feasible(host, 4, masks)) out.insert(l);
  }
  return out;
}

}  // namespace l21
