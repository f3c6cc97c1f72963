#pragma once

// Labelings, the L(2,1) checker, the 4-f mirror, and an exact labeler for a
// fixed span.
//
// The exact labeler is a tree DP: ok[x][a][b] says the subtree below x admits
// a labeling with x labelled a when its parent is labelled b. Children of x
// need pairwise distinct labels that avoid b and stay 2 away from a, which is
// a bipartite matching between children and labels.

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "l21/tree.hpp"

namespace l21 {

struct Labeling {
  int span = 0;
  std::vector<int> labels;  // indexed by vertex

  int operator[](Vertex v) const { return labels.at(v); }
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

class LabelingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ViolationKind { out_of_range, adjacent, distance_two };

struct Violation {
  ViolationKind kind = ViolationKind::adjacent;
  Vertex a = -1;
  Vertex b = -1;  // -1 for out_of_range

  std::string describe(const Labeling& f) const {
    std::ostringstream s;
    switch (kind) {
      case ViolationKind::out_of_range:
        s << "vertex " << a << " has label " << f[a] << " outside [0," << f.span << "]";
        break;
      case ViolationKind::adjacent:
        s << "adjacent vertices " << a << " and " << b << " have labels " << f[a] << " and "
          << f[b] << " (need difference >= 2)";
        break;
      case ViolationKind::distance_two:
        s << "vertices " << a << " and " << b << " at distance 2 share label " << f[a];
        break;
    }
    return s.str();
  }
};

struct Verification {
  std::optional<Violation> violation;
  bool ok() const { return !violation; }
  explicit operator bool() const { return ok(); }
};

// Throws LabelingError if some vertex is unlabelled (label < 0) or the sizes
// differ; otherwise reports the first violation in vertex order.
inline Verification verify_labeling(const Tree& t, const Labeling& f) {
  if (static_cast<int>(f.labels.size()) != t.size())
    throw LabelingError("labeling has " + std::to_string(f.labels.size()) + " entries for " +
                        std::to_string(t.size()) + " vertices");
  for (Vertex v = 0; v < t.size(); ++v)
    if (f[v] < 0) throw LabelingError("vertex " + std::to_string(v) + " is unlabelled");
  for (Vertex v = 0; v < t.size(); ++v)
    if (f[v] > f.span) return {Violation{ViolationKind::out_of_range, v, -1}};
  for (Vertex v = 0; v < t.size(); ++v) {
    const auto& nb = t.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (v < nb[i] && std::abs(f[v] - f[nb[i]]) < 2)
        return {Violation{ViolationKind::adjacent, v, nb[i]}};
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (f[nb[i]] == f[nb[j]])
          return {Violation{ViolationKind::distance_two, std::min(nb[i], nb[j]),
                            std::max(nb[i], nb[j])}};
    }
  }
  return {};
}

inline Labeling symmetric_labeling(const Labeling& f) {
  if (f.span != 4) throw LabelingError("the mirror map is defined for span 4");
  Labeling g = f;
  for (int& l : g.labels) l = 4 - l;
  return g;
}

// Per-vertex sets of admissible labels as bitmasks; empty means "any".
using LabelMasks = std::vector<unsigned>;

namespace detail {

class SpanDP {
 public:
  SpanDP(const Tree& t, int span, const LabelMasks& masks)
      : t_(t), s_(span), L_(span + 1), parent_(t.size(), -1) {
    allowed_.assign(t.size(), full());
    for (std::size_t v = 0; v < masks.size() && v < allowed_.size(); ++v)
      if (masks[v]) allowed_[v] = masks[v] & full();

    // BFS from the smallest-index vertex of maximum degree.
    root_ = 0;
    for (Vertex v = 0; v < t.size(); ++v)
      if (t.degree(v) > t.degree(root_)) root_ = v;
    order_ = {root_};
    std::vector<char> seen(t.size(), 0);
    seen[root_] = 1;
    children_.resize(t.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (Vertex y : t.neighbors(order_[i]))
        if (!seen[y]) {
          seen[y] = 1;
          parent_[y] = order_[i];
          children_[order_[i]].push_back(y);
          order_.push_back(y);
        }

    ok_.assign(static_cast<std::size_t>(t.size()) * L_ * (L_ + 1), 0);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const Vertex x = *it;
      for (int a = 0; a < L_; ++a) {
        if (!((allowed_[x] >> a) & 1u)) continue;
        for (int b = 0; b <= L_; ++b) {  // b == L_: no parent
          if (b < L_ && std::abs(a - b) < 2) continue;
          if ((b == L_) != (x == root_)) continue;
          std::vector<int> fixed;
          at(x, a, b) = assign_children(x, a, b, fixed, false);
        }
      }
    }
  }

  std::optional<std::vector<int>> solve() const {
    for (int a = 0; a < L_; ++a) {
      if (!at(root_, a, L_)) continue;
      std::vector<int> lab(t_.size(), -1);
      lab[root_] = a;
      for (Vertex x : order_) {
        std::vector<int> chosen;
        const int b = parent_[x] < 0 ? L_ : lab[parent_[x]];
        assign_children(x, lab[x], b, chosen, true);
        for (std::size_t i = 0; i < children_[x].size(); ++i) lab[children_[x][i]] = chosen[i];
      }
      return lab;
    }
    return std::nullopt;
  }

  bool feasible() const {
    for (int a = 0; a < L_; ++a)
      if (at(root_, a, L_)) return true;
    return false;
  }

 private:
  unsigned full() const { return (1u << (s_ + 1)) - 1u; }
  unsigned char& at(Vertex x, int a, int b) {
    return ok_[(static_cast<std::size_t>(x) * L_ + a) * (L_ + 1) + b];
  }
  unsigned char at(Vertex x, int a, int b) const {
    return ok_[(static_cast<std::size_t>(x) * L_ + a) * (L_ + 1) + b];
  }

  // Candidate labels for child c of x (x labelled a, x's parent labelled b).
  unsigned candidates(Vertex c, int a, int b) const {
    unsigned m = 0;
    for (int l = 0; l < L_; ++l)
      if (l != b && std::abs(l - a) >= 2 && at(c, l, a)) m |= 1u << l;
    return m;
  }

  // Whether the children of x can take distinct candidate labels. With
  // `build`, also writes the lexicographically smallest such choice.
  bool assign_children(Vertex x, int a, int b, std::vector<int>& chosen, bool build) const {
    const auto& ch = children_[x];
    std::vector<unsigned> cand(ch.size());
    for (std::size_t i = 0; i < ch.size(); ++i) cand[i] = candidates(ch[i], a, b);
    if (!matchable(cand, 0)) return false;
    if (!build) return true;
    chosen.assign(ch.size(), -1);
    unsigned used = 0;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      for (int l = 0; l < L_; ++l) {
        if (!((cand[i] >> l) & 1u) || ((used >> l) & 1u)) continue;
        std::vector<unsigned> rest(cand.begin() + static_cast<long>(i) + 1, cand.end());
        if (matchable(rest, used | (1u << l))) {
          chosen[i] = l;
          used |= 1u << l;
          break;
        }
      }
    }
    return true;
  }

  // Kuhn's augmenting paths: can every entry get its own label outside `taken`?
  bool matchable(const std::vector<unsigned>& cand, unsigned taken) const {
    std::vector<int> owner(L_, -1);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<char> seen(L_, 0);
      if (!augment(static_cast<int>(i), cand, taken, owner, seen)) return false;
    }
    return true;
  }

  bool augment(int i, const std::vector<unsigned>& cand, unsigned taken, std::vector<int>& owner,
               std::vector<char>& seen) const {
    for (int l = 0; l < L_; ++l) {
      if (!((cand[i] >> l) & 1u) || ((taken >> l) & 1u) || seen[l]) continue;
      seen[l] = 1;
      if (owner[l] < 0 || augment(owner[l], cand, taken, owner, seen)) {
        owner[l] = i;
        return true;
      }
    }
    return false;
  }

  const Tree& t_;
  int s_;
  int L_;
  Vertex root_ = 0;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<unsigned> allowed_;
  std::vector<unsigned char> ok_;
};

}  // namespace detail

// Exact: a valid labeling with labels in [0, span] respecting `masks`, or
// nullopt if none exists. Deterministic: vertices are settled in BFS order
// from a maximum-degree root, each taking its smallest completable label.
inline std::optional<Labeling> label_with_span(const Tree& t, int span,
                                               const LabelMasks& masks = {}) {
  if (span < 0 || span > 30) throw LabelingError("span out of supported range");
  detail::SpanDP dp(t, span, masks);
  auto lab = dp.solve();
  if (!lab) return std::nullopt;
  return Labeling{span, std::move(*lab)};
}

inline bool span_feasible(const Tree& t, int span, const LabelMasks& masks = {}) {
  if (span < 0 || span > 30) throw LabelingError("span out of supported range");
  return detail::SpanDP(t, span, masks).feasible();
}

// ---------------------------------------------------------------------------
// Text format: "span <s>" then one "v label" line per vertex, sorted by v.

inline std::string format_labeling(const Labeling& f) {
  std::ostringstream out;
  out << "span " << f.span << '\n';
  for (std::size_t v = 0; v < f.labels.size(); ++v) out << v << ' ' << f.labels[v] << '\n';
  return out.str();
}

inline Labeling parse_labeling(std::istream& in, int n) {
  Labeling f;
  f.labels.assign(static_cast<std::size_t>(n), -1);
  std::string raw;
  int line_no = 0;
  bool have_span = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "span") {
      if (have_span || !(ls >> f.span) || f.span < 0)
        throw ParseError(line_no, "bad span line");
      have_span = true;
      continue;
    }
    long long v = 0, l = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw ParseError(line_no, "malformed vertex '" + first + "'");
    }
    if (!(ls >> l)) throw ParseError(line_no, "missing label");
    std::string extra;
    if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
    if (v < 0 || v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
    if (l < 0) throw ParseError(line_no, "negative label");
    if (f.labels[v] != -1) throw ParseError(line_no, "vertex " + std::to_string(v) + " labelled twice");
    f.labels[v] = static_cast<int>(l);
  }
  if (!have_span) throw ParseError(line_no, "missing span line");
  return f;
}

}  // namespace l21
