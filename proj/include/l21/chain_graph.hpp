#pragma once

// Chain decomposition of a max-degree-3 tree: the contracted tree on leaves
// and major vertices, plus the digraph with one arc per open chain and two
// opposite arcs per closed chain.

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "l21/tree.hpp"

namespace l21 {

enum class ChainKind { open, closed, degenerate };

inline const char* to_string(ChainKind k) {
  switch (k) {
    case ChainKind::open: return "open";
    case ChainKind::closed: return "closed";
    default: return "degenerate";
  }
}

// A path u x1 ... xk v with d(u), d(v) != 2 and every xi a 2-vertex.
// Open chains are stored leaf-first (u is the leaf).
struct Chain {
  Vertex u = -1;
  Vertex v = -1;
  std::vector<Vertex> internal;  // from the u side to the v side
  ChainKind kind = ChainKind::closed;

  int length() const noexcept { return static_cast<int>(internal.size()); }

  Vertex other_end(Vertex end) const { return end == u ? v : u; }

  // Neighbour of `end` along this chain.
  Vertex step_from(Vertex end) const {
    if (internal.empty()) return other_end(end);
    return end == u ? internal.front() : internal.back();
  }

  // Internal vertices listed from `end` outward.
  std::vector<Vertex> path_from(Vertex end) const {
    if (end == u) return internal;
    return {internal.rbegin(), internal.rend()};
  }
};

struct Arc {
  Vertex tail = -1;
  Vertex head = -1;
  int chain = -1;
};

// One chain end at a major vertex, seen from that vertex.
struct ChainEnd {
  int chain = -1;
  Vertex other = -1;           // far endpoint
  int length = 0;              // k
  ChainKind kind = ChainKind::closed;
  std::vector<Vertex> path;    // internal vertices from this vertex outward
  int arc_in = -1;             // arc delivering into this vertex
  int arc_out = -1;            // arc leaving this vertex (closed chains only)

  bool is_open() const { return kind == ChainKind::open; }
  bool is_closed() const { return kind == ChainKind::closed; }
};

class ChainGraph {
 public:
  const Tree& tree() const { return tree_; }
  const std::vector<Chain>& chains() const { return chains_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Vertex>& nodes() const { return nodes_; }
  const std::vector<Vertex>& majors() const { return majors_; }

  // The (exactly three) chain ends at a major vertex, in chain-index order.
  const std::vector<ChainEnd>& ends(Vertex major) const { return ends_.at(major); }

  std::size_t open_count() const { return count(ChainKind::open); }
  std::size_t closed_count() const { return count(ChainKind::closed); }

  // Arc index of the arc running tail -> head along `chain`, or -1.
  int arc_between(int chain, Vertex tail) const {
    for (int a : chain_arcs_.at(chain))
      if (arcs_[a].tail == tail) return a;
    return -1;
  }

  friend ChainGraph decompose(const Tree& t);

 private:
  std::size_t count(ChainKind k) const {
    std::size_t c = 0;
    for (const auto& ch : chains_) c += ch.kind == k ? 1 : 0;
    return c;
  }

  Tree tree_;
  std::vector<Chain> chains_;
  std::vector<Arc> arcs_;
  std::vector<Vertex> nodes_;
  std::vector<Vertex> majors_;
  std::vector<std::vector<int>> chain_arcs_;
  std::vector<std::vector<ChainEnd>> ends_;
};

class DegreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline ChainGraph decompose(const Tree& t) {
  if (t.max_degree() > 3)
    throw DegreeError("chain decomposition needs max degree <= 3, got " +
                      std::to_string(t.max_degree()));
  ChainGraph g;
  g.tree_ = t;
  const int n = t.size();
  g.ends_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) != 2) {
      g.nodes_.push_back(v);
      if (t.degree(v) == 3) g.majors_.push_back(v);
    }

  // Walk from every non-2-vertex along each unused edge through 2-vertices.
  std::set<Edge> used;
  auto key = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };
  for (Vertex start : g.nodes_) {
    for (Vertex first : t.neighbors(start)) {
      if (used.count(key(start, first))) continue;
      Chain c;
      c.u = start;
      Vertex prev = start, cur = first;
      used.insert(key(prev, cur));
      while (t.degree(cur) == 2) {
        c.internal.push_back(cur);
        Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
        prev = cur;
        cur = next;
        used.insert(key(prev, cur));
      }
      c.v = cur;
      bool leaf_u = t.degree(c.u) == 1, leaf_v = t.degree(c.v) == 1;
      if (leaf_u && leaf_v) {
        c.kind = ChainKind::degenerate;
      } else if (leaf_u || leaf_v) {
        c.kind = ChainKind::open;
        if (!leaf_u) {
          std::swap(c.u, c.v);
          std::reverse(c.internal.begin(), c.internal.end());
        }
      } else {
        c.kind = ChainKind::closed;
      }
      g.chains_.push_back(std::move(c));
    }
  }

  g.chain_arcs_.resize(g.chains_.size());
  for (int ci = 0; ci < static_cast<int>(g.chains_.size()); ++ci) {
    const Chain& c = g.chains_[ci];
    if (c.kind == ChainKind::degenerate) continue;
    g.chain_arcs_[ci].push_back(static_cast<int>(g.arcs_.size()));
    g.arcs_.push_back(Arc{c.u, c.v, ci});
    if (c.kind == ChainKind::closed) {
      g.chain_arcs_[ci].push_back(static_cast<int>(g.arcs_.size()));
      g.arcs_.push_back(Arc{c.v, c.u, ci});
    }
  }

  for (int ci = 0; ci < static_cast<int>(g.chains_.size()); ++ci) {
    const Chain& c = g.chains_[ci];
    if (c.kind == ChainKind::degenerate) continue;
    for (Vertex end : {c.u, c.v}) {
      if (t.degree(end) != 3) continue;
      ChainEnd e;
      e.chain = ci;
      e.other = c.other_end(end);
      e.length = c.length();
      e.kind = c.kind;
      e.path = c.path_from(end);
      e.arc_in = g.arc_between(ci, e.other);
      e.arc_out = c.kind == ChainKind::closed ? g.arc_between(ci, end) : -1;
      g.ends_[end].push_back(std::move(e));
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Strong subtrees

struct StrongRejection {
  Vertex vertex;  // a 3-vertex of the host with degree 2 in the subtree
};

using StrongResult = std::variant<Subtree, StrongRejection>;

// Induced subtree on `keep`; rejected if some 3-vertex of t has degree 2 in it.
inline StrongResult extract_strong_subtree(const Tree& t, const std::vector<Vertex>& keep) {
  if (!is_connected_set(t, keep)) throw TreeError("vertex set is not connected");
  std::vector<Vertex> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  Subtree s = induced_subtree(t, sorted);
  for (Vertex i = 0; i < s.tree.size(); ++i)
    if (t.degree(s.origin[i]) == 3 && s.tree.degree(i) == 2) return StrongRejection{s.origin[i]};
  return s;
}

// Grows a random strong subtree from a random root: 3-vertices keep either
// none or all of their remaining neighbours, other vertices flip a coin per
// neighbour.
inline Subtree random_strong_subtree(const Tree& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_root(0, t.size() - 1);
  std::bernoulli_distribution keep_edge(0.75);
  const Vertex root = pick_root(rng);
  std::vector<char> in(static_cast<std::size_t>(t.size()), 0);
  std::vector<Vertex> order{root};
  in[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex x = order[i];
    std::vector<Vertex> fresh;
    for (Vertex y : t.neighbors(x))
      if (!in[y]) fresh.push_back(y);
    std::vector<Vertex> take;
    if (t.degree(x) == 3) {
      if (x == root) {
        // 0, 1 or 3 neighbours; never 2.
        switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
          case 0: break;
          case 1: take = {fresh[std::uniform_int_distribution<std::size_t>(0, 2)(rng)]}; break;
          default: take = fresh; break;
        }
      } else if (keep_edge(rng)) {
        take = fresh;
      }
    } else {
      for (Vertex y : fresh)
        if (keep_edge(rng)) take.push_back(y);
    }
    for (Vertex y : take) {
      in[y] = 1;
      order.push_back(y);
    }
  }
  std::sort(order.begin(), order.end());
  return induced_subtree(t, order);
}

}  // namespace l21
