#pragma once

// Small trees that, hung from a vertex w by one edge, deliver a prescribed
// weight to w. The labeler swaps a removed part of the tree for one of these
// so the remaining tree still sees the same weight at w.

#include <string>
#include <vector>

#include "l21/tree.hpp"
#include "l21/weights.hpp"

namespace l21 {

struct GadgetSpec {
  Weight target;
  std::string shape;
  int size = 0;
  std::vector<Edge> edges;  // local ids 0..size-1
  Vertex attach = 0;        // the gadget vertex joined to w (called z0)
  Vertex major = -1;        // the major vertex nearest to w (called z1), -1 for a leaf
};

namespace detail {

// Closed k-chain from the attach point to a new vertex; returns that vertex.
inline Vertex gadget_chain(GadgetSpec& g, int k) {
  // the attach vertex is 0 and the chain runs 0, 1, ..., k
  for (int i = 0; i < k; ++i) g.edges.emplace_back(i, i + 1);
  g.size = std::max(g.size, k + 1);
  return k;
}

inline Vertex gadget_new(GadgetSpec& g) { return g.size++; }

inline void gadget_leaves(GadgetSpec& g, Vertex at, int count) {
  for (int i = 0; i < count; ++i) g.edges.emplace_back(at, gadget_new(g));
}

// at -(k)- new 3-handle
inline Vertex gadget_handle_arm(GadgetSpec& g, Vertex at, int k) {
  Vertex prev = at;
  for (int i = 0; i < k; ++i) {
    Vertex x = gadget_new(g);
    g.edges.emplace_back(prev, x);
    prev = x;
  }
  Vertex h = gadget_new(g);
  g.edges.emplace_back(prev, h);
  gadget_leaves(g, h, 2);
  return h;
}

}  // namespace detail

inline GadgetSpec gadget_for_weight(Weight w) {
  using namespace detail;
  GadgetSpec g;
  g.target = w;
  switch (w.value()) {
    case 1:
      g.shape = "pendant leaf";
      g.size = 1;
      break;
    case 6:
      g.shape = "0-chain to a 3-handle";
      g.size = 1;
      g.major = 0;
      gadget_leaves(g, 0, 2);
      break;
    case 15:
      g.shape = "1-chain to a 3-handle";
      g.major = gadget_chain(g, 1);
      gadget_leaves(g, g.major, 2);
      break;
    case 2:
      g.shape = "3-chain to a 3-handle";
      g.major = gadget_chain(g, 3);
      gadget_leaves(g, g.major, 2);
      break;
    case 5:
    case 3:
      g.shape = w.value() == 5 ? "2-chain to a major with a leaf and a 1-chain to a 3-handle"
                               : "4-chain to a major with a leaf and a 1-chain to a 3-handle";
      g.major = gadget_chain(g, w.value() == 5 ? 2 : 4);
      gadget_leaves(g, g.major, 1);
      gadget_handle_arm(g, g.major, 1);
      break;
    case 10:
      g.shape = "2-chain to a major with a 0-chain and a 1-chain to 3-handles";
      g.major = gadget_chain(g, 2);
      gadget_handle_arm(g, g.major, 0);
      gadget_handle_arm(g, g.major, 1);
      break;
    default:
      throw WeightError("no gadget delivers weight 0");
  }
  return g;
}

struct Grafted {
  Tree tree;
  std::vector<Vertex> origin;  // host ids, -1 for gadget vertices
  Vertex z0 = -1;              // local id of the gadget's attach vertex
  Vertex z1 = -1;              // local id of the gadget's nearest major, or -1
};

// Induced subtree on `keep` (host ids, connected) with the gadget hung from
// host vertex `at`, which must be in `keep`.
inline Grafted graft(const Tree& host, const std::vector<Vertex>& keep, Vertex at,
                     const GadgetSpec& g) {
  Subtree base = induced_subtree(host, keep);
  const auto local_at = base.local_of(at);
  if (!local_at) throw TreeError("graft point is not kept");
  const int m = base.tree.size();
  std::vector<Edge> edges = base.tree.edges();
  for (auto [a, b] : g.edges) edges.emplace_back(m + a, m + b);
  edges.emplace_back(*local_at, m + g.attach);
  Grafted out{Tree(m + g.size, edges), base.origin, m + g.attach,
              g.major < 0 ? -1 : m + g.major};
  out.origin.resize(static_cast<std::size_t>(m + g.size), -1);
  return out;
}

}  // namespace l21
