#pragma once

// Small named trees shared by the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "l21/tree.hpp"

namespace l21::fixtures {

inline Tree path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree(n, e, "P" + std::to_string(n));
}

inline Tree star3() { return Tree(4, {{0, 1}, {0, 2}, {0, 3}}, "K13"); }

// Handles 0 and 3, joined by 0-1-2-3; leaves 4,5 on 0 and 6,7 on 3.
inline Tree two_handles() {
  return Tree(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {3, 6}, {3, 7}}, "two-handles");
}

// Centre 0 with leaf 1 and adjacent 3-handles 2 (leaves 3,4) and 5 (leaves 6,7).
inline Tree t333() {
  return Tree(8, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {0, 5}, {5, 6}, {5, 7}}, "333");
}

// Centre 0 with leaf 1, 0-2-3 and 0-4-5 with 3-handles 3 (leaves 6,7) and
// 5 (leaves 8,9).
inline Tree t32323() {
  return Tree(10, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {3, 6}, {3, 7}, {5, 8}, {5, 9}},
              "32323");
}

// Centre 0 with leaf 1, a 0-chain to 3-handle 2 (leaves 3,4) and a 1-chain
// 0-5-6 to 3-handle 6 (leaves 7,8).
inline Tree g3() {
  return Tree(9, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {0, 5}, {5, 6}, {6, 7}, {6, 8}}, "G3");
}

// Random max-degree-3 tree built from majors joined by chains of length 0..7,
// each remaining slot filled by a leaf, an open chain or a chain to a
// 3-handle. Uniform attachment almost never produces the long closed chains
// and handle arrangements the deeper configurations need; this does.
inline Tree chain_tree(std::uint64_t seed, int majors) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  std::vector<int> deg{0};
  auto grow = [&](Vertex a) {
    const Vertex b = static_cast<Vertex>(deg.size());
    deg.push_back(1);
    ++deg[a];
    e.emplace_back(a, b);
    return b;
  };
  auto run = [&](Vertex a, int k) {
    for (int i = 0; i < k; ++i) a = grow(a);
    return a;
  };
  std::vector<Vertex> maj{0};
  for (int i = 1; i < majors; ++i) {
    std::vector<Vertex> open;
    for (Vertex m : maj)
      if (deg[m] < 3) open.push_back(m);
    if (open.empty()) break;
    maj.push_back(grow(run(open[rng() % open.size()], static_cast<int>(rng() % 8))));
  }
  for (Vertex m : maj)
    while (deg[m] < 3) {
      const auto r = rng() % 10;
      if (r < 3) {
        grow(m);
      } else if (r < 6) {
        run(m, 1 + static_cast<int>(rng() % 6));
      } else {
        Vertex h = grow(run(m, static_cast<int>(rng() % 7)));
        grow(h);
        grow(h);
      }
    }
  return Tree(static_cast<int>(deg.size()), e);
}

}  // namespace l21::fixtures
