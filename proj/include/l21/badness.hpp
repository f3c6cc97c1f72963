#pragma once

// Bad-vertex detection on the whole-tree weight assignment, the two local
// forbidden patterns, and the lambda in {4,5} decision for max-degree-3 trees.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "l21/chain_graph.hpp"
#include "l21/weights.hpp"

namespace l21 {

enum class BadCondition { type_2_3_chain, duplicate_heavy_weight, common_divisor };

inline const char* to_string(BadCondition c) {
  switch (c) {
    case BadCondition::type_2_3_chain: return "type-2-3-chain";
    case BadCondition::duplicate_heavy_weight: return "duplicate-heavy-weight";
    default: return "common-divisor";
  }
}

struct BadnessCertificate {
  Vertex vertex = -1;
  BadCondition condition = BadCondition::common_divisor;
  std::vector<Weight> weights;     // the three weights received at `vertex`
  std::optional<int> chain;        // offending closed chain (type-2-3-chain)
  std::optional<int> arc;          // its arc leaving `vertex`
  std::vector<int> chains;         // the two chains delivering the repeated weight
  std::optional<Weight> repeated;  // duplicate-heavy-weight
  int gcd = 0;                     // common-divisor
};

// All certificates, sorted by vertex; one per violated condition (and one per
// repeated heavy weight).
inline std::vector<BadnessCertificate> find_bad_vertices(const ChainGraph& g,
                                                         const WeightAssignment& wa) {
  std::vector<BadnessCertificate> out;
  std::vector<Vertex> majors = g.majors();
  std::sort(majors.begin(), majors.end());
  for (Vertex u : majors) {
    const auto& ends = g.ends(u);
    const auto ws = wa.weights_at(u);

    for (const auto& e : ends) {
      if (!e.is_closed() || e.arc_out < 0) continue;
      const auto& t = wa.arc_type[e.arc_out];
      if (t && t->cls.value() == 2 && t->k == 3) {
        BadnessCertificate c{u, BadCondition::type_2_3_chain, ws};
        c.chain = e.chain;
        c.arc = e.arc_out;
        out.push_back(c);
      }
    }

    for (int h : {6, 10, 15}) {
      std::vector<int> hits;
      for (std::size_t i = 0; i < ends.size(); ++i)
        if (ws[i].value() == h) hits.push_back(ends[i].chain);
      if (hits.size() >= 2) {
        BadnessCertificate c{u, BadCondition::duplicate_heavy_weight, ws};
        c.repeated = Weight(h);
        c.chains = {hits[0], hits[1]};
        out.push_back(c);
      }
    }

    if (ws.size() == 3 && ws[0].positive() && ws[1].positive() && ws[2].positive()) {
      int d = std::gcd(std::gcd(ws[0].value(), ws[1].value()), ws[2].value());
      if (d > 1) {
        BadnessCertificate c{u, BadCondition::common_divisor, ws};
        c.gcd = d;
        out.push_back(c);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct ForbiddenConfig {
  std::string tag;              // "<333>" or "<32323>"
  Vertex center = -1;
  std::vector<Vertex> witness;  // center first, then the rest of the pattern
};

// Every 3-vertex with two 3-vertex neighbours (<333>), and every 3-vertex
// reaching two other 3-vertices through single 2-vertices (<32323>).
inline std::vector<ForbiddenConfig> detect_forbidden_configs(const Tree& t) {
  std::vector<ForbiddenConfig> out;
  for (Vertex u = 0; u < t.size(); ++u) {
    if (t.degree(u) != 3) continue;
    std::vector<Vertex> direct;
    std::vector<std::pair<Vertex, Vertex>> via;  // (2-vertex, far 3-vertex)
    for (Vertex x : t.neighbors(u)) {
      if (t.degree(x) == 3) direct.push_back(x);
      if (t.degree(x) == 2) {
        Vertex y = t.neighbors(x)[0] == u ? t.neighbors(x)[1] : t.neighbors(x)[0];
        if (t.degree(y) == 3) via.emplace_back(x, y);
      }
    }
    if (direct.size() >= 2) {
      ForbiddenConfig c{"<333>", u, {u}};
      c.witness.insert(c.witness.end(), direct.begin(), direct.end());
      out.push_back(std::move(c));
    }
    if (via.size() >= 2) {
      ForbiddenConfig c{"<32323>", u, {u}};
      for (auto [x, y] : via) {
        c.witness.push_back(x);
        c.witness.push_back(y);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Verdict {
  int lambda = 4;
  bool few_majors = false;  // |V3| <= 2: decided without weights
  std::vector<BadnessCertificate> certificates;
};

// Only defined for max degree exactly 3.
inline Verdict decide_lambda(const Tree& t) {
  if (t.max_degree() != 3)
    throw DegreeError("decider needs max degree 3, got " + std::to_string(t.max_degree()));
  Verdict v;
  if (t.vertices_of_degree(3).size() <= 2) {
    v.few_majors = true;
    return v;
  }
  const ChainGraph g = decompose(t);
  const WeightAssignment wa = assign_weights(g);
  v.certificates = find_bad_vertices(g, wa);
  v.lambda = v.certificates.empty() ? 4 : 5;
  return v;
}

}  // namespace l21
