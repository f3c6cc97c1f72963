#pragma once

// Text and JSON renderings shared by the command-line tool: verdicts as
// JSON, per-arc weight lines, and a Graphviz view of the chain graph.

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "l21/badness.hpp"
#include "l21/chain_graph.hpp"
#include "l21/weights.hpp"

namespace l21 {

inline nlohmann::ordered_json chain_json(const ChainGraph& g, int chain) {
  const Chain& c = g.chains().at(chain);
  return {{"from", c.u}, {"to", c.v}, {"k", c.length()}};
}

// `g` resolves chain endpoints; it may be null when there are no
// certificates (the few-majors shortcut never builds one).
inline nlohmann::ordered_json verdict_json(const Verdict& v, const ChainGraph* g) {
  nlohmann::ordered_json out;
  out["lambda"] = v.lambda;
  if (v.few_majors) out["shortcut"] = "few-majors";
  out["certificates"] = nlohmann::ordered_json::array();
  for (const auto& c : v.certificates) {
    nlohmann::ordered_json j;
    j["vertex"] = c.vertex;
    j["condition"] = to_string(c.condition);
    j["weights"] = nlohmann::ordered_json::array();
    for (Weight w : c.weights) j["weights"].push_back(w.value());
    if (c.chain && g) j["chain"] = chain_json(*g, *c.chain);
    if (!c.chains.empty() && g) {
      j["chains"] = nlohmann::ordered_json::array();
      for (int ch : c.chains) j["chains"].push_back(chain_json(*g, ch));
    }
    if (c.repeated) j["repeated"] = c.repeated->value();
    if (c.condition == BadCondition::common_divisor) j["gcd"] = c.gcd;
    out["certificates"].push_back(std::move(j));
  }
  return out;
}

inline std::string arc_type_string(const WeightAssignment& wa, int arc) {
  const auto& t = wa.arc_type.at(arc);
  return t ? std::to_string(t->cls.value()) : "-";
}

// One line per arc: "u->v k=<k> type=<class|-> w=<weight>".
inline std::string weight_lines(const ChainGraph& g, const WeightAssignment& wa) {
  std::ostringstream out;
  for (std::size_t a = 0; a < g.arcs().size(); ++a) {
    const Arc& arc = g.arcs()[a];
    out << arc.tail << "->" << arc.head << " k=" << g.chains()[arc.chain].length()
        << " type=" << arc_type_string(wa, static_cast<int>(a))
        << " w=" << wa.arc_weight[a].value() << "\n";
  }
  return out.str();
}

// Leaves and majors as nodes, one edge per arc. Without weights the labels
// carry "?".
inline std::string chain_graph_dot(const ChainGraph& g, const WeightAssignment* wa = nullptr) {
  std::ostringstream out;
  out << "digraph chains {\n";
  for (Vertex v : g.nodes())
    out << "  " << v << " [shape=" << (g.tree().degree(v) == 3 ? "box" : "circle") << "];\n";
  for (std::size_t a = 0; a < g.arcs().size(); ++a) {
    const Arc& arc = g.arcs()[a];
    out << "  " << arc.tail << " -> " << arc.head << " [label=\"k="
        << g.chains()[arc.chain].length() << ";type="
        << (wa ? arc_type_string(*wa, static_cast<int>(a)) : "-") << ";w="
        << (wa ? std::to_string(wa->arc_weight[a].value()) : "?") << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace l21
