#pragma once

// Constructive span-4 labeler for good trees.
//
// Recursion on the configuration found in the tree: cut off (or replace by a
// gadget) a small piece, label what is left, normalise the labels at the
// attachment vertex with the 4-f mirror, then put the piece back using the
// label sequences listed per case. A sequence row is used only if it agrees
// with every label the smaller tree already fixed; the leftover vertices
// (leaves of handles, vertices a case is allowed to relabel) are completed by
// the exact span-4 search with everything else pinned.

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "l21/badness.hpp"
#include "l21/configurations.hpp"
#include "l21/gadgets.hpp"
#include "l21/labeling.hpp"

namespace l21 {

class LabelerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Label sequences

// `shape` lists vertex names; a plain name continues the path from the
// previous one, "name@other" hangs name off an earlier vertex. Rows give one
// digit per name, or '*' to keep the label from the smaller tree. `majors` names the vertices that are major in the
// configuration.
struct SequenceTable {
  std::string key;
  std::string shape;
  std::string majors;
  std::vector<std::string> rows;
};

inline const std::vector<SequenceTable>& sequence_tables() {
  static const std::vector<SequenceTable> tables{
      {"C1", "x1 x2 x3 x4 x5 x6 x7 v", "",
       {"24130420", "24024130", "24130240", "24024031", "24130241", "24031402",
        "31420420", "31403140", "31420413", "31402403", "31403142", "31420314",
        "42031420", "41304130", "42041304", "41302413", "42042041", "42042042"}},
      {"C3.1", "y v u u.leaf1 u.leaf2@u", "v u", {"30412"}},
      {"C3.2", "w x2 x1 v u", "w v u", {"03140", "04204"}},
      {"C3.3", "w x3 x2 x1 v u", "w v u", {"041304"}},
      {"C3.4", "w x4 x3 x2 x1 v u", "w v u", {"0241304", "0314204"}},
      {"C3.5", "x5 x4 x3 x2 x1 v u", "v u", {"2403140", "3140240", "4130240"}},
      {"C3.6", "x5 x4 x3 x2 x1 v u", "v u",
       {"2403140", "3140240", "4130240", "3041304", "4204204", "0314204"}},
      {"C4.1", "v x2 x1 u", "v u", {"0240", "0314", "0420"}},
      {"C4.2", "x4 x3 x2 x1 u", "u", {"24130", "31420", "41304", "30420", "40314", "03140"}},
      {"C5.1", "v x3 x2 x1 u", "v u", {"03140", "04204"}},
      {"C5.2-1", "v x3 x2 x1 u", "v u", {"03140"}},
      {"C5.2-2", "w p2 p1 v x3 x2 x1 u y@v", "w v u y", {"042031404"}},
      {"C5.2-4", "w p4 p3 p2 p1 v x3 x2 x1 u y@v", "w v u y", {"02402413040", "03142031404"}},
      {"C5.2-5", "w p5 p4 p3 p2 p1 v x3 x2 x1 u y@v", "w v u y",
       {"031402413040", "041302413040"}},
      {"C5.2-6", "w p6 p5 p4 p3 p2 p1 v x3 x2 x1 u y@v", "w v u y",
       {"0241302413040", "0413042031404"}},
      {"C5.3", "v x3 x2 x1 u", "v u", {"03140", "04204"}},
      {"C5.4", "v q3 q2 q1 y", "v y", {"04204"}},
      {"C6.1", "y v x u", "v u", {"3024"}},
      {"C6.2", "v x u", "v u", {"024"}},
      {"C6.3-5", "w p5 p4 p3 p2 p1 v x u", "w v u", {"024024024", "031420420", "042031420"}},
      {"C6.3-6", "w p6 p5 p4 p3 p2 p1 v x u", "w v u",
       {"0240314024", "0314031420", "0413024024"}},
      {"C7.1", "w x2 x1 v u1 u", "w v u", {"024024", "031420"}},
      {"C7.3-0", "x2 x1 v u1 u", "v u", {"31420"}},
      {"C7.3-2", "w'' q2 q1 w", "w'' w", {"0240"}},
      {"C7.3-3", "q3 q2 q1 w", "w", {"3140", "4204"}},
      {"C7.3-4", "q4 q3 q2 q1 w", "w", {"41304"}},
      {"C7.3-5", "q5 q4 q3 q2 q1 w", "w", {"241304", "314204"}},
      {"C7.3-6", "q6 q5 q4 q3 q2 q1 w", "w", {"2403140", "3140240", "4130240"}},
      {"C7.3x", "w x2 x1 v u1 u", "w v u", {"031420", "413024"}},
      {"C7.4", "x2 x1 v u1 u u.leaf1 y@v u.leaf2@u", "v u", {"24024031", "********"}},
      {"C7.4q", "q3 q2 q1 w'", "w'", {"3140", "4204"}},
      {"C7.5", "x2 x1 v u1 u", "v u", {"24024"}},
      {"C8.1-0", "w x2 x1 v u1 u w'@w u'@v", "w v u u'", {"03142020"}},
      {"C8.1-1", "w x2 x1 v u1 u w'@w u'@v", "w v u u'", {"03142040"}},
      {"C8.1-2", "q2 q1 w", "w", {"240", "420"}},
      {"C8.1-3", "q3 q2 q1 w", "w", {"3140", "4204"}},
      {"C8.1-4", "q4 q3 q2 q1 w", "w", {"24024", "31420", "41304", "30420", "40240", "03140"}},
      {"C8.4", "w q3 q2 q1 w'", "w w'", {"04204"}},
      {"C8.5", "w q2 q1 w' m2 w2", "w w' w2", {"024024"}},
      {"C8x", "w x2 x1 v u1 u u'@v", "w v u u'", {"0314200", "4130244"}},
      {"C9x", "w x4 x3 x2 x1 v u1 u", "w v u", {"02413024", "04130420"}},
      {"C9.4q", "q3 q2 q1 w'", "w'", {"3140", "4204"}},
      {"C9.5q", "w q2 q1 w' m2 w2", "w w' w2", {"024024", "031420"}},
      {"C10-3", "x3 x2 x1 v u1 u u'@v", "v u u'", {"4130244"}},
      {"C10-4", "x4 x3 x2 x1 v u1 u u'@v", "v u u'", {"24130244"}},
      {"C10-5", "x5 x4 x3 x2 x1 v u1 u u'@v", "v u u'", {"240314200", "420314200"}},
      {"C10-6", "x6 x5 x4 x3 x2 x1 v u1 u u'@v", "v u u'", {"3140314200", "4204130244"}},
  };
  return tables;
}

struct ParsedShape {
  std::vector<std::string> names;
  std::vector<int> attach;  // index of the vertex each name hangs from, -1 for the first
};

inline ParsedShape parse_shape(const std::string& shape) {
  ParsedShape out;
  std::istringstream in(shape);
  std::string tok;
  while (in >> tok) {
    auto at = tok.find('@');
    int parent = static_cast<int>(out.names.size()) - 1;
    if (at != std::string::npos) {
      std::string host = tok.substr(at + 1);
      tok = tok.substr(0, at);
      parent = -1;
      for (std::size_t i = 0; i < out.names.size(); ++i)
        if (out.names[i] == host) parent = static_cast<int>(i);
      if (parent < 0) throw std::logic_error("shape refers to unknown vertex " + host);
    }
    out.names.push_back(tok);
    out.attach.push_back(parent);
  }
  return out;
}

// The small tree a table describes, for checking rows in isolation.
inline Tree shape_tree(const ParsedShape& s) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < s.names.size(); ++i)
    edges.emplace_back(s.attach[i], static_cast<Vertex>(i));
  return Tree(static_cast<int>(s.names.size()), edges);
}

// ---------------------------------------------------------------------------
// Plans

struct PlanPart {
  std::vector<Vertex> keep;          // host vertices of the smaller tree
  std::optional<Weight> gadget;      // hung from graft_at
  Vertex graft_at = -1;
  Vertex anchor = -1;                // mirrored so its label lands in anchor_mask
  unsigned anchor_mask = 0;
  bool flip_free = false;            // both orientations may be tried
};

struct PlanHint {
  Vertex host = -1;
  bool use_major = false;  // match the gadget's z1 label instead of z0
};

struct Plan {
  std::vector<PlanPart> parts;
  std::vector<Vertex> relabel;  // kept vertices whose labels may change
  std::vector<std::string> tables;
  std::vector<PlanHint> hints;
  bool direct = false;  // small enough to label in one search
};

struct LabelerStats {
  std::map<std::string, int> cases;
  int base = 0;        // |V3| <= 2 or no major vertex: exact search
  int direct = 0;
  int table = 0;       // a table row fitted
  int completion = 0;  // no row fitted, completion with kept labels pinned
  int widened = 0;     // completion after freeing the neighbourhood
  int fallback = 0;    // whole-tree search
  std::map<std::string, int> tables_used;      // per table key, when a row fitted
  std::map<std::string, int> completed_cases;  // per configuration, when no row fitted

  void merge(const LabelerStats& o) {
    for (auto& [k, v] : o.cases) cases[k] += v;
    for (auto& [k, v] : o.tables_used) tables_used[k] += v;
    for (auto& [k, v] : o.completed_cases) completed_cases[k] += v;
    base += o.base;
    direct += o.direct;
    table += o.table;
    completion += o.completion;
    widened += o.widened;
    fallback += o.fallback;
  }
};

namespace detail {

inline Vertex resolve(const ConfigInstance& c, const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'p' || name[0] == 'q') &&
      std::isdigit(static_cast<unsigned char>(name[1]))) {
    const auto& s = c.path(std::string(1, name[0]));
    std::size_t i = std::stoul(name.substr(1));
    if (i < 1 || i > s.size()) throw std::out_of_range("no vertex " + name);
    return s[i - 1];
  }
  return c[name];
}

inline unsigned mask_of(std::initializer_list<int> ls) {
  unsigned m = 0;
  for (int l : ls) m |= 1u << l;
  return m;
}

inline Plan make_plan(const Tree& t, const ConfigInstance& c) {
  auto V = [&](const std::string& n) { return resolve(c, n); };
  auto side = [&](const std::string& a, const std::string& b) { return side_of(t, V(a), V(b)); };
  auto all_but = [&](std::initializer_list<Vertex> drop) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < t.size(); ++v)
      if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
    return out;
  };
  auto cut = [&](std::vector<Vertex> keep, const std::string& anchor, unsigned mask) {
    PlanPart p;
    p.keep = std::move(keep);
    p.anchor = V(anchor);
    p.anchor_mask = mask;
    return p;
  };
  auto grafted = [&](const std::string& at, const std::string& toward, int weight) {
    PlanPart p;
    p.keep = side(at, toward);
    p.gadget = Weight(weight);
    p.graft_at = V(at);
    p.anchor = V(at);
    p.anchor_mask = mask_of({0});
    return p;
  };
  auto names = [&](std::initializer_list<const char*> ns) {
    std::vector<Vertex> out;
    for (const char* n : ns) out.push_back(V(n));
    return out;
  };
  auto hint = [&](const std::string& n, bool major = false) { return PlanHint{V(n), major}; };
  const unsigned zero = mask_of({0});
  const std::string& tag = c.tag;
  const int k = c.k;
  Plan p;

  if (tag == "C1") {
    PlanPart left = cut(side("x1", "x2"), "u", zero);
    PlanPart right;
    right.keep = side("x7", "x6");
    right.flip_free = true;
    p.parts = {left, right};
    p.tables = {"C1"};
  } else if (tag == "C2") {
    PlanPart all;
    all.keep = all_but({V("u")});
    p.parts = {all};
  } else if (tag == "C3") {
    if (k == 1) {
      p.parts = {cut(all_but({V("u.leaf1"), V("u.leaf2")}), "v", zero)};
      p.relabel = names({"y", "u"});
      p.tables = {"C3.1"};
    } else if (k == 2 || k == 3 || k == 4) {
      const int weight = k == 2 ? 2 : k == 3 ? 6 : 5;
      const std::string near = "x" + std::to_string(k);
      p.parts = {grafted("w", near, weight)};
      if (k != 3) p.hints = {hint(near)};
      p.tables = {"C3." + std::to_string(k)};
    } else {
      p.parts = {cut(side("x5", "x4"), "w", k == 5 ? zero : mask_of({4}))};
      p.tables = {"C3." + std::to_string(k)};
    }
  } else if (tag == "C4.1") {
    p.parts = {cut(side("x2", "x1"), "v", zero)};
    p.tables = {"C4.1"};
  } else if (tag == "C4.2") {
    p.parts = {k == 4 ? cut(side("x4", "x3"), "v", zero)
                      : cut(side("x4", "x3"), "x5", mask_of({0, 1, 2}))};
    p.tables = {"C4.2"};
  } else if (tag == "C5.1") {
    p.parts = {cut(side("x3", "x2"), "v", zero)};
    p.relabel = names({"y", "x3"});
    p.tables = {"C5.1"};
  } else if (tag == "C5.2") {
    if (k < 0) {
      p.direct = true;
    } else if (k == 1) {
      p.parts = {cut(side("x3", "x2"), "v", zero)};
      p.tables = {"C5.2-1"};
    } else {
      const int weight = k == 2 ? 6 : k == 4 ? 5 : k == 5 ? 2 : 3;
      const std::string near = "p" + std::to_string(k);
      p.parts = {grafted("w", near, weight)};
      if (k != 2) p.hints = {hint(near)};
      p.tables = {"C5.2-" + std::to_string(k)};
    }
  } else if (tag == "C5.3") {
    p.parts = {cut(side("x3", "x2"), "v", zero)};
    p.tables = {"C5.3"};
  } else if (tag == "C5.4") {
    p.parts = {grafted("v", "q3", 6)};
    p.tables = {"C5.4"};
  } else if (tag == "C6.1") {
    p.parts = {cut(side("x", "u"), "v", zero)};
    p.relabel = names({"y", "x"});
    p.tables = {"C6.1"};
  } else if (tag == "C6.2") {
    if (k == 3) {
      p.parts = {cut(side("x", "u"), "v", zero)};
      p.relabel = names({"x", "y"});
      p.tables = {"C6.2"};
    } else {
      const std::string near = "p" + std::to_string(k), next = "p" + std::to_string(k - 1);
      p.parts = {cut(side(near, next), "w", zero)};
      p.tables = {"C6.3-" + std::to_string(k)};
    }
  } else if (tag == "C7.1" || tag == "C7.2") {
    p.parts = {cut(side("x2", "x1"), "w", zero)};
    if (tag == "C7.1") p.relabel = names({"w'", "x2"});
    p.tables = {"C7.1"};
  } else if (tag == "C7.3") {
    const int k2 = c.k2;
    const std::string key = "C7.3-" + std::to_string(k2);
    if (k2 == 0) {
      p.parts = {cut(side("x2", "x1"), "w", zero)};
      p.tables = {key};
    } else if (k2 == 6) {
      p.parts = {cut(side("q6", "q5"), "w''", zero)};
      p.tables = {key, "C7.3x"};
    } else {
      const int weight = k2 == 2 ? 15 : k2 == 3 ? 2 : k2 == 4 ? 6 : 5;
      const std::string near = "q" + std::to_string(k2);
      p.parts = {grafted("w''", near, weight)};
      if (k2 == 3 || k2 == 5) p.hints = {hint(near)};
      p.tables = {key, "C7.3x"};
    }
  } else if (tag == "C7.4") {
    p.parts = {cut(side("q3", "q2"), "w", zero)};
    p.relabel = names({"x2", "x1", "v", "u1", "u", "y", "u.leaf1", "u.leaf2", "q3"});
    p.tables = {"C7.4", "C7.4q"};
  } else if (tag == "C7.5") {
    p.parts = {grafted("w", "x2", 15)};
    p.hints = {hint("x2")};
    p.tables = {"C7.5"};
  } else if (tag == "C8.1") {
    const int k2 = c.k2;
    if (k2 < 0) {
      p.direct = true;
    } else if (k2 <= 1) {
      p.parts = {cut(side("x2", "x1"), "w", zero)};
      p.relabel = names({"x2", "w'"});
      p.tables = {"C8.1-" + std::to_string(k2)};
    } else if (k2 <= 3) {
      const std::string near = "q" + std::to_string(k2);
      p.parts = {grafted("w''", near, k2 == 2 ? 3 : 2)};
      p.hints = {hint(near)};
      p.tables = {"C8.1-" + std::to_string(k2), "C8x"};
    } else {
      p.parts = {k2 == 4 ? cut(side("q4", "q3"), "w''", zero)
                         : cut(side("q4", "q3"), "q5", mask_of({0, 1, 2}))};
      p.tables = {"C8.1-4", "C8x"};
    }
  } else if (tag == "C8.2" || tag == "C8.3") {
    p.parts = {grafted("w", "x2", tag == "C8.2" ? 2 : 5)};
    p.hints = {hint("x2")};
    p.tables = {"C8x"};
  } else if (tag == "C8.4") {
    p.parts = {grafted("w", "x2", 2)};
    p.relabel = names({"q3", "q2", "q1", "w'", "w'.leaf1", "w'.leaf2"});
    p.tables = {"C8.4", "C8x"};
  } else if (tag == "C8.5") {
    p.parts = {grafted("w", "x2", 5)};
    p.relabel = names({"q2", "q1", "w'", "w1", "m2", "w2", "w2.leaf1", "w2.leaf2"});
    p.tables = {"C8.5", "C8x"};
  } else if (tag == "C8.6") {
    throw LabelerError("configuration C8.6 only occurs in bad trees");
  } else if (tag == "C9.1") {
    p.parts = {cut(side("x4", "x3"), "w", zero)};
    p.relabel = names({"x4", "w'"});
    p.tables = {"C9x"};
  } else if (tag == "C9.2") {
    p.parts = {grafted("w", "x4", 15)};
    p.hints = {hint("x4")};
    p.tables = {"C9x"};
  } else if (tag == "C9.3" || tag == "C9.7") {
    p.parts = {grafted("w", "x4", 6)};
    p.hints = {hint("x4", true)};
    p.tables = {"C9x"};
  } else if (tag == "C9.4") {
    p.parts = {cut(side("x4", "x3"), "w", zero)};
    p.relabel = names({"x4", "q3", "q2", "q1", "w'", "w'.leaf1", "w'.leaf2"});
    p.tables = {"C9x", "C9.4q"};
  } else if (tag == "C9.5") {
    p.parts = {cut(side("x4", "x3"), "w", zero)};
    p.relabel = names({"x4", "q2", "q1", "w'", "w1", "m2", "w2", "w2.leaf1", "w2.leaf2"});
    p.tables = {"C9x", "C9.5q"};
  } else if (tag == "C9.6") {
    p.parts = {cut(side("x4", "x3"), "w", zero)};
    p.relabel = names({"x4"});
    p.tables = {"C9x"};
  } else if (tag == "C10") {
    const int weight = k == 3 ? 6 : k == 4 ? 15 : k == 5 ? 3 : 2;
    const std::string near = "x" + std::to_string(k);
    p.parts = {grafted("w", near, weight)};
    if (k != 3) p.hints = {hint(near)};
    p.tables = {"C10-" + std::to_string(k)};
  } else {
    throw LabelerError("no plan for configuration " + tag);
  }
  return p;
}

struct BoundTable {
  std::vector<Vertex> vertices;
  std::vector<std::string> rows;
};

inline std::vector<BoundTable> bind_tables(const ConfigInstance& c,
                                           const std::vector<std::string>& keys) {
  std::vector<BoundTable> out;
  for (const auto& key : keys) {
    bool found = false;
    for (const auto& tab : sequence_tables()) {
      if (tab.key != key) continue;
      found = true;
      BoundTable b;
      for (const auto& n : parse_shape(tab.shape).names) b.vertices.push_back(resolve(c, n));
      b.rows = tab.rows;
      out.push_back(std::move(b));
    }
    if (!found) throw LabelerError("missing sequence table " + key);
  }
  return out;
}

struct PartLabels {
  std::vector<Vertex> origin;
  std::vector<int> labels;
  int z0 = -1;  // gadget labels, if grafted
  int z1 = -1;
};

inline Labeling label_recursive(const Tree& t, LabelerStats& stats, int depth);

// Puts the removed piece back. Returns nullopt if nothing in the plan fits.
inline std::optional<Labeling> extend(const Tree& t, const Plan& plan, const ConfigInstance& c,
                                      std::vector<PartLabels> parts, LabelerStats& stats) {
  const int n = t.size();
  std::vector<char> mutable_(n, 0);
  for (Vertex v : plan.relabel) mutable_[v] = 1;
  const auto tables = bind_tables(c, plan.tables);

  // Anchors first: mirror a part if its anchor label is off target.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const PlanPart& pp = plan.parts[i];
    if (pp.anchor < 0) continue;
    auto& pl = parts[i];
    int pos = -1;
    for (std::size_t j = 0; j < pl.origin.size(); ++j)
      if (pl.origin[j] == pp.anchor) pos = static_cast<int>(j);
    if (pos < 0) throw LabelerError("anchor not in its part");
    if (!((pp.anchor_mask >> pl.labels[pos]) & 1u)) {
      for (int& l : pl.labels) l = 4 - l;
      if (pl.z0 >= 0) pl.z0 = 4 - pl.z0;
      if (pl.z1 >= 0) pl.z1 = 4 - pl.z1;
    }
    if (!((pp.anchor_mask >> pl.labels[pos]) & 1u))
      throw LabelerError("anchor " + std::to_string(pp.anchor) + " has label " +
                         std::to_string(pl.labels[pos]) + " which no mirror fixes");
  }

  std::vector<std::size_t> flips;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (plan.parts[i].flip_free) flips.push_back(i);

  auto solve = [&](const std::vector<int>& fixed, const std::vector<char>& is_free,
                   const std::map<Vertex, int>& row) -> std::optional<Labeling> {
    LabelMasks masks(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      auto it = row.find(v);
      if (it != row.end()) masks[v] = 1u << it->second;
      else if (!is_free[v] && fixed[v] >= 0) masks[v] = 1u << fixed[v];
    }
    return label_with_span(t, 4, masks);
  };

  // Rows in every orientation first, then completion in every orientation.
  const unsigned orientations = 1u << flips.size();
  for (unsigned step = 0; step < 2 * orientations; ++step) {
    const unsigned phase = step / orientations, flip = step % orientations;
    std::vector<int> fixed(n, -1);
    std::map<Vertex, int> hinted;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      bool mirror = false;
      for (std::size_t f = 0; f < flips.size(); ++f)
        if (flips[f] == i && ((flip >> f) & 1u)) mirror = true;
      for (std::size_t j = 0; j < parts[i].origin.size(); ++j)
        if (parts[i].origin[j] >= 0)
          fixed[parts[i].origin[j]] = mirror ? 4 - parts[i].labels[j] : parts[i].labels[j];
      for (const auto& h : plan.hints) {
        int l = h.use_major ? parts[i].z1 : parts[i].z0;
        if (l >= 0) hinted[h.host] = mirror ? 4 - l : l;
      }
    }
    std::vector<char> is_free(n, 0);
    for (Vertex v = 0; v < n; ++v) is_free[v] = fixed[v] < 0 || mutable_[v];

    // Rows: every combination across the plan's tables, hinted ones first.
    for (int pass = 0; pass < 2 && phase == 0 && !tables.empty(); ++pass) {
      std::vector<std::size_t> pick(tables.size(), 0);
      while (true) {
        std::map<Vertex, int> row;
        bool ok = true;
        for (std::size_t ti = 0; ti < tables.size() && ok; ++ti) {
          const auto& tb = tables[ti];
          const std::string& r = tb.rows[pick[ti]];
          for (std::size_t j = 0; j < tb.vertices.size() && ok; ++j) {
            const Vertex v = tb.vertices[j];
            if (r[j] == '*' && fixed[v] < 0) continue;
            const int l = r[j] == '*' ? fixed[v] : r[j] - '0';
            auto [it, fresh] = row.emplace(v, l);
            if (!fresh && it->second != l) ok = false;
            if (!is_free[v] && fixed[v] != l) ok = false;
            if (r[j] == '*') continue;
            if (pass == 0) {
              auto h = hinted.find(v);
              if (h != hinted.end() && h->second != l) ok = false;
            }
          }
        }
        if (ok)
          if (auto f = solve(fixed, is_free, row)) {
            ++stats.table;
            for (const auto& key : plan.tables) ++stats.tables_used[key];
            return f;
          }
        std::size_t ti = 0;
        while (ti < tables.size() && ++pick[ti] == tables[ti].rows.size()) pick[ti++] = 0;
        if (ti == tables.size()) break;
      }
    }
    if (phase == 0) continue;
    if (auto f = solve(fixed, is_free, {})) {
      ++stats.completion;
      if (!plan.tables.empty()) ++stats.completed_cases[c.tag];
      return f;
    }
  }

  // Free the distance-2 neighbourhood of everything that was free.
  std::vector<int> fixed(n, -1);
  for (const auto& pl : parts)
    for (std::size_t j = 0; j < pl.origin.size(); ++j)
      if (pl.origin[j] >= 0) fixed[pl.origin[j]] = pl.labels[j];
  std::vector<char> is_free(n, 0);
  for (Vertex v = 0; v < n; ++v) is_free[v] = fixed[v] < 0 || mutable_[v];
  for (int round = 0; round < 2; ++round) {
    std::vector<char> grow = is_free;
    for (Vertex v = 0; v < n; ++v)
      if (is_free[v])
        for (Vertex y : t.neighbors(v)) grow[y] = 1;
    is_free = grow;
  }
  if (auto f = solve(fixed, is_free, {})) {
    ++stats.widened;
    ++stats.completed_cases[c.tag];
    return f;
  }
  return std::nullopt;
}

inline Labeling base_labeling(const Tree& t) {
  auto f = label_with_span(t, 4);
  if (!f) throw LabelerError("tree has no span-4 labeling");
  return *f;
}

inline Labeling label_recursive(const Tree& t, LabelerStats& stats, int depth) {
  if (t.max_degree() < 3 || t.vertices_of_degree(3).size() <= 2) {
    ++stats.base;
    return base_labeling(t);
  }
  const ConfigInstance c = find_configuration(t);
  ++stats.cases[c.tag];
  const Plan plan = make_plan(t, c);
  if (plan.direct) {
    ++stats.direct;
    return base_labeling(t);
  }

  std::vector<PartLabels> parts;
  for (const PlanPart& pp : plan.parts) {
    PartLabels pl;
    Tree small;
    if (pp.gadget) {
      Grafted g = graft(t, pp.keep, pp.graft_at, gadget_for_weight(*pp.gadget));
      small = g.tree;
      pl.origin = g.origin;
      Labeling f = label_recursive(small, stats, depth + 1);
      pl.labels = f.labels;
      pl.z0 = f[g.z0];
      pl.z1 = g.z1 >= 0 ? f[g.z1] : -1;
    } else {
      Subtree s = induced_subtree(t, pp.keep);
      small = s.tree;
      pl.origin = s.origin;
      pl.labels = label_recursive(small, stats, depth + 1).labels;
    }
    if (small.size() >= t.size())
      throw LabelerError(c.tag + " did not shrink the tree");
    parts.push_back(std::move(pl));
  }

  if (auto f = extend(t, plan, c, std::move(parts), stats)) return *f;
  ++stats.fallback;
  return base_labeling(t);
}

}  // namespace detail

// Span-4 labeling of a good tree, built by the configuration recursion.
// Throws LabelerError for trees without one (bad trees, or Δ > 3 trees).
inline Labeling label_good_tree(const Tree& t, LabelerStats* stats = nullptr) {
  if (t.max_degree() > 3) throw LabelerError("labeler needs max degree <= 3");
  if (t.max_degree() == 3 && decide_lambda(t).lambda != 4)
    throw LabelerError("tree is bad: no span-4 labeling exists");
  LabelerStats local;
  Labeling f = detail::label_recursive(t, local, 0);
  if (!verify_labeling(t, f)) throw LabelerError("internal: produced an invalid labeling");
  if (stats) stats->merge(local);
  return f;
}

}  // namespace l21
