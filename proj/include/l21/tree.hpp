#pragma once

// Undirected trees with dense 0-based vertex ids, the edge-list text format,
// and the subtree-detachment primitives the rest of the library builds on.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace l21 {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public TreeError {
 public:
  ParseError(int line, const std::string& what)
      : TreeError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class Tree {
 public:
  Tree() : adj_(1) {}

  // Throws TreeError unless `edges` forms a spanning tree on n vertices.
  Tree(int n, const std::vector<Edge>& edges, std::string name = {})
      : adj_(static_cast<std::size_t>(std::max(n, 0))), name_(std::move(name)) {
    if (n <= 0) throw TreeError("a tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
      throw TreeError("expected " + std::to_string(n - 1) + " edges, got " +
                      std::to_string(edges.size()));
    std::vector<Vertex> root(adj_.size());
    for (std::size_t i = 0; i < root.size(); ++i) root[i] = static_cast<Vertex>(i);
    auto find = [&](Vertex x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw TreeError("vertex index out of range in edge " + std::to_string(a) + " " +
                        std::to_string(b));
      if (a == b) throw TreeError("self-loop at " + std::to_string(a));
      Vertex ra = find(a), rb = find(b);
      if (ra == rb) throw TreeError("cycle detected at edge " + std::to_string(a) + " " +
                                    std::to_string(b));
      root[ra] = rb;
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int size() const noexcept { return static_cast<int>(adj_.size()); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || a >= size() || b < 0 || b >= size()) return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  // Edges with a < b, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(adj_.size());
    for (Vertex a = 0; a < size(); ++a)
      for (Vertex b : adj_[a])
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  std::vector<Vertex> vertices_of_degree(int k) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v)
      if (degree(v) == k) out.push_back(v);
    return out;
  }

  bool is_leaf(Vertex v) const { return degree(v) == 1; }

  // d(v) > 1 and at least d(v)-1 neighbours are leaves.
  bool is_handle(Vertex v) const {
    int d = degree(v);
    if (d <= 1) return false;
    int leaves = 0;
    for (Vertex x : adj_[v]) leaves += is_leaf(x) ? 1 : 0;
    return leaves >= d - 1;
  }

  bool is_major_handle(Vertex v) const { return degree(v) == 3 && is_handle(v); }

  friend bool operator==(const Tree& a, const Tree& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::string name_;
};

enum class Role { leaf, two_vertex, major, other };

inline Role role_of(const Tree& t, Vertex v) {
  switch (t.degree(v)) {
    case 1: return Role::leaf;
    case 2: return Role::two_vertex;
    case 3: return Role::major;
    default: return Role::other;
  }
}

// A tree cut out of a host tree. origin[i] is the host id of local vertex i,
// or -1 for vertices that do not exist in the host (grafted gadgets).
struct Subtree {
  Tree tree;
  std::vector<Vertex> origin;

  std::optional<Vertex> local_of(Vertex host) const {
    for (std::size_t i = 0; i < origin.size(); ++i)
      if (origin[i] == host) return static_cast<Vertex>(i);
    return std::nullopt;
  }
};

// ---------------------------------------------------------------------------
// Edge-list text format

inline Tree parse_tree(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<int> n;
  std::vector<Edge> edges;
  std::vector<Vertex> parent;
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError(line_no, "malformed token '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError(line_no, "malformed token '" + tok + "'");
      nums.push_back(value);
    }
    if (nums.empty()) continue;
    if (!n) {
      if (nums.size() != 1 || nums[0] < 1 || nums[0] > 100'000'000)
        throw ParseError(line_no, "expected a single positive vertex count");
      n = static_cast<int>(nums[0]);
      parent.resize(static_cast<std::size_t>(*n));
      for (int i = 0; i < *n; ++i) parent[i] = i;
      continue;
    }
    if (nums.size() != 2) throw ParseError(line_no, "expected an edge 'u v'");
    for (long long x : nums)
      if (x < 0 || x >= *n)
        throw ParseError(line_no, "vertex index " + std::to_string(x) + " out of range");
    if (nums[0] == nums[1]) throw ParseError(line_no, "self-loop");
    if (static_cast<int>(edges.size()) >= *n - 1)
      throw ParseError(line_no, "cycle detected: more than n-1 edges");
    Vertex a = find(static_cast<Vertex>(nums[0])), b = find(static_cast<Vertex>(nums[1]));
    if (a == b) throw ParseError(line_no, "cycle detected");
    parent[a] = b;
    edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!n) throw ParseError(line_no, "missing vertex count");
  if (static_cast<int>(edges.size()) != *n - 1)
    throw ParseError(line_no, "disconnected input: " + std::to_string(edges.size()) +
                                  " edges for " + std::to_string(*n) + " vertices");
  return Tree(*n, edges);
}

inline Tree parse_tree(const std::string& text) {
  std::istringstream in(text);
  return parse_tree(in);
}

inline std::string serialize_tree(const Tree& t) {
  std::ostringstream out;
  out << t.size();
  for (auto [a, b] : t.edges()) out << '\n' << a << ' ' << b;
  return out.str();
}

// ---------------------------------------------------------------------------
// Subtree primitives

// Host vertices reachable from `start` without entering any vertex in `blocked`.
inline std::vector<Vertex> component_avoiding(const Tree& t, Vertex start,
                                              const std::vector<char>& blocked) {
  std::vector<Vertex> order{start};
  std::vector<char> seen(static_cast<std::size_t>(t.size()), 0);
  seen[start] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex x : t.neighbors(order[i]))
      if (!seen[x] && !blocked[x]) {
        seen[x] = 1;
        order.push_back(x);
      }
  return order;
}

// Vertex set of the component of t - uv that contains v.
inline std::vector<Vertex> side_of(const Tree& t, Vertex v, Vertex u) {
  if (!t.has_edge(u, v))
    throw TreeError(std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  std::vector<char> blocked(static_cast<std::size_t>(t.size()), 0);
  blocked[u] = 1;
  return component_avoiding(t, v, blocked);
}

// Induced subgraph on `keep`, which must be connected. Local ids follow the
// order of `keep`.
inline Subtree induced_subtree(const Tree& t, const std::vector<Vertex>& keep) {
  if (keep.empty()) throw TreeError("empty vertex set");
  std::vector<int> local(static_cast<std::size_t>(t.size()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= t.size()) throw TreeError("vertex out of range");
    if (local[keep[i]] != -1) throw TreeError("duplicate vertex in set");
    local[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : t.edges())
    if (local[a] != -1 && local[b] != -1) edges.emplace_back(local[a], local[b]);
  if (edges.size() + 1 != keep.size()) throw TreeError("vertex set is not connected");
  return Subtree{Tree(static_cast<int>(keep.size()), edges), keep};
}

// T_{vu}(v): the component of t - uv containing v. With include_anchor the
// anchor u and the edge uv are kept as well (T_u(uv)); u is then the last
// local vertex.
inline Subtree detach(const Tree& t, Vertex v, Vertex u, bool include_anchor = false) {
  auto part = side_of(t, v, u);
  if (include_anchor) part.push_back(u);
  return induced_subtree(t, part);
}

inline bool is_connected_set(const Tree& t, const std::vector<Vertex>& set) {
  if (set.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(t.size()), 0);
  for (Vertex v : set) in[v] = 1;
  std::vector<char> blocked(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) blocked[i] = !in[i];
  return component_avoiding(t, set.front(), blocked).size() == set.size();
}

}  // namespace l21
