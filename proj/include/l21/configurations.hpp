#pragma once

// Detector for the local configurations every good tree with at least three
// major vertices contains. Each match carries named bindings so the labeler
// can act on it. Names follow the usual picture of each configuration:
// v is the central major vertex, u a major handle hanging off it, y a leaf
// at v, x1..xk the chain from v (or from u) towards w, and so on.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "l21/chain_graph.hpp"

namespace l21 {

struct ConfigInstance {
  std::string tag;
  std::map<std::string, Vertex> at;
  std::map<std::string, std::vector<Vertex>> seq;  // chains, listed from a named end
  int k = -1;   // length of the variable chain at v, if any
  int k2 = -1;  // length of the third chain at w (C7.3, C8.1); -1 if open

  Vertex operator[](const std::string& name) const {
    auto it = at.find(name);
    if (it == at.end()) throw std::out_of_range("no binding named " + name);
    return it->second;
  }
  const std::vector<Vertex>& path(const std::string& name) const { return seq.at(name); }
};

class ConfigurationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Fixed priority of configuration families.
inline const std::vector<std::string>& configuration_order() {
  static const std::vector<std::string> order{
      "C1",   "C2",   "C3",   "C4.1", "C4.2", "C5.1", "C5.2", "C5.3", "C5.4", "C6.1",
      "C6.2", "C7.1", "C7.2", "C7.3", "C7.4", "C7.5", "C8.1", "C8.2", "C8.3", "C8.4",
      "C8.5", "C8.6", "C9.1", "C9.2", "C9.3", "C9.4", "C9.5", "C9.6", "C9.7", "C10"};
  return order;
}

namespace detail {

class Matcher {
 public:
  explicit Matcher(const Tree& t) : t_(t), g_(decompose(t)) {
    majors_ = t.vertices_of_degree(3);
  }

  std::optional<ConfigInstance> find() const {
    if (auto c = c1()) return c;
    if (auto c = c2()) return c;
    for (const std::string& tag : configuration_order()) {
      if (tag == "C1" || tag == "C2") continue;
      for (Vertex v : majors_)
        if (auto c = at(tag, v)) return c;
    }
    return std::nullopt;
  }

 private:
  bool handle(Vertex x) const { return t_.is_major_handle(x); }

  std::vector<Vertex> leaves_of(Vertex x) const {
    std::vector<Vertex> out;
    for (Vertex y : t_.neighbors(x))
      if (t_.is_leaf(y)) out.push_back(y);
    return out;
  }

  // Chain ends at major v other than `skip` (a chain index).
  std::vector<const ChainEnd*> arms(Vertex v, int skip = -1) const {
    std::vector<const ChainEnd*> out;
    for (const auto& e : g_.ends(v))
      if (e.chain != skip) out.push_back(&e);
    return out;
  }

  const ChainEnd* closed_to_handle(Vertex v, int k, int skip = -1, int skip2 = -1) const {
    for (auto* e : arms(v, skip))
      if (e->chain != skip2 && e->is_closed() && e->length == k && handle(e->other)) return e;
    return nullptr;
  }

  const ChainEnd* open0(Vertex v, int skip = -1) const {
    for (auto* e : arms(v, skip))
      if (e->is_open() && e->length == 0) return e;
    return nullptr;
  }

  const ChainEnd* third(Vertex v, int a, int b) const {
    for (auto* e : arms(v))
      if (e->chain != a && e->chain != b) return e;
    return nullptr;
  }

  void bind_handle(ConfigInstance& c, const std::string& name, Vertex h) const {
    c.at[name] = h;
    auto ls = leaves_of(h);
    for (std::size_t i = 0; i < ls.size() && i < 2; ++i)
      c.at[name + ".leaf" + std::to_string(i + 1)] = ls[i];
  }

  std::optional<ConfigInstance> c1() const {
    for (Vertex u : majors_)
      for (const auto& e : g_.ends(u))
        if (e.length >= 7) {
          ConfigInstance c{"C1"};
          c.at["u"] = u;
          c.seq["x"] = std::vector<Vertex>(e.path.begin(), e.path.begin() + 7);
          c.at["v"] = e.length > 7 ? e.path[7] : e.other;
          return c;
        }
    return std::nullopt;
  }

  std::optional<ConfigInstance> c2() const {
    for (Vertex u = 0; u < t_.size(); ++u)
      if (t_.is_leaf(u) && t_.degree(t_.neighbors(u)[0]) == 2) {
        Vertex v = t_.neighbors(u)[0];
        ConfigInstance c{"C2"};
        c.at["u"] = u;
        c.at["v"] = v;
        c.at["w"] = t_.neighbors(v)[0] == u ? t_.neighbors(v)[1] : t_.neighbors(v)[0];
        return c;
      }
    return std::nullopt;
  }

  std::optional<ConfigInstance> at(const std::string& tag, Vertex v) const {
    if (tag == "C3") return c3(v);
    if (tag.rfind("C4", 0) == 0) return c4(tag, v);
    if (tag.rfind("C5", 0) == 0) return c5(tag, v);
    if (tag.rfind("C6", 0) == 0) return c6(tag, v);
    if (tag.rfind("C7", 0) == 0 || tag.rfind("C8", 0) == 0 || tag.rfind("C9", 0) == 0)
      return c789(tag, v);
    if (tag == "C10") return c10(v);
    return std::nullopt;
  }

  std::optional<ConfigInstance> c3(Vertex v) const {
    auto* hu = closed_to_handle(v, 0);
    auto* y = open0(v);
    if (!hu || !y) return std::nullopt;
    auto* p = third(v, hu->chain, y->chain);
    if (!p || !p->is_closed() || p->length < 1 || p->length > 6) return std::nullopt;
    ConfigInstance c{"C3"};
    c.at["v"] = v;
    bind_handle(c, "u", hu->other);
    c.at["y"] = y->other;
    c.at["w"] = p->other;
    c.seq["x"] = p->path;
    c.k = p->length;
    return c;
  }

  // u is the handle; v the far end.
  std::optional<ConfigInstance> c4(const std::string& tag, Vertex u) const {
    if (!handle(u)) return std::nullopt;
    for (const auto& e : g_.ends(u)) {
      if (!e.is_closed()) continue;
      bool hit = tag == "C4.1" ? e.length == 2 : (e.length >= 4 && e.length <= 6);
      if (!hit) continue;
      ConfigInstance c{tag};
      bind_handle(c, "u", u);
      c.at["v"] = e.other;
      c.seq["x"] = e.path;  // x1 next to u
      c.k = e.length;
      return c;
    }
    return std::nullopt;
  }

  std::optional<ConfigInstance> c5(const std::string& tag, Vertex v) const {
    for (auto* hu : arms(v)) {
      if (!hu->is_closed() || hu->length != 3 || !handle(hu->other)) continue;
      ConfigInstance c{tag};
      c.at["v"] = v;
      bind_handle(c, "u", hu->other);
      // x1 next to u, x3 next to v
      c.seq["x"] = std::vector<Vertex>(hu->path.rbegin(), hu->path.rend());
      const ChainEnd* q = nullptr;
      if (tag == "C5.1") q = open0(v, hu->chain);
      if (tag == "C5.2") q = closed_to_handle(v, 0, hu->chain);
      if (tag == "C5.3") q = closed_to_handle(v, 1, hu->chain);
      if (tag == "C5.4") q = closed_to_handle(v, 3, hu->chain);
      if (!q) continue;
      if (q->is_open()) {
        c.at["y"] = q->other;
      } else {
        bind_handle(c, "y", q->other);
      }
      if (tag == "C5.3") c.at["z"] = q->path[0];
      if (tag == "C5.4") c.seq["q"] = std::vector<Vertex>(q->path.rbegin(), q->path.rend());
      if (tag == "C5.2") {
        auto* p = third(v, hu->chain, q->chain);
        if (p->is_open()) {
          c.k = -1;
          c.at["w"] = p->other;
        } else {
          if (p->length < 1 || p->length > 6 || p->length == 3) continue;
          c.at["w"] = p->other;
          c.seq["p"] = p->path;  // p1 next to v
          c.k = p->length;
        }
      }
      return c;
    }
    return std::nullopt;
  }

  // closed 1-chain to a handle, plus an open 0-chain or a closed 0-chain to
  // a handle; returns the remaining chain end.
  struct Core {
    const ChainEnd* hu = nullptr;
    const ChainEnd* second = nullptr;
    const ChainEnd* rest = nullptr;
  };

  std::optional<Core> core(Vertex v, bool second_is_handle) const {
    for (auto* hu : arms(v)) {
      if (!hu->is_closed() || hu->length != 1 || !handle(hu->other)) continue;
      const ChainEnd* s = second_is_handle ? closed_to_handle(v, 0, hu->chain) : open0(v, hu->chain);
      if (!s) continue;
      const ChainEnd* r = third(v, hu->chain, s->chain);
      if (!r || !r->is_closed()) continue;
      return Core{hu, s, r};
    }
    return std::nullopt;
  }

  void bind_core(ConfigInstance& c, Vertex v, const Core& k, bool second_is_handle) const {
    c.at["v"] = v;
    bind_handle(c, "u", k.hu->other);
    c.at["u1"] = k.hu->path[0];
    if (second_is_handle) bind_handle(c, "u'", k.second->other);
    else c.at["y"] = k.second->other;
    c.at["w"] = k.rest->other;
    c.seq["x"] = k.rest->path;  // x1 next to v
    c.k = k.rest->length;
  }

  std::optional<ConfigInstance> c6(const std::string& tag, Vertex v) const {
    auto k = core(v, false);
    if (!k) return std::nullopt;
    int len = k->rest->length;
    bool hit = tag == "C6.1" ? len == 0 : (len == 3 || len == 5 || len == 6);
    if (!hit) return std::nullopt;
    ConfigInstance c{tag};
    bind_core(c, v, *k, false);
    c.at["x"] = c.at["u1"];
    c.seq["p"] = c.seq["x"];  // p1 next to v
    c.seq.erase("x");
    return c;
  }

  std::optional<ConfigInstance> c10(Vertex v) const {
    auto k = core(v, true);
    if (!k || k->rest->length < 3 || k->rest->length > 6) return std::nullopt;
    ConfigInstance c{"C10"};
    bind_core(c, v, *k, true);
    return c;
  }

  // w' has an open 0-chain and a closed 1-chain to a handle besides `via`.
  bool leaf_and_one_chain(Vertex wp, int via, ConfigInstance& c) const {
    auto* leaf = open0(wp, via);
    if (!leaf) return false;
    auto* h = closed_to_handle(wp, 1, via, leaf->chain);
    if (!h) return false;
    c.at["w1"] = leaf->other;
    bind_handle(c, "w2", h->other);
    c.at["m2"] = h->path[0];
    return true;
  }

  bool zero_and_one_chain(Vertex wp, int via, ConfigInstance& c) const {
    auto* h0 = closed_to_handle(wp, 0, via);
    if (!h0) return false;
    auto* h1 = closed_to_handle(wp, 1, via, h0->chain);
    if (!h1) return false;
    bind_handle(c, "w1", h0->other);
    bind_handle(c, "w2", h1->other);
    c.at["m2"] = h1->path[0];
    return true;
  }

  std::optional<ConfigInstance> c789(const std::string& tag, Vertex v) const {
    const char fam = tag[1];
    const int sub = tag[3] - '0';
    auto k = core(v, fam == '8');
    if (!k) return std::nullopt;
    const int want = fam == '9' ? 4 : 2;
    if (k->rest->length != want) return std::nullopt;
    ConfigInstance c{tag};
    bind_core(c, v, *k, fam == '8');
    const Vertex w = k->rest->other;
    const int via = k->rest->chain;
    switch (sub) {
      case 1: {
        auto* e = open0(w, via);
        if (!e) return std::nullopt;
        c.at["w'"] = e->other;
        if (fam == '8') {
          auto* p = third(w, via, e->chain);
          c.at["w''"] = p->other;
          c.seq["q"] = p->path;  // q1 next to w
          c.k2 = p->is_open() ? -1 : p->length;
          if (p->is_closed() && p->length > 6) return std::nullopt;
        }
        return c;
      }
      case 2: {
        auto* e = closed_to_handle(w, 0, via);
        if (!e) return std::nullopt;
        bind_handle(c, "w'", e->other);
        return c;
      }
      case 3: {
        auto* e = closed_to_handle(w, 1, via);
        if (!e) return std::nullopt;
        bind_handle(c, "w'", e->other);
        c.at["m"] = e->path[0];
        if (fam == '7') {
          auto* p = third(w, via, e->chain);
          if (!p->is_closed() || p->length == 1 || p->length > 6) return std::nullopt;
          c.at["w''"] = p->other;
          c.seq["q"] = p->path;  // q1 next to w
          c.k2 = p->length;
        }
        return c;
      }
      case 4: {
        auto* e = closed_to_handle(w, 3, via);
        if (!e) return std::nullopt;
        bind_handle(c, "w'", e->other);
        c.seq["q"] = std::vector<Vertex>(e->path.rbegin(), e->path.rend());  // q1 next to w'
        return c;
      }
      case 5:
      case 6:
      case 7: {
        const int len = sub == 7 ? 4 : 2;
        if (sub == 7 && fam != '9') return std::nullopt;
        for (auto* e : arms(w, via)) {
          if (!e->is_closed() || e->length != len) continue;
          ConfigInstance d = c;
          bind_handle(d, "w'", e->other);
          d.seq["q"] = std::vector<Vertex>(e->path.rbegin(), e->path.rend());  // q1 next to w'
          bool ok = sub == 6 ? zero_and_one_chain(e->other, e->chain, d)
                             : leaf_and_one_chain(e->other, e->chain, d);
          if (ok) return d;
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  const Tree& t_;
  ChainGraph g_;
  std::vector<Vertex> majors_;
};

}  // namespace detail

// First configuration in priority order; nullopt if none matches.
inline std::optional<ConfigInstance> try_find_configuration(const Tree& t) {
  if (t.max_degree() > 3) throw DegreeError("configurations need max degree <= 3");
  return detail::Matcher(t).find();
}

// Throws ConfigurationError if nothing matches.
inline ConfigInstance find_configuration(const Tree& t) {
  auto c = try_find_configuration(t);
  if (!c) throw ConfigurationError("no configuration found in tree on " +
                                   std::to_string(t.size()) + " vertices");
  return *c;
}

}  // namespace l21
