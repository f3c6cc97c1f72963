#pragma once

// Weight propagation over the chain digraph of a max-degree-3 tree.
//
// Every arc delivers a weight from {0,1,2,3,5,6,10,15} to its head. Open
// chains deliver 1, closed 0-chains 6, closed 1-chains 15; a closed chain of
// length k >= 2 is typed by the two weights its tail receives from its other
// chains and then mapped through the transition table below.
//
// A nonzero weight w describes which labels the chain-side neighbour of the
// head can take in span-4 labelings with the head labelled 0: label 2 is
// excluded iff 2 | w, label 3 iff 3 | w, label 4 iff 5 | w.

#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "l21/chain_graph.hpp"

namespace l21 {

class WeightError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Weight {
 public:
  static constexpr std::array<int, 8> kSymbols{0, 1, 2, 3, 5, 6, 10, 15};

  static constexpr bool is_symbol(int value) {
    for (int s : kSymbols)
      if (s == value) return true;
    return false;
  }

  constexpr Weight() = default;
  constexpr explicit Weight(int value) : value_(value) {
    if (!is_symbol(value)) throw WeightError("not a weight symbol: " + std::to_string(value));
  }

  constexpr int value() const noexcept { return value_; }
  constexpr bool positive() const noexcept { return value_ > 0; }
  constexpr bool heavy() const noexcept { return value_ == 6 || value_ == 10 || value_ == 15; }

  friend constexpr bool operator==(Weight, Weight) = default;
  friend constexpr auto operator<=>(Weight a, Weight b) { return a.value_ <=> b.value_; }

 private:
  int value_ = 0;
};

// Subset of the label range {0,...,7}, stored as a bitmask.
class LabelSet {
 public:
  constexpr LabelSet() = default;
  constexpr LabelSet(std::initializer_list<int> labels) {
    for (int l : labels) insert(l);
  }

  constexpr void insert(int label) { bits_ |= static_cast<unsigned>(1u << label); }
  constexpr bool contains(int label) const { return (bits_ >> label) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned bits() const { return bits_; }
  int size() const { return __builtin_popcount(bits_); }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (int l = 0; l < 8; ++l)
      if (contains(l)) out.push_back(l);
    return out;
  }

  // {4 - a : a in this}
  LabelSet mirrored() const {
    LabelSet out;
    for (int l = 0; l <= 4; ++l)
      if (contains(l)) out.insert(4 - l);
    return out;
  }

  std::string str() const {
    std::string s = "{";
    for (int l : labels()) s += (s.size() > 1 ? "," : "") + std::to_string(l);
    return s + "}";
  }

  friend constexpr bool operator==(LabelSet, LabelSet) = default;

 private:
  unsigned bits_ = 0;
};

struct ChainType {
  Weight cls;
  int k = 2;
  friend constexpr bool operator==(const ChainType&, const ChainType&) = default;
};

// Type of a closed chain [u(k)v] from the weights a, b that u receives along
// its other two chains.
inline ChainType chain_type(Weight a, Weight b, int k) {
  if (k < 2) throw WeightError("chain types are defined for k >= 2");
  if (a.value() == 0 || b.value() == 0) return {Weight(0), k};
  const int g = std::gcd(a.value(), b.value());
  if (g == 6 || g == 10 || g == 15) return {Weight(0), k};  // a == b heavy
  if (g == 2 || g == 3 || g == 5) return {Weight(g), k};
  if (a.heavy()) return {a, k};
  if (b.heavy()) return {b, k};
  return {Weight(1), k};
}

namespace detail {

struct TableCell {
  int cls;
  int k_min;
  int k_max;  // kOpenEnded: every k >= k_min
  int weight;
};

inline constexpr int kOpenEnded = 1 << 20;

// Weight given to the head by a closed chain of type (cls, k), k >= 2.
inline constexpr std::array<TableCell, 32> kTransitions{{
    {1, 2, 2, 1}, {1, 4, kOpenEnded, 1}, {2, 7, kOpenEnded, 1}, {3, 7, kOpenEnded, 1},
    {5, 6, kOpenEnded, 1}, {6, 5, kOpenEnded, 1}, {10, 4, kOpenEnded, 1}, {15, 5, kOpenEnded, 1},
    {1, 3, 3, 2}, {2, 5, 5, 2}, {3, 6, 6, 2}, {5, 3, 3, 2}, {6, 2, 2, 2}, {10, 3, 3, 2},
    {15, 3, 3, 2},
    {2, 6, 6, 3}, {3, 5, 5, 3}, {10, 2, 2, 3}, {15, 4, 4, 3},
    {2, 4, 4, 5}, {5, 5, 5, 5}, {6, 4, 4, 5}, {15, 2, 2, 5},
    {2, 2, 2, 6}, {3, 3, 3, 6}, {5, 4, 4, 6}, {6, 3, 3, 6},
    {3, 2, 2, 10},
    {3, 4, 4, 15}, {5, 2, 2, 15},
    {0, 2, kOpenEnded, 0}, {2, 3, 3, 0},
}};

}  // namespace detail

inline const auto& transition_table() { return detail::kTransitions; }

inline Weight give_weight(ChainType t) {
  for (const auto& cell : detail::kTransitions)
    if (cell.cls == t.cls.value() && t.k >= cell.k_min && t.k <= cell.k_max)
      return Weight(cell.weight);
  throw WeightError("no table entry for type (" + std::to_string(t.cls.value()) + "," +
                    std::to_string(t.k) + ")");
}

// Closed 0- and 1-chains carry a fixed weight regardless of type.
inline Weight give_weight_short(int k) {
  if (k == 0) return Weight(6);
  if (k == 1) return Weight(15);
  throw WeightError("fixed weights exist only for k in {0,1}");
}

inline LabelSet weight_to_labelset(Weight w) {
  switch (w.value()) {
    case 1: return {2, 3, 4};
    case 2: return {3, 4};
    case 3: return {2, 4};
    case 5: return {2, 3};
    case 6: return {4};
    case 10: return {3};
    case 15: return {2};
    default: throw WeightError("weight 0 has no label-set meaning");
  }
}

// ---------------------------------------------------------------------------

struct ReceivedWeight {
  int chain = -1;
  int arc = -1;
  Weight weight;
};

struct WeightAssignment {
  std::vector<Weight> arc_weight;               // indexed by arc
  std::vector<std::optional<ChainType>> arc_type;  // closed arcs with k >= 2
  std::vector<std::vector<ReceivedWeight>> received;  // indexed by vertex; majors have 3

  std::vector<Weight> weights_at(Vertex v) const {
    std::vector<Weight> out;
    for (const auto& r : received.at(v)) out.push_back(r.weight);
    return out;
  }
};

enum class Schedule { forward, reverse, shuffled };

class NoMajorVertexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dependency-driven worklist: an arc of length >= 2 fires once its tail has
// received weights along both other chains. The result does not depend on
// the schedule; `schedule` only exists so tests can check that.
inline WeightAssignment assign_weights(const ChainGraph& g, Schedule schedule = Schedule::forward,
                                       std::uint64_t seed = 0) {
  if (g.majors().empty()) throw NoMajorVertexError("weight assignment needs a major vertex");
  const auto& arcs = g.arcs();
  const auto& chains = g.chains();
  const std::size_t m = arcs.size();

  WeightAssignment wa;
  wa.arc_weight.assign(m, Weight(0));
  wa.arc_type.assign(m, std::nullopt);
  wa.received.assign(static_cast<std::size_t>(g.tree().size()), {});
  std::vector<char> done(m, 0);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (schedule == Schedule::reverse) std::reverse(order.begin(), order.end());
  if (schedule == Schedule::shuffled) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  // Arcs of length >= 2 wait for the two weights arriving at their tail
  // along the tail's other chains.
  std::vector<std::array<int, 2>> inputs(m, {-1, -1});
  std::vector<int> pending(m, 0);
  std::vector<std::vector<int>> dependents(m);
  std::vector<int> ready;
  for (int a : order) {
    const Chain& ch = chains[arcs[a].chain];
    if (ch.kind == ChainKind::open || ch.length() <= 1) {
      ready.push_back(a);
      continue;
    }
    int c = 0;
    for (const auto& e : g.ends(arcs[a].tail))
      if (e.chain != arcs[a].chain) {
        if (c == 2) throw WeightError("tail of a closed chain has more than three chains");
        inputs[a][c++] = e.arc_in;
        dependents[e.arc_in].push_back(a);
      }
    if (c != 2) throw WeightError("tail of a closed chain is not a major vertex");
    pending[a] = 2;
  }

  std::size_t fired = 0;
  for (std::size_t i = 0; i < ready.size(); ++i) {
    const int a = ready[i];
    const Chain& ch = chains[arcs[a].chain];
    if (ch.kind == ChainKind::open) {
      wa.arc_weight[a] = Weight(1);
    } else if (ch.length() <= 1) {
      wa.arc_weight[a] = give_weight_short(ch.length());
    } else {
      ChainType t =
          chain_type(wa.arc_weight[inputs[a][0]], wa.arc_weight[inputs[a][1]], ch.length());
      wa.arc_type[a] = t;
      wa.arc_weight[a] = give_weight(t);
    }
    done[a] = 1;
    ++fired;
    for (int d : dependents[a])
      if (--pending[d] == 0) ready.push_back(d);
  }
  if (fired != m) throw WeightError("weight propagation stalled");

  for (Vertex v : g.majors())
    for (const auto& e : g.ends(v))
      wa.received[v].push_back(ReceivedWeight{e.chain, e.arc_in, wa.arc_weight[e.arc_in]});
  return wa;
}

}  // namespace l21
