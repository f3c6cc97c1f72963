// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "printed_table.hpp"
#include "l21/l21.hpp"
#include "l21/sweep.hpp"

using namespace l21;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* what, const std::function<Outcome()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d: %s; %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, what,
              o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

const int kSweepMin = 4, kSweepMax = 13;

const std::vector<Tree>& corpus() {
  static const std::vector<Tree> trees = sweep_corpus(kSweepMin, kSweepMax);
  return trees;
}

const std::vector<int>& exact() {
  static const std::vector<int> ls = [] {
    std::vector<int> out;
    for (const Tree& t : corpus()) out.push_back(lambda_exact(t));
    return out;
  }();
  return ls;
}

std::string count(const char* label, long n) { return std::string(label) + "=" + std::to_string(n); }

Outcome differential() {
  const auto rs = run_sweep(corpus());
  const SweepSummary s = summarize(rs);
  std::ostringstream d;
  d << "trees=" << s.trees << " good=" << s.good << " bad=" << s.bad
    << " disagreements=" << s.disagreements;
  return {s.disagreements == 0 && s.trees > 0, d.str()};
}

Outcome constructive() {
  long good = 0, failed = 0;
  LabelerStats st;
  for (const Tree& t : corpus()) {
    if (decide_lambda(t).lambda != 4) continue;
    ++good;
    try {
      Labeling f = label_good_tree(t, &st);
      if (f.span != 4 || !verify_labeling(t, f)) ++failed;
    } catch (const std::exception&) {
      ++failed;
    }
  }
  std::ostringstream d;
  d << "good=" << good << " failures=" << failed << " table=" << st.table
    << " completion=" << st.completion << " fallback=" << st.fallback;
  return {failed == 0 && good > 0, d.str()};
}

Outcome necessity() {
  long bad = 0, violations = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const Tree& t = corpus()[i];
    if (exact()[i] != 4 && exact()[i] != 5) ++violations;
    if (decide_lambda(t).lambda != 5) continue;
    ++bad;
    if (label_with_span(t, 4)) ++violations;
    auto f = label_with_span(t, 5);
    if (!f || !verify_labeling(t, *f)) ++violations;
  }
  return {violations == 0 && bad > 0, count("bad", bad) + " " + count("violations", violations)};
}

Outcome anchor_law() {
  long trees = 0, labelings = 0, counterexamples = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const Tree& t = corpus()[i];
    if (t.size() > 10 || exact()[i] != 4) continue;
    ++trees;
    const auto majors = t.vertices_of_degree(3);
    labelings += enumerate_labelings(t, 4, [&](const Labeling& f) {
      for (Vertex v : majors)
        if (f[v] != 0 && f[v] != 4) ++counterexamples;
      return true;
    });
  }
  std::ostringstream d;
  d << "trees=" << trees << " labelings=" << labelings << " counterexamples=" << counterexamples;
  return {counterexamples == 0 && trees > 0, d.str()};
}

// Random good trees with at most 40 vertices: uniform attachment and
// chain-structured ones alternately.
std::vector<Tree> random_good_trees(int want) {
  std::vector<Tree> out;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < want; ++seed) {
    Tree t = seed % 2 ? random_tree(10 + static_cast<int>(seed % 31), 3, seed)
                      : fixtures::chain_tree(seed, 3 + static_cast<int>(seed % 5));
    if (t.size() > 40 || t.max_degree() != 3) continue;
    if (decide_lambda(t).lambda == 4) out.push_back(std::move(t));
  }
  return out;
}

Outcome weight_semantics() {
  long checks = 0, mismatches = 0;
  for (const Tree& t : random_good_trees(200)) {
    ChainGraph g = decompose(t);
    WeightAssignment wa = assign_weights(g);
    for (Vertex v : g.majors())
      for (const ChainEnd& e : g.ends(v)) {
        const Vertex probe = e.path.empty() ? e.other : e.path.front();
        Subtree k = detach(t, probe, v, true);
        const Weight w = wa.arc_weight[e.arc_in];
        ++checks;
        if (w.value() == 0 ||
            sset(k.tree, *k.local_of(v), *k.local_of(probe)) != weight_to_labelset(w))
          ++mismatches;
      }
  }
  return {mismatches == 0 && checks > 0,
          "trees=200 " + count("chain_ends", checks) + " " + count("mismatches", mismatches)};
}

Outcome table_coverage() {
  long cells = 0, wrong = 0;
  for (const auto& c : printed::kCells) {
    const int last = c.plus ? c.k + 10 : c.k;
    for (int k = c.k; k <= last; ++k) {
      ++cells;
      if (give_weight({Weight(c.cls), k}) != Weight(c.weight)) ++wrong;
    }
  }
  long lib_cells = static_cast<long>(transition_table().size());
  if (lib_cells != static_cast<long>(printed::kCells.size())) ++wrong;
  for (const auto& b : printed::kBranches)
    if (chain_type(Weight(b.a), Weight(b.b), 3).cls != Weight(b.cls)) ++wrong;
  if (give_weight_short(0) != Weight(6) || give_weight_short(1) != Weight(15)) ++wrong;
  std::ostringstream d;
  d << "printed_cells=" << printed::kCells.size() << " library_cells=" << lib_cells
    << " branches=" << printed::kBranches.size() << " mismatches=" << wrong;
  return {wrong == 0, d.str()};
}

Outcome badness_transfer() {
  long chains = 0, violations = 0;
  for (const Tree& t : corpus()) {
    ChainGraph g = decompose(t);
    WeightAssignment wa = assign_weights(g);
    std::vector<char> bad(t.size(), 0);
    for (const auto& c : find_bad_vertices(g, wa)) bad[c.vertex] = 1;
    for (std::size_t ci = 0; ci < g.chains().size(); ++ci) {
      const Chain& ch = g.chains()[ci];
      if (ch.kind != ChainKind::closed || ch.length() < 2) continue;
      bool positive = true;
      for (Vertex end : {ch.u, ch.v})
        for (const auto& r : wa.received[end]) positive = positive && r.weight.value() > 0;
      if (!positive) continue;
      ++chains;
      if (bad[ch.u] != bad[ch.v]) ++violations;
    }
  }
  return {violations == 0 && chains > 0,
          count("closed_chains", chains) + " " + count("violations", violations)};
}

Outcome strong_subtrees() {
  std::vector<const Tree*> good;
  for (const Tree& t : corpus())
    if (decide_lambda(t).lambda == 4) good.push_back(&t);
  long checked = 0, violations = 0, skipped = 0;
  for (std::uint64_t seed = 0; checked < 500; ++seed) {
    const Tree& t = *good[seed % good.size()];
    Subtree s = random_strong_subtree(t, seed);
    if (s.tree.max_degree() != 3) {
      // paths and single vertices have span at most 4 trivially
      ++skipped;
      if (s.tree.size() > 1 && lambda_exact(s.tree) > 4) ++violations;
      continue;
    }
    ++checked;
    if (decide_lambda(s.tree).lambda != 4) ++violations;
  }
  return {violations == 0,
          count("subtrees", checked) + " " + count("degree_below_3_skipped", skipped) + " " +
              count("violations", violations)};
}

Outcome configuration_completeness() {
  long checked = 0, missing = 0;
  for (const Tree& t : corpus()) {
    if (t.vertices_of_degree(3).size() < 3 || decide_lambda(t).lambda != 4) continue;
    ++checked;
    if (!try_find_configuration(t)) ++missing;
  }
  return {missing == 0 && checked > 0, count("trees", checked) + " " + count("none", missing)};
}

}  // namespace

int main() {
  report(1, "decider matches exact lambda on all trees n=4..13", differential);
  report(2, "constructive labeler gives valid span-4 labelings of good trees", constructive);
  report(3, "bad trees need exactly span 5; lambda in {4,5}", necessity);
  report(4, "every span-4 labeling puts majors on 0 or 4 (n<=10)", anchor_law);
  report(5, "anchored-subtree label sets equal weight label sets", weight_semantics);
  report(6, "transition table cells, typing branches and short-chain rules", table_coverage);
  report(7, "badness transfers across closed chains with positive weights", badness_transfer);
  report(8, "random strong subtrees of good trees are good", strong_subtrees);
  report(9, "configuration found in every good tree with 3+ majors", configuration_completeness);
  return failures == 0 ? 0 : 1;
}
