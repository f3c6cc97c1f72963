#pragma once

// Differential run of the decider against the exact oracle over every
// max-degree-3 tree in a size range.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <thread>
#include <vector>

#include "l21/badness.hpp"
#include "l21/corpus.hpp"
#include "l21/oracle.hpp"

namespace l21 {

struct SweepRecord {
  int n = 0;
  std::string canon;
  int lambda_pred = 0;
  int lambda_exact = 0;
  bool agree = false;
  int certificate_count = 0;
  std::int64_t micros = 0;
};

struct SweepSummary {
  int trees = 0;
  int good = 0;
  int bad = 0;
  int disagreements = 0;
};

inline SweepRecord sweep_one(const Tree& t) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord r;
  r.n = t.size();
  r.canon = canonical_code(t);
  Verdict v = decide_lambda(t);
  r.lambda_pred = v.lambda;
  r.certificate_count = static_cast<int>(v.certificates.size());
  r.lambda_exact = lambda_exact(t);
  r.agree = r.lambda_pred == r.lambda_exact;
  r.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

// Trees with maximum degree exactly 3 on nmin..nmax vertices.
inline std::vector<Tree> sweep_corpus(int nmin, int nmax) {
  std::vector<Tree> out;
  for (int n = std::max(nmin, 4); n <= nmax; ++n)
    for (Tree& t : enumerate_trees(n, 3))
      if (t.max_degree() == 3) out.push_back(std::move(t));
  return out;
}

// Records sorted by (n, canon), whatever the number of workers.
inline std::vector<SweepRecord> run_sweep(const std::vector<Tree>& trees, int jobs = 1) {
  std::vector<SweepRecord> out(trees.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < trees.size();) out[i] = sweep_one(trees[i]);
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::sort(out.begin(), out.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return a.n != b.n ? a.n < b.n : a.canon < b.canon;
  });
  return out;
}

inline SweepSummary summarize(const std::vector<SweepRecord>& rs) {
  SweepSummary s;
  for (const auto& r : rs) {
    ++s.trees;
    (r.lambda_pred == 4 ? s.good : s.bad) += 1;
    if (!r.agree) ++s.disagreements;
  }
  return s;
}

inline nlohmann::ordered_json record_json(const SweepRecord& r, bool timing) {
  nlohmann::ordered_json j{{"n", r.n},
                           {"canon", r.canon},
                           {"lambda_pred", r.lambda_pred},
                           {"lambda_exact", r.lambda_exact},
                           {"agree", r.agree},
                           {"certificate_count", r.certificate_count}};
  if (timing) j["micros"] = r.micros;
  return j;
}

inline nlohmann::ordered_json summary_json(const SweepSummary& s, int nmin, int nmax) {
  return {{"summary",
           {{"nmin", nmin},
            {"nmax", nmax},
            {"trees", s.trees},
            {"good", s.good},
            {"bad", s.bad},
            {"disagreements", s.disagreements}}}};
}

}  // namespace l21
