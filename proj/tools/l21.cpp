// Command-line front end: decide, label, verify, weights, oracle, sweep, gen.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "l21/l21.hpp"
#include "l21/sweep.hpp"

using namespace l21;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, degree = 3, io = 4, internal = 5 };

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot write " + path);
  out << text;
  if (!out) throw IoFailure("write failed for " + path);
}

Tree read_tree(const std::string& path) {
  try {
    return parse_tree(slurp(path));
  } catch (const TreeError& e) {
    throw IoFailure(path + ": " + e.what());
  }
}

int cmd_decide(const std::string& file) {
  Tree t = read_tree(file);
  Verdict v = decide_lambda(t);
  std::optional<ChainGraph> g;
  if (!v.certificates.empty()) g = decompose(t);
  std::cout << verdict_json(v, g ? &*g : nullptr).dump(2) << "\n";
  return ok;
}

int cmd_label(const std::string& file, const std::string& span) {
  Tree t = read_tree(file);
  std::optional<Labeling> f;
  const bool good = t.max_degree() == 3 && decide_lambda(t).lambda == 4;
  if (span == "auto") {
    if (good) f = label_good_tree(t);
    else f = label_with_span(t, lambda_exact(t));
  } else if (span == "4") {
    if (good) f = label_good_tree(t);
    else f = label_with_span(t, 4);
  } else {
    f = label_with_span(t, 5);
  }
  if (!f) {
    std::cerr << "no labeling with span " << span << "\n";
    return failed;
  }
  std::cout << format_labeling(*f);
  return ok;
}

int cmd_verify(const std::string& file, const std::string& labels) {
  Tree t = read_tree(file);
  Labeling f;
  try {
    std::istringstream in(slurp(labels));
    f = parse_labeling(in, t.size());
  } catch (const TreeError& e) {
    throw IoFailure(labels + ": " + e.what());
  }
  auto v = verify_labeling(t, f);
  if (v) {
    std::cout << "valid span " << f.span << "\n";
    return ok;
  }
  std::cout << "invalid: " << v.violation->describe(f) << "\n";
  return failed;
}

int cmd_weights(const std::string& file, const std::string& dot) {
  Tree t = read_tree(file);
  ChainGraph g = decompose(t);
  WeightAssignment wa = assign_weights(g);
  std::cout << weight_lines(g, wa);
  if (!dot.empty()) write_file(dot, chain_graph_dot(g, &wa));
  return ok;
}

int cmd_oracle(const std::string& file) {
  std::cout << "lambda=" << lambda_exact(read_tree(file)) << "\n";
  return ok;
}

int cmd_sweep(int nmin, int nmax, int jobs, const std::string& out, bool timing) {
  const auto records = run_sweep(sweep_corpus(nmin, nmax), jobs);
  std::ostringstream text;
  for (const auto& r : records) text << record_json(r, timing).dump() << "\n";
  const SweepSummary s = summarize(records);
  text << summary_json(s, nmin, nmax).dump() << "\n";
  write_file(out, text.str());
  std::cerr << s.trees << " trees, " << s.disagreements << " disagreements\n";
  return s.disagreements == 0 ? ok : failed;
}

int cmd_gen(int n, std::uint64_t seed, int maxdeg) {
  std::cout << serialize_tree(random_tree(n, maxdeg, seed)) << "\n";
  return ok;
}

int default_jobs() {
  if (const char* env = std::getenv("LAMBDA_TREES_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L(2,1) labeling number of max-degree-3 trees"};
  app.require_subcommand(1);

  std::string file, labels, dot, span = "auto", out;
  int nmin = 4, nmax = 13, jobs = default_jobs(), n = 0, maxdeg = 3;
  std::uint64_t seed = 0;
  bool timing = false;

  auto* decide = app.add_subcommand("decide", "print the verdict as JSON");
  decide->add_option("file", file, "tree file ('-' for stdin)")->required();

  auto* label = app.add_subcommand("label", "print a labeling");
  label->add_option("file", file)->required();
  label->add_option("--span", span)->check(CLI::IsMember({"auto", "4", "5"}));

  auto* verify = app.add_subcommand("verify", "check a labeling; exit 0 iff valid");
  verify->add_option("file", file)->required();
  verify->add_option("labels", labels)->required();

  auto* weights = app.add_subcommand("weights", "print arc weights");
  weights->add_option("file", file)->required();
  weights->add_option("--dot", dot, "also write the chain graph as DOT");

  auto* oracle = app.add_subcommand("oracle", "print the exact lambda");
  oracle->add_option("file", file)->required();

  auto* sweep = app.add_subcommand("sweep", "compare decider and oracle on all trees");
  sweep->add_option("--nmin", nmin)->check(CLI::Range(1, kDefaultEnumerationBound));
  sweep->add_option("--nmax", nmax)->required()->check(CLI::Range(1, kDefaultEnumerationBound));
  sweep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  sweep->add_option("--out", out)->required();
  sweep->add_flag("--timing", timing, "add per-tree micros (output no longer reproducible)");

  auto* gen = app.add_subcommand("gen", "print a random tree");
  gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed)->required();
  gen->add_option("--maxdeg", maxdeg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*decide) return cmd_decide(file);
    if (*label) return cmd_label(file, span);
    if (*verify) return cmd_verify(file, labels);
    if (*weights) return cmd_weights(file, dot);
    if (*oracle) return cmd_oracle(file);
    if (*sweep) return cmd_sweep(nmin, nmax, jobs, out, timing);
    if (*gen) return cmd_gen(n, seed, maxdeg);
  } catch (const DegreeError& e) {
    std::cerr << e.what() << "\n";
    return degree;
  } catch (const NoMajorVertexError& e) {
    std::cerr << e.what() << "\n";
    return degree;
  } catch (const IoFailure& e) {
    std::cerr << e.what() << "\n";
    return io;
  } catch (const CorpusError& e) {
    std::cerr << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}
