#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ffree/check.hpp"
#include "ffree/families.hpp"
#include "ffree/io.hpp"
#include "ffree/recognize.hpp"
#include "ffree/search.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string walk_pair(const ffree::TwoWalkWitness& w) {
  std::ostringstream os;
  os << w.a << " -> {" << w.c1 << ", " << w.c2 << "} -> " << w.b;
  return os.str();
}

int cmd_construct(const std::string& family, int n, int shape_seed, bool rev,
                  const std::string& format) {
  const auto f = ffree::family_from_name(family);
  if (!f) {
    std::cerr << "unknown family " << family << "\n";
    return kUsage;
  }
  ffree::FamilySpec spec;
  try {
    if (shape_seed < 0) {
      spec = ffree::default_spec(*f, n);
    } else {
      const auto specs = ffree::enumerate_specs(*f, n, static_cast<std::size_t>(shape_seed) + 1);
      if (static_cast<int>(specs.size()) <= shape_seed) {
        std::cerr << "shape seed " << shape_seed << " out of range: only " << specs.size()
                  << " shapes enumerated for " << family << " at n=" << n << "\n";
        return kUsage;
      }
      spec = specs[shape_seed];
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  if (format == "spec") {
    std::cout << ffree::spec_to_text(spec);
    return kOk;
  }
  if (format == "spec-json") {
    std::cout << ffree::spec_to_json(spec) << "\n";
    return kOk;
  }
  ffree::Digraph d = ffree::construct(spec);
  if (rev) d = ffree::reverse(d);
  if (format == "matrix")
    std::cout << ffree::write_matrix(d);
  else if (format == "arcs")
    std::cout << ffree::write_arclist(d);
  else if (format == "dot")
    std::cout << ffree::write_dot(d);
  else {
    std::cerr << "unknown format " << format << "\n";
    return kUsage;
  }
  return kOk;
}

int cmd_check(const std::string& path, bool as_json) {
  ffree::Digraph d(1);
  try {
    d = ffree::read_digraph_file(path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  const auto rep = ffree::is_f_free(d);
  if (as_json) {
    std::cout << ffree::check_report_json(d, rep) << "\n";
    return rep.ok ? kOk : kNegative;
  }
  const auto sq = ffree::square(ffree::to_matrix(d));
  std::cout << "n " << d.order() << "\n";
  std::cout << "trace " << ffree::to_matrix(d).trace() << "\n";
  std::cout << "max square entry " << sq.max_entry() << "\n";
  std::cout << "F-free: " << (rep.ok ? "yes" : "no") << "\n";
  if (!rep.ok) {
    std::cout << "witness " << walk_pair(*rep.witness) << "\n";
    return kNegative;
  }
  if (d.order() >= 8) {
    const int ex = ffree::ex_formula(d.order());
    const char* relation = d.size() == ex ? "=" : (d.size() < ex ? "<" : ">");
    std::cout << "size " << d.size() << " " << relation << " ex(" << d.order() << ") = " << ex
              << "\n";
  }
  return kOk;
}

int cmd_exmax(int n, const std::string& mode, std::uint64_t nodes, double seconds, int threads,
              int fanout, bool fanin, bool symmetry, bool audit, bool progress,
              const std::string& witness_path) {
  try {
    if (mode == "formula") {
      std::cout << ffree::ex_formula(n) << "\n";
      return kOk;
    }
    if (mode == "bound") {
      std::cout << ffree::lower_bound_size(n) << "\n";
      return kOk;
    }
    if (mode != "search") {
      std::cerr << "unknown mode " << mode << "\n";
      return kUsage;
    }
    ffree::SearchBudget budget;
    budget.max_nodes = nodes;
    budget.max_seconds = seconds;
    ffree::SearchOptions opts;
    opts.threads = threads;
    opts.fanout_depth = fanout;
    opts.fanin_bound = fanin;
    opts.symmetry_break = symmetry;
    opts.audit = audit;
    if (progress)
      opts.progress = [](const ffree::SearchProgress& p) {
        std::fprintf(stderr, "nodes=%llu pruned=%llu incumbent=%d depth=%d\n",
                     static_cast<unsigned long long>(p.nodes),
                     static_cast<unsigned long long>(p.pruned), p.incumbent, p.depth);
      };
    const auto res = ffree::brute_force_max(n, budget, opts);
    std::cout << res.max_size << " (" << (res.complete ? "complete" : "incomplete") << ")\n";
    if (!witness_path.empty()) {
      std::ofstream out(witness_path);
      if (!out) {
        std::cerr << "cannot write " << witness_path << "\n";
        return kUsage;
      }
      out << ffree::write_arclist(res.witness);
      std::cout << "witness written to " << witness_path << "\n";
    }
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}

int cmd_recognize(const std::string& path) {
  ffree::Digraph d(1);
  try {
    d = ffree::read_digraph_file(path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  try {
    const auto rep = ffree::recognize(d);
    std::cout << ffree::recognition_report_json(rep) << "\n";
    return rep.verdict == ffree::Verdict::Extremal ? kOk : kNegative;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}

int cmd_square(const std::string& path) {
  try {
    const ffree::Digraph d = ffree::read_digraph_file(path);
    const auto sq = ffree::square(ffree::to_matrix(d));
    for (int i = 0; i < sq.n; ++i) {
      for (int j = 0; j < sq.n; ++j) {
        if (j) std::cout << ' ';
        std::cout << sq.at(i, j);
      }
      std::cout << "\n";
    }
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal digraphs with 0-1 square"};
  app.require_subcommand(1);

  auto* c = app.add_subcommand("construct", "Emit one family member");
  std::string c_family;
  int c_n = 0, c_seed = -1;
  bool c_rev = false;
  std::string c_format = "arcs";
  c->add_option("--family", c_family, "D1..D6")->required();
  c->add_option("--n", c_n, "Number of vertices")->required();
  c->add_option("--shape-seed", c_seed, "Pick the k-th enumerated shape instead of the default");
  c->add_flag("--reverse", c_rev, "Emit the reverse digraph");
  c->add_option("--format", c_format, "arcs|matrix|dot|spec|spec-json");

  auto* k = app.add_subcommand("check", "Verify a digraph file");
  std::string k_file;
  bool k_json = false;
  k->add_option("file", k_file, "Matrix or arc list")->required();
  k->add_flag("--json", k_json, "Machine-readable report");

  auto* x = app.add_subcommand("exmax", "Maximum size by formula, bound, or search");
  int x_n = 0;
  std::string x_mode = "formula";
  std::uint64_t x_nodes = 0;
  double x_seconds = 0.0;
  int x_threads = 0, x_fanout = 12;
  bool x_fanin = false, x_symmetry = false, x_audit = false, x_progress = false;
  std::string x_witness;
  x->add_option("--n", x_n, "Number of vertices")->required();
  x->add_option("--mode", x_mode, "formula|bound|search");
  x->add_option("--budget", x_nodes, "Search node budget, 0 = unlimited");
  x->add_option("--seconds", x_seconds, "Best-effort time budget, 0 = none");
  x->add_option("--threads", x_threads, "Worker threads, 0 = runtime default");
  x->add_option("--fanout", x_fanout, "Decision depth of the parallel frontier");
  x->add_flag("--fanin-bound", x_fanin, "Tighter bound near the cutoff");
  x->add_flag("--symmetry", x_symmetry, "Prune orderings vertex 0 cannot lead");
  x->add_flag("--audit", x_audit, "Recount pruning state at every node");
  x->add_flag("--progress", x_progress, "Progress lines on standard error");
  x->add_option("--witness", x_witness, "Write the witness arc list here");

  auto* r = app.add_subcommand("recognize", "Classify a claimed extremal digraph");
  std::string r_file;
  r->add_option("file", r_file, "Matrix or arc list")->required();

  auto* s = app.add_subcommand("square", "Print the square of the adjacency matrix");
  std::string s_file;
  s->add_option("file", s_file, "Matrix or arc list")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*c) return cmd_construct(c_family, c_n, c_seed, c_rev, c_format);
  if (*k) return cmd_check(k_file, k_json);
  if (*x)
    return cmd_exmax(x_n, x_mode, x_nodes, x_seconds, x_threads, x_fanout, x_fanin, x_symmetry,
                     x_audit, x_progress, x_witness);
  if (*r) return cmd_recognize(r_file);
  if (*s) return cmd_square(s_file);
  return kUsage;
}
