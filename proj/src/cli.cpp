#include "mfas/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "mfas/edge_list.hpp"
#include "mfas/errors.hpp"
#include "mfas/exact.hpp"
#include "mfas/generators.hpp"
#include "mfas/layers.hpp"
#include "mfas/path_stats.hpp"
#include "mfas/report.hpp"
#include "mfas/solver.hpp"

namespace mfas::cli {
namespace {

constexpr std::size_t kEnumerationGuard = 16;

struct Options {
  std::string input;
  std::string output;
  std::string trace_output;
  std::string report;
  int m = 4;
  std::uint64_t seed = 1;
  std::size_t guard_exact = 20;
  unsigned jobs = 1;
  bool exact = false;
  bool timings = false;
  std::optional<Vertex> vertex;

  // gen / bench
  std::string model;
  std::size_t n = 12;
  std::vector<std::size_t> steps;
  std::vector<std::size_t> sizes;
  std::string p = "3/10";
  std::size_t seeds = 20;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw BadParameter("cannot write " + path);
  f << text;
}

void require_m_free(const Digraph& g, int m) {
  if (m < 4) throw UnsupportedM(m);
  if (auto w = check_m_free(g, m)) {
    CycleWitness labelled;
    for (Vertex v : w->vertices) labelled.vertices.push_back(g.label(v));
    throw NotMFree(m, labelled);
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto file = read_edge_list(o.input);
  const Digraph& g = file.graph;
  require_m_free(g, o.m);
  const auto t0 = std::chrono::steady_clock::now();
  const FasResult result = solve(g, o.m, SolveOptions{o.jobs});
  const double solve_ms = ms_since(t0);
  const auto t1 = std::chrono::steady_clock::now();
  const auto violations = verify_certificate(g, o.m, result);
  const double verify_ms = ms_since(t1);

  SolveReport r;
  r.graph = &g;
  r.result = &result;
  r.certificate_ok = violations.empty();
  if (o.exact && g.size() <= std::min(o.guard_exact, kExactLimit)) r.exact_beta = exact_fas_size(g, o.guard_exact);
  r.generator = file.generator;
  if (o.timings) {
    r.solve_ms = solve_ms;
    r.verify_ms = verify_ms;
  }
  const Json report = make_report(r);
  emit(o.output, report.dump(2) + "\n", out);
  if (!o.trace_output.empty()) emit(o.trace_output, report.at("trace").dump(2) + "\n", out);
  for (const auto& v : violations) err << v << '\n';
  return violations.empty() ? kOk : kInternal;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const auto file = read_edge_list(o.input);
  std::ifstream in(o.report);
  if (!in) throw BadParameter("cannot open report " + o.report);
  Json report;
  try {
    report = Json::parse(in);
  } catch (const Json::exception& e) {
    throw BadParameter(std::string("report is not valid JSON: ") + e.what());
  }
  FasResult result;
  try {
    result = fas_result_from_report(report);
  } catch (const Json::exception& e) {
    throw BadParameter(std::string("malformed report: ") + e.what());
  }
  const int m = o.m != 0 ? o.m : result.m;
  const auto violations = verify_certificate(file.graph, m, result);
  for (const auto& v : violations) out << v << '\n';
  if (violations.empty()) out << "certificate ok\n";
  return violations.empty() ? kOk : kCheckFailed;
}

int cmd_exact(const Options& o, std::ostream& out, std::ostream&) {
  const auto file = read_edge_list(o.input);
  const Digraph& g = file.graph;
  const auto x = exact_fas_edges(g, std::min(o.guard_exact, kExactLimit));
  Json j;
  j["input_digest"] = input_digest(g);
  j["n"] = g.size();
  j["edge_count"] = g.edge_count();
  j["gamma"] = gamma(g);
  if (auto c = girth(g)) {
    j["girth"] = c->length();
  } else {
    j["girth"] = nullptr;
  }
  j["exact_beta"] = x.size();
  j["exact_edges"] = edges_to_json(x);
  if (file.generator) j["generator"] = to_json(*file.generator);
  emit(o.output, j.dump(2) + "\n", out);
  return kOk;
}

std::string layer_sizes(const LayerDecomposition& d) {
  std::string s;
  for (int i = 1; i <= d.depth_cap; ++i) s += (i > 1 ? "," : "") + std::to_string(d[i].size());
  return s;
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream&) {
  const auto file = read_edge_list(o.input);
  const Digraph& input = file.graph;
  if (o.vertex && *o.vertex >= input.size()) {
    throw BadParameter("vertex " + std::to_string(*o.vertex) + " out of range [0," + std::to_string(input.size()) + ")");
  }
  require_m_free(input, o.m);
  const int m = o.m;
  const auto trimmed = trim(input);
  const Digraph& g = trimmed.graph;
  out << "# m=" << m << " n=" << input.size() << " trimmed=" << trimmed.removed.size() << " remaining=" << g.size()
      << '\n';
  if (g.size() == 0) out << "# every vertex was trimmed: the graph is acyclic\n";

  std::optional<TripleStats> stats;
  if (g.size() <= kEnumerationGuard) stats = triple_stats(g, m);

  std::optional<Vertex> only;
  if (o.vertex) {
    only = g.find_label(*o.vertex);
    if (!only) out << "# vertex " << *o.vertex << " was trimmed\n";
  }

  out << std::left << std::setw(5) << "v" << std::setw(3) << "k" << std::setw(14) << "|N+_i|" << std::setw(14)
      << "|N-_i|" << std::setw(6) << "p_k" << std::setw(6) << "r'_k" << std::setw(7) << "s_k" << std::setw(7) << "t_k"
      << std::setw(8) << "s_surr" << std::setw(8) << "t_surr" << std::setw(9) << "alpha_k" << std::setw(9)
      << "beta_k" << std::setw(9) << "cand_out" << "cand_in" << '\n';
  for (Vertex v = 0; v < g.size(); ++v) {
    if (o.vertex && only != v) continue;
    const auto fwd = out_layers(g, v, m - 1);
    const auto bwd = in_layers(g, v, m - 1);
    for (int k = 1; k <= m - 3; ++k) {
      const Count p = cut_layer_edges(g, fwd, k);
      const Count rp = cut_layer_edges(g, bwd, k);
      const Count ss = surrogate_denominator(g, fwd, bwd, k, m);
      const Count ts = surrogate_denominator(g, bwd, fwd, k, m);
      std::string s = "-", t = "-", alpha = "-", beta = "-";
      if (stats) {
        const Count se = s_exact(*stats, v, k), te = t_exact(*stats, v, k);
        s = std::to_string(se);
        t = std::to_string(te);
        alpha = ExactRatio{stats->at(TripleStats::P, k, v), se}.str();
        beta = ExactRatio{stats->at(TripleStats::RPrime, k, v), te}.str();
      }
      out << std::setw(5) << g.label(v) << std::setw(3) << k << std::setw(14) << layer_sizes(fwd) << std::setw(14)
          << layer_sizes(bwd) << std::setw(6) << p << std::setw(6) << rp << std::setw(7) << s << std::setw(7) << t
          << std::setw(8) << ss << std::setw(8) << ts << std::setw(9) << alpha << std::setw(9) << beta << std::setw(9)
          << ExactRatio{p, ss}.str() << ExactRatio{rp, ts}.str() << '\n';
    }
  }
  if (g.size() == 0) return kOk;
  if (stats) {
    try {
      const auto best = min_alpha_beta(*stats);
      out << "min exact ratio: " << best.ratio.str() << " at v=" << g.label(best.v) << " k=" << best.k
          << " side=" << to_string(best.side) << '\n';
    } catch (const NoAdmissibleRatio&) {
      out << "min exact ratio: none\n";
    }
  }
  const Candidate c = select_candidate(g, m, o.jobs);
  out << "selected candidate: v=" << g.label(c.v) << " k=" << c.k << " side=" << to_string(c.side)
      << " ratio=" << c.ratio().str() << '\n';
  return kOk;
}

GenSpec spec_from(const Options& o, Model model, std::uint64_t seed) {
  GenSpec spec;
  spec.model = model;
  spec.n = o.n;
  spec.m = o.m;
  spec.seed = seed;
  switch (model) {
    case Model::Cycle: break;
    case Model::Circulant:
      spec.steps = o.steps.empty() ? std::vector<std::size_t>{1, 2} : o.steps;
      break;
    case Model::Blowup:
      spec.sizes = o.sizes.empty() ? std::vector<std::size_t>(static_cast<std::size_t>(o.m) + 1, 2) : o.sizes;
      spec.n = spec.sizes.size();
      break;
    case Model::ErRepair:
      spec.p = Probability::parse(o.p);
      break;
  }
  return spec;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  const GenSpec spec = spec_from(o, parse_model(o.model), o.seed);
  const Digraph g = generate(spec);
  if (auto w = check_m_free(g, spec.m)) {
    err << "warning: generated graph has a cycle of length " << w->length() << " <= m=" << spec.m << '\n';
  }
  emit(o.output, render_edge_list(g, spec), out);
  return kOk;
}

struct BenchRow {
  GenSpec spec;
  std::size_t n = 0;
  Count gamma = 0;
  Count fas_size = 0;
  std::optional<Count> exact_beta;
  std::string status;
};

BenchRow bench_one(const GenSpec& spec, std::size_t guard) {
  BenchRow row{spec, 0, 0, 0, std::nullopt, "ok"};
  const Digraph g = generate(spec);
  row.n = g.size();
  row.gamma = gamma(g);
  if (check_m_free(g, spec.m)) {
    row.status = "not-m-free";
    return row;
  }
  const FasResult x = solve(g, spec.m);
  row.fas_size = x.edges.size();
  if (!verify_certificate(g, spec.m, x).empty()) row.status = "FAIL";
  if (g.size() <= std::min(guard, kExactLimit)) row.exact_beta = exact_fas_size(g, guard);
  return row;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream&) {
  std::vector<std::string> names;
  {
    std::stringstream ss(o.model.empty() ? std::string("er") : o.model);
    for (std::string name; std::getline(ss, name, ',');) names.push_back(name);
  }
  std::sort(names.begin(), names.end());
  std::vector<GenSpec> specs;
  for (const auto& name : names) {
    const Model model = parse_model(name);
    for (std::size_t i = 0; i < o.seeds; ++i) specs.push_back(spec_from(o, model, o.seed + i));
  }
  if (o.m < 4) throw UnsupportedM(o.m);

  std::vector<BenchRow> rows(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < specs.size();) rows[i] = bench_one(specs[i], o.guard_exact);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < std::max(1u, o.jobs); ++w) pool.emplace_back(worker);
    worker();
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tuple(std::string(to_string(a.spec.model)), a.n, a.spec.seed) <
           std::tuple(std::string(to_string(b.spec.model)), b.n, b.spec.seed);
  });

  out << std::left << std::setw(11) << "model" << std::setw(5) << "n" << std::setw(3) << "m" << std::setw(8) << "seed"
      << std::setw(7) << "gamma" << std::setw(9) << "fas_size" << std::setw(12) << "bound_value" << std::setw(11)
      << "exact_beta" << std::setw(9) << "ratio" << "status" << '\n';
  std::size_t ok = 0;
  for (const auto& row : rows) {
    const int m = row.spec.m;
    std::string ratio = "-";
    if (row.status != "not-m-free" && row.gamma > 0) {
      const Count num = row.fas_size * static_cast<Count>(m - 2);
      const Count g = std::gcd(num, row.gamma);
      ratio = ExactRatio{num / g, row.gamma / g}.str();
    }
    out << std::setw(11) << to_string(row.spec.model) << std::setw(5) << row.n << std::setw(3) << m << std::setw(8)
        << row.spec.seed << std::setw(7) << row.gamma << std::setw(9) << row.fas_size << std::setw(12)
        << row.gamma / static_cast<Count>(m - 2) << std::setw(11)
        << (row.exact_beta ? std::to_string(*row.exact_beta) : std::string("-")) << std::setw(9) << ratio << row.status
        << '\n';
    ok += row.status == "ok";
  }
  out << "# instances " << rows.size() << " certificate_ok " << ok << '\n';
  const bool failed = std::any_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.status == "FAIL"; });
  return failed ? kCheckFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feedback arc sets of m-free digraphs with certified size bounds", "mfas"};
  app.require_subcommand(1);
  Options o;

  auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber); };
  auto add_guard = [&](CLI::App* sub) {
    sub->add_option("--guard-exact", o.guard_exact, "largest n for the exact oracle")->capture_default_str();
  };

  auto* solve_cmd = app.add_subcommand("solve", "compute a certified feedback arc set");
  solve_cmd->add_option("--input", o.input, "edge list file")->required();
  solve_cmd->add_option("--m", o.m, "cycle length bound (graph must be m-free)")->required();
  solve_cmd->add_option("--output", o.output, "report path (default: stdout)");
  solve_cmd->add_option("--trace-output", o.trace_output, "also write the trace alone to this path");
  solve_cmd->add_flag("--exact", o.exact, "include the exact minimum when n <= --guard-exact");
  solve_cmd->add_flag("--timings", o.timings, "include wall-time fields");
  add_guard(solve_cmd);
  add_jobs(solve_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "replay the certificate stored in a report");
  verify_cmd->add_option("--input", o.input, "edge list file")->required();
  verify_cmd->add_option("--report", o.report, "report written by solve")->required();
  verify_cmd->add_option("--m", o.m, "cycle length bound (default: the report's)");

  auto* exact_cmd = app.add_subcommand("exact", "exact minimum feedback arc set");
  exact_cmd->add_option("--input", o.input, "edge list file")->required();
  exact_cmd->add_option("--output", o.output, "report path (default: stdout)");
  add_guard(exact_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "layer and triple statistics per (v, k)");
  stats_cmd->add_option("--input", o.input, "edge list file")->required();
  stats_cmd->add_option("--m", o.m, "cycle length bound")->required();
  stats_cmd->add_option("--vertex", o.vertex, "only rows for this vertex");
  add_jobs(stats_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "generate an m-free digraph");
  gen_cmd->add_option("--model", o.model, "cycle | circulant | blowup | er")->required();
  gen_cmd->add_option("--n", o.n, "vertex count");
  gen_cmd->add_option("--m", o.m, "cycle length bound")->capture_default_str();
  gen_cmd->add_option("--steps", o.steps, "circulant steps, e.g. 1,2")->delimiter(',');
  gen_cmd->add_option("--sizes", o.sizes, "blow-up class sizes, e.g. 2,2,2,2,2")->delimiter(',');
  gen_cmd->add_option("--p", o.p, "edge probability as a/b")->capture_default_str();
  gen_cmd->add_option("--seed", o.seed, "generator seed")->capture_default_str();
  gen_cmd->add_option("--output", o.output, "output path (default: stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "solve a seeded corpus and tabulate the results");
  bench_cmd->add_option("--model", o.model, "comma-separated models (default: er)");
  bench_cmd->add_option("--n", o.n, "vertex count")->capture_default_str();
  bench_cmd->add_option("--m", o.m, "cycle length bound")->capture_default_str();
  bench_cmd->add_option("--seeds", o.seeds, "instances per model")->capture_default_str();
  bench_cmd->add_option("--seed", o.seed, "first seed")->capture_default_str();
  bench_cmd->add_option("--p", o.p, "edge probability for er")->capture_default_str();
  bench_cmd->add_option("--steps", o.steps, "circulant steps")->delimiter(',');
  bench_cmd->add_option("--sizes", o.sizes, "blow-up class sizes")->delimiter(',');
  add_guard(bench_cmd);
  add_jobs(bench_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  if (verify_cmd->parsed() && verify_cmd->count("--m") == 0) o.m = 0;

  try {
    if (solve_cmd->parsed()) return cmd_solve(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (exact_cmd->parsed()) return cmd_exact(o, out, err);
    if (stats_cmd->parsed()) return cmd_stats(o, out, err);
    if (gen_cmd->parsed()) return cmd_gen(o, out, err);
    if (bench_cmd->parsed()) return cmd_bench(o, out, err);
  } catch (const NotMFree& e) {
    err << "error: " << e.what() << '\n';
    return kNotMFree;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const UnsupportedM& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupportedM;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const BadParameter& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace mfas::cli
