#include "cli.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cherrylab/coloring.hpp"
#include "cherrylab/constructions.hpp"
#include "cherrylab/embedder.hpp"
#include "cherrylab/graph.hpp"
#include "cherrylab/io.hpp"
#include "cherrylab/lll.hpp"
#include "cherrylab/search.hpp"
#include "json.hpp"

namespace cherrylab::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Common {
  std::uint64_t seed = 0;
  std::string mode = "proper";
  std::uint64_t max_resamples = 1'000'000;
  std::uint64_t max_restarts = 10;
  unsigned threads = 1;
  std::string out;
  std::string format = "json";
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outcome = Json::object();
  Json timings = Json::object();
  std::optional<std::uint64_t> seed;
  Json artifacts = Json::array();

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outcome"] = outcome;
    j["timings_ms"] = timings;
    if (seed) j["seed"] = *seed;
    j["artifacts"] = artifacts;
    return j;
  }
};

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

// Every report carries the run seed, whether or not the command drew from it.
void emit(Report report, const Common& common, std::ostream& out) {
  if (!report.seed) report.seed = common.seed;
  if (common.format == "text") {
    flatten(report.to_json(), "", out);
  } else {
    out << report.to_json().dump(2) << '\n';
  }
}

// Thrown for bad user input that CLI11 cannot catch (missing files, bad
// parameter combinations); mapped to kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CopyMode mode_of(const Common& common) { return parse_copy_mode(common.mode); }

Json threshold_json(const ThresholdResult& t) {
  Json j;
  j["k"] = t.k;
  j["vacuous"] = t.vacuous;
  j["constant"] = to_string(t.constant);
  return j;
}

Json coloring_summary(const Coloring& c) {
  Json j;
  j["n"] = c.order();
  j["k_local"] = max_local_multiplicity(c);
  j["k_global"] = max_global_multiplicity(c);
  j["distinct_colors"] = c.distinct_colors();
  return j;
}

Json graph_summary(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["cherries"] = count_cherries(g);
  j["max_degree"] = g.max_degree();
  return j;
}

// Writes the artifact to --out (recording it in the report) or, without
// --out, to stdout in place of the report. Returns whether the report should
// still be printed.
template <class Writer>
bool write_artifact(const Common& common, Report& report, std::ostream& out, Writer&& writer) {
  if (common.out.empty()) {
    writer(out);
    return false;
  }
  std::ofstream file(common.out);
  if (!file) throw UsageError("cannot write '" + common.out + "'");
  writer(file);
  report.artifacts.push_back(common.out);
  return true;
}

fs::path resolve_relative(const std::string& path, const fs::path& base) {
  fs::path p(path);
  if (p.is_absolute() || fs::exists(p)) return p;
  fs::path alt = base / p;
  return fs::exists(alt) ? alt : p;
}

std::vector<Vertex> parse_vertex_set(const std::string& text) {
  // "a-b" or comma-separated ids, ranges allowed inside the list
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(static_cast<Vertex>(std::stoul(item)));
      } else {
        auto lo = std::stoul(item.substr(0, dash));
        auto hi = std::stoul(item.substr(dash + 1));
        for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<Vertex>(v));
      }
    } catch (const std::exception&) {
      throw UsageError("bad vertex set '" + text + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands

struct GenGraphArgs {
  std::string kind;
  std::uint64_t m = 0;
  std::uint32_t q = 0;
  std::size_t copies = 1;
  std::size_t n = 0;
  std::size_t max_degree = 3;
};

int cmd_gen_graph(const GenGraphArgs& a, const Common& common, std::ostream& out) {
  Report report;
  report.command = "gen-graph";
  report.inputs["kind"] = a.kind;
  Stopwatch sw;
  Graph g;
  if (a.kind == "tree-cube" || a.kind == "tree-square") {
    report.inputs["m"] = a.m;
    g = build_tree(a.kind == "tree-cube" ? TreeKind::radius_two_cube : TreeKind::radius_two_square, a.m);
  } else if (a.kind == "polarity") {
    report.inputs["q"] = a.q;
    g = polarity_graph(a.q);
  } else if (a.kind == "rook") {
    report.inputs["m"] = a.m;
    report.inputs["copies"] = a.copies;
    g = rook_union(static_cast<std::size_t>(a.m), a.copies);
  } else if (a.kind == "random-tree") {
    report.inputs["n"] = a.n;
    report.inputs["max_degree"] = a.max_degree;
    report.seed = common.seed;
    g = random_tree(a.n, a.max_degree, derive_seed(common.seed, 0));
  } else {
    throw UsageError("unknown graph kind '" + a.kind + "'");
  }
  report.timings["generate"] = sw.ms();
  report.outcome = graph_summary(g);
  if (write_artifact(common, report, out, [&](std::ostream& o) { io::write_graph(o, g); })) emit(report, common, out);
  return kOk;
}

struct GenColoringArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t ell = 0;
  std::uint64_t k = 1;
  std::string bound;
};

int cmd_gen_coloring(const GenColoringArgs& a, const Common& common, std::ostream& out) {
  Report report;
  report.command = "gen-coloring";
  report.inputs["kind"] = a.kind;
  report.inputs["n"] = a.n;
  Stopwatch sw;
  Coloring c;
  if (a.kind == "partition") {
    c = partition_coloring(a.n);
  } else if (a.kind == "diam2") {
    report.inputs["ell"] = a.ell;
    c = diam2_coloring(a.n, a.ell).coloring;
  } else if (a.kind == "lex-block") {
    report.inputs["ell"] = a.ell;
    c = lex_block_coloring(a.n, a.ell);
  } else if (a.kind == "random") {
    const Boundedness b = a.bound.empty() ? boundedness_for(mode_of(common)) : parse_boundedness(a.bound);
    report.inputs["k"] = a.k;
    report.inputs["bound"] = std::string(to_string(b));
    report.seed = common.seed;
    c = random_bounded_coloring(a.n, a.k, b, derive_seed(common.seed, 0));
  } else {
    throw UsageError("unknown coloring kind '" + a.kind + "'");
  }
  report.timings["generate"] = sw.ms();
  report.outcome = coloring_summary(c);
  if (write_artifact(common, report, out, [&](std::ostream& o) { io::write_coloring(o, c); })) {
    emit(report, common, out);
  }
  return kOk;
}

struct BoundsArgs {
  std::string graph;
  std::string coloring;
  std::optional<std::size_t> ell;
  bool structures = false;
};

int cmd_check_bounds(const BoundsArgs& a, const Common& common, std::ostream& out) {
  if (a.graph.empty() && a.coloring.empty()) throw UsageError("check-bounds needs --graph and/or --coloring");
  Report report;
  report.command = "check-bounds";
  bool all_hold = true;
  Stopwatch sw;
  if (!a.graph.empty()) {
    report.inputs["graph"] = a.graph;
    const Graph g = io::load_graph(a.graph);
    const auto stats = cherry_stats(g);
    const auto edges = extremal_edge_check(g);
    Json j = graph_summary(g);
    j["edge_bound"] = {{"bound", edges.bound}, {"actual", edges.actual}, {"holds", edges.holds}};
    bool leaf_ok = true;
    for (Vertex u = 1; u <= g.order(); ++u) {
      // leaf^2 <= 2 r deg(u)
      const unsigned __int128 lhs = static_cast<unsigned __int128>(stats.per_vertex_leaf[u - 1]) * stats.per_vertex_leaf[u - 1];
      const unsigned __int128 rhs = static_cast<unsigned __int128>(2) * stats.total * g.degree(u);
      if (lhs > rhs) leaf_ok = false;
    }
    j["leaf_bound_holds"] = leaf_ok;
    j["max_degree_bound_holds"] = max_degree_cherry_bound_holds(g);
    all_hold = all_hold && edges.holds && leaf_ok && max_degree_cherry_bound_holds(g);
    if (a.ell) {
      report.inputs["ell"] = *a.ell;
      const auto order = degree_order(g, *a.ell);
      j["max_small_degree"] = order.max_small_degree;
      j["small_degree_bound_holds"] = order.small_degree_bound_holds;
    }
    report.outcome["graph"] = j;
  }
  if (!a.coloring.empty()) {
    report.inputs["coloring"] = a.coloring;
    const Coloring c = io::load_coloring(a.coloring);
    Json j = coloring_summary(c);
    if (a.structures) {
      const auto triples = for_each_mono_triple(c, kNoLimit, [](const MonoTriple&) {});
      const auto pairs = for_each_mono_pair(c, kNoLimit, [](const MonoPair&) {});
      j["mono_triples"] = triples.count;
      j["mono_disjoint_pairs"] = pairs.count;
    }
    report.outcome["coloring"] = j;
  }
  report.timings["check"] = sw.ms();
  report.outcome["holds"] = all_hold;
  emit(report, common, out);
  return all_hold ? kOk : kRefuted;
}

int cmd_cherries(const std::string& path, bool per_vertex, const Common& common, std::ostream& out) {
  Report report;
  report.command = "cherries";
  report.inputs["graph"] = path;
  Stopwatch sw;
  const Graph g = io::load_graph(path);
  const auto stats = cherry_stats(g);
  report.timings["count"] = sw.ms();
  report.outcome["r"] = stats.total;
  if (per_vertex) {
    report.outcome["per_vertex_middle"] = stats.per_vertex_middle;
    report.outcome["per_vertex_leaf"] = stats.per_vertex_leaf;
  }
  emit(report, common, out);
  return kOk;
}

struct ThresholdArgs {
  std::string kind;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> delta;
};

int cmd_threshold(const ThresholdArgs& a, const Common& common, std::ostream& out) {
  Report report;
  report.command = "threshold";
  ThresholdQuery q;
  q.kind = parse_threshold_kind(a.kind);
  q.n = a.n;
  q.cherries = a.r;
  q.max_degree = a.delta;
  report.inputs["kind"] = std::string(to_string(q.kind));
  report.inputs["n"] = a.n;
  if (a.r) report.inputs["r"] = *a.r;
  if (a.delta) report.inputs["delta"] = *a.delta;
  const auto t = threshold(q);
  report.outcome = threshold_json(t);
  report.outcome["kind"] = std::string(to_string(q.kind));
  emit(report, common, out);
  return kOk;
}

struct LllArgs {
  std::string constant;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> ell;
};

int cmd_lll_check(const LllArgs& a, const Common& common, std::ostream& out) {
  Report report;
  report.command = "lll-check";
  const CopyMode mode = mode_of(common);
  const Rational c = parse_rational(a.constant);
  report.inputs["mode"] = std::string(to_string(mode));
  report.inputs["C"] = to_string(c);
  Stopwatch sw;
  const auto budget = lll_budget(mode, c);
  const auto closed = closed_form_total(mode, c);
  Json per_class = Json::array();
  for (const auto& entry : budget.per_class) {
    per_class.push_back({{"class", std::string(to_string(entry.cls))},
                         {"multiplier", entry.multiplier},
                         {"term", to_string(entry.term)}});
  }
  bool feasible = budget.total <= Rational(1, 4);
  report.outcome["kind"] = "lll";
  report.outcome["total"] = to_string(budget.total);
  report.outcome["budget_total"] = to_string(budget.total);
  report.outcome["approx"] = budget.total.get_d();
  report.outcome["closed_form"] = to_string(closed);
  report.outcome["closed_form_matches"] = closed == budget.total;
  report.outcome["per_class"] = per_class;
  if (a.n) {
    const std::uint64_t ell = a.ell.value_or(0);
    report.inputs["n"] = *a.n;
    report.inputs["ell"] = ell;
    const auto verdict = lll_feasibility_check(*a.n, ell, budget);
    report.outcome["event_bound"] = to_string(verdict.event_bound);
    report.outcome["single_event_ok"] = verdict.single_event_ok;
    feasible = verdict.feasible();
  }
  report.outcome["feasible"] = feasible;
  report.timings["evaluate"] = sw.ms();
  emit(report, common, out);
  return feasible && closed == budget.total ? kOk : kRefuted;
}

struct CliqueArgs {
  std::string coloring;
  std::uint64_t r = 0;
  std::uint64_t k = 1;
  std::string bound;
  std::uint64_t retry_cap = 100;
  bool no_enforce = false;
};

int cmd_clique_p(const CliqueArgs& a, const Common& common, std::ostream& out) {
  Report report;
  report.command = "clique-p";
  const Boundedness b = a.bound.empty() ? boundedness_for(mode_of(common)) : parse_boundedness(a.bound);
  report.inputs["coloring"] = a.coloring;
  report.inputs["r"] = a.r;
  report.inputs["k"] = a.k;
  report.inputs["bound"] = std::string(to_string(b));
  report.inputs["retry_cap"] = a.retry_cap;
  report.seed = common.seed;
  Stopwatch load;
  const Coloring c = io::load_coloring(a.coloring);
  report.timings["load"] = load.ms();
  EmbedConfig config;
  config.seed = common.seed;
  config.clique_retry_cap = a.retry_cap;
  Stopwatch sw;
  int code = kOk;
  try {
    const auto result = find_clique_P(c, a.r, a.k, b, config, !a.no_enforce);
    report.outcome["accepted"] = true;
    report.outcome["P"] = result.P;
    report.outcome["target"] = result.target;
    report.outcome["attempts"] = result.attempts;
    report.outcome["sampled_size"] = result.sampled_size;
    report.outcome["codegree_cap"] = result.codegree_cap;
    report.outcome["invariants_verified"] = true;
  } catch (const ThresholdViolation& e) {
    report.outcome["accepted"] = false;
    report.outcome["error"] = e.what();
    code = kUsage;
  } catch (const CliqueFailure& e) {
    report.outcome["accepted"] = false;
    report.outcome["error"] = e.what();
    report.outcome["attempts"] = e.attempts();
    report.outcome["best_size"] = e.best_size();
    code = kRefuted;
  }
  report.timings["search"] = sw.ms();
  emit(report, common, out);
  return code;
}

struct EmbedArgs {
  std::string graph;
  std::string coloring;
  std::string event_pick = "random";
  std::uint64_t retry_cap = 100;
  bool debug_checks = false;
};

int cmd_embed(const EmbedArgs& a, const Common& common, std::ostream& out) {
  Report report;
  report.command = "embed";
  EmbedConfig config;
  config.mode = mode_of(common);
  config.seed = common.seed;
  config.max_resamples = common.max_resamples;
  config.max_restarts = common.max_restarts;
  config.threads = common.threads;
  config.event_pick = parse_event_pick(a.event_pick);
  config.clique_retry_cap = a.retry_cap;
  config.debug_checks = a.debug_checks;
  if (config.max_resamples == 0 || config.max_restarts == 0 || config.clique_retry_cap == 0 || config.threads == 0) {
    throw UsageError("caps and --threads must be positive");
  }
  report.inputs["graph"] = a.graph;
  report.inputs["coloring"] = a.coloring;
  report.inputs["mode"] = std::string(to_string(config.mode));
  report.inputs["event_pick"] = a.event_pick;
  report.inputs["max_resamples"] = config.max_resamples;
  report.inputs["max_restarts"] = config.max_restarts;
  report.seed = common.seed;

  Stopwatch load;
  const Graph g = io::load_graph(a.graph);
  const Coloring c = io::load_coloring(a.coloring);
  report.timings["load"] = load.ms();
  Stopwatch sw;
  const auto outcome = embed(g, c, config);
  report.timings["embed"] = sw.ms();
  const auto& r = outcome.report;
  spdlog::debug("embed: success={} restarts={} resamples={}", r.success, r.restarts, r.resamples);
  report.outcome["success"] = r.success;
  report.outcome["restarts"] = r.restarts;
  report.outcome["resamples"] = r.resamples;
  report.outcome["final_violations"] = r.final_violations;
  report.outcome["cherries"] = r.cherries;
  report.outcome["ell"] = r.ell;
  report.outcome["clique_fallback"] = r.clique_fallback;
  report.outcome["spanning"] = r.spanning;
  report.outcome["host_level"] = r.host_level;
  report.outcome["threshold"] = threshold_json(r.threshold);
  report.outcome["within_threshold"] = r.within_threshold;
  if (!outcome.embedding) {
    emit(report, common, out);
    return kRefuted;
  }
  io::Certificate cert;
  cert.pattern_file = a.graph;
  cert.host_file = a.coloring;
  cert.mode = config.mode;
  cert.map = outcome.embedding->map;
  cert.seed = common.seed;
  cert.resamples = r.resamples;
  cert.verified = check_copy(c, g, *outcome.embedding).ok;
  if (!cert.verified) throw std::logic_error("embedding failed verification");
  const std::string json = io::certificate_to_json(cert);
  report.outcome["certificate"] = Json::parse(json);
  if (!common.out.empty()) {
    std::ofstream file(common.out);
    if (!file) throw UsageError("cannot write '" + common.out + "'");
    file << json;
    report.artifacts.push_back(common.out);
  }
  emit(report, common, out);
  return kOk;
}

struct BruteArgs {
  std::string graph;
  std::string coloring;
  std::uint64_t budget = kDefaultNodeBudget;
};

int search_exit(SearchStatus s, bool found_is_ok) {
  switch (s) {
    case SearchStatus::found: return found_is_ok ? kOk : kRefuted;
    case SearchStatus::none: return found_is_ok ? kRefuted : kOk;
    case SearchStatus::inconclusive: return kInconclusive;
  }
  return kUsage;
}

int cmd_brute_embed(const BruteArgs& a, const Common& common, std::ostream& out) {
  Report report;
  report.command = "brute-embed";
  const CopyMode mode = mode_of(common);
  report.inputs["graph"] = a.graph;
  report.inputs["coloring"] = a.coloring;
  report.inputs["mode"] = std::string(to_string(mode));
  report.inputs["budget"] = a.budget;
  const Graph g = io::load_graph(a.graph);
  const Coloring c = io::load_coloring(a.coloring);
  Stopwatch sw;
  const auto result = brute_force_embed(g, c, mode, a.budget);
  report.timings["search"] = sw.ms();
  report.outcome["verdict"] = std::string(to_string(result.status));
  report.outcome["nodes"] = result.nodes;
  if (result.embedding) {
    io::Certificate cert;
    cert.pattern_file = a.graph;
    cert.host_file = a.coloring;
    cert.mode = mode;
    cert.map = result.embedding->map;
    cert.verified = true;
    const std::string json = io::certificate_to_json(cert);
    report.outcome["certificate"] = Json::parse(json);
    if (!common.out.empty()) {
      std::ofstream file(common.out);
      if (!file) throw UsageError("cannot write '" + common.out + "'");
      file << json;
      report.artifacts.push_back(common.out);
    }
  }
  emit(report, common, out);
  return search_exit(result.status, true);
}

struct VerifyArgs {
  std::string certificate;
  std::string graph;
  std::string coloring;
};

int cmd_verify(const VerifyArgs& a, const Common& common, std::ostream& out) {
  Report report;
  report.command = "verify";
  report.inputs["certificate"] = a.certificate;
  const auto cert = io::load_certificate(a.certificate);
  const fs::path base = fs::path(a.certificate).parent_path();
  const fs::path gp = a.graph.empty() ? resolve_relative(cert.pattern_file, base) : fs::path(a.graph);
  const fs::path cp = a.coloring.empty() ? resolve_relative(cert.host_file, base) : fs::path(a.coloring);
  report.inputs["graph"] = gp.string();
  report.inputs["coloring"] = cp.string();
  const Graph g = io::load_graph(gp);
  const Coloring c = io::load_coloring(cp);
  Stopwatch sw;
  CopyVerdict verdict;
  try {
    verdict = check_copy(c, g, cert.embedding());
  } catch (const std::invalid_argument& e) {
    report.outcome["ok"] = false;
    report.outcome["error"] = e.what();
    emit(report, common, out);
    return kRefuted;
  }
  report.timings["check"] = sw.ms();
  report.outcome["ok"] = verdict.ok;
  report.outcome["mode"] = std::string(to_string(cert.mode));
  if (verdict.witness) {
    report.outcome["witness"] = {
        {"kind", verdict.witness->kind == CopyViolation::Kind::cherry ? "cherry" : "disjoint_pair"},
        {"pattern", verdict.witness->pattern},
        {"host", verdict.witness->host}};
  }
  emit(report, common, out);
  return verdict.ok ? kOk : kRefuted;
}

int cmd_radius2(const std::string& path, std::uint64_t budget, const Common& common, std::ostream& out) {
  Report report;
  report.command = "radius2-search";
  report.inputs["coloring"] = path;
  report.inputs["budget"] = budget;
  const Coloring c = io::load_coloring(path);
  Stopwatch sw;
  const auto result = radius2_spanning_tree_search(c, budget);
  report.timings["search"] = sw.ms();
  report.outcome["verdict"] = std::string(to_string(result.status));
  report.outcome["nodes"] = result.nodes;
  if (result.witness) {
    Json edges = Json::array();
    for (const Edge& e : result.witness->tree.edges()) edges.push_back({e.u, e.v});
    report.outcome["center"] = result.witness->center;
    report.outcome["tree_edges"] = edges;
  }
  emit(report, common, out);
  // Both definite answers are verified results; only an exhausted budget is not.
  return result.status == SearchStatus::inconclusive ? kInconclusive : kOk;
}

struct BlockArgs {
  std::string coloring;
  std::string graph;
  std::string block;
  std::size_t t = 3;
  std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_block_check(const BlockArgs& a, const Common& common, std::ostream& out) {
  Report report;
  report.command = "block-check";
  report.inputs["coloring"] = a.coloring;
  report.inputs["graph"] = a.graph;
  report.inputs["block"] = a.block;
  report.inputs["t"] = a.t;
  const Coloring c = io::load_coloring(a.coloring);
  const Graph h = io::load_graph(a.graph);
  const auto X = parse_vertex_set(a.block);
  Stopwatch sw;
  const auto result = rainbow_block_check(c, h, X, a.t, a.budget);
  report.timings["search"] = sw.ms();
  report.outcome["verdict"] = std::string(to_string(result.status));
  report.outcome["certified"] = result.status == SearchStatus::none;
  report.outcome["nodes"] = result.nodes;
  if (result.embedding) report.outcome["counterexample"] = result.embedding->map;
  emit(report, common, out);
  return search_exit(result.status, false);
}

// ---------------------------------------------------------------------------
// Benchmarks

struct BenchArgs {
  std::string suite;
  double budget_ms = 0.0;  // 0: unlimited
  std::size_t seeds = 0;   // 0: suite default
};

int cmd_bench(const BenchArgs& a, const Common& common, std::ostream& out) {
  Report report;
  report.command = "bench";
  report.inputs["suite"] = a.suite;
  report.inputs["budget_ms"] = a.budget_ms;
  report.seed = common.seed;
  std::ostringstream csv;
  Stopwatch total;
  bool truncated = false;
  std::size_t rows = 0;
  auto over_budget = [&] { return a.budget_ms > 0 && total.ms() > a.budget_ms; };

  if (a.suite == "embed-scaling") {
    const std::size_t seeds = a.seeds ? a.seeds : 3;
    csv << "suite,n,r,k,seed,success,resamples,millis\n";
    for (std::size_t n : {30u, 60u, 120u}) {
      for (std::size_t s = 0; s < seeds && !truncated; ++s) {
        if (over_budget()) {
          truncated = true;
          break;
        }
        const std::uint64_t seed = derive_seed(common.seed, n * 1000 + s);
        const Graph g = random_tree(n, 3, derive_seed(seed, 1));
        const Coloring c = random_bounded_coloring(n, 2, Boundedness::local, derive_seed(seed, 2));
        EmbedConfig config;
        config.mode = mode_of(common);
        config.seed = derive_seed(seed, 3);
        config.max_resamples = common.max_resamples;
        config.max_restarts = common.max_restarts;
        config.threads = common.threads;
        Stopwatch sw;
        const auto res = embed(g, c, config);
        csv << a.suite << ',' << n << ',' << res.report.cherries << ",2," << s << ',' << res.report.success << ','
            << res.report.resamples << ',' << sw.ms() << '\n';
        ++rows;
      }
    }
  } else if (a.suite == "clique-scaling") {
    const std::size_t seeds = a.seeds ? a.seeds : 10;
    const std::size_t n = 8960;
    const std::uint64_t r = 16, k = 2;
    csv << "suite,n,r,k,seed,success,resamples,millis\n";
    double retries = 0.0;
    std::size_t accepted = 0;
    for (std::size_t s = 0; s < seeds; ++s) {
      if (over_budget()) {
        truncated = true;
        break;
      }
      const std::uint64_t seed = derive_seed(common.seed, s);
      Stopwatch sw;
      const Coloring c = random_bounded_coloring(n, k, Boundedness::local, derive_seed(seed, 1));
      EmbedConfig config;
      config.seed = derive_seed(seed, 2);
      bool ok = true;
      std::uint64_t attempts = 0;
      try {
        attempts = find_clique_P(c, r, k, Boundedness::local, config).attempts;
      } catch (const CliqueFailure& e) {
        ok = false;
        attempts = e.attempts();
      }
      if (ok) {
        ++accepted;
        retries += static_cast<double>(attempts);
      }
      csv << a.suite << ',' << n << ',' << r << ',' << k << ',' << s << ',' << ok << ',' << attempts << ','
          << sw.ms() << '\n';
      ++rows;
    }
    report.outcome["accepted"] = accepted;
    report.outcome["mean_retries"] = accepted ? retries / static_cast<double>(accepted) : 0.0;
  } else if (a.suite == "budget-eval") {
    csv << "suite,mode,C,total,approx,below_quarter\n";
    bool monotone = true;
    for (CopyMode mode : {CopyMode::proper, CopyMode::rainbow}) {
      std::optional<Rational> previous;
      for (int cval : {100, 560, 1512}) {
        if (over_budget()) {
          truncated = true;
          break;
        }
        const auto budget = lll_budget(mode, Rational(cval));
        if (previous && !(budget.total < *previous)) monotone = false;
        previous = budget.total;
        csv << a.suite << ',' << to_string(mode) << ',' << cval << ',' << to_string(budget.total) << ','
            << budget.total.get_d() << ',' << (budget.total < Rational(1, 4)) << '\n';
        ++rows;
      }
    }
    report.outcome["monotone_decreasing"] = monotone;
  } else {
    throw UsageError("unknown bench suite '" + a.suite + "'");
  }
  if (truncated) csv << "# truncated\n";
  report.timings["total"] = total.ms();
  report.outcome["rows"] = rows;
  report.outcome["truncated"] = truncated;
  if (write_artifact(common, report, out, [&](std::ostream& o) { o << csv.str(); })) emit(report, common, out);
  return kOk;
}

void configure_logging() {
  static bool done = false;
  if (done) return;
  done = true;
  auto logger = spdlog::stderr_color_st("cherrylab");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("CHERRYLAB_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_logging();
  CLI::App app{"Bounded edge-colorings, cherries and properly colored / rainbow embeddings"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file mirroring the flags (flags win)");

  Common common;
  app.add_option("--seed", common.seed, "Run seed; every random phase derives from it");
  app.add_option("--mode", common.mode, "proper | rainbow")->check(CLI::IsMember({"proper", "rainbow"}));
  app.add_option("--max-resamples", common.max_resamples, "Resample cap per restart");
  app.add_option("--max-restarts", common.max_restarts, "Restart cap");
  app.add_option("--threads", common.threads, "Worker cap for violation scans");
  app.add_option("--out", common.out, "Artifact path");
  app.add_option("--format", common.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  GenGraphArgs gg;
  auto* gen_graph = app.add_subcommand("gen-graph", "Generate a pattern graph");
  gen_graph->add_option("--kind", gg.kind, "tree-cube | tree-square | polarity | rook | random-tree")->required();
  gen_graph->add_option("--m", gg.m, "Tree size or rook side");
  gen_graph->add_option("--q", gg.q, "Field order for the polarity graph");
  gen_graph->add_option("--copies", gg.copies, "Rook graph copies");
  gen_graph->add_option("--n", gg.n, "Random tree order");
  gen_graph->add_option("--max-degree", gg.max_degree, "Random tree degree cap");

  GenColoringArgs gc;
  auto* gen_coloring = app.add_subcommand("gen-coloring", "Generate a host coloring");
  gen_coloring->add_option("--kind", gc.kind, "partition | diam2 | lex-block | random")->required();
  gen_coloring->add_option("--n", gc.n, "Host order")->required();
  gen_coloring->add_option("--ell", gc.ell, "Construction parameter");
  gen_coloring->add_option("--k", gc.k, "Boundedness level (random)");
  gen_coloring->add_option("--bound", gc.bound, "local | global (random; default from --mode)");

  BoundsArgs bounds;
  auto* check_bounds = app.add_subcommand("check-bounds", "Measure boundedness and check the extremal bounds");
  check_bounds->add_option("--graph", bounds.graph, "Graph file");
  check_bounds->add_option("--coloring", bounds.coloring, "Coloring file");
  check_bounds->add_option("--ell", bounds.ell, "Check the degree bound on S for this |L|");
  check_bounds->add_flag("--structures", bounds.structures, "Count monochromatic triples and pairs");

  std::string cherries_graph;
  bool per_vertex = false;
  auto* cherries = app.add_subcommand("cherries", "Count cherries");
  cherries->add_option("--graph", cherries_graph, "Graph file")->required();
  cherries->add_flag("--per-vertex", per_vertex, "Include per-vertex middle and leaf counts");

  ThresholdArgs th;
  auto* thresh = app.add_subcommand("threshold", "Largest admissible boundedness level");
  thresh->add_option("--kind", th.kind, "shearer-proper | shearer-rainbow | bkp-local | bkp-global")->required();
  thresh->add_option("--n", th.n, "Host order")->required();
  thresh->add_option("--r", th.r, "Cherry count");
  thresh->add_option("--delta", th.delta, "Maximum degree");

  LllArgs lll;
  auto* lll_check = app.add_subcommand("lll-check", "Exact neighborhood budget");
  lll_check->add_option("--C", lll.constant, "Constant (p, p/q or decimal)")->required();
  lll_check->add_option("--n", lll.n, "Host order for the single-event condition");
  lll_check->add_option("--ell", lll.ell, "|L| for the single-event condition");

  CliqueArgs cl;
  auto* clique = app.add_subcommand("clique-p", "Extract the well-behaved host set P");
  clique->add_option("--coloring", cl.coloring, "Coloring file")->required();
  clique->add_option("--r", cl.r, "Cherry count")->required();
  clique->add_option("--k", cl.k, "Boundedness level")->required();
  clique->add_option("--bound", cl.bound, "local | global (default from --mode)");
  clique->add_option("--retry-cap", cl.retry_cap, "Sampling attempts");
  clique->add_flag("--no-enforce", cl.no_enforce, "Skip the n >= 560 k r^{3/4} precondition");

  EmbedArgs em;
  auto* emb = app.add_subcommand("embed", "Randomized embedding with resampling");
  emb->add_option("--graph", em.graph, "Pattern graph file")->required();
  emb->add_option("--coloring", em.coloring, "Host coloring file")->required();
  emb->add_option("--event-pick", em.event_pick, "first | random")->check(CLI::IsMember({"first", "random"}));
  emb->add_option("--retry-cap", em.retry_cap, "Clique sampling attempts per restart");
  emb->add_flag("--debug-checks", em.debug_checks, "Full rescans after every resample");

  BruteArgs br;
  auto* brute = app.add_subcommand("brute-embed", "Exhaustive embedding search");
  brute->add_option("--graph", br.graph, "Pattern graph file")->required();
  brute->add_option("--coloring", br.coloring, "Host coloring file")->required();
  brute->add_option("--budget", br.budget, "Node budget");

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Re-check an embedding certificate");
  verify->add_option("--certificate", ve.certificate, "Certificate JSON")->required();
  verify->add_option("--graph", ve.graph, "Override the pattern file");
  verify->add_option("--coloring", ve.coloring, "Override the host file");

  std::string r2_coloring;
  std::uint64_t r2_budget = kDefaultNodeBudget;
  auto* radius2 = app.add_subcommand("radius2-search", "Properly colored spanning tree of radius at most two");
  radius2->add_option("--coloring", r2_coloring, "Coloring file")->required();
  radius2->add_option("--budget", r2_budget, "Child sets to try");

  BlockArgs bl;
  auto* block = app.add_subcommand("block-check", "No rainbow copy with more than t vertices in X");
  block->add_option("--coloring", bl.coloring, "Coloring file")->required();
  block->add_option("--graph", bl.graph, "Pattern graph file")->required();
  block->add_option("--block", bl.block, "X as ids and ranges, e.g. 1-12")->required();
  block->add_option("--t", bl.t, "Allowed vertices in X");
  block->add_option("--budget", bl.budget, "Node budget");

  BenchArgs be;
  auto* bench = app.add_subcommand("bench", "Fixed-seed benchmark suites (CSV)");
  bench->add_option("--suite", be.suite, "embed-scaling | clique-scaling | budget-eval")->required();
  bench->add_option("--budget-ms", be.budget_ms, "Stop starting cases after this many milliseconds");
  bench->add_option("--seeds", be.seeds, "Seeds per case (suite default when 0)");

  std::vector<std::string> argv_store;
  argv_store.emplace_back("cherrylab");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen_graph) return cmd_gen_graph(gg, common, out);
    if (*gen_coloring) return cmd_gen_coloring(gc, common, out);
    if (*check_bounds) return cmd_check_bounds(bounds, common, out);
    if (*cherries) return cmd_cherries(cherries_graph, per_vertex, common, out);
    if (*thresh) return cmd_threshold(th, common, out);
    if (*lll_check) return cmd_lll_check(lll, common, out);
    if (*clique) return cmd_clique_p(cl, common, out);
    if (*emb) return cmd_embed(em, common, out);
    if (*brute) return cmd_brute_embed(br, common, out);
    if (*verify) return cmd_verify(ve, common, out);
    if (*radius2) return cmd_radius2(r2_coloring, r2_budget, common, out);
    if (*block) return cmd_block_check(bl, common, out);
    if (*bench) return cmd_bench(be, common, out);
  } catch (const std::logic_error& e) {
    // invalid_argument / out_of_range derive from logic_error and come from
    // user-supplied parameters; anything else is a defect.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
        dynamic_cast<const std::domain_error*>(&e)) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
    err << "internal error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace cherrylab::cli
