#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cherrylab/coloring.hpp"
#include "cherrylab/constructions.hpp"
#include "cherrylab/embedder.hpp"
#include "cherrylab/graph.hpp"
#include "cherrylab/io.hpp"
#include "cherrylab/lll.hpp"
#include "cherrylab/search.hpp"

namespace py = pybind11;
using namespace cherrylab;

namespace {

Side side_of(const std::string& s) {
  if (s == "L") return Side::large;
  if (s == "S") return Side::small;
  throw std::invalid_argument("side must be 'L' or 'S', got '" + s + "'");
}

py::object class_or_none(const Classification& c) {
  if (c.f1_resolved()) return py::none();
  return py::str(std::string(to_string(*c.cls)));
}

py::dict embed_report(const EmbedReport& r) {
  py::dict d;
  d["success"] = r.success;
  d["restarts"] = r.restarts;
  d["resamples"] = r.resamples;
  d["final_violations"] = r.final_violations;
  d["cherries"] = r.cherries;
  d["ell"] = r.ell;
  d["clique_fallback"] = r.clique_fallback;
  d["spanning"] = r.spanning;
  d["host_level"] = r.host_level;
  d["threshold_k"] = r.threshold.k;
  d["within_threshold"] = r.within_threshold;
  return d;
}

py::dict search_dict(const SearchResult& r) {
  py::dict d;
  d["status"] = std::string(to_string(r.status));
  d["nodes"] = r.nodes;
  d["map"] = r.embedding ? py::cast(r.embedding->map) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cherrylab core: cherries, bounded colorings, local-lemma budgets and embeddings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ThresholdViolation>(m, "ThresholdViolation", PyExc_ValueError);
  py::register_exception<CliqueFailure>(m, "CliqueFailure", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("degree", &Graph::degree)
      .def("max_degree", &Graph::max_degree)
      .def("neighbors", [](const Graph& g, Vertex v) {
        auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  py::class_<Coloring>(m, "Coloring")
      .def(py::init<std::size_t, Color>(), py::arg("n"), py::arg("fill") = 0)
      .def_property_readonly("order", &Coloring::order)
      .def("__call__", &Coloring::at)
      .def("set", [](Coloring& c, Vertex u, Vertex v, Color col) {
        c.at(u, v);  // range check
        c.set(u, v, col);
      })
      .def("distinct_colors", &Coloring::distinct_colors)
      .def("colors", [](const Coloring& c) {
        auto r = c.by_rank();
        return std::vector<Color>(r.begin(), r.end());
      })
      .def("__eq__", [](const Coloring& a, const Coloring& b) { return a == b; });

  // graph-core
  m.def("count_cherries", &count_cherries);
  m.def("leaf_cherry_count", &leaf_cherry_count);
  m.def("degree_order", [](const Graph& g, std::size_t ell) {
    const auto o = degree_order(g, ell);
    py::dict d;
    d["order"] = o.order;
    d["large"] = o.large;
    d["small"] = o.small;
    d["max_small_degree"] = o.max_small_degree;
    d["small_degree_bound_holds"] = o.small_degree_bound_holds;
    return d;
  });
  m.def(
      "extremal_edge_check",
      [](const Graph& g, std::optional<std::vector<Vertex>> subset) {
        const auto r = subset ? extremal_edge_check(g, *subset) : extremal_edge_check(g);
        py::dict d;
        d["bound"] = r.bound;
        d["actual"] = r.actual;
        d["holds"] = r.holds;
        return d;
      },
      py::arg("g"), py::arg("subset") = py::none());

  // colorings
  m.def("boundedness_report", [](const Coloring& c) {
    const auto r = boundedness_report(c);
    py::dict d;
    d["k_local"] = r.k_local;
    d["k_global"] = r.k_global;
    d["per_color_totals"] = r.per_color_totals;
    return d;
  });
  m.def("random_bounded_coloring",
        [](std::size_t n, std::uint64_t k, const std::string& bound, std::uint64_t seed) {
          return random_bounded_coloring(n, k, parse_boundedness(bound), seed);
        },
        py::arg("n"), py::arg("k"), py::arg("bound"), py::arg("seed") = 0);
  m.def("pair_codegree",
        [](const Coloring& c, Vertex a, Vertex b, const std::vector<Vertex>& within) {
          return pair_codegree(c, a, b, within);
        },
        py::arg("c"), py::arg("v1"), py::arg("v3"), py::arg("within") = std::vector<Vertex>{});
  m.def("mono_triple_count", [](const Coloring& c) {
    return for_each_mono_triple(c, kNoLimit, [](const MonoTriple&) {}).count;
  });
  m.def("check_copy", [](const Coloring& c, const Graph& g, const std::vector<Vertex>& map, const std::string& mode) {
    return check_copy(c, g, Embedding{map, parse_copy_mode(mode)}).ok;
  });

  // constructions
  m.def("partition_coloring", &partition_coloring);
  m.def("diam2_coloring", [](std::size_t n, std::size_t ell) { return diam2_coloring(n, ell).coloring; });
  m.def("lex_block_coloring", &lex_block_coloring);
  m.def("build_tree", [](const std::string& kind, std::uint64_t m) {
    if (kind == "cube") return build_tree(TreeKind::radius_two_cube, m);
    if (kind == "square") return build_tree(TreeKind::radius_two_square, m);
    throw std::invalid_argument("tree kind must be 'cube' or 'square'");
  });
  m.def("polarity_graph", &polarity_graph);
  m.def("rook_union", &rook_union, py::arg("m"), py::arg("copies") = 1);
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("max_degree"), py::arg("seed") = 0);
  m.def("diameter", &diameter);

  // lll-engine; rationals cross the boundary as "p/q" strings
  m.def(
      "threshold",
      [](const std::string& kind, std::uint64_t n, std::optional<std::uint64_t> r,
         std::optional<std::uint64_t> delta) {
        ThresholdQuery q{parse_threshold_kind(kind), n, r, delta};
        const auto t = threshold(q);
        py::dict d;
        d["k"] = t.k;
        d["vacuous"] = t.vacuous;
        d["constant"] = to_string(t.constant);
        return d;
      },
      py::arg("kind"), py::arg("n"), py::arg("r") = py::none(), py::arg("delta") = py::none());
  m.def("lll_budget", [](const std::string& mode, const std::string& constant) {
    const auto b = lll_budget(parse_copy_mode(mode), parse_rational(constant));
    py::dict d;
    d["total"] = to_string(b.total);
    py::dict per;
    for (const auto& e : b.per_class) per[py::str(std::string(to_string(e.cls)))] = to_string(e.term);
    d["per_class"] = per;
    return d;
  });
  m.def("closed_form_total", [](const std::string& mode, const std::string& constant) {
    return to_string(closed_form_total(parse_copy_mode(mode), parse_rational(constant)));
  });
  m.def("event_probability", [](const std::string& cls, std::uint64_t n, std::uint64_t ell) {
    for (int i = 1; i <= 10; ++i) {
      auto c = static_cast<EventClass>(i);
      if (to_string(c) == cls) return to_string(event_probability(c, n, ell));
    }
    throw std::invalid_argument("unknown event class '" + cls + "'");
  });
  m.def("classify_cherry", [](const std::string& sides) {
    if (sides.size() != 3) throw std::invalid_argument("cherry needs three sides, e.g. 'LSL'");
    return class_or_none(classify_cherry({side_of(sides.substr(0, 1)), side_of(sides.substr(1, 1)),
                                          side_of(sides.substr(2, 1))}));
  });
  m.def("classify_pair", [](const std::string& sides) {
    if (sides.size() != 4) throw std::invalid_argument("pair needs four sides, e.g. 'LSLS'");
    return class_or_none(classify_pair({side_of(sides.substr(0, 1)), side_of(sides.substr(1, 1)),
                                        side_of(sides.substr(2, 1)), side_of(sides.substr(3, 1))}));
  });

  // embedder
  m.def(
      "find_clique_p",
      [](const Coloring& c, std::uint64_t r, std::uint64_t k, const std::string& bound, std::uint64_t seed,
         std::uint64_t retry_cap, bool enforce_threshold) {
        EmbedConfig config;
        config.seed = seed;
        config.clique_retry_cap = retry_cap;
        const auto res = find_clique_P(c, r, k, parse_boundedness(bound), config, enforce_threshold);
        py::dict d;
        d["P"] = res.P;
        d["target"] = res.target;
        d["attempts"] = res.attempts;
        d["codegree_cap"] = res.codegree_cap;
        return d;
      },
      py::arg("c"), py::arg("r"), py::arg("k"), py::arg("bound") = "local", py::arg("seed") = 0,
      py::arg("retry_cap") = 100, py::arg("enforce_threshold") = true);
  m.def(
      "embed",
      [](const Graph& g, const Coloring& c, const std::string& mode, std::uint64_t seed, std::uint64_t max_resamples,
         std::uint64_t max_restarts, const std::string& event_pick, unsigned threads) {
        EmbedConfig config;
        config.mode = parse_copy_mode(mode);
        config.seed = seed;
        config.max_resamples = max_resamples;
        config.max_restarts = max_restarts;
        config.event_pick = parse_event_pick(event_pick);
        config.threads = threads;
        EmbedOutcome out;
        {
          py::gil_scoped_release release;
          out = embed(g, c, config);
        }
        py::dict d = embed_report(out.report);
        d["map"] = out.embedding ? py::cast(out.embedding->map) : py::none();
        return d;
      },
      py::arg("g"), py::arg("c"), py::arg("mode") = "proper", py::arg("seed") = 0,
      py::arg("max_resamples") = 1'000'000, py::arg("max_restarts") = 10, py::arg("event_pick") = "random",
      py::arg("threads") = 1);
  m.def(
      "brute_force_embed",
      [](const Graph& g, const Coloring& c, const std::string& mode, std::uint64_t budget) {
        return search_dict(brute_force_embed(g, c, parse_copy_mode(mode), budget));
      },
      py::arg("g"), py::arg("c"), py::arg("mode") = "proper", py::arg("budget") = kDefaultNodeBudget);
  m.def(
      "rainbow_block_check",
      [](const Coloring& c, const Graph& h, const std::vector<Vertex>& X, std::size_t t, std::uint64_t budget) {
        return search_dict(rainbow_block_check(c, h, X, t, budget));
      },
      py::arg("c"), py::arg("h"), py::arg("X"), py::arg("t"), py::arg("budget") = kDefaultNodeBudget);
  m.def(
      "radius2_spanning_tree_search",
      [](const Coloring& c, std::uint64_t budget) {
        const auto r = radius2_spanning_tree_search(c, budget);
        py::dict d;
        d["status"] = std::string(to_string(r.status));
        d["nodes"] = r.nodes;
        if (r.witness) {
          std::vector<std::pair<Vertex, Vertex>> edges;
          for (const Edge& e : r.witness->tree.edges()) edges.emplace_back(e.u, e.v);
          d["center"] = r.witness->center;
          d["tree_edges"] = edges;
        }
        return d;
      },
      py::arg("c"), py::arg("budget") = kDefaultNodeBudget);

  // io
  m.def("graph_to_text", [](const Graph& g) {
    std::ostringstream ss;
    io::write_graph(ss, g);
    return ss.str();
  });
  m.def("graph_from_text", [](const std::string& text) {
    std::istringstream ss(text);
    return io::read_graph(ss);
  });
  m.def("coloring_to_text", [](const Coloring& c) {
    std::ostringstream ss;
    io::write_coloring(ss, c);
    return ss.str();
  });
  m.def("coloring_from_text", [](const std::string& text) {
    std::istringstream ss(text);
    return io::read_coloring(ss);
  });
}
