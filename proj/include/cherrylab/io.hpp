#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cherrylab/coloring.hpp"
#include "cherrylab/graph.hpp"

namespace cherrylab::io {

// Graph files:
//   p graph <n> <m>
//   e <u> <v>        (m lines, 1 <= u < v <= n)
// Coloring files:
//   p ecoloring <n> <num_colors>
//   c <u> <v> <color>   (every pair u < v exactly once)
// Blank lines are ignored. Loaders throw ParseError with the offending line.

Graph read_graph(std::istream& in);
Coloring read_coloring(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
// Pairs in rank order; num_colors is the number of distinct ids in use.
void write_coloring(std::ostream& out, const Coloring& c);

Graph load_graph(const std::filesystem::path& path);
Coloring load_coloring(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);
void save_coloring(const std::filesystem::path& path, const Coloring& c);

struct RelabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  // labels[v - 1] is the original name of v
};

// Whitespace-separated "a b" edge list with arbitrary vertex names, numbered
// 1.. in order of first appearance. '#' starts a comment.
RelabeledGraph read_edge_list(std::istream& in);

// Embedding certificate (JSON):
//   {pattern_file, host_file, mode, map, seed, resamples, verified}
struct Certificate {
  std::string pattern_file;
  std::string host_file;
  CopyMode mode = CopyMode::proper;
  std::vector<Vertex> map;
  std::uint64_t seed = 0;
  std::uint64_t resamples = 0;
  bool verified = false;

  Embedding embedding() const { return Embedding{map, mode}; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);
Certificate load_certificate(const std::filesystem::path& path);

}  // namespace cherrylab::io
