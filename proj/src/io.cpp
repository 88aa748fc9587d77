#include "cherrylab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cherrylab::io {

namespace {

using Json = nlohmann::ordered_json;

// Splits a line into tokens; returns false for blank lines.
bool tokenize(const std::string& line, std::vector<std::string>& out) {
  out.clear();
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return !out.empty();
}

std::uint64_t to_uint(const std::string& tok, std::size_t line, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 19) {
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" + tok + "'");
  }
  return std::stoull(tok);
}

struct Header {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::size_t line = 0;
};

Header read_header(std::istream& in, std::string_view kind, std::size_t& lineno, std::vector<std::string>& toks) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!tokenize(line, toks)) continue;
    if (toks.size() != 4 || toks[0] != "p" || toks[1] != kind) {
      throw ParseError(lineno, "expected header 'p " + std::string(kind) + " <n> <count>'");
    }
    return {to_uint(toks[2], lineno, "n"), to_uint(toks[3], lineno, "count"), lineno};
  }
  throw ParseError(lineno, "missing 'p " + std::string(kind) + "' header");
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::size_t lineno = 0;
  std::vector<std::string> toks;
  const Header h = read_header(in, "graph", lineno, toks);
  if (h.a > 0xFFFFFFFFULL) throw ParseError(h.line, "vertex count too large");
  const std::uint64_t n = h.a;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::map<std::pair<Vertex, Vertex>, std::size_t> first_line;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!tokenize(line, toks)) continue;
    if (toks.size() != 3 || toks[0] != "e") throw ParseError(lineno, "expected 'e <u> <v>'");
    const std::uint64_t u = to_uint(toks[1], lineno, "u");
    const std::uint64_t v = to_uint(toks[2], lineno, "v");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(lineno, "self-loop at " + std::to_string(u));
    if (u > v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
    auto key = std::make_pair(static_cast<Vertex>(u), static_cast<Vertex>(v));
    auto [it, fresh] = first_line.emplace(key, lineno);
    if (!fresh) {
      throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v) +
                                   " (first on line " + std::to_string(it->second) + ")");
    }
    edges.push_back(key);
  }
  if (edges.size() != h.b) {
    throw ParseError(h.line, "header declares " + std::to_string(h.b) + " edges, file has " +
                                 std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Coloring read_coloring(std::istream& in) {
  std::size_t lineno = 0;
  std::vector<std::string> toks;
  const Header h = read_header(in, "ecoloring", lineno, toks);
  if (h.a < 1 || h.a > 100000) throw ParseError(h.line, "host order must be in 1..100000");
  const std::size_t n = static_cast<std::size_t>(h.a);
  Coloring c(n);
  std::vector<std::size_t> defined_on(c.pair_count(), 0);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!tokenize(line, toks)) continue;
    if (toks.size() != 4 || toks[0] != "c") throw ParseError(lineno, "expected 'c <u> <v> <color>'");
    const std::uint64_t u = to_uint(toks[1], lineno, "u");
    const std::uint64_t v = to_uint(toks[2], lineno, "v");
    const std::uint64_t col = to_uint(toks[3], lineno, "color");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(lineno, "self-loop at " + std::to_string(u));
    if (u > v) throw ParseError(lineno, "pair endpoints must satisfy u < v");
    if (col > 0xFFFFFFFFULL) throw ParseError(lineno, "color id too large");
    const std::size_t rank = c.pair_rank(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (defined_on[rank]) {
      throw ParseError(lineno, "pair " + std::to_string(u) + " " + std::to_string(v) +
                                   " already colored on line " + std::to_string(defined_on[rank]));
    }
    defined_on[rank] = lineno;
    c.set(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(col));
  }
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (!defined_on[c.pair_rank(u, v)]) {
        throw ParseError(0, "pair " + std::to_string(u) + " " + std::to_string(v) + " has no color");
      }
  if (c.distinct_colors() > h.b) {
    throw ParseError(h.line, "header declares " + std::to_string(h.b) + " colors, file uses " +
                                 std::to_string(c.distinct_colors()));
  }
  return c;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p graph " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

void write_coloring(std::ostream& out, const Coloring& c) {
  const std::size_t n = c.order();
  out << "p ecoloring " << n << ' ' << c.distinct_colors() << '\n';
  auto colors = c.by_rank();
  std::size_t idx = 0;
  std::string buf;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      buf.clear();
      buf += "c ";
      buf += std::to_string(u);
      buf += ' ';
      buf += std::to_string(v);
      buf += ' ';
      buf += std::to_string(colors[idx++]);
      buf += '\n';
      out << buf;
    }
}

Graph load_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_graph(in);
}

Coloring load_coloring(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_coloring(in);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

void save_coloring(const std::filesystem::path& path, const Coloring& c) {
  auto out = open_out(path);
  write_coloring(out, c);
}

RelabeledGraph read_edge_list(std::istream& in) {
  RelabeledGraph out;
  std::map<std::string, Vertex> ids;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<std::string> toks;
  std::string line;
  std::size_t lineno = 0;
  auto id_of = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<Vertex>(ids.size() + 1));
    if (fresh) out.labels.push_back(name);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (!tokenize(line, toks)) continue;
    if (toks.size() != 2) throw ParseError(lineno, "expected two vertex names");
    const Vertex a = id_of(toks[0]);
    const Vertex b = id_of(toks[1]);
    if (a == b) throw ParseError(lineno, "self-loop at '" + toks[0] + "'");
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    if (!seen.insert(key).second) throw ParseError(lineno, "duplicate edge '" + toks[0] + "' '" + toks[1] + "'");
    edges.push_back(key);
  }
  out.graph = Graph::from_edges(out.labels.size(), edges);
  return out;
}

std::string certificate_to_json(const Certificate& cert) {
  Json j;
  j["pattern_file"] = cert.pattern_file;
  j["host_file"] = cert.host_file;
  j["mode"] = std::string(to_string(cert.mode));
  j["map"] = cert.map;
  j["seed"] = cert.seed;
  j["resamples"] = cert.resamples;
  j["verified"] = cert.verified;
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("certificate is not valid JSON: ") + e.what());
  }
  Certificate cert;
  try {
    cert.pattern_file = j.at("pattern_file").get<std::string>();
    cert.host_file = j.at("host_file").get<std::string>();
    cert.mode = parse_copy_mode(j.at("mode").get<std::string>());
    cert.map = j.at("map").get<std::vector<Vertex>>();
    cert.seed = j.at("seed").get<std::uint64_t>();
    cert.resamples = j.at("resamples").get<std::uint64_t>();
    cert.verified = j.at("verified").get<bool>();
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("malformed certificate: ") + e.what());
  }
  return cert;
}

Certificate load_certificate(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return certificate_from_json(ss.str());
}

}  // namespace cherrylab::io
