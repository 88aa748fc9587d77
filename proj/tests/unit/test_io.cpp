#include <gtest/gtest.h>

#include <sstream>

#include "cherrylab/constructions.hpp"
#include "cherrylab/io.hpp"
#include "oracles.hpp"

using namespace cherrylab;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(GraphIo, RoundTrip) {
  const Graph g = build_tree(TreeKind::radius_two_cube, 27);
  std::stringstream s;
  io::write_graph(s, g);
  EXPECT_EQ(io::read_graph(s), g);
}

TEST(ColoringIo, RoundTripIsByteIdentical) {
  std::stringstream first;
  io::write_coloring(first, partition_coloring(12));
  const Coloring back = io::read_coloring(first);
  EXPECT_EQ(back, partition_coloring(12));
  std::stringstream second;
  io::write_coloring(second, back);
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(first.str().substr(0, 20), "p ecoloring 12 10\nc ");
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return io::read_graph(in);
  };
  EXPECT_NE(error_of([&] { parse("p graph 3 1\ne 2 2\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([&] { parse("p graph 3 2\ne 1 2\ne 1 2\n"); }).find("line 3"), std::string::npos);
  EXPECT_NE(error_of([&] { parse("p graph 3 1\ne 1 4\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([&] { parse("p graph 3 1\n\ne 2 1\n"); }).find("line 3"), std::string::npos);
  EXPECT_FALSE(error_of([&] { parse("p graph 3 2\ne 1 2\n"); }).empty());
  EXPECT_FALSE(error_of([&] { parse("e 1 2\n"); }).empty());
  EXPECT_EQ(parse("p graph 3 1\n\ne 1 3\n").size(), 1u);
}

TEST(ColoringIo, MissingPairIsNamed) {
  std::istringstream in("p ecoloring 3 1\nc 1 2 0\nc 1 3 0\n");
  const std::string msg = error_of([&] { io::read_coloring(in); });
  EXPECT_NE(msg.find("2 3"), std::string::npos) << msg;
}

TEST(ColoringIo, DeclaredColorCount) {
  std::istringstream ok("p ecoloring 3 5\nc 1 2 0\nc 1 3 1\nc 2 3 4\n");
  EXPECT_EQ(io::read_coloring(ok).distinct_colors(), 3u);
  std::istringstream low("p ecoloring 3 1\nc 1 2 0\nc 1 3 1\nc 2 3 4\n");
  EXPECT_FALSE(error_of([&] { io::read_coloring(low); }).empty());
  std::istringstream dup("p ecoloring 3 2\nc 1 2 0\nc 1 2 1\nc 1 3 1\nc 2 3 1\n");
  EXPECT_NE(error_of([&] { io::read_coloring(dup); }).find("line 3"), std::string::npos);
}

TEST(EdgeList, RelabelsInOrderOfAppearance) {
  std::istringstream in("# comment\nalpha beta\nbeta gamma  # trailing\n\ngamma alpha\n");
  const auto r = io::read_edge_list(in);
  EXPECT_EQ(r.graph, oracle::cycle(3));
  EXPECT_EQ(r.labels, (std::vector<std::string>{"alpha", "beta", "gamma"}));
  std::istringstream dup("a b\nb a\n");
  EXPECT_FALSE(error_of([&] { io::read_edge_list(dup); }).empty());
}

TEST(Certificate, JsonRoundTrip) {
  io::Certificate cert;
  cert.pattern_file = "tree.graph";
  cert.host_file = "host.col";
  cert.mode = CopyMode::rainbow;
  cert.map = {3, 1, 2};
  cert.seed = 42;
  cert.resamples = 7;
  cert.verified = true;
  const std::string json = io::certificate_to_json(cert);
  EXPECT_EQ(io::certificate_from_json(json), cert);
  EXPECT_LT(json.find("pattern_file"), json.find("map"));
  EXPECT_ANY_THROW(io::certificate_from_json("{\"mode\": \"proper\"}"));
}
