#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cherrylab/graph.hpp"
#include "cherrylab/types.hpp"

namespace cherrylab {

// Total edge-coloring of K_n, stored as a flat array over pair ranks.
class Coloring {
 public:
  Coloring() = default;

  // All pairs colored `fill`. n must be at least 1.
  explicit Coloring(std::size_t n, Color fill = 0);

  // Builds the coloring pair by pair from color_of(u, v), u < v, in rank order.
  template <class F>
  static Coloring from_function(std::size_t n, F&& color_of) {
    Coloring c(n);
    std::size_t idx = 0;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) c.colors_[idx++] = color_of(u, v);
    }
    return c;
  }

  std::size_t order() const { return n_; }
  std::size_t pair_count() const { return colors_.size(); }

  // Rank of {u, v} in lexicographic pair order; symmetric in its arguments.
  std::size_t pair_rank(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return (static_cast<std::size_t>(u) - 1) * (2 * n_ - u) / 2 + (v - u - 1);
  }

  Color operator()(Vertex u, Vertex v) const { return colors_[pair_rank(u, v)]; }
  Color at(Vertex u, Vertex v) const;  // bounds-checked
  void set(Vertex u, Vertex v, Color color) { colors_[pair_rank(u, v)] = color; }

  std::span<const Color> by_rank() const { return colors_; }

  // Number of distinct color ids in use.
  std::size_t distinct_colors() const;

  // Coloring induced on `vertices` (relabelled 1..|vertices| in the given order).
  Coloring induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Color> colors_;
};

struct BoundednessReport {
  std::uint64_t k_local = 0;
  std::uint64_t k_global = 0;
  // (color, multiplicity), ascending by color.
  std::vector<std::pair<Color, std::uint64_t>> per_color_totals;

  std::uint64_t level(Boundedness b) const { return b == Boundedness::local ? k_local : k_global; }
};

BoundednessReport boundedness_report(const Coloring& c);

// Only k_local / k_global, without the per-color map. Linear in the pair count
// when color ids are dense.
std::uint64_t max_local_multiplicity(const Coloring& c);
std::uint64_t max_global_multiplicity(const Coloring& c);

// Monochromatic triple [a center b] with a < b: c(a, center) == c(center, b).
struct MonoTriple {
  Vertex a;
  Vertex center;
  Vertex b;
  friend bool operator==(const MonoTriple&, const MonoTriple&) = default;
  friend auto operator<=>(const MonoTriple&, const MonoTriple&) = default;
};

// Disjoint same-colored edges {a1 a2}, {b1 b2} with a1 < a2, b1 < b2, a1 < b1.
struct MonoPair {
  Vertex a1;
  Vertex a2;
  Vertex b1;
  Vertex b2;
  friend bool operator==(const MonoPair&, const MonoPair&) = default;
  friend auto operator<=>(const MonoPair&, const MonoPair&) = default;
};

struct ScanSummary {
  std::uint64_t count = 0;   // structures delivered
  bool truncated = false;    // stopped at the limit before exhausting the coloring
};

inline constexpr std::uint64_t kNoLimit = ~std::uint64_t{0};

// Streams monochromatic triples, grouped by center. Each unordered triple is
// reported once; its reversal [b center a] is implied. After a full scan the
// count is checked against n (n - 1) k_local.
ScanSummary for_each_mono_triple(const Coloring& c, std::uint64_t limit,
                                 const std::function<void(const MonoTriple&)>& sink);

// Streams disjoint same-colored edge pairs, grouped by color.
ScanSummary for_each_mono_pair(const Coloring& c, std::uint64_t limit,
                               const std::function<void(const MonoPair&)>& sink);

// |{v2 in Q \ {v1, v3} : c(v1 v2) == c(v2 v3)}|; all host vertices when Q is empty.
std::uint64_t pair_codegree(const Coloring& c, Vertex v1, Vertex v3,
                            std::span<const Vertex> within = {});

// Injective map pattern vertex -> host vertex. map[i] is the image of vertex i + 1.
struct Embedding {
  std::vector<Vertex> map;
  CopyMode mode = CopyMode::proper;

  Vertex operator()(Vertex u) const { return map[u - 1]; }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct CopyViolation {
  enum class Kind { cherry, disjoint_pair } kind = Kind::cherry;
  // cherry: (u1, u2, u3) with u2 the middle; disjoint_pair: (u1, u2)(u3, u4).
  std::vector<Vertex> pattern;
  std::vector<Vertex> host;
};

struct CopyVerdict {
  bool ok = true;
  std::optional<CopyViolation> witness;
};

// Checks the copy of g placed by f. Throws std::invalid_argument when f is not
// an injection of V(g) into the host vertex set.
CopyVerdict check_copy(const Coloring& c, const Graph& g, const Embedding& f);

// Validates that f is an injection of 1..g.order() into 1..c.order().
void require_valid_embedding(const Coloring& c, const Graph& g, const Embedding& f);

// Random coloring of K_n with the requested boundedness level. Deterministic
// given the seed; checked with the exact multiplicity count before return.
Coloring random_bounded_coloring(std::size_t n, std::uint64_t k, Boundedness mode,
                                 std::uint64_t seed);

}  // namespace cherrylab
