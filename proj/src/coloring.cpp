#include "cherrylab/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cherrylab/random.hpp"

namespace cherrylab {

Coloring::Coloring(std::size_t n, Color fill) : n_(n) {
  if (n == 0) throw std::invalid_argument("a coloring needs at least one vertex");
  colors_.assign(n * (n - 1) / 2, fill);
}

Color Coloring::at(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) {
    throw std::out_of_range("pair {" + std::to_string(u) + ", " + std::to_string(v) +
                            "} is not an edge of K_" + std::to_string(n_));
  }
  return (*this)(u, v);
}

std::size_t Coloring::distinct_colors() const {
  std::vector<Color> ids(colors_.begin(), colors_.end());
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

Coloring Coloring::induced(std::span<const Vertex> vertices) const {
  for (Vertex v : vertices) {
    if (v < 1 || v > n_) throw std::out_of_range("induced: vertex " + std::to_string(v) + " out of range");
  }
  return from_function(vertices.size(), [&](Vertex a, Vertex b) {
    return (*this)(vertices[a - 1], vertices[b - 1]);
  });
}

namespace {

// Maps color ids onto 0..count-1. Dense ids are used as-is; sparse ids go
// through a sorted lookup table.
class ColorIndex {
 public:
  explicit ColorIndex(const Coloring& c) {
    Color max_id = 0;
    for (Color x : c.by_rank()) max_id = std::max(max_id, x);
    if (static_cast<std::uint64_t>(max_id) < 4 * static_cast<std::uint64_t>(c.pair_count()) + 64) {
      count_ = static_cast<std::size_t>(max_id) + 1;
    } else {
      table_.assign(c.by_rank().begin(), c.by_rank().end());
      std::sort(table_.begin(), table_.end());
      table_.erase(std::unique(table_.begin(), table_.end()), table_.end());
      count_ = table_.size();
    }
  }

  std::size_t count() const { return count_; }

  std::size_t operator()(Color x) const {
    if (table_.empty()) return x;
    return static_cast<std::size_t>(std::lower_bound(table_.begin(), table_.end(), x) - table_.begin());
  }

  Color id(std::size_t index) const { return table_.empty() ? static_cast<Color>(index) : table_[index]; }

 private:
  std::size_t count_ = 0;
  std::vector<Color> table_;
};

std::vector<std::uint64_t> global_counts(const Coloring& c, const ColorIndex& index) {
  std::vector<std::uint64_t> counts(index.count(), 0);
  for (Color x : c.by_rank()) ++counts[index(x)];
  return counts;
}

}  // namespace

std::uint64_t max_global_multiplicity(const Coloring& c) {
  ColorIndex index(c);
  auto counts = global_counts(c, index);
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::uint64_t max_local_multiplicity(const Coloring& c) {
  const std::size_t n = c.order();
  if (n < 2) return 0;
  ColorIndex index(c);
  const std::size_t colors = index.count();
  const auto ranks = c.by_rank();
  // Vertices go in blocks so that every pair is read along a row: (w, v) with
  // w < v sits in row w, contiguous in v. One count table per block vertex;
  // a second pass over the same pairs clears the tables.
  const std::size_t block = std::clamp<std::size_t>((std::size_t{1} << 15) / colors, 1, 8);
  std::vector<std::uint32_t> counts(block * colors, 0);
  std::uint32_t best = 0;
  for (Vertex lo = 1; lo <= n; lo += static_cast<Vertex>(block)) {
    const Vertex hi = static_cast<Vertex>(std::min<std::size_t>(n, lo + block - 1));
    for (std::uint32_t delta : {1u, 0u}) {
      auto visit = [&](std::size_t j, Color x) {
        std::uint32_t& slot = counts[j * colors + index(x)];
        slot = delta ? slot + 1 : 0;
        best = std::max(best, slot);
      };
      for (Vertex w = 1; w < hi; ++w) {
        const Vertex first = std::max<Vertex>(lo, w + 1);
        const std::size_t base = c.pair_rank(w, first);
        for (Vertex v = first; v <= hi; ++v) visit(v - lo, ranks[base + (v - first)]);
      }
      for (Vertex v = lo; v <= hi && v < n; ++v) {
        const std::size_t base = c.pair_rank(v, v + 1);
        for (Vertex w = v + 1; w <= n; ++w) visit(v - lo, ranks[base + (w - v - 1)]);
      }
    }
  }
  return best;
}

BoundednessReport boundedness_report(const Coloring& c) {
  BoundednessReport report;
  ColorIndex index(c);
  auto counts = global_counts(c, index);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    report.per_color_totals.emplace_back(index.id(i), counts[i]);
    report.k_global = std::max(report.k_global, counts[i]);
  }
  report.k_local = max_local_multiplicity(c);
  return report;
}

ScanSummary for_each_mono_triple(const Coloring& c, std::uint64_t limit,
                                 const std::function<void(const MonoTriple&)>& sink) {
  const std::size_t n = c.order();
  ScanSummary summary;
  std::uint64_t k_local = 0;
  std::vector<std::pair<Color, Vertex>> around;
  around.reserve(n);
  for (Vertex center = 1; center <= n; ++center) {
    around.clear();
    for (Vertex w = 1; w <= n; ++w) {
      if (w != center) around.emplace_back(c(center, w), w);
    }
    std::sort(around.begin(), around.end());
    for (std::size_t lo = 0; lo < around.size();) {
      std::size_t hi = lo;
      while (hi < around.size() && around[hi].first == around[lo].first) ++hi;
      k_local = std::max<std::uint64_t>(k_local, hi - lo);
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t j = i + 1; j < hi; ++j) {
          if (summary.count == limit) {
            summary.truncated = true;
            return summary;
          }
          sink(MonoTriple{around[i].second, center, around[j].second});
          ++summary.count;
        }
      }
      lo = hi;
    }
  }
  if (summary.count > static_cast<std::uint64_t>(n) * (n - 1) * k_local) {
    throw std::logic_error("monochromatic triple count exceeds n(n-1)k");
  }
  return summary;
}

ScanSummary for_each_mono_pair(const Coloring& c, std::uint64_t limit,
                               const std::function<void(const MonoPair&)>& sink) {
  const std::size_t n = c.order();
  ColorIndex index(c);
  // Counting sort of the edges by color.
  std::vector<std::size_t> start(index.count() + 1, 0);
  for (Color x : c.by_rank()) ++start[index(x) + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<Edge> bucketed(c.pair_count());
  std::vector<std::size_t> fill(start.begin(), start.end() - 1);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) bucketed[fill[index(c(u, v))]++] = Edge{u, v};
  }
  ScanSummary summary;
  for (std::size_t cls = 0; cls < index.count(); ++cls) {
    for (std::size_t i = start[cls]; i < start[cls + 1]; ++i) {
      for (std::size_t j = i + 1; j < start[cls + 1]; ++j) {
        const Edge& e = bucketed[i];
        const Edge& f = bucketed[j];
        if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
        if (summary.count == limit) {
          summary.truncated = true;
          return summary;
        }
        // Rank order already gives e.u <= f.u; disjointness makes it strict.
        sink(MonoPair{e.u, e.v, f.u, f.v});
        ++summary.count;
      }
    }
  }
  return summary;
}

std::uint64_t pair_codegree(const Coloring& c, Vertex v1, Vertex v3, std::span<const Vertex> within) {
  const std::size_t n = c.order();
  if (v1 < 1 || v3 < 1 || v1 > n || v3 > n) throw std::out_of_range("pair_codegree: vertex out of range");
  if (v1 == v3) throw std::invalid_argument("pair_codegree needs two distinct vertices");
  std::uint64_t count = 0;
  auto visit = [&](Vertex v2) {
    if (v2 != v1 && v2 != v3 && c(v1, v2) == c(v2, v3)) ++count;
  };
  if (within.empty()) {
    for (Vertex v2 = 1; v2 <= n; ++v2) visit(v2);
  } else {
    for (Vertex v2 : within) {
      if (v2 < 1 || v2 > n) throw std::out_of_range("pair_codegree: subset vertex out of range");
      visit(v2);
    }
  }
  return count;
}

void require_valid_embedding(const Coloring& c, const Graph& g, const Embedding& f) {
  if (f.map.size() != g.order()) {
    throw std::invalid_argument("embedding covers " + std::to_string(f.map.size()) +
                                " vertices, pattern has " + std::to_string(g.order()));
  }
  std::vector<bool> used(c.order() + 1, false);
  for (std::size_t i = 0; i < f.map.size(); ++i) {
    Vertex h = f.map[i];
    if (h < 1 || h > c.order()) {
      throw std::invalid_argument("image of pattern vertex " + std::to_string(i + 1) +
                                  " is outside the host (" + std::to_string(h) + ")");
    }
    if (used[h]) throw std::invalid_argument("embedding is not injective: host vertex " + std::to_string(h) + " reused");
    used[h] = true;
  }
}

CopyVerdict check_copy(const Coloring& c, const Graph& g, const Embedding& f) {
  require_valid_embedding(c, g, f);
  CopyVerdict verdict;

  // Cherries, ordered by middle vertex, then by the (u1, u3) pair.
  std::vector<std::pair<Color, Vertex>> around;
  for (Vertex mid = 1; mid <= g.order() && verdict.ok; ++mid) {
    around.clear();
    for (Vertex w : g.neighbors(mid)) around.emplace_back(c(f(mid), f(w)), w);
    std::sort(around.begin(), around.end());
    std::optional<std::pair<Vertex, Vertex>> first;
    for (std::size_t i = 0; i + 1 < around.size(); ++i) {
      if (around[i].first != around[i + 1].first) continue;
      std::pair<Vertex, Vertex> cand{around[i].second, around[i + 1].second};
      // Within one color group the first two entries are the smallest pair.
      if (i > 0 && around[i - 1].first == around[i].first) continue;
      if (!first || cand < *first) first = cand;
    }
    if (first) {
      auto [u1, u3] = *first;
      verdict.ok = false;
      verdict.witness = CopyViolation{CopyViolation::Kind::cherry, {u1, mid, u3}, {f(u1), f(mid), f(u3)}};
    }
  }
  if (!verdict.ok || f.mode == CopyMode::proper) return verdict;

  // With no monochromatic cherry left, equal image colors mean disjoint edges.
  const auto& edges = g.edges();
  std::vector<std::pair<Color, std::size_t>> by_color;
  by_color.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) by_color.emplace_back(c(f(edges[i].u), f(edges[i].v)), i);
  std::sort(by_color.begin(), by_color.end());
  std::optional<std::pair<std::size_t, std::size_t>> first;
  for (std::size_t i = 0; i + 1 < by_color.size(); ++i) {
    if (by_color[i].first != by_color[i + 1].first) continue;
    if (i > 0 && by_color[i - 1].first == by_color[i].first) continue;
    std::pair<std::size_t, std::size_t> cand{by_color[i].second, by_color[i + 1].second};
    if (!first || cand < *first) first = cand;
  }
  if (first) {
    const Edge& e = edges[first->first];
    const Edge& h = edges[first->second];
    verdict.ok = false;
    verdict.witness = CopyViolation{CopyViolation::Kind::disjoint_pair,
                                    {e.u, e.v, h.u, h.v},
                                    {f(e.u), f(e.v), f(h.u), f(h.v)}};
  }
  return verdict;
}

Coloring random_bounded_coloring(std::size_t n, std::uint64_t k, Boundedness mode, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_bounded_coloring needs n >= 2");
  if (k < 1) throw std::invalid_argument("random_bounded_coloring needs k >= 1");
  Rng rng(seed);
  Coloring out;
  if (mode == Boundedness::local) {
    // Round-robin 1-factorization (near-1-factorization for odd n) on a random
    // relabelling, then k color classes merged into one color at a time.
    std::vector<std::uint64_t> label(n);
    std::iota(label.begin(), label.end(), 0);
    rng.shuffle(std::span<std::uint64_t>(label));
    const std::uint64_t classes = n % 2 == 0 ? n - 1 : n;
    const std::uint64_t half = (classes + 1) / 2;  // inverse of 2 modulo an odd class count
    std::vector<std::uint64_t> merged(classes);
    std::iota(merged.begin(), merged.end(), 0);
    rng.shuffle(std::span<std::uint64_t>(merged));
    // color_of_sum[s] is the merged color of class (s mod classes) * half.
    std::vector<Color> color_of_sum(2 * classes);
    for (std::uint64_t s = 0; s < color_of_sum.size(); ++s)
      color_of_sum[s] = static_cast<Color>(merged[(s % classes) * half % classes] / k);
    out = Coloring::from_function(n, [&](Vertex u, Vertex v) {
      const std::uint64_t a = label[u - 1];
      const std::uint64_t b = label[v - 1];
      if (n % 2 == 0 && a == n - 1) return static_cast<Color>(merged[b] / k);
      if (n % 2 == 0 && b == n - 1) return static_cast<Color>(merged[a] / k);
      return color_of_sum[a + b];
    });
    if (max_local_multiplicity(out) > k) throw std::logic_error("local generator exceeded its bound");
  } else {
    std::vector<std::uint64_t> slots(n * (n - 1) / 2);
    std::iota(slots.begin(), slots.end(), 0);
    rng.shuffle(std::span<std::uint64_t>(slots));
    std::vector<Color> colors(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) colors[slots[i]] = static_cast<Color>(i / k);
    out = Coloring::from_function(n, [&, idx = std::size_t{0}](Vertex, Vertex) mutable { return colors[idx++]; });
    if (max_global_multiplicity(out) > k) throw std::logic_error("global generator exceeded its bound");
  }
  return out;
}

}  // namespace cherrylab
