#include "cherrylab/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace cherrylab {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Host colors relabelled 0..m-1 by rank so the rainbow counter can be a flat array.
struct DenseColors {
  std::vector<std::uint32_t> by_rank;
  std::size_t count = 0;

  explicit DenseColors(const Coloring& c) {
    auto raw = c.by_rank();
    std::vector<Color> distinct(raw.begin(), raw.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    count = distinct.size();
    by_rank.reserve(raw.size());
    for (Color x : raw)
      by_rank.push_back(static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), x) -
                                                   distinct.begin()));
  }
};

std::vector<Vertex> placement_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order;
  std::vector<char> placed(n + 1, 0);
  std::vector<std::size_t> placed_nb(n + 1, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    for (Vertex u = 1; u <= n; ++u) {
      if (placed[u]) continue;
      if (best == 0 || placed_nb[u] > placed_nb[best] ||
          (placed_nb[u] == placed_nb[best] && g.degree(u) > g.degree(best))) {
        best = u;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) ++placed_nb[w];
  }
  return order;
}

class Backtracker {
 public:
  Backtracker(const Graph& g, const Coloring& c, CopyMode mode, std::uint64_t budget)
      : g_(g), c_(c), mode_(mode), budget_(budget), colors_(c), order_(placement_order(g)) {
    img_.assign(g.order() + 1, 0);
    used_.assign(c.order() + 1, 0);
    incident_.resize(g.order() + 1);
    if (mode == CopyMode::rainbow) color_uses_.assign(colors_.count, 0);
  }

  // Requires more than t image vertices inside X.
  void require_in_block(std::span<const Vertex> X, std::size_t t) {
    in_x_.assign(c_.order() + 1, 0);
    for (Vertex v : X) {
      if (v < 1 || v > c_.order()) throw std::invalid_argument("block vertex " + std::to_string(v) + " out of range");
      in_x_[v] = 1;
    }
    need_in_x_ = t + 1;
  }

  SearchResult run() {
    SearchResult out;
    if (g_.order() > c_.order()) {
      out.status = SearchStatus::none;
      return out;
    }
    const bool hit = extend(0);
    out.nodes = nodes_;
    if (hit) {
      out.status = SearchStatus::found;
      Embedding e;
      e.mode = mode_;
      e.map.assign(img_.begin() + 1, img_.end());
      out.embedding = std::move(e);
    } else {
      out.status = exhausted_budget_ ? SearchStatus::inconclusive : SearchStatus::none;
    }
    return out;
  }

 private:
  std::uint32_t dense(Vertex a, Vertex b) const { return colors_.by_rank[c_.pair_rank(a, b)]; }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return in_x_count_ >= need_in_x_;
    if (in_x_count_ + (order_.size() - depth) < need_in_x_) return false;
    const Vertex u = order_[depth];
    std::vector<std::pair<Vertex, std::uint32_t>> edges;  // (placed neighbor, dense color)
    for (Vertex h = 1; h <= c_.order(); ++h) {
      if (used_[h]) continue;
      if (++nodes_ > budget_) {
        exhausted_budget_ = true;
        return false;
      }
      edges.clear();
      for (Vertex w : g_.neighbors(u))
        if (img_[w] != 0) edges.emplace_back(w, dense(h, img_[w]));
      if (!admissible(edges)) continue;
      place(u, h, edges);
      const bool hit = extend(depth + 1);
      if (hit) return true;
      unplace(u, h, edges);
      if (exhausted_budget_) return false;
    }
    return false;
  }

  bool admissible(const std::vector<std::pair<Vertex, std::uint32_t>>& edges) const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (edges[i].second == edges[j].second) return false;
      const auto& at_w = incident_[edges[i].first];
      if (std::find(at_w.begin(), at_w.end(), edges[i].second) != at_w.end()) return false;
      if (mode_ == CopyMode::rainbow && color_uses_[edges[i].second] > 0) return false;
    }
    return true;
  }

  void place(Vertex u, Vertex h, const std::vector<std::pair<Vertex, std::uint32_t>>& edges) {
    img_[u] = h;
    used_[h] = 1;
    if (!in_x_.empty() && in_x_[h]) ++in_x_count_;
    for (auto [w, col] : edges) {
      incident_[w].push_back(col);
      incident_[u].push_back(col);
      if (mode_ == CopyMode::rainbow) ++color_uses_[col];
    }
  }

  void unplace(Vertex u, Vertex h, const std::vector<std::pair<Vertex, std::uint32_t>>& edges) {
    for (auto [w, col] : edges) {
      incident_[w].pop_back();
      if (mode_ == CopyMode::rainbow) --color_uses_[col];
    }
    incident_[u].clear();
    if (!in_x_.empty() && in_x_[h]) --in_x_count_;
    used_[h] = 0;
    img_[u] = 0;
  }

  const Graph& g_;
  const Coloring& c_;
  CopyMode mode_;
  std::uint64_t budget_;
  DenseColors colors_;
  std::vector<Vertex> order_;
  std::vector<Vertex> img_;
  std::vector<char> used_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint32_t> color_uses_;
  std::vector<char> in_x_;
  std::size_t in_x_count_ = 0;
  std::size_t need_in_x_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_budget_ = false;
};

}  // namespace

SearchResult brute_force_embed(const Graph& g, const Coloring& c, CopyMode mode, std::uint64_t node_budget) {
  Backtracker bt(g, c, mode, node_budget);
  auto result = bt.run();
  if (result.embedding && !check_copy(c, g, *result.embedding).ok) {
    throw std::logic_error("brute_force_embed returned a copy that fails check_copy");
  }
  return result;
}

SearchResult rainbow_block_check(const Coloring& c, const Graph& h, std::span<const Vertex> X, std::size_t t,
                                 std::uint64_t node_budget) {
  Backtracker bt(h, c, CopyMode::rainbow, node_budget);
  bt.require_in_block(X, t);
  auto result = bt.run();
  if (result.embedding && !check_copy(c, h, *result.embedding).ok) {
    throw std::logic_error("rainbow_block_check returned a copy that fails check_copy");
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

// Kuhn's augmenting paths: left vertices z, right slots.
class Matcher {
 public:
  explicit Matcher(const std::vector<std::vector<std::size_t>>& adj, std::size_t slots)
      : adj_(adj), owner_(slots, kFree) {}

  bool perfect() {
    for (std::size_t z = 0; z < adj_.size(); ++z) {
      seen_.assign(owner_.size(), 0);
      if (!augment(z)) return false;
    }
    return true;
  }

  const std::vector<std::size_t>& owner() const { return owner_; }
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

 private:
  bool augment(std::size_t z) {
    for (std::size_t s : adj_[z]) {
      if (seen_[s]) continue;
      seen_[s] = 1;
      if (owner_[s] == kFree || augment(owner_[s])) {
        owner_[s] = z;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> owner_;
  std::vector<char> seen_;
};

}  // namespace

Radius2Result radius2_spanning_tree_search(const Coloring& c, std::uint64_t node_budget) {
  const std::size_t n = c.order();
  Radius2Result out;
  if (n == 0) return out;

  auto finish = [&](Vertex x, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    TreeWitness w;
    w.tree = Graph::from_edges(n, edges);
    w.center = x;
    w.embedding.mode = CopyMode::proper;
    w.embedding.map.resize(n);
    for (Vertex v = 1; v <= n; ++v) w.embedding.map[v - 1] = v;
    if (w.tree.size() + 1 != n || !check_copy(c, w.tree, w.embedding).ok) {
      throw std::logic_error("radius2 search produced an invalid witness");
    }
    out.status = SearchStatus::found;
    out.witness = std::move(w);
  };

  if (n == 1) {
    finish(1, {});
    return out;
  }

  for (Vertex x = 1; x <= n; ++x) {
    // Color classes at x; a child set takes at most one vertex per class.
    std::vector<std::pair<Color, Vertex>> at_x;
    for (Vertex v = 1; v <= n; ++v)
      if (v != x) at_x.emplace_back(c(x, v), v);
    std::sort(at_x.begin(), at_x.end());
    std::vector<std::vector<Vertex>> classes;
    for (std::size_t i = 0; i < at_x.size(); ++i) {
      if (i == 0 || at_x[i].first != at_x[i - 1].first) classes.emplace_back();
      classes.back().push_back(at_x[i].second);
    }
    std::vector<std::size_t> pick(classes.size(), 0);  // 0 = none, i = classes[k][i - 1]
    while (true) {
      // next child set (odometer); the all-zero start is skipped because it is empty
      std::size_t k = 0;
      while (k < pick.size() && pick[k] == classes[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
      ++pick[k];
      if (++out.nodes > node_budget) {
        out.status = SearchStatus::inconclusive;
        return out;
      }

      std::vector<Vertex> children;
      std::vector<char> role(n + 1, 0);  // 1 child, 2 center
      role[x] = 2;
      for (std::size_t j = 0; j < pick.size(); ++j)
        if (pick[j]) {
          children.push_back(classes[j][pick[j] - 1]);
          role[children.back()] = 1;
        }
      std::vector<Vertex> rest;
      for (Vertex v = 1; v <= n; ++v)
        if (!role[v]) rest.push_back(v);

      // Slot (child index, color) for every color a child may use downward.
      std::vector<std::pair<std::size_t, Color>> slots;
      std::vector<std::vector<std::size_t>> adj(rest.size());
      for (std::size_t zi = 0; zi < rest.size(); ++zi) {
        for (std::size_t yi = 0; yi < children.size(); ++yi) {
          const Vertex y = children[yi];
          const Color col = c(y, rest[zi]);
          if (col == c(x, y)) continue;
          auto key = std::make_pair(yi, col);
          auto it = std::find(slots.begin(), slots.end(), key);
          std::size_t s = static_cast<std::size_t>(it - slots.begin());
          if (it == slots.end()) slots.push_back(key);
          adj[zi].push_back(s);
        }
        if (adj[zi].empty()) break;
      }
      if (std::any_of(adj.begin(), adj.end(), [](const auto& a) { return a.empty(); })) continue;
      Matcher matcher(adj, slots.size());
      if (!matcher.perfect()) continue;

      std::vector<std::pair<Vertex, Vertex>> edges;
      for (Vertex y : children) edges.emplace_back(x, y);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const std::size_t z = matcher.owner()[s];
        if (z != Matcher::kFree) edges.emplace_back(children[slots[s].first], rest[z]);
      }
      finish(x, edges);
      return out;
    }
  }
  out.status = SearchStatus::none;
  return out;
}

}  // namespace cherrylab
