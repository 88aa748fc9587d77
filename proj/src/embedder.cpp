#include "cherrylab/embedder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace cherrylab {

std::string_view to_string(EventPick pick) { return pick == EventPick::first ? "first" : "random"; }

EventPick parse_event_pick(std::string_view text) {
  if (text == "first") return EventPick::first;
  if (text == "random") return EventPick::random;
  throw std::invalid_argument("unknown event pick '" + std::string(text) + "' (expected first|random)");
}

namespace {

// Seed phases; see derive_seed.
constexpr std::uint64_t kClique = 1;
constexpr std::uint64_t kRestartBase = 1000;
constexpr std::uint64_t kRestartCliqueBase = 2000;

// codegree >= 5 k r^{1/4}  <=>  codegree^4 >= 625 k^4 r
int compare_with_cap(std::uint64_t codegree, std::uint64_t k, std::uint64_t r) {
  mpz_class lhs(codegree);
  lhs = lhs * lhs * lhs * lhs;
  mpz_class kk(k);
  mpz_class rhs = mpz_class(625) * kk * kk * kk * kk * mpz_class(r);
  return cmp(lhs, rhs);
}

std::uint64_t host_level(const Coloring& c, Boundedness mode) {
  return mode == Boundedness::local ? max_local_multiplicity(c) : max_global_multiplicity(c);
}

bool induced_is_proper(const Coloring& c, std::span<const Vertex> set) {
  for (Vertex mid : set)
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] == mid) continue;
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (set[j] == mid) continue;
        if (c(set[i], mid) == c(mid, set[j])) return false;
      }
    }
  return true;
}

bool induced_is_rainbow(const Coloring& c, std::span<const Vertex> set) {
  std::vector<Color> seen;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) seen.push_back(c(set[i], set[j]));
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace

std::size_t clique_target_size(std::uint64_t r) {
  if (r == 0) return 0;
  auto t = static_cast<std::uint64_t>(std::ceil(2.0 * std::pow(static_cast<double>(r), 0.25)));
  auto fourth = [](std::uint64_t x) {
    mpz_class y(x);
    return mpz_class(y * y * y * y);
  };
  const mpz_class need = mpz_class(16) * mpz_class(r);
  while (t > 0 && fourth(t - 1) >= need) --t;
  while (fourth(t) < need) ++t;
  return static_cast<std::size_t>(t);
}

CliqueInvariants check_clique_invariants(const Coloring& c, std::span<const Vertex> P, std::uint64_t r,
                                         std::uint64_t k, Boundedness mode) {
  CliqueInvariants out;
  out.size_ok = P.size() >= clique_target_size(r);
  out.coloring_ok = mode == Boundedness::local ? induced_is_proper(c, P) : induced_is_rainbow(c, P);
  out.codegree_ok = true;
  for (std::size_t i = 0; i < P.size() && out.codegree_ok; ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      if (compare_with_cap(pair_codegree(c, P[i], P[j]), k, r) > 0) {
        out.codegree_ok = false;
        break;
      }
    }
  return out;
}

CliqueResult find_clique_P(const Coloring& c, std::uint64_t r, std::uint64_t k, Boundedness mode,
                           const EmbedConfig& config, bool enforce_threshold) {
  const std::size_t n = c.order();
  if (k < 1) throw std::invalid_argument("find_clique_P needs k >= 1");
  const std::uint64_t level = host_level(c, mode);
  if (level > k) {
    throw std::invalid_argument("coloring is not " + std::string(to_string(mode)) + "ly " + std::to_string(k) +
                                "-bounded (measured " + std::to_string(level) + ")");
  }
  CliqueResult result;
  if (r == 0) {
    result.Q.resize(n);
    std::iota(result.Q.begin(), result.Q.end(), Vertex{1});
    return result;
  }
  if (enforce_threshold && !within_cherry_threshold(n, r, k, 560)) {
    throw ThresholdViolation("threshold violated: n = " + std::to_string(n) + " < 560 k r^{3/4} with k = " +
                             std::to_string(k) + ", r = " + std::to_string(r));
  }
  const double quarter_root = std::pow(static_cast<double>(r), 0.25);
  result.target = clique_target_size(r);
  result.codegree_cap = 5.0 * static_cast<double>(k) * quarter_root;
  const double p = 5.0 * quarter_root / static_cast<double>(n);
  if (result.target > n) {
    throw CliqueFailure("P of size " + std::to_string(result.target) + " cannot fit in " + std::to_string(n) +
                            " host vertices",
                        0, 0);
  }

  Rng rng(derive_seed(config.seed, kClique));
  std::size_t best = 0;
  std::vector<Vertex> sample;
  std::vector<char> removed;
  for (std::uint64_t attempt = 1; attempt <= config.clique_retry_cap; ++attempt) {
    sample.clear();
    for (Vertex v = 1; v <= n; ++v)
      if (rng.bernoulli(p)) sample.push_back(v);
    const std::size_t s = sample.size();
    removed.assign(s, 0);

    // U2: smallest vertex of every monochromatic triple (sample is ascending,
    // so the smallest index is the smallest vertex).
    for (std::size_t m = 0; m < s; ++m)
      for (std::size_t a = 0; a < s; ++a) {
        if (a == m) continue;
        for (std::size_t b = a + 1; b < s; ++b) {
          if (b == m) continue;
          if (c(sample[a], sample[m]) == c(sample[m], sample[b])) removed[std::min(a, m)] = 1;
        }
      }
    // U3: smallest vertex of every 4-set spanning two disjoint same-colored edges.
    if (mode == Boundedness::global) {
      std::vector<std::tuple<Color, std::size_t, std::size_t>> edges;
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = a + 1; b < s; ++b) edges.emplace_back(c(sample[a], sample[b]), a, b);
      std::sort(edges.begin(), edges.end());
      for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size() && std::get<0>(edges[j]) == std::get<0>(edges[i]); ++j) {
          auto [c1, a1, b1] = edges[i];
          auto [c2, a2, b2] = edges[j];
          if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
          removed[std::min(a1, a2)] = 1;
        }
    }
    auto survivors = [&] { return static_cast<std::size_t>(std::count(removed.begin(), removed.end(), 0)); };
    if (survivors() < result.target) {
      best = std::max(best, survivors());
      continue;
    }
    // U1: smaller end of every sampled pair with large monochromatic co-degree.
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s && !removed[a]; ++b) {
        if (compare_with_cap(pair_codegree(c, sample[a], sample[b]), k, r) >= 0) removed[a] = 1;
      }
    }
    const std::size_t kept = survivors();
    best = std::max(best, kept);
    if (kept < result.target) continue;

    for (std::size_t i = 0; i < s && result.P.size() < result.target; ++i)
      if (!removed[i]) result.P.push_back(sample[i]);
    result.attempts = attempt;
    result.sampled_size = s;
    std::vector<char> in_p(n + 1, 0);
    for (Vertex v : result.P) in_p[v] = 1;
    for (Vertex v = 1; v <= n; ++v)
      if (!in_p[v]) result.Q.push_back(v);
    if (!check_clique_invariants(c, result.P, r, k, mode).all()) {
      throw std::logic_error("find_clique_P produced a set violating its invariants");
    }
    return result;
  }
  throw CliqueFailure("no sample reached |P| >= " + std::to_string(result.target) + " in " +
                          std::to_string(config.clique_retry_cap) + " attempts (expected |P'| = " +
                          std::to_string(5.0 * quarter_root) + ", best |P| = " + std::to_string(best) + ")",
                      config.clique_retry_cap, best);
}

// ---------------------------------------------------------------------------

namespace {
constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
}

RandomBijection::RandomBijection(std::vector<Vertex> domain, std::vector<Vertex> range, Rng& rng)
    : domain_(std::move(domain)), range_sorted_(range), image_(std::move(range)) {
  if (domain_.size() != image_.size()) throw std::invalid_argument("bijection domain and range differ in size");
  std::sort(range_sorted_.begin(), range_sorted_.end());
  rng.shuffle(std::span<Vertex>(image_));
  Vertex top = domain_.empty() ? 0 : *std::max_element(domain_.begin(), domain_.end());
  slot_.assign(static_cast<std::size_t>(top) + 1, kAbsent);
  for (std::size_t i = 0; i < domain_.size(); ++i) slot_[domain_[i]] = i;
}

bool RandomBijection::in_domain(Vertex u) const { return u < slot_.size() && slot_[u] != kAbsent; }

Vertex RandomBijection::image(Vertex u) const {
  if (!in_domain(u)) throw std::out_of_range("vertex " + std::to_string(u) + " is not in the bijection domain");
  return image_[slot_[u]];
}

void RandomBijection::swap_images(Vertex u, Vertex w) {
  if (!in_domain(u) || !in_domain(w)) throw std::out_of_range("swap outside the bijection domain");
  std::swap(image_[slot_[u]], image_[slot_[w]]);
}

bool RandomBijection::is_bijection() const {
  std::vector<Vertex> sorted = image_;
  std::sort(sorted.begin(), sorted.end());
  return sorted == range_sorted_;
}

std::vector<Vertex> resample_event(RandomBijection& f2, const BadEvent& event, Rng& rng) {
  std::vector<Vertex> touched;
  const auto domain = f2.domain();
  if (domain.empty()) return touched;
  for (std::size_t i = 0; i < event.arity(); ++i) {
    Vertex u = event.pattern[i];
    if (!f2.in_domain(u)) continue;
    Vertex w = domain[rng.below(domain.size())];
    f2.swap_images(u, w);
    touched.push_back(u);
    if (w != u) touched.push_back(w);
  }
  return touched;
}

// ---------------------------------------------------------------------------

namespace {

struct EventKey {
  BadEvent::Shape shape = BadEvent::Shape::cherry;
  std::array<Vertex, 4> v{};
  friend bool operator==(const EventKey&, const EventKey&) = default;
  friend auto operator<=>(const EventKey&, const EventKey&) = default;
  bool touches(Vertex u) const {
    const std::size_t len = shape == BadEvent::Shape::cherry ? 3 : 4;
    return std::find(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len), u) != v.begin() + static_cast<std::ptrdiff_t>(len);
  }
};

struct EventKeyHash {
  std::size_t operator()(const EventKey& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.shape);
    for (Vertex x : k.v) h = h * 0x100000001b3ULL ^ x;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Tracks which cherries (and, in rainbow mode, disjoint edge pairs) of the
// pattern currently land on monochromatic host structures.
class ViolationTracker {
 public:
  ViolationTracker(const Graph& g, const Coloring& host, std::span<const std::size_t> rank, CopyMode mode,
                   unsigned threads)
      : g_(g), host_(host), rank_(rank), mode_(mode), threads_(std::max(1u, threads)) {
    incident_.resize(g.order() + 1);
    const auto& edges = g.edges();
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
      incident_[edges[i].u].push_back(i);
      incident_[edges[i].v].push_back(i);
    }
  }

  const std::vector<EventKey>& events() const { return events_; }

  void rebuild(std::span<const Vertex> img) {
    img_ = img;
    events_ = full_scan(img);
    index_.clear();
    for (std::size_t i = 0; i < events_.size(); ++i) index_.emplace(events_[i], i);
    if (mode_ == CopyMode::rainbow) {
      const auto& edges = g_.edges();
      edge_color_.resize(edges.size());
      buckets_.clear();
      for (std::uint32_t i = 0; i < edges.size(); ++i) {
        edge_color_[i] = host_(img[edges[i].u], img[edges[i].v]);
        buckets_[edge_color_[i]].push_back(i);
      }
    }
  }

  // Recomputes every event touching `changed` after their images moved.
  void update(std::span<const Vertex> img, std::span<const Vertex> changed) {
    img_ = img;
    std::vector<char> hit(g_.order() + 1, 0);
    for (Vertex u : changed) hit[u] = 1;
    std::erase_if(events_, [&](const EventKey& k) {
      const std::size_t len = k.shape == BadEvent::Shape::cherry ? 3 : 4;
      for (std::size_t i = 0; i < len; ++i)
        if (hit[k.v[i]]) return true;
      return false;
    });
    index_.clear();
    for (std::size_t i = 0; i < events_.size(); ++i) index_.emplace(events_[i], i);

    std::vector<Vertex> seen_changed;
    for (Vertex u : changed) {
      if (hit[u] != 1) continue;
      hit[u] = 2;
      seen_changed.push_back(u);
    }
    for (Vertex u : seen_changed) {
      scan_cherries_as_middle(u, [&](const EventKey& k) { insert(k); });
      for (Vertex mid : g_.neighbors(u)) {
        for (Vertex other : g_.neighbors(mid)) {
          if (other == u) continue;
          if (violated_cherry(other, mid, u)) insert(cherry_key(u, mid, other));
        }
      }
    }
    if (mode_ == CopyMode::rainbow) {
      const auto& edges = g_.edges();
      std::vector<std::uint32_t> moved;
      std::vector<char> mark(edges.size(), 0);
      for (Vertex u : seen_changed)
        for (std::uint32_t e : incident_[u])
          if (!mark[e]) {
            mark[e] = 1;
            moved.push_back(e);
          }
      for (std::uint32_t e : moved) {
        auto& old_bucket = buckets_[edge_color_[e]];
        old_bucket.erase(std::find(old_bucket.begin(), old_bucket.end(), e));
        if (old_bucket.empty()) buckets_.erase(edge_color_[e]);
        edge_color_[e] = host_(img[edges[e].u], img[edges[e].v]);
        buckets_[edge_color_[e]].push_back(e);
      }
      for (std::uint32_t e : moved) {
        for (std::uint32_t f : buckets_[edge_color_[e]]) {
          if (f == e || share_vertex(edges[e], edges[f])) continue;
          insert(pair_key(edges[e], edges[f]));
        }
      }
    }
  }

  // Sorted list of every violated event under `img`.
  std::vector<EventKey> full_scan(std::span<const Vertex> img) {
    img_ = img;
    const std::size_t n = g_.order();
    std::vector<std::vector<EventKey>> parts(threads_);
    auto work = [&](unsigned t) {
      for (Vertex mid = static_cast<Vertex>(1 + t); mid <= n; mid += threads_) {
        scan_cherries_as_middle(mid, [&](const EventKey& k) { parts[t].push_back(k); });
      }
    };
    if (threads_ == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads_; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    std::vector<EventKey> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    if (mode_ == CopyMode::rainbow) {
      const auto& edges = g_.edges();
      std::vector<std::pair<Color, std::uint32_t>> by_color;
      by_color.reserve(edges.size());
      for (std::uint32_t i = 0; i < edges.size(); ++i)
        by_color.emplace_back(host_(img[edges[i].u], img[edges[i].v]), i);
      std::sort(by_color.begin(), by_color.end());
      for (std::size_t i = 0; i < by_color.size(); ++i)
        for (std::size_t j = i + 1; j < by_color.size() && by_color[j].first == by_color[i].first; ++j) {
          const Edge& e = edges[by_color[i].second];
          const Edge& f = edges[by_color[j].second];
          if (!share_vertex(e, f)) out.push_back(pair_key(e, f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static bool share_vertex(const Edge& e, const Edge& f) {
    return e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
  }

  bool violated_cherry(Vertex a, Vertex mid, Vertex b) const {
    return host_(img_[a], img_[mid]) == host_(img_[mid], img_[b]);
  }

  EventKey cherry_key(Vertex a, Vertex mid, Vertex b) const {
    if (rank_[a - 1] > rank_[b - 1]) std::swap(a, b);
    return EventKey{BadEvent::Shape::cherry, {a, mid, b, 0}};
  }

  EventKey pair_key(Edge e, Edge f) const {
    auto orient = [&](Edge x) {
      if (rank_[x.u - 1] > rank_[x.v - 1]) std::swap(x.u, x.v);
      return x;
    };
    e = orient(e);
    f = orient(f);
    if (rank_[e.u - 1] > rank_[f.u - 1]) std::swap(e, f);
    return EventKey{BadEvent::Shape::disjoint_pair, {e.u, e.v, f.u, f.v}};
  }

  template <class Sink>
  void scan_cherries_as_middle(Vertex mid, Sink&& sink) const {
    auto nb = g_.neighbors(mid);
    if (nb.size() < 2) return;
    std::vector<std::pair<Color, Vertex>> around;
    around.reserve(nb.size());
    for (Vertex w : nb) around.emplace_back(host_(img_[mid], img_[w]), w);
    std::sort(around.begin(), around.end());
    for (std::size_t i = 0; i < around.size(); ++i)
      for (std::size_t j = i + 1; j < around.size() && around[j].first == around[i].first; ++j)
        sink(cherry_key(around[i].second, mid, around[j].second));
  }

  void insert(const EventKey& k) {
    if (index_.contains(k)) return;
    index_.emplace(k, events_.size());
    events_.push_back(k);
  }

  const Graph& g_;
  const Coloring& host_;
  std::span<const std::size_t> rank_;
  CopyMode mode_;
  unsigned threads_;
  std::span<const Vertex> img_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<EventKey> events_;
  std::unordered_map<EventKey, std::size_t, EventKeyHash> index_;
  std::vector<Color> edge_color_;
  std::unordered_map<Color, std::vector<std::uint32_t>> buckets_;
};

BadEvent to_bad_event(const EventKey& key, std::span<const Vertex> img, std::span<const std::size_t> rank,
                      std::size_t ell) {
  BadEvent ev;
  ev.shape = key.shape;
  ev.pattern = key.v;
  auto side = [&](Vertex u) { return rank[u - 1] < ell ? Side::large : Side::small; };
  Classification cls;
  if (key.shape == BadEvent::Shape::cherry) {
    cls = classify_cherry({side(key.v[0]), side(key.v[1]), side(key.v[2])});
  } else {
    cls = classify_pair({side(key.v[0]), side(key.v[1]), side(key.v[2]), side(key.v[3])});
  }
  if (cls.f1_resolved()) throw std::logic_error("violated event lies entirely on the clique P");
  ev.cls = *cls.cls;
  for (std::size_t i = 0; i < ev.arity(); ++i) ev.host[i] = img[ev.pattern[i]];
  return ev;
}

}  // namespace

EmbedOutcome embed(const Graph& g, const Coloring& c, const EmbedConfig& config) {
  const std::size_t np = g.order();
  const std::size_t nh = c.order();
  if (np > nh) {
    throw std::invalid_argument("pattern has " + std::to_string(np) + " vertices, host only " + std::to_string(nh));
  }
  const Boundedness level_kind = boundedness_for(config.mode);
  EmbedOutcome outcome;
  EmbedReport& report = outcome.report;
  report.cherries = count_cherries(g);
  report.spanning = np == nh;
  report.host_level = host_level(c, level_kind);
  ThresholdQuery query;
  query.kind = config.mode == CopyMode::proper ? ThresholdKind::shearer_proper : ThresholdKind::shearer_rainbow;
  query.n = nh;
  query.cherries = report.cherries;
  report.threshold = threshold(query);
  report.within_threshold = report.host_level <= report.threshold.k;

  const std::uint64_t r = report.cherries;
  const std::size_t target = clique_target_size(r);
  const std::uint64_t restarts = std::max<std::uint64_t>(1, config.max_restarts);

  for (std::uint64_t restart = 0; restart < restarts; ++restart) {
    report.restarts = restart + 1;
    Rng rng(derive_seed(config.seed, kRestartBase + restart));

    std::vector<Vertex> hosts(nh);
    std::iota(hosts.begin(), hosts.end(), Vertex{1});
    Coloring sub;
    const Coloring* host = &c;
    std::uint64_t level = report.host_level;
    if (!report.spanning) {
      rng.shuffle(std::span<Vertex>(hosts));
      hosts.resize(np);
      std::sort(hosts.begin(), hosts.end());
      sub = c.induced(hosts);
      host = &sub;
      level = host_level(sub, level_kind);
    }

    std::size_t ell = target;
    std::vector<Vertex> P;
    if (ell > 0) {
      if (ell > np || level == 0) {
        ell = 0;
        report.clique_fallback = true;
      } else {
        EmbedConfig clique_config = config;
        clique_config.seed = derive_seed(config.seed, kRestartCliqueBase + restart);
        try {
          P = find_clique_P(*host, r, level, level_kind, clique_config, false).P;
        } catch (const CliqueFailure&) {
          ell = 0;
          report.clique_fallback = true;
        }
      }
    }
    report.ell = ell;

    const DegreeOrder order = degree_order(g, ell);
    std::vector<Vertex> img(np + 1, 0);
    std::vector<char> in_p(np + 1, 0);
    for (std::size_t i = 0; i < ell; ++i) {
      img[order.order[i]] = P[i];
      in_p[P[i]] = 1;
    }
    std::vector<Vertex> Q;
    for (Vertex h = 1; h <= np; ++h)
      if (!in_p[h]) Q.push_back(h);
    RandomBijection f2(order.small, std::move(Q), rng);
    for (Vertex u : order.small) img[u] = f2.image(u);

    ViolationTracker tracker(g, *host, order.rank, config.mode, config.threads);
    tracker.rebuild(img);
    std::uint64_t used = 0;
    bool stuck = false;
    while (!tracker.events().empty() && used < config.max_resamples) {
      const auto& events = tracker.events();
      const EventKey& key = config.event_pick == EventPick::first
                                ? *std::min_element(events.begin(), events.end())
                                : events[rng.below(events.size())];
      BadEvent ev;
      try {
        ev = to_bad_event(key, img, order.rank, ell);
      } catch (const std::logic_error&) {
        stuck = true;
        break;
      }
      auto changed = resample_event(f2, ev, rng);
      for (Vertex u : changed) img[u] = f2.image(u);
      tracker.update(img, changed);
      ++used;
      if (config.debug_checks) {
        auto expected = tracker.full_scan(img);
        auto actual = tracker.events();
        std::sort(actual.begin(), actual.end());
        if (expected != actual) throw std::logic_error("incremental violation set diverged from a full rescan");
        if (!f2.is_bijection()) throw std::logic_error("resampling broke the bijection");
      }
    }
    report.resamples += used;
    report.final_violations = tracker.events().size();
    if (stuck || !tracker.events().empty()) continue;

    Embedding result;
    result.mode = config.mode;
    result.map.resize(np);
    for (Vertex u = 1; u <= np; ++u) result.map[u - 1] = hosts[img[u] - 1];
    if (!check_copy(c, g, result).ok) throw std::logic_error("embed produced a copy that fails check_copy");
    report.success = true;
    outcome.embedding = std::move(result);
    return outcome;
  }
  return outcome;
}

}  // namespace cherrylab
