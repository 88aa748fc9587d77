#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherrylab/coloring.hpp"
#include "cherrylab/graph.hpp"
#include "cherrylab/lll.hpp"
#include "cherrylab/random.hpp"

namespace cherrylab {

enum class EventPick { first, random };

std::string_view to_string(EventPick pick);
EventPick parse_event_pick(std::string_view text);

struct EmbedConfig {
  CopyMode mode = CopyMode::proper;
  std::uint64_t seed = 0;
  std::uint64_t max_resamples = 1'000'000;  // per restart
  std::uint64_t max_restarts = 10;
  std::uint64_t clique_retry_cap = 100;
  EventPick event_pick = EventPick::random;
  unsigned threads = 1;
  // Re-derives the violation set from scratch after every resample and checks
  // the bijection; slow, for tests.
  bool debug_checks = false;
};

// ---------------------------------------------------------------------------
// Clique extraction

struct CliqueResult {
  std::vector<Vertex> P;  // ascending
  std::vector<Vertex> Q;  // ascending complement
  std::size_t target = 0;         // ceil(2 r^{1/4})
  double codegree_cap = 0.0;      // 5 k r^{1/4}, display only
  std::uint64_t attempts = 0;     // samples drawn, including the accepted one
  std::size_t sampled_size = 0;   // |P'| of the accepted sample
};

// Raised when n < 560 k r^{3/4} and the caller asked for the hypothesis to be enforced.
class ThresholdViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when no sample in the retry budget produced a large enough P.
class CliqueFailure : public std::runtime_error {
 public:
  CliqueFailure(const std::string& what, std::uint64_t attempts, std::size_t best_size)
      : std::runtime_error(what), attempts_(attempts), best_size_(best_size) {}
  std::uint64_t attempts() const { return attempts_; }
  std::size_t best_size() const { return best_size_; }

 private:
  std::uint64_t attempts_;
  std::size_t best_size_;
};

// ceil(2 r^{1/4}), exactly: least t with t^4 >= 16 r.
std::size_t clique_target_size(std::uint64_t r);

// Randomized extraction of a properly colored (local) or rainbow (global)
// vertex set P of size ceil(2 r^{1/4}) in which every pair has monochromatic
// co-degree at most 5 k r^{1/4}. Each attempt keeps every host vertex with
// probability 5 r^{1/4} / n and then deletes
//   U1  the smaller end of each sampled pair of co-degree >= 5 k r^{1/4},
//   U2  the smallest vertex of each sampled monochromatic triple,
//   U3  (global only) the smallest vertex of each sampled 4-set carrying two
//       disjoint same-colored edges.
// The accepted set is trimmed to its `target` smallest vertices and re-checked
// by direct scan. r = 0 returns P = {} at once.
//
// Throws std::invalid_argument when c is not k-bounded in `mode`,
// ThresholdViolation when enforce_threshold and n < 560 k r^{3/4}, and
// CliqueFailure once clique_retry_cap attempts are spent.
CliqueResult find_clique_P(const Coloring& c, std::uint64_t r, std::uint64_t k, Boundedness mode,
                           const EmbedConfig& config, bool enforce_threshold = true);

struct CliqueInvariants {
  bool size_ok = false;
  bool coloring_ok = false;  // induced coloring proper (local) or rainbow (global)
  bool codegree_ok = false;  // every pair within 5 k r^{1/4} over all host vertices
  bool all() const { return size_ok && coloring_ok && codegree_ok; }
};

CliqueInvariants check_clique_invariants(const Coloring& c, std::span<const Vertex> P, std::uint64_t r,
                                         std::uint64_t k, Boundedness mode);

// ---------------------------------------------------------------------------
// Random bijection S -> Q

class RandomBijection {
 public:
  // Uniformly random bijection from `domain` (pattern vertices) onto `range`
  // (host vertices); the sizes must agree.
  RandomBijection(std::vector<Vertex> domain, std::vector<Vertex> range, Rng& rng);

  std::span<const Vertex> domain() const { return domain_; }
  bool in_domain(Vertex u) const;
  Vertex image(Vertex u) const;  // u must be in the domain
  void swap_images(Vertex u, Vertex w);

  // Whether the current map is a bijection onto the original range.
  bool is_bijection() const;

 private:
  std::vector<Vertex> domain_;
  std::vector<Vertex> range_sorted_;
  std::vector<std::size_t> slot_;  // pattern vertex -> index in domain_, npos when absent
  std::vector<Vertex> image_;      // by domain index
};

// For each coordinate of `event` that lies in the bijection's domain, in tuple
// order, swaps its image with that of a uniformly drawn domain vertex. Returns
// every pattern vertex whose image may have changed.
std::vector<Vertex> resample_event(RandomBijection& f2, const BadEvent& event, Rng& rng);

// ---------------------------------------------------------------------------
// Embedding

struct EmbedReport {
  bool success = false;
  std::uint64_t restarts = 0;         // restarts begun
  std::uint64_t resamples = 0;        // summed over restarts
  std::uint64_t final_violations = 0; // in the last restart
  std::uint64_t cherries = 0;
  std::size_t ell = 0;                // |L| in the last restart
  bool clique_fallback = false;       // some restart ran with L = {} after clique extraction failed
  bool spanning = true;
  std::uint64_t host_level = 0;       // k_local (proper) or k_global (rainbow) of the host
  ThresholdResult threshold;          // admissible level for (n_host, r)
  bool within_threshold = false;      // host_level <= threshold.k
};

struct EmbedOutcome {
  std::optional<Embedding> embedding;
  EmbedReport report;
};

// Places the ell = ceil(2 r^{1/4}) largest-degree pattern vertices onto a
// clique P in order, the rest by a uniformly random bijection onto the other
// host vertices, then resamples violated events until none remain or the
// budget runs out. A returned embedding has passed check_copy. Throws
// std::invalid_argument when the pattern is larger than the host.
EmbedOutcome embed(const Graph& g, const Coloring& c, const EmbedConfig& config);

}  // namespace cherrylab
