#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cherrylab/types.hpp"

namespace cherrylab {

using Rational = mpq_class;

// "p/q" in lowest terms ("p" when q = 1).
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);  // "p", "p/q" or a terminating decimal

// ---------------------------------------------------------------------------
// Thresholds

enum class ThresholdKind { shearer_proper, shearer_rainbow, bkp_local, bkp_global };

std::string_view to_string(ThresholdKind kind);
ThresholdKind parse_threshold_kind(std::string_view text);  // accepts '-' or '_'

struct ThresholdQuery {
  ThresholdKind kind = ThresholdKind::shearer_proper;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> cherries;    // shearer kinds
  std::optional<std::uint64_t> max_degree;  // bkp kinds
};

struct ThresholdResult {
  std::uint64_t k = 0;
  // Set when the hypothesis is empty (no cherries): every k is admissible and
  // k is clamped to n - 1.
  bool vacuous = false;
  Rational constant;  // 560, 1512, 112/5, 42 or 51
};

// Largest admissible integer k:
//   shearer_proper   n / (560 r^{3/4})     (locally bounded, proper copy)
//   shearer_rainbow  n / (1512 r^{3/4})    (globally bounded, rainbow copy)
//   bkp_local        n / (22.4 Delta^2)
//   bkp_global       n / (42 Delta^2) for n >= 100, else n / (51 Delta^2)
// Throws std::invalid_argument for malformed queries (n = 0, wrong or missing
// parameter, Delta = 0).
ThresholdResult threshold(const ThresholdQuery& query);

// Whether k C r^{3/4} <= n, decided exactly.
bool within_cherry_threshold(std::uint64_t n, std::uint64_t r, std::uint64_t k, std::uint64_t constant);

// ---------------------------------------------------------------------------
// Bad events

enum class EventClass { B1 = 1, B2, B3, B4, B5, B6, B7, B8, B9, B10 };

std::string_view to_string(EventClass cls);

// Whether a pattern vertex is among the ell largest-degree vertices (mapped
// deterministically onto P) or in the randomly placed rest.
enum class Side { large, small };

struct Classification {
  std::optional<EventClass> cls;  // empty: every coordinate is large (resolved by P)
  bool f1_resolved() const { return !cls.has_value(); }
};

// Cherry u1-u2-u3 (u2 the middle, u1 before u3 in degree order). Throws
// std::invalid_argument when u3 is large but u1 is small.
Classification classify_cherry(std::array<Side, 3> sides);

// Disjoint edges (u1 u2)(u3 u4), u1 < u2, u3 < u4, u1 < u3 in degree order.
// Throws std::invalid_argument when a large coordinate appears while u1 is
// small, or when u4 is large but u3 is small.
Classification classify_pair(std::array<Side, 4> sides);

// Number of coordinates placed by the random bijection.
unsigned small_arity(EventClass cls);

// 1 / (n - ell)^{(d)} with d = small_arity(cls). Throws std::invalid_argument
// when n - ell < d.
Rational event_probability(EventClass cls, std::uint64_t n, std::uint64_t ell);

// A violated (cherry or disjoint pair) placement. Pattern coordinates follow
// the degree-order conventions above; host[i] is the image of pattern[i].
struct BadEvent {
  enum class Shape { cherry, disjoint_pair } shape = Shape::cherry;
  std::array<Vertex, 4> pattern{};
  std::array<Vertex, 4> host{};
  EventClass cls = EventClass::B1;

  std::size_t arity() const { return shape == Shape::cherry ? 3 : 4; }
  friend bool operator==(const BadEvent&, const BadEvent&) = default;
};

// ---------------------------------------------------------------------------
// Neighborhood budget

// numerator / (scale C - offset)
struct BoundTerm {
  int numerator = 0;
  int scale = 1;
  int offset = 0;
  Rational at(const Rational& c) const;
};

struct ClassBudget {
  EventClass cls = EventClass::B1;
  BoundTerm pattern_side;  // bound on t^u_i times Pr[B_i]
  BoundTerm host_side;     // bound on t^v_i times Pr[B_i]
  unsigned multiplier = 3; // S- (or Q-) vertices an event can share
  Rational term;           // multiplier (pattern_side + host_side)
};

struct LllBudget {
  Rational constant;
  CopyMode mode = CopyMode::proper;
  std::vector<ClassBudget> per_class;
  Rational total;
};

// Per-class upper bounds on the S-intersecting neighborhood sum. proper uses
// B1-B5 with multiplier 3; rainbow uses B1-B10 with multiplier 4. Throws
// std::invalid_argument for C <= 6.
LllBudget lll_budget(CopyMode mode, const Rational& constant);

// The aggregated closed forms:
//   proper   75/(2C-4) + 78/(C-1)
//   rainbow  100/(2C-4) + 104/(C-1) + 56/(C-1) + 12/(C-2) + 36/(C-3)
//            + 20/(C-4) + 16/(C-5) + 16/(C-6)
Rational closed_form_total(CopyMode mode, const Rational& constant);

struct FeasibilityVerdict {
  Rational event_bound;          // 1 / (n - ell), or 1 when n <= ell
  bool single_event_ok = false;  // event_bound <= 1/4
  bool neighborhood_ok = false;  // budget.total <= 1/4
  bool feasible() const { return single_event_ok && neighborhood_ok; }
};

FeasibilityVerdict lll_feasibility_check(std::uint64_t n, std::uint64_t ell, const LllBudget& budget);

}  // namespace cherrylab
