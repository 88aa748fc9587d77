#include "cherrylab/lll.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cherrylab {

std::string to_string(const Rational& x) {
  Rational y = x;
  y.canonicalize();
  return y.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string whole = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      bool negative = !whole.empty() && whole[0] == '-';
      if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(s);
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      mpz_class digits(whole.empty() || whole == "-" ? std::string("0") : whole, 10);
      mpz_class tail(frac, 10);
      Rational out(digits * scale + (negative ? -tail : tail), scale);
      out.canonicalize();
      return out;
    }
    Rational out(s, 10);
    if (out.get_den() == 0) throw std::invalid_argument(s);
    out.canonicalize();
    return out;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

// ---------------------------------------------------------------------------

std::string_view to_string(ThresholdKind kind) {
  switch (kind) {
    case ThresholdKind::shearer_proper: return "shearer_proper";
    case ThresholdKind::shearer_rainbow: return "shearer_rainbow";
    case ThresholdKind::bkp_local: return "bkp_local";
    case ThresholdKind::bkp_global: return "bkp_global";
  }
  return "?";
}

ThresholdKind parse_threshold_kind(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '-', '_');
  for (auto kind : {ThresholdKind::shearer_proper, ThresholdKind::shearer_rainbow, ThresholdKind::bkp_local,
                    ThresholdKind::bkp_global}) {
    if (s == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown threshold kind '" + std::string(text) + "'");
}

bool within_cherry_threshold(std::uint64_t n, std::uint64_t r, std::uint64_t k, std::uint64_t constant) {
  // k C r^{3/4} <= n  <=>  (k C)^4 r^3 <= n^4
  mpz_class lhs = mpz_class(k) * constant;
  lhs = lhs * lhs * lhs * lhs;
  mpz_class rr(r);
  lhs *= rr * rr * rr;
  mpz_class nn(n);
  return lhs <= nn * nn * nn * nn;
}

namespace {

std::uint64_t floor_cherry_formula(std::uint64_t n, std::uint64_t r, std::uint64_t constant) {
  double estimate = static_cast<double>(n) / (static_cast<double>(constant) * std::pow(static_cast<double>(r), 0.75));
  std::uint64_t k = estimate < 1.0 ? 0 : static_cast<std::uint64_t>(estimate);
  while (k > 0 && !within_cherry_threshold(n, r, k, constant)) --k;
  while (within_cherry_threshold(n, r, k + 1, constant)) ++k;
  return k;
}

}  // namespace

ThresholdResult threshold(const ThresholdQuery& query) {
  if (query.n == 0) throw std::invalid_argument("threshold: n must be positive");
  ThresholdResult out;
  const bool shearer = query.kind == ThresholdKind::shearer_proper || query.kind == ThresholdKind::shearer_rainbow;
  if (shearer) {
    if (!query.cherries || query.max_degree) {
      throw std::invalid_argument("threshold: " + std::string(to_string(query.kind)) + " takes r, not Delta");
    }
    const std::uint64_t constant = query.kind == ThresholdKind::shearer_proper ? 560 : 1512;
    out.constant = constant;
    if (*query.cherries == 0) {
      out.vacuous = true;
      out.k = query.n - 1;
      return out;
    }
    out.k = floor_cherry_formula(query.n, *query.cherries, constant);
    return out;
  }
  if (!query.max_degree || query.cherries) {
    throw std::invalid_argument("threshold: " + std::string(to_string(query.kind)) + " takes Delta, not r");
  }
  const std::uint64_t delta = *query.max_degree;
  if (delta == 0) throw std::invalid_argument("threshold: Delta must be at least 1");
  const mpz_class d2 = mpz_class(delta) * delta;
  mpz_class k;
  if (query.kind == ThresholdKind::bkp_local) {
    out.constant = Rational(112, 5);
    k = mpz_class(5) * query.n / (mpz_class(112) * d2);
  } else {
    const unsigned long c = query.n >= 100 ? 42 : 51;
    out.constant = static_cast<unsigned long>(c);
    k = mpz_class(query.n) / (mpz_class(c) * d2);
  }
  out.k = k.get_ui();
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(EventClass cls) {
  static constexpr std::array<std::string_view, 10> names{"B1", "B2", "B3", "B4", "B5",
                                                          "B6", "B7", "B8", "B9", "B10"};
  return names[static_cast<int>(cls) - 1];
}

Classification classify_cherry(std::array<Side, 3> s) {
  using enum Side;
  if (s[2] == large && s[0] == small) {
    throw std::invalid_argument("cherry membership violates ordering: u3 large while u1 small");
  }
  if (s[0] == small) return {s[1] == small ? EventClass::B1 : EventClass::B3};
  // u1 large from here on.
  if (s[1] == small && s[2] == small) return {EventClass::B2};
  if (s[1] == large && s[2] == small) return {EventClass::B4};
  if (s[1] == small && s[2] == large) return {EventClass::B5};
  return {};  // all large
}

Classification classify_pair(std::array<Side, 4> s) {
  using enum Side;
  const bool any_large = std::find(s.begin(), s.end(), large) != s.end();
  if (s[0] == small) {
    if (any_large) throw std::invalid_argument("pair membership violates ordering: large vertex while u1 small");
    return {EventClass::B6};
  }
  if (s[3] == large && s[2] == small) {
    throw std::invalid_argument("pair membership violates ordering: u4 large while u3 small");
  }
  const bool u2 = s[1] == small, u3 = s[2] == small, u4 = s[3] == small;
  if (u2 && u3 && u4) return {EventClass::B7};
  if (!u2 && u3 && u4) return {EventClass::B8};
  if (u2 && !u3 && u4) return {EventClass::B9};
  if (!u3 && (u2 != u4)) return {EventClass::B10};
  return {};  // all large
}

unsigned small_arity(EventClass cls) {
  switch (cls) {
    case EventClass::B1: return 3;
    case EventClass::B2:
    case EventClass::B3: return 2;
    case EventClass::B4:
    case EventClass::B5: return 1;
    case EventClass::B6: return 4;
    case EventClass::B7: return 3;
    case EventClass::B8:
    case EventClass::B9: return 2;
    case EventClass::B10: return 1;
  }
  return 0;
}

Rational event_probability(EventClass cls, std::uint64_t n, std::uint64_t ell) {
  const unsigned d = small_arity(cls);
  if (n < ell || n - ell < d) {
    throw std::invalid_argument("event_probability: n - ell = " + std::to_string(n < ell ? 0 : n - ell) +
                                " is smaller than the class arity " + std::to_string(d));
  }
  mpz_class falling = 1;
  for (unsigned i = 0; i < d; ++i) falling *= mpz_class(n - ell - i);
  return Rational(mpz_class(1), falling);
}

// ---------------------------------------------------------------------------

Rational BoundTerm::at(const Rational& c) const {
  Rational denom = Rational(scale) * c - offset;
  return Rational(numerator) / denom;
}

namespace {

struct ClassCoefficients {
  EventClass cls;
  BoundTerm pattern_side;
  BoundTerm host_side;
};

// Corollary coefficients, one row per class: the bound on t^u_i Pr[B_i] and
// on t^v_i Pr[B_i] as numerator / (scale C - offset).
constexpr std::array<ClassCoefficients, 10> kCoefficients{{
    {EventClass::B1, {3, 2, 4}, {1, 1, 1}},
    {EventClass::B2, {8, 1, 2}, {4, 1, 1}},
    {EventClass::B3, {3, 1, 2}, {1, 1, 1}},
    {EventClass::B4, {4, 1, 1}, {3, 1, 1}},
    {EventClass::B5, {10, 1, 1}, {3, 1, 1}},
    {EventClass::B6, {4, 1, 5}, {4, 1, 6}},
    {EventClass::B7, {5, 1, 4}, {5, 1, 3}},
    {EventClass::B8, {1, 1, 1}, {4, 1, 3}},
    {EventClass::B9, {3, 1, 2}, {1, 1, 1}},
    {EventClass::B10, {4, 1, 1}, {8, 1, 1}},
}};

// A cherry event meets at most 3 vertices of S (and of Q); once disjoint edge
// pairs are in play an event can meet 4.
unsigned intersection_multiplier(CopyMode mode) { return mode == CopyMode::proper ? 3 : 4; }

void require_constant(const Rational& c) {
  if (c <= 6) throw std::invalid_argument("lll_budget needs C > 6, got " + to_string(c));
}

}  // namespace

LllBudget lll_budget(CopyMode mode, const Rational& constant) {
  require_constant(constant);
  LllBudget budget;
  budget.constant = constant;
  budget.mode = mode;
  budget.total = 0;
  const std::size_t classes = mode == CopyMode::proper ? 5 : 10;
  for (std::size_t i = 0; i < classes; ++i) {
    const auto& row = kCoefficients[i];
    ClassBudget entry;
    entry.cls = row.cls;
    entry.pattern_side = row.pattern_side;
    entry.host_side = row.host_side;
    entry.multiplier = intersection_multiplier(mode);
    entry.term = Rational(entry.multiplier) * (row.pattern_side.at(constant) + row.host_side.at(constant));
    entry.term.canonicalize();
    budget.total += entry.term;
    budget.per_class.push_back(entry);
  }
  budget.total.canonicalize();
  return budget;
}

Rational closed_form_total(CopyMode mode, const Rational& c) {
  require_constant(c);
  if (mode == CopyMode::proper) {
    Rational out = Rational(3) * Rational(25) / (2 * c - 4) + Rational(3) * Rational(26) / (c - 1);
    out.canonicalize();
    return out;
  }
  Rational out = Rational(4) * Rational(25) / (2 * c - 4) + Rational(4) * Rational(26) / (c - 1);
  out += Rational(4 * 14) / (c - 1) + Rational(4 * 3) / (c - 2) + Rational(4 * 9) / (c - 3) +
         Rational(4 * 5) / (c - 4) + Rational(4 * 4) / (c - 5) + Rational(4 * 4) / (c - 6);
  out.canonicalize();
  return out;
}

FeasibilityVerdict lll_feasibility_check(std::uint64_t n, std::uint64_t ell, const LllBudget& budget) {
  FeasibilityVerdict verdict;
  const Rational quarter(1, 4);
  verdict.event_bound = n > ell ? Rational(mpz_class(1), mpz_class(n - ell)) : Rational(1);
  verdict.single_event_ok = verdict.event_bound <= quarter;
  verdict.neighborhood_ok = budget.total <= quarter;
  return verdict;
}

}  // namespace cherrylab
