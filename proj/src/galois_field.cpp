#include "cherrylab/galois_field.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace cherrylab {

namespace {

struct FieldRecipe {
  std::uint32_t q;
  std::uint32_t p;
  std::uint32_t degree;
  // Monic irreducible modulus, low coefficients first, leading 1 omitted.
  std::array<std::uint32_t, 3> modulus;
};

// x^2 + x + 1 over GF(2), x^3 + x + 1 over GF(2), x^2 + 1 over GF(3).
constexpr std::array<FieldRecipe, 9> kRecipes{{
    {2, 2, 1, {0, 0, 0}},
    {3, 3, 1, {0, 0, 0}},
    {4, 2, 2, {1, 1, 0}},
    {5, 5, 1, {0, 0, 0}},
    {7, 7, 1, {0, 0, 0}},
    {8, 2, 3, {1, 1, 0}},
    {9, 3, 2, {1, 0, 0}},
    {11, 11, 1, {0, 0, 0}},
    {13, 13, 1, {0, 0, 0}},
}};

constexpr std::array<std::uint32_t, 9> kOrders{2, 3, 4, 5, 7, 8, 9, 11, 13};

std::vector<std::uint32_t> digits(std::uint32_t x, std::uint32_t p, std::uint32_t degree) {
  std::vector<std::uint32_t> out(degree);
  for (auto& d : out) {
    d = x % p;
    x /= p;
  }
  return out;
}

std::uint32_t pack(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  std::uint32_t x = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) x = x * p + coeffs[i];
  return x;
}

}  // namespace

std::span<const std::uint32_t> FieldTable::supported_orders() { return kOrders; }

FieldTable::FieldTable(std::uint32_t q) : q_(q) {
  auto it = std::find_if(kRecipes.begin(), kRecipes.end(), [q](const FieldRecipe& r) { return r.q == q; });
  if (it == kRecipes.end()) throw std::invalid_argument("unsupported field order " + std::to_string(q));
  const FieldRecipe& recipe = *it;
  p_ = recipe.p;
  const std::uint32_t deg = recipe.degree;

  add_.resize(q * q);
  mul_.resize(q * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    auto da = digits(a, p_, deg);
    for (std::uint32_t b = 0; b < q; ++b) {
      auto db = digits(b, p_, deg);
      std::vector<std::uint32_t> sum(deg);
      for (std::uint32_t i = 0; i < deg; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = pack(sum, p_);

      // Schoolbook product, then reduce x^j for j >= deg using
      // x^deg = -(modulus low part).
      std::vector<std::uint32_t> prod(2 * deg - 1, 0);
      for (std::uint32_t i = 0; i < deg; ++i)
        for (std::uint32_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (std::uint32_t j = 2 * deg - 1; j-- > deg;) {
        std::uint32_t coef = prod[j];
        if (coef == 0) continue;
        prod[j] = 0;
        for (std::uint32_t i = 0; i < deg; ++i) {
          std::uint32_t sub = coef * recipe.modulus[i] % p_;
          prod[j - deg + i] = (prod[j - deg + i] + p_ - sub) % p_;
        }
      }
      prod.resize(deg);
      mul_[a * q + b] = pack(prod, p_);
    }
  }

  neg_.assign(q, q);
  inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
  verify_axioms();
}

std::uint32_t FieldTable::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return inv_[a];
}

void FieldTable::verify_axioms() const {
  auto fail = [this](const char* what) {
    throw std::logic_error("GF(" + std::to_string(q_) + ") table violates " + what);
  };
  for (std::uint32_t a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a) fail("identities");
    if (neg_[a] >= q_) fail("additive inverses");
    if (a != 0 && mul(a, inv_[a]) != 1) fail("multiplicative inverses");
    for (std::uint32_t b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
      for (std::uint32_t c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
}

}  // namespace cherrylab
