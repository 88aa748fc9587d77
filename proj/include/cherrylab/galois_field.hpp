#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cherrylab {

// Finite field GF(q) as explicit addition and multiplication tables. Elements
// are 0..q-1: residues for prime q, base-p coefficient vectors (constant term
// in the lowest digit) for prime powers, reduced modulo a fixed irreducible
// polynomial. The tables are checked against the field axioms on construction.
class FieldTable {
 public:
  // Supported orders: 2, 3, 4, 5, 7, 8, 9, 11, 13. Anything else throws
  // std::invalid_argument.
  explicit FieldTable(std::uint32_t q);

  static std::span<const std::uint32_t> supported_orders();

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t inv(std::uint32_t a) const;  // throws for 0

 private:
  void verify_axioms() const;

  std::uint32_t q_;
  std::uint32_t p_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

}  // namespace cherrylab
