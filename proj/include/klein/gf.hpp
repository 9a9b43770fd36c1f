#pragma once

// Arithmetic in GF(2^m) for 1 <= m <= 16, polynomial basis.
//
// An element is stored as its encoding `enc`: bit i is the coefficient of
// alpha^i, where alpha is a root of the modulus. Addition is XOR; products
// and inverses go through log/antilog tables built from a generator of the
// multiplicative group.

#include <cstdint>
#include <string>
#include <vector>

namespace klein::gf {

struct Element {
  std::uint16_t enc = 0;

  constexpr bool is_zero() const noexcept { return enc == 0; }
  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

class Field {
 public:
  /// Throws ReducibleModulus when the modulus factors over GF(2), InvalidField
  /// when m is out of range or bit m of the modulus is clear.
  Field(unsigned m, std::uint32_t modulus_bits);

  /// GF(8) with modulus x^3 + x + 1.
  static const Field& gf8();

  unsigned degree() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return q_; }

  Element zero() const noexcept { return {0}; }
  Element one() const noexcept { return {1}; }
  Element make(std::uint32_t enc) const;

  Element add(Element a, Element b) const noexcept {
    return {static_cast<std::uint16_t>(a.enc ^ b.enc)};
  }
  Element sub(Element a, Element b) const noexcept { return add(a, b); }
  Element mul(Element a, Element b) const noexcept {
    if (a.enc == 0 || b.enc == 0) return {0};
    std::uint32_t s = log_[a.enc] + log_[b.enc];
    return {exp_[s]};
  }
  /// Throws DivisionByZero for a = 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  /// Exponent reduced modulo q-1 for nonzero bases; 0^0 = 1.
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// All q elements in increasing enc order.
  std::vector<Element> elements() const;

  /// Raw tables for the hot loops of the enumeration oracles (m <= 8 only).
  const std::vector<std::uint16_t>& mul_table() const noexcept { return mul_table_; }

  std::string describe() const;

 private:
  unsigned m_;
  std::uint32_t modulus_;
  std::uint32_t q_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> exp_;  // length 2(q-1) so log sums need no reduction
  std::vector<std::uint16_t> mul_table_;
};

/// Irreducibility over GF(2) by trial division with every polynomial of
/// degree 1..m/2.
bool is_irreducible(std::uint32_t poly_bits);

}  // namespace klein::gf
