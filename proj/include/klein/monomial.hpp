#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace klein::poly {

inline constexpr std::size_t kMaxArity = 4;
inline constexpr std::uint32_t kDefaultExponentCap = 1u << 20;

/// Exponent vector of fixed arity. Variable 0 is X, variable 1 is Y.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<std::uint32_t> exps);
  explicit Monomial(std::span<const std::uint32_t> exps);

  static Monomial one(std::size_t arity) { return Monomial(arity); }
  static Monomial var(std::size_t arity, std::size_t index, std::uint32_t exp = 1);

  std::size_t arity() const noexcept { return arity_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) noexcept { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return {exps_.data(), arity_}; }

  bool is_one() const noexcept;
  std::uint64_t total_degree() const noexcept;

  bool divides(const Monomial& other) const;
  /// Throws ArityMismatch or ExponentOverflow (cap checked on every product).
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_into(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic key order for containers; not a monomial ordering.
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint32_t, kMaxArity> exps_{};
  std::size_t arity_ = 0;
};

enum class OrderKind { lex, weighted_deg_lex };

/// A monomial ordering. For weighted_deg_lex the weighted degree is compared
/// first; ties go to the larger exponent of `tiebreak_var`, then to the larger
/// exponent of the remaining variables from the last index down.
/// For lex the variables are compared from index 0 upward.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t arity);
  static MonomialOrder weighted(std::vector<std::uint32_t> weights, std::size_t tiebreak_var);
  /// Weights (2,3) with ties broken towards the larger Y-exponent.
  static MonomialOrder klein();

  OrderKind kind() const noexcept { return kind_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
  std::size_t tiebreak_var() const noexcept { return tiebreak_; }

  std::uint64_t weight(const Monomial& m) const;
  /// Throws ArityMismatch.
  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }

  std::string describe() const;

 private:
  OrderKind kind_ = OrderKind::lex;
  std::size_t arity_ = 0;
  std::vector<std::uint32_t> weights_;
  std::size_t tiebreak_ = 0;
};

/// Comparator sorting by a MonomialOrder, largest first.
struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

std::string variable_name(std::size_t arity, std::size_t index);
/// `1`, `X`, `X^2*Y`, ...
std::string to_string(const Monomial& m);
/// Parses the printed form; throws ParseError.
Monomial parse_monomial(std::string_view text, std::size_t arity);

}  // namespace klein::poly
