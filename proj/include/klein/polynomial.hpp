#pragma once

// Sparse multivariate polynomials over an abstract coefficient ring.
//
// A polynomial belongs to a PolyRing (coefficient ring, arity, ordering) and
// keeps its terms sorted largest-first under that ordering. Zero coefficients
// are never stored, so the zero polynomial is the empty term map.

#include <concepts>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "klein/error.hpp"
#include "klein/gf.hpp"
#include "klein/monomial.hpp"

namespace klein::poly {

template <class R>
concept CoeffRing = requires(const R& r, const typename R::value_type& a) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.inverse(a) } -> std::convertible_to<std::optional<typename R::value_type>>;
  { r.as_constant(a) } -> std::convertible_to<std::optional<gf::Element>>;
  { r.from_constant(gf::Element{}) } -> std::convertible_to<typename R::value_type>;
  { r.field() } -> std::convertible_to<const gf::Field&>;
};

/// Coefficients in a concrete finite field.
class FieldCoeffs {
 public:
  using value_type = gf::Element;

  explicit FieldCoeffs(const gf::Field& field) : field_(&field) {}

  const gf::Field& field() const { return *field_; }
  value_type zero() const { return field_->zero(); }
  value_type one() const { return field_->one(); }
  value_type add(value_type a, value_type b) const { return field_->add(a, b); }
  value_type sub(value_type a, value_type b) const { return field_->sub(a, b); }
  value_type mul(value_type a, value_type b) const { return field_->mul(a, b); }
  bool is_zero(value_type a) const { return a.is_zero(); }
  std::optional<value_type> inverse(value_type a) const {
    if (a.is_zero()) return std::nullopt;
    return field_->inv(a);
  }
  std::optional<gf::Element> as_constant(value_type a) const { return a; }
  value_type from_constant(gf::Element c) const { return c; }

  /// Coefficient prefixes for printing: "" for 1, otherwise the enc integer.
  std::vector<std::string> print_parts(value_type a) const {
    if (a.enc == 1) return {""};
    return {std::to_string(a.enc)};
  }
  /// Builds c * prod(a_i^e_i); parameters are not allowed here.
  value_type from_factors(gf::Element c,
                          std::span<const std::pair<unsigned, unsigned>> params) const {
    if (!params.empty()) {
      throw Error(ErrorCode::ParametricCoefficients,
                  "parameter in a polynomial over a concrete field");
    }
    return c;
  }

  friend bool operator==(const FieldCoeffs& a, const FieldCoeffs& b) {
    return a.field_ == b.field_;
  }

 private:
  const gf::Field* field_;
};

/// Polynomial ring context. Polynomials hold a pointer to their ring, so a
/// ring must outlive every polynomial created in it.
template <CoeffRing R>
class PolyRing {
 public:
  PolyRing(R coeffs, MonomialOrder order) : coeffs_(std::move(coeffs)), order_(std::move(order)) {}
  PolyRing(const PolyRing&) = delete;
  PolyRing& operator=(const PolyRing&) = delete;

  const R& coeffs() const noexcept { return coeffs_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t arity() const noexcept { return order_.arity(); }

 private:
  R coeffs_;
  MonomialOrder order_;
};

using FieldPolyRing = PolyRing<FieldCoeffs>;

template <CoeffRing R>
class Polynomial {
 public:
  using Coef = typename R::value_type;
  using Ring = PolyRing<R>;
  using TermMap = std::map<Monomial, Coef, Descending>;

  explicit Polynomial(const Ring& ring) : ring_(&ring), terms_(Descending{&ring.order()}) {}

  static Polynomial constant(const Ring& ring, Coef c) {
    Polynomial p(ring);
    p.add_term(Monomial::one(ring.arity()), std::move(c));
    return p;
  }
  static Polynomial term(const Ring& ring, Coef c, const Monomial& m) {
    Polynomial p(ring);
    p.add_term(m, std::move(c));
    return p;
  }
  static Polynomial monomial(const Ring& ring, const Monomial& m) {
    return term(ring, ring.coeffs().one(), m);
  }

  const Ring& ring() const noexcept { return *ring_; }
  const R& coeffs() const noexcept { return ring_->coeffs(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coef coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? coeffs().zero() : it->second;
  }

  /// Adds c*m in place, deleting the term if it cancels.
  void add_term(const Monomial& m, const Coef& c) {
    check_arity(m);
    if (coeffs().is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = coeffs().add(it->second, c);
      if (coeffs().is_zero(it->second)) terms_.erase(it);
    }
  }

  void set_coefficient(const Monomial& m, const Coef& c) {
    check_arity(m);
    if (coeffs().is_zero(c)) {
      terms_.erase(m);
    } else {
      terms_.insert_or_assign(m, c);
    }
  }

  /// Throws ZeroPolynomial.
  const std::pair<const Monomial, Coef>& leading_term() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero polynomial");
    return *terms_.begin();
  }
  const Monomial& leading_monomial() const { return leading_term().first; }
  const Coef& leading_coefficient() const { return leading_term().second; }

  Polynomial& operator+=(const Polynomial& other) {
    check_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    check_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, coeffs().sub(coeffs().zero(), c));
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial out(*a.ring_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, a.coeffs().mul(ca, cb));
    }
    return out;
  }

  /// c * m * this.
  Polynomial mul_term(const Coef& c, const Monomial& m) const {
    Polynomial out(*ring_);
    if (coeffs().is_zero(c)) return out;
    for (const auto& [mt, ct] : terms_) out.add_term(mt * m, coeffs().mul(c, ct));
    return out;
  }
  Polynomial scale(const Coef& c) const { return mul_term(c, Monomial::one(ring_->arity())); }

  /// Applies f to every coefficient, dropping terms that become zero.
  template <class F>
  Polynomial map_coefficients(F&& f) const {
    Polynomial out(*ring_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == ib->first) || !a.coeffs().is_zero(a.coeffs().sub(c, ib->second))) return false;
      ++ib;
    }
    return true;
  }

 private:
  void check_arity(const Monomial& m) const {
    if (m.arity() != ring_->arity()) {
      throw Error(ErrorCode::ArityMismatch, "monomial arity does not match the ring");
    }
  }
  void check_ring(const Polynomial& other) const {
    if (other.ring_ != ring_) throw Error(ErrorCode::DomainMismatch, "polynomials from different rings");
  }

  const Ring* ring_;
  TermMap terms_;
};

using FieldPoly = Polynomial<FieldCoeffs>;

enum class ReductionMode { head, full };

template <CoeffRing R>
struct DivisionResult {
  std::vector<Polynomial<R>> quotients;
  Polynomial<R> remainder;
};

/// Decides whether a coefficient is known to be nonzero. Over a concrete
/// field every stored coefficient is; over a parametric ring it depends on
/// the constraints in force.
template <CoeffRing R>
using NonzeroTest = std::function<bool(const typename R::value_type&)>;

/// Multivariate division of s by `divisors`, trying divisors in list order.
///
/// full: no monomial of the remainder is divisible by a divisor head.
/// head: reduction stops at the first term that is not divisible by any
///   divisor head and whose coefficient is known nonzero. Terms above it with
///   coefficients not known to be nonzero might vanish, so they are reduced
///   when divisible and skipped otherwise. Over a field this is the usual
///   top reduction.
///
/// Always s = sum quotients[i] * divisors[i] + remainder.
/// Throws NonInvertibleLeadingCoefficient or ZeroPolynomial for a zero divisor.
template <CoeffRing R>
DivisionResult<R> divide(const Polynomial<R>& s, std::span<const Polynomial<R>> divisors,
                         ReductionMode mode, const NonzeroTest<R>& known_nonzero = {}) {
  const R& cr = s.coeffs();
  std::vector<Polynomial<R>> quotients;
  std::vector<std::pair<Monomial, typename R::value_type>> heads;
  for (const auto& d : divisors) {
    if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    auto inv = cr.inverse(d.leading_coefficient());
    if (!inv) {
      throw Error(ErrorCode::NonInvertibleLeadingCoefficient,
                  "divisor head coefficient has no inverse");
    }
    heads.emplace_back(d.leading_monomial(), *inv);
    quotients.emplace_back(s.ring());
  }

  Polynomial<R> p = s;
  Polynomial<R> r(s.ring());
  auto it = p.terms().begin();
  while (it != p.terms().end()) {
    const Monomial m = it->first;
    const auto c = it->second;
    std::size_t hit = heads.size();
    for (std::size_t i = 0; i < heads.size(); ++i) {
      if (heads[i].first.divides(m)) {
        hit = i;
        break;
      }
    }
    if (hit < heads.size()) {
      const Monomial shift = heads[hit].first.quotient_into(m);
      const auto factor = cr.mul(c, heads[hit].second);
      quotients[hit].add_term(shift, factor);
      p -= divisors[hit].mul_term(factor, shift);
      it = p.terms().upper_bound(m);
      continue;
    }
    if (mode == ReductionMode::full) {
      r.add_term(m, c);
      p.set_coefficient(m, cr.zero());
      it = p.terms().upper_bound(m);
      continue;
    }
    const bool nonzero = known_nonzero ? known_nonzero(c) : !cr.is_zero(c);
    if (nonzero) break;
    ++it;
  }
  if (mode == ReductionMode::head) {
    r = std::move(p);
  }
  return {std::move(quotients), std::move(r)};
}

/// Evaluates p at a point of the coefficient field; 0^0 = 1.
/// Throws ParametricCoefficients if a coefficient is not a field constant.
template <CoeffRing R>
gf::Element eval(const Polynomial<R>& p, std::span<const gf::Element> point) {
  if (point.size() != p.ring().arity()) throw Error(ErrorCode::ArityMismatch, "evaluation point");
  const gf::Field& f = p.coeffs().field();
  gf::Element acc = f.zero();
  for (const auto& [m, c] : p.terms()) {
    auto k = p.coeffs().as_constant(c);
    if (!k) throw Error(ErrorCode::ParametricCoefficients, "instantiate parameters before eval");
    gf::Element v = *k;
    for (std::size_t i = 0; i < m.arity(); ++i) v = f.mul(v, f.pow(point[i], m[i]));
    acc = f.add(acc, v);
  }
  return acc;
}

/// Canonical text form: terms largest-first joined by " + ".
template <CoeffRing R>
std::string to_string(const Polynomial<R>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const std::string mono = to_string(m);
    for (const auto& prefix : p.coeffs().print_parts(c)) {
      if (!out.empty()) out += " + ";
      if (prefix.empty()) {
        out += mono;
      } else if (m.is_one()) {
        out += prefix;
      } else {
        out += prefix + "*" + mono;
      }
    }
  }
  return out;
}

namespace detail {
struct ParsedTerm {
  gf::Element coef;
  std::vector<std::pair<unsigned, unsigned>> params;
  Monomial mono;
};
std::vector<ParsedTerm> parse_terms(std::string_view text, const gf::Field& field,
                                    std::size_t arity);
}  // namespace detail

/// Parses the text grammar: terms joined by '+', each a '*'-product of an
/// optional enc integer, parameters a1..aN (with optional ^e) and variables.
/// Throws ParseError.
template <CoeffRing R>
Polynomial<R> parse_polynomial(const PolyRing<R>& ring, std::string_view text) {
  Polynomial<R> p(ring);
  for (const auto& t : detail::parse_terms(text, ring.coeffs().field(), ring.arity())) {
    p.add_term(t.mono, ring.coeffs().from_factors(t.coef, t.params));
  }
  return p;
}

}  // namespace klein::poly
