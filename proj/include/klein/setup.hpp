#pragma once

// The ambient data of an affine variety code: field, ordering, I_q with its
// reduced Groebner basis, footprint and variety.

#include <memory>
#include <string>
#include <vector>

#include "klein/codes.hpp"

namespace klein {

class AffineSetup {
 public:
  /// gens_text: generators of I in the polynomial grammar; the field
  /// equations X_i^q - X_i are appended automatically.
  static std::unique_ptr<AffineSetup> make(const gf::Field& field, poly::MonomialOrder order,
                                           const std::vector<std::string>& gens_text);
  /// GF(8) with x^3+x+1, weights (2,3) with Y tie-break, I = <Y^3 + X^3*Y + X>.
  static const AffineSetup& klein();

  const gf::Field& field() const noexcept { return *field_; }
  const poly::FieldPolyRing& ring() const noexcept { return ring_; }
  const poly::MonomialOrder& order() const noexcept { return ring_.order(); }
  std::size_t arity() const noexcept { return ring_.arity(); }

  /// Generators of I as given.
  const std::vector<poly::FieldPoly>& ideal_generators() const noexcept { return ideal_gens_; }
  /// Generators of I_q: those of I followed by the field equations.
  const std::vector<poly::FieldPoly>& generators() const noexcept { return gens_; }
  const groebner::GroebnerBasis& basis() const noexcept { return *basis_; }
  const groebner::Footprint& footprint() const noexcept { return footprint_; }
  const codes::Variety& variety() const noexcept { return variety_; }
  std::size_t length() const noexcept { return variety_.size(); }

  poly::FieldPoly parse(std::string_view text) const { return poly::parse_polynomial(ring_, text); }
  poly::FieldPoly monomial(const poly::Monomial& m) const { return poly::FieldPoly::monomial(ring_, m); }

 private:
  AffineSetup(const gf::Field& field, poly::MonomialOrder order);

  const gf::Field* field_;
  poly::FieldPolyRing ring_;
  std::vector<poly::FieldPoly> ideal_gens_;
  std::vector<poly::FieldPoly> gens_;
  std::unique_ptr<groebner::GroebnerBasis> basis_;
  groebner::Footprint footprint_;
  codes::Variety variety_;
};

/// n - #footprint(<F> + I_q); equals the Hamming weight of ev(F).
/// Throws ZeroPolynomial for F = 0.
std::size_t weight_via_footprint(const poly::FieldPoly& f, const AffineSetup& setup);

/// Footprint of <F> + I_q.
groebner::Footprint footprint_with(const poly::FieldPoly& f, const AffineSetup& setup);

}  // namespace klein
