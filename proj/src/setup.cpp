#include "klein/setup.hpp"

namespace klein {

AffineSetup::AffineSetup(const gf::Field& field, poly::MonomialOrder order)
    : field_(&field), ring_(poly::FieldCoeffs(field), std::move(order)) {}

std::unique_ptr<AffineSetup> AffineSetup::make(const gf::Field& field, poly::MonomialOrder order,
                                               const std::vector<std::string>& gens_text) {
  std::unique_ptr<AffineSetup> s(new AffineSetup(field, std::move(order)));
  const std::size_t n = s->arity();
  for (const auto& text : gens_text) s->ideal_gens_.push_back(s->parse(text));
  s->gens_ = s->ideal_gens_;
  for (std::size_t v = 0; v < n; ++v) {
    poly::FieldPoly eq(s->ring_);
    eq.add_term(poly::Monomial::var(n, v, field.size()), field.one());
    eq.add_term(poly::Monomial::var(n, v, 1), field.one());
    s->gens_.push_back(std::move(eq));
  }
  s->basis_ = std::make_unique<groebner::GroebnerBasis>(groebner::buchberger(s->ring_, s->gens_));
  s->footprint_ = groebner::footprint(*s->basis_);
  s->variety_ = codes::enumerate_variety(s->gens_, field, n);
  return s;
}

const AffineSetup& AffineSetup::klein() {
  static const std::unique_ptr<AffineSetup> setup =
      make(gf::Field::gf8(), poly::MonomialOrder::klein(), {"Y^3 + X^3*Y + X"});
  return *setup;
}

groebner::Footprint footprint_with(const poly::FieldPoly& f, const AffineSetup& setup) {
  std::vector<poly::FieldPoly> gens{f};
  for (const auto& g : setup.basis().generators()) gens.push_back(g);
  return groebner::footprint(groebner::buchberger(setup.ring(), gens));
}

std::size_t weight_via_footprint(const poly::FieldPoly& f, const AffineSetup& setup) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "codeword polynomial is zero");
  return setup.length() - footprint_with(f, setup).size();
}

}  // namespace klein
