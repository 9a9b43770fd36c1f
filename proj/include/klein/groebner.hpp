#pragma once

// Buchberger's algorithm over a concrete field, normal forms, footprints of
// zero-dimensional ideals and the order-domain condition checker.

#include <optional>
#include <vector>

#include "klein/polynomial.hpp"

namespace klein::groebner {

using poly::FieldPoly;
using poly::FieldPolyRing;
using poly::Monomial;

/// Reduced, monic Groebner basis, generators sorted by ascending head.
class GroebnerBasis {
 public:
  GroebnerBasis(const FieldPolyRing& ring, std::vector<FieldPoly> gens, bool reduced)
      : ring_(&ring), gens_(std::move(gens)), reduced_(reduced) {}

  const FieldPolyRing& ring() const noexcept { return *ring_; }
  const std::vector<FieldPoly>& generators() const noexcept { return gens_; }
  bool reduced() const noexcept { return reduced_; }
  std::vector<Monomial> heads() const;
  /// True iff some head is the monomial 1.
  bool is_unit_ideal() const;

 private:
  const FieldPolyRing* ring_;
  std::vector<FieldPoly> gens_;
  bool reduced_;
};

/// Finite set of monomials divisible by no generator head, ascending order.
struct Footprint {
  std::vector<Monomial> monomials;
  const poly::MonomialOrder* order = nullptr;

  std::size_t size() const noexcept { return monomials.size(); }
  bool contains(const Monomial& m) const;
  /// Position in ascending order; throws NotInFootprint.
  std::size_t index_of(const Monomial& m) const;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t reductions_to_zero = 0;
};

/// Throws ZeroPolynomial for f = 0 or g = 0.
FieldPoly s_polynomial(const FieldPoly& f, const FieldPoly& g);

/// Normal strategy with the coprime-head criterion; returns the reduced basis.
GroebnerBasis buchberger(const FieldPolyRing& ring, const std::vector<FieldPoly>& gens,
                         BuchbergerStats* stats = nullptr);

FieldPoly normal_form(const FieldPoly& p, const GroebnerBasis& gb);

/// Every S-polynomial of a pair of generators reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);
/// Heads pairwise non-divisible and no generator term divisible by another head.
bool is_reduced(const GroebnerBasis& gb);

/// Throws InfiniteFootprint when some variable has no pure power among the heads.
Footprint footprint(const GroebnerBasis& gb);

struct OrderDomainConditions {
  bool weighted_order = false;
  bool two_top_weight_monomials = false;
  bool distinct_footprint_weights = false;
};

/// Checks the three order-domain conditions for a basis of the ideal I (not
/// I_q). When the footprint is infinite the weight collision search scans the
/// footprint monomials of weight <= weight_bound.
OrderDomainConditions order_domain_check(const GroebnerBasis& gb, std::uint64_t weight_bound = 64);

}  // namespace klein::groebner
