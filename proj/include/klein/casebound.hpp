#pragma once

// Lower bounds on the number of footprint monomials that are leading
// monomials of <F> + I_q, for F = M + sum a_i * (footprint monomials below M)
// with symbolic coefficients a_i. Bounds come from case analyses written as
// traces (multiply, reduce, branch on a coefficient, claim a leading
// monomial) that are replayed and checked here, or from a bounded search.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "klein/codes.hpp"
#include "klein/param.hpp"
#include "klein/setup.hpp"

namespace klein::casebound {

using poly::Monomial;

/// {N in fp : M divides N}. Throws NotInFootprint.
std::vector<Monomial> upset_in_footprint(const Monomial& lead, const groebner::Footprint& fp);
/// Size of the upset: what divisibility alone proves.
std::size_t divisibility_bound(const Monomial& lead, const groebner::Footprint& fp);

/// Root data for one class: the generic F and the fixed divisors.
class CaseContext {
 public:
  /// Throws NotInFootprint, or DomainMismatch when the parameters do not fit.
  CaseContext(const AffineSetup& setup, const Monomial& lead);
  CaseContext(const CaseContext&) = delete;
  CaseContext& operator=(const CaseContext&) = delete;

  const AffineSetup& setup() const noexcept { return *setup_; }
  const Monomial& lead() const noexcept { return lead_; }
  /// Footprint monomials below M, descending; a_i multiplies below()[i-1].
  const std::vector<Monomial>& below() const noexcept { return below_; }
  std::size_t params() const noexcept { return below_.size(); }
  const ParamCoeffs& coeffs() const noexcept { return ring_->coeffs(); }
  const ParamRing& ring() const noexcept { return *ring_; }

  /// F = M + sum a_i * below()[i-1].
  const ParamPoly& generic() const noexcept { return f_; }
  /// Named divisor: "K" (the curve equation), "FX" (X^q + X) or "FXY"
  /// (X^(q-1)*Y + Y). "F" is branch-dependent and not served here.
  /// Throws InvalidStep for an unknown or unavailable name.
  const ParamPoly& divisor(std::string_view name) const;

  ParamPoly lift(const poly::FieldPoly& p) const;
  ParamPoly parse(std::string_view text) const { return poly::parse_polynomial(*ring_, text); }
  /// Concrete F for an assignment of the parameters.
  poly::FieldPoly instantiate(const Assignment& values) const;

  std::size_t footprint_index(const Monomial& m) const { return setup_->footprint().index_of(m); }

 private:
  const AffineSetup* setup_;
  Monomial lead_;
  std::vector<Monomial> below_;
  std::unique_ptr<ParamRing> ring_;
  ParamPoly f_;
  std::vector<std::pair<std::string, ParamPoly>> divisors_;
};

/// scale * s = quotient * d + remainder.
struct ReduceResult {
  ParamPoly quotient;
  ParamPoly remainder;
  ParamCoef scale;
};

/// One reduction of s by d; head mode stops at the first term (symbolically
/// nonzero) not divisible by lm(d). A constant leading coefficient of d is divided
/// out; a certified nonzero one is multiplied through instead (pseudo
/// reduction, reported in `scale`). The identity is re-verified by
/// multiplication. Throws UncertifiedLeadingCoefficient or InvalidStep.
ReduceResult param_reduce_step(const ParamPoly& s, const ParamPoly& d, poly::ReductionMode mode,
                               const ConstraintStore& cs);

// --- traces ---------------------------------------------------------------

struct TraceStep {
  enum class Kind { mul, red, reset, claim, branch };
  Kind kind = Kind::mul;
  int line = 0;
  std::string text;            // monomial, divisor name or branch expression
  poly::ReductionMode mode = poly::ReductionMode::head;
  std::vector<TraceStep> nonzero_block;
  std::vector<TraceStep> zero_block;
};

struct Trace {
  std::optional<std::string> lead;  // from the `lm` header
  std::vector<TraceStep> steps;
};

/// Line-oriented trace syntax:
///   lm M                     class header (optional)
///   mul N                    W := N * W
///   red D head|full          W := remainder of W by D in {F, K, FX, FXY}
///   reset                    W := F
///   claim N                  lm(W) = N on this branch
///   branch e {               case e != 0 ...
///   } else {                 ... case e = 0
///   }
/// `#` starts a comment. A branch ends its block. Throws ParseError.
Trace parse_trace(std::string_view text);

struct Leaf {
  std::string constraints;
  std::vector<Monomial> claims;       // in the order established
  std::vector<Monomial> established;  // union of upsets incl. M, ascending
  std::size_t count = 0;
  bool vacuous = false;
  std::shared_ptr<const ConstraintStore> store;
};

struct BoundReport {
  Monomial lead;
  std::size_t params = 0;
  std::size_t baseline = 0;
  std::vector<Leaf> leaves;  // vacuous ones included, flagged
  std::size_t bound = 0;
  std::size_t steps = 0;     // replayed steps / searched nodes
};

/// Replays a trace against the generic F of `ctx`. Each red must change W;
/// each claim N needs N in the footprint, every term of W above N zero under
/// the branch constraints and N's coefficient certified nonzero.
/// With `log`, W is printed after every step.
/// Throws InvalidStep, UnjustifiedClaim or VacuousEverywhere.
BoundReport verify_trace(const CaseContext& ctx, const Trace& trace, std::ostream* log = nullptr);

/// Smallest weight w <= max_weight of a word whose interpolating reduced
/// polynomial has leading monomial M, or n if there is none: an achievable
/// weight, hence an upper bound on anything provable for M.
std::size_t weight_ceiling(const AffineSetup& setup, const Monomial& lead, std::size_t max_weight = 2);

struct SearchBudget {
  std::size_t max_depth = 3;
  std::size_t max_nodes = 20000;
  /// Multipliers tried at each node; empty means {X, Y, Y^2, X^2, ..., X^7}.
  std::vector<Monomial> moves;
};

/// Bounded AND-OR search over multiply-and-reduce moves. Each move
/// multiplies the working polynomial (or F itself) by a monomial, head
/// reduces by K, FX, FXY and F, then splits on the leading coefficient.
/// Stops early once the bound meets weight_ceiling(M).
/// Deterministic; the bound is at least the divisibility baseline.
BoundReport auto_search(const CaseContext& ctx, const SearchBudget& budget = {});

struct InstantiationReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::size_t min_weight = 0;  // over the samples
  std::vector<std::string> messages;
};

/// Draws assignments satisfying the leaf, builds F, computes the footprint of
/// <F> + I_q and checks every established monomial is absent from it.
/// Throws UnsatisfiableLeaf.
InstantiationReport instantiate_and_check(const CaseContext& ctx, const Leaf& leaf, std::size_t nsamples,
                                          std::uint64_t seed);

/// delta(M) = max(divisibility, trace bound) over the whole footprint.
codes::DeltaMap figure2_map(const AffineSetup& setup, const std::vector<BoundReport>& reports);

}  // namespace klein::casebound
