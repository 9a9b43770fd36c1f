#pragma once

// Parametric coefficients: polynomials in a_1..a_t over GF(q) reduced by
// a_i^q = a_i, and the constraint store that decides which of them are zero
// or nonzero on a branch of a case analysis.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "klein/polynomial.hpp"

namespace klein::casebound {

using gf::Element;

/// Exponent vector of the parameters, `bits` bits per parameter, a_1 in the
/// lowest field.
using ParamMono = std::uint64_t;

/// Sum of c * a^e. Terms sorted by ParamCoeffs::term_less (largest first),
/// no zero coefficients.
struct ParamCoef {
  std::vector<std::pair<ParamMono, Element>> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  friend bool operator==(const ParamCoef&, const ParamCoef&) = default;
};

/// Assignment of values to a_1..a_t (index 0 holds a_1).
using Assignment = std::vector<Element>;

class ParamCoeffs {
 public:
  using value_type = ParamCoef;

  /// Throws DomainMismatch when t parameters do not fit the 64-bit packing.
  ParamCoeffs(const gf::Field& field, std::size_t params);

  const gf::Field& field() const { return *field_; }
  std::size_t params() const noexcept { return params_; }

  ParamCoef zero() const { return {}; }
  ParamCoef one() const { return constant(field_->one()); }
  ParamCoef constant(Element c) const;
  /// The parameter a_index (1-based).
  ParamCoef param(std::size_t index) const;

  ParamCoef add(const ParamCoef& a, const ParamCoef& b) const;
  ParamCoef sub(const ParamCoef& a, const ParamCoef& b) const { return add(a, b); }
  ParamCoef mul(const ParamCoef& a, const ParamCoef& b) const;
  ParamCoef scale(const ParamCoef& a, Element c) const;
  ParamCoef pow(const ParamCoef& a, unsigned e) const;
  bool is_zero(const ParamCoef& a) const { return a.is_zero(); }
  /// Only nonzero constants are invertible.
  std::optional<ParamCoef> inverse(const ParamCoef& a) const;
  std::optional<Element> as_constant(const ParamCoef& a) const;
  ParamCoef from_constant(Element c) const { return constant(c); }
  ParamCoef from_factors(Element c, std::span<const std::pair<unsigned, unsigned>> params) const;

  unsigned exponent(ParamMono m, std::size_t index0) const noexcept {
    return static_cast<unsigned>((m >> (index0 * bits_)) & mask_);
  }
  /// Bitmask of parameters (bit i = a_{i+1}) occurring in a.
  std::uint64_t variables(const ParamCoef& a) const;
  Element eval(const ParamCoef& a, const Assignment& values) const;
  /// Replaces a_index (1-based) by `value`.
  ParamCoef substitute(const ParamCoef& a, std::size_t index, const ParamCoef& value) const;
  /// Degree of a in a_index.
  unsigned degree_in(const ParamCoef& a, std::size_t index) const;

  std::vector<std::string> print_parts(const ParamCoef& a) const;
  std::string to_string(const ParamCoef& a) const;

  bool term_less(ParamMono a, ParamMono b) const;

 private:
  ParamMono mono_mul(ParamMono a, ParamMono b) const;
  ParamCoef normalize(std::vector<std::pair<ParamMono, Element>> terms) const;

  const gf::Field* field_;
  std::size_t params_;
  unsigned bits_;
  std::uint64_t mask_;
};

using ParamRing = poly::PolyRing<ParamCoeffs>;
using ParamPoly = poly::Polynomial<ParamCoeffs>;

/// Substitutions a_i := expr (triangular: no right-hand side mentions a
/// substituted parameter), expressions asserted nonzero, and expressions
/// asserted zero that could not be turned into a substitution.
class ConstraintStore {
 public:
  explicit ConstraintStore(const ParamCoeffs& coeffs);

  const ParamCoeffs& coeffs() const noexcept { return *coeffs_; }
  bool vacuous() const noexcept { return vacuous_; }
  const std::vector<std::optional<ParamCoef>>& substitutions() const noexcept { return subs_; }
  const std::vector<ParamCoef>& nonzeros() const noexcept { return nonzeros_; }
  const std::vector<ParamCoef>& zeros() const noexcept { return zeros_; }

  /// Applies the substitutions.
  ParamCoef reduce(const ParamCoef& e) const;
  ParamPoly reduce(const ParamPoly& p) const;

  /// Zero on every assignment satisfying the store: the reduced form is 0,
  /// or it vanishes on an exhaustive scan when at most kExhaustiveParams
  /// parameters are involved.
  bool is_zero(const ParamCoef& e) const;
  /// Nonzero on every satisfying assignment: a nonzero constant, a recorded
  /// nonzero, a product of those, or nonzero on the exhaustive scan.
  bool certified_nonzero(const ParamCoef& e) const;

  /// Children for c != 0 and c = 0. A child whose constraints are
  /// unsatisfiable is marked vacuous.
  std::pair<ConstraintStore, ConstraintStore> branch(const ParamCoef& c) const;

  /// Completes a partial assignment of the free parameters with the
  /// substituted ones and tests every constraint.
  bool satisfied_by(Assignment& values) const;
  /// Finds a satisfying assignment; nullopt if none exists (or none was
  /// found for components too large for exhaustive search).
  std::optional<Assignment> witness(std::uint64_t seed) const;

  /// "a1 != 0; a2 := 0" style summary.
  std::string describe() const;

  static constexpr std::size_t kExhaustiveParams = 6;

 private:
  struct Scan {
    bool known = false;  // false: too many parameters involved
    bool any_zero = false;
    bool any_nonzero = false;
  };
  /// Evaluates e on every assignment of the parameters connected to it that
  /// satisfies the constraints.
  Scan scan(const ParamCoef& e) const;
  std::uint64_t closure(std::uint64_t vars) const;
  /// Lowest-index a_i with e = c*a_i + (terms free of a_i), c constant.
  std::optional<std::pair<std::size_t, ParamCoef>> solve_linear(const ParamCoef& e) const;
  void add_zero(const ParamCoef& e);
  void add_substitution(std::size_t index, const ParamCoef& value);
  void check_satisfiable();
  /// Satisfying values for the parameters in `vars`, scanning at most `tries`
  /// random candidates and then exhaustively if small enough.
  std::optional<Assignment> solve_component(std::uint64_t vars, std::uint64_t seed,
                                            bool& decided) const;

  const ParamCoeffs* coeffs_;
  std::vector<std::optional<ParamCoef>> subs_;  // index 0 = a_1
  std::vector<ParamCoef> nonzeros_;
  std::vector<ParamCoef> zeros_;
  bool vacuous_ = false;
};

}  // namespace klein::casebound
