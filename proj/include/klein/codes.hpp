#pragma once

// Varieties, the evaluation map, primary affine variety codes C(I, L) and the
// code-parameter table built from per-monomial weight bounds.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klein/groebner.hpp"

namespace klein::codes {

using gf::Element;
using groebner::Footprint;
using groebner::GroebnerBasis;
using poly::FieldPoly;
using poly::FieldPolyRing;
using poly::Monomial;

struct Point {
  std::vector<Element> coords;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Distinct common zeros, sorted lexicographically by coordinate encodings.
struct Variety {
  std::vector<Point> points;
  std::size_t size() const noexcept { return points.size(); }
};

using Matrix = std::vector<std::vector<Element>>;

/// Brute-force scan of all q^arity points.
Variety enumerate_variety(const std::vector<FieldPoly>& gens, const gf::Field& field, std::size_t arity);

/// The 21 non-origin points of a two-variable variety realise the Fano plane:
/// one point with x = 0, seven lines of three b-values, pairwise meeting in one
/// b, every nonzero b on three lines.
bool verify_fano(const Variety& v);

std::vector<Element> evaluation_vector(const FieldPoly& f, const Variety& v);
std::size_t hamming_weight(const std::vector<Element>& word);

/// Rank by Gaussian elimination.
std::size_t rank(Matrix m, const gf::Field& field);
/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, const gf::Field& field);

struct EvaluationCode {
  std::vector<Monomial> basis;
  Matrix generator;  // row i = ev(basis[i])
  std::size_t n = 0;
  std::size_t k = 0;
  const gf::Field* field = nullptr;
};

/// Throws DuplicateMonomial, or RankDeficient when ev is not injective on L.
EvaluationCode build_code(const std::vector<Monomial>& basis, const Variety& v, const FieldPolyRing& ring);

/// Parity-check matrix of a code with generator matrix g ((n-rank) x n).
Matrix parity_check(const Matrix& g, std::size_t n, const gf::Field& field);

/// Number of weight-1 codewords: zero columns of the parity-check matrix,
/// times q - 1.
std::uint64_t count_weight_one(const EvaluationCode& code);

/// Per-monomial lower bounds on the weight of codewords with that leading
/// monomial, kept in ascending footprint order.
class DeltaMap {
 public:
  DeltaMap() = default;
  explicit DeltaMap(const poly::MonomialOrder& order) : order_(&order) {}

  void set(const Monomial& m, std::uint32_t delta);
  std::uint32_t at(const Monomial& m) const;
  bool contains(const Monomial& m) const;
  const std::vector<std::pair<Monomial, std::uint32_t>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  const poly::MonomialOrder* order_ = nullptr;
  std::vector<std::pair<Monomial, std::uint32_t>> entries_;
};

struct TableRow {
  std::uint32_t s = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t d = 0;             // proven lower bound (= s)
  std::optional<std::uint32_t> measured;  // measured minimum distance if computed
  bool exact = false;              // measured value is the true minimum
};

/// One row per distinct threshold s (descending): k = #{M : delta(M) >= s}.
std::vector<TableRow> construct_table(const DeltaMap& dm, const Variety& v);

/// Monomials M with delta(M) >= s, ascending order.
std::vector<Monomial> threshold_basis(const DeltaMap& dm, std::uint32_t s);

}  // namespace klein::codes
