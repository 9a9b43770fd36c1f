#pragma once

// Brute-force weight oracles: minimum Hamming weight over an affine family
// base + sum c_i * dir_i of vectors over GF(q), q <= 256.

#include <cstdint>
#include <variant>
#include <vector>

#include "klein/codes.hpp"

namespace klein::oracle {

using gf::Element;

struct ScanResult {
  std::uint32_t min_weight = 0;
  bool exact = false;
  std::uint64_t states = 0;
  std::vector<Element> argmin;  // coefficients achieving min_weight
};

/// Scans base + sum_i c_i * directions[i]. With skip_zero the all-zero
/// coefficient vector is excluded (codeword scans where base = 0).
class AffineScanner {
 public:
  AffineScanner(const gf::Field& field, std::vector<Element> base,
                std::vector<std::vector<Element>> directions, bool skip_zero);

  std::size_t dimension() const noexcept { return dirs_.size(); }
  std::uint64_t state_count() const;

  /// Every state recomputed from scratch.
  ScanResult exhaustive(unsigned jobs = 1) const;
  /// q-ary modular Gray order: each step changes one coefficient and costs
  /// one packed-vector xor. Work is split by contiguous index ranges, so the
  /// result does not depend on `jobs`.
  ScanResult gray(unsigned jobs = 1) const;
  /// Seeded uniform samples; an upper bound on the true minimum.
  ScanResult sample(std::uint64_t seed, std::uint64_t count, unsigned jobs = 1) const;

 private:
  struct Chunk {
    std::uint32_t min_weight;
    std::uint64_t index;
  };
  void check_enumerable() const;
  std::vector<std::uint64_t> pack(const std::vector<Element>& v) const;
  std::uint32_t weight(const std::uint64_t* words) const;
  std::vector<Element> gray_digits(std::uint64_t s) const;
  std::vector<Element> plain_digits(std::uint64_t s) const;
  Chunk scan_gray_range(std::uint64_t begin, std::uint64_t end) const;
  Chunk scan_plain_range(std::uint64_t begin, std::uint64_t end) const;
  template <class F>
  std::vector<Chunk> run_chunks(std::uint64_t total, unsigned jobs, F&& f) const;

  const gf::Field* field_;
  unsigned bits_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> base_;
  std::vector<std::vector<Element>> dirs_;
  // scaled_[(i * q + c) * words_ ...] = packed c * dirs_[i]
  std::vector<std::uint64_t> scaled_;
  bool skip_zero_;
};

struct Exhaustive {
  std::size_t limit_k = 8;
};
struct Gray {
  std::size_t limit = 10;
};
struct Sample {
  std::uint64_t seed = 0;
  std::uint64_t count = 100000;
};
using Strategy = std::variant<Exhaustive, Gray, Sample>;

/// Minimum distance of a code. Exhaustive and Gray require k <= limit
/// (DimensionTooLarge); both are exact. Throws DimensionTooLarge for k = 0.
ScanResult min_distance(const codes::EvaluationCode& code, const Strategy& strategy, unsigned jobs = 1);

/// Minimum weight of ev(M + sum a_i * support_i) over all coefficients.
/// Throws NotInFootprint or SupportNotBelowM.
ScanResult coset_min_weight(const poly::Monomial& lead, const std::vector<poly::Monomial>& support,
                            const codes::Variety& v, const poly::FieldPolyRing& ring,
                            const groebner::Footprint& fp, const Strategy& strategy,
                            unsigned jobs = 1);

/// Footprint monomials strictly below M, descending (the parameter order).
std::vector<poly::Monomial> monomials_below(const poly::Monomial& lead, const groebner::Footprint& fp);

}  // namespace klein::oracle
