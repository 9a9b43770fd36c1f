#pragma once

// The invariant suite behind `verify-all`: every module's structural checks
// plus seeded soundness sampling, each reported as one named pass/fail line.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "klein/report.hpp"
#include "klein/rng.hpp"
#include "klein/setup.hpp"

namespace klein::verify {

struct Options {
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  std::filesystem::path traces = "traces";
  std::size_t weight_samples = 1000;   // weight identity
  std::size_t class_samples = 10000;   // per footprint monomial
  std::size_t leaf_samples = 10;       // per trace leaf
  std::size_t exhaustive_k = 8;        // min-distance scans of table codes
  std::size_t coset_params = 7;        // exhaustive coset scans up to this many coefficients
  /// Also compare with the reference Klein values (GF(8), weights (2,3),
  /// Y^3 + X^3*Y + X).
  bool expected_values = true;
};

/// A random nonzero polynomial supported on the footprint; the density of
/// the support varies from sample to sample.
poly::FieldPoly random_reduced(const AffineSetup& setup, SplitMix64& rng);

/// Output depends only on the setup and the options, never on `jobs`.
std::vector<report::Check> run_all(const AffineSetup& setup, const Options& options);

}  // namespace klein::verify
