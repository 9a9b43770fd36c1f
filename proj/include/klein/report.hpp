#pragma once

// Rendering of footprints, varieties, bounds, tables, scans and check lists
// as text, JSON or CSV. Field elements are always written as enc integers.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "klein/casebound.hpp"
#include "klein/oracle.hpp"
#include "klein/setup.hpp"

namespace klein::report {

enum class Format { text, json, csv };

/// Throws ParseError.
Format parse_format(std::string_view name);

/// Best minimum distance known to exist for an [n, k] code over GF(q), for
/// the dimensions the construction reaches at n = 22, q = 8.
std::optional<std::uint32_t> best_known_distance(std::size_t n, std::size_t k, std::uint32_t q);

/// Footprint monomials with their weights; text mode draws the X/Y grid.
std::string footprint(const AffineSetup& setup, Format fmt);
std::string variety(const AffineSetup& setup, Format fmt);

/// Per-class reports plus the resulting delta map.
std::string bounds(const AffineSetup& setup, const std::vector<casebound::BoundReport>& reports,
                   const codes::DeltaMap& delta, Format fmt);
/// A single class report with every leaf.
std::string bound(const casebound::BoundReport& report, Format fmt);

/// Rows with s = 1 and k = n are flagged supplementary.
std::string table(const std::vector<codes::TableRow>& rows, std::uint32_t q, Format fmt);

struct ScanReport {
  poly::Monomial lead;
  std::string mode;
  oracle::ScanResult result;
  std::uint32_t delta = 0;
};
std::string scan(const ScanReport& r, Format fmt);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};
std::string checks(const std::vector<Check>& list, Format fmt);

}  // namespace klein::report
