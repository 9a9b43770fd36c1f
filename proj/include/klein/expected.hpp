#pragma once

// Reference values for the Klein quartic over GF(8) that the computations
// are expected to reproduce.

#include <array>
#include <cstdint>
#include <utility>

namespace klein::expected {

/// delta(X^a*Y^b) indexed [b][a]; 0 marks a monomial outside the footprint.
inline constexpr std::array<std::array<std::uint32_t, 8>, 3> kDelta{{
    {22, 19, 16, 13, 10, 7, 4, 1},
    {18, 15, 12, 9, 6, 4, 2, 0},
    {13, 10, 7, 5, 3, 2, 1, 0},
}};

/// (k, d) of the [22, k, d]_8 codes obtained by thresholding delta.
inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 15> kTable{{
    {1, 22}, {2, 19}, {3, 18}, {4, 16}, {5, 15}, {7, 13}, {8, 12}, {10, 10},
    {11, 9}, {13, 7}, {14, 6}, {15, 5}, {17, 4}, {18, 3}, {20, 2},
}};

/// Bounds of the nine classes settled by case analysis, as (a, b, bound).
inline constexpr std::array<std::array<std::uint32_t, 3>, 9> kTraceBounds{{
    {0, 1, 18}, {0, 2, 13}, {1, 1, 15}, {2, 1, 12}, {1, 2, 10},
    {3, 1, 9}, {2, 2, 7}, {3, 2, 5}, {7, 0, 1},
}};

inline constexpr std::size_t kLength = 22;
inline constexpr std::uint64_t kWeightOneFull = 154;
inline constexpr std::uint64_t kWeightOneWithoutTop = 7;

}  // namespace klein::expected
