#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "inclab/counting.hpp"

namespace inclab {

/// k-1 distinct points on a seeded random line and n distinct planes through
/// that line: exactly (k-1)*n incidences. Requires 2 <= k <= p and 1 <= n <= p.
Instance rich_line_instance(std::uint64_t k, std::uint64_t n, const PrimeField& field,
                            std::uint64_t seed);

/// a_count lines {x=a, z=a*y} and b_count lines {y=b, z=b*x} with seeded
/// distinct parameters: the two rulings of z = xy, meeting in exactly
/// a_count*b_count points (a, b, a*b).
std::pair<std::vector<Line3>, std::vector<Line3>> regulus_instance(std::uint64_t a_count,
                                                                   std::uint64_t b_count,
                                                                   const PrimeField& field,
                                                                   std::uint64_t seed);

/// m distinct uniform points and n distinct uniform planes.
Instance random_instance(std::uint64_t m, std::uint64_t n, const PrimeField& field,
                         std::uint64_t seed);

/// Resamples random_instance until no line carries 3 points of P or lies in 3
/// planes of Q. Throws ConstructionRetryExceeded after max_tries attempts.
Instance random_no_rich_lines_instance(std::uint64_t m, std::uint64_t n, const PrimeField& field,
                                       std::uint64_t seed, int max_tries = 100);

}  // namespace inclab
