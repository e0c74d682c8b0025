#pragma once

#include <compbal/composition_poly.hpp>
#include <compbal/part_set.hpp>

#include <cstdint>

namespace compbal {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/**
 * Brute-force oracle: counts compositions of n by explicit recursive
 * enumeration of part sequences, never through the recurrence. Intended
 * as the independent reference for everything the recurrence engine
 * produces; keep it dumb.
 *
 * Throws resource_error once more than max_compositions compositions
 * have been enumerated.
 */
CompositionPoly brute_force_polynomial(const PartSet& s, std::int64_t n,
                                       std::uint64_t max_compositions = kDefaultEnumerationLimit);

}  // namespace compbal
