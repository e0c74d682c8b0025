#pragma once

#include <cstdint>
#include <vector>

namespace compbal {

/**
 * A validated finite set of allowed part values.
 *
 * Parts are stored strictly ascending. `gcd_prefix` is the gcd of the
 * k-1 smallest parts (of the single part when k == 1); a set can only
 * have a balanced largest-part multiplicity when that gcd is 1 and the
 * set has at least two elements, which `balanced_candidate` records.
 */
struct PartSet {
  std::vector<int> parts;
  std::int64_t gcd_all = 0;
  std::int64_t gcd_prefix = 0;
  bool balanced_candidate = false;

  int k() const { return static_cast<int>(parts.size()); }
  int largest() const { return parts.back(); }

  bool operator==(const PartSet&) const = default;
};

/**
 * Validates a raw list of parts and computes the gcd diagnostics.
 *
 * The input may arrive in any order. Duplicates are rejected rather than
 * merged, as are values < 1 and empty input.
 */
PartSet validate_part_set(const std::vector<int>& raw);

}  // namespace compbal
