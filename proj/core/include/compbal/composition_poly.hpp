#pragma once

#include <compbal/numeric.hpp>

#include <cstdint>
#include <vector>

namespace compbal {

/**
 * The generating polynomial of the compositions of n with parts in a
 * fixed set, graded by the multiplicity of the largest part.
 *
 * coeffs[d] counts the compositions with exactly d parts equal to the
 * largest element. The vector is kept in canonical form: nonempty, and
 * with no trailing zero above degree 0, so the zero polynomial (no
 * compositions of n exist) is exactly {0}.
 */
struct CompositionPoly {
  std::int64_t n = 0;
  std::vector<BigInt> coeffs{BigInt(0)};

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == 0; }

  /// Coefficient sum: the total number of compositions of n.
  BigInt total() const;

  /// Drops trailing zeros (always keeps at least one entry).
  void normalize();

  bool operator==(const CompositionPoly&) const = default;
};

/**
 * Counts of compositions of n grouped by (multiplicity of largest part)
 * mod q, with the exact probabilities when any composition exists.
 * `probs` is empty when total == 0.
 */
struct ResidueDistribution {
  std::int64_t q = 2;
  std::vector<BigInt> counts;
  BigInt total = 0;
  std::vector<BigRat> probs;

  bool has_probs() const { return !probs.empty(); }
};

/// Fills total and probs from counts; probs stays empty when total == 0.
ResidueDistribution make_residue_distribution(std::int64_t q, std::vector<BigInt> counts);

}  // namespace compbal
