#pragma once

#include <compbal/composition_poly.hpp>
#include <compbal/part_set.hpp>

#include <complex>
#include <cstdint>
#include <vector>

namespace compbal {

/// Memory cap for polynomial tables, counted in stored coefficients.
struct TableLimits {
  std::uint64_t max_cells = 10'000'000;
};

/**
 * A(n, x) for n = 0..n_max via the recurrence
 *
 *   A(n) = sum_{i<k} A(n - s_i) + x * A(n - m),  A(0) = 1, A(<0) = 0,
 *
 * with exact coefficients. Throws resource_error when the table would
 * exceed limits.max_cells coefficients.
 */
std::vector<CompositionPoly> polynomial_table(const PartSet& s, std::int64_t n_max,
                                              const TableLimits& limits = {});

/// A(n, 1): the number of compositions of n, by the integer form of the
/// recurrence (no polynomial storage).
BigInt total_count(const PartSet& s, std::int64_t n);

enum class ResidueMethod {
  direct,        // sum table coefficients by index residue
  quotient_ring  // run the recurrence on length-q vectors, x = cyclic shift
};

/**
 * Exact counts of compositions by multiplicity-of-largest-part mod q.
 * Both methods return identical results; quotient_ring never stores a
 * full polynomial and is the one to use for large n.
 */
ResidueDistribution residue_counts(const PartSet& s, std::int64_t n, std::int64_t q,
                                   ResidueMethod method = ResidueMethod::quotient_ring);

/// Residue split of an already-computed polynomial.
ResidueDistribution residue_counts(const CompositionPoly& p, std::int64_t q);

/// Quotient-ring sweep: distributions for every n in 0..n_max in one pass.
std::vector<ResidueDistribution> residue_series(const PartSet& s, std::int64_t q,
                                                std::int64_t n_max);

/**
 * Horner evaluation of p at z. z in {0, 1, -1} takes an exact integer
 * path before the final conversion, so alternating sums never cancel in
 * floating point. Throws numeric_error once any coefficient exceeds
 * 1e300 in magnitude.
 */
std::complex<double> eval_at(const CompositionPoly& p, std::complex<double> z);

/// The exact-path evaluation for z in {-1, 0, 1}.
BigInt eval_exact_small(const CompositionPoly& p, int z);

}  // namespace compbal
