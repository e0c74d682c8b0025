#pragma once

#include <compbal/composition_poly.hpp>
#include <compbal/part_set.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace compbal {

/// Caps for the exact Sturm machinery.
struct SturmLimits {
  int max_degree = 64;
  std::uint64_t max_coeff_bits = 100'000;
};

struct RealRootReport {
  int distinct_real_roots = 0;
  bool all_real = false;
};

/**
 * Exact real-root count via a Sturm chain over big integers (sign
 * variations at -inf and +inf), after square-free reduction by gcd with
 * the derivative. all_real holds exactly when every root, counted with
 * multiplicity, is real. Degree-0 polynomials count as (0, true).
 */
RealRootReport real_rooted(const CompositionPoly& p, const SturmLimits& limits = {});

struct LogConcavityReport {
  bool log_concave = false;
  bool unimodal = false;
  std::vector<int> peaks;
  std::optional<int> first_violation;
};

/**
 * Exact check of a_d^2 >= a_{d-1} a_{d+1} on the coefficients, plus
 * unimodality and the argmax indices. An interior zero between nonzero
 * coefficients fails the inequality on its own.
 */
LogConcavityReport log_concavity(const CompositionPoly& p);

enum class Interlacing { interlaces, fails, inconclusive };

/**
 * Numeric strict-interlacing check between consecutive members of a
 * polynomial family. Both inputs must be real-rooted and their degrees
 * may differ by at most 1. Root pairs closer than tol*max(1,|root|)
 * make the verdict inconclusive instead of a pass/fail; exactly equal
 * roots are a definite fail (strict alternation is impossible).
 */
Interlacing interlacing_check(const CompositionPoly& p, const CompositionPoly& p_next,
                              double tol = 1e-9);

/// All n <= n_max with A(n, -1) = 0, by the exact integer recurrence
/// specialized at x = -1.
std::vector<std::int64_t> minus_one_zeros(const PartSet& s, std::int64_t n_max);

/**
 * The minimal constant-coefficient linear recurrence generating a
 * sequence prefix, from LFSR synthesis (Berlekamp-Massey) over exact
 * rationals: a_n = sum_{i=1..order} coefficients[i-1] * a_{n-i}.
 */
struct RecurrenceFit {
  int order = 0;
  std::vector<BigRat> coefficients;
  std::size_t verified_prefix = 0;  // terms the relation reproduces
};

RecurrenceFit minimal_recurrence(const std::vector<BigInt>& seq);

}  // namespace compbal
