#pragma once

#include <compbal/composition_poly.hpp>
#include <compbal/part_set.hpp>
#include <compbal/spectral.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace compbal {

/**
 * Exact p_{n,r} = (count of compositions with multiplicity ~ r mod q) /
 * (total count), via the quotient-ring recurrence. Requires k >= 2 and
 * at least one composition of n.
 */
ResidueDistribution probabilities(const PartSet& s, std::int64_t n, std::int64_t q);

struct FilterRow {
  std::int64_t r = 0;
  std::complex<double> numeric;  // (1/q) sum_t A(n, w^t) w^{-tr}
  BigInt exact = 0;
  double discrepancy = 0.0;
};

/**
 * Cross-check of the roots-of-unity filter: the numeric average of
 * A(n, w^t) w^{-tr} over t must reproduce the exact residue counts.
 * Discrepancies are measured relative to the total count (per-entry
 * relative error is meaningless for classes whose exact count is 0).
 */
struct FilterReport {
  std::int64_t n = 0;
  std::int64_t q = 2;
  std::vector<FilterRow> rows;
  double max_discrepancy = 0.0;
  double tol = 0.0;
  bool passes = false;
};

FilterReport filter_check(const PartSet& s, std::int64_t n, std::int64_t q, double tol = 1e-9);

struct ConvergenceRow {
  std::int64_t n = 0;
  BigRat p;          // exact p_{n,r}
  double deviation;  // |p - 1/q|
};

/**
 * Deviation series |p_{n,r} - 1/q| over a range of n, with a
 * least-squares geometric fit dev ~ K * rho^n on the log scale. Rows
 * whose deviation is 0 (or below 1e-300, where log is meaningless) are
 * excluded from the fit. gap_ratio carries beta/alpha for comparison;
 * the fitted rho tracks it up to polynomial factors.
 */
struct ConvergenceSeries {
  std::int64_t q = 2;
  std::int64_t r = 0;
  std::vector<ConvergenceRow> rows;
  double fitted_rho = 0.0;
  double fitted_K = 0.0;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::size_t rows_used = 0;  // rows entering the fit
  double gap_ratio = 0.0;
};

ConvergenceSeries convergence_series(const PartSet& s, std::int64_t q, std::int64_t r,
                                     std::int64_t n_min, std::int64_t n_max);

/// One n of the degenerate pattern of an unbalanced set: the single
/// residue class carrying all compositions of n.
struct DegenerateRow {
  std::int64_t n = 0;
  std::int64_t residue = 0;
  bool unique = true;  // exactly one class has nonzero count
};

/**
 * Evidence-based verdict. Balanced requires all three ingredients: the
 * necessary gcd condition, the certified spectral gap, and a finite-n
 * deviation below tol at n_max. Unbalanced verdicts carry the exact
 * degenerate pattern when q equals the prefix gcd.
 */
struct BalanceVerdict {
  bool balanced = false;
  std::string reason;
  std::int64_t q = 2;
  std::int64_t n_max = 0;
  double tol = 0.0;
  bool candidate = false;
  std::int64_t gcd_prefix = 0;
  std::int64_t gcd_all = 0;
  std::optional<RootReport> spectral;
  std::optional<ResidueDistribution> at_n_max;  // present when compositions exist
  double max_deviation = 0.0;                   // NaN when undefined
  std::vector<DegenerateRow> degenerate;        // when q == gcd_prefix > 1
  bool degenerate_uniform = false;              // every row unique and as predicted
  double growth_constant = 0.0;                 // A(n_max, 1) / alpha^n_max
};

BalanceVerdict balance_verdict(const PartSet& s, std::int64_t q, std::int64_t n_max = 200,
                               double tol = 1e-3);

}  // namespace compbal
