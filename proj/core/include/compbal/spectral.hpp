#pragma once

#include <compbal/part_set.hpp>

#include <complex>
#include <cstdint>
#include <vector>

namespace compbal {

/**
 * The characteristic polynomial f_w(z) = z^m - sum_{i<k} z^{m-s_i} - w
 * of the sequence {A(n, w)}_n, for a point w on the unit circle.
 * Coefficients are stored ascending; the leading coefficient is 1.
 */
struct CharPolynomial {
  std::vector<std::complex<double>> coeffs;
  std::complex<double> w{1.0, 0.0};

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct Root {
  std::complex<double> value;
  int multiplicity = 1;
  double modulus() const { return std::abs(value); }
};

/**
 * Root evidence for the spectral gap: the dominant positive root alpha
 * of f_1, all roots of f_{w^t} for a primitive q-th root of unity w,
 * and whether max modulus over t != 0 stays below alpha by more than
 * the tolerance.
 */
struct RootReport {
  double alpha = 0.0;
  std::int64_t q = 2;
  std::vector<std::vector<Root>> roots_by_t;  // index t = 0..q-1
  double beta = 0.0;                          // max modulus over t != 0
  double gap_ratio = 0.0;                     // beta / alpha
  double tolerance = 0.0;
  bool gap_holds = false;
};

/// exp(2*pi*i*t/q), with components snapped to exact 0/±1 so that
/// evaluation at -1 or 1 can take the exact integer path.
std::complex<double> unit_root(std::int64_t q, std::int64_t t);

/// Builds f_w for the part set. w must lie on the unit circle (1e-12).
CharPolynomial char_polynomial(const PartSet& s, std::complex<double> w);

/**
 * The unique positive real root of f_1, bracketed by bisection on
 * [1, 1+k] and polished by Newton. Requires k >= 2 (so that a root > 1
 * exists). Throws numeric_error after 200 iterations without reaching
 * |f_1(alpha)| <= tol.
 */
double dominant_root(const PartSet& s, double tol = 1e-12);

/**
 * All complex roots with multiplicity tags, by simultaneous (Aberth)
 * iteration started on a circle of radius 1 + max|coeff|, then Newton
 * polish. Roots closer than 1e-6 after polish are merged into one root
 * with a multiplicity tag.
 */
std::vector<Root> all_roots(const CharPolynomial& p, double tol = 1e-12);

/// Same finder for an arbitrary ascending coefficient vector.
std::vector<Root> find_roots(const std::vector<std::complex<double>>& coeffs, double tol = 1e-12);

/**
 * The spectral-gap certificate behind the balance theorem: beta is the
 * largest root modulus of any f_{w^t} with t != 0 and gap_holds is the
 * strict margin beta < alpha - tol.
 */
RootReport modulus_gap(const PartSet& s, std::int64_t q, double tol = 1e-9);

}  // namespace compbal
