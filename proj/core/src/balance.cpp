#include <compbal/balance.hpp>

#include <compbal/errors.hpp>
#include <compbal/polyengine.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace compbal {

namespace {

void check_modulus(std::int64_t q) {
  if (q < 2) throw input_error(errc::invalid_modulus, "modulus q must be >= 2");
}

void check_pair(const PartSet& s, std::int64_t q) {
  check_modulus(q);
  if (s.k() < 2)
    throw input_error(errc::singleton_set, "balance analysis needs at least two parts");
}

double deviation_from_uniform(const ResidueDistribution& dist, std::int64_t r) {
  const BigRat dev = boost::multiprecision::abs(dist.probs[static_cast<std::size_t>(r)] -
                                                BigRat(1, dist.q));
  return to_double(dev);
}

}  // namespace

ResidueDistribution probabilities(const PartSet& s, std::int64_t n, std::int64_t q) {
  check_pair(s, q);
  ResidueDistribution dist = residue_counts(s, n, q, ResidueMethod::quotient_ring);
  if (dist.total == 0)
    throw input_error(errc::no_compositions,
                      "no composition of " + std::to_string(n) + " exists for this part set");
  return dist;
}

FilterReport filter_check(const PartSet& s, std::int64_t n, std::int64_t q, double tol) {
  check_modulus(q);
  const CompositionPoly poly = polynomial_table(s, n).back();
  const ResidueDistribution exact = residue_counts(poly, q);

  std::vector<std::complex<double>> values(static_cast<std::size_t>(q));
  for (std::int64_t t = 0; t < q; ++t)
    values[static_cast<std::size_t>(t)] = eval_at(poly, unit_root(q, t));

  FilterReport report;
  report.n = n;
  report.q = q;
  report.tol = tol;

  const double scale = std::max(1.0, to_double(exact.total));
  for (std::int64_t r = 0; r < q; ++r) {
    std::complex<double> sum{0.0, 0.0};
    for (std::int64_t t = 0; t < q; ++t)
      sum += values[static_cast<std::size_t>(t)] * unit_root(q, -t * r);
    FilterRow row;
    row.r = r;
    row.numeric = sum / static_cast<double>(q);
    row.exact = exact.counts[static_cast<std::size_t>(r)];
    row.discrepancy =
        std::abs(row.numeric - std::complex<double>(to_double(row.exact), 0.0)) / scale;
    report.max_discrepancy = std::max(report.max_discrepancy, row.discrepancy);
    report.rows.push_back(std::move(row));
  }
  report.passes = report.max_discrepancy < tol;
  return report;
}

ConvergenceSeries convergence_series(const PartSet& s, std::int64_t q, std::int64_t r,
                                     std::int64_t n_min, std::int64_t n_max) {
  check_pair(s, q);
  if (!s.balanced_candidate)
    throw input_error(errc::not_candidate,
                      "convergence analysis is defined for balanced candidates only");
  if (r < 0 || r >= q)
    throw input_error(errc::invalid_residue, "residue r must satisfy 0 <= r < q");
  if (n_min < 1 || n_min > n_max)
    throw input_error(errc::non_positive_part, "need 1 <= n_min <= n_max");

  ConvergenceSeries series;
  series.q = q;
  series.r = r;
  series.n_min = n_min;
  series.n_max = n_max;
  series.gap_ratio = modulus_gap(s, q).gap_ratio;

  const auto dists = residue_series(s, q, n_max);
  const BigRat uniform(1, q);
  double sum_x = 0.0, sum_y = 0.0, sum_xx = 0.0, sum_xy = 0.0;
  std::size_t used = 0;

  for (std::int64_t n = n_min; n <= n_max; ++n) {
    const ResidueDistribution& dist = dists[static_cast<std::size_t>(n)];
    if (!dist.has_probs()) continue;
    ConvergenceRow row;
    row.n = n;
    row.p = dist.probs[static_cast<std::size_t>(r)];
    row.deviation = to_double(boost::multiprecision::abs(row.p - uniform));
    if (row.deviation > 1e-300) {
      const double x = static_cast<double>(n);
      const double y = std::log(row.deviation);
      sum_x += x;
      sum_y += y;
      sum_xx += x * x;
      sum_xy += x * y;
      ++used;
    }
    series.rows.push_back(std::move(row));
  }

  series.rows_used = used;
  if (used >= 2) {
    const double denom = static_cast<double>(used) * sum_xx - sum_x * sum_x;
    if (denom != 0.0) {
      const double slope = (static_cast<double>(used) * sum_xy - sum_x * sum_y) / denom;
      const double intercept = (sum_y - slope * sum_x) / static_cast<double>(used);
      series.fitted_rho = std::exp(slope);
      series.fitted_K = std::exp(intercept);
    }
  }
  return series;
}

BalanceVerdict balance_verdict(const PartSet& s, std::int64_t q, std::int64_t n_max, double tol) {
  check_pair(s, q);
  if (n_max < 0) throw input_error(errc::non_positive_part, "n_max must be >= 0");

  BalanceVerdict v;
  v.q = q;
  v.n_max = n_max;
  v.tol = tol;
  v.candidate = s.balanced_candidate;
  v.gcd_prefix = s.gcd_prefix;
  v.gcd_all = s.gcd_all;
  v.max_deviation = std::numeric_limits<double>::quiet_NaN();

  try {
    v.spectral = modulus_gap(s, q);
  } catch (const error&) {
    v.spectral.reset();
  }

  const auto dists = residue_series(s, q, n_max);
  if (dists.back().has_probs()) {
    v.at_n_max = dists.back();
    double dev = 0.0;
    for (std::int64_t r = 0; r < q; ++r)
      dev = std::max(dev, deviation_from_uniform(*v.at_n_max, r));
    v.max_deviation = dev;
  }

  if (v.spectral && v.at_n_max) {
    const double log_total = log_big(v.at_n_max->total);
    v.growth_constant =
        std::exp(log_total - static_cast<double>(n_max) * std::log(v.spectral->alpha));
  }

  if (v.gcd_prefix > 1 && q == v.gcd_prefix) {
    const std::int64_t h = v.gcd_prefix;
    const std::int64_t m = s.largest();
    const bool m_invertible = std::gcd(m, h) == 1;
    std::int64_t m_inv = 0;
    if (m_invertible)
      for (std::int64_t c = 1; c < h; ++c)
        if ((m * c) % h == 1) m_inv = c;

    v.degenerate_uniform = true;
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const ResidueDistribution& dist = dists[static_cast<std::size_t>(n)];
      if (dist.total == 0) continue;
      DegenerateRow row;
      row.n = n;
      int nonzero = 0;
      for (std::int64_t r = 0; r < q; ++r) {
        if (dist.counts[static_cast<std::size_t>(r)] != 0) {
          ++nonzero;
          row.residue = r;
        }
      }
      row.unique = nonzero == 1;
      if (!row.unique || (m_invertible && row.residue != (n % h) * m_inv % h))
        v.degenerate_uniform = false;
      v.degenerate.push_back(row);
    }
  }

  if (!v.candidate) {
    v.reason = "necessary gcd condition fails (gcd of the smaller parts is " +
               std::to_string(v.gcd_prefix) + ")";
  } else if (!v.spectral) {
    v.reason = "spectral evidence unavailable (root finding failed)";
  } else if (!v.spectral->gap_holds) {
    v.reason = "spectral gap not certified";
  } else if (!v.at_n_max) {
    v.reason = "no compositions at n_max";
  } else if (!(v.max_deviation < tol)) {
    v.reason = "deviation at n_max is not below tolerance";
  } else {
    v.balanced = true;
    v.reason = "gcd condition, spectral gap, and deviation at n_max all hold";
  }
  return v;
}

}  // namespace compbal
