#include <compbal/spectral.hpp>

#include <compbal/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace compbal {

namespace {

constexpr double kSnapEps = 4e-16;
constexpr double kMergeRadius = 1e-6;

double snap_component(double v) {
  if (std::abs(v) < kSnapEps) return 0.0;
  if (std::abs(v - 1.0) < kSnapEps) return 1.0;
  if (std::abs(v + 1.0) < kSnapEps) return -1.0;
  return v;
}

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> horner_deriv(const std::vector<std::complex<double>>& c,
                                  std::complex<double> z) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = c.size() - 1; i >= 1; --i)
    acc = acc * z + static_cast<double>(i) * c[i];
  return acc;
}

bool residual_ok(const std::vector<std::complex<double>>& c, std::complex<double> z, double tol) {
  const int deg = static_cast<int>(c.size()) - 1;
  return std::abs(horner(c, z)) <= tol * std::pow(1.0 + std::abs(z), deg);
}

bool root_less(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::complex<double> unit_root(std::int64_t q, std::int64_t t) {
  if (q < 1) throw input_error(errc::invalid_modulus, "modulus q must be >= 1");
  const std::int64_t tm = ((t % q) + q) % q;
  const double angle = 2.0 * std::numbers::pi_v<double> * static_cast<double>(tm) /
                       static_cast<double>(q);
  return {snap_component(std::cos(angle)), snap_component(std::sin(angle))};
}

CharPolynomial char_polynomial(const PartSet& s, std::complex<double> w) {
  if (std::abs(std::abs(w) - 1.0) > 1e-12)
    throw input_error(errc::not_on_unit_circle, "w must lie on the unit circle");
  const int m = s.largest();
  CharPolynomial p;
  p.w = w;
  p.coeffs.assign(static_cast<std::size_t>(m) + 1, {0.0, 0.0});
  p.coeffs[static_cast<std::size_t>(m)] = {1.0, 0.0};
  for (int i = 0; i + 1 < s.k(); ++i)
    p.coeffs[static_cast<std::size_t>(m - s.parts[static_cast<std::size_t>(i)])] -= 1.0;
  p.coeffs[0] -= w;
  return p;
}

double dominant_root(const PartSet& s, double tol) {
  if (s.k() < 2)
    throw input_error(errc::singleton_set, "dominant root needs at least two parts");

  const CharPolynomial f = char_polynomial(s, {1.0, 0.0});
  auto eval = [&](double z) { return horner(f.coeffs, {z, 0.0}).real(); };
  auto deriv = [&](double z) { return horner_deriv(f.coeffs, {z, 0.0}).real(); };

  double lo = 1.0;
  double hi = 1.0 + static_cast<double>(s.k());
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }

  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    const double fx = eval(x);
    if (std::abs(fx) <= tol) return x;
    const double dx = deriv(x);
    if (dx == 0.0) break;
    x -= fx / dx;
  }
  if (std::abs(eval(x)) <= tol) return x;
  throw numeric_error(errc::no_convergence, "Newton did not reach the dominant root tolerance");
}

std::vector<Root> find_roots(const std::vector<std::complex<double>>& coeffs, double tol) {
  std::vector<std::complex<double>> c = coeffs;
  while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() == 1) {
    if (std::abs(c[0]) == 0.0)
      throw input_error(errc::zero_polynomial, "the zero polynomial has no root set");
    return {};
  }

  // Zeros at the origin come off exactly before iterating.
  int origin_mult = 0;
  while (c.size() > 1 && std::abs(c.front()) == 0.0) {
    c.erase(c.begin());
    ++origin_mult;
  }

  std::vector<std::complex<double>> z;
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg >= 1) {
    const std::complex<double> lead = c.back();
    for (auto& a : c) a /= lead;

    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]));
    radius += 1.0;

    z.resize(static_cast<std::size_t>(deg));
    for (int j = 0; j < deg; ++j) {
      const double angle =
          2.0 * std::numbers::pi_v<double> * static_cast<double>(j) / static_cast<double>(deg) +
          0.4;
      z[static_cast<std::size_t>(j)] = std::polar(radius, angle);
    }

    for (int sweep = 0; sweep < 500; ++sweep) {
      bool all_done = true;
      for (int i = 0; i < deg; ++i) {
        std::complex<double>& zi = z[static_cast<std::size_t>(i)];
        if (residual_ok(c, zi, tol)) continue;
        all_done = false;

        const std::complex<double> pv = horner(c, zi);
        const std::complex<double> dv = horner_deriv(c, zi);
        if (std::abs(dv) == 0.0) {
          zi += std::complex<double>(1e-8 * (1.0 + std::abs(zi)), 1e-8);
          continue;
        }
        const std::complex<double> newton = pv / dv;

        std::complex<double> sum{0.0, 0.0};
        for (int j = 0; j < deg; ++j) {
          if (j == i) continue;
          std::complex<double> d = zi - z[static_cast<std::size_t>(j)];
          if (std::abs(d) < 1e-300) d = {1e-300, 0.0};
          sum += 1.0 / d;
        }
        const std::complex<double> denom = 1.0 - newton * sum;
        zi -= (std::abs(denom) < 1e-300) ? newton : newton / denom;
      }
      if (all_done) break;
    }

    for (auto& zi : z) {
      for (int i = 0; i < 20; ++i) {
        const std::complex<double> pv = horner(c, zi);
        const std::complex<double> dv = horner_deriv(c, zi);
        if (std::abs(dv) == 0.0) break;
        const std::complex<double> step = pv / dv;
        if (std::abs(step) == 0.0) break;
        zi -= step;
      }
      if (!residual_ok(c, zi, std::max(tol, 1e-10) * 1e3))
        throw numeric_error(errc::no_convergence, "root iteration did not converge");
    }
  }

  for (int i = 0; i < origin_mult; ++i) z.push_back({0.0, 0.0});
  std::sort(z.begin(), z.end(), root_less);

  std::vector<Root> roots;
  for (const auto& zi : z) {
    if (!roots.empty() &&
        std::abs(zi - roots.back().value) <= kMergeRadius) {
      Root& r = roots.back();
      const double count = static_cast<double>(r.multiplicity);
      r.value = (r.value * count + zi) / (count + 1.0);
      ++r.multiplicity;
    } else {
      roots.push_back({zi, 1});
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return root_less(a.value, b.value); });
  return roots;
}

std::vector<Root> all_roots(const CharPolynomial& p, double tol) {
  return find_roots(p.coeffs, tol);
}

RootReport modulus_gap(const PartSet& s, std::int64_t q, double tol) {
  if (q < 2) throw input_error(errc::invalid_modulus, "modulus q must be >= 2");

  RootReport report;
  report.q = q;
  report.tolerance = tol;
  report.alpha = dominant_root(s);
  report.roots_by_t.reserve(static_cast<std::size_t>(q));

  double beta = 0.0;
  for (std::int64_t t = 0; t < q; ++t) {
    const CharPolynomial f = char_polynomial(s, unit_root(q, t));
    std::vector<Root> roots = all_roots(f);
    if (t != 0)
      for (const Root& r : roots) beta = std::max(beta, r.modulus());
    report.roots_by_t.push_back(std::move(roots));
  }
  report.beta = beta;
  report.gap_ratio = beta / report.alpha;
  report.gap_holds = beta < report.alpha - tol;
  return report;
}

}  // namespace compbal
