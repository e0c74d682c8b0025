#include <compbal/properties.hpp>

#include <compbal/errors.hpp>
#include <compbal/spectral.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <utility>

namespace compbal {

namespace {

// Integer polynomials, ascending coefficients, empty vector = zero.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * BigInt(i));
  trim(d);
  return d;
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

void make_primitive(ZPoly& p) {
  const BigInt g = content(p);
  if (g > 1)
    for (auto& c : p) c /= g;
}

// Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a modulo b. The
// returned multiplier sign tells whether that power is negative.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b, int& multiplier_sign) {
  const BigInt& lc = b.back();
  int e = degree(a) - degree(b) + 1;
  const int e_total = e;
  while (!a.empty() && degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const BigInt lead = a.back();
    for (auto& c : a) c *= lc;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[static_cast<std::size_t>(shift) + i] -= lead * b[i];
    trim(a);
    --e;
  }
  for (int i = 0; i < e; ++i)
    for (auto& c : a) c *= lc;
  multiplier_sign = (lc < 0 && e_total % 2 != 0) ? -1 : 1;
  return a;
}

// Primitive gcd with positive leading coefficient; gcd(a, 0) = a.
ZPoly gcd_poly(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  make_primitive(a);
  make_primitive(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    int sign = 0;
    ZPoly r = pseudo_rem(a, b, sign);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Exact quotient a / b scaled to a primitive integer polynomial;
// requires b | a over the rationals.
ZPoly exact_quotient(const ZPoly& a, const ZPoly& b) {
  std::vector<BigRat> rem(a.begin(), a.end());
  std::vector<BigRat> quot(a.size() - b.size() + 1, BigRat(0));
  const BigRat lead(b.back());
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    const BigRat c = rem[static_cast<std::size_t>(i) + b.size() - 1] / lead;
    quot[static_cast<std::size_t>(i)] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      rem[static_cast<std::size_t>(i) + j] -= c * BigRat(b[j]);
  }

  BigInt denom_lcm = 1;
  for (const auto& c : quot)
    denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(c));
  ZPoly out;
  for (const auto& c : quot)
    out.push_back(boost::multiprecision::numerator(c) * (denom_lcm /
                  boost::multiprecision::denominator(c)));
  trim(out);
  make_primitive(out);
  return out;
}

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

// Sturm chain of a square-free polynomial; returns the number of
// distinct real roots as V(-inf) - V(+inf).
int sturm_count(const ZPoly& p) {
  std::vector<ZPoly> chain;
  chain.push_back(p);
  chain.push_back(derivative(p));
  while (!chain.back().empty() && degree(chain.back()) >= 0) {
    const ZPoly& prev = chain[chain.size() - 2];
    const ZPoly& cur = chain.back();
    if (degree(cur) == 0) break;
    int sign = 0;
    ZPoly r = pseudo_rem(prev, cur, sign);
    if (r.empty()) break;
    make_primitive(r);
    if (sign > 0)
      for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }

  std::vector<int> at_plus, at_minus;
  for (const ZPoly& f : chain) {
    if (f.empty()) continue;
    const int lead = sign_of(f.back());
    at_plus.push_back(lead);
    at_minus.push_back(degree(f) % 2 == 0 ? lead : -lead);
  }
  return count_variations(at_minus) - count_variations(at_plus);
}

void check_limits(const CompositionPoly& p, const SturmLimits& limits) {
  if (p.degree() > limits.max_degree)
    throw resource_error(errc::resource_limit, "degree exceeds the exact-chain cap");
  for (const auto& c : p.coeffs) {
    if (c == 0) continue;
    const std::uint64_t bits = boost::multiprecision::msb(boost::multiprecision::abs(c)) + 1;
    if (bits > limits.max_coeff_bits)
      throw resource_error(errc::resource_limit, "coefficient bit length exceeds the cap");
  }
}

std::vector<double> numeric_real_roots(const CompositionPoly& p, bool& resolved) {
  std::vector<std::complex<double>> coeffs;
  for (const auto& c : p.coeffs) {
    const double v = to_double(c);
    if (std::isinf(v))
      throw numeric_error(errc::overflow, "coefficient exceeds double range");
    coeffs.push_back({v, 0.0});
  }
  resolved = true;
  std::vector<double> roots;
  for (const Root& r : find_roots(coeffs)) {
    if (r.multiplicity > 1) resolved = false;
    for (int i = 0; i < r.multiplicity; ++i) roots.push_back(r.value.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

RealRootReport real_rooted(const CompositionPoly& p, const SturmLimits& limits) {
  if (p.is_zero())
    throw input_error(errc::zero_polynomial, "the zero polynomial has no root count");
  if (p.degree() == 0) return {0, true};
  check_limits(p, limits);

  ZPoly a(p.coeffs.begin(), p.coeffs.end());
  trim(a);
  const ZPoly g = gcd_poly(a, derivative(a));
  ZPoly sf = degree(g) == 0 ? a : exact_quotient(a, g);
  make_primitive(sf);

  const int distinct = sturm_count(sf);
  return {distinct, distinct == degree(sf)};
}

LogConcavityReport log_concavity(const CompositionPoly& p) {
  if (p.is_zero())
    throw input_error(errc::zero_polynomial, "the zero polynomial has no coefficient profile");

  LogConcavityReport report;
  report.log_concave = true;
  const auto& c = p.coeffs;

  for (std::size_t d = 1; d + 1 < c.size(); ++d) {
    if (c[d] * c[d] < c[d - 1] * c[d + 1]) {
      report.log_concave = false;
      report.first_violation = static_cast<int>(d);
      break;
    }
  }

  report.unimodal = true;
  bool falling = false;
  for (std::size_t d = 1; d < c.size(); ++d) {
    if (c[d] < c[d - 1]) falling = true;
    if (c[d] > c[d - 1] && falling) {
      report.unimodal = false;
      break;
    }
  }

  const BigInt peak = *std::max_element(c.begin(), c.end());
  for (std::size_t d = 0; d < c.size(); ++d)
    if (c[d] == peak) report.peaks.push_back(static_cast<int>(d));
  return report;
}

Interlacing interlacing_check(const CompositionPoly& p, const CompositionPoly& p_next,
                              double tol) {
  const RealRootReport rp = real_rooted(p);
  const RealRootReport rq = real_rooted(p_next);
  if (!rp.all_real || !rq.all_real)
    throw input_error(errc::not_real_rooted, "interlacing needs two real-rooted polynomials");
  if (std::abs(p.degree() - p_next.degree()) > 1)
    throw input_error(errc::degree_mismatch, "degrees may differ by at most 1");

  if (p.degree() == 0 || p_next.degree() == 0) return Interlacing::interlaces;

  if (rp.distinct_real_roots < p.degree() || rq.distinct_real_roots < p_next.degree())
    return Interlacing::fails;
  ZPoly a(p.coeffs.begin(), p.coeffs.end());
  ZPoly b(p_next.coeffs.begin(), p_next.coeffs.end());
  trim(a);
  trim(b);
  if (degree(gcd_poly(a, b)) >= 1) return Interlacing::fails;

  bool resolved_p = false, resolved_q = false;
  const std::vector<double> xs = numeric_real_roots(p, resolved_p);
  const std::vector<double> ys = numeric_real_roots(p_next, resolved_q);
  if (!resolved_p || !resolved_q) return Interlacing::inconclusive;

  struct Tagged {
    double value;
    int tag;
  };
  std::vector<Tagged> merged;
  for (double x : xs) merged.push_back({x, 0});
  for (double y : ys) merged.push_back({y, 1});
  std::sort(merged.begin(), merged.end(),
            [](const Tagged& u, const Tagged& v) { return u.value < v.value; });

  for (std::size_t i = 1; i < merged.size(); ++i) {
    const double gap = merged[i].value - merged[i - 1].value;
    const double scale = std::max(1.0, std::max(std::abs(merged[i].value),
                                                std::abs(merged[i - 1].value)));
    if (gap < tol * scale) return Interlacing::inconclusive;
  }
  for (std::size_t i = 1; i < merged.size(); ++i)
    if (merged[i].tag == merged[i - 1].tag) return Interlacing::fails;
  return Interlacing::interlaces;
}

std::vector<std::int64_t> minus_one_zeros(const PartSet& s, std::int64_t n_max) {
  if (n_max < 0) throw input_error(errc::non_positive_part, "n_max must be >= 0");
  const int m = s.largest();
  std::vector<BigInt> window(static_cast<std::size_t>(m) + 1, BigInt(0));
  window[0] = 1;
  std::vector<std::int64_t> zeros;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    BigInt v = 0;
    for (int part : s.parts) {
      if (n - part < 0) continue;
      const BigInt& prev = window[static_cast<std::size_t>((n - part) % (m + 1))];
      if (part == m)
        v -= prev;
      else
        v += prev;
    }
    if (v == 0) zeros.push_back(n);
    window[static_cast<std::size_t>(n % (m + 1))] = std::move(v);
  }
  return zeros;
}

RecurrenceFit minimal_recurrence(const std::vector<BigInt>& seq) {
  if (seq.size() < 4)
    throw input_error(errc::too_short, "need at least 4 terms to synthesize a recurrence");

  // Berlekamp-Massey over the rationals: C is the connection polynomial
  // 1 - c_1 x - ... - c_L x^L.
  std::vector<BigRat> c{BigRat(1)};
  std::vector<BigRat> b{BigRat(1)};
  int order = 0;
  int shift = 1;
  BigRat last_disc(1);

  for (std::size_t n = 0; n < seq.size(); ++n) {
    BigRat disc(seq[n]);
    for (int i = 1; i <= order && i < static_cast<int>(c.size()); ++i)
      disc += c[static_cast<std::size_t>(i)] * BigRat(seq[n - static_cast<std::size_t>(i)]);

    if (disc == 0) {
      ++shift;
    } else if (2 * order <= static_cast<int>(n)) {
      const std::vector<BigRat> keep = c;
      const BigRat ratio = disc / last_disc;
      c.resize(std::max(c.size(), b.size() + static_cast<std::size_t>(shift)), BigRat(0));
      for (std::size_t i = 0; i < b.size(); ++i)
        c[i + static_cast<std::size_t>(shift)] -= ratio * b[i];
      order = static_cast<int>(n) + 1 - order;
      b = keep;
      last_disc = disc;
      shift = 1;
    } else {
      const BigRat ratio = disc / last_disc;
      c.resize(std::max(c.size(), b.size() + static_cast<std::size_t>(shift)), BigRat(0));
      for (std::size_t i = 0; i < b.size(); ++i)
        c[i + static_cast<std::size_t>(shift)] -= ratio * b[i];
      ++shift;
    }
  }

  RecurrenceFit fit;
  fit.order = order;
  for (int i = 1; i <= order; ++i)
    fit.coefficients.push_back(i < static_cast<int>(c.size()) ? -c[static_cast<std::size_t>(i)]
                                                              : BigRat(0));

  fit.verified_prefix = seq.size();
  for (std::size_t n = static_cast<std::size_t>(order); n < seq.size(); ++n) {
    BigRat sum(0);
    for (int i = 1; i <= order; ++i)
      sum += fit.coefficients[static_cast<std::size_t>(i - 1)] *
             BigRat(seq[n - static_cast<std::size_t>(i)]);
    if (sum != BigRat(seq[n])) {
      fit.verified_prefix = n;
      break;
    }
  }
  return fit;
}

}  // namespace compbal
