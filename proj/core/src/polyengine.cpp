#include <compbal/polyengine.hpp>

#include <compbal/errors.hpp>

#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace compbal {

namespace {

void check_modulus(std::int64_t q) {
  if (q < 2) throw input_error(errc::invalid_modulus, "modulus q must be >= 2");
}

const BigInt& eval_overflow_threshold() {
  static const BigInt threshold = [] {
    BigInt t = 1;
    for (int i = 0; i < 300; ++i) t *= 10;
    return t;
  }();
  return threshold;
}

// Runs the length-q quotient-ring recurrence up to n_max, invoking
// visit(n, counts) for every n. Multiplication by x is a cyclic index
// shift by +1 mod q, so only q big integers per n are ever live.
void quotient_sweep(const PartSet& s, std::int64_t q, std::int64_t n_max,
                    const std::function<void(std::int64_t, const std::vector<BigInt>&)>& visit) {
  const int m = s.largest();
  std::vector<std::vector<BigInt>> window(static_cast<std::size_t>(m) + 1);
  auto slot = [&](std::int64_t n) -> std::vector<BigInt>& {
    return window[static_cast<std::size_t>(n % (m + 1))];
  };

  std::vector<BigInt> zero(static_cast<std::size_t>(q), BigInt(0));
  slot(0) = zero;
  slot(0)[0] = 1;
  visit(0, slot(0));

  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::vector<BigInt> v = zero;
    for (int part : s.parts) {
      if (n - part < 0) continue;
      const std::vector<BigInt>& prev = slot(n - part);
      if (part == m) {
        for (std::int64_t r = 0; r < q; ++r)
          v[static_cast<std::size_t>((r + 1) % q)] += prev[static_cast<std::size_t>(r)];
      } else {
        for (std::int64_t r = 0; r < q; ++r)
          v[static_cast<std::size_t>(r)] += prev[static_cast<std::size_t>(r)];
      }
    }
    slot(n) = std::move(v);
    visit(n, slot(n));
  }
}

}  // namespace

std::vector<CompositionPoly> polynomial_table(const PartSet& s, std::int64_t n_max,
                                              const TableLimits& limits) {
  if (n_max < 0) throw input_error(errc::non_positive_part, "n_max must be >= 0");
  const int m = s.largest();

  std::uint64_t cells = 0;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    cells += static_cast<std::uint64_t>(n / m) + 1;
    if (cells > limits.max_cells)
      throw resource_error(errc::resource_limit,
                           "polynomial table would exceed " +
                               std::to_string(limits.max_cells) + " coefficients");
  }

  std::vector<CompositionPoly> table;
  table.reserve(static_cast<std::size_t>(n_max) + 1);
  table.push_back(CompositionPoly{0, {BigInt(1)}});

  for (std::int64_t n = 1; n <= n_max; ++n) {
    CompositionPoly p;
    p.n = n;
    p.coeffs.assign(static_cast<std::size_t>(n / m) + 1, BigInt(0));
    for (int part : s.parts) {
      if (n - part < 0) continue;
      const auto& prev = table[static_cast<std::size_t>(n - part)].coeffs;
      const std::size_t shift = (part == m) ? 1 : 0;
      for (std::size_t d = 0; d < prev.size(); ++d) p.coeffs[d + shift] += prev[d];
    }
    p.normalize();
    table.push_back(std::move(p));
  }
  return table;
}

BigInt total_count(const PartSet& s, std::int64_t n) {
  if (n < 0) throw input_error(errc::non_positive_part, "n must be >= 0");
  const int m = s.largest();
  std::vector<BigInt> window(static_cast<std::size_t>(m) + 1, BigInt(0));
  window[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    BigInt v = 0;
    for (int part : s.parts)
      if (i - part >= 0) v += window[static_cast<std::size_t>((i - part) % (m + 1))];
    window[static_cast<std::size_t>(i % (m + 1))] = std::move(v);
  }
  return window[static_cast<std::size_t>(n % (m + 1))];
}

ResidueDistribution residue_counts(const CompositionPoly& p, std::int64_t q) {
  check_modulus(q);
  std::vector<BigInt> counts(static_cast<std::size_t>(q), BigInt(0));
  for (std::size_t d = 0; d < p.coeffs.size(); ++d)
    counts[d % static_cast<std::size_t>(q)] += p.coeffs[d];
  return make_residue_distribution(q, std::move(counts));
}

ResidueDistribution residue_counts(const PartSet& s, std::int64_t n, std::int64_t q,
                                   ResidueMethod method) {
  check_modulus(q);
  if (n < 0) throw input_error(errc::non_positive_part, "n must be >= 0");

  if (method == ResidueMethod::direct) {
    const auto table = polynomial_table(s, n);
    return residue_counts(table.back(), q);
  }

  std::vector<BigInt> last;
  quotient_sweep(s, q, n, [&](std::int64_t i, const std::vector<BigInt>& counts) {
    if (i == n) last = counts;
  });
  return make_residue_distribution(q, std::move(last));
}

std::vector<ResidueDistribution> residue_series(const PartSet& s, std::int64_t q,
                                                std::int64_t n_max) {
  check_modulus(q);
  if (n_max < 0) throw input_error(errc::non_positive_part, "n_max must be >= 0");
  std::vector<ResidueDistribution> series;
  series.reserve(static_cast<std::size_t>(n_max) + 1);
  quotient_sweep(s, q, n_max, [&](std::int64_t, const std::vector<BigInt>& counts) {
    series.push_back(make_residue_distribution(q, counts));
  });
  return series;
}

BigInt eval_exact_small(const CompositionPoly& p, int z) {
  switch (z) {
    case 0:
      return p.coeffs[0];
    case 1:
      return p.total();
    case -1: {
      BigInt sum = 0;
      for (std::size_t d = 0; d < p.coeffs.size(); ++d)
        sum += (d % 2 == 0) ? p.coeffs[d] : -p.coeffs[d];
      return sum;
    }
    default:
      throw input_error(errc::non_positive_part, "exact path is defined for z in {-1, 0, 1}");
  }
}

std::complex<double> eval_at(const CompositionPoly& p, std::complex<double> z) {
  for (const auto& c : p.coeffs) {
    if (boost::multiprecision::abs(c) >= eval_overflow_threshold())
      throw numeric_error(errc::overflow, "coefficient exceeds 1e300; refusing to evaluate");
  }

  if (z.imag() == 0.0 && (z.real() == 0.0 || z.real() == 1.0 || z.real() == -1.0)) {
    const BigInt exact = eval_exact_small(p, static_cast<int>(z.real()));
    const double value = to_double(exact);
    if (std::isinf(value))
      throw numeric_error(errc::overflow, "exact value overflows double range");
    return {value, 0.0};
  }

  std::complex<double> acc{0.0, 0.0};
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
    acc = acc * z + std::complex<double>(to_double(*it), 0.0);
  return acc;
}

}  // namespace compbal
