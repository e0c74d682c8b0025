#include <compbal/errors.hpp>
#include <compbal/spectral.hpp>

#include "doctest.h"

#include <cmath>
#include <complex>

using namespace compbal;

TEST_CASE("unit roots snap to exact axis values") {
  CHECK(unit_root(2, 1) == std::complex<double>{-1.0, 0.0});
  CHECK(unit_root(4, 1) == std::complex<double>{0.0, 1.0});
  CHECK(unit_root(4, 2) == std::complex<double>{-1.0, 0.0});
  CHECK(unit_root(4, 3) == std::complex<double>{0.0, -1.0});
  CHECK(unit_root(6, 0) == std::complex<double>{1.0, 0.0});
  CHECK(unit_root(5, -1) == unit_root(5, 4));
  const std::complex<double> w = unit_root(3, 1);
  CHECK(w.real() == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(w.imag() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("characteristic polynomial layout") {
  const PartSet s = validate_part_set({1, 3});
  const CharPolynomial f = char_polynomial(s, {1.0, 0.0});
  // z^3 - z^2 - 1, ascending
  REQUIRE(f.degree() == 3);
  CHECK(f.coeffs[0] == std::complex<double>{-1.0, 0.0});
  CHECK(f.coeffs[1] == std::complex<double>{0.0, 0.0});
  CHECK(f.coeffs[2] == std::complex<double>{-1.0, 0.0});
  CHECK(f.coeffs[3] == std::complex<double>{1.0, 0.0});

  const CharPolynomial g = char_polynomial(s, {-1.0, 0.0});
  CHECK(g.coeffs[0] == std::complex<double>{1.0, 0.0});

  CHECK_THROWS_AS(char_polynomial(s, {0.5, 0.0}), input_error);
}

TEST_CASE("dominant roots match closed forms") {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(dominant_root(validate_part_set({1, 2})) == doctest::Approx(phi).epsilon(1e-12));
  CHECK(dominant_root(validate_part_set({1, 3})) ==
        doctest::Approx(1.4655712318767680).epsilon(1e-10));
  CHECK(dominant_root(validate_part_set({1, 2, 3})) ==
        doctest::Approx(1.8392867552141612).epsilon(1e-10));

  const PartSet s = validate_part_set({2, 4, 5});
  const double alpha = dominant_root(s);
  const CharPolynomial f = char_polynomial(s, {1.0, 0.0});
  std::complex<double> val{0.0, 0.0};
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
    val = val * alpha + *it;
  CHECK(std::abs(val) < 1e-10);

  CHECK_THROWS_AS(dominant_root(validate_part_set({4})), input_error);
}

TEST_CASE("root finding on known factorizations") {
  // (z - 1)(z - 2)
  auto roots = find_roots({{2, 0}, {-3, 0}, {1, 0}});
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value.real() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(roots[1].value.real() == doctest::Approx(2.0).epsilon(1e-9));

  // (z - 1)^2 merges into one root of multiplicity 2
  auto dbl = find_roots({{1, 0}, {-2, 0}, {1, 0}});
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].multiplicity == 2);
  CHECK(dbl[0].value.real() == doctest::Approx(1.0).epsilon(1e-6));

  // z^2 + 1: conjugate pair, sorted by imaginary part
  auto imag = find_roots({{1, 0}, {0, 0}, {1, 0}});
  REQUIRE(imag.size() == 2);
  CHECK(imag[0].value.imag() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(imag[1].value.imag() == doctest::Approx(1.0).epsilon(1e-9));

  // z^3: origin multiplicity comes off exactly
  auto origin = find_roots({{0, 0}, {0, 0}, {0, 0}, {1, 0}});
  REQUIRE(origin.size() == 1);
  CHECK(origin[0].multiplicity == 3);
  CHECK(origin[0].value == std::complex<double>{0.0, 0.0});

  CHECK(find_roots({{5, 0}}).empty());
  CHECK_THROWS_AS(find_roots({{0, 0}}), input_error);
}

TEST_CASE("returned roots satisfy the residual certificate") {
  const PartSet s = validate_part_set({1, 2, 3});
  for (std::int64_t t = 0; t < 5; ++t) {
    const CharPolynomial f = char_polynomial(s, unit_root(5, t));
    for (const Root& r : all_roots(f)) {
      std::complex<double> val{0.0, 0.0};
      for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        val = val * r.value + *it;
      CHECK(std::abs(val) < 1e-8);
    }
  }
}

TEST_CASE("spectral gap certificate for a balanced candidate") {
  const RootReport report = modulus_gap(validate_part_set({1, 3}), 2);
  CHECK(report.alpha == doctest::Approx(1.4655712318767680).epsilon(1e-10));
  CHECK(report.beta == doctest::Approx(1.1509639252577579).epsilon(1e-8));
  CHECK(report.gap_ratio == doctest::Approx(0.785335).epsilon(1e-4));
  CHECK(report.gap_holds);
  REQUIRE(report.roots_by_t.size() == 2);

  const RootReport fib = modulus_gap(validate_part_set({1, 2}), 2);
  // f_{-1} = z^2 - z + 1 has both roots on the unit circle
  CHECK(fib.beta == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fib.gap_holds);
}

TEST_CASE("the gap closes for the degenerate set") {
  const PartSet s = validate_part_set({2, 4, 5});
  const RootReport report = modulus_gap(s, 2);
  CHECK_FALSE(report.gap_holds);
  CHECK(report.beta == doctest::Approx(report.alpha).epsilon(1e-9));

  // -alpha is an exact root of f_{-1}
  double closest = 1e9;
  for (const Root& r : report.roots_by_t[1])
    closest = std::min(closest, std::abs(r.value - std::complex<double>{-report.alpha, 0.0}));
  CHECK(closest < 1e-6);
}

TEST_CASE("modulus_gap validates q") {
  CHECK_THROWS_AS(modulus_gap(validate_part_set({1, 2}), 1), input_error);
}
