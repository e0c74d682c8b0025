#include <compbal/errors.hpp>
#include <compbal/oracle.hpp>
#include <compbal/polyengine.hpp>

#include "doctest.h"

#include <complex>
#include <vector>

using namespace compbal;

namespace {
const std::vector<std::vector<int>> kCorpus = {
    {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4, 5}, {1, 2, 3}, {3, 5}};
}

TEST_CASE("recurrence table matches the brute-force oracle") {
  for (const auto& parts : kCorpus) {
    const PartSet s = validate_part_set(parts);
    const auto table = polynomial_table(s, 12);
    REQUIRE(table.size() == 13);
    for (const auto& p : table) {
      CAPTURE(parts[0]);
      CAPTURE(p.n);
      CHECK(p == brute_force_polynomial(s, p.n));
    }
  }
}

TEST_CASE("table rows are canonical and degree-bounded") {
  const PartSet s = validate_part_set({2, 3});
  const auto table = polynomial_table(s, 30);
  for (const auto& p : table) {
    if (!p.is_zero()) CHECK(p.coeffs.back() != 0);
    CHECK(p.degree() <= p.n / s.largest());
    for (const auto& c : p.coeffs) CHECK(c >= 0);
  }
}

TEST_CASE("total_count agrees with the table and the closed form") {
  const PartSet all = validate_part_set({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(total_count(all, 10) == 512);
  CHECK(total_count(all, 0) == 1);

  const PartSet s = validate_part_set({1, 3});
  const auto table = polynomial_table(s, 40);
  for (const auto& p : table) CHECK(p.total() == total_count(s, p.n));
}

TEST_CASE("both residue methods agree identically") {
  for (const auto& parts : kCorpus) {
    const PartSet s = validate_part_set(parts);
    for (std::int64_t q = 2; q <= 7; ++q) {
      for (std::int64_t n = 0; n <= 40; n += 7) {
        const auto direct = residue_counts(s, n, q, ResidueMethod::direct);
        const auto ring = residue_counts(s, n, q, ResidueMethod::quotient_ring);
        CHECK(direct.counts == ring.counts);
        CHECK(direct.total == ring.total);
      }
    }
  }
}

TEST_CASE("residue counts partition the coefficient sum") {
  const PartSet s = validate_part_set({1, 2, 3});
  const auto table = polynomial_table(s, 25);
  for (const auto& p : table) {
    const auto dist = residue_counts(p, 4);
    BigInt sum = 0;
    for (const auto& c : dist.counts) sum += c;
    CHECK(sum == p.total());
  }
}

TEST_CASE("residue_series matches per-n residue counts") {
  const PartSet s = validate_part_set({2, 4, 5});
  const auto series = residue_series(s, 3, 30);
  REQUIRE(series.size() == 31);
  for (std::int64_t n = 0; n <= 30; ++n) {
    const auto direct = residue_counts(s, n, 3, ResidueMethod::direct);
    CHECK(series[static_cast<std::size_t>(n)].counts == direct.counts);
  }
}

TEST_CASE("distributions without compositions carry no probabilities") {
  const PartSet s = validate_part_set({2, 4, 6});
  const auto dist = residue_counts(s, 5, 2);
  CHECK(dist.total == 0);
  CHECK_FALSE(dist.has_probs());
  const auto even = residue_counts(s, 6, 2);
  CHECK(even.has_probs());
}

TEST_CASE("exact evaluation at -1, 0, 1") {
  const PartSet s = validate_part_set({1, 3});
  const CompositionPoly p = polynomial_table(s, 8).back();
  CHECK(eval_exact_small(p, 1) == 13);
  CHECK(eval_exact_small(p, -1) == 1);
  CHECK(eval_exact_small(p, 0) == 1);
  CHECK_THROWS_AS(eval_exact_small(p, 2), input_error);

  CHECK(eval_at(p, {1.0, 0.0}).real() == doctest::Approx(13.0).epsilon(1e-15));
  CHECK(eval_at(p, {-1.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("numeric evaluation matches Horner by hand") {
  CompositionPoly p{0, {BigInt(1), BigInt(6), BigInt(6)}};
  const std::complex<double> z{0.5, 0.25};
  const std::complex<double> expected = 1.0 + 6.0 * z + 6.0 * z * z;
  const std::complex<double> got = eval_at(p, z);
  CHECK(std::abs(got - expected) < 1e-14);
}

TEST_CASE("evaluation refuses coefficients beyond 1e300") {
  const BigInt huge = boost::multiprecision::pow(BigInt(10), 300);
  CompositionPoly p{0, {huge}};
  CHECK_THROWS_AS(eval_at(p, {0.5, 0.0}), numeric_error);
  CompositionPoly ok{0, {huge - 1}};
  CHECK_NOTHROW(eval_at(ok, {0.5, 0.0}));
}

TEST_CASE("the cell budget guards table construction") {
  const PartSet s = validate_part_set({1, 2});
  TableLimits limits;
  limits.max_cells = 50;
  CHECK_THROWS_AS(polynomial_table(s, 100, limits), resource_error);
  CHECK_NOTHROW(polynomial_table(s, 5, limits));
}

TEST_CASE("invalid arguments are input errors") {
  const PartSet s = validate_part_set({1, 2});
  CHECK_THROWS_AS(polynomial_table(s, -1), input_error);
  CHECK_THROWS_AS(total_count(s, -3), input_error);
  CHECK_THROWS_AS(residue_counts(s, 5, 1), input_error);
  CHECK_THROWS_AS(residue_series(s, 0, 5), input_error);
}
