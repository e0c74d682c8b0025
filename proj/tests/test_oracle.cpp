#include <compbal/errors.hpp>
#include <compbal/oracle.hpp>

#include "doctest.h"

using namespace compbal;

namespace {
CompositionPoly poly(std::int64_t n, std::vector<BigInt> coeffs) {
  CompositionPoly p{n, std::move(coeffs)};
  p.normalize();
  return p;
}
}  // namespace

TEST_CASE("hand-counted small cases") {
  const PartSet s12 = validate_part_set({1, 2});
  // compositions of 3: (1,1,1), (1,2), (2,1)
  CHECK(brute_force_polynomial(s12, 3) == poly(3, {1, 2}));
  // compositions of 4: (1,1,1,1), (1,1,2)x3, (2,2)
  CHECK(brute_force_polynomial(s12, 4) == poly(4, {1, 3, 1}));

  const PartSet s13 = validate_part_set({1, 3});
  // compositions of 3: (1,1,1) and (3)
  CHECK(brute_force_polynomial(s13, 3) == poly(3, {1, 1}));
  CHECK(brute_force_polynomial(s13, 8) == poly(8, {1, 6, 6}));
}

TEST_CASE("single-part sets give monomials") {
  const PartSet s = validate_part_set({1});
  CHECK(brute_force_polynomial(s, 5) == poly(5, {0, 0, 0, 0, 0, 1}));

  const PartSet t = validate_part_set({3});
  CHECK(brute_force_polynomial(t, 9) == poly(9, {0, 0, 0, 1}));
  CHECK(brute_force_polynomial(t, 7).is_zero());
}

TEST_CASE("n = 0 has exactly the empty composition") {
  const PartSet s = validate_part_set({2, 4, 5});
  const CompositionPoly p = brute_force_polynomial(s, 0);
  CHECK(p.coeffs == std::vector<BigInt>{1});
  CHECK(p.total() == 1);
}

TEST_CASE("unrestricted parts count 2^(n-1) compositions") {
  const PartSet s = validate_part_set({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(brute_force_polynomial(s, 10).total() == 512);
}

TEST_CASE("negative n is rejected") {
  const PartSet s = validate_part_set({1, 2});
  CHECK_THROWS_AS(brute_force_polynomial(s, -1), input_error);
}

TEST_CASE("the enumeration cap trips as a resource error") {
  const PartSet s = validate_part_set({1, 2});
  CHECK_THROWS_AS(brute_force_polynomial(s, 20, 10), resource_error);
  CHECK_NOTHROW(brute_force_polynomial(s, 10, 100));
}
