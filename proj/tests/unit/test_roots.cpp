#include "cremona/roots.hpp"
#include "doctest.h"

using namespace cremona;

TEST_CASE("rational roots of integer polynomials") {
  // (2t - 3)(t + 5)^2 (t^2 + 1) t
  UPoly f;
  UPoly a = {-3, 2}, b = {5, 1}, c = {1, 0, 1}, t = {0, 1};
  auto mul = [](const UPoly& p, const UPoly& q) {
    UPoly r(p.size() + q.size() - 1, Rational(0));
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
  };
  f = mul(mul(mul(mul(a, b), b), c), t);
  auto roots = rational_roots(f);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -5);
  CHECK(roots[1] == 0);
  CHECK(roots[2] == Rational(3, 2));
  CHECK(rational_roots({Rational(-2), Rational(0), Rational(1)}).empty());
  UPoly big = mul({Rational(-123456789), Rational(1000003)}, {Rational(77, 3), Rational(-5)});
  auto r2 = rational_roots(big);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == Rational(77, 15));
  CHECK(r2[1] == Rational(123456789, 1000003));
}

TEST_CASE("rational cube roots") {
  CHECK(*rational_cube_root(Rational(-27, 8)) == Rational(-3, 2));
  CHECK(!rational_cube_root(Rational(2)));
}
