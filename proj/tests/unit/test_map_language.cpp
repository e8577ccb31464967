#include <random>

#include "cremona/errors.hpp"
#include "cremona/map_language.hpp"
#include "doctest.h"

using namespace cremona;

TEST_CASE("parse_map examples") {
  CremonaMap s = parse_map("[y*z : x*z : x*y]");
  CHECK(s == sigma_map());
  CHECK(s.degree() == 2);
  CHECK(parse_map("[x : y : z]").is_identity());
  CremonaMap m = parse_map("[x^2*y : x*y^2 : (x-y)^2*z]");
  CHECK(m.degree() == 3);
  CHECK(m == parse_map("[x²y:xy²:(x−y)²z]"));
  CHECK(parse_map("[xz^2+y^3:yz^2:z^3]").to_string() == "[x*z^2 + y^3 : y*z^2 : z^3]");
}

TEST_CASE("parse_map removes common factors and normalizes") {
  CremonaMap m = parse_map("[2*x*y : 2*y*y : 2*y*z]");
  CHECK(m.is_identity());
  CHECK(parse_map("[x*(x^2+y*z) : y*(x^2+y*z) : z*(x^2+y*z)]").is_identity());
}

TEST_CASE("parse_map parameters") {
  CremonaMap m = parse_map("[γ*x^2*y : gamma*x*y^2 : (x+y)*(x+γ*y)*z]");
  CHECK(m.symbols() == std::vector<int>{0});
  CremonaMap m5 = parse_map("[γ*x^2*y : γ*x*y^2 : (x+y)*(x+γ*y)*z]", {{"γ", Scalar(5)}});
  CHECK(m5 == m.substitute_symbols({{0, Scalar(5)}}));
  CHECK(m5.has_only_rational_coeffs());
}

TEST_CASE("parse_map errors carry positions") {
  auto check_error = [](const std::string& text, int line, int col, const std::string& what) {
    try {
      parse_map(text);
      FAIL("expected a parse error for " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.col() == col);
      CHECK(e.reason().find(what) != std::string::npos);
    }
  };
  check_error("[x : y : ]", 1, 10, "unexpected");
  check_error("[x : y^2 + z : z]", 1, 6, "not homogeneous");
  check_error("[x : y^2 : z^2]", 1, 6, "degree mismatch");
  check_error("[x : 0 : z]", 1, 6, "zero");
  check_error("[x : y :\n  q]", 2, 3, "unknown symbol");
  check_error("[x/y : y : z]", 1, 4, "non-constant");
}

TEST_CASE("parse_point examples") {
  BubblePoint e1 = parse_point("[1:0:0]");
  CHECK(e1.is_proper());
  CHECK(e1.to_string() == "[1:0:0]");
  BubblePoint s = parse_point("([1:0:0], 0, inf)");
  CHECK(s.order() == 2);
  CHECK(!s.tail[1].has_value());
  CHECK(s.to_string() == "([1:0:0], 0, inf)");
  BubblePoint d = parse_point("([0:0:1], -1)");
  CHECK(d.order() == 1);
  CHECK(*d.tail[0] == Scalar(-1));
  CHECK(parse_point("[2:4:6]").to_string() == "[1/3:2/3:1]");
  CHECK(parse_point("([0:0:1], 1/γ)", {{"γ", Scalar(4)}}).to_string() == "([0:0:1], 1/4)");
  CHECK_THROWS_AS(parse_point("[0:0:0]"), ParseError);
  CHECK_THROWS_AS(parse_point("([1:0:0], )"), ParseError);
  CHECK_THROWS_AS(parse_point("([1:0:0])"), ParseError);
}

TEST_CASE("parse_decomposition examples") {
  auto d = parse_decomposition("sigma o sigma");
  REQUIRE(d.size() == 2);
  CHECK(d[0].kind == Factor::Kind::Sigma);
  auto t = parse_decomposition("[y:x:-z] o tau o sigma");
  REQUIRE(t.size() == 3);
  CHECK(t[0].kind == Factor::Kind::Aut);
  CHECK(t[1].kind == Factor::Kind::Tau);
  CHECK(t[2].kind == Factor::Kind::Sigma);
  CHECK(parse_decomposition("[y:x:−z]∘τ∘σ").size() == 3);
  auto a = parse_decomposition("[x:y:x+y+z]");
  REQUIRE(a.size() == 1);
  CHECK(a[0].aut.to_string() == "[x : y : x + y + z]");
  CHECK_THROWS_WITH_AS(parse_decomposition("[x^2:y:z] o sigma"), doctest::Contains("non-linear"), ParseError);
  CHECK_THROWS_WITH_AS(parse_decomposition("sigma o phi"), doctest::Contains("unknown symbol"), ParseError);
}

namespace {

HomPoly random_form(std::mt19937& rng, int degree, bool with_param) {
  std::uniform_int_distribution<int> coeff(-4, 4), den(1, 3), pick(0, 3);
  HomPoly f;
  Scalar g = Scalar::symbol("γ");
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) {
      if (pick(rng) == 0) continue;
      Scalar c(Rational(coeff(rng), den(rng)));
      if (with_param && pick(rng) == 1) c = c * g + Scalar(coeff(rng));
      f.add_term({i, j, degree - i - j}, c);
    }
  return f;
}

}  // namespace

TEST_CASE("print and parse round trip") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 1 + trial % 4;
    std::array<HomPoly, 3> f = {random_form(rng, d, trial % 3 == 0), random_form(rng, d, false),
                                random_form(rng, d, trial % 5 == 0)};
    if (f[0].is_zero() || f[1].is_zero() || f[2].is_zero()) continue;
    CremonaMap m(f);
    std::string text = m.to_string();
    CremonaMap back = parse_map(text);
    CHECK(back == m);
    CHECK(back.to_string() == text);
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> c(-9, 9), len(0, 4);
    Vec3 base = {Scalar(c(rng)), Scalar(c(rng)), Scalar(1 + std::abs(c(rng)))};
    std::vector<Slope> tail;
    int n = len(rng);
    for (int k = 0; k < n; ++k) {
      int v = c(rng);
      if (v == 9) tail.push_back(std::nullopt);
      else tail.push_back(Scalar(Rational(v, 1 + std::abs(c(rng)))));
    }
    BubblePoint p(base, tail);
    CHECK(parse_point(p.to_string()) == p);
    CHECK(parse_point(p.to_string()).to_string() == p.to_string());
  }
}

TEST_CASE("parser never crashes on arbitrary bytes") {
  std::mt19937 rng(99);
  const std::string alphabet = "[]():,+-*/^xyzabγ0123456789 oinfsigmarhotau\n∘−²";
  std::vector<std::string> seeds = {"[x*z^2+y^3 : y*z^2 : z^3]", "([1:0:0], 0, inf)", "[y:x:-z] o tau o sigma",
                                    "[γ*x^2*y : γ*x*y^2 : (x+y)*(x+γ*y)*z]"};
  std::uniform_int_distribution<int> byte(0, 255), op(0, 2);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s;
    if (trial % 2 == 0) {
      int n = trial % 40;
      for (int k = 0; k < n; ++k) s += static_cast<char>(byte(rng));
    } else {
      s = seeds[trial % seeds.size()];
      for (int k = 0; k < 3; ++k) {
        size_t pos = s.empty() ? 0 : rng() % s.size();
        switch (op(rng)) {
          case 0: if (!s.empty()) s.erase(pos, 1); break;
          case 1: s.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
          default: if (!s.empty()) s[pos] = static_cast<char>(byte(rng)); break;
        }
      }
    }
    for (int which = 0; which < 3; ++which) {
      try {
        if (which == 0) parse_map(s);
        else if (which == 1) parse_point(s);
        else parse_decomposition(s);
      } catch (const InputError&) {
      } catch (const UnsupportedError&) {
      } catch (const std::exception& e) {
        FAIL("unexpected exception " << std::string(e.what()) << " for input: " << s);
      }
    }
  }
  std::string deep(5000, '(');
  CHECK_THROWS_AS(parse_map("[" + deep + "x" + std::string(5000, ')') + " : y : z]"), ParseError);
  CHECK_THROWS_AS(parse_map("[x^99999999999999999999 : y : z]"), ParseError);
}
