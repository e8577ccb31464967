#include <algorithm>
#include <random>

#include "cremona/catalog.hpp"
#include "cremona/classify.hpp"
#include "cremona/errors.hpp"
#include "cremona/map_language.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

ProjAut random_aut(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    Mat3 m;
    for (auto& row : m)
      for (auto& v : row) v = Scalar(d(rng));
    if (!det3(m).is_zero()) return ProjAut(m);
  }
}

std::vector<std::string> orbit_strings(const std::vector<std::vector<Scalar>>& orbit) {
  std::vector<std::string> out;
  for (const auto& p : orbit) {
    std::string s;
    for (const auto& v : p) s += (s.empty() ? "" : ",") + v.to_string();
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CremonaMap phi(int type, std::vector<Scalar> params) { return type_record(type).map(bindings_for(type, params)); }

}  // namespace

TEST_CASE("catalog rows compose and match their lengths") {
  for (const auto& t : catalog()) {
    Bindings b = t.reference_bindings();
    Decomposition d = t.ordinary_decomposition(b);
    CHECK(compose_factors(d) == t.map(b));
    CHECK(count_quadratic(d, Factor::Kind::Sigma) == t.oq);
    CHECK(t.q == (t.id == 1 ? 3 : 2));
  }
  CHECK(type_record(17).oq == 4);
  CHECK_THROWS_AS(type_record(0), InputError);
  CHECK_THROWS_AS(type_record(32), InputError);
}

TEST_CASE("self classification") {
  for (const auto& t : catalog()) {
    CremonaMap f = t.reference_map();
    ClassificationResult r = classify(f);
    CHECK(r.type == t.id);
    CHECK(r.kind == "cubic");
    CHECK(verify_witness(f, r));
  }
  ClassificationResult r17 = classify(type_record(17).reference_map());
  CHECK(r17.params.empty());
  CHECK(r17.pre.is_identity());
  CHECK(r17.post.is_identity());
  ClassificationResult r27 = classify(phi(27, {Scalar(5)}));
  CHECK(r27.type == 27);
  REQUIRE(r27.params.size() == 1);
  CHECK(r27.params[0] == Scalar(5));
}

TEST_CASE("quadratic and linear inputs") {
  CHECK(classify(sigma_map()).kind == "sigma");
  CHECK(classify(rho_map()).kind == "rho");
  CHECK(classify(tau_map()).kind == "tau");
  ClassificationResult s = classify(parse_map("[y*z+x*y:x*z:x*y]"));
  CHECK(s.kind == "sigma");
  CHECK(verify_witness(parse_map("[y*z+x*y:x*z:x*y]"), s));
  ClassificationResult l = classify(parse_map("[y:x+z:z]"));
  CHECK(l.kind == "linear");
  CHECK(verify_witness(parse_map("[y:x+z:z]"), l));
  CHECK_THROWS_AS(classify(parse_map("[x^4:y^4:z^4]")), UnsupportedError);
  CHECK_THROWS_AS(classify(parse_map("[x^3:y^3:z^3]")), NotBirationalError);
}

TEST_CASE("classification is invariant under automorphisms") {
  std::mt19937 rng(29);
  for (const auto& t : catalog()) {
    CremonaMap f = t.reference_map();
    ClassificationResult ref = classify(f);
    for (int trial = 0; trial < 3; ++trial) {
      CremonaMap g = apply_aut(random_aut(rng), f, random_aut(rng));
      ClassificationResult r = classify(g);
      CHECK(r.type == t.id);
      CHECK(orbit_strings(r.orbit) == orbit_strings(ref.orbit));
      CHECK(verify_witness(g, r));
    }
  }
}

TEST_CASE("parameter orbits") {
  CHECK(orbit_strings(param_orbit(28, {Scalar(3)})) ==
        std::vector<std::string>{"-1/2", "-2", "1/3", "2/3", "3", "3/2"});
  CHECK(orbit_strings(param_orbit(27, {Scalar(5)})) == std::vector<std::string>{"1/5", "5"});
  auto o31 = param_orbit(31, {Scalar(2), Scalar(3)});
  CHECK(o31.size() == 24);
  CHECK(std::find(o31.begin(), o31.end(), std::vector<Scalar>{Scalar(1) / 2, Scalar(1) / 3}) != o31.end());
  int sizes[] = {2, 2, 6, 6, 6, 24};
  for (int type = 26; type <= 31; ++type) {
    std::vector<Scalar> p = type == 31 ? std::vector<Scalar>{Scalar(2), Scalar(5)} : std::vector<Scalar>{Scalar(7)};
    auto orbit = param_orbit(type, p);
    CHECK(static_cast<int>(orbit.size()) <= sizes[type - 26]);
    for (const auto& q : orbit) CHECK(orbit_strings(param_orbit(type, q)) == orbit_strings(orbit));
    CHECK(canonical_params(type, p) == orbit.front());
  }
}

TEST_CASE("orbit moves carry base points and maps") {
  for (int type = 26; type <= 31; ++type) {
    std::vector<Scalar> p = type == 31 ? std::vector<Scalar>{Scalar(2), Scalar(3)} : std::vector<Scalar>{Scalar(3)};
    Bindings b = bindings_for(type, p);
    CremonaMap f = phi(type, p);
    for (const auto& mv : orbit_moves(type)) {
      std::vector<Scalar> image;
      for (const auto& e : mv.image) image.push_back(parse_scalar(e, b));
      ProjAut a = parse_aut(mv.aut, b);
      CremonaMap g = phi(type, image);
      // g o a has the same net as f.
      CHECK(post_factor(f, compose(g, CremonaMap::from_aut(a))).has_value());
      ClassificationResult r = classify(apply_aut(ProjAut(), f, a.inverse()));
      CHECK(r.type == type);
    }
  }
}

TEST_CASE("equivalence examples") {
  Equivalence e28 = equivalent(phi(28, {Scalar(3)}), phi(28, {Scalar(-2)}));
  CHECK(e28.equivalent);
  REQUIRE(e28.has_witness);
  CHECK(e28.pre.to_string() == "[x : x - y : z]");
  CHECK(apply_aut(e28.post, phi(28, {Scalar(-2)}), e28.pre) == phi(28, {Scalar(3)}));

  Equivalence e27 = equivalent(phi(27, {Scalar(5)}), phi(27, {Scalar(1) / 5}));
  CHECK(e27.equivalent);
  REQUIRE(e27.has_witness);
  CHECK(e27.pre.to_string() == "[y : x : -z]");

  CHECK(!equivalent(phi(26, {Scalar(3)}), phi(27, {Scalar(3)})).equivalent);
  CHECK(!equivalent(phi(28, {Scalar(3)}), phi(28, {Scalar(5)})).equivalent);
}

TEST_CASE("conjugating type 28 by [x:x-y:z] gives 1 - γ") {
  CremonaMap g = apply_aut(ProjAut(), phi(28, {Scalar(3)}), parse_aut("[x:x-y:z]"));
  ClassificationResult r = classify(g);
  CHECK(r.type == 28);
  CHECK(orbit_strings(r.orbit) == orbit_strings(param_orbit(28, {Scalar(-2)})));
}

TEST_CASE("inverse column") {
  for (const auto& t : catalog()) {
    Bindings b = t.reference_bindings();
    CremonaMap inv = compose_factors(inverse_from_decomposition(t.ordinary_decomposition(b)));
    CHECK(classify(inv).type == t.inverse);
  }
}
