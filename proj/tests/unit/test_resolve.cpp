#include <random>

#include "cremona/catalog.hpp"
#include "cremona/errors.hpp"
#include "cremona/map_language.hpp"
#include "cremona/proximity.hpp"
#include "cremona/resolve.hpp"
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

std::vector<std::string> entry_strings(const BasePointTree& t) {
  std::vector<std::string> out;
  for (const auto& e : t.entries) out.push_back(e.point.to_string() + "/" + std::to_string(e.mult));
  return out;
}

}  // namespace

TEST_CASE("resolve examples") {
  BasePointTree t1 = resolve_base_points(type_record(1).reference_map());
  CHECK(entry_strings(t1) == std::vector<std::string>{"[1:0:0]/2", "([1:0:0], 0)/1", "([1:0:0], 0, inf)/1",
                                                      "([1:0:0], 0, inf, -1)/1", "([1:0:0], 0, inf, -1, 0)/1"});
  int inf_entry = t1.index_of(parse_point("([1:0:0], 0, inf)"));
  REQUIRE(inf_entry >= 0);
  CHECK(t1.satellite[inf_entry]);
  bool arc_to_p0 = false;
  for (auto [a, b] : t1.arrows) arc_to_p0 = arc_to_p0 || (a == inf_entry && b == 0);
  CHECK(arc_to_p0);

  BasePointTree ts = resolve_base_points(sigma_map());
  CHECK(ts.entries.size() == 3);
  CHECK(ts.arrows.empty());

  BasePointTree t31 = resolve_base_points(type_record(31).reference_map());
  REQUIRE(t31.entries.size() == 5);
  CHECK(t31.entries[0].point.to_string() == "[0:0:1]");
  CHECK(t31.entries[0].mult == 2);
  for (auto s : {"[0:1:0]", "[1:0:0]", "[1:1:1]", "[2:3:1]"}) CHECK(t31.index_of(parse_point(s)) > 0);
}

TEST_CASE("resolve errors") {
  CHECK_THROWS_AS(resolve_base_points(parse_map("[x^2:y^2:z^2]")), NotBirationalError);
  CHECK_THROWS_AS(resolve_base_points(parse_map("[γ*x*y:y*z:x*z]")), UnsupportedError);
  CHECK_THROWS_AS(resolve_base_points(parse_map("[x*(x^2+y^2):y*(x^2+y^2):z^3]")), UnsupportedError);
}

TEST_CASE("Noether equations and proximity inequalities for the catalog") {
  for (const auto& t : catalog()) {
    BasePointTree tree = resolve_base_points(t.reference_map());
    CHECK(tree.sum_mult() == 6);
    CHECK(tree.sum_mult_squared() == 8);
    CHECK(!tree.proximity_violation());
    std::vector<int> mults;
    for (const auto& e : tree.entries) mults.push_back(e.mult);
    CHECK(mults == std::vector<int>{2, 1, 1, 1, 1});
  }
}

TEST_CASE("net multiplicity is the minimum over generic members") {
  for (int id : {1, 5, 17, 28}) {
    CremonaMap f = type_record(id).reference_map();
    BasePointTree t = resolve_base_points(f);
    for (const auto& e : t.entries) {
      CHECK(net_multiplicity(f, e.point) == e.mult);
      HomPoly g = f[0] + f[1].scaled(Scalar(97) / 13) + f[2].scaled(Scalar(-211) / 17);
      CHECK(multiplicity(g, e.point) == e.mult);
    }
    CHECK(net_multiplicity(f, parse_point("[3:5:7]")) == 0);
  }
}

TEST_CASE("unexpected lines") {
  Bindings b{{"γ", Scalar(3)}};
  auto l28 = resolve_base_points(type_record(28).map(b)).line;
  REQUIRE(l28);
  CHECK(poly_to_string(l28->line) == "z");
  CHECK(!resolve_base_points(type_record(31).reference_map()).line);
  auto t17 = resolve_base_points(type_record(17).reference_map());
  REQUIRE(t17.line);
  int infinitely_near = 0;
  for (int m : t17.line->members) infinitely_near += t17.entries[m].point.is_proper() ? 0 : 1;
  CHECK(infinitely_near == 1);
}

TEST_CASE("composition examples") {
  CHECK(compose(sigma_map(), sigma_map()).is_identity());
  CHECK(compose(rho_map(), rho_map()).is_identity());
  CHECK(compose(tau_map(), tau_map()).is_identity());
  CHECK(apply_aut(ProjAut(), sigma_map(), ProjAut()) == sigma_map());
  CHECK(degree_drop(3, 2, 1, 1) == 2);
  CHECK(degree_drop(3, 2, 0, 0) == 4);
  CHECK(degree_drop(3, 0, 0, 0) == 6);
  CHECK(compose_factors(inverse_from_decomposition(parse_decomposition("sigma"))) == sigma_map());
}

TEST_CASE("catalog decompositions invert") {
  for (const auto& t : catalog()) {
    Bindings b = t.reference_bindings();
    CremonaMap f = t.map(b);
    CHECK(compose(f, compose_factors(inverse_from_decomposition(t.ordinary_decomposition(b)))).is_identity());
    if (auto q = t.quadratic_decomposition(b))
      CHECK(compose(compose_factors(inverse_from_decomposition(*q)), f).is_identity());
  }
}

TEST_CASE("automorphisms preserve degree and enriched graph") {
  std::mt19937 rng(3);
  for (int id : {1, 8, 14, 21, 28, 31}) {
    CremonaMap f = type_record(id).reference_map();
    for (int trial = 0; trial < 3; ++trial) {
      CremonaMap g = apply_aut(random_aut(rng), f, random_aut(rng));
      CHECK(g.degree() == 3);
      CHECK(enriched_row(enriched_graph_of(resolve_base_points(g))) == id);
    }
  }
}

TEST_CASE("composed degree matches degree_drop for ordinary quadratic maps") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 12; ++trial) {
    CremonaMap f = apply_aut(ProjAut(), type_record(1 + trial * 5 % 31).reference_map(), random_aut(rng));
    BasePointTree t = resolve_base_points(f);
    // Base points: some proper base points of f, the rest random.
    std::array<Vec3, 3> pts;
    int k = 0;
    for (const auto& e : t.entries)
      if (e.point.is_proper() && k < trial % 3) pts[k++] = e.point.base;
    for (; k < 3; ++k) pts[k] = {Scalar(d(rng)), Scalar(d(rng)), Scalar(1)};
    Mat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] = pts[c][r];
    if (det3(m).is_zero()) continue;
    ProjAut a(m);
    // a o sigma o a^{-1} is based at a(e_i) = pts[i].
    CremonaMap q_inv = compose(CremonaMap::from_aut(a), compose(sigma_map(), CremonaMap::from_aut(a.inverse())));
    int m1 = net_multiplicity(f, BubblePoint(pts[0]));
    int m2 = net_multiplicity(f, BubblePoint(pts[1]));
    int m3 = net_multiplicity(f, BubblePoint(pts[2]));
    CHECK(compose(f, q_inv).degree() == degree_drop(3, m1, m2, m3));
  }
}
