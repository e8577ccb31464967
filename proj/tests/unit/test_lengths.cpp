#include <random>

#include "cremona/catalog.hpp"
#include "cremona/errors.hpp"
#include "cremona/lengths.hpp"
#include "cremona/map_language.hpp"
#include "cremona/tables.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

BubblePoint P(const std::string& s) { return parse_point(s); }

}  // namespace

TEST_CASE("height examples") {
  CHECK(heights(type_record(1).reference_map()).max_height == 5);
  CHECK(heights(type_record(8).reference_map()).max_height == 4);
  HeightReport s = heights(sigma_map());
  CHECK(s.max_height == 1);
  for (const auto& e : s.entries) {
    CHECK(e.height == 1);
    CHECK(e.load == 1);
  }
  CremonaMap f1 = type_record(1).reference_map();
  CHECK(height_at(f1, P("[1:0:0]")) == 1);
  CHECK(height_at(f1, P("([1:0:0], 0, inf, -1, 0)")) == 5);
  CHECK(height_at(f1, P("[1:2:3]")) == 0);
  CHECK(height_at(f1, P("([1:0:0], 1)")) == 0);
}

TEST_CASE("loads of simple proper base points") {
  for (const auto& t : catalog()) {
    HeightReport r = heights(t.reference_map());
    for (const auto& e : r.entries) {
      CHECK(e.load.has_value() == e.point.is_proper());
      if (!e.load || e.mult != 1) continue;
      int deepest = 0;
      for (const auto& o : r.entries)
        if (o.point.is_infinitely_near(e.point)) deepest = std::max(deepest, o.height);
      CHECK(*e.load == std::max(deepest, 1));
    }
  }
}

TEST_CASE("oq lower bound examples") {
  CHECK(oq_lower_bound(type_record(1).reference_map()) == 5);
  CHECK(oq_lower_bound(type_record(21).reference_map()) == 2);
  CHECK(oq_lower_bound(tau_map()) == 3);
  CHECK(oq_lower_bound(sigma_map()) == 1);
  CHECK(is_de_jonquieres(resolve_base_points(type_record(4).reference_map())));
}

TEST_CASE("length facts") {
  LengthFacts f1 = length_facts(1);
  CHECK(f1.q == 3);
  CHECK(f1.oq == 6);
  CHECK(f1.lower_bound == 5);
  CHECK(f1.quadratic_factors == 3);
  LengthFacts f17 = length_facts(17);
  CHECK(f17.q == 2);
  CHECK(f17.oq == 4);
  CHECK(length_facts(31).oq == 2);
  for (int type = 1; type <= 31; ++type) {
    LengthFacts f = length_facts(type);
    CHECK(f.lower_bound <= f.oq);
    CHECK((f.lower_bound == f.oq) == f.height_sharp);
    CHECK(f.ordinary_factors == f.oq);
    CHECK(f.quadratic_factors == f.q);
  }
  CHECK(length_facts(8).lower_bound == 4);
  CHECK(length_facts(8).oq == 5);
}

TEST_CASE("decomposition verification examples") {
  const TypeRecord& t21 = type_record(21);
  DecompositionReport r21 = verify_decomposition(t21.reference_map(), t21.ordinary_decomposition(t21.reference_bindings()));
  CHECK(r21.equal);
  CHECK(r21.sigma == 2);
  for (const auto& nd : classical_decompositions()) {
    DecompositionReport r = verify_decomposition(parse_map(nd.target), parse_decomposition(nd.factors));
    CHECK(r.equal);
    CHECK(r.degree_drop_consistent);
    if (nd.name == "tau") CHECK(r.sigma == 4);
    if (nd.name == "type 7 (corrected)") {
      CHECK(r.rho == 2);
      CHECK(r.quadratic_kinds == std::vector<std::string>{"second", "second"});
    }
  }
  DecompositionReport bad = verify_decomposition(sigma_map(), parse_decomposition("rho"));
  CHECK(!bad.equal);
  CHECK(!bad.discrepancies.empty());
}

TEST_CASE("reference tables verify") {
  for (int table = 0; table <= 4; ++table)
    for (const auto& row : verify_table(table, 2)) {
      INFO("table ", table, " row ", row.row, " ", row.detail.dump());
      CHECK(row.pass);
    }
}

TEST_CASE("transport examples") {
  InvolutoryQuadratic q = involutory_quadratic({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}});
  CHECK(q.map == sigma_map());
  CHECK(transport_point(P("[1:0:0]"), q) == P("[1:0:0]"));
  CHECK(transport_point(P("[1:2:3]"), q) == P("[6:3:2]"));
  // [0:1:1] lies on the side x = 0 opposite [1:0:0]; the line y = z through [1:0:0] is fixed by sigma.
  CHECK(transport_point(P("[0:1:1]"), q) == P("[1:0:0]").child(Scalar(1)));
  // Direction of the side z = 0 at [1:0:0] goes to the direction of the side x = 0 at [0:0:1].
  BubblePoint along_side = transport_point(P("([1:0:0], 0)"), q);
  CHECK(along_side.base == Vec3{0, 0, 1});
  CHECK(passes_through(x_(), along_side));
  // The direction of z = 2y at [1:0:0] goes to the point of the side x = 0 on the image line y = 2z.
  CHECK(transport_point(P("([1:0:0], 2)"), q) == P("[0:2:1]"));
  CHECK(transport_point(transport_point(P("([1:0:0], 2)"), q), q) == P("([1:0:0], 2)"));
  CHECK_THROWS_AS(transport_point(P("([1:0:0], 2, 1)"), q), UnsupportedError);
  CHECK_THROWS_AS(involutory_quadratic({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{1, 1, 0}}), InputError);
}

TEST_CASE("transport is an involution on supported points") {
  InvolutoryQuadratic q = involutory_quadratic({Vec3{1, 0, 1}, Vec3{0, 1, 1}, Vec3{1, 2, 1}}, {Scalar(2), Scalar(-1), Scalar(3)});
  CHECK(compose(q.map, q.map).is_identity());
  for (auto s : {"[3:5:1]", "[2:0:1]", "([3:5:1], 2)", "([3:5:1], inf, 4)", "([1:0:1], 7)", "([3:-1:1], 1/2, -3)"}) {
    BubblePoint p = P(s);
    CHECK(transport_point(transport_point(p, q), q) == p);
  }
}

TEST_CASE("transport matches the multiplicities of phi o rho") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> d(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const TypeRecord& t = type_record(1 + trial % 31);
    CremonaMap f = t.reference_map();
    BasePointTree tree = resolve_base_points(f);
    std::array<Vec3, 3> pts;
    int k = 0;
    for (const auto& e : tree.entries)
      if (e.point.is_proper() && k < trial % 4) pts[k++] = e.point.base;
    for (; k < 3; ++k) pts[k] = {Scalar(d(rng)), Scalar(d(rng)), Scalar(1)};
    InvolutoryQuadratic q;
    try {
      q = involutory_quadratic(pts, {Scalar(1), Scalar(d(rng) == 0 ? 2 : 1), Scalar(3)});
    } catch (const InputError&) {
      continue;
    }
    CremonaMap g = compose(f, q.map);
    int eps = -3;
    for (const auto& p : q.points) eps += net_multiplicity(f, BubblePoint(p));
    CHECK(g.degree() == 3 - eps);
    for (const auto& e : tree.entries) {
      BubblePoint pb;
      try {
        pb = transport_point(e.point, q);
      } catch (const UnsupportedError&) {
        continue;
      }
      bool vertex = false;
      for (const auto& p : q.points) vertex = vertex || e.point == BubblePoint(p);
      if (!vertex) CHECK(net_multiplicity(g, pb) == e.mult);
      int dh = height_at(f, e.point) - height_at(g, pb);
      CHECK(dh >= -1);
      CHECK(dh <= 1);
      ++checked;
    }
  }
  CHECK(checked >= 50);
}
