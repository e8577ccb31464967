#include "cremona/lengths.hpp"

#include <algorithm>

#include "cremona/catalog.hpp"
#include "cremona/errors.hpp"

namespace cremona {

int height_at(const CremonaMap& f, const BubblePoint& p) {
  return net_multiplicity(f, p) > 0 ? p.order() + 1 : 0;
}

HeightReport heights(const CremonaMap& f) {
  HeightReport r;
  r.degree = f.degree();
  BasePointTree t = resolve_base_points(f);
  for (const auto& e : t.entries) {
    HeightEntry h{e.point, e.mult, e.point.order() + 1, std::nullopt};
    if (e.point.is_proper()) {
      int load = 1;
      for (const auto& o : t.entries)
        if (o.point.is_infinitely_near(e.point)) ++load;
      h.load = load;
    }
    r.max_height = std::max(r.max_height, h.height);
    r.entries.push_back(std::move(h));
  }
  return r;
}

bool is_de_jonquieres(const BasePointTree& t) {
  if (t.degree < 2) return false;
  return std::any_of(t.entries.begin(), t.entries.end(), [&](const BasePoint& e) { return e.mult == t.degree - 1; });
}

int oq_lower_bound(const CremonaMap& f) {
  int d = f.degree();
  if (d <= 1) return 0;
  BasePointTree t = resolve_base_points(f);
  int bound = 0;
  for (const auto& e : t.entries) bound = std::max(bound, e.point.order() + 1);
  if (d >= 3) bound = std::max(bound, 2);
  if (d >= 5) bound = std::max(bound, 3);
  if (d <= 5 && is_de_jonquieres(t)) bound = std::max(bound, d - 1);
  return bound;
}

namespace {

std::string quadratic_kind(int proper) {
  switch (proper) {
    case 3: return "ordinary";
    case 2: return "second";
    case 1: return "third";
    default: return "degenerate";
  }
}

}  // namespace

DecompositionReport verify_decomposition(const CremonaMap& target, const Decomposition& factors) {
  DecompositionReport r;
  CremonaMap partial, inverse;  // inner part and its inverse
  for (size_t k = factors.size(); k-- > 0;) {
    const Factor& f = factors[k];
    if (f.kind == Factor::Kind::Aut) {
      partial = compose(f.as_map(), partial);
      inverse = compose(inverse, CremonaMap::from_aut(f.aut.inverse()));
      continue;
    }
    CremonaMap q = f.as_map();
    BasePointTree qt = resolve_base_points(q);
    int proper = 0;
    std::vector<int> m;
    for (const auto& e : qt.entries) {
      if (e.point.is_proper()) ++proper;
      m.push_back(net_multiplicity(inverse, e.point));
    }
    int d = partial.degree();
    partial = compose(q, partial);
    inverse = compose(inverse, q);  // sigma, rho and tau are involutions
    if (m.size() == 3) {
      int predicted = degree_drop(d, m[0], m[1], m[2]);
      if (predicted != partial.degree()) {
        r.degree_drop_consistent = false;
        r.discrepancies.push_back("factor " + std::to_string(k) + ": degree " + std::to_string(partial.degree()) +
                                  ", predicted " + std::to_string(predicted));
      }
    } else {
      r.degree_drop_consistent = false;
      r.discrepancies.push_back("factor " + std::to_string(k) + ": quadratic factor without three base points");
    }
    r.partial_degrees.push_back(partial.degree());
    r.quadratic_kinds.push_back(quadratic_kind(proper));
    ++r.quadratic;
    if (f.kind == Factor::Kind::Sigma) ++r.sigma;
    if (f.kind == Factor::Kind::Rho) ++r.rho;
    if (f.kind == Factor::Kind::Tau) ++r.tau;
  }
  r.composed = partial;
  r.equal = partial == target;
  if (!r.equal) r.discrepancies.push_back("composition " + partial.to_string() + " differs from " + target.to_string());
  return r;
}

HomPoly InvolutoryQuadratic::side(int i) const {
  Vec3 l = cross(points[(i + 1) % 3], points[(i + 2) % 3]);
  return (x_().scaled(l[0]) + y_().scaled(l[1]) + z_().scaled(l[2])).monic();
}

InvolutoryQuadratic involutory_quadratic(const std::array<Vec3, 3>& points, const std::array<Scalar, 3>& scales) {
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = scales[c] * points[c][r];
  if (det3(m).is_zero()) throw InputError("the base points of an ordinary quadratic map must not be collinear");
  InvolutoryQuadratic q;
  for (int i = 0; i < 3; ++i) q.points[i] = normalize_point(points[i]);
  q.frame = ProjAut(m);
  q.map = apply_aut(q.frame, sigma_map(), q.frame.inverse());
  return q;
}

namespace {

// Direction at p of a curve smooth there, read from its linear part.
Slope tangent_slope(const LocalPoly& g) {
  Scalar a = g.coeff({1, 0}), b = g.coeff({0, 1});
  if (a.is_zero() && b.is_zero()) throw std::logic_error("tangent of a singular germ");
  if (b.is_zero()) return std::nullopt;
  return -a / b;
}

Slope line_slope_at(const HomPoly& line, const Vec3& p) { return tangent_slope(localize(line, BubblePoint(p))); }

Vec3 image(const CremonaMap& f, const Vec3& p) {
  Vec3 v{evaluate(f[0], p), evaluate(f[1], p), evaluate(f[2], p)};
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) throw std::logic_error("image of a base point");
  return normalize_point(v);
}

bool on_triangle(const InvolutoryQuadratic& q, const Vec3& p) {
  for (int i = 0; i < 3; ++i)
    if (evaluate(q.side(i), p).is_zero()) return true;
  return false;
}

int vertex_index(const InvolutoryQuadratic& q, const Vec3& p) {
  for (int i = 0; i < 3; ++i)
    if (same_point(q.points[i], p)) return i;
  return -1;
}

// Linear forms (L0, LX, LY) with X = LX / L0 and Y = LY / L0 the chart coordinates at p.
std::array<HomPoly, 3> chart_forms(const Vec3& p) {
  HomPoly x = x_(), y = y_(), z = z_();
  if (!p[2].is_zero()) return {z, x - z.scaled(p[0] / p[2]), y - z.scaled(p[1] / p[2])};
  if (!p[1].is_zero()) return {y, x - y.scaled(p[0] / p[1]), z};
  return {x, y, z};
}

// A curve smooth at the proper point of p and passing through p.
HomPoly curve_through(const BubblePoint& p) {
  for (size_t k = 1; k < p.tail.size(); ++k)
    if (!p.tail[k]) throw UnsupportedError("transport of satellite points is not implemented");
  LocalPoly g;
  int n = p.order();
  if (p.tail[0]) {
    g = LocalPoly::var(1);
    for (int k = 1; k <= n; ++k) g -= LocalPoly::var(0, k).scaled(*p.tail[k - 1]);
  } else {
    g = LocalPoly::var(0);
    for (int k = 2; k <= n; ++k) g -= LocalPoly::var(1, k).scaled(*p.tail[k - 1]);
  }
  auto [l0, lx, ly] = chart_forms(p.base);
  int deg = g.degree();
  HomPoly c;
  for (const auto& [mono, coef] : g.terms())
    c += (lx.pow(mono[0]) * ly.pow(mono[1]) * l0.pow(deg - mono[0] - mono[1])).scaled(coef);
  if (multiplicity(c, BubblePoint(p.base)) != 1 || !passes_through(c, p))
    throw std::logic_error("auxiliary curve misses " + p.to_string());
  return c;
}

BubblePoint transport_general(const BubblePoint& p, const InvolutoryQuadratic& q) {
  if (on_triangle(q, p.base))
    throw UnsupportedError("transport of points infinitely near the triangle is not implemented for " + p.to_string());
  HomPoly c = curve_through(p);
  HomPoly img = poly_substitute(c, q.map.components());
  for (int i = 0; i < 3; ++i) {
    HomPoly s = q.side(i);
    while (auto d = img.divide(s)) img = *d;
  }
  BubblePoint out(image(q.map, p.base));
  for (int k = 0; k < p.order(); ++k) {
    LocalPoly g = localize(img, out);
    if (order_at_origin(g) != 1) throw std::logic_error("strict transform is singular at " + out.to_string());
    out = out.child(tangent_slope(g));
  }
  return out;
}

Vec3 coefficients(const HomPoly& line) { return {line.coeff({1, 0, 0}), line.coeff({0, 1, 0}), line.coeff({0, 0, 1})}; }

// Image under rho of a line through the vertex p_i other than a side: again a line through p_i.
HomPoly image_line(const InvolutoryQuadratic& q, int i, const HomPoly& line) {
  Vec3 w0 = cross(coefficients(line), coefficients(q.side(i)));
  for (int t = 1; t <= 4; ++t) {
    Vec3 r;
    for (int c = 0; c < 3; ++c) r[c] = q.points[i][c] + Scalar(t) * w0[c];
    if (on_triangle(q, r)) continue;
    Vec3 m = cross(q.points[i], image(q.map, r));
    return (x_().scaled(m[0]) + y_().scaled(m[1]) + z_().scaled(m[2])).monic();
  }
  throw std::logic_error("no auxiliary point on " + poly_to_string(line));
}

}  // namespace

BubblePoint transport_point(const BubblePoint& p, const InvolutoryQuadratic& q) {
  int i = vertex_index(q, p.base);
  if (p.is_proper()) {
    if (i >= 0) return p;
    for (int s = 0; s < 3; ++s) {
      if (!evaluate(q.side(s), p.base).is_zero()) continue;
      HomPoly m = image_line(q, s, line_through(BubblePoint(q.points[s]), p));
      return BubblePoint(q.points[s]).child(line_slope_at(m, q.points[s]));
    }
    return BubblePoint(image(q.map, p.base));
  }
  if (i < 0) return transport_general(p, q);
  if (p.order() > 1) throw UnsupportedError("transport of points infinitely near a base point at order " +
                                            std::to_string(p.order()) + " is not implemented");
  for (int j = 0; j < 3; ++j) {
    if (j == i || !passes_through(q.side(j), p)) continue;
    return BubblePoint(q.points[j]).child(line_slope_at(q.side(i), q.points[j]));
  }
  Vec3 m = coefficients(image_line(q, i, line_through(BubblePoint(q.points[i]), p)));
  return BubblePoint(cross(m, coefficients(q.side(i))));
}

const std::vector<int>& height_sharp_types() {
  static const std::vector<int> types{2, 7, 9, 10, 11, 12, 13, 15, 16, 18, 19, 21, 23, 25, 26, 27, 29, 30, 31};
  return types;
}

LengthFacts length_facts(int type) {
  const TypeRecord& rec = type_record(type);
  Bindings b = rec.reference_bindings();
  CremonaMap f = rec.map(b);
  LengthFacts out;
  out.type = type;
  out.q = rec.q;
  out.oq = rec.oq;
  out.max_height = heights(f).max_height;
  out.lower_bound = oq_lower_bound(f);
  const auto& sharp = height_sharp_types();
  out.height_sharp = std::find(sharp.begin(), sharp.end(), type) != sharp.end();
  out.ordinary_factors = count_quadratic(rec.ordinary_decomposition(b), Factor::Kind::Sigma);
  if (auto qd = rec.quadratic_decomposition(b)) {
    out.quadratic_factors = count_quadratic(*qd, Factor::Kind::Sigma) + count_quadratic(*qd, Factor::Kind::Rho) +
                            count_quadratic(*qd, Factor::Kind::Tau);
    out.upper_source = "quadratic decomposition";
  } else {
    out.quadratic_factors = out.ordinary_factors;
    out.upper_source = "ordinary decomposition";
  }
  return out;
}

nlohmann::json heights_to_json(const HeightReport& r) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j{{"point", e.point.to_string()}, {"mult", e.mult}, {"height", e.height}};
    if (e.load) j["load"] = *e.load;
    pts.push_back(j);
  }
  return {{"degree", r.degree}, {"max_height", r.max_height}, {"base_points", pts}};
}

nlohmann::json decomposition_to_json(const DecompositionReport& r) {
  return {{"equal", r.equal},
          {"composed", r.composed.to_string()},
          {"partial_degrees", r.partial_degrees},
          {"sigma", r.sigma},
          {"rho", r.rho},
          {"tau", r.tau},
          {"quadratic", r.quadratic},
          {"quadratic_kinds", r.quadratic_kinds},
          {"degree_drop_consistent", r.degree_drop_consistent},
          {"discrepancies", r.discrepancies}};
}

nlohmann::json length_facts_to_json(const LengthFacts& f) {
  return {{"type", f.type},
          {"q", f.q},
          {"oq", f.oq},
          {"max_height", f.max_height},
          {"oq_lower_bound", f.lower_bound},
          {"height_sharp", f.height_sharp},
          {"ordinary_factors", f.ordinary_factors},
          {"quadratic_factors", f.quadratic_factors},
          {"upper_bound_source", f.upper_source}};
}

}  // namespace cremona
