#include "cremona/resolve.hpp"

#include <algorithm>

#include "cremona/errors.hpp"
#include "cremona/roots.hpp"

namespace cremona {

int BasePointTree::sum_mult() const {
  int s = 0;
  for (const auto& e : entries) s += e.mult;
  return s;
}

int BasePointTree::sum_mult_squared() const {
  int s = 0;
  for (const auto& e : entries) s += e.mult * e.mult;
  return s;
}

bool BasePointTree::noether_holds() const {
  return sum_mult() == 3 * (degree - 1) && sum_mult_squared() == degree * degree - 1;
}

std::optional<int> BasePointTree::proximity_violation() const {
  for (size_t j = 0; j < entries.size(); ++j) {
    int load = 0;
    for (const auto& [a, b] : arrows)
      if (b == static_cast<int>(j)) load += entries[a].mult;
    if (load > entries[j].mult) return static_cast<int>(j);
  }
  return std::nullopt;
}

int BasePointTree::index_of(const BubblePoint& p) const {
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].point == p) return static_cast<int>(i);
  return -1;
}

namespace {

const Rational& rational_of(const Scalar& s) {
  if (!s.is_rational()) throw UnsupportedError("base points of maps with symbolic parameters are not resolved");
  return s.rational();
}

// Number of distinct roots over the algebraic closure minus the rational ones.
bool has_irrational_roots(const UPoly& g, size_t rational_count) {
  UPoly s = upoly_squarefree(g);
  return upoly_degree(s) > static_cast<int>(rational_count);
}

// f(x0, y, 1) as a polynomial in y.
UPoly restrict_vertical(const HomPoly& f, const Rational& x0) {
  UPoly r(f.degree() + 1, Rational(0));
  for (const auto& [m, c] : f.terms()) {
    Rational t = rational_of(c);
    for (int e = 0; e < m[0]; ++e) t *= x0;
    r[m[1]] += t;
  }
  upoly_trim(r);
  return r;
}

// Coefficients of f(x, y, 1) in y, each a polynomial in x.
std::vector<UPoly> y_coefficients(const HomPoly& f) {
  std::vector<UPoly> cs(f.degree_in(1) + 1, UPoly(f.degree() + 1, Rational(0)));
  for (const auto& [m, c] : f.terms()) cs[m[1]][m[0]] += rational_of(c);
  for (auto& c : cs) upoly_trim(c);
  return cs;
}

Rational det(std::vector<std::vector<Rational>> a) {
  size_t n = a.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      Rational k = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= k * a[c][j];
    }
  }
  return d;
}

// Sylvester resultant of two polynomials with the given formal degrees.
Rational sylvester(const UPoly& a, int na, const UPoly& b, int nb) {
  int n = na + nb;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  auto at = [](const UPoly& p, int k) { return k < static_cast<int>(p.size()) ? p[k] : Rational(0); };
  for (int r = 0; r < nb; ++r)
    for (int k = 0; k <= na; ++k) m[r][r + na - k] = at(a, k);
  for (int r = 0; r < na; ++r)
    for (int k = 0; k <= nb; ++k) m[nb + r][r + nb - k] = at(b, k);
  return det(m);
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  UPoly r{dd[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    UPoly next(r.size() + 1, Rational(0));
    for (size_t j = 0; j < r.size(); ++j) {
      next[j + 1] += r[j];
      next[j] -= r[j] * xs[i];
    }
    next[0] += dd[i];
    r = std::move(next);
  }
  upoly_trim(r);
  return r;
}

// Res_y(A(x, y, 1), B(x, y, 1)) as a polynomial in x, by evaluation and interpolation.
UPoly resultant_in_y(const HomPoly& a, const HomPoly& b) {
  auto ca = y_coefficients(a), cb = y_coefficients(b);
  int na = static_cast<int>(ca.size()) - 1, nb = static_cast<int>(cb.size()) - 1;
  int bound = a.degree() * b.degree();
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= bound; ++i) {
    Rational x0 = i;
    UPoly ea(na + 1), eb(nb + 1);
    for (int k = 0; k <= na; ++k) ea[k] = upoly_eval(ca[k], x0);
    for (int k = 0; k <= nb; ++k) eb[k] = upoly_eval(cb[k], x0);
    xs.push_back(x0);
    ys.push_back(sylvester(ea, na, eb, nb));
  }
  return interpolate(xs, ys);
}

UPoly gcd_all(const std::vector<UPoly>& ps) {
  UPoly g;
  for (const auto& p : ps) g = upoly_gcd(g, p);
  return g;
}

std::vector<HomPoly> nonzero_components(const CremonaMap& f) {
  std::vector<HomPoly> out;
  for (const auto& c : f.components())
    if (!c.is_zero()) out.push_back(c);
  return out;
}

bool independent(const std::vector<HomPoly>& ps) {
  std::vector<HomPoly::Mono> monos;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms())
      if (std::find(monos.begin(), monos.end(), m) == monos.end()) monos.push_back(m);
  Matrix rows;
  for (const auto& p : ps) {
    std::vector<Scalar> r;
    for (const auto& m : monos) r.push_back(p.coeff(m));
    rows.push_back(r);
  }
  return matrix_rank(rows, static_cast<int>(monos.size())) == static_cast<int>(ps.size());
}

// Members A, B, C of the net with A coprime to B and C; C is outside the pencil of A and B
// whenever the components are independent.
std::array<HomPoly, 3> coprime_members(const std::vector<HomPoly>& fs) {
  static const int combos[][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
                                  {1, 2, 3}, {3, 1, 2}, {2, 3, 1}, {1, -1, 2}, {5, -2, 7}, {-3, 4, 1}};
  std::vector<HomPoly> members;
  for (const auto& c : combos) {
    HomPoly m;
    for (size_t i = 0; i < fs.size() && i < 3; ++i) m += fs[i].scaled(Scalar(c[i]));
    if (!m.is_zero()) members.push_back(m);
  }
  auto coprime = [](const HomPoly& a, const HomPoly& b) { return poly_gcd(a, b).is_constant(); };
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j) {
      if (!coprime(members[i], members[j])) continue;
      for (size_t k = 0; k < members.size(); ++k)
        if (k != i && k != j && coprime(members[i], members[k]) && independent({members[i], members[j], members[k]}))
          return {members[i], members[j], members[k]};
      return {members[i], members[j], members[j]};
    }
  throw NotBirationalError("the net has a fixed component");
}

struct ProperSearch {
  std::vector<Vec3> points;
  bool irrational = false;
  UPoly residual;  // x coordinates of affine candidates not accounted for by rational points
};

ProperSearch search_proper(const CremonaMap& f) {
  ProperSearch out;
  auto fs = nonzero_components(f);
  for (const auto& c : fs)
    for (const auto& [m, v] : c.terms()) rational_of(v);
  // Points on the line z = 0.
  bool e1 = true;
  for (const auto& c : fs) e1 = e1 && evaluate(c, {Scalar(1), Scalar(0), Scalar(0)}).is_zero();
  if (e1) out.points.push_back({Scalar(1), Scalar(0), Scalar(0)});
  std::vector<UPoly> at_infinity;
  for (const auto& c : fs) {
    UPoly u(c.degree() + 1, Rational(0));
    for (const auto& [m, v] : c.terms())
      if (m[2] == 0) u[m[0]] += v.rational();
    upoly_trim(u);
    if (!u.empty()) at_infinity.push_back(u);
  }
  if (!at_infinity.empty()) {
    UPoly g = gcd_all(at_infinity);
    auto roots = rational_roots(g);
    if (has_irrational_roots(g, roots.size())) out.irrational = true;
    for (const auto& r : roots) out.points.push_back({Scalar(r), Scalar(1), Scalar(0)});
  }
  // Affine points.
  auto [a, b, c3] = coprime_members(fs);
  UPoly res = resultant_in_y(a, b);
  if (res.empty()) throw std::logic_error("resultant of coprime forms vanished");
  UPoly residual = upoly_squarefree(upoly_gcd(res, resultant_in_y(a, c3)));
  auto residual_roots = rational_roots(residual);
  for (const auto& x0 : rational_roots(res)) {
    std::vector<UPoly> vs;
    for (const auto& c : fs) {
      UPoly v = restrict_vertical(c, x0);
      if (!v.empty()) vs.push_back(v);
    }
    if (vs.empty()) throw NotBirationalError("the components share a line");
    UPoly g = gcd_all(vs);
    auto roots = rational_roots(g);
    if (has_irrational_roots(g, roots.size())) out.irrational = true;
    for (const auto& y0 : roots) out.points.push_back({Scalar(x0), Scalar(y0), Scalar(1)});
    if (std::find(residual_roots.begin(), residual_roots.end(), x0) == residual_roots.end()) continue;
    // Remove the factor x - x0.
    UPoly q(residual.size() > 1 ? residual.size() - 1 : 0, Rational(0));
    Rational carry = 0;
    for (size_t i = residual.size(); i-- > 1;) {
      carry = residual[i] + carry * x0;
      q[i - 1] = carry;
    }
    residual = q;
  }
  out.residual = residual;
  return out;
}

struct NetNode {
  BubblePoint point;
  std::vector<LocalPoly> g;
};

int net_order(const std::vector<LocalPoly>& g) {
  int m = 1 << 20;
  for (const auto& h : g) m = std::min(m, order_at_origin(h));
  return m;
}

// Directions at the origin shared by the tangent cones of the minimal-order generators.
std::vector<Slope> base_directions(const std::vector<LocalPoly>& g, int m, const BubblePoint& at) {
  std::vector<UPoly> cones;
  bool infinite = true;
  for (const auto& h : g) {
    if (order_at_origin(h) != m) continue;
    UPoly u(m + 1, Rational(0));
    LocalPoly cone = h.homogeneous_part(m);
    for (const auto& [mono, c] : cone.terms()) u[mono[1]] += rational_of(c);
    infinite = infinite && sgn(u[m]) == 0;
    upoly_trim(u);
    cones.push_back(u);
  }
  UPoly common = gcd_all(cones);
  auto roots = rational_roots(common);
  if (has_irrational_roots(common, roots.size()))
    throw UnsupportedError("irrational base points in the first neighbourhood of " + at.to_string());
  std::vector<Slope> out;
  for (const auto& r : roots) out.emplace_back(Scalar(r));
  if (infinite) out.emplace_back(std::nullopt);
  return out;
}

void explore(const NetNode& node, std::vector<BasePoint>& out) {
  int m = net_order(node.g);
  if (m == 0) return;
  if (out.size() > 200) throw std::logic_error("base point resolution does not terminate");
  out.push_back({node.point, m});
  for (const auto& s : base_directions(node.g, m, node.point)) {
    NetNode child{node.point.child(s), {}};
    for (const auto& h : node.g) child.g.push_back(blow_up(h, s, m));
    explore(child, out);
  }
}

}  // namespace

std::vector<Vec3> proper_base_points(const CremonaMap& f) {
  auto s = search_proper(f);
  if (s.irrational) throw UnsupportedError("the map has irrational proper base points");
  return s.points;
}

int net_multiplicity(const CremonaMap& f, const BubblePoint& p) {
  if (f.degree() <= 1) return 0;
  std::vector<LocalPoly> g;
  for (const auto& c : nonzero_components(f)) g.push_back(proper_chart(c, p.base));
  for (const auto& s : p.tail) {
    int m = net_order(g);
    if (m == 0) return 0;
    for (auto& h : g) h = blow_up(h, s, m);
  }
  return net_order(g);
}

BasePointTree resolve_base_points(const CremonaMap& f) {
  if (!f.symbols().empty()) throw UnsupportedError("base points of maps with symbolic parameters are not resolved; bind the parameters");
  BasePointTree t;
  t.degree = f.degree();
  if (t.degree <= 1) return t;
  auto search = search_proper(f);
  auto fs = nonzero_components(f);
  struct Root {
    std::vector<BasePoint> chain;
  };
  std::vector<Root> roots;
  for (const auto& p : search.points) {
    NetNode node{BubblePoint(p), {}};
    for (const auto& c : fs) node.g.push_back(proper_chart(c, node.point.base));
    Root r;
    explore(node, r.chain);
    if (!r.chain.empty()) roots.push_back(std::move(r));
  }
  std::stable_sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.chain[0].mult != b.chain[0].mult) return a.chain[0].mult > b.chain[0].mult;
    return a.chain[0].point.to_string() < b.chain[0].point.to_string();
  });
  for (const auto& r : roots) t.entries.insert(t.entries.end(), r.chain.begin(), r.chain.end());
  int n = static_cast<int>(t.entries.size());
  t.satellite.assign(n, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!proximate(t.entries[i].point, t.entries[j].point)) continue;
      t.arrows.emplace_back(i, j);
      if (satellite(t.entries[i].point, t.entries[j].point)) t.satellite[i] = true;
    }
  if (!t.noether_holds()) {
    if (search.irrational || upoly_degree(search.residual) > 0)
      throw UnsupportedError("the base points are not all rational (Noether equations fail over Q: sum m = " +
                             std::to_string(t.sum_mult()) + ", sum m^2 = " + std::to_string(t.sum_mult_squared()) + ")");
    throw NotBirationalError("Noether equations fail: sum m = " + std::to_string(t.sum_mult()) + " (expected " +
                             std::to_string(3 * (t.degree - 1)) + "), sum m^2 = " + std::to_string(t.sum_mult_squared()) +
                             " (expected " + std::to_string(t.degree * t.degree - 1) + ")");
  }
  if (auto v = t.proximity_violation())
    throw std::logic_error("proximity inequality fails at " + t.entries[*v].point.to_string());
  if (t.degree == 3) t.line = find_unexpected_line(t);
  return t;
}

std::optional<UnexpectedLine> find_unexpected_line(const BasePointTree& t) {
  std::vector<int> simple;
  for (size_t i = 0; i < t.entries.size(); ++i)
    if (t.entries[i].mult == 1) simple.push_back(static_cast<int>(i));
  for (int i : simple)
    for (int j : simple) {
      const auto& p = t.entries[i].point;
      const auto& q = t.entries[j].point;
      if (!p.is_proper()) continue;
      bool determined = (q.is_proper() && j > i && !same_point(p.base, q.base)) ||
                        (q.order() == 1 && same_point(p.base, q.base));
      if (!determined) continue;
      HomPoly l = line_through(p, q);
      std::vector<int> on;
      for (int k : simple)
        if (passes_through(l, t.entries[k].point)) on.push_back(k);
      if (on.size() == 3) return UnexpectedLine{l, {on[0], on[1], on[2]}};
    }
  return std::nullopt;
}

nlohmann::json tree_to_json(const BasePointTree& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (size_t i = 0; i < t.entries.size(); ++i) {
    const auto& e = t.entries[i];
    entries.push_back({{"index", i},
                       {"point", e.point.to_string()},
                       {"mult", e.mult},
                       {"order", e.point.order()},
                       {"satellite", static_cast<bool>(t.satellite[i])}});
  }
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& [a, b] : t.arrows) arrows.push_back({a, b});
  nlohmann::json line = nullptr;
  if (t.line) line = {{"equation", poly_to_string(t.line->line)}, {"members", t.line->members}};
  return {{"degree", t.degree},
          {"entries", entries},
          {"arrows", arrows},
          {"line", line},
          {"noether", {{"sum_mult", t.sum_mult()}, {"sum_mult_squared", t.sum_mult_squared()}, {"holds", t.noether_holds()}}}};
}

}  // namespace cremona
