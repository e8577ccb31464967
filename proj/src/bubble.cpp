#include "cremona/bubble.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cremona/errors.hpp"

namespace cremona {

BubblePoint::BubblePoint(const Vec3& b, std::vector<Slope> t) : base(normalize_point(b)), tail(std::move(t)) {}

BubblePoint BubblePoint::parent() const {
  if (tail.empty()) throw std::logic_error("proper point has no parent");
  BubblePoint p = *this;
  p.tail.pop_back();
  return p;
}

BubblePoint BubblePoint::child(const Slope& s) const {
  BubblePoint p = *this;
  p.tail.push_back(s);
  return p;
}

bool BubblePoint::is_infinitely_near(const BubblePoint& q) const {
  if (q.tail.size() >= tail.size() || !same_point(base, q.base)) return false;
  return std::equal(q.tail.begin(), q.tail.end(), tail.begin());
}

std::string slope_to_string(const Slope& s) { return s ? s->to_string() : "inf"; }

bool slope_less(const Slope& a, const Slope& b) {
  if (!a || !b) return a.has_value() && !b.has_value();
  return scalar_less(*a, *b);
}

std::string BubblePoint::to_string() const {
  std::string s = point_to_string(base);
  if (tail.empty()) return s;
  s = "(" + s;
  for (const auto& t : tail) s += ", " + slope_to_string(t);
  return s + ")";
}

bool operator==(const BubblePoint& a, const BubblePoint& b) {
  return a.tail == b.tail && same_point(a.base, b.base);
}

LocalPoly proper_chart(const HomPoly& f, const Vec3& p) {
  LocalPoly X = LocalPoly::var(0), Y = LocalPoly::var(1), one(Scalar(1));
  std::array<LocalPoly, 3> im;
  if (!p[2].is_zero()) {
    im = {LocalPoly(p[0] / p[2]) + X, LocalPoly(p[1] / p[2]) + Y, one};
  } else if (!p[1].is_zero()) {
    im = {LocalPoly(p[0] / p[1]) + X, one, Y};
  } else {
    im = {one, X, Y};
  }
  return f.substitute<2>(im);
}

int order_at_origin(const LocalPoly& g) { return g.is_zero() ? 1 << 20 : g.low_degree(); }

LocalPoly blow_up(const LocalPoly& g, const Slope& s, int m) {
  LocalPoly u = LocalPoly::var(0), v = LocalPoly::var(1);
  std::array<LocalPoly, 2> im;
  if (s) im = {u, u * (v + LocalPoly(*s))};
  else im = {u * v, u};
  LocalPoly h = g.substitute<2>(im);
  if (m == 0) return h;
  LocalPoly r;
  for (const auto& [mono, c] : h.terms()) {
    if (mono[0] < m) throw std::logic_error("blow-up division by a too high power of the exceptional divisor");
    r.add_term({mono[0] - m, mono[1]}, c);
  }
  return r;
}

LocalPoly localize(const HomPoly& f, const BubblePoint& p) {
  LocalPoly g = proper_chart(f, p.base);
  for (const auto& s : p.tail) g = blow_up(g, s, order_at_origin(g));
  return g;
}

int multiplicity(const HomPoly& f, const BubblePoint& p) {
  if (f.is_zero()) throw InputError("multiplicity of the zero polynomial");
  return order_at_origin(localize(f, p));
}

bool passes_through(const HomPoly& f, const BubblePoint& p) { return multiplicity(f, p) >= 1; }

namespace {

// Orders of the ancestors to which p is proximate.
std::vector<int> proximate_orders(const BubblePoint& p) {
  std::vector<int> result;
  int other = -1;  // order of the point whose exceptional curve is Y = 0 in the current chart
  for (int k = 1; k <= p.order(); ++k) {
    const Slope& s = p.tail[k - 1];
    int extra = -1;
    if (!s) {
      extra = k >= 2 ? k - 2 : -1;
      other = extra;
    } else if (s->is_zero()) {
      extra = other;
    } else {
      other = -1;
    }
    if (k == p.order()) {
      result.push_back(k - 1);
      if (extra >= 0) result.push_back(extra);
    }
  }
  return result;
}

}  // namespace

bool proximate(const BubblePoint& p, const BubblePoint& q) {
  if (!p.is_infinitely_near(q)) return false;
  auto ords = proximate_orders(p);
  return std::find(ords.begin(), ords.end(), q.order()) != ords.end();
}

bool satellite(const BubblePoint& p, const BubblePoint& q) {
  return proximate(p, q) && q.order() + 1 != p.order();
}

namespace {

HomPoly linear_form(const Scalar& a, const Scalar& b, const Scalar& c) {
  return x_().scaled(a) + y_().scaled(b) + z_().scaled(c);
}

// Line through proper p with direction s in the chart of p.
HomPoly line_with_direction(const Vec3& p, const Slope& s) {
  // Chart coordinates X, Y as linear forms vanishing at p.
  HomPoly X, Y;
  if (!p[2].is_zero()) {
    X = x_() - z_().scaled(p[0] / p[2]);
    Y = y_() - z_().scaled(p[1] / p[2]);
  } else if (!p[1].is_zero()) {
    X = x_() - y_().scaled(p[0] / p[1]);
    Y = z_();
  } else {
    X = y_();
    Y = z_();
  }
  if (!s) return X;
  return Y - X.scaled(*s);
}

}  // namespace

HomPoly line_through(const BubblePoint& a, const BubblePoint& b) {
  if (a.is_proper() && b.is_proper()) {
    if (same_point(a.base, b.base)) throw InputError("line through a repeated point");
    Vec3 l = cross(a.base, b.base);
    return linear_form(l[0], l[1], l[2]).monic();
  }
  if (a.is_proper() && b.order() == 1 && same_point(a.base, b.base)) return line_with_direction(a.base, b.tail[0]).monic();
  if (b.is_proper() && a.order() == 1 && same_point(a.base, b.base)) return line_with_direction(b.base, a.tail[0]).monic();
  throw InputError("no line is determined by " + a.to_string() + " and " + b.to_string());
}

std::optional<std::array<int, 3>> collinear_triple(const std::vector<BubblePoint>& pts) {
  int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !pts[i].is_proper()) continue;
      bool pair_ok = (pts[j].is_proper() && j > i && !same_point(pts[i].base, pts[j].base)) ||
                     (pts[j].order() == 1 && same_point(pts[i].base, pts[j].base));
      if (!pair_ok) continue;
      HomPoly l = line_through(pts[i], pts[j]);
      std::vector<int> on;
      for (int k = 0; k < n; ++k)
        if (passes_through(l, pts[k])) on.push_back(k);
      if (on.size() >= 3) return std::array<int, 3>{on[0], on[1], on[2]};
    }
  return std::nullopt;
}

namespace {

std::vector<HomPoly> conic_monomials() {
  HomPoly x = x_(), y = y_(), z = z_();
  return {x * x, x * y, x * z, y * y, y * z, z * z};
}

Mat3 conic_matrix(const HomPoly& c) {
  auto m = [&](int i, int j) {
    HomPoly::Mono e{};
    e[i] += 1;
    e[j] += 1;
    Scalar v = c.coeff(e);
    return i == j ? v : v / Scalar(2);
  };
  Mat3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s[i][j] = m(i, j);
  return s;
}

// Strict transform of f along p assuming multiplicity one at every ancestor.
Scalar value_with_unit_multiplicity(const HomPoly& f, const BubblePoint& p) {
  LocalPoly g = proper_chart(f, p.base);
  for (const auto& s : p.tail) g = blow_up(g, s, 1);
  return g.constant_value();
}

std::string chain_lemma(std::vector<int> lengths) {
  std::sort(lengths.rbegin(), lengths.rend());
  static const std::map<std::vector<int>, std::string> names = {
      {{1, 1, 1, 1, 1}, "proper"}, {{2, 1, 1, 1}, "conic1"}, {{3, 1, 1}, "conic2"}, {{2, 2, 1}, "conic3"},
      {{3, 2}, "conic3b"},         {{4, 1}, "conic4"},       {{5}, "conic5"}};
  auto it = names.find(lengths);
  return it == names.end() ? "" : it->second;
}

}  // namespace

ConicResult conic_through(const std::vector<BubblePoint>& input) {
  if (input.size() != 5) throw InputError("a conic is determined by exactly five points");
  std::vector<BubblePoint> pts = input;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw InputError("repeated point " + pts[i].to_string());
  auto contains = [&](const BubblePoint& q) { return std::find(pts.begin(), pts.end(), q) != pts.end(); };
  std::vector<int> lengths;
  for (const auto& p : pts) {
    if (!p.is_proper() && !contains(p.parent()))
      throw InputError("point " + p.to_string() + " is given without its predecessor");
    if (p.order() >= 2 && proximate_orders(p).size() > 1)
      throw InputError("satellite point " + p.to_string() + " is not allowed");
    int children = 0;
    for (const auto& q : pts)
      if (!q.is_proper() && q.parent() == p) ++children;
    if (children > 1) throw InputError("two points in the first neighbourhood of " + p.to_string());
    if (p.is_proper()) {
      int len = 0;
      for (const auto& q : pts)
        if (same_point(q.base, p.base)) ++len;
      lengths.push_back(len);
    }
  }
  if (auto t = collinear_triple(pts))
    throw InputError("collinear bubble triple " + pts[(*t)[0]].to_string() + ", " + pts[(*t)[1]].to_string() +
                     ", " + pts[(*t)[2]].to_string());
  std::stable_sort(pts.begin(), pts.end(), [](const BubblePoint& a, const BubblePoint& b) { return a.order() < b.order(); });
  std::vector<HomPoly> basis = conic_monomials();
  for (const auto& p : pts) {
    std::vector<Scalar> row;
    for (const auto& c : basis) row.push_back(value_with_unit_multiplicity(c, p));
    auto ns = nullspace({row}, static_cast<int>(basis.size()));
    std::vector<HomPoly> next;
    for (const auto& v : ns) {
      HomPoly c;
      for (size_t j = 0; j < basis.size(); ++j) c += basis[j].scaled(v[j]);
      next.push_back(c);
    }
    basis = std::move(next);
  }
  if (basis.size() != 1) throw InputError("the five points do not determine a unique conic");
  HomPoly c = basis[0].monic();
  if (det3(conic_matrix(c)).is_zero()) throw InputError("the conic through the points is degenerate");
  return {c, chain_lemma(lengths)};
}

namespace {

// Sum of absolute values of the primitive integer coordinates.
Rational point_height(const Vec3& p) {
  mpz_class l = 1, g = 0;
  for (const auto& c : p) l = lcm(l, c.rational().get_den());
  for (const auto& c : p) g = gcd(g, mpz_class(c.rational() * l));
  Rational h = 0;
  for (const auto& c : p) h += abs(Rational(c.rational() * l / g));
  return h;
}

// Rational points of the conic other than the marks: small integer points and second
// intersections with lines through the first known point, lowest height first.
std::vector<Vec3> conic_candidates(const HomPoly& c, const std::vector<Vec3>& marks, size_t want) {
  Mat3 s = conic_matrix(c);
  bool rational = true;
  for (const auto& [m, v] : c.terms()) rational = rational && v.is_rational();
  for (const auto& q : marks)
    for (const auto& v : q) rational = rational && v.is_rational();
  std::vector<Vec3> found;
  auto add = [&](const Vec3& r) {
    for (const auto& q : marks)
      if (same_point(q, r)) return;
    for (const auto& q : found)
      if (same_point(q, r)) return;
    found.push_back(normalize_point(r));
  };
  for (int h = 1; h <= 2; ++h)
    for (int a = -h; a <= h; ++a)
      for (int b = -h; b <= h; ++b)
        for (int d = -h; d <= h; ++d) {
          if (std::max({std::abs(a), std::abs(b), std::abs(d)}) != h) continue;
          Vec3 v = {Scalar(a), Scalar(b), Scalar(d)};
          if (evaluate(c, v).is_zero()) add(v);
        }
  Vec3 p;
  if (!marks.empty()) p = marks[0];
  else if (!found.empty()) p = found[0];
  else throw UnsupportedError("no small rational point found on the conic " + poly_to_string(c));
  for (int h = 1; h <= 3 && found.size() < want + 4; ++h)
    for (int a = -h; a <= h; ++a)
      for (int b = -h; b <= h; ++b)
        for (int d = -h; d <= h; ++d) {
          if (std::abs(a) + std::abs(b) + std::abs(d) != h) continue;
          Vec3 w = {Scalar(a), Scalar(b), Scalar(d)};
          if (same_point(w, p)) continue;
          Scalar qw = dot(w, mul3(s, w)), bw = dot(p, mul3(s, w));
          if (qw.is_zero() || bw.is_zero()) continue;
          Scalar t = Scalar(-2) * bw / qw;
          add({p[0] + t * w[0], p[1] + t * w[1], p[2] + t * w[2]});
        }
  if (marks.empty()) found.erase(found.begin()), found.insert(found.begin(), p);
  if (rational)
    std::stable_sort(found.begin(), found.end(),
                     [](const Vec3& u, const Vec3& v) { return point_height(u) < point_height(v); });
  if (found.size() > want + 4) found.resize(want + 4);
  return found;
}

ProjAut conic_aut_from_points(const HomPoly& c1, const std::vector<Vec3>& a, const HomPoly& c2, const std::vector<Vec3>& b) {
  Mat3 s1 = conic_matrix(c1), s2 = conic_matrix(c2);
  Vec3 a4 = cross(mul3(s1, a[0]), mul3(s1, a[1]));
  Vec3 b4 = cross(mul3(s2, b[0]), mul3(s2, b[1]));
  return solve_4pt({a[0], a[1], a[2], a4}, {b[0], b[1], b[2], b4});
}

// Size of an automorphism for choosing the simplest one: sum of absolute values of the
// primitive integer matrix, then the number of negative entries.
std::pair<Rational, int> aut_size(const ProjAut& a) {
  mpz_class l = 1, g = 0;
  for (const auto& row : a.matrix())
    for (const auto& c : row) {
      if (!c.is_rational()) return {Rational(0), 0};
      l = lcm(l, c.rational().get_den());
    }
  for (const auto& row : a.matrix())
    for (const auto& c : row) g = gcd(g, mpz_class(c.rational() * l));
  Rational sum = 0;
  int neg = 0;
  for (const auto& row : a.matrix())
    for (const auto& c : row) {
      sum += abs(Rational(c.rational() * l / g));
      neg += sgn(c.rational()) < 0;
    }
  return {sum, neg};
}

}  // namespace

ProjAut conic_marked_aut(const HomPoly& c1, const std::vector<Vec3>& marks1, const HomPoly& c2,
                         const std::vector<Vec3>& marks2) {
  if (marks1.size() != marks2.size() || marks1.size() > 3)
    throw InputError("at most three matching marks are required");
  if (det3(conic_matrix(c1)).is_zero() || det3(conic_matrix(c2)).is_zero()) throw InputError("conic is reducible");
  for (const auto& m : marks1)
    if (!evaluate(c1, m).is_zero()) throw InputError("mark " + point_to_string(m) + " is not on the first conic");
  for (const auto& m : marks2)
    if (!evaluate(c2, m).is_zero()) throw InputError("mark " + point_to_string(m) + " is not on the second conic");
  size_t missing = 3 - marks1.size();
  std::vector<Vec3> a = marks1, b = marks2;
  if (missing > 0) {
    auto ca = conic_candidates(c1, marks1, missing);
    if (ca.size() < missing) throw UnsupportedError("not enough rational points on the conics");
    a.insert(a.end(), ca.begin(), ca.begin() + missing);
  }
  std::optional<ProjAut> best;
  std::pair<Rational, int> best_size;
  std::vector<Vec3> cand = missing > 0 ? conic_candidates(c2, marks2, missing) : std::vector<Vec3>{};
  if (cand.size() < missing) throw UnsupportedError("not enough rational points on the conics");
  std::vector<size_t> idx(missing);
  // All ordered selections of the missing points among the candidates on c2.
  std::function<void(size_t)> pick = [&](size_t k) {
    if (k == missing) {
      std::vector<Vec3> bb = b;
      for (size_t i : idx) bb.push_back(cand[i]);
      std::optional<ProjAut> found;
      try {
        found = conic_aut_from_points(c1, a, c2, bb);
      } catch (const InputError&) {
        return;
      }
      const ProjAut& t = *found;
      auto sz = aut_size(t);
      if (!best || sz < best_size || (sz == best_size && t.to_string() > best->to_string())) {
        best = t;
        best_size = sz;
      }
      return;
    }
    for (size_t i = 0; i < cand.size(); ++i) {
      if (std::find(idx.begin(), idx.begin() + k, i) != idx.begin() + k) continue;
      idx[k] = i;
      pick(k + 1);
    }
  };
  pick(0);
  if (!best) throw UnsupportedError("no automorphism between the marked conics found");
  ProjAut alpha = *best;
  HomPoly pulled = c2.substitute<3>(alpha.forms());
  if (pulled.monic() != c1.monic()) throw std::logic_error("conic automorphism check failed");
  return alpha;
}

}  // namespace cremona
