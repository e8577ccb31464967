#include "cremona/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cremona/errors.hpp"
#include "cremona/proximity.hpp"
#include "cremona/roots.hpp"

namespace cremona {

namespace {

// ---------------------------------------------------------------------------
// Normalization recipes, one per type.

using AutOfU = std::function<Mat3(const Scalar&)>;

struct Step {
  enum class Kind { Correct, Param } kind;
  int k;             // catalog label of the residual point
  AutOfU aut;        // Correct: maps p_k to the residual point (p_k with last coordinate u)
  std::vector<Scalar> excluded;  // values of u ruled out by the proof
  // The closed form's u as a function of the residual coordinate in our charts.
  std::function<Scalar(const Scalar&)> read;
};

struct Recipe {
  bool conic = false;
  std::vector<int> fixed;  // frame labels, or the proper marks on the conic
  std::vector<Step> steps;
};

Mat3 mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  Mat3 m;
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (const auto& v : r) m[i][j++] = v;
    ++i;
  }
  return m;
}

Scalar same(const Scalar& u) { return u; }
Scalar reciprocal(const Scalar& u) { return Scalar(1) / u; }
Scalar negated(const Scalar& u) { return -u; }

Step correct(int k, AutOfU a, Scalar (*read)(const Scalar&) = same) {
  return {Step::Kind::Correct, k, std::move(a), {Scalar(0)}, read};
}
Step param(int k, std::vector<Scalar> excluded) { return {Step::Kind::Param, k, nullptr, std::move(excluded), same}; }

Recipe frame(std::vector<int> fixed, std::vector<Step> steps = {}) { return {false, std::move(fixed), std::move(steps)}; }
Recipe conic(std::vector<int> marks) { return {true, std::move(marks), {}}; }

Mat3 type4_last(const Scalar& u) {
  // [c^2 x : y : c z] with c^3 = -u
  if (!u.is_rational()) throw UnsupportedError("type 4 normalization needs a cube root of a symbolic value");
  auto c = rational_cube_root(-u.rational());
  if (!c) throw UnsupportedError("type 4 normalization needs the cube root of " + (-u).to_string() + ", which is not rational");
  Scalar s(*c);
  return mat({{s * s, 0, 0}, {0, 1, 0}, {0, 0, s}});
}

const Recipe& recipe(int type) {
  static const std::vector<Recipe> r = [] {
    std::vector<Recipe> v(32);
    v[1] = frame({0, 1}, {correct(3, [](const Scalar& u) { return mat({{-1, 0, 0}, {0, u, 0}, {0, 0, u}}); }),
                          correct(4, [](const Scalar& u) { return mat({{3, 0, 0}, {0, 3, u}, {0, 0, 3}}); }, negated)});
    v[2] = conic({0});
    v[3] = frame({0, 1, 2}, {correct(3, [](const Scalar& u) { return mat({{u, 0, 0}, {0, -1, 0}, {0, 0, u}}); }, reciprocal),
                             correct(4, [](const Scalar& u) { return mat({{1, 0, 0}, {-u, 1, 0}, {0, 0, 1}}); })});
    v[4] = frame({0, 1, 2}, {correct(3, [](const Scalar& u) { return mat({{-u, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }),
                             correct(4, type4_last, reciprocal)});
    v[5] = frame({0, 1, 2}, {correct(4, [](const Scalar& u) { return mat({{1, 0, 0}, {0, -u, 0}, {0, 0, 1}}); }, reciprocal)});
    v[6] = frame({0, 1, 2, 3},
                 {correct(4, [](const Scalar& u) { return mat({{1, 0, 0}, {0, 1, 0}, {-u - Scalar(1), 0, -u}}); })});
    v[7] = conic({0, 1});
    v[8] = frame({0, 1, 2}, {correct(4, [](const Scalar& u) { return mat({{1, 0, 0}, {0, u, 0}, {0, 0, 1}}); })});
    v[9] = conic({0, 1});
    v[10] = frame({0, 1, 2, 3});
    v[11] = conic({0, 1});
    v[12] = frame({0, 1, 2, 3});
    v[13] = conic({0, 1});
    v[14] = frame({0, 1, 2, 4}, {correct(3, [](const Scalar& u) { return mat({{1, 0, 0}, {0, u, 0}, {0, 0, 1}}); })});
    v[15] = frame({0, 1, 2, 3});
    v[16] = conic({0, 1, 2});
    v[17] = frame({0, 1, 2}, {correct(4, [](const Scalar& u) { return mat({{u, 0, 0}, {0, 1, 0}, {0, 0, 1}}); })});
    v[18] = frame({0, 1, 2, 3});
    v[19] = conic({0, 1, 2});
    v[20] = frame({0, 1, 2, 4});
    v[21] = conic({0, 1, 2});
    v[22] = frame({0, 1, 2, 3});
    v[23] = conic({0, 1, 2});
    v[24] = frame({0, 1, 2, 3}, {correct(4, [](const Scalar& u) { return mat({{1, 0, 0}, {0, 1, 0}, {0, 0, u}}); })});
    v[25] = frame({0, 1, 2, 3});
    const std::vector<Scalar> generic = {Scalar(0), Scalar(1)};
    for (int t : {26, 27, 28, 29}) v[t] = frame({0, 1, 2, 3}, {param(4, generic)});
    v[30] = frame({0, 1, 2, 4}, {param(3, generic)});
    v[31] = frame({0, 1, 2, 3}, {param(4, {})});
    return v;
  }();
  return r.at(type);
}

std::vector<Scalar> params_from_residual(int type, const BubblePoint& q) {
  if (type == 31) {
    const Vec3& p = q.base;
    for (int i = 0; i < 3; ++i)
      if (p[i].is_zero())
        throw std::logic_error("type 31 residual point " + q.to_string() + " lies on a coordinate line");
    std::vector<Scalar> ab = {p[0] / p[2], p[1] / p[2]};
    if (!params_in_domain(31, ab)) throw std::logic_error("type 31 residual point " + q.to_string() + " is not generic");
    return ab;
  }
  Scalar u;
  if (type == 30) {
    if (!q.base[2].is_zero() || q.base[1].is_zero())
      throw std::logic_error("type 30 residual point " + q.to_string() + " is not of the form [u:1:0]");
    u = q.base[0] / q.base[1];
  } else {
    if (!q.tail.back()) throw std::logic_error("residual coordinate of " + q.to_string() + " is infinite");
    u = *q.tail.back();
  }
  if (u.is_zero() || u.is_one()) throw std::logic_error("residual coordinate " + u.to_string() + " is excluded");
  switch (type) {
    case 26: return {Scalar(1) / u};
    case 27: return {Scalar(-1) / u};
    default: return {u};
  }
}

// ---------------------------------------------------------------------------
// Labelled catalog graphs.

struct Labelled {
  std::vector<int> weights;
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> line;  // sorted labels, empty if none
};

Labelled labelled_from_tree(const BasePointTree& t, const std::vector<int>& entry_of_label) {
  int n = static_cast<int>(entry_of_label.size());
  std::vector<int> label_of_entry(t.entries.size(), -1);
  for (int i = 0; i < n; ++i) label_of_entry[entry_of_label[i]] = i;
  Labelled g;
  for (int i = 0; i < n; ++i) g.weights.push_back(t.entries[entry_of_label[i]].mult);
  for (auto [a, b] : t.arrows) g.arcs.emplace_back(label_of_entry[a], label_of_entry[b]);
  std::sort(g.arcs.begin(), g.arcs.end());
  if (t.line)
    for (int m : t.line->members) g.line.push_back(label_of_entry[m]);
  std::sort(g.line.begin(), g.line.end());
  return g;
}

struct CatalogEntry {
  std::vector<BubblePoint> points;  // at reference parameters
  Labelled graph;
};

const CatalogEntry& catalog_entry(int type) {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out(32);
    for (const TypeRecord& t : catalog()) {
      CatalogEntry e;
      e.points = t.points(t.reference_bindings());
      BasePointTree tree = resolve_base_points(t.reference_map());
      std::vector<int> idx;
      for (const BubblePoint& p : e.points) {
        int i = tree.index_of(p);
        if (i < 0) throw std::logic_error("catalog base point " + p.to_string() + " of type " + std::to_string(t.id) + " is not a base point");
        idx.push_back(i);
      }
      e.graph = labelled_from_tree(tree, idx);
      out[t.id] = std::move(e);
    }
    return out;
  }();
  return entries.at(type);
}

// Assignments label -> input entry that carry the catalog graph onto the input graph.
// Labellings agreeing with the catalog points come first.
std::vector<std::vector<int>> labellings(int type, const BasePointTree& t, const std::vector<BubblePoint>& cat_points) {
  const Labelled& cat = catalog_entry(type).graph;
  std::vector<int> perm(t.entries.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, std::vector<int>>> found;
  do {
    Labelled g = labelled_from_tree(t, perm);
    if (g.weights != cat.weights || g.arcs != cat.arcs || g.line != cat.line) continue;
    int agree = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      if (t.entries[perm[i]].point == cat_points[i]) ++agree;
    found.emplace_back(-agree, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<int>> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms from point and direction constraints.

// A point of the line l other than p.
Vec3 other_point_on(const HomPoly& l, const Vec3& p) {
  Vec3 c{l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})};
  for (int k = 0; k < 3; ++k) {
    Vec3 e{Scalar(0), Scalar(0), Scalar(0)};
    e[k] = Scalar(1);
    Vec3 r = cross(c, e);
    if (r[0].is_zero() && r[1].is_zero() && r[2].is_zero()) continue;
    if (!same_point(r, p)) return r;
  }
  throw std::logic_error("degenerate line");
}

Vec3 line_coeffs(const HomPoly& l) { return {l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})}; }

// Some nonsingular A with A(src[i]) = dst[i] for the given points and directions.
std::optional<ProjAut> aut_from_constraints(const std::vector<BubblePoint>& src, const std::vector<BubblePoint>& dst) {
  Matrix rows;
  auto coeff_row = [](const Vec3& w, const Vec3& v) {
    // w . (A v) as a row in the entries of A
    std::vector<Scalar> r(9, Scalar(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[3 * i + j] = w[i] * v[j];
    return r;
  };
  for (size_t n = 0; n < src.size(); ++n) {
    const BubblePoint& s = src[n];
    const BubblePoint& d = dst[n];
    if (s.is_proper()) {
      // q x (A p) = 0
      for (int k = 0; k < 3; ++k) {
        Vec3 e{Scalar(0), Scalar(0), Scalar(0)};
        e[k] = Scalar(1);
        Vec3 w = cross(e, d.base);  // e . (q x Ap) = (e x q) . Ap
        rows.push_back(coeff_row(w, s.base));
      }
    } else {
      HomPoly ls = line_through(s.parent(), s);
      HomPoly ld = line_through(d.parent(), d);
      Vec3 r = other_point_on(ls, s.base);
      rows.push_back(coeff_row(line_coeffs(ld), r));
    }
  }
  auto basis = nullspace(rows, 9);
  auto to_mat = [](const std::vector<Scalar>& v) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = v[3 * i + j];
    return m;
  };
  // The identity when it qualifies, otherwise the first nonsingular small combination.
  {
    std::vector<Scalar> id(9, Scalar(0));
    id[0] = id[4] = id[8] = Scalar(1);
    bool ok = true;
    for (const auto& r : rows) {
      Scalar s(0);
      for (int i = 0; i < 9; ++i) s += r[i] * id[i];
      if (!s.is_zero()) ok = false;
    }
    if (ok) return ProjAut(to_mat(id));
  }
  int k = static_cast<int>(basis.size());
  if (k == 0) return std::nullopt;
  for (int total = 1; total <= 3 * k; ++total) {
    std::vector<int> c(k, 0);
    std::function<std::optional<ProjAut>(int, int)> rec = [&](int i, int left) -> std::optional<ProjAut> {
      if (i == k - 1) {
        if (left > 3) return std::nullopt;
        c[i] = left;
        std::vector<Scalar> v(9, Scalar(0));
        for (int b = 0; b < k; ++b)
          for (int e = 0; e < 9; ++e) v[e] += Scalar(c[b]) * basis[b][e];
        Mat3 m = to_mat(v);
        if (!det3(m).is_zero()) return ProjAut(m);
        return std::nullopt;
      }
      for (int x = std::min(3, left); x >= 0; --x) {
        c[i] = x;
        if (auto r = rec(i + 1, left - x)) return r;
      }
      return std::nullopt;
    };
    if (auto r = rec(0, total)) return r;
  }
  return std::nullopt;
}

struct Attempt {
  ProjAut pre;
  std::vector<Scalar> params;
};

// One run of the type's normalization for a fixed labelling.
Attempt normalize(int type, const CremonaMap& f, const BasePointTree& t, const std::vector<int>& label) {
  const TypeRecord& rec = type_record(type);
  const Recipe& r = recipe(type);
  const std::vector<BubblePoint>& cat = catalog_entry(type).points;
  std::vector<BubblePoint> q;
  for (int e : label) q.push_back(t.entries[e].point);

  ProjAut pre;
  if (r.conic) {
    std::vector<Vec3> m1, m2;
    bool same = true;
    for (int i : r.fixed) {
      m1.push_back(cat[i].base);
      m2.push_back(q[i].base);
    }
    for (size_t i = 0; i < cat.size(); ++i)
      if (cat[i] != q[i]) same = false;
    if (!same) {
      HomPoly c1 = conic_through(cat).conic;
      HomPoly c2 = conic_through(q).conic;
      pre = conic_marked_aut(c1, m1, c2, m2);
    }
  } else {
    std::vector<BubblePoint> src, dst;
    for (int i : r.fixed) {
      src.push_back(cat[i]);
      dst.push_back(q[i]);
    }
    auto a = aut_from_constraints(src, dst);
    if (!a) throw std::logic_error("no automorphism matches the fixed base points");
    pre = *a;
  }

  std::vector<Scalar> params;
  std::vector<bool> settled(cat.size(), false);
  for (int i : r.fixed) settled[i] = true;
  for (const Step& s : r.steps) {
    CremonaMap g = apply_aut(ProjAut(), f, pre);
    BasePointTree tg = resolve_base_points(g);
    const BubblePoint& target = cat[s.k];
    if (s.kind == Step::Kind::Correct && tg.index_of(target) >= 0) continue;
    std::vector<BubblePoint> cands;
    for (const auto& e : tg.entries) {
      const BubblePoint& p = e.point;
      if (p.order() != target.order()) continue;
      if (!target.is_proper() && p.parent() != target.parent()) continue;
      bool known = false;
      for (size_t j = 0; j < cat.size(); ++j)
        if (static_cast<int>(j) != s.k && p == cat[j]) known = true;
      if (!known) cands.push_back(p);
    }
    if (cands.size() != 1)
      throw std::logic_error("residual point for p" + std::to_string(s.k) + " is not unique (" + std::to_string(cands.size()) + " candidates)");
    const BubblePoint& res = cands[0];
    if (s.kind == Step::Kind::Param) {
      params = params_from_residual(type, res);
      continue;
    }
    if (!res.tail.back()) throw std::logic_error("residual coordinate of p" + std::to_string(s.k) + " is infinite");
    Scalar u = *res.tail.back();
    for (const Scalar& x : s.excluded)
      if (u == x) throw std::logic_error("residual coordinate of p" + std::to_string(s.k) + " is the excluded value " + x.to_string());
    pre = pre * ProjAut(s.aut(s.read(u)));
  }
  if (static_cast<int>(params.size()) != rec.param_count) throw std::logic_error("parameters were not extracted");
  return {pre, params};
}

Scalar parse_with(const std::string& text, const Bindings& b) { return parse_scalar(text, b); }

// Order on rational parameter tuples: numerator, then denominator, coordinate by coordinate.
bool rational_params_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    const Rational& x = a[i].rational();
    const Rational& y = b[i].rational();
    if (x.get_num() != y.get_num()) return x.get_num() < y.get_num();
    if (x.get_den() != y.get_den()) return x.get_den() < y.get_den();
  }
  return false;
}

bool all_rational(const std::vector<Scalar>& p) {
  return std::all_of(p.begin(), p.end(), [](const Scalar& s) { return s.is_rational(); });
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<ProjAut> post_factor(const CremonaMap& g, const CremonaMap& f) {
  if (g.degree() != f.degree()) return std::nullopt;
  std::vector<std::array<int, 3>> monos;
  for (const auto& c : g.components())
    for (const auto& [m, v] : c.terms()) monos.push_back({m[0], m[1], m[2]});
  for (const auto& c : f.components())
    for (const auto& [m, v] : c.terms()) monos.push_back({m[0], m[1], m[2]});
  std::sort(monos.begin(), monos.end());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    Matrix rows;
    for (const auto& mono : monos) {
      std::vector<Scalar> r;
      for (int j = 0; j < 3; ++j) r.push_back(g[j].coeff({mono[0], mono[1], mono[2]}));
      r.push_back(-f[i].coeff({mono[0], mono[1], mono[2]}));
      rows.push_back(std::move(r));
    }
    auto ns = nullspace(rows, 4);
    const std::vector<Scalar>* sol = nullptr;
    for (const auto& v : ns)
      if (!v[3].is_zero()) sol = &v;
    if (!sol || ns.size() != 1) return std::nullopt;
    for (int j = 0; j < 3; ++j) m[i][j] = (*sol)[j] / (*sol)[3];
  }
  if (det3(m).is_zero()) return std::nullopt;
  ProjAut a(m);
  if (apply_aut(a, g, ProjAut()) != f) return std::nullopt;
  return a;
}

CremonaMap reference_map(const ClassificationResult& r) {
  if (r.type > 0) return type_record(r.type).map(bindings_for(r.type, r.params));
  if (r.kind == "sigma") return sigma_map();
  return CremonaMap::from_aut(ProjAut());
}

bool verify_witness(const CremonaMap& input, const ClassificationResult& r) {
  return r.has_witness && apply_aut(r.post, input, r.pre) == reference_map(r);
}

ClassificationResult classify(const CremonaMap& f) {
  ClassificationResult res;
  res.degree = f.degree();
  if (!f.symbols().empty()) throw UnsupportedError("classification needs numeric parameters; bind them with --param");
  if (res.degree == 1) {
    res.kind = "linear";
    res.has_witness = true;
    res.pre = ProjAut::from_forms(f.components()).inverse();
    return res;
  }
  if (res.degree != 2 && res.degree != 3)
    throw UnsupportedError("classification covers maps of degree at most 3, got degree " + std::to_string(res.degree));
  BasePointTree t = resolve_base_points(f);
  res.tree = t;
  if (res.degree == 2) {
    int proper = 0;
    for (const auto& e : t.entries)
      if (e.point.is_proper()) ++proper;
    res.kind = proper == 3 ? "sigma" : proper == 2 ? "rho" : "tau";
    if (proper == 3) {
      // Columns q0, q1, q2 send the coordinate points to the base points.
      Mat3 m;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = t.entries[j].point.base[i];
      ProjAut pre(m);
      if (auto post = post_factor(apply_aut(ProjAut(), f, pre), sigma_map())) {
        res.has_witness = true;
        res.pre = pre;
        res.post = *post;
      }
    }
    return res;
  }
  res.kind = "cubic";
  int row = enriched_row(enriched_graph_of(t));
  if (row == 0) throw NotBirationalError("the enriched proximity graph matches no type");
  res.type = row;
  const std::vector<BubblePoint>& cat = catalog_entry(row).points;
  std::string last_error = "no labelling of the base points";
  for (const auto& label : labellings(row, t, cat)) {
    Attempt a;
    try {
      a = normalize(row, f, t, label);
    } catch (const std::logic_error& e) {
      last_error = e.what();
      continue;
    }
    CremonaMap target = type_record(row).map(bindings_for(row, a.params));
    auto post = post_factor(apply_aut(ProjAut(), f, a.pre), target);
    if (!post) {
      last_error = "normalized map is not the catalog map";
      continue;
    }
    res.params = a.params;
    res.pre = a.pre;
    res.post = *post;
    res.has_witness = true;
    if (!res.params.empty()) {
      res.orbit = param_orbit(row, res.params);
      res.canonical_params = res.orbit.front();
    }
    return res;
  }
  throw std::logic_error("type " + std::to_string(row) + " normalization failed: " + last_error);
}

// ---------------------------------------------------------------------------
// Orbits.

const std::vector<OrbitMove>& orbit_moves(int type) {
  static const std::vector<std::vector<OrbitMove>> moves = [] {
    std::vector<std::vector<OrbitMove>> m(32);
    m[26] = {{"[x:y:z]", {"γ"}}, {"[y-x:y:y-z]", {"γ/(γ-1)"}}};
    m[27] = {{"[x:y:z]", {"γ"}}, {"[y:x:-z]", {"1/γ"}}, {"[x:γy:-γz]", {"1/γ"}}, {"[γy:x:z]", {"γ"}}};
    m[28] = {{"[x:y:z]", {"γ"}},           {"[x:x-y:z]", {"1-γ"}},      {"[y:x:z]", {"1/γ"}},
             {"[x-y:x:z]", {"1/(1-γ)"}},   {"[x-y:-y:z]", {"γ/(γ-1)"}}, {"[y:y-x:z]", {"(γ-1)/γ"}}};
    m[29] = {{"[x:y:z]", {"γ"}},             {"[x:x-y:x-z]", {"1-γ"}},      {"[y:x:z]", {"1/γ"}},
             {"[x-y:x:x-z]", {"1/(1-γ)"}},   {"[y-x:y:y-z]", {"γ/(γ-1)"}}, {"[y:y-x:y-z]", {"(γ-1)/γ"}}};
    m[30] = {{"[x:y:z]", {"γ"}},
             {"[(γ-1)x:γy-x:(γ-1)z]", {"1-γ"}},
             {"[y:x:z]", {"1/γ"}},
             {"[γy-x:(γ-1)x:(γ-1)z]", {"1/(1-γ)"}},
             {"[γy-x:(γ-1)y:(γ-1)z]", {"γ/(γ-1)"}},
             {"[(γ-1)y:γy-x:(γ-1)z]", {"(γ-1)/γ"}}};
    m[31] = {
        {"[x:y:z]", {"a", "b"}},
        {"[y:x:z]", {"b", "a"}},
        {"[bx:ay:abz]", {"1/a", "1/b"}},
        {"[ay:bx:abz]", {"1/b", "1/a"}},
        {"[x:x-y:x-z]", {"a/(a-1)", "(a-b)/(a-1)"}},
        {"[x-y:x:x-z]", {"(a-b)/(a-1)", "a/(a-1)"}},
        {"[x/a:(x-y)/(a-b):(x-z)/(a-1)]", {"(a-1)/a", "(a-1)/(a-b)"}},
        {"[(x-y)/(a-b):x/a:(x-z)/(a-1)]", {"(a-1)/(a-b)", "(a-1)/a"}},
        {"[y:y-x:y-z]", {"b/(b-1)", "(b-a)/(b-1)"}},
        {"[y-x:y:y-z]", {"(b-a)/(b-1)", "b/(b-1)"}},
        {"[y/b:(x-y)/(a-b):(y-z)/(b-1)]", {"(b-1)/b", "(b-1)/(b-a)"}},
        {"[(x-y)/(a-b):y/b:(y-z)/(b-1)]", {"(b-1)/(b-a)", "(b-1)/b"}},
        {"[bx-ay:bx:b(x-az)]", {"(b-a)/(b(1-a))", "1/(1-a)"}},
        {"[bx:bx-ay:b(x-az)]", {"1/(1-a)", "(b-a)/(b(1-a))"}},
        {"[(ay-bx)/(a-b):x:(az-x)/(a-1)]", {"b(a-1)/(a-b)", "1-a"}},
        {"[x:(ay-bx)/(a-b):(az-x)/(a-1)]", {"1-a", "b(a-1)/(a-b)"}},
        {"[ay-bx:ay:a(y-bz)]", {"(a-b)/(a(1-b))", "1/(1-b)"}},
        {"[ay:ay-bx:a(y-bz)]", {"1/(1-b)", "(a-b)/(a(1-b))"}},
        {"[(ay-bx)/(a-b):y:(bz-y)/(b-1)]", {"a(1-b)/(a-b)", "1-b"}},
        {"[y:(ay-bx)/(a-b):(bz-y)/(b-1)]", {"1-b", "a(1-b)/(a-b)"}},
        {"[y-x:(ay-bx)/a:(1-b)x/(a-1)+(b-a)z/(a-1)+y]", {"(a-1)/(b-1)", "b(a-1)/(a(b-1))"}},
        {"[(ay-bx)/a:y-x:(1-b)x/(a-1)+(b-a)z/(a-1)+y]", {"b(a-1)/(a(b-1))", "(a-1)/(b-1)"}},
        {"[y-x:(ay-bx)/b:(a-1)y/(b-1)+(b-a)z/(b-1)-x]", {"(b-1)/(a-1)", "a(b-1)/(b(a-1))"}},
        {"[(ay-bx)/b:y-x:(a-1)y/(b-1)+(b-a)z/(b-1)-x]", {"a(b-1)/(b(a-1))", "(b-1)/(a-1)"}},
    };
    return m;
  }();
  if (type < 1 || type > 31) throw InputError("type must be between 1 and 31, got " + std::to_string(type));
  return moves[type];
}

std::vector<std::vector<Scalar>> param_orbit(int type, const std::vector<Scalar>& params) {
  const TypeRecord& t = type_record(type);
  if (t.param_count == 0) throw InputError("type " + std::to_string(type) + " has no parameters");
  if (!params_in_domain(type, params)) throw InputError("parameters outside the domain of type " + std::to_string(type));
  Bindings b = bindings_for(type, params);
  std::vector<std::vector<Scalar>> out;
  auto add = [&](std::vector<Scalar> p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  };
  if (type >= 28 && type <= 30) {
    for (const char* e : {"γ", "1/γ", "1-γ", "1/(1-γ)", "γ/(γ-1)", "(γ-1)/γ"}) add({parse_with(e, b)});
  } else {
    for (const OrbitMove& m : orbit_moves(type)) {
      std::vector<Scalar> p;
      for (const auto& e : m.image) p.push_back(parse_with(e, b));
      add(std::move(p));
    }
  }
  if (std::all_of(out.begin(), out.end(), all_rational)) std::sort(out.begin(), out.end(), rational_params_less);
  return out;
}

std::vector<Scalar> canonical_params(int type, const std::vector<Scalar>& params) {
  auto o = param_orbit(type, params);
  if (!std::all_of(o.begin(), o.end(), all_rational)) return params;
  return o.front();
}

Equivalence equivalent(const CremonaMap& m1, const CremonaMap& m2) {
  Equivalence e;
  e.first = classify(m1);
  e.second = classify(m2);
  const auto& r1 = e.first;
  const auto& r2 = e.second;
  if (r1.degree != r2.degree || r1.type != r2.type || r1.kind != r2.kind) return e;
  if (r1.type == 0) {
    // Quadratic kinds and automorphisms are single classes.
    e.equivalent = true;
    if (r1.has_witness && r2.has_witness) {
      e.has_witness = true;
      e.pre = r2.pre * r1.pre.inverse();
      e.post = r1.post.inverse() * r2.post;
    }
    return e;
  }
  if (r1.params.empty()) {
    e.equivalent = true;
    e.has_witness = true;
    e.pre = r2.pre * r1.pre.inverse();
    e.post = r1.post.inverse() * r2.post;
    return e;
  }
  auto orbit = param_orbit(r1.type, r1.params);
  if (std::find(orbit.begin(), orbit.end(), r2.params) == orbit.end()) return e;
  e.equivalent = true;
  Bindings b = bindings_for(r1.type, r1.params);
  CremonaMap f1 = type_record(r1.type).map(b);
  CremonaMap f2 = type_record(r1.type).map(bindings_for(r1.type, r2.params));
  for (const OrbitMove& mv : orbit_moves(r1.type)) {
    std::vector<Scalar> img;
    for (const auto& s : mv.image) img.push_back(parse_with(s, b));
    if (img != r2.params) continue;
    ProjAut alpha = parse_aut(mv.aut, b);
    auto beta = post_factor(apply_aut(ProjAut(), f2, alpha), f1);
    if (!beta) continue;
    e.has_witness = true;
    e.pre = r2.pre * alpha * r1.pre.inverse();
    e.post = r1.post.inverse() * (*beta) * r2.post;
    return e;
  }
  return e;
}

// ---------------------------------------------------------------------------
// JSON.

nlohmann::json params_to_json(const std::vector<Scalar>& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : p) j.push_back(s.to_string());
  return j;
}

nlohmann::json aut_to_json(const ProjAut& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : a.matrix()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : r) row.push_back(v.to_string());
    rows.push_back(row);
  }
  return {{"map", a.to_string()}, {"matrix", rows}};
}

nlohmann::json result_to_json(const ClassificationResult& r) {
  nlohmann::json j;
  j["degree"] = r.degree;
  j["kind"] = r.kind;
  if (r.type > 0) {
    const TypeRecord& t = type_record(r.type);
    j["type"] = r.type;
    j["enriched_row"] = r.type;
    j["parameters"] = params_to_json(r.params);
    j["canonical_parameters"] = params_to_json(r.canonical_params);
    nlohmann::json orbit = nlohmann::json::array();
    for (const auto& p : r.orbit) orbit.push_back(params_to_json(p));
    j["orbit"] = orbit;
    j["catalog_map"] = reference_map(r).to_string();
    j["inverse_type"] = t.inverse;
    j["oq"] = t.oq;
    j["q"] = t.q;
  } else {
    j["type"] = nullptr;
  }
  if (r.has_witness) {
    j["witness"] = {{"pre", aut_to_json(r.pre)}, {"post", aut_to_json(r.post)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

nlohmann::json equivalence_to_json(const Equivalence& e) {
  nlohmann::json j;
  j["equivalent"] = e.equivalent;
  j["first"] = result_to_json(e.first);
  j["second"] = result_to_json(e.second);
  if (e.has_witness)
    j["witness"] = {{"pre", aut_to_json(e.pre)}, {"post", aut_to_json(e.post)}};
  else
    j["witness"] = nullptr;
  return j;
}

}  // namespace cremona
