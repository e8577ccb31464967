#include "cremona/cremona_map.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona {

CremonaMap::CremonaMap() : f_{x_(), y_(), z_()} {}

CremonaMap::CremonaMap(std::array<HomPoly, 3> f) {
  int d = -1;
  for (int i = 0; i < 3; ++i) {
    if (f[i].is_zero()) continue;
    if (!f[i].is_homogeneous()) throw InputError("component " + std::to_string(i + 1) + " is not homogeneous");
    if (d >= 0 && f[i].degree() != d) throw InputError("components have different degrees");
    d = f[i].degree();
  }
  if (d < 0) throw InputError("all components are zero");
  HomPoly g = poly_gcd(std::vector<HomPoly>{f[0], f[1], f[2]});
  if (!g.is_constant())
    for (auto& c : f) c = c.exact_div(g);
  for (const auto& c : f)
    if (!c.is_zero()) {
      Scalar inv = Scalar(1) / c.leading_coeff();
      for (auto& e : f) e = e.scaled(inv);
      break;
    }
  f_ = std::move(f);
}

CremonaMap CremonaMap::from_aut(const ProjAut& a) { return CremonaMap(a.forms()); }

bool CremonaMap::is_identity() const { return *this == CremonaMap(); }

bool CremonaMap::has_only_rational_coeffs() const {
  return std::all_of(f_.begin(), f_.end(), [](const HomPoly& p) { return cremona::has_only_rational_coeffs(p); });
}

std::vector<int> CremonaMap::symbols() const {
  std::vector<int> out;
  for (const auto& p : f_)
    for (const auto& [m, c] : p.terms())
      for (int s : c.symbols())
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

CremonaMap CremonaMap::substitute_symbols(const std::vector<std::pair<int, Scalar>>& values) const {
  std::array<HomPoly, 3> g;
  for (int i = 0; i < 3; ++i) g[i] = f_[i].map_coeffs([&](const Scalar& c) { return c.substitute(values); });
  return CremonaMap(g);
}

std::string CremonaMap::to_string() const {
  return "[" + poly_to_string(f_[0]) + " : " + poly_to_string(f_[1]) + " : " + poly_to_string(f_[2]) + "]";
}

CremonaMap sigma_map() { return CremonaMap({y_() * z_(), x_() * z_(), x_() * y_()}); }
CremonaMap rho_map() { return CremonaMap({x_() * y_(), z_() * z_(), y_() * z_()}); }
CremonaMap tau_map() { return CremonaMap({x_() * x_(), x_() * y_(), y_() * y_() - x_() * z_()}); }

CremonaMap compose(const CremonaMap& outer, const CremonaMap& inner) {
  std::array<HomPoly, 3> g;
  for (int i = 0; i < 3; ++i) g[i] = outer[i].substitute<3>(inner.components());
  return CremonaMap(g);
}

CremonaMap apply_aut(const ProjAut& post, const CremonaMap& f, const ProjAut& pre) {
  return compose(CremonaMap::from_aut(post), compose(f, CremonaMap::from_aut(pre)));
}

int degree_drop(int d, int m1, int m2, int m3) { return 2 * d - m1 - m2 - m3; }

CremonaMap Factor::as_map() const {
  switch (kind) {
    case Kind::Sigma: return sigma_map();
    case Kind::Rho: return rho_map();
    case Kind::Tau: return tau_map();
    case Kind::Aut: break;
  }
  return CremonaMap::from_aut(aut);
}

std::string Factor::to_string() const {
  switch (kind) {
    case Kind::Sigma: return "sigma";
    case Kind::Rho: return "rho";
    case Kind::Tau: return "tau";
    case Kind::Aut: break;
  }
  return aut.to_string();
}

CremonaMap compose_factors(const Decomposition& d) {
  CremonaMap m;
  for (auto it = d.rbegin(); it != d.rend(); ++it) m = compose(it->as_map(), m);
  return m;
}

Decomposition inverse_from_decomposition(const Decomposition& d) {
  Decomposition r;
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    if (it->kind == Factor::Kind::Aut) r.push_back(Factor::of(it->aut.inverse()));
    else r.push_back(*it);
  }
  return r;
}

std::string decomposition_to_string(const Decomposition& d) {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += " o ";
    s += d[i].to_string();
  }
  return s.empty() ? "[x : y : z]" : s;
}

int count_quadratic(const Decomposition& d, Factor::Kind k) {
  return static_cast<int>(std::count_if(d.begin(), d.end(), [k](const Factor& f) { return f.kind == k; }));
}

}  // namespace cremona
