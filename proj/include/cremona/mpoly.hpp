#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cremona {

inline bool coeff_zero(const mpq_class& q) { return sgn(q) == 0; }


// Sparse multivariate polynomial over a field K in NV variables.
// Terms are kept in graded-lex order, highest first; stored coefficients are nonzero.
template <class K, int NV>
class MPoly {
 public:
  using Mono = std::array<int, NV>;

  static int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
  }

  struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const {
      int da = mono_degree(a), db = mono_degree(b);
      if (da != db) return da > db;
      return a > b;
    }
  };

  using Terms = std::map<Mono, K, MonoOrder>;

  MPoly() = default;
  MPoly(const K& c) {
    if (!coeff_zero(c)) terms_[Mono{}] = c;
  }
  MPoly(long c) : MPoly(K(c)) {}

  static MPoly var(int i, int power = 1) {
    Mono m{};
    m[i] = power;
    return monomial(m, K(1));
  }
  static MPoly monomial(const Mono& m, const K& c) {
    MPoly p;
    if (!coeff_zero(c)) p.terms_[m] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
  }
  K constant_value() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? K(0) : it->second;
  }
  size_t size() const { return terms_.size(); }

  int degree() const { return terms_.empty() ? -1 : mono_degree(terms_.begin()->first); }
  int low_degree() const {
    if (terms_.empty()) return -1;
    int d = degree();
    for (const auto& [m, c] : terms_) d = std::min(d, mono_degree(m));
    return d;
  }
  int degree_in(int v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
  }
  int low_degree_in(int v) const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first[v];
    for (const auto& [m, c] : terms_) d = std::min(d, m[v]);
    return d;
  }
  bool is_homogeneous() const {
    int d = degree();
    for (const auto& [m, c] : terms_)
      if (mono_degree(m) != d) return false;
    return true;
  }
  bool uses_var(int v) const { return degree_in(v) > 0; }

  const Mono& leading_mono() const { return terms_.begin()->first; }
  const K& leading_coeff() const { return terms_.begin()->second; }

  K coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  // Homogeneous component of total degree d.
  MPoly homogeneous_part(int d) const {
    MPoly r;
    for (const auto& [m, c] : terms_)
      if (mono_degree(m) == d) r.terms_.emplace(m, c);
    return r;
  }

  void add_term(const Mono& m, const K& c) {
    if (coeff_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (coeff_zero(it->second)) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MPoly operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m;
        for (int i = 0; i < NV; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const K& k) const {
    MPoly r;
    if (coeff_zero(k)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
    return r;
  }
  MPoly shifted(const Mono& by) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      Mono n;
      for (int i = 0; i < NV; ++i) n[i] = m[i] + by[i];
      r.terms_.emplace(n, c);
    }
    return r;
  }
  MPoly pow(int e) const {
    MPoly r(K(1)), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Scale so the leading coefficient is 1.
  MPoly monic() const {
    if (terms_.empty()) return *this;
    return scaled(K(1) / leading_coeff());
  }

  // Exact division; nullopt when b does not divide *this.
  std::optional<MPoly> divide(const MPoly& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    MPoly q, r = *this;
    const Mono& lb = b.leading_mono();
    K inv = K(1) / b.leading_coeff();
    while (!r.is_zero()) {
      const Mono& lr = r.leading_mono();
      Mono m;
      for (int i = 0; i < NV; ++i) {
        m[i] = lr[i] - lb[i];
        if (m[i] < 0) return std::nullopt;
      }
      K c = r.leading_coeff() * inv;
      q.add_term(m, c);
      r -= b.shifted(m).scaled(c);
    }
    return q;
  }
  MPoly exact_div(const MPoly& b) const {
    auto q = divide(b);
    if (!q) throw std::logic_error("inexact polynomial division");
    return *q;
  }

  // Coefficients with respect to variable v: result[k] multiplies v^k.
  std::vector<MPoly> coefficients_in(int v) const {
    std::vector<MPoly> out(std::max(degree_in(v) + 1, 0));
    for (const auto& [m, c] : terms_) {
      Mono n = m;
      n[v] = 0;
      out[m[v]].add_term(n, c);
    }
    return out;
  }
  static MPoly from_coefficients(int v, const std::vector<MPoly>& cs) {
    MPoly r;
    for (size_t k = 0; k < cs.size(); ++k) {
      Mono s{};
      s[v] = static_cast<int>(k);
      r += cs[k].shifted(s);
    }
    return r;
  }

  MPoly derivative(int v) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      if (m[v] == 0) continue;
      Mono n = m;
      n[v] -= 1;
      r.add_term(n, c * K(m[v]));
    }
    return r;
  }

  template <class V>
  V evaluate(const std::array<V, NV>& at) const {
    V acc = V(0);
    for (const auto& [m, c] : terms_) {
      V t = V(c);
      for (int i = 0; i < NV; ++i)
        for (int e = 0; e < m[i]; ++e) t = t * at[i];
      acc = acc + t;
    }
    return acc;
  }

  // Substitute polynomial images for each variable.
  template <int NW>
  MPoly<K, NW> substitute(const std::array<MPoly<K, NW>, NV>& images) const {
    MPoly<K, NW> r;
    std::array<std::vector<MPoly<K, NW>>, NV> powers;
    for (const auto& [m, c] : terms_) {
      MPoly<K, NW> t(c);
      for (int i = 0; i < NV; ++i) {
        if (m[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(MPoly<K, NW>(K(1)));
        while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * images[i]);
        t *= pw[m[i]];
      }
      r += t;
    }
    return r;
  }

  // Apply f to each coefficient.
  template <class F>
  MPoly map_coeffs(F f) const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  std::string to_string(const std::vector<std::string>& names,
                        const std::function<std::string(const K&, bool&)>& coeff_fmt) const;

 private:
  Terms terms_;
};

namespace detail {

template <class K, int NV>
int first_used_var(const MPoly<K, NV>& a, const MPoly<K, NV>& b) {
  for (int v = 0; v < NV; ++v)
    if (a.uses_var(v) || b.uses_var(v)) return v;
  return -1;
}

// Pseudo-remainder of a by b in variable v.
template <class K, int NV>
MPoly<K, NV> prem(const MPoly<K, NV>& a, const MPoly<K, NV>& b, int v) {
  using P = MPoly<K, NV>;
  int db = b.degree_in(v);
  auto bc = b.coefficients_in(v);
  const P& lb = bc.back();
  P r = a;
  int e = a.degree_in(v) - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    P lr = r.coefficients_in(v).back();
    typename P::Mono s{};
    s[v] = dr - db;
    r = r * lb - (lr * b).shifted(s);
    --e;
  }
  return r * lb.pow(std::max(e, 0));
}

}  // namespace detail

template <class K, int NV>
MPoly<K, NV> poly_gcd(const MPoly<K, NV>& a, const MPoly<K, NV>& b);

// Gcd of the coefficients of p with respect to v.
template <class K, int NV>
MPoly<K, NV> content_in(const MPoly<K, NV>& p, int v) {
  MPoly<K, NV> g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Monic gcd over K; content/primitive recursion with a subresultant remainder sequence.
template <class K, int NV>
MPoly<K, NV> poly_gcd(const MPoly<K, NV>& a, const MPoly<K, NV>& b) {
  using P = MPoly<K, NV>;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  int v = detail::first_used_var(a, b);
  if (v < 0) return P(K(1));
  P ca = content_in(a, v), cb = content_in(b, v);
  P c = poly_gcd(ca, cb);
  P A = a.exact_div(ca), B = b.exact_div(cb);
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  if (B.degree_in(v) <= 0) return c.monic();
  P g(K(1)), h(K(1));
  while (true) {
    int delta = A.degree_in(v) - B.degree_in(v);
    P r = detail::prem(A, B, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      B = P(K(1));
      break;
    }
    A = B;
    B = r.exact_div(g * h.pow(delta));
    g = A.coefficients_in(v).back();
    if (delta == 0) {
    } else if (delta == 1) {
      h = g;
    } else {
      h = g.pow(delta).exact_div(h.pow(delta - 1));
    }
  }
  P pb = B.exact_div(content_in(B, v));
  return (c * pb).monic();
}

template <class K, int NV>
MPoly<K, NV> poly_gcd(const std::vector<MPoly<K, NV>>& ps) {
  MPoly<K, NV> g;
  for (const auto& p : ps) g = poly_gcd(g, p);
  return g;
}

template <class K, int NV>
std::string MPoly<K, NV>::to_string(const std::vector<std::string>& names,
                                    const std::function<std::string(const K&, bool&)>& coeff_fmt) const {
  // coeff_fmt returns the text of |c| suited for a product and sets the flag when c is negative.
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = false;
    std::string ct = coeff_fmt(c, neg);
    std::string mono;
    for (int i = 0; i < NV; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string body;
    if (mono.empty()) body = ct;
    else if (ct == "1") body = mono;
    else body = ct + "*" + mono;
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace cremona
