#include "cremona/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace cremona {

void upoly_trim(UPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

int upoly_degree(const UPoly& f) {
  UPoly g = f;
  upoly_trim(g);
  return static_cast<int>(g.size()) - 1;
}

Rational upoly_eval(const UPoly& f, const Rational& t) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

UPoly upoly_rem(UPoly a, const UPoly& b) {
  upoly_trim(a);
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    upoly_trim(a);
  }
  return a;
}

UPoly upoly_div(UPoly a, const UPoly& b) {
  upoly_trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    upoly_trim(a);
  }
  return q;
}

// Integer coefficients with gcd 1.
std::vector<mpz_class> primitive_integer(const UPoly& f) {
  mpz_class l = 1, g = 0;
  for (const auto& c : f) l = lcm(l, c.get_den());
  std::vector<mpz_class> r;
  for (const auto& c : f) {
    r.emplace_back(c * l);
    g = gcd(g, r.back());
  }
  for (auto& c : r) c /= g;
  return r;
}

mpz_class eval_mod(const std::vector<mpz_class>& f, const mpz_class& t, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * t + *it;
    acc %= m;
  }
  if (acc < 0) acc += m;
  return acc;
}

std::vector<mpz_class> derivative_z(const std::vector<mpz_class>& f) {
  std::vector<mpz_class> d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  return d;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Degree of gcd(f, f') over F_p, with f reduced mod p.
bool squarefree_mod(const std::vector<mpz_class>& f, unsigned long p) {
  auto reduce = [p](const std::vector<mpz_class>& g) {
    std::vector<long> r;
    for (const auto& c : g) {
      mpz_class m = c % p;
      if (m < 0) m += p;
      r.push_back(m.get_si());
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  };
  auto inv = [p](long a) {
    mpz_class r, x = a, m = p;
    mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r.get_si();
  };
  std::vector<long> a = reduce(f), b = reduce(derivative_z(f));
  long P = static_cast<long>(p);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      long c = a.back() * inv(b.back()) % P;
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % P + P) % P;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

}  // namespace

UPoly upoly_gcd(UPoly a, UPoly b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

UPoly upoly_derivative(const UPoly& f) {
  UPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  return d;
}

UPoly upoly_squarefree(const UPoly& f) {
  UPoly g = f;
  upoly_trim(g);
  if (g.size() <= 1) return g;
  UPoly h = upoly_gcd(g, upoly_derivative(g));
  return upoly_div(g, h);
}

std::vector<Rational> rational_roots(const UPoly& input) {
  UPoly f = upoly_squarefree(input);
  if (f.empty()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Rational> roots;
  if (sgn(f[0]) == 0) {
    roots.push_back(0);
    f.erase(f.begin());
  }
  if (f.size() <= 1) return roots;
  std::vector<mpz_class> g = primitive_integer(f);
  mpz_class lc = g.back(), c0 = g.front();
  mpz_class bound = 2 * abs(lc) * abs(c0) + 1;
  unsigned long p = 3;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    if (lc % p == 0) continue;
    if (squarefree_mod(g, p)) break;
    if (p > 100000) throw std::runtime_error("no suitable prime for root lifting");
  }
  std::vector<mpz_class> dg = derivative_z(g);
  mpz_class pm = p;
  for (unsigned long r0 = 0; r0 < p; ++r0) {
    if (eval_mod(g, r0, pm) != 0) continue;
    mpz_class r = r0, mod = p;
    while (mod <= bound) {
      mod *= mod;
      mpz_class fv = eval_mod(g, r, mod), dv = eval_mod(dg, r, mod), dinv;
      mpz_invert(dinv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t());
      r = (r - fv * dinv) % mod;
      if (r < 0) r += mod;
    }
    mpz_class n = (lc * r) % mod;
    if (n < 0) n += mod;
    if (2 * n > mod) n -= mod;
    Rational cand(n, lc);
    cand.canonicalize();
    if (sgn(upoly_eval(f, cand)) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<Rational> rational_cube_root(const Rational& q) {
  auto root = [](const mpz_class& v) -> std::optional<mpz_class> {
    mpz_class a = abs(v), r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), 3) == 0) return std::nullopt;
    return v < 0 ? mpz_class(-r) : r;
  };
  auto n = root(q.get_num()), d = root(q.get_den());
  if (!n || !d) return std::nullopt;
  Rational r(*n, *d);
  r.canonicalize();
  return r;
}

}  // namespace cremona
