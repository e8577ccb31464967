#include "cremona/scalar.hpp"

#include <mutex>
#include <stdexcept>

namespace cremona {

namespace {

struct Registry {
  std::mutex mu;
  std::vector<std::string> names{"γ", "a", "b"};
};

Registry& registry() {
  static Registry r;
  return r;
}

std::string canonical_name(const std::string& name) {
  if (name == "gamma") return "γ";
  return name;
}

}  // namespace

std::optional<int> find_symbol(const std::string& raw) {
  std::string name = canonical_name(raw);
  auto& r = registry();
  std::lock_guard lock(r.mu);
  for (size_t i = 0; i < r.names.size(); ++i)
    if (r.names[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

int symbol_index(const std::string& raw) {
  std::string name = canonical_name(raw);
  auto& r = registry();
  std::lock_guard lock(r.mu);
  for (size_t i = 0; i < r.names.size(); ++i)
    if (r.names[i] == name) return static_cast<int>(i);
  if (r.names.size() >= static_cast<size_t>(kMaxSymbols))
    throw std::runtime_error("too many parameter symbols (limit " + std::to_string(kMaxSymbols) + ")");
  r.names.push_back(name);
  return static_cast<int>(r.names.size() - 1);
}

std::string symbol_name(int index) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.names.at(index);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string rational_factor(const Rational& q, bool& neg) {
  neg = sgn(q) < 0;
  Rational a = abs(q);
  return a.get_str();
}

std::vector<std::string> symbol_names() {
  std::vector<std::string> names;
  for (int i = 0; i < kMaxSymbols; ++i) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    names.push_back(i < static_cast<int>(r.names.size()) ? r.names[i] : "s" + std::to_string(i));
  }
  return names;
}

}  // namespace

std::string param_poly_to_string(const ParamPoly& p) {
  return p.to_string(symbol_names(), rational_factor);
}

Scalar::Scalar(const ParamPoly& num, const ParamPoly& den) { set_fraction(num, den); }

Scalar Scalar::symbol(const std::string& name) {
  int i = symbol_index(name);
  return Scalar(ParamPoly::var(i), ParamPoly(Rational(1)));
}

void Scalar::set_fraction(ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) {
    q_ = 0;
    f_.reset();
    return;
  }
  if (!den.is_constant()) {
    ParamPoly g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  Rational lc = den.leading_coeff();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (num.is_constant() && den.is_constant()) {
    q_ = num.constant_value();
    f_.reset();
    return;
  }
  q_ = 0;
  f_ = std::make_shared<RatFun>(RatFun{std::move(num), std::move(den)});
}

const Rational& Scalar::rational() const {
  if (f_) throw std::logic_error("scalar is not a rational number");
  return q_;
}

ParamPoly Scalar::numerator() const { return f_ ? f_->num : ParamPoly(q_); }
ParamPoly Scalar::denominator() const { return f_ ? f_->den : ParamPoly(Rational(1)); }

std::vector<int> Scalar::symbols() const {
  std::vector<int> out;
  if (!f_) return out;
  for (int v = 0; v < kMaxSymbols; ++v)
    if (f_->num.uses_var(v) || f_->den.uses_var(v)) out.push_back(v);
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!f_ && !o.f_) {
    q_ += o.q_;
    return *this;
  }
  ParamPoly n1 = numerator(), d1 = denominator(), n2 = o.numerator(), d2 = o.denominator();
  if (d1 == d2) set_fraction(n1 + n2, d1);
  else set_fraction(n1 * d2 + n2 * d1, d1 * d2);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!f_ && !o.f_) {
    q_ *= o.q_;
    return *this;
  }
  if (o.is_zero() || is_zero()) {
    q_ = 0;
    f_.reset();
    return *this;
  }
  set_fraction(numerator() * o.numerator(), denominator() * o.denominator());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!f_ && !o.f_) {
    q_ /= o.q_;
    return *this;
  }
  set_fraction(numerator() * o.denominator(), denominator() * o.numerator());
  return *this;
}

Scalar Scalar::operator-() const {
  if (!f_) return Scalar(Rational(-q_));
  return Scalar(-f_->num, f_->den);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return a.q_ == b.q_;
  if (!a.f_ || !b.f_) return false;
  return a.f_->num == b.f_->num && a.f_->den == b.f_->den;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return (Scalar(1) / *this).pow(-e);
  Scalar r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Scalar Scalar::substitute(const std::vector<std::pair<int, Scalar>>& values) const {
  if (!f_) return *this;
  auto eval = [&](const ParamPoly& p) {
    Scalar acc(0);
    for (const auto& [m, c] : p.terms()) {
      Scalar t(c);
      for (int i = 0; i < kMaxSymbols; ++i) {
        if (m[i] == 0) continue;
        Scalar base = Scalar(ParamPoly::var(i), ParamPoly(Rational(1)));
        for (const auto& [idx, val] : values)
          if (idx == i) base = val;
        t *= base.pow(m[i]);
      }
      acc += t;
    }
    return acc;
  };
  return eval(f_->num) / eval(f_->den);
}

std::string Scalar::to_string() const {
  if (!f_) return rational_to_string(q_);
  std::string n = param_poly_to_string(f_->num);
  if (f_->den.is_constant()) return n;
  std::string d = param_poly_to_string(f_->den);
  bool num_atomic = f_->num.size() == 1;
  bool den_atomic = false;
  if (f_->den.size() == 1) {
    int used = 0;
    for (int e : f_->den.leading_mono()) used += e > 0;
    den_atomic = used == 1;
  }
  return (num_atomic ? n : "(" + n + ")") + "/" + (den_atomic ? d : "(" + d + ")");
}

std::string Scalar::factor_text(bool& neg) const {
  if (!f_) return rational_factor(q_, neg);
  neg = false;
  if (f_->num.size() == 1 && f_->den.is_constant()) {
    const auto& [m, c] = *f_->num.terms().begin();
    neg = sgn(c) < 0;
    return param_poly_to_string(f_->num.scaled(neg ? Rational(-1) : Rational(1)));
  }
  return "(" + to_string() + ")";
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() < b.rational();
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  return a.to_string() < b.to_string();
}

}  // namespace cremona
