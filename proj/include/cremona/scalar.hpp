#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cremona/mpoly.hpp"

namespace cremona {

using Rational = mpq_class;

constexpr int kMaxSymbols = 6;
using ParamPoly = MPoly<Rational, kMaxSymbols>;

// Parameter symbols. Slots 0..2 are gamma, a, b.
int symbol_index(const std::string& name);  // registers unknown names
std::optional<int> find_symbol(const std::string& name);
std::string symbol_name(int index);

std::string rational_to_string(const Rational& q);
std::string param_poly_to_string(const ParamPoly& p);

// Element of Q(symbols): a rational number, or num/den with gcd 1 and monic den.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}
  Scalar(int v) : q_(v) {}
  Scalar(const Rational& q) : q_(q) { q_.canonicalize(); }
  Scalar(const ParamPoly& num, const ParamPoly& den);
  static Scalar symbol(const std::string& name);

  bool is_rational() const { return !f_; }
  const Rational& rational() const;
  bool is_zero() const { return !f_ && sgn(q_) == 0; }
  bool is_one() const { return !f_ && q_ == 1; }
  ParamPoly numerator() const;
  ParamPoly denominator() const;
  std::vector<int> symbols() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(int e) const;

  // Replace symbols by values.
  Scalar substitute(const std::vector<std::pair<int, Scalar>>& values) const;

  std::string to_string() const;
  // Text usable as a factor in a product; sets neg and returns the absolute value text.
  std::string factor_text(bool& neg) const;

 private:
  struct RatFun {
    ParamPoly num, den;
  };
  Rational q_;
  std::shared_ptr<const RatFun> f_;
  void set_fraction(ParamPoly num, ParamPoly den);
};

inline bool coeff_zero(const Scalar& s) { return s.is_zero(); }

// Deterministic total order; numeric for rationals.
bool scalar_less(const Scalar& a, const Scalar& b);

}  // namespace cremona
