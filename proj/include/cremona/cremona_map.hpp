#pragma once

#include <array>
#include <string>
#include <vector>

#include "cremona/algebra.hpp"

namespace cremona {

// Plane Cremona map [f0 : f1 : f2]: forms of one degree without common factor,
// scaled so the first nonzero coefficient (f0 first, graded-lex order) is 1.
class CremonaMap {
 public:
  CremonaMap();
  explicit CremonaMap(std::array<HomPoly, 3> components);
  static CremonaMap from_aut(const ProjAut& a);

  const std::array<HomPoly, 3>& components() const { return f_; }
  const HomPoly& operator[](int i) const { return f_[i]; }
  int degree() const { return f_[0].is_zero() ? (f_[1].is_zero() ? f_[2].degree() : f_[1].degree()) : f_[0].degree(); }
  bool is_identity() const;
  bool has_only_rational_coeffs() const;
  std::vector<int> symbols() const;
  CremonaMap substitute_symbols(const std::vector<std::pair<int, Scalar>>& values) const;
  std::string to_string() const;

  friend bool operator==(const CremonaMap& a, const CremonaMap& b) { return a.f_ == b.f_; }
  friend bool operator!=(const CremonaMap& a, const CremonaMap& b) { return !(a == b); }

 private:
  std::array<HomPoly, 3> f_;
};

CremonaMap sigma_map();
CremonaMap rho_map();
CremonaMap tau_map();

// outer o inner
CremonaMap compose(const CremonaMap& outer, const CremonaMap& inner);
CremonaMap apply_aut(const ProjAut& post, const CremonaMap& f, const ProjAut& pre);

// Degree of phi o q^{-1} for a quadratic q based at points of multiplicities m1, m2, m3.
int degree_drop(int d, int m1, int m2, int m3);

struct Factor {
  enum class Kind { Aut, Sigma, Rho, Tau };
  Kind kind = Kind::Aut;
  ProjAut aut;
  static Factor of(Kind k) { return Factor{k, ProjAut()}; }
  static Factor of(const ProjAut& a) { return Factor{Kind::Aut, a}; }
  CremonaMap as_map() const;
  std::string to_string() const;
};

// Factors listed outermost first.
using Decomposition = std::vector<Factor>;

CremonaMap compose_factors(const Decomposition& d);
Decomposition inverse_from_decomposition(const Decomposition& d);
std::string decomposition_to_string(const Decomposition& d);
int count_quadratic(const Decomposition& d, Factor::Kind k);

}  // namespace cremona
