#pragma once

#include <array>
#include <string>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

using HomPoly = MPoly<Scalar, 3>;    // forms in x, y, z
using LocalPoly = MPoly<Scalar, 2>;  // affine chart coordinates X, Y
using Vec3 = std::array<Scalar, 3>;
using Mat3 = std::array<Vec3, 3>;
using Matrix = std::vector<std::vector<Scalar>>;

std::string poly_to_string(const HomPoly& f);
std::string local_to_string(const LocalPoly& f);

HomPoly x_();
HomPoly y_();
HomPoly z_();

// f(g0, g1, g2); the images must be forms of one common degree.
HomPoly poly_substitute(const HomPoly& f, const std::array<HomPoly, 3>& images);
HomPoly poly_gcd3(const HomPoly& a, const HomPoly& b);

bool has_only_rational_coeffs(const HomPoly& f);
Scalar evaluate(const HomPoly& f, const Vec3& p);

// Scaled so the last nonzero coordinate is 1: [a:b:1], [a:1:0] or [1:0:0].
Vec3 normalize_point(const Vec3& p);
bool same_point(const Vec3& a, const Vec3& b);
std::string point_to_string(const Vec3& p);
Vec3 cross(const Vec3& a, const Vec3& b);
Scalar dot(const Vec3& a, const Vec3& b);

Scalar det3(const Mat3& m);
Mat3 inverse3(const Mat3& m);
Mat3 mul3(const Mat3& a, const Mat3& b);
Vec3 mul3(const Mat3& a, const Vec3& v);
Mat3 transpose3(const Mat3& m);

// Row reduction helpers over Scalar.
std::vector<std::vector<Scalar>> nullspace(const Matrix& rows, int ncols);
int matrix_rank(const Matrix& rows, int ncols);

// Projective automorphism [r0 . v : r1 . v : r2 . v], scaled so the first nonzero entry is 1.
class ProjAut {
 public:
  ProjAut();
  explicit ProjAut(const Mat3& m);
  static ProjAut from_forms(const std::array<HomPoly, 3>& forms);

  const Mat3& matrix() const { return m_; }
  std::array<HomPoly, 3> forms() const;
  ProjAut inverse() const;
  bool is_identity() const;
  Vec3 apply(const Vec3& p) const;
  std::string to_string() const;

  // (a * b)(p) = a(b(p))
  friend ProjAut operator*(const ProjAut& a, const ProjAut& b);
  friend bool operator==(const ProjAut& a, const ProjAut& b) { return a.m_ == b.m_; }

 private:
  Mat3 m_;
};

// The automorphism sending p[i] to q[i], i = 0..3; both quadruples must be in general position.
ProjAut solve_4pt(const std::array<Vec3, 4>& p, const std::array<Vec3, 4>& q);

}  // namespace cremona
