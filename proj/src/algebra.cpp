#include "cremona/algebra.hpp"

#include "cremona/errors.hpp"

namespace cremona {

namespace {

std::string scalar_factor(const Scalar& c, bool& neg) { return c.factor_text(neg); }

}  // namespace

std::string poly_to_string(const HomPoly& f) { return f.to_string({"x", "y", "z"}, scalar_factor); }
std::string local_to_string(const LocalPoly& f) { return f.to_string({"X", "Y"}, scalar_factor); }

HomPoly x_() { return HomPoly::var(0); }
HomPoly y_() { return HomPoly::var(1); }
HomPoly z_() { return HomPoly::var(2); }

HomPoly poly_substitute(const HomPoly& f, const std::array<HomPoly, 3>& images) {
  int d = -1;
  for (const auto& g : images) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw InputError("substitution image is not homogeneous");
    if (d >= 0 && g.degree() != d) throw InputError("substitution images have different degrees");
    d = g.degree();
  }
  if (!f.is_homogeneous()) throw InputError("substituted polynomial is not homogeneous");
  return f.substitute<3>(images);
}

HomPoly poly_gcd3(const HomPoly& a, const HomPoly& b) { return poly_gcd(a, b); }

bool has_only_rational_coeffs(const HomPoly& f) {
  for (const auto& [m, c] : f.terms())
    if (!c.is_rational()) return false;
  return true;
}

Scalar evaluate(const HomPoly& f, const Vec3& p) { return f.evaluate<Scalar>(p); }

Vec3 normalize_point(const Vec3& p) {
  for (int i = 2; i >= 0; --i)
    if (!p[i].is_zero()) {
      Vec3 r;
      for (int j = 0; j < 3; ++j) r[j] = j > i ? Scalar(0) : p[j] / p[i];
      return r;
    }
  throw InputError("the zero vector is not a point");
}

bool same_point(const Vec3& a, const Vec3& b) {
  Vec3 c = cross(a, b);
  return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

std::string point_to_string(const Vec3& p) {
  Vec3 n = normalize_point(p);
  return "[" + n[0].to_string() + ":" + n[1].to_string() + ":" + n[2].to_string() + "]";
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Scalar det3(const Mat3& m) { return dot(m[0], cross(m[1], m[2])); }

Mat3 transpose3(const Mat3& m) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

Mat3 inverse3(const Mat3& m) {
  Scalar d = det3(m);
  if (d.is_zero()) throw InputError("matrix is singular");
  // Columns of the adjugate are cross products of rows.
  Vec3 c0 = cross(m[1], m[2]), c1 = cross(m[2], m[0]), c2 = cross(m[0], m[1]);
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    r[i][0] = c0[i] / d;
    r[i][1] = c1[i] / d;
    r[i][2] = c2[i] / d;
  }
  return r;
}

Mat3 mul3(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

Vec3 mul3(const Mat3& a, const Vec3& v) { return {dot(a[0], v), dot(a[1], v), dot(a[2], v)}; }

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& a, int ncols) {
  std::vector<int> pivots;
  size_t row = 0;
  for (int col = 0; col < ncols && row < a.size(); ++col) {
    size_t sel = row;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    Scalar inv = Scalar(1) / a[row][col];
    for (int j = col; j < ncols; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Scalar f = a[i][col];
      for (int j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(const Matrix& rows, int ncols) {
  Matrix a = rows;
  auto pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(ncols, Scalar(0));
    v[free] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int matrix_rank(const Matrix& rows, int ncols) {
  Matrix a = rows;
  return static_cast<int>(rref(a, ncols).size());
}

namespace {

Mat3 identity_matrix() {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = Scalar(i == j ? 1 : 0);
  return m;
}

Mat3 scale_first_one(Mat3 m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m[i][j].is_zero()) {
        Scalar inv = Scalar(1) / m[i][j];
        for (auto& row : m)
          for (auto& c : row) c *= inv;
        return m;
      }
  return m;
}

}  // namespace

ProjAut::ProjAut() : m_(identity_matrix()) {}

ProjAut::ProjAut(const Mat3& m) : m_(scale_first_one(m)) {
  if (det3(m_).is_zero()) throw InputError("linear map is not invertible");
}

ProjAut ProjAut::from_forms(const std::array<HomPoly, 3>& forms) {
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    if (!forms[i].is_zero() && (forms[i].degree() != 1 || !forms[i].is_homogeneous()))
      throw InputError("automorphism entries must be linear forms");
    for (int j = 0; j < 3; ++j) m[i][j] = forms[i].coeff(HomPoly::Mono{j == 0, j == 1, j == 2});
  }
  return ProjAut(m);
}

std::array<HomPoly, 3> ProjAut::forms() const {
  std::array<HomPoly, 3> f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) f[i] += HomPoly::var(j).scaled(m_[i][j]);
  return f;
}

ProjAut ProjAut::inverse() const { return ProjAut(inverse3(m_)); }

bool ProjAut::is_identity() const { return m_ == identity_matrix(); }

Vec3 ProjAut::apply(const Vec3& p) const { return mul3(m_, p); }

std::string ProjAut::to_string() const {
  auto f = forms();
  return "[" + poly_to_string(f[0]) + " : " + poly_to_string(f[1]) + " : " + poly_to_string(f[2]) + "]";
}

ProjAut operator*(const ProjAut& a, const ProjAut& b) { return ProjAut(mul3(a.m_, b.m_)); }

namespace {

// Matrix whose columns are lambda_i p_i with p_3 = sum lambda_i p_i.
Mat3 frame_matrix(const std::array<Vec3, 4>& p, const char* which) {
  static const int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& t : triples) {
    Mat3 m = {p[t[0]], p[t[1]], p[t[2]]};
    if (det3(m).is_zero())
      throw InputError(std::string(which) + " points " + std::to_string(t[0] + 1) + "," +
                       std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + " are collinear");
  }
  Mat3 cols = transpose3({p[0], p[1], p[2]});
  Vec3 lambda = mul3(inverse3(cols), p[3]);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = cols[i][j] * lambda[j];
  return r;
}

}  // namespace

ProjAut solve_4pt(const std::array<Vec3, 4>& p, const std::array<Vec3, 4>& q) {
  Mat3 a = frame_matrix(p, "source");
  Mat3 b = frame_matrix(q, "target");
  return ProjAut(mul3(b, inverse3(a)));
}

}  // namespace cremona
