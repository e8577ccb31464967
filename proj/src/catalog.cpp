#include "cremona/catalog.hpp"

#include "cremona/errors.hpp"

namespace cremona {

namespace {

struct Row {
  int id;
  const char* formula;
  int params;
  int inverse;
  int oq;
  std::vector<std::string> points;
  std::vector<std::string> ordinary;
  const char* quadratic;
};

// Base points p0..p4 are listed in the labelling used by the normalization recipes.
const std::vector<Row>& rows() {
  static const std::vector<Row> r = {
      {1, "[xz^2+y^3:yz^2:z^3]", 0, 1, 6,
       {"[1:0:0]", "([1:0:0],0)", "([1:0:0],0,inf)", "([1:0:0],0,inf,-1)", "([1:0:0],0,inf,-1,0)"},
       {"[27y+225z:12y:8x-8y]", "[2x+5y:5y-x:15x+15z]", "[2x+2z:5x:3x+10y-2z]", "[x-y:z+2y-x:2y]",
        "[z:z-2x:2x+2y-z]", "[x-y:z-x+y:2x-y]", "[y:y+z:x]"},
       "[x:z:y] o rho o [z:y:x] o tau o [z:y:-x] o rho o [x:z:y]"},
      {2, "[x(x^2+yz):y^3:y(x^2+yz)]", 0, 8, 5,
       {"[0:0:1]", "([0:0:1],0)", "([0:0:1],0,-1)", "([0:0:1],0,-1,0)", "([0:0:1],0,-1,0,0)"},
       {"[8y-8x:x+z:4x]", "[x+y:y:z-x]", "[2x:-y-2x:y+2x-2z]", "[y-x:x:x+z-y]", "[x:z-x:y]",
        "[x:z:x+y]"},
       "[x+z:y:z] o rho o [y-x:z:x] o tau o [y:x:-z]"},
      {3, "[xz^2:x^3+xyz:z^3]", 0, 5, 5,
       {"[0:1:0]", "([0:1:0],inf)", "([0:1:0],0)", "([0:1:0],0,-1)", "([0:1:0],0,-1,0)"},
       {"[4y:4y+3x:4y+4z]", "[3x-z:z-y:y]", "[9z+3x:y:3z-y]", "[3y+4z-x:x-z:3x]", "[y+z:x-y+z:y-z]",
        "[2y:x+z:x-z]"},
       "[z:x:y] o rho o [z:y:x] o tau o [z:x:-y]"},
      {4, "[x^2z:x^3+z^3+xyz:xz^2]", 0, 4, 4,
       {"[0:1:0]", "([0:1:0],inf)", "([0:1:0],0)", "([0:1:0],inf,-1)", "([0:1:0],0,-1)"},
       {"[y+z:x+2z:z-y]", "[2x:y-z:y+z]", "[y-4x-4z:x:z]", "[y+z:x:y-z]", "[2y:x+z:x-z]"},
       "[y:z:x] o tau o [y:x:-z] o tau o [x:z:-y]"},
      {5, "[x^2z:x^2y+z^3:xz^2]", 0, 3, 5,
       {"[0:1:0]", "[1:0:0]", "([0:1:0],inf)", "([0:1:0],inf,inf)", "([0:1:0],inf,inf,-1)"},
       {"[4y+4z:12z+x+9y:6y+8z]", "[2y+z:-2x-z:2x+2z]", "[2y:2y-z+x:z-y]", "[2z+2x-y:2z-y:y]",
        "[y-x-z:2z+x:x+z]", "[x-z:y:z]"},
       "[x:z:y] o tau o [-z:-y:x+z] o rho o [y-z:x:z]"},
      {6, "[x^2(x-y):xy(x-y):xyz+y^3]", 0, 6, 4,
       {"[0:0:1]", "[1:1:-1]", "([0:0:1],0)", "([0:0:1],inf)", "([0:0:1],inf,-1)"},
       {"[-2y-4x:4x:2x+y+2z]", "[x-2z:z:y]", "[y:z-2y-x:2x]", "[y-x:x+y:2z]", "[x-y:x+y:x+y+2z]"},
       "[-y:z:x] o rho o [x+y+2z:y+z:-z] o rho o [x+z:x:y-x]"},
      {7, "[x(x^2+yz):y(x^2+yz):xy^2]", 0, 17, 4,
       {"[0:0:1]", "[0:1:0]", "([0:0:1],0)", "([0:0:1],0,-1)", "([0:0:1],0,-1,0)"},
       {"[y-x:y:y-z]", "[x:z:z+y]", "[z:y-x-z:x]", "[x:y:x+z]", "[x:x+z:y-x]"},
       "[-x-z:z:y] o rho o [-z-y:x+y+z:z] o rho o [z-x:y:x]"},
      {8, "[xyz:yz^2:z^3-x^2y]", 0, 2, 5,
       {"[0:1:0]", "[1:0:0]", "([1:0:0],inf)", "([1:0:0],inf,0)", "([1:0:0],inf,0,1)"},
       {"[2y:-4x-4y:8x+9y+z]", "[2x-2y:2y-x:x+2z]", "[x+y:x:z-y-2x]", "[x+y:-2x:2x+y+z]",
        "[2x+y:y:2x-y+2z]", "[-z:x+z:y+z]"},
       "[y:x:-z] o tau o [z:x+z:y] o rho o [x-z:y:z]"},
      {9, "[y^2z:x(xz+y^2):y(xz+y^2)]", 0, 9, 4,
       {"[0:0:1]", "[1:0:0]", "([1:0:0],0)", "([1:0:0],0,-1)", "([1:0:0],0,-1,0)"},
       {"[z-y:x:z]", "[x:y+z:z]", "[x:x-y:z]", "[x:y+z:z]", "[x:z-y:y]"},
       "[y:-x-z:z] o rho o [-2z-x:x+y+z:z] o rho o [x-y:z:y]"},
      {10, "[x^3:y^2z:xyz]", 0, 10, 3,
       {"[0:0:1]", "[0:1:0]", "([0:0:1],0)", "([0:1:0],0)", "([0:1:0],0,0)"},
       {"[x+y:-y-z:y]", "[z-x:x+y:-y]", "[z:x-z:y+z-x]", "[x:x+z:x+y]"},
       "[y:x+z:z] o rho o [z-y:x+z:y] o rho o [z-x:y:x]"},
      {11, "[x(y^2+xz):y(y^2+xz):xyz]", 0, 18, 3,
       {"[0:0:1]", "[1:0:0]", "([0:0:1],inf)", "([1:0:0],0)", "([1:0:0],0,-1)"},
       {"[z:x:y]", "[x:x+z-y:z]", "[x:y+z:z]", "[x:z-y:y]"},
       "[x:z:z-y] o rho o [z:x+y+z:y] o rho o [z-y:x:y]"},
      {12, "[xz^2:x^2y:z^3]", 0, 12, 3,
       {"[0:1:0]", "[1:0:0]", "([0:1:0],inf)", "([1:0:0],inf)", "([0:1:0],inf,inf)"},
       {"[-x:x-z:x+y]", "[y-x:x:y+z]", "[y:x+y:z-x-y]", "[-z:x+z:y-z]"},
       "[z:x+z:y] o rho o [x+z-y:z:y] o rho o [y-z:x:z]"},
      {13, "[x(y^2+xz):y(y^2+xz):xy^2]", 0, 20, 3,
       {"[0:0:1]", "[1:0:0]", "([1:0:0],0)", "([0:0:1],inf)", "([0:0:1],inf,-1)"},
       {"[x:y:z]", "[z-y:z:x+z-y]", "[x:y+z:z]", "[z:x-y:y]"},
       "[z:y:x] o sigma o [y+x+z:z:y] o rho o [z-y:x:y]"},
      {14, "[x^3:x^2y:(x-y)yz]", 0, 15, 3,
       {"[0:0:1]", "[0:1:0]", "([0:0:1],0)", "([0:0:1],1)", "([0:1:0],0)"},
       {"[x+z:z:y]", "[x:z-y:z-x]", "[x:y+z:z]", "[y:z-x:x]"},
       "[y:y+z:-x] o rho o [x+z:z-y:y] o rho o [z-x:y:x]"},
      {15, "[x^2y:xy^2:(x-y)^2z]", 0, 14, 3,
       {"[0:0:1]", "[0:1:0]", "[1:0:0]", "([0:0:1],1)", "([0:0:1],1,inf)"},
       {"[z-y:y+z:4y-4x]", "[x+y:y:z]", "[y-x+2z:x-y:x+y]", "[x:y:z]"},
       "[x:z+x:y] o rho o [y:z:x-y] o sigma"},
      {16, "[x(x^2+yz):y(x^2+yz):xy(x-y)]", 0, 24, 3,
       {"[0:0:1]", "[0:1:0]", "[1:1:-1]", "([0:0:1],0)", "([0:0:1],0,-1)"},
       {"[-x:y:2y-z]", "[y:x:x+z]", "[x+z:-z:y-2x-2z]", "[x:x+z:y-x]"},
       "[x:z:y+z] o rho o [y:x-z-y:y+z] o sigma o [x+z:y-x:x]"},
      {17, "[xyz:y^2z:x(y^2-xz)]", 0, 7, 4,
       {"[0:0:1]", "[1:0:0]", "[0:1:0]", "([1:0:0],0)", "([1:0:0],0,1)"},
       {"[-y:x-y:3y+z]", "[x+y:y:z]", "[z:x:y-x+z]", "[x:y-x:z]", "[y:y+z:x-y]"},
       "[y:x:-z] o tau o sigma"},
      {18, "[x^2(y-z):xy(y-z):y^2z]", 0, 11, 3,
       {"[0:0:1]", "[1:0:0]", "[0:1:0]", "([1:0:0],1)", "([1:0:0],1,0)"},
       {"[x+z:z:z-y]", "[x:y+z:z]", "[y-x:z-y-x:x]", "[x:y:z]"},
       "[x+z:z:-y] o rho o [y-x:y-z:x] o sigma"},
      {19, "[x(x^2+yz+xz):y(x^2+yz+xz):xyz]", 0, 19, 3,
       {"[0:0:1]", "[0:1:0]", "[1:0:-1]", "([0:1:0],0)", "([0:1:0],0,-1)"},
       {"[x:z:-y]", "[y:z-y:x]", "[x:z:y-x]", "[x:x+z:y]"},
       "[z:x:y+z] o rho o [z:x-y-z:y] o sigma o [x+z:y:x]"},
      {20, "[x^2z:xyz:y^2(x-z)]", 0, 13, 3,
       {"[0:0:1]", "[1:0:0]", "[0:1:0]", "([1:0:0],0)", "([0:1:0],1)"},
       {"[z-y:z:x+z]", "[x:y+z:z]", "[z-x-y:x-y:y]", "[x:y:z]"},
       "[y:z:x+z] o rho o [z-x-y:x:y] o sigma"},
      {21, "[x(xy+xz+yz):y(xy+xz+yz):xyz]", 0, 21, 2,
       {"[0:0:1]", "[1:0:0]", "[0:1:0]", "([1:0:0],-1)", "([0:1:0],-1)"},
       {"[x:y:z]", "[x:y:x+y+z]", "[x:y:z]"},
       nullptr},
      {22, "[xz(x+y):yz(x+y):xy^2]", 0, 22, 3,
       {"[0:0:1]", "[1:0:0]", "[0:1:0]", "([0:0:1],-1)", "([1:0:0],0)"},
       {"[y-2z:z:x+z]", "[x:y+z:z]", "[x+y-z:2x+y:-x-y]", "[x:y:z]"},
       "[y-z:z:x+z] o rho o [z-x-y:x:x+y] o sigma"},
      {23, "[x(x^2+xy+yz):y(x^2+xy+yz):xyz]", 0, 25, 2,
       {"[0:0:1]", "[0:1:0]", "[1:-1:0]", "([0:0:1],0)", "([0:1:0],-1)"},
       {"[x:-y:z]", "[y+z:z:x+y+z]", "[z:x:-x-y]"},
       nullptr},
      {24, "[xyz:(y-x)yz:x(x-y)(y-z)]", 0, 16, 3,
       {"[0:0:1]", "[1:0:0]", "[0:1:0]", "[1:1:0]", "([1:0:0],1)"},
       {"[x:y:z]", "[x+z:z-x:6z-4y]", "[x:y+z:z]", "[y-2x:2z-3y:y]"},
       "[y+z:-z:x-z] o rho o [x-y+z:y-x:x] o sigma"},
      {25, "[x(x+y)(y+z):y(x+y)(y+z):xyz]", 0, 23, 2,
       {"[0:0:1]", "[1:0:0]", "[0:1:-1]", "[1:-1:0]", "([1:0:0],-1)"},
       {"[-x:z:y]", "[z:x+y:y+z]", "[z:y:-x-y]"},
       nullptr},
      {26, "[x(γxz-γy^2-xy+y^2):γxy(z-y):γy^2(z-x)]", 1, 26, 2,
       {"[0:0:1]", "[1:0:0]", "[0:1:0]", "[1:1:1]", "([1:0:0],1/γ)"},
       {"[γ(γx-2x+y)+x+z:γ(γx-x+y):γ(γx+y)]", "[γ((γ-1)x-γy+z):γ(y-x):γx]", "[x:y:z]"},
       nullptr},
      {27, "[γx^2y:γxy^2:(x+y)(x+γy)z]", 1, 27, 2,
       {"[0:0:1]", "[0:1:0]", "[1:0:0]", "([0:0:1],-1)", "([0:0:1],-1/γ)"},
       {"[γ(γx+y):-γ(x+y):(γ-1)^2z]", "[γx+y:-x-y:(γ-1)z]", "[x:y:z]"},
       nullptr},
      {28, "[xy(x-y):xz(y-γx):z(y+γx)(y-γx)]", 1, 28, 3,
       {"[0:0:1]", "[0:1:0]", "[1:0:0]", "[1:1:0]", "([0:0:1],γ)"},
       {"[z:γ^2(x+y):γ^2(x+γx+γy)]", "[x+γy-y:-γy:z]", "[x:x-γy:-γz]", "[x:y:z]"},
       "[x:z-y:2γz-(1+γ)y] o rho o [(1-γ)z:x-y:x-γy] o sigma"},
      {29, "[xy(x-y):x(xy-γxy+γxz-yz):x^2y-γ^2x^2y+γ^2x^2z-y^2z]", 1, 30, 2,
       {"[0:0:1]", "[0:1:0]", "[1:0:0]", "[1:1:1]", "([0:0:1],γ)"},
       {"[y+z:y-x:γ(y-x-z)-x+y+z]", "[x-y:x-γy:(1-γ)z-x+γy]", "[x:y:z]"},
       nullptr},
      {30, "[x(xy+γxz-xz-γy^2):γxz(x-y):γz(x-y)(x+y)]", 1, 29, 2,
       {"[0:0:1]", "[0:1:0]", "[1:0:0]", "[γ:1:0]", "[1:1:1]"},
       {"[γ^2x+(1-γ)y-z:γ(γx-y):γ((γ+1)x-y)]", "[γ(y+z)-y:y+z:x+z]", "[z-x:y-x:x]"},
       nullptr},
      {31,
       "[ax(-abxz+aby^2-b^2xy+b^2xz+axy-ay^2):ax(-abxz+abyz+axy-ayz-bxy+bxz):"
       "-a^2bx^2z+a^2by^2z+a^2x^2y-a^2y^2z-b^2x^2y+b^2x^2z]",
       2, 31, 2,
       {"[0:0:1]", "[0:1:0]", "[1:0:0]", "[1:1:1]", "[a:b:1]"},
       {"[a(a(x+(b-1)^2z)+by):a(ax+y):by-((b-1)z-x)a^2-(b((1-b)z-x)-y)a]",
        "[ax-by:y-x:(b-1)ax-b(a-1)y+(a-b)z]", "[x:y:z]"},
       nullptr},
  };
  return r;
}

}  // namespace

Bindings TypeRecord::reference_bindings() const {
  if (param_count == 1) return {{"γ", Scalar(3)}};
  if (param_count == 2) return {{"a", Scalar(2)}, {"b", Scalar(3)}};
  return {};
}

CremonaMap TypeRecord::map(const Bindings& b) const { return parse_map(formula, b); }

std::vector<BubblePoint> TypeRecord::points(const Bindings& b) const {
  std::vector<BubblePoint> out;
  for (const auto& s : base_points) out.push_back(parse_point(s, b));
  return out;
}

Decomposition TypeRecord::ordinary_decomposition(const Bindings& b) const {
  std::string text;
  for (size_t i = 0; i < ordinary.size(); ++i) {
    if (i) text += " o sigma o ";
    text += ordinary[i];
  }
  return parse_decomposition(text, b);
}

std::optional<Decomposition> TypeRecord::quadratic_decomposition(const Bindings& b) const {
  if (!quadratic) return std::nullopt;
  return parse_decomposition(*quadratic, b);
}

const std::vector<TypeRecord>& catalog() {
  static const std::vector<TypeRecord> c = [] {
    std::vector<TypeRecord> out;
    for (const Row& r : rows()) {
      TypeRecord t;
      t.id = r.id;
      t.formula = r.formula;
      t.param_count = r.params;
      t.inverse = r.inverse;
      t.oq = r.oq;
      t.q = r.id == 1 ? 3 : 2;
      t.base_points = r.points;
      t.ordinary = r.ordinary;
      if (r.quadratic) t.quadratic = std::string(r.quadratic);
      out.push_back(std::move(t));
    }
    return out;
  }();
  return c;
}

const TypeRecord& type_record(int id) {
  if (id < 1 || id > 31) throw InputError("type must be between 1 and 31, got " + std::to_string(id));
  return catalog()[id - 1];
}

Bindings bindings_for(int id, const std::vector<Scalar>& params) {
  const TypeRecord& t = type_record(id);
  if (static_cast<int>(params.size()) != t.param_count)
    throw InputError("type " + std::to_string(id) + " takes " + std::to_string(t.param_count) + " parameter(s)");
  if (t.param_count == 1) return {{"γ", params[0]}};
  if (t.param_count == 2) return {{"a", params[0]}, {"b", params[1]}};
  return {};
}

bool params_in_domain(int id, const std::vector<Scalar>& params) {
  const TypeRecord& t = type_record(id);
  if (static_cast<int>(params.size()) != t.param_count) return false;
  for (const Scalar& p : params)
    if (p.is_zero() || p.is_one()) return false;
  if (t.param_count == 2 && params[0] == params[1]) return false;
  return true;
}

const std::vector<NamedDecomposition>& classical_decompositions() {
  static const std::vector<NamedDecomposition> d = {
      {"rho", "[xy:z^2:yz]", "[x:z-y:z] o sigma o [x:y+z:z] o sigma o [x:y-z:z]"},
      {"tau", "[x^2:xy:y^2-xz]",
       "[y-x:2y-x:x-y+z] o sigma o [x+z:x:y] o sigma o [-y:x-3y+z:x] o sigma o [x+z:x:y] o sigma o "
       "[y-x:-2x+z:2x-y]"},
      {"type 7 (corrected)", "[x(x^2+yz):y(x^2+yz):xy^2]", "[x:z:y] o rho o [y:x+y:z] o rho o [z:y:x]"},
  };
  return d;
}

}  // namespace cremona
