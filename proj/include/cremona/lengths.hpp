#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/resolve.hpp"
#include "json.hpp"

namespace cremona {

struct HeightEntry {
  BubblePoint point;
  int mult = 0;
  int height = 0;
  std::optional<int> load;  // proper base points only
};

struct HeightReport {
  int degree = 0;
  std::vector<HeightEntry> entries;
  int max_height = 0;
};

HeightReport heights(const CremonaMap& f);
// 0 off the base locus, 1 at proper base points, n + 1 at base points of order n.
int height_at(const CremonaMap& f, const BubblePoint& p);

// Some base point has multiplicity d - 1.
bool is_de_jonquieres(const BasePointTree& t);
int oq_lower_bound(const CremonaMap& f);

struct DecompositionReport {
  bool equal = false;
  CremonaMap composed;
  // Degrees of the partial compositions, innermost factor first.
  std::vector<int> partial_degrees;
  int sigma = 0, rho = 0, tau = 0;
  int quadratic = 0;
  // Per quadratic factor, innermost first: "ordinary", "second" or "third" from the proper base points.
  std::vector<std::string> quadratic_kinds;
  // Each quadratic step has the degree predicted from the multiplicities of the inverse so far.
  bool degree_drop_consistent = true;
  std::vector<std::string> discrepancies;
};

// Factors are listed outermost first.
DecompositionReport verify_decomposition(const CremonaMap& target, const Decomposition& factors);

// rho = A o sigma o A^{-1} with A the automorphism whose columns are s_i p_i.
struct InvolutoryQuadratic {
  std::array<Vec3, 3> points;
  ProjAut frame;
  CremonaMap map;
  // Side opposite points[i].
  HomPoly side(int i) const;
};

InvolutoryQuadratic involutory_quadratic(const std::array<Vec3, 3>& points,
                                         const std::array<Scalar, 3>& scales = {Scalar(1), Scalar(1), Scalar(1)});

// The point corresponding to p via rho. Throws UnsupportedError outside the implemented cases.
BubblePoint transport_point(const BubblePoint& p, const InvolutoryQuadratic& rho);

struct LengthFacts {
  int type = 0;
  int q = 0;
  int oq = 0;
  int max_height = 0;
  int lower_bound = 0;
  bool height_sharp = false;  // listed in height_sharp_types
  int ordinary_factors = 0;   // sigma count of the ordinary decomposition
  int quadratic_factors = 0;  // quadratic count of the listed quadratic decomposition (oq when none is listed)
  std::string upper_source;
};

// Types whose oq is attained by oq_lower_bound.
const std::vector<int>& height_sharp_types();
LengthFacts length_facts(int type);

nlohmann::json heights_to_json(const HeightReport& r);
nlohmann::json decomposition_to_json(const DecompositionReport& r);
nlohmann::json length_facts_to_json(const LengthFacts& f);

}  // namespace cremona
