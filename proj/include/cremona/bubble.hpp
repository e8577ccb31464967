#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/algebra.hpp"

namespace cremona {

// Direction coordinate in a blow-up chart; nullopt is the direction at infinity.
using Slope = std::optional<Scalar>;

// Point of the bubble space: a proper point followed by successive chart coordinates.
struct BubblePoint {
  Vec3 base;
  std::vector<Slope> tail;

  BubblePoint() : base{Scalar(1), Scalar(0), Scalar(0)} {}
  BubblePoint(const Vec3& b, std::vector<Slope> t = {});

  int order() const { return static_cast<int>(tail.size()); }
  bool is_proper() const { return tail.empty(); }
  BubblePoint parent() const;
  BubblePoint child(const Slope& s) const;
  bool is_infinitely_near(const BubblePoint& q) const;  // strictly, q precedes this point
  std::string to_string() const;

  friend bool operator==(const BubblePoint& a, const BubblePoint& b);
  friend bool operator!=(const BubblePoint& a, const BubblePoint& b) { return !(a == b); }
};

std::string slope_to_string(const Slope& s);
bool slope_less(const Slope& a, const Slope& b);

// Local equation of a curve at a bubble point: the proper chart translated to the
// origin, then the strict transform along the tail.
LocalPoly localize(const HomPoly& f, const BubblePoint& p);
// Affine chart of a proper point: f in local coordinates (X, Y) centred at the point.
LocalPoly proper_chart(const HomPoly& f, const Vec3& p);
// One blow-up step: substitute the chart for slope s and divide by u^m.
LocalPoly blow_up(const LocalPoly& g, const Slope& s, int m);
int order_at_origin(const LocalPoly& g);

int multiplicity(const HomPoly& f, const BubblePoint& p);
bool passes_through(const HomPoly& f, const BubblePoint& p);

// p is proximate to q: p lies on the strict transform of the exceptional curve of q.
bool proximate(const BubblePoint& p, const BubblePoint& q);
// p is proximate to q but not in the first neighbourhood of q.
bool satellite(const BubblePoint& p, const BubblePoint& q);

// Line through a proper point and either another proper point or a direction at the first.
HomPoly line_through(const BubblePoint& a, const BubblePoint& b);

// Three points lying on a common line (in the bubble sense); returns the indices if any.
std::optional<std::array<int, 3>> collinear_triple(const std::vector<BubblePoint>& pts);

struct ConicResult {
  HomPoly conic;
  std::string lemma;  // configuration name: proper, conic1, conic2, conic3, conic3b, conic4, conic5
};

// The irreducible conic through five bubble points.
ConicResult conic_through(const std::vector<BubblePoint>& pts);

// Automorphism a with a(C1) = C2 and a(marks1[i]) = marks2[i]; at most three proper marks.
ProjAut conic_marked_aut(const HomPoly& c1, const std::vector<Vec3>& marks1, const HomPoly& c2,
                         const std::vector<Vec3>& marks2);

}  // namespace cremona
