#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/bubble.hpp"
#include "cremona/cremona_map.hpp"
#include "json.hpp"

namespace cremona {

struct BasePoint {
  BubblePoint point;
  int mult = 0;
};

// A line through three simple base points of a cubic map.
struct UnexpectedLine {
  HomPoly line;
  std::array<int, 3> members{};  // entry indices, increasing
};

struct BasePointTree {
  int degree = 0;
  std::vector<BasePoint> entries;          // proper points first in each chain, depth first
  std::vector<std::pair<int, int>> arrows;  // (i, j): entry i is proximate to entry j
  std::vector<bool> satellite;              // entry is satellite to some entry
  std::optional<UnexpectedLine> line;

  int sum_mult() const;
  int sum_mult_squared() const;
  bool noether_holds() const;
  // Index of the first violated proximity inequality, if any.
  std::optional<int> proximity_violation() const;
  int index_of(const BubblePoint& p) const;  // -1 when absent
};

// Proper base points: common zeros of the three components.
std::vector<Vec3> proper_base_points(const CremonaMap& f);

// Multiplicity of the net of f at a bubble point: 0 unless the point is a base point.
int net_multiplicity(const CremonaMap& f, const BubblePoint& p);

// Base points with multiplicities, proximities and the unexpected line (cubic maps).
// Throws UnsupportedError for symbolic parameters or irrational base points and
// NotBirationalError when the Noether equations fail.
BasePointTree resolve_base_points(const CremonaMap& f);

// The unique line through three simple base points of a cubic tree, if any.
std::optional<UnexpectedLine> find_unexpected_line(const BasePointTree& t);

nlohmann::json tree_to_json(const BasePointTree& t);

}  // namespace cremona
