#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/catalog.hpp"
#include "cremona/resolve.hpp"
#include "json.hpp"

namespace cremona {

struct ClassificationResult {
  int degree = 0;
  int type = 0;           // 1..31 for cubic maps, 0 otherwise
  std::string kind;       // "cubic", "sigma", "rho", "tau" or "linear"
  std::vector<Scalar> params;            // as extracted
  std::vector<Scalar> canonical_params;  // orbit minimum (rational parameters)
  std::vector<std::vector<Scalar>> orbit;
  // post o input o pre equals the reference map (catalog formula at params, or sigma).
  bool has_witness = false;
  ProjAut pre, post;
  std::optional<BasePointTree> tree;
};

ClassificationResult classify(const CremonaMap& f);

// The catalog formula, or sigma / the identity for quadratic and linear results.
CremonaMap reference_map(const ClassificationResult& r);
bool verify_witness(const CremonaMap& input, const ClassificationResult& r);

// All parameter values giving maps equivalent to the given one, without repetitions.
// Rational orbits are sorted; the first member is the canonical representative.
std::vector<std::vector<Scalar>> param_orbit(int type, const std::vector<Scalar>& params);
std::vector<Scalar> canonical_params(int type, const std::vector<Scalar>& params);

// Automorphism a with a(base points of phi_{type,params}) = base points of phi_{type,image}.
struct OrbitMove {
  std::string aut;    // text in the parameters
  std::vector<std::string> image;  // parameter formulas
};
const std::vector<OrbitMove>& orbit_moves(int type);

struct Equivalence {
  bool equivalent = false;
  ClassificationResult first, second;
  // post o second o pre equals first.
  bool has_witness = false;
  ProjAut pre, post;
};

Equivalence equivalent(const CremonaMap& m1, const CremonaMap& m2);

// post with f = post o g as normalized maps, if the nets agree.
std::optional<ProjAut> post_factor(const CremonaMap& g, const CremonaMap& f);

nlohmann::json params_to_json(const std::vector<Scalar>& p);
nlohmann::json aut_to_json(const ProjAut& a);
nlohmann::json result_to_json(const ClassificationResult& r);
nlohmann::json equivalence_to_json(const Equivalence& e);

}  // namespace cremona
