#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/bubble.hpp"
#include "cremona/cremona_map.hpp"
#include "cremona/map_language.hpp"

namespace cremona {

// One of the 31 types of cubic plane Cremona maps.
struct TypeRecord {
  int id = 0;
  std::string formula;                  // map text, parameters γ or a, b
  int param_count = 0;                  // 0, 1 (γ) or 2 (a, b)
  int inverse = 0;                      // type of the inverse map
  int oq = 0;                           // ordinary quadratic length
  int q = 0;                            // quadratic length
  std::vector<std::string> base_points;  // p0 (double) .. p4, standard coordinates
  std::vector<std::string> ordinary;    // automorphisms a_n .. a_0 of the sigma decomposition
  std::optional<std::string> quadratic;  // decomposition into quadratic maps, if listed

  // Parameter values used for checks: γ = 3, (a, b) = (2, 3).
  Bindings reference_bindings() const;
  CremonaMap map(const Bindings& b) const;
  CremonaMap reference_map() const { return map(reference_bindings()); }
  std::vector<BubblePoint> points(const Bindings& b) const;
  // a_n o sigma o a_{n-1} o ... o sigma o a_0
  Decomposition ordinary_decomposition(const Bindings& b) const;
  std::optional<Decomposition> quadratic_decomposition(const Bindings& b) const;
};

const std::vector<TypeRecord>& catalog();
const TypeRecord& type_record(int id);  // throws InputError outside 1..31

// Bindings for a type's parameters: {γ} or {a, b}.
Bindings bindings_for(int id, const std::vector<Scalar>& params);

// The parameter domain: γ not in {0, 1}; a, b not in {0, 1} and a != b.
bool params_in_domain(int id, const std::vector<Scalar>& params);

// Classical decompositions.
struct NamedDecomposition {
  std::string name;
  std::string target;  // map text
  std::string factors;
};
const std::vector<NamedDecomposition>& classical_decompositions();

}  // namespace cremona
