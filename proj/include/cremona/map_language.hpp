#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cremona/bubble.hpp"
#include "cremona/cremona_map.hpp"

namespace cremona {

// Values substituted for named symbols while parsing.
using Bindings = std::map<std::string, Scalar>;

// Grammar (whitespace free):
//   map    := '[' expr ':' expr ':' expr ']'
//   point  := '[' expr ':' expr ':' expr ']' | '(' point (',' (expr | 'inf'))+ ')'
//   decomp := factor (('o' | '∘') factor)*
//   factor := '[' linear ':' linear ':' linear ']' | 'sigma' | 'rho' | 'tau' | 'id'
// Expressions use + - * / ^, implicit multiplication, integers, x y z and the
// parameters γ (or gamma), a, b. Division is only by constants.
HomPoly parse_form(std::string_view text, const Bindings& bindings = {});
CremonaMap parse_map(std::string_view text, const Bindings& bindings = {});
BubblePoint parse_point(std::string_view text, const Bindings& bindings = {});
Decomposition parse_decomposition(std::string_view text, const Bindings& bindings = {});
ProjAut parse_aut(std::string_view text, const Bindings& bindings = {});
Scalar parse_scalar(std::string_view text, const Bindings& bindings = {});

}  // namespace cremona
