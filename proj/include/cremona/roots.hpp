#pragma once

#include <optional>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

// Univariate polynomial over Q, lowest degree coefficient first.
using UPoly = std::vector<Rational>;

void upoly_trim(UPoly& f);
int upoly_degree(const UPoly& f);
Rational upoly_eval(const UPoly& f, const Rational& t);
UPoly upoly_gcd(UPoly a, UPoly b);
UPoly upoly_derivative(const UPoly& f);
UPoly upoly_squarefree(const UPoly& f);

// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const UPoly& f);

std::optional<Rational> rational_cube_root(const Rational& q);

}  // namespace cremona
