#pragma once

#include "regprime/polynomial.hpp"

namespace regprime {

// Res(f, g) with the convention Res(f, g) = lc(f)^deg(g) * prod g(alpha_i)
// over the roots alpha_i of f, so Res(x - a, x - b) = a - b. Computed by the
// fraction-free subresultant PRS after clearing denominators.
// Throws std::domain_error("undefined resultant") on zero input.
Rational resultant(const Polynomial& f, const Polynomial& g);

}  // namespace regprime
