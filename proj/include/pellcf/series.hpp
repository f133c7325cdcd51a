#pragma once

#include <vector>

#include "pellcf/poly.hpp"

namespace pellcf {

// Checks deg D = 2d > 0 with a leading coefficient that is a square in Q,
// returning d. Throws std::domain_error otherwise.
int sqrt_admissible_half_degree(const Poly& D);

// First n_terms coefficients of the branch of sqrt(D) in Q((1/t)) whose
// leading coefficient is the positive square root of lc(D); entry k is the
// coefficient of t^(d-k).
std::vector<Rat> sqrt_series(const Poly& D, int n_terms);

// Polynomial part A of sqrt(D): deg A = d and deg(A^2 - D) < d.
Poly sqrt_floor(const Poly& D);

}  // namespace pellcf
