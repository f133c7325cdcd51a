#pragma once

#include <stdexcept>
#include <vector>

#include "pellcf/bigfloat.hpp"
#include "pellcf/poly.hpp"

namespace pellcf {

struct RootsNoConvergence : std::runtime_error {
  std::string achieved_residual;
  RootsNoConvergence(const std::string& what, std::string residual)
      : std::runtime_error(what), achieved_residual(std::move(residual)) {}
};

// Simultaneous (Durand-Kerner) iteration on arbitrary complex coefficients,
// ascending order with a nonzero top entry; the roots are expected simple.
// Each result is certified within 2^(-precision_bits/2 - 1) of a true root
// via the bound min_k |z - r_k| <= n |p(z)/p'(z)|.
std::vector<AppComplex> simultaneous_roots(const std::vector<AppComplex>& coeffs, mpfr_prec_t precision_bits);

// All complex roots of a rational polynomial, with multiplicity (recovered
// through the squarefree decomposition, no deflation), each within
// 2^(-precision_bits/2) of a true root, sorted by (re, im).
std::vector<AppComplex> complex_roots(const Poly& a, mpfr_prec_t precision_bits);

}  // namespace pellcf
