#pragma once

#include <string>
#include <vector>

#include "pellcf/rational.hpp"

namespace pellcf {

// Dense bivariate polynomial: coeff(i, j) multiplies s^i z^j.
struct Bivar {
  std::vector<std::vector<Rat>> c;  // c[i][j]

  static Bivar zero() { return {}; }
  static Bivar monomial(const Rat& v, int i, int j);

  Rat coeff(int i, int j) const;
  bool is_zero() const;
  int total_degree() const;                  // -1 for zero
  bool is_homogeneous(int degree) const;
  bool operator==(const Bivar& o) const;

  Bivar operator-() const;
  Bivar operator+(const Bivar& o) const;
  Bivar operator-(const Bivar& o) const;
  Bivar scaled(const Rat& v) const;
  Bivar derivative_s() const;
  Bivar times_s() const;
  Bivar times_s_minus_z() const;

  // Exponent reversal within total degree deg: (i, j) -> (deg - i, deg - j).
  // Meaningful for homogeneous grids (substituting 1/s, 1/z and clearing
  // the monomial (s z)^deg).
  Bivar reciprocal(int degree) const;

  void trim();
};

std::string to_string(const Bivar& b);  // "s^2*z + 4*s*z^2" style

// Rational function numerator / (s - z)^pole_order; the numerator is kept
// coprime to s - z.
struct RatFun2 {
  Bivar numerator;
  int pole_order = 0;

  bool operator==(const RatFun2& o) const { return pole_order == o.pole_order && numerator == o.numerator; }
};

// F_0 = s / (s - z) and F_{k+1} = s * d/ds F_k, exactly on the
// representation: N' = s (dN/ds (s - z) - pole_order N), pole order + 1.
std::vector<RatFun2> fk_sequence(int k_max);

// The mirrored derivation: the same iteration run in the inverted variables
// (1/s, 1/z) starting from the logarithmic derivative there, then mapped
// back by clearing the monomial factors. Computed independently of
// fk_sequence so the two routes can be compared.
std::vector<RatFun2> gk_sequence(int k_max);

// Coordinates of the class of (infinity_-) - (infinity_+) in the
// multiplicative-additive product group attached to multiplicities e.
struct IDeltaComponents {
  std::vector<std::string> multiplicative;  // "b1^2", ..., one per root
  std::vector<std::vector<Rat>> additive;   // per root: e_i - 1 entries, [2, 0, 0, ...]
  std::string note;
};

IDeltaComponents i_delta_components(const std::vector<int>& e);

}  // namespace pellcf
