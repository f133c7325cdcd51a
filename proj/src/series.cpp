#include "pellcf/series.hpp"

#include <stdexcept>

namespace pellcf {

int sqrt_admissible_half_degree(const Poly& D) {
  if (D.is_zero() || D.degree() == 0 || D.degree() % 2 != 0)
    throw std::domain_error("sqrt(D) needs even positive degree, got degree " + std::to_string(D.degree()));
  if (!rat_is_square(D.leading()))
    throw std::domain_error("leading coefficient " + rat_str(D.leading()) +
                            " of D is not a square in Q; scale D by a rational square to make it one");
  return D.degree() / 2;
}

std::vector<Rat> sqrt_series(const Poly& D, int n_terms) {
  int d = sqrt_admissible_half_degree(D);
  if (n_terms < 1) throw std::domain_error("sqrt_series needs at least one term");
  Rat lead;
  rat_is_square(D.leading(), &lead);
  std::vector<Rat> s(static_cast<size_t>(n_terms));
  s[0] = lead;
  Rat twice = 2 * lead;
  // Matching coefficients of t^(2d-m) in S^2 = D, solved for s_m.
  for (int m = 1; m < n_terms; ++m) {
    Rat acc = D.coeff(2 * d - m);
    for (int j = 1; j < m; ++j) acc -= s[static_cast<size_t>(j)] * s[static_cast<size_t>(m - j)];
    s[static_cast<size_t>(m)] = acc / twice;
  }
  return s;
}

Poly sqrt_floor(const Poly& D) {
  int d = sqrt_admissible_half_degree(D);
  std::vector<Rat> s = sqrt_series(D, d + 1);
  std::vector<Rat> asc(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) asc[static_cast<size_t>(d - k)] = s[static_cast<size_t>(k)];
  return Poly{asc};
}

}  // namespace pellcf
