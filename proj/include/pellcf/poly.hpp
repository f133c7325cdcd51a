#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellcf/rational.hpp"

namespace pellcf {

// Dense univariate polynomial over Rat in the variable t.
// coeffs()[k] is the coefficient of t^k and the top entry is nonzero; the
// zero polynomial stores nothing and reports degree() == -1.
class Poly {
 public:
  Poly() = default;
  Poly(int constant) : Poly(Rat(constant)) {}
  Poly(const Rat& constant);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly t();
  static Poly monomial(const Rat& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rat& leading() const;
  Rat coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);
  Poly& operator/=(const Rat& s);  // s != 0

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Rat& s) { return a /= s; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly monic() const;  // nonzero input
  Poly pow(unsigned k) const;

 private:
  std::vector<Rat> c_;
  void normalize();
};

// a = q*b + r with deg r < deg b; throws on b == 0.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

// Division known to be exact; throws if a remainder shows up.
Poly poly_div_exact(const Poly& a, const Poly& b);

// Monic gcd; gcd(a, 0) = monic(a); throws if both are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

// (a / gcd(a, a') made monic, deg gcd == 0). Throws on zero input.
std::pair<Poly, bool> squarefree_part(const Poly& a);

// Yun decomposition: pairs (factor, multiplicity) with the factors monic,
// squarefree, pairwise coprime and a ~ prod factor^multiplicity.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a);

// Exact polynomial square root, if a is a perfect square in Q[t].
std::optional<Poly> poly_sqrt_exact(const Poly& a);

enum class ChebKind { first, second };

// T_k or U_k by the recurrence X_{k+1} = 2t X_k - X_{k-1}.
Poly chebyshev(ChebKind kind, int k);

// Canonical printer: descending powers, t^k notation, exact coefficients.
std::string to_string(const Poly& p);

}  // namespace pellcf
