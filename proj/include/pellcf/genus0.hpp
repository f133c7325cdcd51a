#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pellcf/bigfloat.hpp"
#include "pellcf/cf.hpp"
#include "pellcf/poly.hpp"

namespace pellcf {

// Decomposition D = c (t^2 - 1) D1^2 with D1 monic and the support data the
// torsion census needs.
struct Genus0Analysis {
  Rat c;
  Poly D1;
  int d = 0;  // deg D1 + 1
  int g = 0;  // number of distinct roots of D1
  std::vector<std::pair<Poly, int>> e_multiplicities;
  bool is_squarefree = false;
  int r = 0;                        // roots of D1 whose unit b is a root of unity
  Poly unity_factor;                // U: monic product of (t - rho) over those roots
  Poly nonunity_factor;             // squarefree(D1) / U
  Poly D_p;                         // (t^2 - 1) U^2
  std::vector<AppComplex> rho_numeric;  // distinct roots, sorted
  std::vector<AppComplex> b_numeric;    // rho + sqrt(rho^2 - 1), branch |b| >= 1
  bool pellian = false;
  int max_recurring_degree_bound = 0;  // r + 1
};

// Splits D as c (t^2 - 1) D1^2, throwing a distinct message when D is not a
// multiple of t^2 - 1, when the cofactor is not a constant times a perfect
// square, and when D1(+-1) = 0.
std::pair<Rat, Poly> decompose(const Poly& D);

// Exact root-of-unity census via the Chebyshev gcd sweep, plus the numeric
// root layer at the given precision.
Genus0Analysis analyze(const Poly& D, mpfr_prec_t precision_bits);

// ---- generic value helpers (exact Rat or numeric AppComplex) -------------

inline Rat value_one(const Rat&) { return Rat(1); }
inline AppComplex value_one(const AppComplex& like) { return AppComplex::one(like.prec()); }

inline Rat value_inverse(const Rat& v) {
  if (v == 0) throw std::domain_error("inverse of zero");
  return 1 / v;
}
inline AppComplex value_inverse(const AppComplex& v) { return v.inverse(); }

inline bool value_equal(const Rat& a, const Rat& b) { return a == b; }
inline bool value_equal(const AppComplex& a, const AppComplex& b) { return (a - b).is_zero(); }

Rat value_pow(const Rat& v, long n);
inline AppComplex value_pow(const AppComplex& v, long n) { return v.pow(n); }

// Antisymmetric product prod_{i<j} (u_i - u_j); 1 on a single value.
template <class V>
V h_antisym(const std::vector<V>& u) {
  if (u.empty()) throw std::invalid_argument("h_antisym needs at least one value");
  V acc = value_one(u.front());
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j) acc = acc * (u[i] - u[j]);
  return acc;
}

// Multilinear equation cutting out the closure of the codimension-one locus
// swept by products of g-1 point classes. coeff is indexed by the bitmask A
// (bit i set means x_i appears): coeff(A) = (-1)^|A| H(b_i^{1-2a_i}).
template <class V>
struct WEquation {
  int g = 0;
  std::vector<V> coeff;  // size 2^g
  std::vector<V> b;
};

template <class V>
WEquation<V> build_w_equation(const std::vector<V>& b) {
  const size_t g = b.size();
  if (g == 0) throw std::invalid_argument("build_w_equation needs at least one value");
  std::vector<V> inv;
  inv.reserve(g);
  V one = value_one(b.front());
  for (const V& v : b) {
    if (value_equal(v, V{}) || value_equal(v, one) || value_equal(v, -one))
      throw std::domain_error("b values must avoid 0 and +-1");
    inv.push_back(value_inverse(v));
  }
  for (size_t i = 0; i < g; ++i)
    for (size_t j = i + 1; j < g; ++j)
      if (value_equal(b[i], b[j]) || value_equal(b[i], inv[j]))
        throw std::domain_error("b values and their inverses must be pairwise distinct");

  WEquation<V> w;
  w.g = static_cast<int>(g);
  w.b = b;
  w.coeff.reserve(size_t{1} << g);
  std::vector<V> u(g, one);
  for (size_t mask = 0; mask < (size_t{1} << g); ++mask) {
    int bits = 0;
    for (size_t i = 0; i < g; ++i) {
      if (mask & (size_t{1} << i)) {
        u[i] = inv[i];
        ++bits;
      } else {
        u[i] = b[i];
      }
    }
    V h = h_antisym(u);
    w.coeff.push_back(bits % 2 == 0 ? h : -h);
  }
  return w;
}

template <class V>
V eval_w_equation(const WEquation<V>& w, const std::vector<V>& x) {
  if (x.size() != static_cast<size_t>(w.g)) throw std::invalid_argument("point arity does not match the equation");
  V acc{};  // zero
  for (size_t mask = 0; mask < w.coeff.size(); ++mask) {
    V term = w.coeff[mask];
    for (size_t i = 0; i < x.size(); ++i)
      if (mask & (size_t{1} << i)) term = term * x[i];
    acc = acc + term;
  }
  return acc;
}

// Argument of the product map: a point of P^1, either finite or infinity.
template <class V>
struct ProjPoint {
  bool infinite = false;
  V value{};

  static ProjPoint at(V v) { return {false, std::move(v)}; }
  static ProjPoint infinity() { return {true, V{}}; }
};

// Coordinates of the product map: prod_j (z_j - b_i) / (z_j - 1/b_i) per i.
// A point at infinity contributes the factor 1. Throws when a z_j collides
// with some b_i^{+-1}.
template <class V>
std::vector<V> eval_psi(const std::vector<ProjPoint<V>>& z, const std::vector<V>& b) {
  std::vector<V> out;
  out.reserve(b.size());
  for (const V& bi : b) {
    V num_den[2] = {value_one(bi), value_one(bi)};
    V binv = value_inverse(bi);
    for (const auto& zj : z) {
      if (zj.infinite) continue;
      V num = zj.value - bi;
      V den = zj.value - binv;
      if (value_equal(num, V{}) || value_equal(den, V{}))
        throw std::domain_error("psi argument collides with a marked value b^(+-1)");
      num_den[0] = num_den[0] * num;
      num_den[1] = num_den[1] * den;
    }
    out.push_back(num_den[0] / num_den[1]);
  }
  return out;
}

template <class V>
struct DeltaPoint {
  std::vector<V> coords;  // coordinate i is b_i^(2n)
  long n = 0;
};

template <class V>
DeltaPoint<V> delta_power(const std::vector<V>& b, long n) {
  DeltaPoint<V> p;
  p.n = n;
  p.coords.reserve(b.size());
  for (const V& bi : b) p.coords.push_back(value_pow(bi * bi, n));
  return p;
}

// ---- degree bookkeeping ---------------------------------------------------

// The minimal-stratum sequence attached to a degree sequence (degrees[0]
// must equal d = g + 1): it climbs by 1 up to g and, at each position
// deg p_m = d + deg a_1 + ... + deg a_{m-1}, drops to d - deg a_m. Output
// covers positions 0..deg p_N.
std::vector<int> ln_from_degrees(const std::vector<int>& degrees, int g, int d);

// Inverse of ln_from_degrees on admissible sequences.
std::vector<int> degrees_from_ln(const std::vector<int>& ln, int g, int d);

// ---- consistency verifier -------------------------------------------------

struct FVanishCheck {
  int index = 0;      // partial quotient index m
  long power = 0;     // n = deg p_m
  int degree = 0;     // deg a_m
  std::string f_abs;  // |f(i(delta^n))|
  bool pass = false;
};

struct DpMatch {
  int index = 0;
  int degree = 0;
  bool divisible = false;   // nonunity factor divides p_m
  bool convergent = false;  // (p_m / V, q_m) is a convergent of sqrt(D_p)
};

struct ConsistencyReport {
  Genus0Analysis analysis;
  std::vector<int> degree_sequence;
  std::optional<std::pair<int, int>> cf_period;
  std::optional<std::pair<int, int>> degree_period;
  bool geometry_checked = false;
  std::vector<FVanishCheck> f_checks;                   // quotients of degree >= 2
  std::vector<std::pair<int, int>> high_degree_census;  // (m, deg a_m) with deg >= r + 2, m >= 1
  std::vector<DpMatch> dp_matches;                      // quotients of degree >= d - r
  std::vector<std::string> warnings;
};

// Cross-checks the expansion of sqrt(D) against the torsion census:
// (a) the equation of the codimension-one locus vanishes on delta^(deg p_m)
// whenever deg a_m >= 2, (b) census of degrees >= r+2 past index 0,
// (c) quotients of degree >= d-r factor through the Pellian part.
// Hypothesis failures are reported in warnings, not thrown.
ConsistencyReport verify_consistency(const Poly& D, int steps, mpfr_prec_t precision_bits, const Rat& tolerance);

// ---- example generator ----------------------------------------------------

struct GeneratedExample {
  int l = 0, p = 0, q = 0;
  Rat h;
  std::vector<AppComplex> b;
  std::vector<AppComplex> d_coeffs;  // ascending, degree 2(p+q)+2
  std::optional<Poly> d_exact;       // present when every coefficient reconstructs
};

// Family with b_i = w^i (1 <= i <= p) and b_{p+j} = h w^(2j) (1 <= j <= q)
// for w a primitive 2l-th root of unity; D = (t^2-1) prod (t - rho_i)^2.
GeneratedExample gen_example(int l, int p, int q, const Rat& h, mpfr_prec_t precision_bits);

}  // namespace pellcf
