#include "pellcf/roots.hpp"

#include <algorithm>

namespace pellcf {

namespace {

AppComplex eval_poly(const std::vector<AppComplex>& c, const AppComplex& z) {
  AppComplex acc(z.prec());
  for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

std::vector<AppComplex> derivative(const std::vector<AppComplex>& c, mpfr_prec_t prec) {
  std::vector<AppComplex> d;
  for (size_t i = 1; i < c.size(); ++i)
    d.push_back(c[i] * AppComplex::of(Rat(static_cast<long>(i)), 0, prec));
  return d;
}

}  // namespace

std::vector<AppComplex> simultaneous_roots(const std::vector<AppComplex>& coeffs, mpfr_prec_t precision_bits) {
  if (coeffs.size() < 2 || coeffs.back().is_zero())
    throw std::invalid_argument("simultaneous_roots needs degree >= 1 and a nonzero leading coefficient");
  mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, BigFloat::kMinPrec);
  const mpfr_prec_t wp = prec + 96;
  const size_t n = coeffs.size() - 1;

  std::vector<AppComplex> c(coeffs.size(), AppComplex(wp));
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] / coeffs.back();
  std::vector<AppComplex> cd = derivative(c, wp);

  // Fujiwara bound for monic p: every root lies within 2 max_k |c_{n-k}|^(1/k).
  BigFloat radius = BigFloat::of(1, wp);
  for (size_t k = 1; k <= n; ++k) {
    BigFloat m = c[n - k].abs();
    if (m.is_zero()) continue;
    BigFloat root(wp);
    mpfr_rootn_ui(root.raw(), m.raw(), static_cast<unsigned long>(k), MPFR_RNDU);
    if (root > radius) radius = root;
  }
  radius = radius * BigFloat::of(2, wp);

  std::vector<AppComplex> z(n, AppComplex(wp));
  BigFloat two_pi = BigFloat::of(2, wp) * BigFloat::pi(wp);
  for (size_t k = 0; k < n; ++k) {
    Rat frac(static_cast<long>(k), static_cast<long>(n));
    frac.canonicalize();
    BigFloat theta = two_pi * BigFloat::of(frac, wp) + BigFloat::of(Rat(2, 5), wp);
    z[k] = AppComplex(radius * theta.cos(), radius * theta.sin());
  }

  const BigFloat step_eps = BigFloat::pow2(-static_cast<long>(prec) - 8, wp);
  const BigFloat one = BigFloat::of(1, wp);
  const int max_sweeps = 400 + 20 * static_cast<int>(n);
  bool settled = false;
  for (int sweep = 0; sweep < max_sweeps && !settled; ++sweep) {
    settled = true;
    for (size_t i = 0; i < n; ++i) {
      AppComplex num = eval_poly(c, z[i]);
      AppComplex den = AppComplex::one(wp);
      for (size_t j = 0; j < n; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      if (den.is_zero()) {
        // Coincident iterates: nudge and retry next sweep.
        z[i] = z[i] + AppComplex(radius * BigFloat::pow2(-4 - sweep, wp), BigFloat(wp));
        settled = false;
        continue;
      }
      AppComplex delta = num / den;
      z[i] = z[i] - delta;
      if (delta.abs() > step_eps * (one + z[i].abs())) settled = false;
    }
  }

  // Certify: a disk of radius n |p(z)/p'(z)| around z contains a root.
  const BigFloat target = BigFloat::pow2(-static_cast<long>(prec) / 2 - 1, wp);
  BigFloat worst(wp);
  bool ok = true;
  for (size_t i = 0; i < n; ++i) {
    AppComplex pv = eval_poly(c, z[i]);
    AppComplex dv = eval_poly(cd, z[i]);
    if (dv.is_zero()) {
      ok = false;
      break;
    }
    BigFloat bound = BigFloat::of(static_cast<long>(n), wp) * pv.abs() / dv.abs();
    if (bound > worst) worst = bound;
    if (bound > target) ok = false;
  }
  if (!ok)
    throw RootsNoConvergence("root iteration did not certify at the requested precision; achieved residual " +
                                 worst.str(12),
                             worst.str(12));
  return z;
}

std::vector<AppComplex> complex_roots(const Poly& a, mpfr_prec_t precision_bits) {
  if (a.is_zero() || a.degree() < 1)
    throw std::invalid_argument("complex_roots needs a nonconstant polynomial");
  mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, BigFloat::kMinPrec);
  const BigFloat snap = BigFloat::pow2(-static_cast<long>(prec) / 2 - 1, prec);

  std::vector<AppComplex> out;
  for (const auto& [factor, mult] : squarefree_decomposition(a)) {
    std::vector<AppComplex> roots;
    if (factor.degree() == 1) {
      roots.push_back(AppComplex::of(-factor.coeff(0) / factor.coeff(1), 0, prec));
    } else {
      std::vector<AppComplex> c;
      for (const Rat& r : factor.coeffs()) c.push_back(AppComplex::of(r, 0, prec));
      roots = simultaneous_roots(c, prec);
      // Rational coefficients: an imaginary part below the certified radius
      // is numerical residue on a real root.
      for (auto& z : roots) {
        if (!z.im.is_zero() && z.im.abs() <= snap) z.im = BigFloat(z.im.prec());
      }
    }
    for (int k = 0; k < mult; ++k)
      for (const auto& z : roots) out.push_back(z);
  }
  std::sort(out.begin(), out.end(), [](const AppComplex& x, const AppComplex& y) {
    int c = x.re.cmp(y.re);
    if (c != 0) return c < 0;
    return x.im.cmp(y.im) < 0;
  });
  return out;
}

}  // namespace pellcf
