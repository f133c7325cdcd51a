#include "pellcf/genus0.hpp"

#include <algorithm>

#include "pellcf/roots.hpp"
#include "pellcf/series.hpp"

namespace pellcf {

Rat value_pow(const Rat& v, long n) {
  if (n < 0) {
    if (v == 0) throw std::domain_error("negative power of zero");
    return value_pow(1 / v, -n);
  }
  Rat acc(1), base(v);
  unsigned long k = static_cast<unsigned long>(n);
  while (k > 0) {
    if (k & 1ul) acc *= base;
    base *= base;
    k >>= 1ul;
  }
  return acc;
}

std::pair<Rat, Poly> decompose(const Poly& D) {
  if (D.is_zero()) throw std::invalid_argument("decompose needs D != 0");
  Poly t2m1{std::vector<Rat>{-1, 0, 1}};
  auto [quot, rem] = poly_divrem(D, t2m1);
  if (!rem.is_zero()) throw std::domain_error("D is not divisible by t^2 - 1");
  Rat c = quot.leading();
  std::optional<Poly> d1 = poly_sqrt_exact(quot / c);
  if (!d1) throw std::domain_error("D / (t^2 - 1) is not a constant times a perfect square");
  if (d1->eval(1) == 0 || d1->eval(-1) == 0)
    throw std::domain_error("the square factor vanishes at t = 1 or t = -1; its roots must avoid +-1");
  return {c, *d1};
}

namespace {

// Largest N with phi(N) <= target; phi(n) >= sqrt(n/2) makes the sweep
// window 8 target^2 + 8 safe.
int torsion_order_bound(int target) {
  int limit = 8 * target * target + 8;
  std::vector<int> phi(static_cast<size_t>(limit) + 1);
  for (int i = 0; i <= limit; ++i) phi[static_cast<size_t>(i)] = i;
  for (int i = 2; i <= limit; ++i) {
    if (phi[static_cast<size_t>(i)] == i) {  // prime
      for (int j = i; j <= limit; j += i) phi[static_cast<size_t>(j)] -= phi[static_cast<size_t>(j)] / i;
    }
  }
  int best = 1;
  for (int n = 1; n <= limit; ++n)
    if (phi[static_cast<size_t>(n)] <= target) best = n;
  return best;
}

// lcm over N <= B of gcd(f, T_N - 1), computed with the Chebyshev
// recurrence reduced mod f. A root rho of the result has rho = (b + 1/b)/2
// for a root of unity b, because T_N(rho) = 1 forces b^N = 1.
Poly unity_factor_sweep(const Poly& f, int bound) {
  Poly acc(1);
  Poly prev = poly_divrem(Poly(1), f).second;       // T_0 mod f
  Poly cur = poly_divrem(Poly::t(), f).second;      // T_1 mod f
  Poly twot = Poly::monomial(2, 1);
  for (int n = 1; n <= bound; ++n) {
    Poly tn_minus_1 = cur - Poly(1);
    Poly g = tn_minus_1.is_zero() ? f : poly_gcd(f, tn_minus_1);
    if (g.degree() > 0) acc = poly_div_exact(acc * g, poly_gcd(acc, g));
    Poly next = poly_divrem(twot * cur - prev, f).second;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return acc.monic();
}

}  // namespace

Genus0Analysis analyze(const Poly& D, mpfr_prec_t precision_bits) {
  Genus0Analysis an;
  std::tie(an.c, an.D1) = decompose(D);
  auto [sf, is_sf] = squarefree_part(an.D1);
  an.is_squarefree = is_sf;
  an.e_multiplicities = squarefree_decomposition(an.D1);
  an.g = std::max(sf.degree(), 0);
  an.d = an.D1.degree() + 1;

  an.unity_factor = Poly(1);
  if (an.g > 0) {
    int bound = torsion_order_bound(2 * an.D1.degree());
    an.unity_factor = unity_factor_sweep(sf, bound);
  }
  an.r = std::max(an.unity_factor.degree(), 0);
  an.nonunity_factor = poly_div_exact(sf, an.unity_factor);
  Poly t2m1{std::vector<Rat>{-1, 0, 1}};
  an.D_p = t2m1 * an.unity_factor * an.unity_factor;
  an.pellian = an.is_squarefree && an.r == an.g;
  an.max_recurring_degree_bound = an.r + 1;

  if (an.g > 0) {
    an.rho_numeric = complex_roots(sf, precision_bits);
    mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, BigFloat::kMinPrec);
    AppComplex one = AppComplex::one(prec);
    for (const AppComplex& rho : an.rho_numeric) {
      AppComplex w = (rho * rho - one).sqrt();
      AppComplex hi = rho + w, lo = rho - w;
      int cmp = hi.abs().cmp(lo.abs());
      if (cmp > 0) {
        an.b_numeric.push_back(hi);
      } else if (cmp < 0) {
        an.b_numeric.push_back(lo);
      } else {
        an.b_numeric.push_back(hi.im.sign() >= 0 ? hi : lo);
      }
    }
  }
  return an;
}

std::vector<int> ln_from_degrees(const std::vector<int>& degrees, int g, int d) {
  if (d != g + 1) throw std::invalid_argument("d must equal g + 1");
  if (degrees.empty() || degrees[0] != d)
    throw std::invalid_argument("the degree sequence must start with deg a_0 = d");
  for (size_t m = 1; m < degrees.size(); ++m) {
    if (degrees[m] < 1 || degrees[m] > d)
      throw std::invalid_argument("partial quotient degrees must lie in [1, d] from index 1 on");
  }
  const int M = static_cast<int>(degrees.size()) - 1;
  // Drop positions are the convergent degrees deg p_m.
  std::vector<long> pos(static_cast<size_t>(M) + 1);
  pos[0] = 0;
  long acc = d;
  for (int m = 1; m <= M; ++m) {
    pos[static_cast<size_t>(m)] = acc;
    acc += degrees[static_cast<size_t>(m)];
  }
  long horizon = M >= 1 ? pos[static_cast<size_t>(M)] : g;
  std::vector<int> l(static_cast<size_t>(horizon) + 1);
  for (int n = 0; n <= g && n <= horizon; ++n) l[static_cast<size_t>(n)] = n;
  for (int m = 1; m <= M; ++m) {
    long at = pos[static_cast<size_t>(m)];
    l[static_cast<size_t>(at)] = d - degrees[static_cast<size_t>(m)];
    long stop = (m < M ? pos[static_cast<size_t>(m) + 1] : at + 1) - 1;
    for (long n = at + 1; n <= stop && n <= horizon; ++n)
      l[static_cast<size_t>(n)] = l[static_cast<size_t>(n) - 1] + 1;
  }
  return l;
}

std::vector<int> degrees_from_ln(const std::vector<int>& ln, int g, int d) {
  if (d != g + 1) throw std::invalid_argument("d must equal g + 1");
  if (ln.empty() || ln[0] != 0) throw std::invalid_argument("the sequence must start at 0");
  std::vector<int> degs{d};
  for (size_t n = 1; n < ln.size(); ++n) {
    int prev = ln[n - 1], cur = ln[n];
    if (cur == prev + 1 && cur <= g) continue;  // climb
    if (prev != g || cur < 0 || cur > g)
      throw std::invalid_argument("drops may only leave the top stratum");
    degs.push_back(d - cur);
  }
  return degs;
}

ConsistencyReport verify_consistency(const Poly& D, int steps, mpfr_prec_t precision_bits,
                                     const Rat& tolerance) {
  if (steps < 2) throw std::invalid_argument("verify_consistency needs at least two steps");
  ConsistencyReport rep;
  rep.analysis = analyze(D, precision_bits);
  const Genus0Analysis& an = rep.analysis;

  CFExpansion e = expand(D, steps);
  rep.degree_sequence = e.degree_sequence;
  rep.cf_period = detect_period(e);
  rep.degree_period = detect_degree_period(e, 2);
  if (rep.degree_period)
    rep.warnings.push_back("degree period is conjectural: finite-window evidence only");

  for (int m = 1; m <= steps; ++m) {
    int deg = e.degree_sequence[static_cast<size_t>(m)];
    if (deg >= an.r + 2) rep.high_degree_census.emplace_back(m, deg);
  }

  if (!an.is_squarefree) {
    rep.warnings.push_back("the square factor has multiple roots; the geometric checks assume it squarefree and are skipped");
    return rep;
  }
  if (an.g == 0) {
    rep.warnings.push_back("no marked roots: the quotient group is trivial and there is nothing geometric to check");
    return rep;
  }

  mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, BigFloat::kMinPrec);
  BigFloat tol = BigFloat::of(tolerance, prec);

  // Coincident numeric b values would break the equation's hypotheses.
  bool coincident = false;
  for (size_t i = 0; i < an.b_numeric.size() && !coincident; ++i)
    for (size_t j = i + 1; j < an.b_numeric.size() && !coincident; ++j) {
      if ((an.b_numeric[i] - an.b_numeric[j]).abs() <= tol ||
          (an.b_numeric[i] - an.b_numeric[j].inverse()).abs() <= tol)
        coincident = true;
    }
  if (coincident) {
    rep.warnings.push_back("numerically coincident b values; the geometric checks are skipped");
    return rep;
  }

  rep.geometry_checked = true;
  WEquation<AppComplex> f = build_w_equation(an.b_numeric);

  // (a) every quotient of degree >= 2 puts delta^(deg p_m) on the locus.
  for (int m = 1; m <= steps; ++m) {
    int deg = e.degree_sequence[static_cast<size_t>(m)];
    if (deg < 2) continue;
    long n = e.p[static_cast<size_t>(m)].degree();
    DeltaPoint<AppComplex> pt = delta_power(an.b_numeric, n);
    BigFloat v = eval_w_equation(f, pt.coords).abs();
    rep.f_checks.push_back(FVanishCheck{m, n, deg, v.str(12), v <= tol});
  }

  // (c) quotients of degree >= d - r should factor through the Pellian part.
  for (int m = 1; m <= steps; ++m) {
    int deg = e.degree_sequence[static_cast<size_t>(m)];
    if (deg < an.d - an.r) continue;
    DpMatch match;
    match.index = m;
    match.degree = deg;
    const Poly& pm = e.p[static_cast<size_t>(m)];
    const Poly& qm = e.q[static_cast<size_t>(m)];
    auto [quot, rem] = poly_divrem(pm, an.nonunity_factor);
    match.divisible = rem.is_zero();
    if (match.divisible) {
      match.convergent =
          poly_gcd(quot, qm).degree() == 0 && check_convergent(quot, qm, an.D_p);
    }
    rep.dp_matches.push_back(match);
  }
  return rep;
}

namespace {

// Continued-fraction reconstruction of a rational from a float: succeeds
// when some convergent p/q has q <= max_den and |x - p/q| <= tol.
std::optional<Rat> rational_reconstruct(const BigFloat& x, const mpz_class& max_den, const BigFloat& tol) {
  mpz_class p(1), q(0), pp(0), qq(1);  // p/q tracks the current convergent
  BigFloat rest = x;
  for (int it = 0; it < 512; ++it) {
    mpz_class a = rest.floor_mpz();
    mpz_class pn = a * p + pp, qn = a * q + qq;
    if (qn > max_den) return std::nullopt;
    pp = p;
    qq = q;
    p = pn;
    q = qn;
    Rat approx(p, q);
    approx.canonicalize();
    if ((x - BigFloat::of(approx, x.prec())).abs() <= tol) return approx;
    BigFloat frac = rest - BigFloat::of(Rat(a), rest.prec());
    if (frac.is_zero()) return std::nullopt;
    rest = BigFloat::of(1, rest.prec()) / frac;
  }
  return std::nullopt;
}

}  // namespace

GeneratedExample gen_example(int l, int p, int q, const Rat& h, mpfr_prec_t precision_bits) {
  const int g = p + q;
  const int d = g + 1;
  if (l < 1 || p < 1 || q < 1) throw std::invalid_argument("l, p, q must be positive integers");
  if (2 * l < d) throw std::invalid_argument("l must satisfy d/2 <= l (2l >= g + 1)");
  if (l > g) throw std::invalid_argument("l must satisfy l <= g");
  if (p > l - 1) throw std::invalid_argument("p must satisfy p <= l - 1");
  if (q > l) throw std::invalid_argument("q must satisfy q <= l");
  if (h == 0) throw std::invalid_argument("h must be nonzero");
  {
    // Root-of-unity sweep for an exact h: orders with phi(N) <= 2 suffice.
    int bound = torsion_order_bound(2);
    Rat hn(1);
    for (int n = 1; n <= bound; ++n) {
      hn *= h;
      if (hn == 1) throw std::invalid_argument("h must not be a root of unity");
    }
  }

  mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, BigFloat::kMinPrec);
  GeneratedExample out;
  out.l = l;
  out.p = p;
  out.q = q;
  out.h = h;

  BigFloat theta = BigFloat::pi(prec) / BigFloat::of(l, prec);
  AppComplex omega(theta.cos(), theta.sin());  // primitive 2l-th root of unity
  AppComplex hc = AppComplex::of(h, 0, prec);
  for (int i = 1; i <= p; ++i) out.b.push_back(omega.pow(i));
  for (int j = 1; j <= q; ++j) out.b.push_back(hc * omega.pow(2 * j));

  // D = (t^2 - 1) prod (t - rho_i)^2 with rho_i = (b_i + 1/b_i) / 2.
  AppComplex two = AppComplex::of(2, 0, prec);
  std::vector<AppComplex> coeffs{AppComplex::of(-1, 0, prec), AppComplex(prec), AppComplex::one(prec)};
  for (const AppComplex& bi : out.b) {
    AppComplex rho = (bi + bi.inverse()) / two;
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<AppComplex> next(coeffs.size() + 1, AppComplex(prec));
      for (size_t k = 0; k < coeffs.size(); ++k) {
        next[k + 1] += coeffs[k];
        next[k] -= coeffs[k] * rho;
      }
      coeffs = std::move(next);
    }
  }
  out.d_coeffs = coeffs;

  BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) / 2, prec);
  mpz_class max_den(1);
  mpz_mul_2exp(max_den.get_mpz_t(), max_den.get_mpz_t(), static_cast<mp_bitcnt_t>(prec / 4));
  std::vector<Rat> exact(coeffs.size());
  bool all_exact = true;
  for (size_t k = 0; k < coeffs.size() && all_exact; ++k) {
    if (coeffs[k].im.abs() > tol) {
      all_exact = false;
      break;
    }
    auto r = rational_reconstruct(coeffs[k].re, max_den, tol);
    if (!r) {
      all_exact = false;
      break;
    }
    exact[k] = *r;
  }
  if (all_exact) out.d_exact = Poly{exact};
  return out;
}

}  // namespace pellcf
