#include "pellcf/cf.hpp"

#include "pellcf/series.hpp"

namespace pellcf {

SurdState initial_state(const Poly& D) {
  Poly A = sqrt_floor(D);
  if (A * A == D)
    throw std::domain_error("D is a perfect square: sqrt(D) is a polynomial and the expansion terminates");
  return SurdState{Poly(0), Poly(1), D, A, 0};
}

std::pair<Poly, SurdState> cf_step(const SurdState& s) {
  if (s.Q.is_zero())
    throw std::domain_error("zero denominator in the surd state: D is a perfect square (rational function)");
  Poly a = poly_divrem(s.P + s.A, s.Q).first;
  Poly nextP = a * s.Q - s.P;
  Poly num = s.D - nextP * nextP;
  if (num.is_zero())
    throw std::domain_error("D is a perfect square: sqrt(D) is a polynomial and the expansion terminates");
  Poly nextQ = poly_div_exact(num, s.Q);
  return {a, SurdState{nextP, nextQ, s.D, s.A, s.index + 1}};
}

CFExpansion expand(const Poly& D, int steps) {
  if (steps < 1) throw std::invalid_argument("expand needs at least one step");
  CFExpansion e;
  e.D = D;
  SurdState st = initial_state(D);
  e.d = D.degree() / 2;
  e.p = {Poly(1)};
  e.q = {Poly(0)};
  e.states.push_back(st);
  for (int n = 0; n <= steps; ++n) {
    auto [a, next] = cf_step(st);
    e.a.push_back(a);
    e.degree_sequence.push_back(a.degree());
    if (n == 0) {
      e.p.push_back(a);
      e.q.push_back(Poly(1));
    } else {
      size_t k = e.p.size();
      e.p.push_back(a * e.p[k - 1] + e.p[k - 2]);
      e.q.push_back(a * e.q[k - 1] + e.q[k - 2]);
    }
    e.states.push_back(next);
    st = next;
  }
  return e;
}

std::optional<std::pair<int, int>> detect_period(const CFExpansion& e) {
  for (size_t n = 1; n < e.states.size(); ++n) {
    for (size_t m = 0; m < n; ++m) {
      if (e.states[n].same_quotient(e.states[m]))
        return std::make_pair(static_cast<int>(m), static_cast<int>(n - m));
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> detect_degree_period(const CFExpansion& e, int validate_repeats) {
  if (validate_repeats < 2) throw std::invalid_argument("validate_repeats must be at least 2");
  const auto& deg = e.degree_sequence;
  const int N = static_cast<int>(deg.size()) - 1;
  for (int period = 1; period * validate_repeats <= N; ++period) {
    for (int pre = 1; pre + period * validate_repeats <= N + 1; ++pre) {
      bool ok = true;
      for (int n = pre; n + period <= N && ok; ++n) ok = deg[n] == deg[n + period];
      if (ok) return std::make_pair(pre, period);
    }
  }
  return std::nullopt;
}

namespace {

// Coefficient of t^e in q * sqrt(D), with s = sqrt_series(D, terms).
Rat surd_product_coeff(const Poly& q, const std::vector<Rat>& s, int d, int e) {
  Rat acc(0);
  for (int j = 0; j <= q.degree(); ++j) {
    int k = d - (e - j);  // s[k] is the coefficient of t^(d-k)
    if (k < 0 || k >= static_cast<int>(s.size())) continue;
    acc += q.coeff(j) * s[static_cast<size_t>(k)];
  }
  return acc;
}

}  // namespace

bool check_convergent(const Poly& p, const Poly& q, const Poly& D) {
  if (q.is_zero()) throw std::invalid_argument("check_convergent needs q != 0");
  if (poly_gcd(p, q).degree() > 0) throw std::invalid_argument("check_convergent needs coprime p, q");
  int d = sqrt_admissible_half_degree(D);
  // ord >= deg q + 1 iff every coefficient at exponent >= -deg q vanishes.
  int top = std::max(p.degree(), q.degree() + d);
  int bottom = -q.degree();
  std::vector<Rat> s = sqrt_series(D, d - bottom + q.degree() + 1);
  for (int e = top; e >= bottom; --e) {
    if (p.coeff(e) - surd_product_coeff(q, s, d, e) != 0) return false;
  }
  return true;
}

int vanishing_order(const Poly& p, const Poly& q, const Poly& D, int max_terms) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("vanishing_order of the zero function");
  int d = sqrt_admissible_half_degree(D);
  if (q.is_zero()) return -p.degree();
  if (p.is_zero()) return -(q.degree() + d);
  int top = std::max(p.degree(), q.degree() + d);
  int terms = max_terms > 0 ? max_terms : top + q.degree() + 2 * d + 32;
  int bottom = top - terms + 1;
  std::vector<Rat> s = sqrt_series(D, d - bottom + q.degree() + 1);
  for (int e = top; e >= bottom; --e) {
    if (p.coeff(e) - surd_product_coeff(q, s, d, e) != 0) return -e;
  }
  throw SeriesExhausted("no nonzero coefficient within " + std::to_string(terms) +
                            " series terms; retry with a larger max_terms",
                        terms);
}

std::optional<PellSolution> pell_solution(const Poly& D, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("pell_solution needs at least one step");
  SurdState st = initial_state(D);
  const int d = D.degree() / 2;
  Poly p_prev(1), q_prev(0);  // (p_0, q_0)
  Poly p_cur, q_cur;          // (p_n, q_n) at the top of iteration n >= 1
  std::optional<PellSolution> fallback;
  for (int n = 0; n <= max_steps; ++n) {
    auto [a, next] = cf_step(st);
    if (n == 0) {
      p_cur = a;
      q_cur = Poly(1);
    } else {
      if (a.degree() == d) {
        Rat c = (p_cur * p_cur - D * q_cur * q_cur).coeff(0);
        Rat s;
        if (rat_is_square(c, &s)) return PellSolution{p_cur / s, q_cur / s, Rat(1), ""};
        if (!fallback)
          fallback = PellSolution{p_cur, q_cur, c,
                                  "constant " + rat_str(c) +
                                      " is not a rational square; rescaling to 1 needs a scalar extension"};
      }
      Poly p_next = a * p_cur + p_prev;
      Poly q_next = a * q_cur + q_prev;
      p_prev = std::move(p_cur);
      q_prev = std::move(q_cur);
      p_cur = std::move(p_next);
      q_cur = std::move(q_next);
    }
    st = next;
  }
  return fallback;
}

}  // namespace pellcf
