#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laurent_cf_oracle.hpp"
#include "pellcf/cf.hpp"
#include "pellcf/parse.hpp"

using namespace pellcf;

namespace {

Poly P(std::initializer_list<long> ascending) {
  std::vector<Rat> c;
  for (long v : ascending) c.emplace_back(v);
  return Poly{c};
}

std::mt19937 rng(771177);

Rat random_rat() {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Poly random_poly_below(int deg) {
  std::vector<Rat> c(static_cast<size_t>(deg));
  for (auto& v : c) v = random_rat();
  return Poly{c};
}

// Admissible non-square D = A^2 + R with A monic of degree d, deg R < d.
Poly random_radicand(int d) {
  for (;;) {
    Poly A = Poly::monomial(1, d) + random_poly_below(d);
    Poly R = random_poly_below(d);
    if (R.is_zero()) continue;
    return A * A + R;
  }
}

const char* kMainExample = "1/4096*(t^2-1)*(4*t^2-1)^2*(16*t^2+20*t+13)^2";

}  // namespace

TEST_CASE("cf_step on t^2 + 1") {
  Poly D = P({1, 0, 1});
  SurdState s0 = initial_state(D);
  CHECK(s0.P == Poly(0));
  CHECK(s0.Q == Poly(1));
  CHECK(s0.A == Poly::t());
  auto [a0, s1] = cf_step(s0);
  CHECK(a0 == Poly::t());
  CHECK(s1.P == Poly::t());
  CHECK(s1.Q == Poly(1));
  auto [a1, s2] = cf_step(s1);
  CHECK(a1 == P({0, 2}));
  CHECK(s2.P == Poly::t());
  CHECK(s2.Q == Poly(1));
}

TEST_CASE("perfect squares are rejected") {
  CHECK_THROWS_AS(initial_state(P({0, 0, 1})), std::domain_error);
  CHECK_THROWS_AS(expand(P({0, 0, 1}), 3), std::domain_error);
  CHECK_THROWS_AS(expand(P({1, 2, 1}), 3), std::domain_error);
}

TEST_CASE("expand t^2 + 1") {
  CFExpansion e = expand(P({1, 0, 1}), 3);
  REQUIRE(e.a.size() == 4);
  CHECK(e.a[0] == Poly::t());
  CHECK(e.a[1] == P({0, 2}));
  CHECK(e.a[2] == P({0, 2}));
  CHECK(e.a[3] == P({0, 2}));
  CHECK(e.degree_sequence == std::vector<int>{1, 1, 1, 1});
  CHECK(e.p[2] == P({1, 0, 2}));
  CHECK(e.q[2] == P({0, 2}));
}

TEST_CASE("expand the degree-10 example") {
  CFExpansion e = expand(parse_poly(kMainExample), 10);
  CHECK(e.degree_sequence == std::vector<int>{5, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2});
}

TEST_CASE("expand (t^2-1)(t-2)^2: degrees settle at 1") {
  // quartic D, so a_0 has degree 2 and the tail is all ones
  CFExpansion e = expand(parse_poly("(t^2-1)*(t-2)^2"), 20);
  CHECK(e.degree_sequence[0] == 2);
  for (int n = 1; n <= 20; ++n) CHECK(e.degree_sequence[static_cast<size_t>(n)] == 1);
}

TEST_CASE("oracle equivalence: exact engine vs truncated series") {
  std::vector<Poly> corpus = {P({1, 0, 1}),
                              P({-1, 0, 1}),
                              parse_poly("(t^2-1)*(t-2)^2"),
                              parse_poly("(t^2-1)*(t-1/2)^2"),
                              parse_poly("(t^2-1)*(t-2)^2*(t-3)^2"),
                              parse_poly(kMainExample)};
  for (int i = 0; i < 6; ++i) corpus.push_back(random_radicand(3));
  for (const Poly& D : corpus) {
    const int N = 12;
    CFExpansion e = expand(D, N);
    auto oracle = testing::oracle_degrees(D, N);
    REQUIRE(oracle.has_value());
    CHECK(*oracle == e.degree_sequence);
  }
}

TEST_CASE("surd state invariant: Q divides D - P^2") {
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> dd(1, 5);
    Poly D = random_radicand(dd(rng));
    SurdState st = initial_state(D);
    for (int n = 0; n < 50; ++n) {
      auto [a, next] = cf_step(st);
      CHECK(poly_divrem(next.D - next.P * next.P, next.Q).second.is_zero());
      CHECK(next.P.degree() <= D.degree() / 2);
      if (n >= 1) CHECK(a.degree() >= 1);
      st = next;
    }
  }
}

TEST_CASE("convergent identities across a corpus") {
  std::vector<Poly> corpus = {P({1, 0, 1}), parse_poly("(t^2-1)*(t-2)^2"), parse_poly(kMainExample)};
  for (int i = 0; i < 5; ++i) corpus.push_back(random_radicand(2));
  for (const Poly& D : corpus) {
    const int N = 10;
    const int d = D.degree() / 2;
    CFExpansion e = expand(D, N);
    for (size_t n = 1; n + 1 < e.p.size(); ++n) {
      // cross-multiplied determinant is a nonzero constant
      Poly det = e.p[n + 1] * e.q[n] - e.p[n] * e.q[n + 1];
      CHECK(det.degree() == 0);
      CHECK(poly_gcd(e.p[n], e.q[n]).degree() == 0);
      // vanishing order of p_n - q_n sqrt(D) equals deg q_n + deg a_n
      CHECK(vanishing_order(e.p[n], e.q[n], D) == e.q[n].degree() + e.a[n].degree());
      CHECK(e.a[n].degree() <= d);
    }
  }
}

TEST_CASE("check_convergent") {
  Poly D = P({1, 0, 1});
  CHECK(check_convergent(P({1, 0, 2}), P({0, 2}), D));
  CHECK(check_convergent(Poly::t(), Poly(1), D));
  CHECK_FALSE(check_convergent(P({1, 0, 1}), Poly::t(), D));
  CHECK_THROWS_AS(check_convergent(P({0, 0, 2}), P({0, 2}), D), std::invalid_argument);

  CFExpansion e = expand(parse_poly(kMainExample), 8);
  for (size_t n = 1; n + 1 < e.p.size(); ++n) {
    CHECK(check_convergent(e.p[n], e.q[n], e.D));
    // perturbed numerators are never convergents
    Poly bad_p = e.p[n] + Poly::t() * e.q[n];
    if (poly_gcd(bad_p, e.q[n]).degree() == 0) CHECK_FALSE(check_convergent(bad_p, e.q[n], e.D));
  }
}

TEST_CASE("vanishing_order") {
  Poly D = P({1, 0, 1});
  CHECK(vanishing_order(P({1, 0, 2}), P({0, 2}), D) == 2);
  CHECK(vanishing_order(Poly::t(), Poly(1), D) == 1);
  CHECK(vanishing_order(Poly::t(), Poly(0), D) == -1);
  CHECK(vanishing_order(Poly(0), Poly(1), D) == -1);
  CHECK_THROWS_AS(vanishing_order(Poly(0), Poly(0), D), std::invalid_argument);
  // tight window exhausts and reports the bound tried
  try {
    vanishing_order(P({1, 0, 2}), P({0, 2}), D, 2);
    FAIL("expected a throw");
  } catch (const SeriesExhausted& e) {
    CHECK(e.terms_tried == 2);
  }
}

TEST_CASE("detect_period") {
  auto p1 = detect_period(expand(P({1, 0, 1}), 5));
  REQUIRE(p1.has_value());
  CHECK(*p1 == std::pair{1, 1});

  // alpha_2 = -alpha_1 for t^2 - 1, so the exact state period is 2
  auto p2 = detect_period(expand(P({-1, 0, 1}), 6));
  REQUIRE(p2.has_value());
  CHECK(*p2 == std::pair{1, 2});

  CHECK_FALSE(detect_period(expand(parse_poly("(t^2-1)*(t-2)^2"), 50)).has_value());
}

TEST_CASE("detect_degree_period") {
  CFExpansion e = expand(parse_poly(kMainExample), 10);
  auto dp = detect_degree_period(e, 2);
  REQUIRE(dp.has_value());
  CHECK(*dp == std::pair{1, 2});

  auto dp2 = detect_degree_period(expand(P({1, 0, 1}), 6), 2);
  REQUIRE(dp2.has_value());
  CHECK(*dp2 == std::pair{1, 1});

  auto dp3 = detect_degree_period(expand(parse_poly("(t^2-1)*(t-2)^2"), 20), 2);
  REQUIRE(dp3.has_value());
  CHECK(*dp3 == std::pair{1, 1});

  // too short a window for the requested validation
  CHECK_FALSE(detect_degree_period(expand(P({1, 0, 1}), 2), 5).has_value());
  CHECK_THROWS_AS(detect_degree_period(e, 1), std::invalid_argument);
}

TEST_CASE("pell solutions") {
  auto euler = pell_solution(P({1, 0, 1}), 16);
  REQUIRE(euler.has_value());
  CHECK(euler->x == P({1, 0, 2}));
  CHECK(euler->y == P({0, 2}));
  CHECK(euler->c == 1);
  CHECK(euler->note.empty());

  auto cheb = pell_solution(P({-1, 0, 1}), 16);
  REQUIRE(cheb.has_value());
  CHECK(cheb->x == Poly::t());
  CHECK(cheb->y == Poly(1));
  CHECK(cheb->c == 1);

  CHECK_FALSE(pell_solution(parse_poly("(t^2-1)*(t-2)^2"), 100).has_value());
}

TEST_CASE("pell solutions satisfy the equation on a pellian corpus") {
  for (const char* text : {"(t^2-1)*(t-1/2)^2", "(t^2-1)*(t-1/2)^2*(t+1/2)^2", "(t^2-1)*t^2"}) {
    Poly D = parse_poly(text);
    auto sol = pell_solution(D, 60);
    REQUIRE(sol.has_value());
    CHECK(sol->x * sol->x - D * sol->y * sol->y == Poly(sol->c));
    CHECK(sol->c == 1);
    CHECK_FALSE(sol->y.is_zero());
  }
}

TEST_CASE("degree d quotients appear exactly for pellian D on a small corpus") {
  std::vector<Poly> corpus = {P({1, 0, 1}), P({-1, 0, 1}), parse_poly("(t^2-1)*(t-1/2)^2"),
                              parse_poly("(t^2-1)*(t-2)^2"), parse_poly(kMainExample)};
  for (int i = 0; i < 5; ++i) corpus.push_back(random_radicand(2));
  for (const Poly& D : corpus) {
    const int N = 60;
    CFExpansion e = expand(D, N);
    bool periodic = detect_period(e).has_value();
    bool top_degree = false;
    for (size_t n = 1; n < e.a.size(); ++n) top_degree = top_degree || e.degree_sequence[n] == e.d;
    CHECK(periodic == top_degree);
  }
}
