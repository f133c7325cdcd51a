#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pellcf/gjns.hpp"

using namespace pellcf;

TEST_CASE("the first iterated derivatives") {
  auto f = fk_sequence(3);
  REQUIRE(f.size() == 4);

  // F_0 = s / (s - z)
  CHECK(f[0].pole_order == 1);
  CHECK(f[0].numerator == Bivar::monomial(1, 1, 0));

  // F_1 = -s z / (s - z)^2
  CHECK(f[1].pole_order == 2);
  CHECK(f[1].numerator == Bivar::monomial(-1, 1, 1));

  // F_2 = s z (s + z) / (s - z)^3
  CHECK(f[2].pole_order == 3);
  CHECK(f[2].numerator == Bivar::monomial(1, 2, 1) + Bivar::monomial(1, 1, 2));

  // F_3 = -s z (s^2 + 4 s z + z^2) / (s - z)^4
  CHECK(f[3].pole_order == 4);
  CHECK(f[3].numerator ==
        Bivar::monomial(-1, 3, 1) + Bivar::monomial(-4, 2, 2) + Bivar::monomial(-1, 1, 3));
}

TEST_CASE("printing") {
  auto f = fk_sequence(3);
  CHECK(to_string(f[3].numerator) == "-s^3*z - 4*s^2*z^2 - s*z^3");
  CHECK(to_string(Bivar::zero()) == "0");
}

TEST_CASE("mirrored route flips the sign as (-1)^(k+1)") {
  const int kmax = 6;
  auto f = fk_sequence(kmax);
  auto g = gk_sequence(kmax);
  REQUIRE(g.size() == f.size());
  for (int k = 0; k <= kmax; ++k) {
    CHECK(g[static_cast<size_t>(k)].pole_order == f[static_cast<size_t>(k)].pole_order);
    Bivar expect = f[static_cast<size_t>(k)].numerator;
    if (k % 2 == 0) expect = -expect;  // (-1)^(k+1)
    CHECK(g[static_cast<size_t>(k)].numerator == expect);
  }
}

TEST_CASE("structure of the numerators") {
  auto f = fk_sequence(8);
  for (size_t k = 0; k < f.size(); ++k) {
    // pole order grows by exactly one per step
    CHECK(f[k].pole_order == static_cast<int>(k) + 1);
    // numerator homogeneous of the pole degree
    CHECK(f[k].numerator.is_homogeneous(f[k].pole_order));
    if (k >= 1) {
      // z = 0 and z = infinity are zeroes: a factor z and z-degree < pole
      for (size_t i = 0; i < f[k].numerator.c.size(); ++i) {
        CHECK(f[k].numerator.coeff(static_cast<int>(i), 0) == 0);
        CHECK(f[k].numerator.coeff(static_cast<int>(i), f[k].pole_order) == 0);
      }
    }
  }
}

TEST_CASE("i(delta) component descriptor") {
  auto plain = i_delta_components(std::vector<int>{1, 1, 1});
  CHECK(plain.multiplicative == std::vector<std::string>{"b1^2", "b2^2", "b3^2"});
  for (const auto& add : plain.additive) CHECK(add.empty());

  auto dbl = i_delta_components(std::vector<int>{2});
  REQUIRE(dbl.additive.size() == 1);
  CHECK(dbl.additive[0] == std::vector<Rat>{2});

  auto triple = i_delta_components(std::vector<int>{3});
  CHECK(triple.additive[0] == std::vector<Rat>{2, 0});
  CHECK_FALSE(triple.note.empty());

  CHECK_THROWS_AS(i_delta_components(std::vector<int>{0}), std::invalid_argument);
}
