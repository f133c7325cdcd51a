#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pellcf/poly.hpp"

namespace pellcf {

// Complete quotient alpha_n = (P + sqrt(D)) / Q in surd normal form.
// Invariants: Q != 0, Q divides D - P^2 exactly, deg P <= d where 2d = deg D.
struct SurdState {
  Poly P, Q;
  Poly D, A;  // radicand and floor(sqrt(D)), fixed along an expansion
  int index = 0;

  bool same_quotient(const SurdState& o) const { return P == o.P && Q == o.Q; }
};

// alpha_0 = sqrt(D). Validates that D has even positive degree, a square
// leading coefficient and is not a perfect square.
SurdState initial_state(const Poly& D);

// One iteration: a = floor(alpha), next = 1/(alpha - a). The floor is the
// polynomial quotient of (P + A) by Q, because sqrt(D) - A = O(1/t).
std::pair<Poly, SurdState> cf_step(const SurdState& s);

struct CFExpansion {
  Poly D;
  int d = 0;                         // deg D = 2d
  std::vector<Poly> a;               // partial quotients a_0..a_N
  std::vector<Poly> p, q;            // convergents, indices 0..N+1
  std::vector<int> degree_sequence;  // deg a_n
  std::vector<SurdState> states;     // alpha_0..alpha_{N+1}
};

// Runs steps+1 partial quotients (a_0..a_steps) with the Eq.-style
// three-term recurrences for the convergents. Exact over Q throughout.
CFExpansion expand(const Poly& D, int steps);

// Least (preperiod, period) with an exact repeat of the surd state (P, Q).
// A hit is a proof of eventual periodicity; absence within the window
// proves nothing.
std::optional<std::pair<int, int>> detect_period(const CFExpansion& e);

// Minimal (preperiod, period) consistent with the whole computed degree
// window, searched smallest period first, then smallest preperiod. Index 0
// is the polynomial part and stays outside the tail, so preperiod >= 1.
// Requires validate_repeats >= 2 full repetitions inside the window.
// Finite-window evidence only: callers must flag results as conjectural.
std::optional<std::pair<int, int>> detect_degree_period(const CFExpansion& e, int validate_repeats);

// True iff ord(p - q sqrt(D)) at t = infinity is >= deg q + 1, decided
// exactly from the truncated sqrt series. Inputs must be coprime, q != 0.
bool check_convergent(const Poly& p, const Poly& q, const Poly& D);

struct SeriesExhausted : std::runtime_error {
  int terms_tried;
  SeriesExhausted(const std::string& what, int terms) : std::runtime_error(what), terms_tried(terms) {}
};

// Exact order of p - q sqrt(D) at t = infinity (negative of the top nonzero
// exponent). max_terms caps the scanned exponent window (0 picks a default);
// exhausting it raises SeriesExhausted so the caller may retry deeper.
int vanishing_order(const Poly& p, const Poly& q, const Poly& D, int max_terms = 0);

struct PellSolution {
  Poly x, y;
  Rat c;             // x^2 - D y^2 == c, a nonzero constant
  std::string note;  // set when c could not be rescaled to 1 over Q
};

// Scans convergents for x^2 - D y^2 = constant. Returns the first one whose
// constant is a rational square (rescaled to 1); failing that, the first
// constant-c convergent as-is with a note. Empty means inconclusive within
// max_steps, never a proof of non-Pellianity.
std::optional<PellSolution> pell_solution(const Poly& D, int max_steps);

}  // namespace pellcf
