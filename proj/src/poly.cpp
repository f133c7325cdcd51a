#include "pellcf/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace pellcf {

Poly::Poly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  normalize();
}

Poly Poly::t() { return monomial(1, 1); }

Poly Poly::monomial(const Rat& c, int k) {
  Poly p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
    p.c_.back() = c;
  }
  return p;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<size_t>(k)];
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly& Poly::operator/=(const Rat& s) {
  if (s == 0) throw std::domain_error("polynomial division by the zero constant");
  for (auto& c : c_) c /= s;
  return *this;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  Poly r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
  r.normalize();
  return r;
}

Poly Poly::monic() const {
  Poly r(*this);
  r /= leading();
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly acc(1), base(*this);
  while (k > 0) {
    if (k & 1u) acc *= base;
    base *= base;
    k >>= 1u;
  }
  return acc;
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly q, r(a);
  const int db = b.degree();
  const Rat& lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    Rat f = r.leading() / lb;
    int k = r.degree() - db;
    Poly piece = Poly::monomial(f, k);
    q += piece;
    r -= piece * b;
  }
  return {q, r};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division expected to be exact has a remainder");
  return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  // Euclid with monic remainders to keep the rational coefficients small.
  Poly x = a.is_zero() ? a : a.monic();
  Poly y = b.is_zero() ? b : b.monic();
  while (!y.is_zero()) {
    Poly r = poly_divrem(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return x.monic();
}

std::pair<Poly, bool> squarefree_part(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (a.is_constant()) return {Poly(1), true};
  Poly g = poly_gcd(a, a.derivative());
  return {poly_div_exact(a, g).monic(), g.degree() == 0};
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (a.is_constant()) return out;
  // Yun's algorithm (characteristic 0). b keeps the leading scale: the
  // d = c - b' bookkeeping needs it.
  Poly g = poly_gcd(a, a.derivative());
  Poly b = poly_div_exact(a, g);
  Poly c = poly_div_exact(a.derivative(), g);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly f = poly_gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f, i);
    b = poly_div_exact(b, f);
    c = poly_div_exact(d, f);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::optional<Poly> poly_sqrt_exact(const Poly& a) {
  if (a.is_zero()) return Poly();
  int n = a.degree();
  if (n % 2 != 0) return std::nullopt;
  Rat lroot;
  if (!rat_is_square(a.leading(), &lroot)) return std::nullopt;
  int m = n / 2;
  // Coefficient recurrence on r_k = coeff of t^(m-k) in the root.
  std::vector<Rat> r(static_cast<size_t>(m) + 1, Rat(0));
  r[0] = lroot;
  Rat twice = 2 * r[0];
  for (int k = 1; k <= m; ++k) {
    Rat acc = a.coeff(n - k);
    for (int j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[static_cast<size_t>(k)] = acc / twice;
  }
  std::vector<Rat> asc(static_cast<size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) asc[static_cast<size_t>(m - k)] = r[static_cast<size_t>(k)];
  Poly root{asc};
  if (root * root != a) return std::nullopt;
  return root;
}

Poly chebyshev(ChebKind kind, int k) {
  if (k < 0) throw std::domain_error("chebyshev index must be nonnegative");
  Poly prev(1);
  Poly cur = (kind == ChebKind::first) ? Poly::t() : Poly::monomial(2, 1);
  if (k == 0) return prev;
  Poly twot = Poly::monomial(2, 1);
  for (int i = 1; i < k; ++i) {
    Poly next = twot * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rat c = p.coeff(k);
    if (c == 0) continue;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rat mag = abs(c);
    if (k == 0) {
      os << rat_str(mag);
    } else {
      if (mag != 1) os << rat_str(mag) << "*";
      os << (k == 1 ? "t" : "t^" + std::to_string(k));
    }
  }
  return os.str();
}

}  // namespace pellcf
