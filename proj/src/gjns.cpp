#include "pellcf/gjns.hpp"

#include <sstream>
#include <stdexcept>

namespace pellcf {

Bivar Bivar::monomial(const Rat& v, int i, int j) {
  Bivar b;
  if (v == 0) return b;
  b.c.assign(static_cast<size_t>(i) + 1, {});
  b.c[static_cast<size_t>(i)].assign(static_cast<size_t>(j) + 1, Rat(0));
  b.c[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
  return b;
}

Rat Bivar::coeff(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return Rat(0);
  const auto& row = c[static_cast<size_t>(i)];
  if (j < 0 || j >= static_cast<int>(row.size())) return Rat(0);
  return row[static_cast<size_t>(j)];
}

bool Bivar::is_zero() const {
  for (const auto& row : c)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

int Bivar::total_degree() const {
  int deg = -1;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j)
      if (c[i][j] != 0) deg = std::max(deg, static_cast<int>(i + j));
  return deg;
}

bool Bivar::is_homogeneous(int degree) const {
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j)
      if (c[i][j] != 0 && static_cast<int>(i + j) != degree) return false;
  return true;
}

void Bivar::trim() {
  for (auto& row : c)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!c.empty() && c.back().empty()) c.pop_back();
}

bool Bivar::operator==(const Bivar& o) const {
  int si = std::max(static_cast<int>(c.size()), static_cast<int>(o.c.size()));
  for (int i = 0; i < si; ++i) {
    size_t w = 0;
    if (i < static_cast<int>(c.size())) w = std::max(w, c[static_cast<size_t>(i)].size());
    if (i < static_cast<int>(o.c.size())) w = std::max(w, o.c[static_cast<size_t>(i)].size());
    for (size_t j = 0; j < w; ++j)
      if (coeff(i, static_cast<int>(j)) != o.coeff(i, static_cast<int>(j))) return false;
  }
  return true;
}

namespace {

Bivar& accumulate(Bivar& into, const Bivar& from, int sign) {
  if (from.c.size() > into.c.size()) into.c.resize(from.c.size());
  for (size_t i = 0; i < from.c.size(); ++i) {
    if (from.c[i].size() > into.c[i].size()) into.c[i].resize(from.c[i].size(), Rat(0));
    for (size_t j = 0; j < from.c[i].size(); ++j) {
      if (sign > 0)
        into.c[i][j] += from.c[i][j];
      else
        into.c[i][j] -= from.c[i][j];
    }
  }
  into.trim();
  return into;
}

}  // namespace

Bivar Bivar::operator-() const { return scaled(Rat(-1)); }

Bivar Bivar::operator+(const Bivar& o) const {
  Bivar r(*this);
  return accumulate(r, o, +1);
}

Bivar Bivar::operator-(const Bivar& o) const {
  Bivar r(*this);
  return accumulate(r, o, -1);
}

Bivar Bivar::scaled(const Rat& v) const {
  Bivar r(*this);
  for (auto& row : r.c)
    for (auto& x : row) x *= v;
  r.trim();
  return r;
}

Bivar Bivar::derivative_s() const {
  Bivar r;
  if (c.size() <= 1) return r;
  r.c.resize(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) {
    r.c[i - 1].resize(c[i].size(), Rat(0));
    for (size_t j = 0; j < c[i].size(); ++j) r.c[i - 1][j] = c[i][j] * static_cast<long>(i);
  }
  r.trim();
  return r;
}

Bivar Bivar::times_s() const {
  Bivar r;
  r.c.resize(c.size() + 1);
  for (size_t i = 0; i < c.size(); ++i) r.c[i + 1] = c[i];
  r.trim();
  return r;
}

Bivar Bivar::times_s_minus_z() const {
  Bivar r = times_s();
  Bivar tz;  // this * z
  tz.c.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    tz.c[i].assign(c[i].size() + 1, Rat(0));
    for (size_t j = 0; j < c[i].size(); ++j) tz.c[i][j + 1] = c[i][j];
  }
  return accumulate(r, tz, -1);
}

Bivar Bivar::reciprocal(int degree) const {
  Bivar r;
  r.c.assign(static_cast<size_t>(degree) + 1, {});
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j) {
      if (c[i][j] == 0) continue;
      int ni = degree - static_cast<int>(i);
      int nj = degree - static_cast<int>(j);
      if (ni < 0 || nj < 0) throw std::domain_error("reciprocal needs total degree <= the given degree");
      auto& row = r.c[static_cast<size_t>(ni)];
      if (row.size() <= static_cast<size_t>(nj)) row.resize(static_cast<size_t>(nj) + 1, Rat(0));
      row[static_cast<size_t>(nj)] = c[i][j];
    }
  r.trim();
  return r;
}

std::string to_string(const Bivar& b) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(b.c.size()) - 1; i >= 0; --i) {
    const auto& row = b.c[static_cast<size_t>(i)];
    for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
      const Rat& v = row[static_cast<size_t>(j)];
      if (v == 0) continue;
      Rat mag = abs(v);
      if (first) {
        if (sgn(v) < 0) os << "-";
        first = false;
      } else {
        os << (sgn(v) < 0 ? " - " : " + ");
      }
      std::string vars;
      if (i > 0) vars += i == 1 ? "s" : "s^" + std::to_string(i);
      if (j > 0) {
        if (!vars.empty()) vars += "*";
        vars += j == 1 ? "z" : "z^" + std::to_string(j);
      }
      if (vars.empty()) {
        os << rat_str(mag);
      } else {
        if (mag != 1) os << rat_str(mag) << "*";
        os << vars;
      }
    }
  }
  if (first) return "0";
  return os.str();
}

namespace {

// Synthetic division by (s - z), treating the grid as a polynomial in s
// whose coefficients are polynomials in z. Returns false if not divisible.
bool divide_out_s_minus_z(const Bivar& n, Bivar* quotient) {
  if (n.is_zero()) {
    *quotient = Bivar::zero();
    return true;
  }
  int ds = static_cast<int>(n.c.size()) - 1;
  if (ds < 1) return false;
  Bivar q;
  q.c.resize(static_cast<size_t>(ds));
  std::vector<Rat> carry;  // running remainder, a polynomial in z
  for (int i = ds; i >= 1; --i) {
    // coefficient of s^i in the remainder so far
    std::vector<Rat> cur = carry;
    const auto& row = n.c[static_cast<size_t>(i)];
    if (cur.size() < row.size()) cur.resize(row.size(), Rat(0));
    for (size_t j = 0; j < row.size(); ++j) cur[j] += row[j];
    q.c[static_cast<size_t>(i) - 1] = cur;
    // remainder gains cur * z at s^(i-1)
    carry.assign(cur.size() + 1, Rat(0));
    for (size_t j = 0; j < cur.size(); ++j) carry[j + 1] = cur[j];
  }
  // the s^0 row must cancel against carry
  std::vector<Rat> last = carry;
  const auto& row0 = n.c[0];
  if (last.size() < row0.size()) last.resize(row0.size(), Rat(0));
  for (size_t j = 0; j < row0.size(); ++j) last[j] += row0[j];
  for (const Rat& v : last)
    if (v != 0) return false;
  q.trim();
  *quotient = q;
  return true;
}

RatFun2 reduced(Bivar n, int pole) {
  Bivar q;
  while (pole > 0 && divide_out_s_minus_z(n, &q)) {
    n = q;
    --pole;
  }
  return RatFun2{n, pole};
}

// One application of s * d/ds on N / (s - z)^pole.
RatFun2 derive(const RatFun2& f) {
  Bivar n = (f.numerator.derivative_s().times_s_minus_z() - f.numerator.scaled(Rat(f.pole_order))).times_s();
  return reduced(n, f.pole_order + 1);
}

}  // namespace

std::vector<RatFun2> fk_sequence(int k_max) {
  if (k_max < 0) throw std::invalid_argument("fk_sequence needs k_max >= 0");
  std::vector<RatFun2> out;
  out.push_back(RatFun2{Bivar::monomial(1, 1, 0), 1});  // s / (s - z)
  for (int k = 0; k < k_max; ++k) out.push_back(derive(out.back()));
  return out;
}

std::vector<RatFun2> gk_sequence(int k_max) {
  if (k_max < 0) throw std::invalid_argument("gk_sequence needs k_max >= 0");
  // In the inverted variables the logarithmic derivative of the mirrored
  // generator is z' / (s' - z'); iterate there, then substitute s' = 1/s,
  // z' = 1/z and clear (s z)^(k+1) and the sign (-1)^(k+1) coming from
  // (1/s - 1/z) = -(s - z)/(s z).
  std::vector<RatFun2> mirrored;
  mirrored.push_back(RatFun2{Bivar::monomial(1, 0, 1), 1});  // z' / (s' - z')
  for (int k = 0; k < k_max; ++k) mirrored.push_back(derive(mirrored.back()));

  std::vector<RatFun2> out;
  for (int k = 0; k <= k_max; ++k) {
    const RatFun2& m = mirrored[static_cast<size_t>(k)];
    Bivar n = m.numerator.reciprocal(m.pole_order);
    if (m.pole_order % 2 == 1) n = -n;  // (-1)^(pole_order) for the cleared denominator
    out.push_back(RatFun2{n, m.pole_order});
  }
  return out;
}

IDeltaComponents i_delta_components(const std::vector<int>& e) {
  IDeltaComponents out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1) throw std::invalid_argument("multiplicities must be >= 1");
    out.multiplicative.push_back("b" + std::to_string(i + 1) + "^2");
    std::vector<Rat> add;
    if (e[i] >= 2) {
      add.emplace_back(2);  // logarithmic-derivative slot: 1 - (-1)
      for (int k = 2; k < e[i]; ++k) add.emplace_back(0);
    }
    out.additive.push_back(std::move(add));
  }
  out.note =
      "additive first component uses the two-sided logarithmic-derivative convention "
      "(+1) - (-1) = 2; a one-sided normalization would list 1 instead";
  return out;
}

}  // namespace pellcf
