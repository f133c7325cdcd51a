#include "pellcf/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace pellcf {

namespace {
mpfr_prec_t clamp_prec(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, BigFloat::kMinPrec); }
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::of(long v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const Rat& v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long k, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si_2exp(r.v_, 1, k, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw std::domain_error("BigFloat division by zero");
  BigFloat r(join(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw std::domain_error("BigFloat::sqrt of a negative value");
  BigFloat r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::cos() const {
  BigFloat r(prec());
  mpfr_cos(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sin() const {
  BigFloat r(prec());
  mpfr_sin(r.v_, v_, MPFR_RNDN);
  return r;
}

mpz_class BigFloat::floor_mpz() const {
  mpfr_t f;
  mpfr_init2(f, std::max<mpfr_prec_t>(prec(), 2));
  mpfr_floor(f, v_);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), f, MPFR_RNDN);
  mpfr_clear(f);
  return z;
}

std::string BigFloat::str(int digits) const {
  if (digits <= 0) digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 2;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

AppComplex AppComplex::of(const Rat& r, const Rat& i, mpfr_prec_t prec) {
  return {BigFloat::of(r, prec), BigFloat::of(i, prec)};
}

AppComplex AppComplex::one(mpfr_prec_t prec) { return of(1, 0, prec); }

AppComplex operator*(const AppComplex& a, const AppComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

AppComplex operator/(const AppComplex& a, const AppComplex& b) {
  BigFloat n = b.re * b.re + b.im * b.im;
  if (n.is_zero()) throw std::domain_error("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

AppComplex AppComplex::inverse() const { return one(prec()) / *this; }

AppComplex AppComplex::sqrt() const {
  mpfr_prec_t p = prec();
  if (im.is_zero()) {
    if (re.sign() >= 0) return {re.sqrt(), BigFloat(p)};
    return {BigFloat(p), (-re).sqrt()};
  }
  BigFloat r = abs();
  BigFloat two = BigFloat::of(2, p);
  if (re.sign() >= 0) {
    BigFloat u = ((r + re) / two).sqrt();
    return {u, im / (two * u)};
  }
  BigFloat v = ((r - re) / two).sqrt();
  BigFloat u = im.abs() / (two * v);
  return {u, im.sign() >= 0 ? v : -v};
}

AppComplex AppComplex::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  AppComplex acc = one(prec());
  AppComplex base = *this;
  unsigned long k = static_cast<unsigned long>(n);
  while (k > 0) {
    if (k & 1ul) acc *= base;
    base *= base;
    k >>= 1ul;
  }
  return acc;
}

std::string AppComplex::str(int digits) const {
  if (im.is_zero()) return re.str(digits);
  std::string s = re.str(digits);
  s += im.sign() < 0 ? " - " : " + ";
  s += im.abs().str(digits);
  s += "*i";
  return s;
}

}  // namespace pellcf
