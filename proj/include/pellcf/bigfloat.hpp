#pragma once

#include <mpfr.h>

#include <string>

#include "pellcf/rational.hpp"

namespace pellcf {

// Arbitrary-precision binary float (MPFR, round to nearest). Every value
// carries its working precision; binary operations round at the larger of
// the operand precisions.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kMinPrec = 64;

  explicit BigFloat(mpfr_prec_t prec = kMinPrec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat of(long v, mpfr_prec_t prec);
  static BigFloat of(const Rat& v, mpfr_prec_t prec);
  static BigFloat pow2(long k, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.cmp(b) == 0; }

  BigFloat abs() const;
  BigFloat sqrt() const;  // input >= 0
  BigFloat cos() const;
  BigFloat sin() const;
  mpz_class floor_mpz() const;

  // Decimal form, default significance derived from the precision.
  std::string str(int digits = 0) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

BigFloat hypot(const BigFloat& a, const BigFloat& b);

// Complex number over BigFloat.
struct AppComplex {
  BigFloat re, im;

  explicit AppComplex(mpfr_prec_t prec = BigFloat::kMinPrec) : re(prec), im(prec) {}
  AppComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  static AppComplex of(const Rat& r, const Rat& i, mpfr_prec_t prec);
  static AppComplex one(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  AppComplex operator-() const { return {-re, -im}; }
  friend AppComplex operator+(const AppComplex& a, const AppComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend AppComplex operator-(const AppComplex& a, const AppComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend AppComplex operator*(const AppComplex& a, const AppComplex& b);
  friend AppComplex operator/(const AppComplex& a, const AppComplex& b);
  AppComplex& operator+=(const AppComplex& o) { return *this = *this + o; }
  AppComplex& operator-=(const AppComplex& o) { return *this = *this - o; }
  AppComplex& operator*=(const AppComplex& o) { return *this = *this * o; }
  AppComplex& operator/=(const AppComplex& o) { return *this = *this / o; }

  AppComplex conj() const { return {re, -im}; }
  AppComplex inverse() const;
  BigFloat abs() const { return hypot(re, im); }
  AppComplex sqrt() const;      // principal branch
  AppComplex pow(long n) const;  // n of either sign; base nonzero when n < 0

  std::string str(int digits = 0) const;
};

}  // namespace pellcf
