#ifndef DUALPAIR_CORE_GAUSSIAN_HPP
#define DUALPAIR_CORE_GAUSSIAN_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dualpair {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(num, den) does not canonicalize; mpq equality assumes canonical
// form, so fractions must be built through this helper.
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Element a + b*i of Q(i).  All coefficient arithmetic in the library is
// exact; there is no floating point anywhere.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, Rational(-im)}; }

  // |z|^2 as a rational.
  Rational norm() const { return re * re + im * im; }

  GaussianRational inverse() const;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Canonical text form "a/b+c/d*i" (denominator 1 printed without "/1",
  // imaginary part omitted when zero).
  std::string str() const;
};

Rational parse_rational(const std::string& s);
GaussianRational parse_gaussian(const std::string& s);

}  // namespace dualpair

#endif
