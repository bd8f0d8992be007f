#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orbitkit {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
int compare(const Rational& a, const Rational& b);

/// Exact element of Q(i): re + im*i with rational parts.
class ScalarQ {
 public:
  ScalarQ() = default;
  ScalarQ(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ScalarQ(const Rational& re) : re_(re) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  ScalarQ(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ScalarQ i() { return {Rational(0), Rational(1)}; }
  static ScalarQ fraction(long num, long den) { return ScalarQ(Rational(num, den)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  ScalarQ conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  ScalarQ inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  ScalarQ operator-() const { return {-re_, -im_}; }
  ScalarQ& operator+=(const ScalarQ& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ScalarQ& operator-=(const ScalarQ& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ScalarQ& operator*=(const ScalarQ& o);
  ScalarQ& operator/=(const ScalarQ& o) { return *this *= o.inverse(); }

  friend ScalarQ operator+(ScalarQ a, const ScalarQ& b) { return a += b; }
  friend ScalarQ operator-(ScalarQ a, const ScalarQ& b) { return a -= b; }
  friend ScalarQ operator*(ScalarQ a, const ScalarQ& b) { return a *= b; }
  friend ScalarQ operator/(ScalarQ a, const ScalarQ& b) { return a /= b; }

  friend bool operator==(const ScalarQ& a, const ScalarQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const ScalarQ& a, const ScalarQ& b) { return !(a == b); }
  // Lexicographic on (re, im); only used for canonical ordering.
  friend bool operator<(const ScalarQ& a, const ScalarQ& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
  }

  /// "3/2", "-i", "1/2+3/4i"
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const ScalarQ& s);

/// Accepts "a", "a/b", "i", "-i", "a+bi", "a/b-c/di", "2i".
ScalarQ parse_scalar(std::string_view text);

/// n! as a rational.
Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace orbitkit
