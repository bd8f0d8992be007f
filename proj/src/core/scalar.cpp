#include "orbitkit/scalar.hpp"

#include <cctype>
#include <ostream>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(ErrorKind::InvalidInput, "bad rational '" + std::string(text) + "'");
    mpz_class d{std::string(den)};
    if (d == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    out = Rational(mpz_class(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) || (whole.empty() && frac.empty()))
      fail(ErrorKind::InvalidInput, "bad decimal '" + std::string(text) + "'");
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    out = Rational(mpz_class(digits.empty() ? "0" : digits), den);
  } else {
    if (!all_digits(s)) fail(ErrorKind::InvalidInput, "bad rational '" + std::string(text) + "'");
    out = Rational(mpz_class(std::string(s)));
  }
  out.canonicalize();
  return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

ScalarQ ScalarQ::inverse() const {
  Rational n = norm2();
  if (sgn(n) == 0) fail(ErrorKind::Precondition, "division by zero scalar");
  return {re_ / n, -im_ / n};
}

ScalarQ& ScalarQ::operator*=(const ScalarQ& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string ScalarQ::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  auto imag = [](const Rational& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return v.get_str() + "i";
  };
  if (sgn(re_) == 0) return imag(im_);
  std::string out = re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + imag(im_);
}

std::ostream& operator<<(std::ostream& os, const ScalarQ& s) { return os << s.str(); }

ScalarQ parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) fail(ErrorKind::InvalidInput, "empty scalar");
  if (s.back() != 'i') return ScalarQ(parse_rational(s));
  // Split at the last sign that is not the leading one.
  std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view t) -> Rational {
    t = trim(t);
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return parse_rational(t);
  };
  if (split == std::string_view::npos) return {Rational(0), imag_part(body)};
  return {parse_rational(body.substr(0, split)), imag_part(body.substr(split))};
}

Rational factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace orbitkit
