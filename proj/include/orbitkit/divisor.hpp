#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitkit/scalar.hpp"

namespace orbitkit {

/// A point of P^1 over Q; nullopt is the point at infinity.
using P1Point = std::optional<Rational>;

struct DivisorTerm {
  P1Point point;
  long multiplicity = 0;
};

/// Finite formal sum of points of P^1; terms have distinct points and nonzero multiplicity.
struct Divisor {
  std::vector<DivisorTerm> terms;

  long degree() const;
  /// Adds m to the multiplicity at p (merging and dropping zeros).
  void add(const P1Point& p, long m);
  Divisor operator-() const;
  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }
  std::string str() const;
};

/// Grammar: "0" | term (('+'|'-') term)*, term = [int '*'] '[' (rational | "inf") ']'.
Divisor parse_divisor(std::string_view text);

/// d - g + 1.
long rr_number(long d, long g);

/// Canonical divisor -2[inf] of P^1.
Divisor canonical_p1();

/// dim L(D) = { f : div f + D >= 0 } computed from the vanishing conditions on
/// the numerator of f (exact rank over Q).
long l_dimension(const Divisor& d);

struct RiemannRochReport {
  Divisor divisor;
  long l_d = 0;
  long l_k_minus_d = 0;
  long lhs = 0;  // l(D) - l(K - D)
  long rhs = 0;  // deg D + 1
  bool pass = false;
};

RiemannRochReport riemann_roch_p1_check(const Divisor& d);

/// Divisors supported on at most `max_points` of {0, 1, -1, 2, inf} with
/// multiplicities in [-max_mult, max_mult] and |deg| <= max_degree.
std::vector<Divisor> enumerate_divisors(int max_points = 3, long max_mult = 4, long max_degree = 6);

}  // namespace orbitkit
