#include "orbitkit/divisor.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "orbitkit/errors.hpp"
#include "orbitkit/exact_linalg.hpp"

namespace orbitkit {

namespace {

bool same_point(const P1Point& a, const P1Point& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

// Finite points first in increasing order, infinity last.
bool point_less(const P1Point& a, const P1Point& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

std::string point_str(const P1Point& p) { return p ? to_string(*p) : std::string("inf"); }

}  // namespace

long Divisor::degree() const {
  long d = 0;
  for (const auto& t : terms) d += t.multiplicity;
  return d;
}

void Divisor::add(const P1Point& p, long m) {
  auto it = std::find_if(terms.begin(), terms.end(), [&](const DivisorTerm& t) { return same_point(t.point, p); });
  if (it == terms.end()) {
    if (m == 0) return;
    terms.push_back({p, m});
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return point_less(a.point, b.point); });
    return;
  }
  it->multiplicity += m;
  if (it->multiplicity == 0) terms.erase(it);
}

Divisor Divisor::operator-() const {
  Divisor r = *this;
  for (auto& t : r.terms) t.multiplicity = -t.multiplicity;
  return r;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  for (const auto& t : b.terms) r.add(t.point, t.multiplicity);
  return r;
}

std::string Divisor::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    long m = t.multiplicity;
    if (!first) os << (m < 0 ? "-" : "+");
    else if (m < 0) os << "-";
    first = false;
    os << (m < 0 ? -m : m) << "*[" << point_str(t.point) << "]";
  }
  return os.str();
}

Divisor parse_divisor(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto bad = [&](const std::string& why) -> Divisor { fail(ErrorKind::InvalidInput, "bad divisor \"" + std::string(text) + "\": " + why); };
  if (s.empty()) return bad("empty");
  Divisor d;
  if (s == "0") return d;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      return bad("expected + or -");
    }
    first = false;
    long mult = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t end = pos;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      if (end - pos > 9) return bad("multiplicity too large");
      mult = std::stol(s.substr(pos, end - pos));
      pos = end;
      if (pos >= s.size() || s[pos] != '*') return bad("expected '*' after multiplicity");
      ++pos;
    }
    if (pos >= s.size() || s[pos] != '[') return bad("expected '['");
    std::size_t close = s.find(']', pos);
    if (close == std::string::npos) return bad("missing ']'");
    std::string inner = s.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    P1Point p;
    if (inner == "inf" || inner == "oo") {
      p = std::nullopt;
    } else {
      try {
        p = parse_rational(inner);
      } catch (const Error&) {
        return bad("bad point '" + inner + "'");
      }
    }
    d.add(p, sign * mult);
  }
  return d;
}

long rr_number(long d, long g) {
  if (g < 0) fail(ErrorKind::InvalidInput, "genus must be >= 0");
  return d - g + 1;
}

Divisor canonical_p1() {
  Divisor k;
  k.add(std::nullopt, -2);
  return k;
}

long l_dimension(const Divisor& d) {
  // f = h / prod_{n_a > 0} (x - a)^{n_a}. The condition at infinity bounds
  // deg h; points with n_a < 0 force h to vanish there to order -n_a.
  long pole_total = 0, n_inf = 0;
  for (const auto& t : d.terms) {
    if (!t.point) n_inf = t.multiplicity;
    else if (t.multiplicity > 0) pole_total += t.multiplicity;
  }
  long max_deg = n_inf + pole_total;
  if (max_deg < 0) return 0;
  int unknowns = static_cast<int>(max_deg + 1);
  Echelon<Rational> ech(unknowns);
  for (const auto& t : d.terms) {
    if (!t.point || t.multiplicity >= 0) continue;
    const Rational& a = *t.point;
    for (long k = 0; k < -t.multiplicity; ++k) {
      // h^{(k)}(a) = sum_j c_j j!/(j-k)! a^{j-k}
      SparseVec<Rational> row;
      Rational apow(1);
      for (long j = k; j <= max_deg; ++j) {
        Rational falling = factorial(static_cast<int>(j)) / factorial(static_cast<int>(j - k));
        Rational v = falling * apow;
        if (sgn(v) != 0) row.emplace_back(static_cast<int>(j), v);
        apow *= a;
      }
      ech.insert(std::move(row));
    }
  }
  return unknowns - ech.rank();
}

RiemannRochReport riemann_roch_p1_check(const Divisor& d) {
  RiemannRochReport r;
  r.divisor = d;
  r.l_d = l_dimension(d);
  r.l_k_minus_d = l_dimension(canonical_p1() - d);
  r.lhs = r.l_d - r.l_k_minus_d;
  r.rhs = rr_number(d.degree(), 0);
  r.pass = r.lhs == r.rhs;
  return r;
}

std::vector<Divisor> enumerate_divisors(int max_points, long max_mult, long max_degree) {
  const std::vector<P1Point> support = {Rational(0), Rational(1), Rational(-1), Rational(2), std::nullopt};
  std::vector<Divisor> out;
  const int n = static_cast<int>(support.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    if (static_cast<int>(idx.size()) > max_points) continue;
    std::vector<long> mult(idx.size(), -max_mult);
    while (true) {
      bool nonzero = std::none_of(mult.begin(), mult.end(), [](long m) { return m == 0; });
      long deg = 0;
      for (long m : mult) deg += m;
      if (nonzero && deg <= max_degree && deg >= -max_degree) {
        Divisor d;
        for (std::size_t k = 0; k < idx.size(); ++k) d.add(support[static_cast<std::size_t>(idx[k])], mult[k]);
        out.push_back(std::move(d));
      }
      std::size_t k = 0;
      while (k < mult.size() && mult[k] == max_mult) mult[k++] = -max_mult;
      if (k == mult.size()) break;
      ++mult[k];
    }
  }
  return out;
}

}  // namespace orbitkit
