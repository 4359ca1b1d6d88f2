// Exact checks of the triple-sum orthogonality identity for the column
// reading eigenvectors and of its telescoping certificates Q_I, Q_J1, Q_J2.
//
// Certificates are the multipliers Q/P. Where a denominator vanishes, Q is the
// limit along (n + 2e, i + e), e -> 0. A pole that does not cancel is a hard
// failure.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/rational.hpp"

namespace burnside {

struct WZPoint {
  int n = 0, m = 0, l1 = 0, l2 = 0, i = 0, j1 = 0, j2 = 0;

  bool valid() const {
    const int N = n - 2 * m;
    return m >= 0 && N >= 0 && l1 >= 0 && l1 <= N && l2 >= 0 && l2 <= N && i >= 0 && i <= N && j1 >= 0 &&
           j1 <= i && j2 >= 0 && j2 <= i;
  }
  std::string to_string() const {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " l1=" + std::to_string(l1) +
           " l2=" + std::to_string(l2) + " i=" + std::to_string(i) + " j1=" + std::to_string(j1) +
           " j2=" + std::to_string(j2);
  }
  friend bool operator==(const WZPoint&, const WZPoint&) = default;
};

// (-1)^{j1+j2} C(2m+l1, m+j1) C(2m+l2, m+j2) C(i, j1) C(i, j2)
//   C(n-2m-i, l1-j1) C(n-2m-i, l2-j2) C(m+i, i) C(n-m-i, m) (l1 - l2),
// with binomials outside their range equal to 0.
inline Integer summand_P(const WZPoint& p) {
  const int N = p.n - 2 * p.m;
  Integer v = binomial(2 * p.m + p.l1, p.m + p.j1) * binomial(2 * p.m + p.l2, p.m + p.j2) *
              binomial(p.i, p.j1) * binomial(p.i, p.j2) * binomial(N - p.i, p.l1 - p.j1) *
              binomial(N - p.i, p.l2 - p.j2) * binomial(p.m + p.i, p.i) * binomial(p.n - p.m - p.i, p.m) *
              (p.l1 - p.l2);
  return (p.j1 + p.j2) % 2 == 0 ? v : Integer(-v);
}

// sum_{i=0}^{n-2m} sum_{j1, j2 = 0}^{i} P.
inline Integer brute_force_identity(int n, int m, int l1, int l2) {
  const int N = n - 2 * m;
  if (m < 0 || N < 0 || l1 < 0 || l2 < 0 || l1 > N || l2 > N) throw std::out_of_range("invalid (n, m, l1, l2)");
  Integer sum = 0;
  for (int i = 0; i <= N; ++i)
    for (int j1 = 0; j1 <= i; ++j1)
      for (int j2 = 0; j2 <= i; ++j2) sum += summand_P({n, m, l1, l2, i, j1, j2});
  return sum;
}

namespace detail {

// Polynomial in e, coefficients ascending.
class EpsPoly {
 public:
  EpsPoly() = default;
  EpsPoly(Rational c0) : c_{std::move(c0)} {}
  static EpsPoly linear(const Rational& c0, const Rational& c1) {
    EpsPoly p;
    p.c_ = {c0, c1};
    return p;
  }

  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t x = 0; x < a.c_.size(); ++x)
      for (std::size_t y = 0; y < b.c_.size(); ++y) r.c_[x + y] += a.c_[x] * b.c_[y];
    return r;
  }
  friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly r = a;
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), Rational(0));
    for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k] += b.c_[k];
    return r;
  }
  friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) { return a + EpsPoly(-1) * b; }

  // Index of the lowest nonzero coefficient, or -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) return static_cast<int>(k);
    return -1;
  }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  Rational at_zero() const { return c_.empty() ? Rational(0) : c_[0]; }

 private:
  std::vector<Rational> c_;
};

// C(t0 + t1 e, b) = (top)(top-1)...(top-b+1)/b!, zero for b < 0.
inline EpsPoly binomial_poly(int t0, int t1, int b) {
  if (b < 0) return EpsPoly(0);
  EpsPoly r(1);
  for (int k = 0; k < b; ++k) r = r * EpsPoly::linear(t0 - k, t1);
  return r * EpsPoly(ratio(1, factorial(b)));
}

// P at (n + dn e, i + di e); the binomials whose upper index involves n or i
// are continued polynomially, C(m+i, i) is written as C(m+i, m).
inline EpsPoly summand_poly(const WZPoint& p, int dn, int di) {
  const int N = p.n - 2 * p.m;
  Integer s = binomial(2 * p.m + p.l1, p.m + p.j1) * binomial(2 * p.m + p.l2, p.m + p.j2) * (p.l1 - p.l2);
  if ((p.j1 + p.j2) % 2 != 0) s = -s;
  EpsPoly r{Rational(s)};
  r = r * binomial_poly(p.i, di, p.j1);
  r = r * binomial_poly(p.i, di, p.j2);
  r = r * binomial_poly(N - p.i, dn - di, p.l1 - p.j1);
  r = r * binomial_poly(N - p.i, dn - di, p.l2 - p.j2);
  r = r * binomial_poly(p.m + p.i, di, p.m);
  r = r * binomial_poly(p.n - p.m - p.i, dn - di, p.m);
  return r;
}

}  // namespace detail

enum class Certificate { I, J1, J2 };

inline const char* certificate_name(Certificate c) {
  switch (c) {
    case Certificate::I: return "Q_I";
    case Certificate::J1: return "Q_J1";
    case Certificate::J2: return "Q_J2";
  }
  return "?";
}

// Numerator and denominator of Q/P at (n + dn e, i + di e).
inline std::pair<detail::EpsPoly, detail::EpsPoly> certificate_multiplier(Certificate c, const WZPoint& p, int dn = 0,
                                                                          int di = 0) {
  using detail::EpsPoly;
  const EpsPoly n = EpsPoly::linear(p.n, dn);
  const EpsPoly i = EpsPoly::linear(p.i, di);
  const Rational j1 = p.j1, j2 = p.j2, m = p.m;
  const Rational dl = p.l1 - p.l2;
  switch (c) {
    case Certificate::I: {
      EpsPoly num = EpsPoly(-j1) + EpsPoly(2 * j1) * i - EpsPoly(j1) * i * i + EpsPoly(j2) - EpsPoly(2 * j2) * i +
                    EpsPoly(j2) * i * i + EpsPoly(3 * j1 * m) - EpsPoly(3 * j1 * m) * i - EpsPoly(3 * j2 * m) +
                    EpsPoly(3 * j2 * m) * i - EpsPoly(2 * j1 * m * m) + EpsPoly(2 * j2 * m * m) - EpsPoly(2 * j1) * n +
                    EpsPoly(2 * j1) * i * n + EpsPoly(2 * j2) * n - EpsPoly(2 * j2) * i * n +
                    EpsPoly(3 * j1 * m) * n - EpsPoly(3 * j2 * m) * n - EpsPoly(j1) * n * n + EpsPoly(j2) * n * n;
      EpsPoly d1 = EpsPoly(-1) + i - EpsPoly(j1) + EpsPoly(p.l1) + EpsPoly(2 * m) - n;
      EpsPoly d2 = EpsPoly(-1) + i - EpsPoly(j2) + EpsPoly(p.l2) + EpsPoly(2 * m) - n;
      return {num, EpsPoly(dl) * d1 * d2};
    }
    case Certificate::J1:
      return {EpsPoly(-j1 * j1 - j1 * m), (EpsPoly(1) + i - EpsPoly(j1)) * EpsPoly(dl)};
    case Certificate::J2:
      return {EpsPoly(j2 * j2 + j2 * m), (EpsPoly(1) + i - EpsPoly(j2)) * EpsPoly(dl)};
  }
  throw std::logic_error("unknown certificate");
}

struct CertificateValue {
  Rational value;
  bool via_limit = false;
};

// Q = (Q/P) * P at an integer point (which may sit one step outside the
// summation range, as Q_I(i+1) and Q_J(j+1) do). Throws std::domain_error on
// a non-removable pole.
inline CertificateValue certificate_value(Certificate c, const WZPoint& p) {
  if (p.l1 == p.l2) throw std::invalid_argument("certificates are undefined for l1 = l2");
  auto [num0, den0] = certificate_multiplier(c, p);
  const Rational d = den0.at_zero();
  if (d != 0) return {num0.at_zero() / d * detail::summand_poly(p, 0, 0).at_zero(), false};
  auto [num, den] = certificate_multiplier(c, p, 2, 1);
  detail::EpsPoly top = num * detail::summand_poly(p, 2, 1);
  const int vt = top.valuation();
  const int vd = den.valuation();
  if (vt < 0) return {0, true};
  if (vd < 0 || vt < vd) throw std::domain_error(std::string(certificate_name(c)) + " has a pole at " + p.to_string());
  if (vt > vd) return {0, true};
  return {top[static_cast<std::size_t>(vt)] / den[static_cast<std::size_t>(vd)], true};
}

struct CertificateFailure {
  WZPoint point;
  Rational lhs, rhs;
  std::string reason;
};

struct CertificateReport {
  int max_n = 0;
  std::size_t points_checked = 0;
  std::size_t limit_evaluations = 0;
  std::optional<CertificateFailure> failure;
  bool holds() const { return !failure.has_value(); }
};

// P(n+1) - P(n) = Q_I(i+1) - Q_I(i) + Q_J1(j1+1) - Q_J1(j1) + Q_J2(j2+1) - Q_J2(j2)
// at every valid lattice point with n <= max_n and l1 != l2.
inline CertificateReport check_certificates(int max_n) {
  CertificateReport rep;
  rep.max_n = max_n;
  auto q = [&](Certificate c, const WZPoint& p) {
    CertificateValue v = certificate_value(c, p);
    if (v.via_limit) ++rep.limit_evaluations;
    return v.value;
  };
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; 2 * m <= n; ++m) {
      const int N = n - 2 * m;
      for (int l1 = 0; l1 <= N; ++l1)
        for (int l2 = 0; l2 <= N; ++l2) {
          if (l1 == l2) continue;
          for (int i = 0; i <= N; ++i)
            for (int j1 = 0; j1 <= i; ++j1)
              for (int j2 = 0; j2 <= i; ++j2) {
                WZPoint p{n, m, l1, l2, i, j1, j2};
                WZPoint up = p;
                up.n += 1;
                Rational lhs = Rational(summand_P(up) - summand_P(p));
                Rational rhs;
                try {
                  WZPoint pi = p, pj1 = p, pj2 = p;
                  pi.i += 1;
                  pj1.j1 += 1;
                  pj2.j2 += 1;
                  rhs = q(Certificate::I, pi) - q(Certificate::I, p) + q(Certificate::J1, pj1) -
                        q(Certificate::J1, p) + q(Certificate::J2, pj2) - q(Certificate::J2, p);
                } catch (const std::domain_error& e) {
                  rep.failure = CertificateFailure{p, lhs, 0, e.what()};
                  return rep;
                }
                ++rep.points_checked;
                if (lhs != rhs) {
                  rep.failure = CertificateFailure{p, lhs, rhs, "telescoping relation fails"};
                  return rep;
                }
              }
        }
    }
  return rep;
}

// Q_I at i = 0 summed over j1, j2 in 0..n-2m; the telescoping argument needs
// this to vanish. Also returns false if Q_I(i=0) is not antisymmetric under
// exchanging j1 and j2 on its multiplier numerator.
inline bool q_i_boundary_cancels(int n, int m, int l1, int l2) {
  const int N = n - 2 * m;
  Rational total = 0;
  for (int j1 = 0; j1 <= N; ++j1)
    for (int j2 = 0; j2 <= N; ++j2) {
      WZPoint p{n, m, l1, l2, 0, j1, j2};
      WZPoint swapped{n, m, l1, l2, 0, j2, j1};
      if (certificate_multiplier(Certificate::I, p).first.at_zero() !=
          -certificate_multiplier(Certificate::I, swapped).first.at_zero())
        return false;
      total += certificate_value(Certificate::I, p).value;
    }
  return total == 0;
}

// At n = 2m only i = j1 = j2 = 0 survives, and the sum vanishes.
inline bool base_case_holds(int m, int l1, int l2) {
  return brute_force_identity(2 * m, m, l1, l2) == 0;
}

}  // namespace burnside
