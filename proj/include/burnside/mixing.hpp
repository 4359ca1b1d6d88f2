// Chi-square distance to stationarity through the orthogonal eigenbasis:
//   chi_x^2(s) = sum f(x)^2 / <f, f>_pi * lambda^{2s}
// over the nontrivial basis elements with nonzero eigenvalue, plus the O(n)
// path from a one-ones start and the isotypic eigenvalue tables.
#pragma once

#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "burnside/chain.hpp"
#include "burnside/eigenbasis.hpp"
#include "burnside/rational.hpp"
#include "burnside/tableau.hpp"

namespace burnside {

// Largest n for the exact chi-square from an arbitrary start.
inline constexpr int kChiSquareCap = 12;

using EigenvalueMap = std::map<Rational, Rational, std::greater<>>;

struct MixingReport {
  int n = 0;
  int s = 0;
  ChainState start;
  Rational chi_square;
  // eigenvalue -> its contribution at step s.
  EigenvalueMap breakdown;
};

// chi^2 as a polynomial in the eigenvalues: beta_k -> sum of f(x)^2/<f,f>.
// These coefficients do not depend on s.
struct ChiSquareCoefficients {
  int n = 0;
  ChainState start;
  EigenvalueMap coefficient;

  MixingReport at(int s) const {
    if (s < 1) throw std::domain_error("chi-square expansion is used for s >= 1 only");
    MixingReport r{n, s, start, 0, {}};
    for (const auto& [lambda, c] : coefficient) {
      Rational v = c * pow(lambda, 2UL * static_cast<unsigned long>(s));
      r.chi_square += v;
      r.breakdown.emplace(lambda, v);
    }
    return r;
  }
};

// f_Q^{m,l}(x) = T_{m,n}^{(l)}(|x|-m) * g_Q^{m,|x|-m}(x) needs one g vector
// per (m, Q, level); the coefficients are accumulated over all l at once.
inline ChiSquareCoefficients chi_square_coefficients(const ChainState& x) {
  x.validate();
  if (x.k != 2) throw std::invalid_argument("exact chi-square needs k = 2");
  if (x.n > kChiSquareCap) throw std::out_of_range("general-start chi-square is capped at n = 12");
  const int n = x.n;
  const Mask mx = x.mask();
  const int level = std::popcount(mx);
  ChiSquareCoefficients out{n, x, {}};
  for (int m = 0; 2 * m <= n; ++m) {
    const int i = level - m;
    if (i < 0 || i > n - 2 * m) continue;
    for (const auto& q : enumerate_tableaux(n, m)) {
      Rational g = g_vector(m, i, q).coeff(mx);
      if (g == 0) continue;
      for (int ell = 0; ell <= n - 2 * m; ++ell) {
        if ((m + ell) % 2 != 0 || (m == 0 && ell == 0)) continue;
        Rational f = Rational(t_scalar(m, n, ell, i)) * g;
        if (f == 0) continue;
        out.coefficient[eigenvalue_for(m, ell)] += f * f / sq_norm_closed(m, ell, q);
      }
    }
  }
  return out;
}

inline MixingReport chi_square(const ChainState& x, int s) {
  if (s < 1) throw std::domain_error("chi-square expansion is used for s >= 1 only");
  return chi_square_coefficients(x).at(s);
}

// f_Q^{m,l}(e_n): C(n-1,l) - l C(n-1,l-1) for m = 0, -(2+l) C(n-2,l) for
// m = 1 with a_1 = n, and 0 otherwise.
inline Rational evaluate_f_at_one_ones(int m, int ell, const Tableau& q, int n) {
  if (q.n() != n) throw std::invalid_argument("tableau size differs from n");
  detail::check_shape(q, m);
  detail::check_indices(n, m, ell, "l");
  if (m == 0) return Rational(binomial(n - 1, ell) - Integer(ell) * binomial(n - 1, ell - 1));
  if (m == 1 && q.second_row()[0] == n) return Rational(-Integer(2 + ell) * binomial(n - 2, ell));
  return Rational(0);
}

// The one-ones coefficients: only (0, l, row) with l even and (1, l, [n])
// with l odd contribute.
inline ChiSquareCoefficients chi_square_one_ones_coefficients(int n) {
  if (n < 3) throw std::domain_error("one-ones closed form needs n >= 3");
  ChiSquareCoefficients out{n, {}, {}};
  out.start.n = n;
  out.start.letters.assign(static_cast<std::size_t>(n), 0);
  out.start.letters.back() = 1;
  const Tableau row(n, {});
  const Tableau hook(n, {n});
  for (int ell = 2; ell <= n; ell += 2) {
    Rational f = evaluate_f_at_one_ones(0, ell, row, n);
    if (f != 0) out.coefficient[beta(ell / 2)] += f * f / sq_norm_closed(0, ell, row);
  }
  for (int ell = 1; ell <= n - 2; ell += 2) {
    Rational f = evaluate_f_at_one_ones(1, ell, hook, n);
    if (f != 0) out.coefficient[beta((1 + ell) / 2)] += f * f / sq_norm_closed(1, ell, hook);
  }
  return out;
}

inline MixingReport chi_square_one_ones(int n, int s) { return chi_square_one_ones_coefficients(n).at(s); }

// chi^2 >= 4 TV^2, so chi^2/4 bounds the squared total variation distance.
inline Rational tv_lower_bound_from_chi(const MixingReport& r) { return r.chi_square / 4; }

// Sandwich bound 5 (1/4)^{2s} <= chi^2 <= 270 (1/4)^{2s}.
inline Rational sandwich_lower(int s) { return Rational(5) * pow(Rational(1, 4), 2UL * static_cast<unsigned long>(s)); }
inline Rational sandwich_upper(int s) { return Rational(270) * pow(Rational(1, 4), 2UL * static_cast<unsigned long>(s)); }

// One isotypic block (shape (n-m, m)): for each m+l, the eigenvalue carried
// by every tableau column of the block.
struct IsotypicBlock {
  int m = 0;
  std::vector<Tableau> tableaux;
  std::map<int, Rational> eigenvalue_by_degree;  // m+l -> eigenvalue
};

// Blocks ordered with the widest second row first, as in the usual display.
inline std::vector<IsotypicBlock> isotypic_table(int n) {
  if (n < 1 || n > kChiSquareCap) throw std::out_of_range("isotypic table is displayed for 1 <= n <= 12");
  std::vector<IsotypicBlock> out;
  for (int m = n / 2; m >= 0; --m) {
    IsotypicBlock b{m, enumerate_tableaux(n, m), {}};
    for (int ell = 0; ell <= n - 2 * m; ++ell) b.eigenvalue_by_degree.emplace(m + ell, eigenvalue_for(m, ell));
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace burnside
