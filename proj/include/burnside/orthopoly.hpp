// (alpha, beta)-Hahn polynomials on {0..N}, normalized to Q(0) = 1, with the
// beta-binomial weight and the closed-form orthogonality constant. The (0, 0)
// case is the discrete Chebyshev family.
#pragma once

#include <stdexcept>

#include "burnside/rational.hpp"

namespace burnside {

// (a)_0 = 1, (a)_j = a (a+1) ... (a+j-1).
inline Rational rising_factorial(const Rational& a, int j) {
  if (j < 0) throw std::domain_error("rising factorial needs j >= 0");
  Rational r = 1;
  for (int k = 0; k < j; ++k) r *= a + k;
  return r;
}

struct HahnParams {
  int N;
  int alpha;
  int beta;
  int ell;

  void validate() const {
    if (N < 0) throw std::invalid_argument("Hahn domain size must be >= 0");
    if (alpha < 0 || beta < 0) throw std::invalid_argument("Hahn parameters must be >= 0");
    if (ell < 0 || ell > N) throw std::invalid_argument("Hahn degree must be in 0..N");
  }
};

// sum_k (-ell)_k (ell+alpha+beta+1)_k (-x)_k / ((alpha+1)_k (-N)_k k!).
inline Rational hahn_eval(const HahnParams& p, int x) {
  p.validate();
  if (x < 0 || x > p.N) throw std::out_of_range("Hahn argument outside 0..N");
  Rational sum = 0;
  Rational term = 1;  // k = 0
  for (int k = 0; k <= p.ell; ++k) {
    if (k > 0) {
      const int km = k - 1;
      Rational den = Rational(p.alpha + 1 + km) * Rational(-p.N + km) * k;
      if (den == 0) throw std::logic_error("Hahn series hit a zero denominator");
      term *= Rational(-p.ell + km) * Rational(p.ell + p.alpha + p.beta + 1 + km) *
              Rational(-x + km);
      term /= den;
    }
    sum += term;
  }
  return sum;
}

// m(i) = C(N, i) (alpha+1)_i (beta+1)_{N-i} / (alpha+beta+2)_N.
inline Rational beta_binomial_weight(int N, int alpha, int beta, int i) {
  if (i < 0 || i > N) throw std::out_of_range("beta-binomial index outside 0..N");
  Rational w = Rational(binomial(N, i)) * rising_factorial(alpha + 1, i) *
               rising_factorial(beta + 1, N - i) / rising_factorial(alpha + beta + 2, N);
  return w;
}

// Closed-form diagonal value of
//   sum_i C(alpha+i, i) C(N+beta-i, N-i) Q^ell(i)^2,
// namely (-1)^ell ell! (beta+1)_ell (ell+alpha+beta+1)_{N+1}
//        / (N! (2 ell+alpha+beta+1) (-N)_ell (alpha+1)_ell).
inline Rational hahn_norm_rhs(int N, int alpha, int beta, int ell) {
  HahnParams{N, alpha, beta, ell}.validate();
  Rational num = Rational(sign_of_parity(ell)) * Rational(factorial(ell)) *
                 rising_factorial(beta + 1, ell) *
                 rising_factorial(ell + alpha + beta + 1, N + 1);
  Rational den = Rational(factorial(N)) * (2 * ell + alpha + beta + 1) *
                 rising_factorial(-N, ell) * rising_factorial(alpha + 1, ell);
  return num / den;
}

// Direct weighted sum sum_i C(alpha+i, i) C(N+beta-i, N-i) Q^l1(i) Q^l2(i).
inline Rational hahn_weighted_sum(int N, int alpha, int beta, int l1, int l2) {
  Rational sum = 0;
  for (int i = 0; i <= N; ++i) {
    Rational w = Rational(binomial(alpha + i, i) * binomial(N + beta - i, N - i));
    sum += w * hahn_eval({N, alpha, beta, l1}, i) * hahn_eval({N, alpha, beta, l2}, i);
  }
  return sum;
}

}  // namespace burnside
