// The orthogonal eigenbasis {f_Q^{m,l}} of the binary Burnside chain.
//
// For the column reading tableau T of shape (n-m, m):
//   g_T^{m,i} = (v_01 - v_10)^{(x)m} (x) sum_{|S|=i} v_S   (tail coords 2m+1..n)
//   f_T^{m,l} = sum_i T_{m,n}^{(l)}(i) g_T^{m,i}
// and for any other tableau Q both are transported by the intertwiner word
// tau_Q. f_Q^{m,l} has eigenvalue beta_{(m+l)/2} when m+l is even, else 0.
#pragma once

#include <bit>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "burnside/rational.hpp"
#include "burnside/tableau.hpp"
#include "burnside/tensor.hpp"

namespace burnside {

namespace detail {

inline void check_indices(int n, int m, int idx, const char* what) {
  if (n < 1) throw std::out_of_range("n must be positive");
  if (m < 0 || 2 * m > n) throw std::out_of_range("need 0 <= 2m <= n");
  if (idx < 0 || idx > n - 2 * m) throw std::out_of_range(std::string(what) + " outside 0..n-2m");
}

inline void check_shape(const Tableau& q, int m) {
  if (q.m() != m) throw std::invalid_argument("tableau shape does not match m");
}

// Calls fn(mask) for every k-subset of the low `width` bits, in increasing
// mask order.
template <class Fn>
void for_each_k_subset(int width, int k, Fn&& fn) {
  if (k < 0 || k > width) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  Mask s = (Mask{1} << k) - 1;
  const Mask limit = Mask{1} << width;
  while (s < limit) {
    fn(s);
    Mask c = s & (~s + 1);
    Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

// (v_01 - v_10)^{(x)m}: pair r occupies coordinates 2r-1, 2r; choosing the
// second coordinate contributes +1, the first -1.
template <class Fn>
void for_each_pair_pattern(int m, Fn&& fn) {
  for (Mask choice = 0; choice < (Mask{1} << m); ++choice) {
    Mask pattern = 0;
    int sign = 1;
    for (int r = 0; r < m; ++r) {
      if ((choice >> r) & 1U) {
        pattern |= Mask{1} << (2 * r);  // coordinate 2r+1 (first of the pair)
        sign = -sign;
      } else {
        pattern |= Mask{1} << (2 * r + 1);  // coordinate 2r+2
      }
    }
    fn(pattern, sign);
  }
}

}  // namespace detail

// T_{m,n}^{(l)}(i) = sum_{j=0}^{i} (-1)^{m+j} C(2m+l, m+j) C(i, j) C(n-2m-i, l-j).
inline Integer t_scalar(int m, int n, int ell, int i) {
  detail::check_indices(n, m, ell, "l");
  detail::check_indices(n, m, i, "i");
  Integer sum = 0;
  for (int j = 0; j <= i; ++j) {
    Integer term = binomial(2 * m + ell, m + j) * binomial(i, j) * binomial(n - 2 * m - i, ell - j);
    if ((m + j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

// g_T^{m,i} for the column reading tableau of shape (n-m, m).
inline TensorVector g_column_reading(int n, int m, int i) {
  detail::check_indices(n, m, i, "i");
  TensorVector v(n);
  const int tail = n - 2 * m;
  detail::for_each_pair_pattern(m, [&](Mask pattern, int sign) {
    detail::for_each_k_subset(tail, i, [&](Mask t) {
      v.add_term(pattern | (t << (2 * m)), Rational(sign));
    });
  });
  return v;
}

// g_Q^{m,i} = tau_Q g_T^{m,i}; supported on level m+i.
inline TensorVector g_vector(int m, int i, const Tableau& q) {
  detail::check_shape(q, m);
  return act_tau_word(tau_word(q), g_column_reading(q.n(), m, i));
}

// f_T^{m,l} = sum_i T_{m,n}^{(l)}(i) g_T^{m,i}.
inline TensorVector f_column_reading(int n, int m, int ell) {
  detail::check_indices(n, m, ell, "l");
  TensorVector v(n);
  const int tail = n - 2 * m;
  for (int i = 0; i <= tail; ++i) {
    Rational t(t_scalar(m, n, ell, i));
    if (t == 0) continue;
    detail::for_each_pair_pattern(m, [&](Mask pattern, int sign) {
      detail::for_each_k_subset(tail, i, [&](Mask s) {
        v.add_term(pattern | (s << (2 * m)), t * sign);
      });
    });
  }
  return v;
}

// f_Q^{m,l} = tau_Q f_T^{m,l}.
inline TensorVector f_vector(int m, int ell, const Tableau& q, bool allow_over_cap = false) {
  detail::check_shape(q, m);
  check_dimension(q.n(), allow_over_cap);
  return act_tau_word(tau_word(q), f_column_reading(q.n(), m, ell));
}

// f_S = sum_T (-1)^{|S n T|} C(|S|, |S n T|) v_T (dense).
inline TensorVector f_lifted(const Subset& s) {
  const int n = s.n();
  const int k = s.size();
  std::vector<Integer> coef(static_cast<std::size_t>(k) + 1);
  for (int c = 0; c <= k; ++c) coef[static_cast<std::size_t>(c)] = binomial(k, c) * sign_of_parity(c);
  TensorVector::Map out;
  for (Mask t = 0; t < (Mask{1} << n); ++t)
    out.emplace(t, Rational(coef[static_cast<std::size_t>(std::popcount(s.mask() & t))]));
  return TensorVector(n, std::move(out));
}

// Linear extension of v_S -> f_S.
inline TensorVector phi_map(const TensorVector& v) {
  const int n = v.n();
  check_dimension(n);
  std::vector<Rational> dense(std::size_t{1} << n);
  for (const auto& [s, c] : v.coeffs()) {
    const int k = std::popcount(s);
    std::vector<Rational> coef(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) coef[static_cast<std::size_t>(j)] = c * Rational(binomial(k, j) * sign_of_parity(j));
    for (Mask t = 0; t < (Mask{1} << n); ++t) dense[t] += coef[static_cast<std::size_t>(std::popcount(s & t))];
  }
  TensorVector::Map out;
  for (Mask t = 0; t < dense.size(); ++t)
    if (dense[t] != 0) out.emplace(t, std::move(dense[t]));
  return TensorVector(n, std::move(out));
}

// <g_T^{m,i}, g_T^{m,i}>_pi = 2^m/(n+1) C(n-2m, i)/C(n, m+i).
inline Rational g_column_reading_sq_norm(int n, int m, int i) {
  detail::check_indices(n, m, i, "i");
  return ratio(pow_int(2, static_cast<unsigned long>(m)), n + 1) *
         ratio(binomial(n - 2 * m, i), binomial(n, m + i));
}

// gamma_Q 2^m/(n+1) sum_i T(i)^2 C(n-2m, i)/C(n, m+i).
inline Rational sq_norm_series(int m, int ell, const Tableau& q) {
  detail::check_shape(q, m);
  const int n = q.n();
  Rational sum = 0;
  for (int i = 0; i <= n - 2 * m; ++i) {
    Rational t(t_scalar(m, n, ell, i));
    sum += t * t * ratio(binomial(n - 2 * m, i), binomial(n, m + i));
  }
  return gamma(q) * ratio(pow_int(2, static_cast<unsigned long>(m)), n + 1) * sum;
}

// gamma_Q 2^m/(n+1) (2m+l)!/((2m+2l+1) (m+l)!^2 l!) (n-2m)!/n! (n+l+1)!/(n-2m-l)!.
inline Rational sq_norm_closed(int m, int ell, const Tableau& q) {
  detail::check_shape(q, m);
  const int n = q.n();
  detail::check_indices(n, m, ell, "l");
  Integer fml = factorial(m + ell);
  Rational r = gamma(q) * ratio(pow_int(2, static_cast<unsigned long>(m)), n + 1);
  r *= ratio(factorial(2 * m + ell), Integer(2 * m + 2 * ell + 1) * fml * fml * factorial(ell));
  r *= ratio(factorial(n - 2 * m), factorial(n));
  r *= ratio(factorial(n + ell + 1), factorial(n - 2 * m - ell));
  return r;
}

inline Rational eigenvalue_for(int m, int ell) {
  return (m + ell) % 2 == 0 ? beta((m + ell) / 2) : Rational(0);
}

// One basis element (m, l, Q) with closed-form eigenvalue and squared norm.
// The vector itself is built on first request; concurrent callers see the
// same object.
class SpectrumEntry {
 public:
  SpectrumEntry(int m, int ell, Tableau q)
      : m_(m),
        ell_(ell),
        q_(std::move(q)),
        eigenvalue_(eigenvalue_for(m, ell)),
        sq_norm_(sq_norm_closed(m, ell, q_)),
        lazy_(std::make_shared<Lazy>()) {}

  int m() const { return m_; }
  int ell() const { return ell_; }
  const Tableau& tableau() const { return q_; }
  const Rational& eigenvalue() const { return eigenvalue_; }
  const Rational& sq_norm() const { return sq_norm_; }

  const TensorVector& vector() const {
    std::call_once(lazy_->once, [&] { lazy_->value.emplace(f_vector(m_, ell_, q_, true)); });
    return *lazy_->value;
  }

 private:
  struct Lazy {
    std::once_flag once;
    std::optional<TensorVector> value;
  };

  int m_;
  int ell_;
  Tableau q_;
  Rational eigenvalue_;
  Rational sq_norm_;
  std::shared_ptr<Lazy> lazy_;
};

// All 2^n entries ordered by m, then l, then tableau order.
inline std::vector<SpectrumEntry> full_basis(int n, bool allow_over_cap = false) {
  check_dimension(n, allow_over_cap);
  std::vector<SpectrumEntry> out;
  for (int m = 0; 2 * m <= n; ++m) {
    auto tabs = enumerate_tableaux(n, m);
    for (int ell = 0; ell <= n - 2 * m; ++ell)
      for (const auto& q : tabs) out.emplace_back(m, ell, q);
  }
  return out;
}

}  // namespace burnside
