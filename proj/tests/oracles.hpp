// Reference implementations used only by the tests. None of them call into
// the library's formulas: kernels come from enumerating the group action,
// binomials from Pascal's triangle, Hahn values from the 3F2 series.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Dense = std::vector<std::vector<Q>>;

inline Q frac(long p, long q) {
  Q r(p, q);
  r.canonicalize();
  return r;
}

// Pascal's triangle with C(a, b) = 0 outside 0 <= b <= a.
inline Z choose(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  static std::vector<std::vector<Z>> rows{{1}};
  while (static_cast<long>(rows.size()) <= a) {
    const auto& prev = rows.back();
    std::vector<Z> next(prev.size() + 1);
    next.front() = next.back() = 1;
    for (std::size_t k = 1; k < prev.size(); ++k) next[k] = prev[k - 1] + prev[k];
    rows.push_back(std::move(next));
  }
  return rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

inline unsigned long bit(unsigned long x, int i) { return (x >> i) & 1UL; }

// Burnside process on {0,1}^n under coordinate permutations, built from the
// definition: pick sigma uniformly from Stab(x), then y uniformly from
// Fix(sigma). Feasible for n <= 6.
inline Dense kernel_by_group_action(int n) {
  const unsigned long dim = 1UL << n;
  Dense K(dim, std::vector<Q>(dim));
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (unsigned long x = 0; x < dim; ++x) {
    std::vector<std::vector<int>> stab;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool fixes = true;
      for (int i = 0; i < n && fixes; ++i) fixes = bit(x, i) == bit(x, perm[static_cast<std::size_t>(i)]);
      if (fixes) stab.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& s : stab) {
      std::vector<int> cycle_of(static_cast<std::size_t>(n), -1);
      int cycles = 0;
      for (int i = 0; i < n; ++i) {
        if (cycle_of[static_cast<std::size_t>(i)] >= 0) continue;
        for (int j = i; cycle_of[static_cast<std::size_t>(j)] < 0; j = s[static_cast<std::size_t>(j)])
          cycle_of[static_cast<std::size_t>(j)] = cycles;
        ++cycles;
      }
      Q w = frac(1, static_cast<long>(stab.size()) << cycles);
      for (unsigned long c = 0; c < (1UL << cycles); ++c) {
        unsigned long y = 0;
        for (int i = 0; i < n; ++i)
          if (bit(c, cycle_of[static_cast<std::size_t>(i)])) y |= 1UL << i;
        K[x][y] += w;
      }
    }
  }
  return K;
}

// Uniform on orbits, then uniform within the orbit.
inline std::vector<Q> stationary_by_orbits(int n) {
  const unsigned long dim = 1UL << n;
  std::vector<long> orbit_size(static_cast<std::size_t>(n) + 1, 0);
  for (unsigned long x = 0; x < dim; ++x) ++orbit_size[static_cast<std::size_t>(std::popcount(x))];
  std::vector<Q> pi(dim);
  for (unsigned long x = 0; x < dim; ++x)
    pi[x] = frac(1, (n + 1) * orbit_size[static_cast<std::size_t>(std::popcount(x))]);
  return pi;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t d = a.size();
  Dense c(d, std::vector<Q>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// sum_y (K^s(x,y) - pi(y))^2 / pi(y) for every start x, using dense powers.
inline std::vector<Q> chi_square_all_starts(const Dense& K, const std::vector<Q>& pi, int s) {
  Dense P = K;
  for (int t = 1; t < s; ++t) P = multiply(P, K);
  std::vector<Q> out(K.size());
  for (std::size_t x = 0; x < K.size(); ++x)
    for (std::size_t y = 0; y < K.size(); ++y) {
      Q d = P[x][y] - pi[y];
      out[x] += d * d / pi[y];
    }
  return out;
}

// T_{m,n}^{(l)}(i) by summing over all choices of l coordinates among the
// n-2m tail coordinates, i of which are ones: each choice with j ones picked
// contributes (-1)^{m+j} C(2m+l, m+j).
inline Z t_scalar_by_subsets(int m, int n, int ell, int i) {
  const int N = n - 2 * m;
  Z total = 0;
  for (unsigned long pick = 0; pick < (1UL << N); ++pick) {
    if (std::popcount(pick) != ell) continue;
    const int j = std::popcount(pick & ((1UL << i) - 1));
    Z term = choose(2 * m + ell, m + j);
    total += (m + j) % 2 == 0 ? term : Z(-term);
  }
  return total;
}

// Q_l(x; a, b, N) = 3F2(-l, l+a+b+1, -x; a+1, -N; 1), summed term by term.
inline Q hahn_3f2(int N, int a, int b, int ell, int x) {
  Q sum = 0, term = 1;
  for (int k = 0; k <= ell; ++k) {
    sum += term;
    Q num = Q(-ell + k) * Q(ell + a + b + 1 + k) * Q(-x + k);
    Q den = Q(a + 1 + k) * Q(-N + k) * Q(k + 1);
    if (num == 0) break;
    term *= num / den;
  }
  return sum;
}

// f(x, y, z) as a dense matrix: the sum of Kronecker products over every
// distinct arrangement of x copies of A0, y of A1 and z of A2.
inline Dense symmetrized_sum(int x, int y, int z, const Q (&A0)[2][2], const Q (&A1)[2][2], const Q (&A2)[2][2]) {
  const int n = x + y + z;
  const unsigned long dim = 1UL << n;
  std::vector<int> word;
  word.insert(word.end(), static_cast<std::size_t>(x), 0);
  word.insert(word.end(), static_cast<std::size_t>(y), 1);
  word.insert(word.end(), static_cast<std::size_t>(z), 2);
  const Q(*mats[3])[2][2] = {&A0, &A1, &A2};
  Dense out(dim, std::vector<Q>(dim));
  do {
    for (unsigned long r = 0; r < dim; ++r)
      for (unsigned long c = 0; c < dim; ++c) {
        Q e = 1;
        for (int k = 0; k < n && e != 0; ++k) e *= (*mats[word[static_cast<std::size_t>(k)]])[bit(r, k)][bit(c, k)];
        out[r][c] += e;
      }
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// The triple-sum summand written out independently.
inline Z wz_summand(int n, int m, int l1, int l2, int i, int j1, int j2) {
  const int N = n - 2 * m;
  Z v = choose(2 * m + l1, m + j1) * choose(2 * m + l2, m + j2) * choose(i, j1) * choose(i, j2) *
        choose(N - i, l1 - j1) * choose(N - i, l2 - j2) * choose(m + i, i) * choose(n - m - i, m) * (l1 - l2);
  return (j1 + j2) % 2 == 0 ? v : Z(-v);
}

}  // namespace oracle
