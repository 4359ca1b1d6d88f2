// The binary Burnside transition operator K_n on C_2^n: closed-form entries,
// application to vectors, stationary law, the lumping identity and the
// stochastic sampler (any alphabet size).
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "burnside/rational.hpp"
#include "burnside/tensor.hpp"

namespace burnside {

// Largest n for which the 4^n-entry dense kernel is materialized by default.
inline constexpr int kDenseMatrixCap = 10;

struct PairStats {
  int n00 = 0, n01 = 0, n10 = 0, n11 = 0;

  static PairStats of(int n, Mask x, Mask y) {
    PairStats p;
    p.n11 = std::popcount(x & y);
    p.n10 = std::popcount(x & ~y);
    p.n01 = std::popcount(~x & y);
    p.n00 = n - p.n11 - p.n10 - p.n01;
    return p;
  }
  int n() const { return n00 + n01 + n10 + n11; }
  friend bool operator==(const PairStats&, const PairStats&) = default;
};

// prod_ab C(2 n_ab, n_ab) / (4^n C(n00+n01, n00) C(n10+n11, n10)).
inline Rational k_entry(const PairStats& p) {
  Integer num = binomial(2 * p.n00, p.n00) * binomial(2 * p.n01, p.n01) *
                binomial(2 * p.n10, p.n10) * binomial(2 * p.n11, p.n11);
  Integer den = pow_int(4, static_cast<unsigned long>(p.n())) * binomial(p.n00 + p.n01, p.n00) *
                binomial(p.n10 + p.n11, p.n10);
  return ratio(num, den);
}

inline Rational k_entry(int n, Mask x, Mask y) { return k_entry(PairStats::of(n, x, y)); }

// A state of the general Burnside process on C_k^n.
struct ChainState {
  int n = 0;
  int k = 2;
  std::vector<int> letters;

  static ChainState binary(int n, Mask m) {
    ChainState s{n, 2, std::vector<int>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i) s.letters[static_cast<std::size_t>(i)] = static_cast<int>((m >> i) & 1U);
    return s;
  }
  static ChainState parse(std::string_view bits) {
    Subset s = Subset::parse(bits, true);
    return binary(s.n(), s.mask());
  }

  void validate() const {
    if (n < 1) throw std::invalid_argument("state length must be positive");
    if (k < 2) throw std::invalid_argument("alphabet needs at least two letters");
    if (static_cast<int>(letters.size()) != n) throw std::invalid_argument("letters length differs from n");
    for (int c : letters)
      if (c < 0 || c >= k) throw std::invalid_argument("letter outside the alphabet");
  }

  Mask mask() const {
    if (k != 2) throw std::invalid_argument("bitmask view needs k = 2");
    if (n > kHardCap) throw std::out_of_range("state too long for a bitmask");
    Mask m = 0;
    for (int i = 0; i < n; ++i)
      if (letters[static_cast<std::size_t>(i)]) m |= Mask{1} << i;
    return m;
  }

  std::string to_string() const {
    std::string s;
    for (int c : letters) s += std::to_string(c);
    return s;
  }

  friend bool operator==(const ChainState&, const ChainState&) = default;
};

inline Rational k_entry(const ChainState& x, const ChainState& y) {
  x.validate();
  y.validate();
  if (x.k != 2 || y.k != 2) throw std::invalid_argument("exact entries exist only for k = 2");
  if (x.n != y.n) throw std::invalid_argument("states have different lengths");
  return k_entry(x.n, x.mask(), y.mask());
}

// pi(x) = 1 / ((n+1) C(n, |x|)).
inline Rational stationary(int n, Mask x) {
  return ratio(1, Integer(n + 1) * binomial(n, std::popcount(x)));
}

// Dense stationary vector indexed by mask.
inline std::vector<Rational> stationary(int n) {
  check_dimension(n);
  std::vector<Rational> pi(std::size_t{1} << n);
  for (Mask x = 0; x < pi.size(); ++x) pi[x] = stationary(n, x);
  return pi;
}

// K_n entries cached by PairStats (the entry depends on nothing else).
class KernelTable {
 public:
  explicit KernelTable(int n, bool allow_over_cap = false) : n_(n), side_(static_cast<std::size_t>(n) + 1) {
    check_dimension(n, allow_over_cap);
    table_.resize(side_ * side_ * side_);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b)
        for (int c = 0; a + b + c <= n; ++c) table_[index(a, b, c)] = k_entry(PairStats{a, b, c, n - a - b - c});
  }

  int n() const { return n_; }
  const Rational& entry(const PairStats& p) const { return table_[index(p.n00, p.n01, p.n10)]; }
  const Rational& entry(Mask x, Mask y) const { return entry(PairStats::of(n_, x, y)); }

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * side_ + static_cast<std::size_t>(b)) * side_ + static_cast<std::size_t>(c);
  }
  int n_;
  std::size_t side_;
  std::vector<Rational> table_;
};

// (K v)(x) = sum_y K(x, y) v(y), rows generated from PairStats.
inline TensorVector apply_K(const KernelTable& kt, const TensorVector& v) {
  if (v.n() != kt.n()) throw std::invalid_argument("kernel and vector have different n");
  const int n = v.n();
  TensorVector::Map out;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    Rational sum = 0;
    for (const auto& [y, c] : v.coeffs()) sum += kt.entry(x, y) * c;
    if (sum != 0) out.emplace(x, std::move(sum));
  }
  return TensorVector(n, std::move(out));
}

inline TensorVector apply_K(const TensorVector& v, bool allow_over_cap = false) {
  if (!allow_over_cap && v.n() > kDenseMatrixCap)
    throw std::out_of_range("apply_K beyond n = " + std::to_string(kDenseMatrixCap) + " needs the override flag");
  return apply_K(KernelTable(v.n(), allow_over_cap), v);
}

// Entry source for check_lumping: kernel(n, x, y) = K_n(x, y).
using KernelFn = std::function<Rational(int, Mask, Mask)>;

inline Rational exact_kernel(int n, Mask x, Mask y) { return k_entry(n, x, y); }

struct LumpingViolation {
  Mask x = 0, y = 0;
  Rational lhs, rhs;
};

struct LumpingReport {
  int n = 0;
  std::size_t entries_checked = 0;
  std::optional<LumpingViolation> violation;
  bool holds() const { return !violation.has_value(); }
};

// Checks K_n (I^{(x)(n-1)} (x) K_1) = K_{n-1} (x) K_1 entrywise. The last
// tensor factor is coordinate n (bit n-1).
inline LumpingReport check_lumping(int n, const KernelFn& kernel = exact_kernel) {
  if (n < 2) throw std::invalid_argument("lumping identity needs n >= 2");
  check_dimension(n);
  LumpingReport rep;
  rep.n = n;
  const Mask last = Mask{1} << (n - 1);
  const Mask rest = last - 1;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    for (Mask y = 0; y < (Mask{1} << n); ++y) {
      const Mask yn = (y & last) ? 1 : 0;
      // (I (x) K_1)(z, y) is nonzero only when z agrees with y off coordinate n.
      Rational lhs = 0;
      for (Mask zn = 0; zn < 2; ++zn) {
        Mask z = (y & rest) | (zn ? last : 0);
        lhs += kernel(n, x, z) * kernel(1, zn, yn);
      }
      Rational rhs = kernel(n - 1, x & rest, y & rest) * kernel(1, (x & last) ? 1 : 0, yn);
      ++rep.entries_checked;
      if (lhs != rhs) {
        rep.violation = LumpingViolation{x, y, lhs, rhs};
        return rep;
      }
    }
  }
  return rep;
}

// One-step sampler of the Burnside process on C_k^n. Owns scratch space, not
// the generator.
class BurnsideSampler {
 public:
  explicit BurnsideSampler(int n, int k = 2) : n_(n), k_(k) {
    if (n < 1 || k < 2) throw std::invalid_argument("sampler needs n >= 1 and k >= 2");
    perm_.resize(static_cast<std::size_t>(n));
    seen_.resize(static_cast<std::size_t>(n));
    cls_.resize(static_cast<std::size_t>(n));
  }

  // Draws s uniform in the stabilizer of x (an independent uniform shuffle of
  // each letter class), then gives every cycle of s a uniform letter.
  template <class Rng>
  void step(std::vector<int>& letters, Rng& rng) {
    std::vector<int>& p = perm_;
    for (int c = 0; c < k_; ++c) {
      cls_.clear();
      for (int i = 0; i < n_; ++i)
        if (letters[static_cast<std::size_t>(i)] == c) cls_.push_back(i);
      shuffled_ = cls_;
      std::shuffle(shuffled_.begin(), shuffled_.end(), rng);
      for (std::size_t t = 0; t < cls_.size(); ++t) p[static_cast<std::size_t>(cls_[t])] = shuffled_[t];
    }
    std::fill(seen_.begin(), seen_.end(), 0);
    std::uniform_int_distribution<int> color(0, k_ - 1);
    for (int i = 0; i < n_; ++i) {
      if (seen_[static_cast<std::size_t>(i)]) continue;
      const int c = color(rng);
      for (int j = i; !seen_[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
        seen_[static_cast<std::size_t>(j)] = 1;
        letters[static_cast<std::size_t>(j)] = c;
      }
    }
  }

  template <class Rng>
  Mask step(Mask x, Rng& rng) {
    if (k_ != 2) throw std::invalid_argument("bitmask step needs k = 2");
    std::vector<int>& l = letters_;
    l.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) l[static_cast<std::size_t>(i)] = static_cast<int>((x >> i) & 1U);
    step(l, rng);
    Mask y = 0;
    for (int i = 0; i < n_; ++i)
      if (l[static_cast<std::size_t>(i)]) y |= Mask{1} << i;
    return y;
  }

 private:
  int n_, k_;
  std::vector<int> perm_, cls_, shuffled_, letters_;
  std::vector<char> seen_;
};

template <class Rng>
ChainState sample_step(const ChainState& x, Rng& rng) {
  x.validate();
  BurnsideSampler sampler(x.n, x.k);
  ChainState y = x;
  sampler.step(y.letters, rng);
  return y;
}

// Law of K^s(x, .) by repeated row-vector products (dense, exact).
inline std::vector<Rational> distribution_after(const KernelTable& kt, Mask x, int s) {
  const std::size_t dim = std::size_t{1} << kt.n();
  std::vector<Rational> row(dim), next(dim);
  row[x] = 1;
  for (int t = 0; t < s; ++t) {
    std::fill(next.begin(), next.end(), Rational(0));
    for (Mask z = 0; z < dim; ++z) {
      if (row[z] == 0) continue;
      for (Mask y = 0; y < dim; ++y) next[y] += row[z] * kt.entry(z, y);
    }
    std::swap(row, next);
  }
  return row;
}

// sum_y (K^s(x, y) - pi(y))^2 / pi(y) straight from the definition.
inline Rational chi_square_by_matrix_power(int n, Mask x, int s) {
  if (n < 1 || n > 8) throw std::out_of_range("matrix-power chi-square is limited to n <= 8");
  KernelTable kt(n);
  auto law = distribution_after(kt, x, s);
  Rational chi = 0;
  for (Mask y = 0; y < law.size(); ++y) {
    Rational pi = stationary(n, y);
    Rational d = law[y] - pi;
    chi += d * d / pi;
  }
  return chi;
}

// Total variation between the empirical one-step law from x (over `draws`
// samples) and the exact row K(x, .).
template <class Rng>
double one_step_tv(int n, Mask x, std::size_t draws, Rng& rng) {
  if (n < 1 || n > 16) throw std::out_of_range("one-step statistics need 1 <= n <= 16");
  BurnsideSampler sampler(n);
  std::vector<std::size_t> counts(std::size_t{1} << n, 0);
  for (std::size_t t = 0; t < draws; ++t) ++counts[sampler.step(x, rng)];
  KernelTable kt(n);
  double tv = 0;
  for (Mask y = 0; y < counts.size(); ++y)
    tv += std::abs(static_cast<double>(counts[y]) / static_cast<double>(draws) - to_double(kt.entry(x, y)));
  return tv / 2;
}

// Runs the chain from `start` and returns the total variation between the
// visited orbit (number of ones) frequencies and the uniform law on the n+1
// orbits.
template <class Rng>
double orbit_occupancy_tv(int n, Mask start, std::size_t burn_in, std::size_t steps, Rng& rng) {
  BurnsideSampler sampler(n);
  std::vector<std::size_t> visits(static_cast<std::size_t>(n) + 1, 0);
  Mask x = start;
  for (std::size_t t = 0; t < burn_in; ++t) x = sampler.step(x, rng);
  for (std::size_t t = 0; t < steps; ++t) {
    x = sampler.step(x, rng);
    ++visits[static_cast<std::size_t>(std::popcount(x))];
  }
  double tv = 0;
  for (std::size_t v : visits) tv += std::abs(static_cast<double>(v) / static_cast<double>(steps) - 1.0 / (n + 1));
  return tv / 2;
}

struct SpectrumCluster {
  double value = 0;
  int multiplicity = 0;
  // The exact eigenvalue (some beta_k or 0) within the clustering tolerance.
  std::optional<Rational> exact;
};

// Floating-point spectrum of K_n from the symmetrized kernel
// sqrt(pi(x)/pi(y)) K(x, y), clustered and sorted descending.
inline std::vector<SpectrumCluster> numeric_spectrum(int n, double tol = 1e-9) {
  if (n < 1 || n > kDenseMatrixCap) throw std::out_of_range("numeric spectrum needs 1 <= n <= 10");
  const Eigen::Index dim = Eigen::Index{1} << n;
  KernelTable kt(n);
  std::vector<double> pi(static_cast<std::size_t>(dim));
  for (Mask x = 0; x < static_cast<Mask>(dim); ++x) pi[x] = to_double(stationary(n, x));
  Eigen::MatrixXd s(dim, dim);
  for (Mask x = 0; x < static_cast<Mask>(dim); ++x)
    for (Mask y = 0; y < static_cast<Mask>(dim); ++y)
      s(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
          std::sqrt(pi[x] / pi[y]) * to_double(kt.entry(x, y));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
  std::sort(ev.begin(), ev.end(), std::greater<>());

  std::vector<SpectrumCluster> out;
  for (double v : ev) {
    if (!out.empty() && std::abs(out.back().value - v) <= tol) {
      auto& c = out.back();
      c.value = (c.value * c.multiplicity + v) / (c.multiplicity + 1);
      ++c.multiplicity;
    } else {
      out.push_back({v, 1, std::nullopt});
    }
  }
  for (auto& c : out) {
    if (std::abs(c.value) <= tol) c.exact = Rational(0);
    for (int k = 0; 2 * k <= n && !c.exact; ++k)
      if (std::abs(c.value - to_double(beta(k))) <= tol) c.exact = beta(k);
  }
  return out;
}

}  // namespace burnside
