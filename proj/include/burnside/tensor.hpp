// Subset-indexed sparse vectors in V^{(x)n}, the stationary inner product, and
// the coordinate-permutation actions (transpositions, Jucys-Murphy sums and
// scalar-shifted transposition words).
#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "burnside/rational.hpp"

namespace burnside {

// Largest n for which whole-space enumerations (2^n states) are allowed
// without an explicit override.
inline constexpr int kDenseCap = 24;
// Largest n representable at all (bitmask width).
inline constexpr int kHardCap = 62;

using Mask = std::uint64_t;

inline void check_dimension(int n, bool allow_over_cap = false) {
  int cap = allow_over_cap ? kHardCap : kDenseCap;
  if (n < 1 || n > cap)
    throw std::out_of_range("coordinate count " + std::to_string(n) + " outside [1, " +
                            std::to_string(cap) + "]");
}

// A subset S of {1..n}; bit (i-1) of the mask is set iff i is in S.
class Subset {
 public:
  Subset(int n, Mask members, bool allow_over_cap = false) : n_(n), members_(members) {
    check_dimension(n, allow_over_cap);
    if (members >> n != 0) throw std::out_of_range("subset mask has bits beyond n");
  }

  // Coordinate 1 is the leftmost character: "011" is {2, 3}.
  static Subset parse(std::string_view bits, bool allow_over_cap = false) {
    Mask m = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (bits[k] == '1')
        m |= Mask{1} << k;
      else if (bits[k] != '0')
        throw std::invalid_argument("subset string must contain only 0 and 1");
    }
    return Subset(static_cast<int>(bits.size()), m, allow_over_cap);
  }

  static Subset of(int n, std::initializer_list<int> coordinates) {
    Mask m = 0;
    for (int c : coordinates) {
      if (c < 1 || c > n) throw std::out_of_range("coordinate out of range");
      m |= Mask{1} << (c - 1);
    }
    return Subset(n, m);
  }

  int n() const { return n_; }
  Mask mask() const { return members_; }
  int size() const { return std::popcount(members_); }
  bool contains(int coordinate) const { return (members_ >> (coordinate - 1)) & 1U; }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int k = 0; k < n_; ++k)
      if ((members_ >> k) & 1U) s[static_cast<std::size_t>(k)] = '1';
    return s;
  }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  int n_;
  Mask members_;
};

inline std::string mask_string(int n, Mask m) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k)
    if ((m >> k) & 1U) s[static_cast<std::size_t>(k)] = '1';
  return s;
}

// Exchanges membership of coordinates i and j (1-based).
inline constexpr Mask swap_coordinates(Mask m, int i, int j) {
  Mask bi = (m >> (i - 1)) & 1U;
  Mask bj = (m >> (j - 1)) & 1U;
  if (bi == bj) return m;
  return m ^ ((Mask{1} << (i - 1)) | (Mask{1} << (j - 1)));
}

class Transposition {
 public:
  Transposition(int i, int j) : i_(i), j_(j) {
    if (i == j) throw std::invalid_argument("transposition needs distinct coordinates");
    if (i < 1 || j < 1) throw std::out_of_range("transposition coordinates are 1-based");
  }
  int i() const { return i_; }
  int j() const { return j_; }
  int max() const { return i_ > j_ ? i_ : j_; }

 private:
  int i_, j_;
};

// Sparse element of V^{(x)n}. Zero coefficients are never stored, so
// equality is structural.
class TensorVector {
 public:
  using Map = std::map<Mask, Rational>;

  explicit TensorVector(int n, bool allow_over_cap = true) : n_(n) {
    check_dimension(n, allow_over_cap);
  }

  TensorVector(int n, Map coeffs, bool allow_over_cap = true) : n_(n) {
    check_dimension(n, allow_over_cap);
    for (auto& [m, c] : coeffs) {
      if (m >> n != 0) throw std::out_of_range("key has bits beyond n");
      if (c != 0) coeffs_.emplace(m, std::move(c));
    }
  }

  static TensorVector basis(const Subset& s) {
    TensorVector v(s.n());
    v.coeffs_.emplace(s.mask(), Rational(1));
    return v;
  }

  // Builds from display strings, e.g. {{"011", 1}, {"110", -1}}.
  static TensorVector from_strings(int n, std::initializer_list<std::pair<const char*, Rational>> terms) {
    Map m;
    for (const auto& [key, c] : terms) {
      Subset s = Subset::parse(key, true);
      if (s.n() != n) throw std::invalid_argument("key length differs from n");
      m[s.mask()] += c;
    }
    return TensorVector(n, std::move(m));
  }

  int n() const { return n_; }
  const Map& coeffs() const { return coeffs_; }
  std::size_t support_size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(Mask m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  Rational coeff(const Subset& s) const { return coeff(s.mask()); }

  TensorVector& operator+=(const TensorVector& o) {
    require_same_n(o);
    for (const auto& [m, c] : o.coeffs_) add_term(m, c);
    return *this;
  }
  TensorVector& operator-=(const TensorVector& o) {
    require_same_n(o);
    for (const auto& [m, c] : o.coeffs_) add_term(m, -c);
    return *this;
  }
  TensorVector& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [m, c] : coeffs_) c *= s;
    return *this;
  }

  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(const Rational& s, TensorVector v) { return v *= s; }
  friend TensorVector operator*(TensorVector v, const Rational& s) { return v *= s; }
  friend TensorVector operator-(TensorVector v) { return v *= Rational(-1); }

  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  // Adds c to the coefficient of m, dropping it if the result is zero.
  void add_term(Mask m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  void require_same_n(const TensorVector& o) const {
    if (o.n_ != n_) throw std::invalid_argument("tensor vectors have different n");
  }

 private:
  int n_;
  Map coeffs_;
};

// <v_S, v_T>_pi = delta_ST / ((n+1) C(n, |S|)).
inline Rational inner_product(const TensorVector& u, const TensorVector& v) {
  u.require_same_n(v);
  const auto& small = u.support_size() <= v.support_size() ? u.coeffs() : v.coeffs();
  const auto& large = u.support_size() <= v.support_size() ? v.coeffs() : u.coeffs();
  const int n = u.n();
  Rational sum = 0;
  for (const auto& [m, c] : small) {
    auto it = large.find(m);
    if (it == large.end()) continue;
    Rational w = ratio(1, Integer(n + 1) * binomial(n, std::popcount(m)));
    sum += c * it->second * w;
  }
  return sum;
}

inline TensorVector act_transposition(const Transposition& t, const TensorVector& v) {
  if (t.max() > v.n()) throw std::out_of_range("transposition coordinate exceeds n");
  TensorVector::Map out;
  for (const auto& [m, c] : v.coeffs()) out.emplace(swap_coordinates(m, t.i(), t.j()), c);
  return TensorVector(v.n(), std::move(out));
}

// M_r v = sum_{i<r} s_{ir} v.
inline TensorVector act_murphy(int r, const TensorVector& v) {
  if (r < 2 || r > v.n()) throw std::out_of_range("Murphy index must satisfy 2 <= r <= n");
  TensorVector out(v.n());
  for (const auto& [m, c] : v.coeffs())
    for (int i = 1; i < r; ++i) out.add_term(swap_coordinates(m, i, r), c);
  return out;
}

// One factor (s_j + shift) of an intertwiner word; s_j swaps j and j+1.
struct TauFactor {
  int j;
  Rational shift;
  friend bool operator==(const TauFactor&, const TauFactor&) = default;
};

// Factors in application order: word[0] acts on the vector first. For the
// written product A_1 A_2 ... A_k this is {A_k, ..., A_2, A_1}.
using TauWord = std::vector<TauFactor>;

inline TensorVector act_tau_factor(const TauFactor& f, const TensorVector& v) {
  if (f.j < 1 || f.j + 1 > v.n()) throw std::out_of_range("simple reflection index out of range");
  TensorVector out(v.n());
  for (const auto& [m, c] : v.coeffs()) {
    out.add_term(swap_coordinates(m, f.j, f.j + 1), c);
    out.add_term(m, f.shift * c);
  }
  return out;
}

inline TensorVector act_tau_word(const TauWord& word, TensorVector v) {
  for (const auto& f : word) v = act_tau_factor(f, v);
  return v;
}

}  // namespace burnside
