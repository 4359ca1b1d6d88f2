// The sl_2 action on V^{(x)n} (basis v_0, v_1 per coordinate) and the
// expansion K_n = sum_{x+y+z=n} c_{y,z} f(x, y, z) in symmetrized tensor
// products of p+, p-, p+h.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "burnside/chain.hpp"
#include "burnside/rational.hpp"
#include "burnside/tensor.hpp"

namespace burnside {

// A[row][col]; acting on coordinate values, g v_b = sum_a A[a][b] v_a.
struct TwoByTwo {
  std::array<std::array<Rational, 2>, 2> a;

  const Rational& operator()(int r, int c) const {
    return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  friend bool operator==(const TwoByTwo&, const TwoByTwo&) = default;
  friend TwoByTwo operator*(const TwoByTwo& x, const TwoByTwo& y) {
    TwoByTwo z;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        z.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x(r, 0) * y(0, c) + x(r, 1) * y(1, c);
    return z;
  }
};

namespace sl2 {
inline TwoByTwo mat(Rational a, Rational b, Rational c, Rational d) {
  return TwoByTwo{{{{a, b}, {c, d}}}};
}
inline const TwoByTwo e = mat(0, 1, 0, 0);
inline const TwoByTwo f = mat(0, 0, 1, 0);
inline const TwoByTwo h = mat(1, 0, 0, -1);
inline const TwoByTwo identity = mat(1, 0, 0, 1);
inline const TwoByTwo p_plus = mat(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2));
inline const TwoByTwo p_minus = mat(Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(1, 2));
inline const TwoByTwo p_plus_h = mat(Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(-1, 2));
}  // namespace sl2

// g(v_1 (x) ... (x) v_n) = sum_i v_1 (x) ... (x) g v_i (x) ... (x) v_n.
inline TensorVector act_sl2(const TwoByTwo& g, const TensorVector& v) {
  TensorVector out(v.n());
  for (const auto& [s, c] : v.coeffs()) {
    for (int i = 0; i < v.n(); ++i) {
      const Mask bit = Mask{1} << i;
      const int b = (s & bit) ? 1 : 0;
      for (int a = 0; a < 2; ++a) {
        const Rational& w = g(a, b);
        if (w == 0) continue;
        out.add_term(a ? (s | bit) : (s & ~bit), w * c);
      }
    }
  }
  return out;
}

// f(x, y, z): the sum over all orderings of x copies of p+, y of p- and z of
// p+h. Entries depend only on the PairStats of (row, col); each coordinate
// type contributes a factor (p+ + u p- + w p+h)[r][c] and the entry is the
// coefficient of u^y w^z in the product.
class SymmetrizedSum {
 public:
  SymmetrizedSum(int x, int y, int z) : x_(x), y_(y), z_(z) {
    if (x < 0 || y < 0 || z < 0) throw std::invalid_argument("tensor counts must be nonnegative");
  }

  int n() const { return x_ + y_ + z_; }
  int x() const { return x_; }
  int y() const { return y_; }
  int z() const { return z_; }

  Rational entry(const PairStats& p) const {
    if (p.n() != n()) throw std::invalid_argument("pair statistics do not match x + y + z");
    return coefficient_table(p)[static_cast<std::size_t>(y_)][static_cast<std::size_t>(z_)];
  }
  Rational entry(Mask row, Mask col) const { return entry(PairStats::of(n(), row, col)); }

  TensorVector apply(const TensorVector& v) const {
    if (v.n() != n()) throw std::invalid_argument("operator and vector have different n");
    if (n() > 8) throw std::out_of_range("dense application of f(x,y,z) is limited to n <= 8");
    TensorVector::Map out;
    for (Mask r = 0; r < (Mask{1} << n()); ++r) {
      Rational sum = 0;
      for (const auto& [c, w] : v.coeffs()) sum += entry(r, c) * w;
      if (sum != 0) out.emplace(r, std::move(sum));
    }
    return TensorVector(n(), std::move(out));
  }

  // table[y][z] = entry of f(n-y-z, y, z) at pair statistics p, for all y, z.
  static std::vector<std::vector<Rational>> coefficient_table(const PairStats& p) {
    const int n = p.n();
    std::vector<std::vector<Rational>> poly(static_cast<std::size_t>(n) + 1,
                                            std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    poly[0][0] = 1;
    int deg = 0;
    auto multiply = [&](int r, int c) {
      const Rational& a0 = sl2::p_plus(r, c);
      const Rational& a1 = sl2::p_minus(r, c);
      const Rational& a2 = sl2::p_plus_h(r, c);
      ++deg;
      for (int tot = deg; tot >= 0; --tot) {
        for (int y = std::min(tot, n); y >= 0; --y) {
          const int z = tot - y;
          if (z > n) continue;
          Rational v = 0;
          if (y + z <= deg - 1) v += a0 * poly[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)];
          if (y >= 1) v += a1 * poly[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(z)];
          if (z >= 1) v += a2 * poly[static_cast<std::size_t>(y)][static_cast<std::size_t>(z - 1)];
          poly[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)] = v;
        }
      }
    };
    for (int t = 0; t < p.n00; ++t) multiply(0, 0);
    for (int t = 0; t < p.n01; ++t) multiply(0, 1);
    for (int t = 0; t < p.n10; ++t) multiply(1, 0);
    for (int t = 0; t < p.n11; ++t) multiply(1, 1);
    return poly;
  }

 private:
  int x_, y_, z_;
};

// c_{y,z} = (y! z! / ((y/2)! (z/2)! ((y+z)/2)! 2^{y+z}))^2 for even y, z; else 0.
inline Rational conjecture_coefficient(int y, int z) {
  if (y < 0 || z < 0) throw std::invalid_argument("coefficient indices must be nonnegative");
  if (y % 2 != 0 || z % 2 != 0) return 0;
  Rational r = ratio(factorial(y) * factorial(z),
                       factorial(y / 2) * factorial(z / 2) * factorial((y + z) / 2) *
                           pow_int(2, static_cast<unsigned long>(y + z)));
  return r * r;
}

struct Sl2Term {
  int x, y, z;
  Rational coefficient;
};

struct Sl2Violation {
  Mask row = 0, col = 0;
  Rational kernel, expansion;
};

struct Sl2Report {
  int n = 0;
  std::size_t entries_checked = 0;
  std::vector<Sl2Term> terms;
  std::optional<Sl2Violation> violation;
  bool holds() const { return !violation.has_value(); }
};

// Nonzero terms, ordered by x descending, then coefficient descending, then y
// descending.
inline std::vector<Sl2Term> sl2_terms(int n) {
  std::vector<Sl2Term> terms;
  for (int y = 0; y <= n; ++y)
    for (int z = 0; y + z <= n; ++z) {
      Rational c = conjecture_coefficient(y, z);
      if (c != 0) terms.push_back({n - y - z, y, z, c});
    }
  std::sort(terms.begin(), terms.end(), [](const Sl2Term& a, const Sl2Term& b) {
    if (a.x != b.x) return a.x > b.x;
    if (a.coefficient != b.coefficient) return a.coefficient > b.coefficient;
    return a.y > b.y;
  });
  return terms;
}

// Compares K_n with sum c_{y,z} f(x, y, z) on every entry. Expansion values
// are computed once per PairStats and rows are compared on the fly.
inline Sl2Report verify_sl2_conjecture(int n) {
  if (n < 1 || n > kDenseMatrixCap) throw std::out_of_range("sl2 expansion check needs 1 <= n <= 10");
  Sl2Report rep;
  rep.n = n;
  rep.terms = sl2_terms(n);
  std::map<std::array<int, 3>, Rational> memo;
  auto expansion = [&](const PairStats& p) -> const Rational& {
    std::array<int, 3> key{p.n00, p.n01, p.n10};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto table = SymmetrizedSum::coefficient_table(p);
    Rational sum = 0;
    for (const auto& t : rep.terms)
      sum += t.coefficient * table[static_cast<std::size_t>(t.y)][static_cast<std::size_t>(t.z)];
    return memo.emplace(key, sum).first->second;
  };
  KernelTable kt(n);
  for (Mask r = 0; r < (Mask{1} << n); ++r) {
    for (Mask c = 0; c < (Mask{1} << n); ++c) {
      PairStats p = PairStats::of(n, r, c);
      const Rational& lhs = kt.entry(p);
      const Rational& rhs = expansion(p);
      ++rep.entries_checked;
      if (lhs != rhs) {
        rep.violation = Sl2Violation{r, c, lhs, rhs};
        return rep;
      }
    }
  }
  return rep;
}

// Facts about the diagonal coefficients, reported side by side: c_{2k,0}
// against beta_k, and c_{k,k} against beta_k.
struct CoefficientFact {
  int k;
  Rational beta_k, c_2k_0, c_k_k;
};

inline std::vector<CoefficientFact> coefficient_facts(int kmax) {
  std::vector<CoefficientFact> out;
  for (int k = 0; k <= kmax; ++k) out.push_back({k, beta(k), conjecture_coefficient(2 * k, 0), conjecture_coefficient(k, k)});
  return out;
}

}  // namespace burnside
