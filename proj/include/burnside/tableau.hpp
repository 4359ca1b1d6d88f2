// Two-row standard Young tableaux of shape (n-m, m).
//
// A tableau is identified by its second row a_1 < ... < a_m; the first row is
// the increasing complement. Standardness for two rows is a_r >= 2r.
#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/rational.hpp"
#include "burnside/tensor.hpp"

namespace burnside {

class Tableau {
 public:
  Tableau(int n, std::vector<int> second_row) : n_(n), second_(std::move(second_row)) {
    if (n < 1) throw std::invalid_argument("tableau needs at least one box");
    const int m = static_cast<int>(second_.size());
    if (2 * m > n) throw std::invalid_argument("second row longer than first row");
    for (int r = 1; r <= m; ++r) {
      int a = second_[static_cast<std::size_t>(r - 1)];
      if (a > n) throw std::invalid_argument("second-row entry exceeds n");
      if (a < 2 * r) throw std::invalid_argument("not standard: a_r < 2r");
      if (r > 1 && a <= second_[static_cast<std::size_t>(r - 2)])
        throw std::invalid_argument("second row must be strictly increasing");
    }
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(second_.size()); }
  const std::vector<int>& second_row() const { return second_; }

  std::vector<int> first_row() const {
    std::vector<int> first;
    first.reserve(static_cast<std::size_t>(n_ - m()));
    auto it = second_.begin();
    for (int v = 1; v <= n_; ++v) {
      if (it != second_.end() && *it == v)
        ++it;
      else
        first.push_back(v);
    }
    return first;
  }

  // Row (1 or 2) and column (1-based) of box r.
  std::pair<int, int> position(int r) const {
    if (r < 1 || r > n_) throw std::out_of_range("box label out of range");
    auto it = std::lower_bound(second_.begin(), second_.end(), r);
    if (it != second_.end() && *it == r) return {2, static_cast<int>(it - second_.begin()) + 1};
    // r sits in row one after the (r - #second-row entries below r) - th slot
    int below = static_cast<int>(it - second_.begin());
    return {1, r - below};
  }

  bool is_column_reading() const {
    for (int r = 1; r <= m(); ++r)
      if (second_[static_cast<std::size_t>(r - 1)] != 2 * r) return false;
    return true;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.second_ <=> b.second_;
  }

 private:
  int n_;
  std::vector<int> second_;
};

// ct(Q(r)) = column - row; box 1 always has content 0.
inline int content(const Tableau& q, int r) {
  auto [row, col] = q.position(r);
  return col - row;
}

inline Tableau column_reading(int n, int m) {
  if (m < 0 || 2 * m > n) throw std::invalid_argument("need 0 <= 2m <= n");
  std::vector<int> row;
  for (int r = 1; r <= m; ++r) row.push_back(2 * r);
  return Tableau(n, std::move(row));
}

namespace detail {
inline void enumerate_rows(int n, int m, int r, int lo, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (r > m) {
    out.push_back(cur);
    return;
  }
  // leave room for the remaining m - r entries
  for (int a = std::max(lo, 2 * r); a <= n - (m - r); ++a) {
    cur.push_back(a);
    enumerate_rows(n, m, r + 1, a + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// All standard tableaux of shape (n-m, m) in reverse-lexicographic order of
// the second row (the column reading tableau comes last).
inline std::vector<Tableau> enumerate_tableaux(int n, int m) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (m < 0 || 2 * m > n) throw std::invalid_argument("need 0 <= 2m <= n");
  std::vector<std::vector<int>> rows;
  std::vector<int> cur;
  detail::enumerate_rows(n, m, 1, 1, cur, rows);
  std::sort(rows.begin(), rows.end(), std::greater<>());
  std::vector<Tableau> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.emplace_back(n, std::move(row));
  return out;
}

// The word for tau_Q = tau^(1) ... tau^(m), tau^(r) = tau_{a_r-1} ... tau_{2r},
// expanded as (s_j - 1/(j-2r+2)) and returned in application order:
// tau^(m) first, and inside each tau^(r) the factor s_{2r} first.
inline TauWord tau_word(const Tableau& q) {
  TauWord word;
  for (int r = q.m(); r >= 1; --r) {
    const int a = q.second_row()[static_cast<std::size_t>(r - 1)];
    for (int j = 2 * r; j <= a - 1; ++j) word.push_back({j, Rational(-1, j - 2 * r + 2)});
  }
  return word;
}

// gamma_Q = prod_r prod_{d=2}^{a_r-2r+1} (d^2-1)/d^2.
inline Rational gamma(const Tableau& q) {
  Rational g = 1;
  for (int r = 1; r <= q.m(); ++r) {
    const int a = q.second_row()[static_cast<std::size_t>(r - 1)];
    for (int d = 2; d <= a - 2 * r + 1; ++d) g *= Rational(d * d - 1, d * d);
  }
  g.canonicalize();
  return g;
}

// s_j Q: exchanges labels j and j+1, or nothing when they share a row or
// column (the result would not be standard).
inline std::optional<Tableau> swap_labels(const Tableau& q, int j) {
  if (j < 1 || j >= q.n()) throw std::out_of_range("label index out of range");
  auto pj = q.position(j);
  auto pk = q.position(j + 1);
  if (pj.first == pk.first || pj.second == pk.second) return std::nullopt;
  std::vector<int> row = q.second_row();
  for (int& a : row) {
    if (a == j)
      a = j + 1;
    else if (a == j + 1)
      a = j;
  }
  std::sort(row.begin(), row.end());
  return Tableau(q.n(), std::move(row));
}

// Two-row box diagram, e.g.
//   +---+---+
//   | 1 | 3 |
//   +---+---+
//   | 2 |
//   +---+
inline std::string render_ascii(const Tableau& q) {
  const int width = static_cast<int>(std::to_string(q.n()).size());
  auto border = [&](std::size_t cells) {
    std::string s = "+";
    for (std::size_t k = 0; k < cells; ++k) s += std::string(static_cast<std::size_t>(width + 2), '-') + "+";
    return s;
  };
  auto line = [&](const std::vector<int>& row) {
    std::ostringstream os;
    os << "|";
    for (int v : row) {
      std::string t = std::to_string(v);
      os << " " << std::string(static_cast<std::size_t>(width) - t.size(), ' ') << t << " |";
    }
    return os.str();
  };
  auto first = q.first_row();
  std::ostringstream os;
  os << border(first.size()) << "\n" << line(first) << "\n" << border(first.size()) << "\n";
  if (q.m() > 0) os << line(q.second_row()) << "\n" << border(q.second_row().size()) << "\n";
  return os.str();
}

// Compact one-line form, e.g. "12/3" or "1 3 5/2 4" when n > 9.
inline std::string render_compact(const Tableau& q) {
  const std::string sep = q.n() > 9 ? " " : "";
  auto join = [&](const std::vector<int>& row) {
    std::string s;
    for (std::size_t k = 0; k < row.size(); ++k) s += (k ? sep : "") + std::to_string(row[k]);
    return s;
  };
  std::string s = join(q.first_row());
  if (q.m() > 0) s += "/" + join(q.second_row());
  return s;
}

}  // namespace burnside
