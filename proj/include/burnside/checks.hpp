// End-to-end verification routines shared by the command-line tool. Each
// returns a CheckResult; a failed check carries a JSON record of the first
// counterexample.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "burnside/chain.hpp"
#include "burnside/eigenbasis.hpp"
#include "burnside/json_io.hpp"
#include "burnside/mixing.hpp"
#include "burnside/orthopoly.hpp"
#include "burnside/sl2.hpp"
#include "burnside/wz.hpp"

namespace burnside {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string summary;
  json failure;  // null when passed

  static CheckResult ok(std::string name, std::string summary) { return {std::move(name), true, std::move(summary), nullptr}; }
  static CheckResult fail(std::string name, std::string summary, json failure) {
    return {std::move(name), false, std::move(summary), std::move(failure)};
  }
};

namespace detail {

// Dense pi-weighted copy of a vector: w[x] = pi(x) v(x).
inline std::vector<Rational> weighted_dense(const TensorVector& v) {
  std::vector<Rational> w(std::size_t{1} << v.n());
  for (const auto& [x, c] : v.coeffs()) w[x] = c * stationary(v.n(), x);
  return w;
}

inline json entry_id(const SpectrumEntry& e) {
  return json{{"m", e.m()}, {"l", e.ell()}, {"tableau", render_compact(e.tableau())}};
}

}  // namespace detail

// Every pair of distinct basis vectors is orthogonal and K f = lambda f.
inline CheckResult check_eigenbasis(int n) {
  const std::string name = "eigenbasis n=" + std::to_string(n);
  if (n > 8) throw std::out_of_range("full pairwise check is limited to n <= 8");
  auto basis = full_basis(n);
  std::vector<std::vector<Rational>> weighted;
  weighted.reserve(basis.size());
  for (const auto& e : basis) weighted.push_back(detail::weighted_dense(e.vector()));
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Rational ip = 0;
      for (const auto& [x, c] : basis[b].vector().coeffs())
        if (weighted[a][x] != 0) ip += weighted[a][x] * c;
      ++pairs;
      if (ip != 0)
        return CheckResult::fail(name, "nonzero inner product",
                                 {{"check", "orthogonality"}, {"first", detail::entry_id(basis[a])},
                                  {"second", detail::entry_id(basis[b])}, {"inner_product", to_string(ip)}});
    }
  KernelTable kt(n);
  for (const auto& e : basis) {
    TensorVector image = apply_K(kt, e.vector());
    if (image != e.eigenvalue() * e.vector())
      return CheckResult::fail(name, "eigen relation fails",
                               {{"check", "eigenvalue"}, {"entry", detail::entry_id(e)},
                                {"expected", to_string(e.eigenvalue())}});
  }
  return CheckResult::ok(name, std::to_string(basis.size()) + " vectors, " + std::to_string(pairs) +
                                   " pairs orthogonal, all eigen relations exact");
}

// <f, f>_pi equals the closed form for every basis element.
inline CheckResult check_norms(int n) {
  const std::string name = "norms n=" + std::to_string(n);
  auto basis = full_basis(n);
  for (const auto& e : basis) {
    Rational direct = inner_product(e.vector(), e.vector());
    if (direct != e.sq_norm())
      return CheckResult::fail(name, "norm mismatch",
                               {{"check", "norm"}, {"entry", detail::entry_id(e)},
                                {"inner_product", to_string(direct)}, {"closed_form", to_string(e.sq_norm())}});
  }
  return CheckResult::ok(name, std::to_string(basis.size()) + " norms match the closed form");
}

// Floating-point eigenvalue clusters against multiplicities C(n, 2k) for
// beta_k and 2^{n-1} for 0.
inline CheckResult check_multiplicities(int n, double tol = 1e-9) {
  const std::string name = "multiplicities n=" + std::to_string(n);
  std::map<Rational, long, std::greater<>> expected;
  for (int k = 0; 2 * k <= n; ++k) expected[beta(k)] += binomial(n, 2 * k).get_si();
  expected[Rational(0)] += 1L << (n - 1);
  std::map<Rational, long, std::greater<>> found;
  for (const auto& c : numeric_spectrum(n, tol)) {
    if (!c.exact)
      return CheckResult::fail(name, "unexpected eigenvalue", {{"check", "spectrum"}, {"n", n}, {"approx", c.value}});
    found[*c.exact] += c.multiplicity;
  }
  if (found != expected) {
    json f = json::object();
    for (const auto& [k, v] : found) f[to_string(k)] = v;
    return CheckResult::fail(name, "multiplicities differ", {{"check", "spectrum"}, {"n", n}, {"found", f}});
  }
  return CheckResult::ok(name, std::to_string(found.size()) + " distinct eigenvalues with expected multiplicities");
}

// 5 (1/4)^{2s} <= chi^2_{e_n}(s) <= 270 (1/4)^{2s} for the given ranges.
inline CheckResult check_sandwich(int n_min, int n_max, int s_min, int s_max) {
  const std::string name = "chi-square sandwich n=" + std::to_string(n_min) + ".." + std::to_string(n_max) +
                           " s=" + std::to_string(s_min) + ".." + std::to_string(s_max);
  std::size_t cases = 0;
  for (int n = n_min; n <= n_max; ++n) {
    auto coef = chi_square_one_ones_coefficients(n);
    for (int s = s_min; s <= s_max; ++s) {
      Rational chi = coef.at(s).chi_square;
      ++cases;
      if (chi < sandwich_lower(s) || chi > sandwich_upper(s))
        return CheckResult::fail(name, "outside the bounds",
                                 {{"check", "sandwich"}, {"n", n}, {"s", s}, {"chi", to_string(chi)}});
    }
  }
  return CheckResult::ok(name, std::to_string(cases) + " (n, s) pairs inside the bounds");
}

// Coefficient of beta_1^{2s} in chi^2_{e_n}(s), relative to 35.
inline CheckResult check_leading_coefficient(int n, double rel_tol = 0.05) {
  const std::string name = "leading coefficient n=" + std::to_string(n);
  double c = to_double(chi_square_one_ones_coefficients(n).coefficient.at(beta(1)));
  double rel = std::abs(c - 35.0) / 35.0;
  if (rel > rel_tol)
    return CheckResult::fail(name, "too far from 35", {{"check", "leading"}, {"n", n}, {"coefficient", c}});
  return CheckResult::ok(name, "coefficient " + std::to_string(c) + " (relative error " + std::to_string(rel) + ")");
}

// Eigenbasis chi-square equals the matrix-power definition for every start.
inline CheckResult check_chi_square_oracle(int n, int s_max) {
  const std::string name = "chi-square oracle n=" + std::to_string(n);
  KernelTable kt(n);
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    auto coef = chi_square_coefficients(ChainState::binary(n, x));
    for (int s = 1; s <= s_max; ++s) {
      Rational spectral = coef.at(s).chi_square;
      Rational direct = chi_square_by_matrix_power(n, x, s);
      if (spectral != direct)
        return CheckResult::fail(name, "expansion differs from the definition",
                                 {{"check", "chi_oracle"}, {"start", mask_string(n, x)}, {"s", s},
                                  {"spectral", to_string(spectral)}, {"direct", to_string(direct)}});
    }
  }
  return CheckResult::ok(name, "all " + std::to_string(1 << n) + " starts agree for s=1.." + std::to_string(s_max));
}

// Weighted Hahn orthogonality (diagonal and off-diagonal) for alpha = beta = m.
inline CheckResult check_hahn_orthogonality(int N_max, int m_max) {
  const std::string name = "Hahn orthogonality N<=" + std::to_string(N_max);
  std::size_t cases = 0;
  for (int N = 0; N <= N_max; ++N)
    for (int m = 0; m <= m_max; ++m)
      for (int l1 = 0; l1 <= N; ++l1)
        for (int l2 = l1; l2 <= N; ++l2) {
          Rational lhs = hahn_weighted_sum(N, m, m, l1, l2);
          Rational rhs = l1 == l2 ? hahn_norm_rhs(N, m, m, l1) : Rational(0);
          ++cases;
          if (lhs != rhs)
            return CheckResult::fail(name, "weighted sum differs",
                                     {{"check", "hahn"}, {"N", N}, {"m", m}, {"l1", l1}, {"l2", l2},
                                      {"sum", to_string(lhs)}, {"expected", to_string(rhs)}});
        }
  return CheckResult::ok(name, std::to_string(cases) + " weighted sums exact");
}

// Q^l_{n-2m; m, m}(i) = (-1)^m T_{m,n}^{(l)}(i) / (C(n-2m, l) C(2m+l, m)).
inline CheckResult check_hahn_scalars(int n_max) {
  const std::string name = "Hahn scalars n<=" + std::to_string(n_max);
  std::size_t cases = 0;
  for (int n = 1; n <= n_max; ++n)
    for (int m = 0; 2 * m <= n; ++m)
      for (int ell = 0; ell <= n - 2 * m; ++ell)
        for (int i = 0; i <= n - 2 * m; ++i) {
          Rational q = hahn_eval({n - 2 * m, m, m, ell}, i);
          Rational t = Rational(t_scalar(m, n, ell, i) * sign_of_parity(m)) /
                       Rational(binomial(n - 2 * m, ell) * binomial(2 * m + ell, m));
          ++cases;
          if (q != t)
            return CheckResult::fail(name, "Hahn value differs from scaled T",
                                     {{"check", "hahn_scalar"}, {"n", n}, {"m", m}, {"l", ell}, {"i", i}});
        }
  return CheckResult::ok(name, std::to_string(cases) + " values agree");
}

// The lumping identity, plus a negative control with one perturbed entry.
inline CheckResult check_lumping_identity(int n) {
  const std::string name = "lumping n=" + std::to_string(n);
  LumpingReport rep = check_lumping(n);
  if (!rep.holds())
    return CheckResult::fail(name, "identity fails",
                             {{"check", "lumping"}, {"n", n}, {"x", mask_string(n, rep.violation->x)},
                              {"y", mask_string(n, rep.violation->y)}, {"lhs", to_string(rep.violation->lhs)},
                              {"rhs", to_string(rep.violation->rhs)}});
  const Mask px = 1, py = (Mask{1} << n) - 1;
  KernelFn perturbed = [&](int k, Mask x, Mask y) {
    Rational v = k_entry(k, x, y);
    if (k == n && x == px && y == py) v += Rational(1, 1024);
    return v;
  };
  if (check_lumping(n, perturbed).holds())
    return CheckResult::fail(name, "perturbed kernel not detected", {{"check", "lumping_control"}, {"n", n}});
  return CheckResult::ok(name, std::to_string(rep.entries_checked) + " entries exact; perturbation detected");
}

inline CheckResult check_sl2(int n) {
  const std::string name = "sl2 expansion n=" + std::to_string(n);
  Sl2Report rep = verify_sl2_conjecture(n);
  if (!rep.holds())
    return CheckResult::fail(name, "expansion differs from K_n",
                             {{"check", "sl2"}, {"n", n}, {"row", mask_string(n, rep.violation->row)},
                              {"col", mask_string(n, rep.violation->col)}, {"kernel", to_string(rep.violation->kernel)},
                              {"expansion", to_string(rep.violation->expansion)}});
  return CheckResult::ok(name, std::to_string(rep.entries_checked) + " entries, " + std::to_string(rep.terms.size()) +
                                   " terms");
}

inline CheckResult check_wz_identity(int n_max) {
  const std::string name = "triple-sum identity n<=" + std::to_string(n_max);
  std::size_t cases = 0;
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; 2 * m <= n; ++m)
      for (int l1 = 0; l1 <= n - 2 * m; ++l1)
        for (int l2 = 0; l2 <= n - 2 * m; ++l2) {
          if (l1 == l2) continue;
          ++cases;
          Integer s = brute_force_identity(n, m, l1, l2);
          if (s != 0)
            return CheckResult::fail(name, "nonzero triple sum",
                                     {{"check", "wz_sum"}, {"n", n}, {"m", m}, {"l1", l1}, {"l2", l2},
                                      {"sum", to_string(s)}});
        }
  for (int m = 0; m <= n_max / 2; ++m)
    if (!base_case_holds(m, 0, 0)) return CheckResult::fail(name, "base case fails", {{"check", "wz_base"}, {"m", m}});
  return CheckResult::ok(name, std::to_string(cases) + " sums vanish; base case n=2m holds");
}

inline CheckResult check_wz_certificates(int n_max) {
  const std::string name = "certificates n<=" + std::to_string(n_max);
  CertificateReport rep = check_certificates(n_max);
  if (!rep.holds()) {
    const auto& f = *rep.failure;
    return CheckResult::fail(name, f.reason,
                             {{"check", "wz_certificate"}, {"point", f.point.to_string()}, {"lhs", to_string(f.lhs)},
                              {"rhs", to_string(f.rhs)}, {"reason", f.reason}});
  }
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; 2 * m <= n; ++m)
      for (int l1 = 0; l1 <= n - 2 * m; ++l1)
        for (int l2 = 0; l2 <= n - 2 * m; ++l2)
          if (l1 != l2 && !q_i_boundary_cancels(n, m, l1, l2))
            return CheckResult::fail(name, "Q_I at i=0 does not cancel",
                                     {{"check", "wz_boundary"}, {"n", n}, {"m", m}, {"l1", l1}, {"l2", l2}});
  return CheckResult::ok(name, std::to_string(rep.points_checked) + " lattice points (" +
                                   std::to_string(rep.limit_evaluations) + " certificate values taken as limits)");
}

// One-step empirical law from every start, and long-run orbit occupancy.
inline CheckResult check_sampler(int n, std::size_t draws, std::uint64_t seed, double step_tol = 0.005,
                                 double orbit_tol = 0.01) {
  const std::string name = "sampler n=" + std::to_string(n);
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    double tv = one_step_tv(n, x, draws, rng);
    worst = std::max(worst, tv);
    if (tv > step_tol)
      return CheckResult::fail(name, "one-step law too far from the kernel row",
                               {{"check", "sampler_step"}, {"start", mask_string(n, x)}, {"tv", tv}});
  }
  double orbit = orbit_occupancy_tv(n, 0, 1000, draws, rng);
  if (orbit > orbit_tol)
    return CheckResult::fail(name, "orbit occupancy not uniform", {{"check", "sampler_orbit"}, {"tv", orbit}});
  return CheckResult::ok(name, "max one-step TV " + std::to_string(worst) + ", orbit TV " + std::to_string(orbit));
}

}  // namespace burnside
