// burnside: command-line front end for the exact Burnside-process library.
//
// Exit status: 0 success, 1 a check failed (a JSON failure record is printed),
// 2 usage error or invalid input.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burnside/burnside.hpp"

using namespace burnside;

namespace {

enum class Format { pretty, csv, json };

Format g_format = Format::pretty;

constexpr int kBasisCliCap = 10;
constexpr int kDenseCliCap = 8;
constexpr int kOneOnesCliCap = 100000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Prints rows as aligned text (pretty) or CSV; JSON callers build their own.
void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  if (g_format == Format::csv) {
    auto line = [](const std::vector<std::string>& r) {
      for (std::size_t k = 0; k < r.size(); ++k) std::cout << (k ? "," : "") << csv_escape(r[k]);
      std::cout << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t k = 0; k < header.size(); ++k) width[k] = header[k].size();
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size() && k < width.size(); ++k) width[k] = std::max(width[k], r[k].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::cout << (k ? "  " : "") << r[k];
      if (k + 1 < r.size()) std::cout << std::string(width[k] - r[k].size(), ' ');
    }
    std::cout << "\n";
  };
  line(header);
  std::size_t total = 0;
  for (auto w : width) total += w + 2;
  std::cout << std::string(total - 2, '-') << "\n";
  for (const auto& r : rows) line(r);
}

// States in string order 00..0, 00..1, ..., 11..1 (coordinate 1 leftmost).
std::vector<Mask> states_in_string_order(int n) {
  std::vector<Mask> out;
  for (Mask t = 0; t < (Mask{1} << n); ++t) {
    Mask m = 0;
    for (int k = 0; k < n; ++k)
      if ((t >> (n - 1 - k)) & 1U) m |= Mask{1} << k;
    out.push_back(m);
  }
  return out;
}

Mask parse_state(const std::string& bits) {
  try {
    return Subset::parse(bits).mask();
  } catch (const std::exception& e) {
    throw UsageError("bad state '" + bits + "': " + e.what());
  }
}

int report(const std::vector<CheckResult>& results) {
  bool all = true;
  json failures = json::array();
  if (g_format == Format::json) {
    json out = json::array();
    for (const auto& r : results) {
      out.push_back({{"check", r.name}, {"passed", r.passed}, {"summary", r.summary}, {"failure", r.failure}});
      all = all && r.passed;
    }
    std::cout << out.dump(2) << "\n";
    return all ? 0 : 1;
  }
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << ": " << r.summary << "\n";
    if (!r.passed) failures.push_back(r.failure);
    all = all && r.passed;
  }
  for (const auto& f : failures) std::cout << f.dump() << "\n";
  return all ? 0 : 1;
}

// ---- basis ----------------------------------------------------------------

int cmd_basis(int n, bool vectors, bool check, bool over_cap) {
  require(n >= 1, "--n must be positive");
  require(over_cap || n <= kBasisCliCap, "full basis is capped at n = 10 (use --allow-over-cap)");
  if (check) {
    std::vector<CheckResult> results;
    if (n <= kDenseCliCap) results.push_back(check_eigenbasis(n));
    results.push_back(check_norms(n));
    return report(results);
  }
  auto basis = full_basis(n, over_cap);
  if (g_format == Format::json) {
    json out = json::array();
    for (const auto& e : basis) out.push_back(to_json(e, vectors));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::vector<std::string> header{"m", "l", "tableau", "eigenvalue", "sq_norm"};
  auto states = states_in_string_order(n);
  if (vectors)
    for (Mask s : states) header.push_back(mask_string(n, s));
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : basis) {
    std::vector<std::string> r{std::to_string(e.m()), std::to_string(e.ell()), render_compact(e.tableau()),
                               to_string(e.eigenvalue()), to_string(e.sq_norm())};
    if (vectors)
      for (Mask s : states) r.push_back(to_string(e.vector().coeff(s)));
    rows.push_back(std::move(r));
  }
  print_table(header, rows);
  return 0;
}

// ---- tables (the g and f families in display order) ------------------------

int cmd_tables(int n) {
  require(n >= 1 && n <= 6, "tables are printed for 1 <= n <= 6");
  auto basis = full_basis(n);
  std::stable_sort(basis.begin(), basis.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.m() + a.ell() != b.m() + b.ell()) return a.m() + a.ell() < b.m() + b.ell();
    if (a.m() != b.m()) return a.m() < b.m();
    return a.tableau() > b.tableau();
  });
  auto states = states_in_string_order(n);
  if (g_format == Format::json) {
    json g = json::array(), f = json::array();
    for (const auto& e : basis) {
      json id{{"m", e.m()}, {"l", e.ell()}, {"tableau", to_json(e.tableau())}};
      json gj = id;
      gj["vector"] = to_json(g_vector(e.m(), e.ell(), e.tableau()));
      g.push_back(gj);
      json fj = id;
      fj["vector"] = to_json(e.vector());
      fj["sq_norm"] = to_string(e.sq_norm());
      f.push_back(fj);
    }
    std::cout << json{{"n", n}, {"g", g}, {"f", f}}.dump(2) << "\n";
    return 0;
  }
  std::vector<std::string> header{"m", "l", "tableau"};
  for (Mask s : states) header.push_back(mask_string(n, s));
  std::vector<std::vector<std::string>> g_rows, f_rows;
  for (const auto& e : basis) {
    std::vector<std::string> id{std::to_string(e.m()), std::to_string(e.ell()), render_compact(e.tableau())};
    auto g = g_vector(e.m(), e.ell(), e.tableau());
    auto gr = id, fr = id;
    for (Mask s : states) {
      gr.push_back(to_string(g.coeff(s)));
      fr.push_back(to_string(e.vector().coeff(s)));
    }
    fr.push_back(to_string(e.sq_norm()));
    g_rows.push_back(std::move(gr));
    f_rows.push_back(std::move(fr));
  }
  if (g_format == Format::pretty) std::cout << "g_Q^{m,l} (l = level index)\n";
  print_table(header, g_rows);
  std::cout << "\n";
  if (g_format == Format::pretty) std::cout << "f_Q^{m,l} with <f,f>_pi\n";
  header.push_back("norm");
  print_table(header, f_rows);
  return 0;
}

// ---- hahn -----------------------------------------------------------------

int cmd_hahn_eval(int N, int a, int b, int ell, int x) {
  Rational v = hahn_eval({N, a, b, ell}, x);
  if (g_format == Format::json)
    std::cout << json{{"N", N}, {"alpha", a}, {"beta", b}, {"l", ell}, {"x", x}, {"value", to_string(v)}}.dump() << "\n";
  else
    std::cout << to_string(v) << "\n";
  return 0;
}

int cmd_hahn_table(int N, int a, int b) {
  HahnParams{N, a, b, 0}.validate();
  std::vector<std::string> header{"x"};
  for (int l = 0; l <= N; ++l) header.push_back("l=" + std::to_string(l));
  std::vector<std::vector<std::string>> rows;
  json out = json::array();
  for (int x = 0; x <= N; ++x) {
    std::vector<std::string> r{std::to_string(x)};
    json jr = json::array();
    for (int l = 0; l <= N; ++l) {
      r.push_back(to_string(hahn_eval({N, a, b, l}, x)));
      jr.push_back(r.back());
    }
    rows.push_back(r);
    out.push_back({{"x", x}, {"values", jr}});
  }
  if (g_format == Format::json)
    std::cout << json{{"N", N}, {"alpha", a}, {"beta", b}, {"rows", out}}.dump(2) << "\n";
  else
    print_table(header, rows);
  return 0;
}

// ---- chain ----------------------------------------------------------------

int cmd_chain_entry(const std::string& xs, const std::string& ys) {
  require(xs.size() == ys.size(), "--x and --y must have the same length");
  const int n = static_cast<int>(xs.size());
  Rational v = k_entry(n, parse_state(xs), parse_state(ys));
  if (g_format == Format::json)
    std::cout << json{{"x", xs}, {"y", ys}, {"entry", to_string(v)}, {"approx", to_double(v)}}.dump() << "\n";
  else
    std::cout << to_string(v) << "\n";
  return 0;
}

int cmd_chain_row(const std::string& xs) {
  const int n = static_cast<int>(xs.size());
  require(n <= kBasisCliCap, "rows are printed for n <= 10");
  Mask x = parse_state(xs);
  KernelTable kt(n);
  std::vector<std::vector<std::string>> rows;
  json out = json::object();
  for (Mask y : states_in_string_order(n)) {
    rows.push_back({mask_string(n, y), to_string(kt.entry(x, y))});
    out[mask_string(n, y)] = to_string(kt.entry(x, y));
  }
  if (g_format == Format::json)
    std::cout << json{{"x", xs}, {"row", out}}.dump(2) << "\n";
  else
    print_table({"y", "K(x,y)"}, rows);
  return 0;
}

int cmd_chain_sample(const std::string& start, int k, long steps, std::uint64_t seed) {
  require(!start.empty(), "--start is required");
  ChainState x;
  x.n = static_cast<int>(start.size());
  x.k = k;
  for (char c : start) {
    require(c >= '0' && c <= '9', "state letters must be digits");
    x.letters.push_back(c - '0');
  }
  try {
    x.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  std::mt19937_64 rng(seed);
  BurnsideSampler sampler(x.n, x.k);
  std::cout << "step,state\n0," << x.to_string() << "\n";
  for (long t = 1; t <= steps; ++t) {
    sampler.step(x.letters, rng);
    std::cout << t << "," << x.to_string() << "\n";
  }
  return 0;
}

int cmd_chain_spectrum(int n) {
  require(n >= 1 && n <= kBasisCliCap, "numeric spectrum needs 1 <= n <= 10");
  auto spectrum = numeric_spectrum(n);
  if (g_format == Format::json) {
    std::cout << to_json(spectrum).dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : spectrum) {
    std::ostringstream os;
    os.precision(12);
    os << c.value;
    rows.push_back({c.exact ? to_string(*c.exact) : "?", os.str(), std::to_string(c.multiplicity)});
  }
  print_table({"eigenvalue", "approx", "multiplicity"}, rows);
  return 0;
}

// ---- mixing ---------------------------------------------------------------

void print_mixing(const MixingReport& r, bool breakdown) {
  if (g_format == Format::json) {
    json b = json::array();
    for (const auto& [lam, v] : r.breakdown)
      b.push_back({{"eigenvalue", to_string(lam)}, {"contribution", to_string(v)}});
    std::cout << json{{"n", r.n},
                      {"s", r.s},
                      {"start", r.start.to_string()},
                      {"chi_square", to_string(r.chi_square)},
                      {"approx", to_double(r.chi_square)},
                      {"tv_squared_bound", to_string(tv_lower_bound_from_chi(r))},
                      {"breakdown", b}}
                     .dump(2)
              << "\n";
    return;
  }
  if (g_format == Format::csv) {
    std::cout << "n,s,start,chi_exact,chi_float\n"
              << r.n << "," << r.s << "," << r.start.to_string() << "," << to_string(r.chi_square) << ","
              << to_double(r.chi_square) << "\n";
    return;
  }
  std::cout << to_string(r.chi_square) << "\n";
  if (breakdown)
    for (const auto& [lam, v] : r.breakdown) std::cout << "  eigenvalue " << to_string(lam) << ": " << to_string(v) << "\n";
}

int cmd_mixing_sweep(int n_min, int n_max, int s_min, int s_max) {
  require(n_min >= 3 && n_min <= n_max && n_max <= kOneOnesCliCap, "sweep needs 3 <= n-min <= n-max <= 100000");
  require(s_min >= 1 && s_min <= s_max, "sweep needs 1 <= s-min <= s-max");
  std::cout << "n,s,chi_exact,chi_float,lower,upper,within_bounds\n";
  bool all = true;
  for (int n = n_min; n <= n_max; ++n) {
    auto coef = chi_square_one_ones_coefficients(n);
    for (int s = s_min; s <= s_max; ++s) {
      Rational chi = coef.at(s).chi_square;
      bool within = sandwich_lower(s) <= chi && chi <= sandwich_upper(s);
      all = all && within;
      std::cout << n << "," << s << "," << to_string(chi) << "," << to_double(chi) << ","
                << to_string(sandwich_lower(s)) << "," << to_string(sandwich_upper(s)) << ","
                << (within ? "true" : "false") << "\n";
    }
  }
  return all || s_min < 3 ? 0 : 1;
}

int cmd_mixing_chi(const std::string& start, bool one_ones, int n, int steps, bool breakdown, bool oracle) {
  require(steps >= 1, "--steps must be at least 1");
  if (one_ones) {
    require(start.empty(), "--one-ones and --start are exclusive");
    require(n >= 3 && n <= kOneOnesCliCap, "--one-ones needs 3 <= n <= 100000");
    print_mixing(chi_square_one_ones(n, steps), breakdown);
    return 0;
  }
  require(!start.empty(), "give --start <bits> or --one-ones --n N");
  const int len = static_cast<int>(start.size());
  require(len <= kChiSquareCap, "general-start chi-square is capped at n = 12");
  MixingReport r = chi_square(ChainState::binary(len, parse_state(start)), steps);
  if (oracle) {
    require(len <= kDenseCliCap, "--oracle uses dense matrix powers, n <= 8");
    Rational direct = chi_square_by_matrix_power(len, parse_state(start), steps);
    if (direct != r.chi_square) {
      std::cout << json{{"check", "chi_oracle"}, {"start", start}, {"s", steps}, {"spectral", to_string(r.chi_square)},
                        {"direct", to_string(direct)}}
                       .dump()
                << "\n";
      return 1;
    }
  }
  print_mixing(r, breakdown);
  return 0;
}

// ---- sl2 ------------------------------------------------------------------

int cmd_sl2_verify(int n, bool list_terms, bool facts) {
  require(n >= 1 && n <= kBasisCliCap, "--n must be in 1..10");
  Sl2Report rep = verify_sl2_conjecture(n);
  if (g_format == Format::json) {
    json terms = json::array();
    for (const auto& t : rep.terms)
      terms.push_back({{"x", t.x}, {"y", t.y}, {"z", t.z}, {"coefficient", to_string(t.coefficient)}});
    json out{{"n", n}, {"holds", rep.holds()}, {"entries_checked", rep.entries_checked}, {"terms", terms}};
    if (!rep.holds())
      out["failure"] = {{"row", mask_string(n, rep.violation->row)}, {"col", mask_string(n, rep.violation->col)},
                        {"kernel", to_string(rep.violation->kernel)}, {"expansion", to_string(rep.violation->expansion)}};
    std::cout << out.dump(2) << "\n";
    return rep.holds() ? 0 : 1;
  }
  if (list_terms) {
    std::cout << "K_" << n << " =";
    bool first = true;
    for (const auto& t : rep.terms) {
      std::cout << (first ? " " : " + ") << to_string(t.coefficient) << " f(" << t.x << "," << t.y << "," << t.z << ")";
      first = false;
    }
    std::cout << "\n";
  }
  if (facts) {
    std::cout << "k,beta_k,c_2k_0,c_k_k,c_2k_0==beta_k,c_k_k==beta_k\n";
    for (const auto& f : coefficient_facts(n / 2))
      std::cout << f.k << "," << to_string(f.beta_k) << "," << to_string(f.c_2k_0) << "," << to_string(f.c_k_k) << ","
                << (f.c_2k_0 == f.beta_k ? "true" : "false") << "," << (f.c_k_k == f.beta_k ? "true" : "false")
                << "\n";
  }
  return report({check_sl2(n)});
}

// ---- wz -------------------------------------------------------------------

int cmd_wz_check(int max_n, int identity_max_n) {
  require(max_n >= 0 && max_n <= 12, "--max-n must be in 0..12");
  require(identity_max_n >= 0 && identity_max_n <= 16, "--identity-max-n must be in 0..16");
  return report({check_wz_identity(identity_max_n), check_wz_certificates(max_n)});
}

// ---- verify-all -----------------------------------------------------------

int cmd_verify_all(int max_n, std::size_t draws, std::uint64_t seed, bool skip_sampler) {
  require(max_n >= 2 && max_n <= kBasisCliCap, "--max-n must be in 2..10");
  std::vector<CheckResult> results;
  {
    // Reference values for n = 3: squared norms in display order.
    const std::vector<std::string> norms{"1", "5", "1", "4/3", "9", "9/4", "3", "5"};
    auto basis = full_basis(3);
    std::stable_sort(basis.begin(), basis.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
      if (a.m() + a.ell() != b.m() + b.ell()) return a.m() + a.ell() < b.m() + b.ell();
      if (a.m() != b.m()) return a.m() < b.m();
      return a.tableau() > b.tableau();
    });
    bool ok = true;
    for (std::size_t k = 0; k < basis.size(); ++k)
      ok = ok && to_string(basis[k].sq_norm()) == norms[k] &&
           inner_product(basis[k].vector(), basis[k].vector()) == basis[k].sq_norm();
    results.push_back(ok ? CheckResult::ok("n=3 norm column", "8 norms match")
                         : CheckResult::fail("n=3 norm column", "norm column differs", {{"check", "tables"}}));
  }
  for (int n = 1; n <= std::min(max_n, kDenseCliCap); ++n) results.push_back(check_eigenbasis(n));
  for (int n = 1; n <= max_n; ++n) results.push_back(check_norms(n));
  for (int n = 1; n <= max_n; ++n) results.push_back(check_multiplicities(n));
  results.push_back(check_sandwich(3, 200, 3, 10));
  results.push_back(check_leading_coefficient(500));
  for (int n = 1; n <= std::min(max_n, 6); ++n) results.push_back(check_chi_square_oracle(n, 4));
  results.push_back(check_hahn_orthogonality(12, 3));
  results.push_back(check_hahn_scalars(max_n));
  for (int n = 2; n <= std::min(max_n, kDenseCliCap); ++n) results.push_back(check_lumping_identity(n));
  for (int n = 1; n <= std::min(max_n, kDenseCliCap); ++n) results.push_back(check_sl2(n));
  results.push_back(check_wz_identity(12));
  results.push_back(check_wz_certificates(std::min(max_n, kDenseCliCap)));
  if (!skip_sampler) results.push_back(check_sampler(6, draws, seed));
  return report(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectral toolkit for the binary Burnside process on C_2^n"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "pretty";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"pretty", "csv", "json"}))
      ->capture_default_str();

  int n = 0, max_n = 0, steps = 1;
  bool over_cap = false;

  auto* basis = app.add_subcommand("basis", "Eigenbasis entries with eigenvalues and squared norms");
  bool vectors = false, check = false;
  basis->add_option("--n", n, "Number of coordinates")->required();
  basis->add_flag("--vectors", vectors, "Include the vector coefficients");
  basis->add_flag("--check", check, "Verify orthogonality, eigen relations and norms");
  basis->add_flag("--allow-over-cap", over_cap, "Permit n above the default cap");

  auto* tables = app.add_subcommand("tables", "The g and f families with the norm column");
  tables->add_option("--n", n, "Number of coordinates")->required();

  auto* hahn = app.add_subcommand("hahn", "Hahn polynomials");
  hahn->require_subcommand(1);
  int N = 0, alpha = 0, beta_p = 0, ell = 0, x = 0;
  auto* hahn_eval_cmd = hahn->add_subcommand("eval", "Evaluate Q^l_{N;alpha,beta}(x)");
  hahn_eval_cmd->add_option("--N", N)->required();
  hahn_eval_cmd->add_option("--alpha", alpha)->capture_default_str();
  hahn_eval_cmd->add_option("--beta", beta_p)->capture_default_str();
  hahn_eval_cmd->add_option("--l", ell)->required();
  hahn_eval_cmd->add_option("--x", x)->required();
  auto* hahn_table_cmd = hahn->add_subcommand("table", "All degrees over the whole domain");
  hahn_table_cmd->add_option("--N", N)->required();
  hahn_table_cmd->add_option("--alpha", alpha)->capture_default_str();
  hahn_table_cmd->add_option("--beta", beta_p)->capture_default_str();
  auto* hahn_check_cmd = hahn->add_subcommand("check", "Weighted orthogonality and the T-scalar identity");
  int hahn_max_N = 12, hahn_max_m = 3, hahn_max_n = 10;
  hahn_check_cmd->add_option("--max-N", hahn_max_N)->capture_default_str();
  hahn_check_cmd->add_option("--max-m", hahn_max_m)->capture_default_str();
  hahn_check_cmd->add_option("--max-n", hahn_max_n)->capture_default_str();

  auto* chain = app.add_subcommand("chain", "Transition kernel, sampler and spectrum");
  chain->require_subcommand(1);
  std::string xs, ys, start;
  auto* entry = chain->add_subcommand("entry", "K(x, y)");
  entry->add_option("--x", xs)->required();
  entry->add_option("--y", ys)->required();
  auto* row = chain->add_subcommand("row", "K(x, .)");
  row->add_option("--x", xs)->required();
  auto* lump = chain->add_subcommand("lumpcheck", "K_n (I (x) K_1) = K_{n-1} (x) K_1");
  lump->add_option("--n", n)->required();
  auto* sample = chain->add_subcommand("sample", "Stream a trajectory, or run the sampler statistics");
  int k = 2;
  long sample_steps = 10;
  std::uint64_t seed = 1;
  bool stats = false;
  std::size_t draws = 1000000;
  sample->add_option("--start", start, "Initial state as digits");
  sample->add_option("--k", k, "Alphabet size")->capture_default_str();
  sample->add_option("--steps", sample_steps)->capture_default_str();
  sample->add_option("--seed", seed)->capture_default_str();
  sample->add_flag("--stats", stats, "One-step TV from every start and orbit occupancy TV");
  sample->add_option("--n", n, "Coordinates for --stats");
  sample->add_option("--draws", draws)->capture_default_str();
  auto* spectrum = chain->add_subcommand("spectrum", "Floating-point spectrum with multiplicities");
  spectrum->add_option("--n", n)->required();

  auto* mixing = app.add_subcommand("mixing", "Chi-square distance to stationarity");
  mixing->require_subcommand(1);
  auto* chi = mixing->add_subcommand("chi", "Exact chi-square after s steps");
  bool one_ones = false, sweep = false, breakdown = false, oracle = false;
  int n_min = 3, n_max = 3, s_min = 3, s_max = 10;
  auto* start_opt = chi->add_option("--start", start, "Initial binary state");
  auto* one_opt = chi->add_flag("--one-ones", one_ones, "Start from e_n = 0...01");
  start_opt->excludes(one_opt);
  chi->add_option("--n", n);
  chi->add_option("--steps", steps)->capture_default_str();
  chi->add_flag("--sweep", sweep, "CSV sweep over n-min..n-max and s-min..s-max from e_n");
  chi->add_option("--n-min", n_min)->capture_default_str();
  chi->add_option("--n-max", n_max)->capture_default_str();
  chi->add_option("--s-min", s_min)->capture_default_str();
  chi->add_option("--s-max", s_max)->capture_default_str();
  chi->add_flag("--breakdown", breakdown, "Per-eigenvalue contributions");
  chi->add_flag("--oracle", oracle, "Cross-check against matrix powers (n <= 8)");

  auto* sl2 = app.add_subcommand("sl2", "Expansion of K_n in symmetrized p+, p-, p+h tensors");
  sl2->require_subcommand(1);
  auto* sl2v = sl2->add_subcommand("verify", "Check K_n = sum c_{y,z} f(x,y,z) entrywise");
  bool list_terms = false, facts = false;
  sl2v->add_option("--n", n)->required();
  sl2v->add_flag("--list-terms", list_terms, "Print the expansion");
  sl2v->add_flag("--facts", facts, "Compare c_{2k,0} and c_{k,k} with beta_k");

  auto* wz = app.add_subcommand("wz", "Triple-sum identity and telescoping certificates");
  wz->require_subcommand(1);
  auto* wzc = wz->add_subcommand("check", "Verify on the integer lattice");
  int identity_max_n = 12;
  max_n = 8;
  wzc->add_option("--max-n", max_n, "Certificate lattice bound")->capture_default_str();
  wzc->add_option("--identity-max-n", identity_max_n, "Brute-force sum bound")->capture_default_str();

  auto* all = app.add_subcommand("verify-all", "Run every exact check up to --max-n");
  bool skip_sampler = false;
  all->add_option("--max-n", max_n)->required();
  all->add_option("--seed", seed)->capture_default_str();
  all->add_option("--draws", draws, "Sampler draws per start; TV tolerance 0.005 assumes 1e6")->capture_default_str();
  all->add_flag("--skip-sampler", skip_sampler);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  g_format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::pretty;

  try {
    if (*basis) return cmd_basis(n, vectors, check, over_cap);
    if (*tables) return cmd_tables(n);
    if (*hahn_eval_cmd) return cmd_hahn_eval(N, alpha, beta_p, ell, x);
    if (*hahn_table_cmd) return cmd_hahn_table(N, alpha, beta_p);
    if (*hahn_check_cmd) return report({check_hahn_orthogonality(hahn_max_N, hahn_max_m), check_hahn_scalars(hahn_max_n)});
    if (*entry) return cmd_chain_entry(xs, ys);
    if (*row) return cmd_chain_row(xs);
    if (*lump) {
      require(n >= 2 && n <= kDenseCliCap, "--n must be in 2..8");
      return report({check_lumping_identity(n)});
    }
    if (*sample) {
      if (stats) {
        require(n >= 1 && n <= 12, "--stats needs --n in 1..12");
        return report({check_sampler(n, draws, seed)});
      }
      return cmd_chain_sample(start, k, sample_steps, seed);
    }
    if (*spectrum) return cmd_chain_spectrum(n);
    if (*chi) {
      if (sweep) return cmd_mixing_sweep(n_min, n_max, s_min, s_max);
      return cmd_mixing_chi(start, one_ones, n, steps, breakdown, oracle);
    }
    if (*sl2v) return cmd_sl2_verify(n, list_terms, facts);
    if (*wzc) return cmd_wz_check(max_n, identity_max_n);
    if (*all) return cmd_verify_all(max_n, draws, seed, skip_sampler);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
