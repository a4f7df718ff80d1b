// Command-line front end: build a critical-point system from a model or a
// catalogued family, track it, compare counts against the closed forms, and
// emit a text summary plus an optional JSON report.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <polycrit/critical_systems.hpp>
#include <polycrit/degree_oracle.hpp>
#include <polycrit/json_io.hpp>
#include <polycrit/parse.hpp>
#include <polycrit/pde.hpp>
#include <polycrit/tracker.hpp>

using namespace polycrit;

namespace {

using Clock = std::chrono::steady_clock;

struct Global {
  std::uint64_t seed = 0;
  int threads = 1;
  bool strict = false;
  std::string json_out;
};

std::vector<Rat> rat_list(const std::string& csv) {
  std::vector<Rat> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto from = item.find_first_not_of(" \t");
    auto to = item.find_last_not_of(" \t");
    if (from == std::string::npos) throw std::invalid_argument("empty entry in list: " + csv);
    out.push_back(rat_from_string(item.substr(from, to - from + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

std::string join_rats(const std::vector<Rat>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(v[i]);
  }
  return out;
}

std::string fmt_double(double v) {
  std::ostringstream o;
  o << std::setprecision(12) << v;
  return o.str();
}

std::string fmt_real_point(std::span<const CD> pt, std::size_t count) {
  std::ostringstream o;
  o << "[";
  for (std::size_t i = 0; i < count; ++i) {
    if (i) o << ", ";
    o << std::setprecision(12) << pt[i].real();
  }
  o << "]";
  return o.str();
}

// Prints the text summary, writes the JSON report when requested, and maps
// a strict count mismatch to exit code 3.
int finish(RunReport& rep, const Global& g, Clock::time_point t0) {
  rep.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  std::cout << "command: " << rep.command << "\n";
  std::cout << "seed: " << rep.seed << "\n";
  for (const auto& [key, value] : rep.facts) std::cout << key << ": " << value << "\n";
  if (rep.result.has_value()) {
    const SolutionSet& s = *rep.result;
    std::cout << "paths: " << s.paths << "\n";
    if (s.expected_count.has_value()) std::cout << "expected: " << *s.expected_count << "\n";
    std::cout << "found: " << s.solutions.size() << " (" << s.real_count() << " real)\n";
    std::cout << "failed: " << s.failed << "  diverged: " << s.diverged
              << "  filtered: " << s.filtered << "  duplicates: " << s.duplicates << "\n";
    for (const auto& w : s.warnings) std::cout << "warning: " << w << "\n";
  }
  for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
  std::cout << "wall: " << std::fixed << std::setprecision(2) << rep.wall_seconds << "s\n";

  if (!g.json_out.empty()) {
    std::ofstream out(g.json_out);
    if (!out) throw std::invalid_argument("cannot write report to " + g.json_out);
    out << report_to_json(rep);
  }

  if (g.strict && rep.result.has_value() && rep.result->expected_count.has_value() &&
      static_cast<long long>(rep.result->solutions.size()) != *rep.result->expected_count) {
    std::cerr << "strict: found " << rep.result->solutions.size() << ", expected "
              << *rep.result->expected_count << "\n";
    return 3;
  }
  return 0;
}

RunReport base_report(const std::string& command, const Global& g) {
  RunReport rep;
  rep.command = command;
  rep.seed = g.seed;
  rep.threads = g.threads;
  rep.strict = g.strict;
  return rep;
}

TrackerConfig tracker_config(const Global& g) {
  TrackerConfig cfg;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  return cfg;
}

int cmd_solve_ed(const Global& g, const std::string& model_path, const std::string& u_text,
                 Clock::time_point t0) {
  RunReport rep = base_report("solve-ed", g);
  ModelSpec model = model_from_file(model_path);
  std::vector<Rat> u = rat_list(u_text);
  SquareSystem sys = build_ed_system(model, u);
  TrackerConfig cfg = tracker_config(g);
  SolutionSet set = solve(sys, cfg);

  rep.facts.emplace_back("model", model_path);
  rep.facts.emplace_back("u", join_rats(u));
  std::size_t nm = sys.num_model_vars();
  std::vector<double> ud;
  for (const Rat& q : u) ud.push_back(to_double(q));
  auto objective = [&](std::span<const CD> x) {
    double d = 0;
    for (std::size_t i = 0; i < nm; ++i) {
      double r = x[i].real() - ud[i];
      d += r * r;
    }
    return d;
  };
  try {
    const Solution& m = select_minimizer(set, objective);
    rep.facts.emplace_back("minimizer", fmt_real_point(m.point, nm));
    rep.facts.emplace_back("distance", fmt_double(std::sqrt(objective(m.point))));
  } catch (const std::runtime_error&) {
    rep.facts.emplace_back("minimizer", "none");
  }
  rep.config = cfg;
  rep.result = std::move(set);
  return finish(rep, g, t0);
}

int cmd_solve_section(const Global& g, const std::string& model_path, int section,
                      Clock::time_point t0) {
  RunReport rep = base_report("solve-section", g);
  ModelSpec model = model_from_file(model_path);
  SeededRng rng(g.seed);
  SquareSystem sys = build_linear_section_system(model, section, rng);
  TrackerConfig cfg = tracker_config(g);
  rep.facts.emplace_back("model", model_path);
  rep.facts.emplace_back("section", std::to_string(section));
  rep.config = cfg;
  rep.result = solve(sys, cfg);
  return finish(rep, g, t0);
}

int cmd_solve_mle_gaussian(const Global& g, const std::string& variant, int n, int k,
                           Clock::time_point t0) {
  RunReport rep = base_report("solve-mle", g);
  if (n < 2 || k < 1) throw std::invalid_argument("gaussian models need --n >= 2 and --k >= 1");
  SeededRng rng(g.seed);
  SymmetricMatrixSpace space = random_symmetric_space(n, k, rng);
  RatMatrix sample = random_sample_covariance(n, rng);
  SquareSystem sys = (variant == "gaussian-conc")
                         ? build_gaussian_concentration(space, sample)
                         : build_gaussian_covariance(space, sample);
  TrackerConfig cfg = tracker_config(g);
  rep.facts.emplace_back("variant", variant);
  rep.facts.emplace_back("n", std::to_string(n));
  rep.facts.emplace_back("k", std::to_string(k));
  rep.config = cfg;
  rep.result = solve(sys, cfg);
  return finish(rep, g, t0);
}

int cmd_solve_mle_discrete(const Global& g, const std::string& model_path,
                           const std::string& data_text, Clock::time_point t0) {
  RunReport rep = base_report("solve-mle", g);
  ModelSpec model = model_from_file(model_path);
  std::vector<Rat> counts = rat_list(data_text);
  SquareSystem sys = build_discrete_mle(model, counts);
  TrackerConfig cfg = tracker_config(g);
  SolutionSet set = solve(sys, cfg);

  rep.facts.emplace_back("variant", "discrete");
  rep.facts.emplace_back("model", model_path);
  rep.facts.emplace_back("data", join_rats(counts));
  std::size_t np = counts.size();
  std::vector<double> cd;
  for (const Rat& q : counts) cd.push_back(to_double(q));
  auto feasible = [&](std::span<const CD> x) {
    for (std::size_t j = 0; j < np; ++j) {
      if (!(x[j].real() > 0)) return false;
    }
    return true;
  };
  auto objective = [&](std::span<const CD> x) {
    double loglik = 0;
    for (std::size_t j = 0; j < np; ++j) loglik += cd[j] * std::log(x[j].real());
    return -loglik;
  };
  try {
    const Solution& m = select_minimizer(set, objective, feasible);
    rep.facts.emplace_back("maximizer", fmt_real_point(m.point, np));
  } catch (const std::runtime_error&) {
    rep.facts.emplace_back("maximizer", "none");
  }
  rep.config = cfg;
  rep.result = std::move(set);
  return finish(rep, g, t0);
}

int cmd_solve_cegm(const Global& g, int k, int m, const std::string& weights_path,
                   Clock::time_point t0) {
  RunReport rep = base_report("solve-cegm", g);
  ScatteringChart chart = build_cegm_chart(k, m);
  std::map<std::string, Rat> weights;
  if (weights_path.empty()) {
    SeededRng rng(g.seed);
    weights = random_cegm_weights(chart, rng);
  } else {
    weights = cegm_weights_from_file(weights_path, chart.labels);
  }
  SquareSystem sys = build_cegm_scattering(k, m, weights);
  TrackerConfig cfg = tracker_config(g);
  rep.facts.emplace_back("k", std::to_string(k));
  rep.facts.emplace_back("m", std::to_string(m));
  rep.facts.emplace_back("coordinates", std::to_string(chart.labels.size()));
  rep.config = cfg;
  rep.result = solve(sys, cfg);
  return finish(rep, g, t0);
}

int cmd_degree(const Global& g, const std::string& query, int n, int c,
               std::vector<int> degs, long d, long genus, int d1, int d2, int k, int m,
               Clock::time_point t0) {
  RunReport rep = base_report("degree", g);
  rep.facts.emplace_back("query", query);
  if (query == "ed-ci" || query == "ml-ci") {
    if (degs.empty()) throw std::invalid_argument("--degs is required for " + query);
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    Int value = (query == "ed-ci") ? ed_degree_ci(n, c, degs) : ml_degree_ci(n, c, degs);
    rep.facts.emplace_back("value", value.get_str());
    rep.facts.emplace_back("formula",
                           query == "ed-ci"
                               ? "d1...dc * sum over i1+..+ic <= n-c of prod (dj-1)^ij"
                               : "d1...dc * sum over i1+..+ic <= n-c of prod dj^ij");
  } else if (query == "curve-ed") {
    Int value = ed_degree_curve(Int(d), Int(genus));
    rep.facts.emplace_back("value", value.get_str());
    rep.facts.emplace_back("formula", "3d + 2g - 2");
  } else if (query == "space-curve-ed") {
    Int gen = ci_space_curve_genus(d1, d2);
    Int value = ed_degree_curve(Int(d1) * Int(d2), gen);
    rep.facts.emplace_back("value", value.get_str());
    rep.facts.emplace_back("genus", gen.get_str());
    rep.facts.emplace_back("formula", "d1 d2 (d1 + d2 - 1)");
  } else if (query == "polar") {
    auto p = polar_degrees_surface(static_cast<int>(d));
    rep.facts.emplace_back("value", p[0].get_str() + "," + p[1].get_str() + "," + p[2].get_str());
    rep.facts.emplace_back("sum", Int(p[0] + p[1] + p[2]).get_str());
    rep.facts.emplace_back("formula", "d(d-1)^2, d(d-1), d");
  } else if (query == "gaussian") {
    GaussianDegrees gd = gaussian_ml_degrees_n4(k);
    rep.facts.emplace_back("value", std::to_string(gd.ml));
    rep.facts.emplace_back("reciprocal", std::to_string(gd.reciprocal));
    rep.facts.emplace_back("formula", "catalogued table for 4x4 symmetric matrices");
  } else {
    std::optional<Int> value = cegm_ml_degree(k, m);
    if (!value.has_value()) {
      rep.warnings.push_back("no closed value known for this (k, m)");
      finish(rep, g, t0);
      return 1;
    }
    rep.facts.emplace_back("value", value->get_str());
    rep.facts.emplace_back("formula", k == 2 || m - k == 2
                                          ? "(m-3)!"
                                          : "catalogued scattering count");
  }
  return finish(rep, g, t0);
}

int cmd_pde_hankel(const Global& g, const std::string& u_text, const std::string& psi_text,
                   Clock::time_point t0) {
  RunReport rep = base_report("pde", g);
  std::vector<Rat> u = rat_list(u_text);
  RatMatrix h = hankel_matrix(u);
  int rank = rank_exact(h);
  rep.facts.emplace_back("check", "hankel-wave");
  rep.facts.emplace_back("u", join_rats(u));
  rep.facts.emplace_back("rank", std::to_string(rank));
  if (rank == 4) {
    rep.facts.emplace_back("verified", "false");
    rep.warnings.push_back("matrix has full rank, no wave directions");
    finish(rep, g, t0);
    return 1;
  }
  std::size_t r = 4 - static_cast<std::size_t>(rank);
  RingPtr wring = ring_x(r, "w");
  Polynomial<Rat> psi(wring);
  if (psi_text.empty()) {
    psi = Polynomial<Rat>::constant(wring, Rat(1));
    for (std::size_t i = 0; i < r; ++i) psi *= Polynomial<Rat>::variable(wring, i);
  } else {
    psi = parse_polynomial(psi_text, wring);
  }
  auto phi = build_wave_solution(u, psi);
  bool ok = is_module_solution(hankel_module(), phi);
  rep.facts.emplace_back("kernel_dim", std::to_string(r));
  rep.facts.emplace_back("profile", format_polynomial(psi));
  rep.facts.emplace_back("verified", ok ? "true" : "false");
  int rc = finish(rep, g, t0);
  return ok ? rc : 1;
}

int cmd_pde_form(const Global& g, const std::string& xi_text, const std::string& psi_text,
                 const std::string& alpha_text, const std::string& beta_text,
                 Clock::time_point t0) {
  RunReport rep = base_report("pde", g);
  RingPtr tring = make_ring({"t"});
  Polynomial<Rat> xi = parse_polynomial(xi_text, tring);
  Polynomial<Rat> psi = parse_polynomial(psi_text, tring);
  Rat alpha = rat_from_string(alpha_text);
  Rat beta = rat_from_string(beta_text);
  bool ok = verify_havetheform(xi, psi, alpha, beta);
  rep.facts.emplace_back("check", "form");
  rep.facts.emplace_back("xi", format_polynomial(xi));
  rep.facts.emplace_back("psi", format_polynomial(psi));
  rep.facts.emplace_back("alpha", rat_to_string(alpha));
  rep.facts.emplace_back("beta", rat_to_string(beta));
  rep.facts.emplace_back("verified", ok ? "true" : "false");
  int rc = finish(rep, g, t0);
  return ok ? rc : 1;
}

int cmd_pde_membership(const Global& g, const std::string& conditions_path,
                       const std::string& poly_text, Clock::time_point t0) {
  RunReport rep = base_report("pde", g);
  MembershipProblem problem = membership_from_file(conditions_path);
  Polynomial<Rat> f = parse_polynomial(poly_text, problem.ring);
  bool member = membership(problem.conditions, f);
  rep.facts.emplace_back("check", "membership");
  rep.facts.emplace_back("conditions", conditions_path);
  rep.facts.emplace_back("polynomial", format_polynomial(f));
  rep.facts.emplace_back("member", member ? "true" : "false");
  return finish(rep, g, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical-point systems: build, track, count, and verify"};
  app.fallthrough();
  app.require_subcommand(1);

  Global g;
  app.add_option("--seed", g.seed, "seed for every random choice; echoed in reports")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "tracking worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--strict", g.strict, "exit 3 when the found count misses the expected one");
  app.add_option("--json-out", g.json_out, "write the JSON run report to this file");

  auto* ed = app.add_subcommand("solve-ed", "critical points of squared distance to a model");
  std::string ed_model, ed_u;
  ed->add_option("model", ed_model, "model JSON file")->required();
  ed->add_option("--u", ed_u, "data point, comma-separated rationals")->required();

  auto* sec = app.add_subcommand("solve-section",
                                 "critical points of a random linear form on a sliced model");
  std::string sec_model;
  int sec_index = 1;
  sec->add_option("model", sec_model, "model JSON file")->required();
  sec->add_option("--section", sec_index, "number of the linear section, starting at 1")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* mle = app.add_subcommand("solve-mle", "likelihood equations for a statistical model");
  std::string mle_variant, mle_model, mle_data;
  int mle_n = 4, mle_k = 2;
  mle->add_option("variant", mle_variant, "gaussian-conc, gaussian-cov, or discrete")
      ->required()
      ->check(CLI::IsMember({"gaussian-conc", "gaussian-cov", "discrete"}));
  mle->add_option("--n", mle_n, "matrix size for gaussian variants")->capture_default_str();
  mle->add_option("--k", mle_k, "subspace dimension for gaussian variants")
      ->capture_default_str();
  mle->add_option("--model", mle_model, "model JSON file (discrete variant)");
  mle->add_option("--data", mle_data, "observed counts, comma-separated (discrete variant)");

  auto* cegm = app.add_subcommand("solve-cegm", "scattering equations on a moduli chart");
  int cegm_k = 2, cegm_m = 5;
  std::string cegm_weights;
  cegm->add_option("--k", cegm_k, "rows of the chart")->required();
  cegm->add_option("--m", cegm_m, "columns of the chart")->required();
  cegm->add_option("--weights", cegm_weights,
                   "JSON weight file, array or label map (default: seeded random)");

  auto* deg = app.add_subcommand("degree", "closed-form critical-point counts");
  std::string deg_query;
  int deg_n = 0, deg_c = 0, deg_d1 = 0, deg_d2 = 0, deg_k = 0, deg_m = 0;
  long deg_d = 0, deg_genus = 0;
  std::vector<int> deg_degs;
  deg->add_option("query", deg_query, "which count to evaluate")
      ->required()
      ->check(CLI::IsMember({"ed-ci", "ml-ci", "curve-ed", "space-curve-ed", "polar",
                             "gaussian", "cegm"}));
  deg->add_option("--n", deg_n, "ambient dimension");
  deg->add_option("--c", deg_c, "codimension");
  deg->add_option("--degs", deg_degs, "generator degrees")->delimiter(',');
  deg->add_option("--d", deg_d, "degree of the curve or surface");
  deg->add_option("--g", deg_genus, "genus of the curve");
  deg->add_option("--d1", deg_d1, "first surface degree");
  deg->add_option("--d2", deg_d2, "second surface degree");
  deg->add_option("--k", deg_k, "chart rows / subspace dimension");
  deg->add_option("--m", deg_m, "chart columns");

  auto* pde = app.add_subcommand("pde", "verify differential-equation facts");
  std::string pde_check, pde_u, pde_profile, pde_xi, pde_psi, pde_alpha = "0",
                                                             pde_beta = "0";
  std::string pde_conditions, pde_poly;
  pde->add_option("check", pde_check, "hankel-wave, form, or membership")
      ->required()
      ->check(CLI::IsMember({"hankel-wave", "form", "membership"}));
  pde->add_option("--u", pde_u, "length-7 coefficient vector (hankel-wave)");
  pde->add_option("--profile", pde_profile, "wave profile in w1..wr (hankel-wave)");
  pde->add_option("--xi", pde_xi, "univariate polynomial in t (form)");
  pde->add_option("--psi", pde_psi, "univariate polynomial in t (form)");
  pde->add_option("--alpha", pde_alpha, "rational constant (form)")->capture_default_str();
  pde->add_option("--beta", pde_beta, "rational constant (form)")->capture_default_str();
  pde->add_option("--conditions", pde_conditions, "membership conditions JSON file");
  pde->add_option("--poly", pde_poly, "polynomial to test (membership)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto t0 = Clock::now();
  try {
    if (app.got_subcommand(ed)) return cmd_solve_ed(g, ed_model, ed_u, t0);
    if (app.got_subcommand(sec)) return cmd_solve_section(g, sec_model, sec_index, t0);
    if (app.got_subcommand(mle)) {
      if (mle_variant == "discrete") {
        if (mle_model.empty() || mle_data.empty()) {
          throw std::invalid_argument("discrete variant needs --model and --data");
        }
        return cmd_solve_mle_discrete(g, mle_model, mle_data, t0);
      }
      return cmd_solve_mle_gaussian(g, mle_variant, mle_n, mle_k, t0);
    }
    if (app.got_subcommand(cegm)) return cmd_solve_cegm(g, cegm_k, cegm_m, cegm_weights, t0);
    if (app.got_subcommand(deg)) {
      return cmd_degree(g, deg_query, deg_n, deg_c, deg_degs, deg_d, deg_genus, deg_d1,
                        deg_d2, deg_k, deg_m, t0);
    }
    if (app.got_subcommand(pde)) {
      if (pde_check == "hankel-wave") {
        if (pde_u.empty()) throw std::invalid_argument("hankel-wave needs --u");
        return cmd_pde_hankel(g, pde_u, pde_profile, t0);
      }
      if (pde_check == "form") {
        if (pde_xi.empty() || pde_psi.empty()) {
          throw std::invalid_argument("form needs --xi and --psi");
        }
        return cmd_pde_form(g, pde_xi, pde_psi, pde_alpha, pde_beta, t0);
      }
      if (pde_conditions.empty() || pde_poly.empty()) {
        throw std::invalid_argument("membership needs --conditions and --poly");
      }
      return cmd_pde_membership(g, pde_conditions, pde_poly, t0);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
