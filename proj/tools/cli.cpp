#include "cli.hpp"

#include "radspec/errors.hpp"
#include "radspec/io.hpp"
#include "radspec/model.hpp"
#include "radspec/recurrence.hpp"
#include "radspec/validation.hpp"
#include "radspec/variational.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

namespace radspec::cli {

namespace {

using io::json;

struct Globals {
  std::string output;
  std::string format;  // empty: command default
  int basis_size = variational::kDefaultBasisSize;
  std::string basis_kind = "orthonormal-oscillator";
  bool quick = false;
};

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string resolve_format(const Globals& g, const char* fallback) {
  const std::string f = g.format.empty() ? fallback : g.format;
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  return f;
}

void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.output);
  if (!file) throw Error("cannot open output file " + g.output);
  file << text;
}

std::string join_coeffs(const std::vector<double>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ';';
    s += io::format_double(v[k]);
  }
  return s;
}

variational::BasisSpec basis_spec(const Globals& g, double gamma) {
  return {gamma, g.basis_size, variational::basis_kind_from_string(g.basis_kind)};
}

struct ProblemArgs {
  std::optional<double> gamma;
  std::optional<double> beta;
  std::string params_file;
};

struct Problem {
  model::RadialProblem reduced;
  std::optional<model::PhysicalParams> params;
};

Problem resolve_problem(const ProblemArgs& a, bool need_beta) {
  Problem p;
  if (!a.params_file.empty()) {
    if (a.gamma || a.beta) {
      throw UsageError("--params is mutually exclusive with --gamma/--beta");
    }
    p.params = io::params_from_file(a.params_file);
    p.reduced = model::reduce(*p.params);
    return p;
  }
  if (need_beta && !a.beta) throw UsageError("--beta (or --params) is required");
  p.reduced.gamma = a.gamma.value_or(0.0);
  p.reduced.beta = a.beta.value_or(0.0);
  if (!(p.reduced.gamma >= 0.0)) throw UsageError("--gamma must be non-negative");
  return p;
}

int cmd_truncate(const Globals& g, int n, const ProblemArgs& a, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be non-negative");
  if (a.beta) throw UsageError("truncate takes no --beta; the roots determine beta");
  const Problem prob = resolve_problem(a, false);
  const double gamma = prob.reduced.gamma;
  const auto sols = recurrence::truncation_roots(n, gamma);

  json records = json::array();
  for (const auto& s : sols) {
    json r = io::to_json(s);
    if (prob.params) {
      try {
        const auto e = model::energy_from_truncation(n, gamma, s.beta_root, *prob.params);
        r["omega"] = e.omega;
        r["energy"] = e.energy;
      } catch (const FrequencyUndefined& ex) {
        r["omega"] = nullptr;
        r["energy"] = nullptr;
        r["note"] = ex.what();
      }
    }
    records.push_back(std::move(r));
  }

  if (resolve_format(g, "json") == "csv") {
    std::ostringstream s;
    s << "n,i,gamma,beta_root,W_exact,node_count,poly_coeffs";
    if (prob.params) s << ",omega,energy";
    s << '\n';
    for (const auto& r : records) {
      s << r["n"].get<int>() << ',' << r["i"].get<int>() << ','
        << io::format_double(r["gamma"].get<double>()) << ','
        << io::format_double(r["beta_root"].get<double>()) << ','
        << io::format_double(r["W_exact"].get<double>()) << ',' << r["node_count"].get<int>()
        << ',' << join_coeffs(r["poly_coeffs"].get<std::vector<double>>());
      if (prob.params) {
        for (const char* key : {"omega", "energy"}) {
          s << ',' << (r[key].is_null() ? "nan" : io::format_double(r[key].get<double>()));
        }
      }
      s << '\n';
    }
    emit(g, out, s.str());
  } else {
    json doc = {{"command", "truncate"}, {"n", n}, {"gamma", gamma}, {"solutions", records}};
    if (prob.params) doc["params"] = io::to_json(*prob.params);
    emit(g, out, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_spectrum(const Globals& g, const ProblemArgs& a, int states, std::ostream& out) {
  const Problem prob = resolve_problem(a, true);
  const auto r = variational::solve_spectrum(prob.reduced.gamma, prob.reduced.beta, states,
                                             basis_spec(g, prob.reduced.gamma));
  if (resolve_format(g, "json") == "csv") {
    std::ostringstream s;
    s << "state_index,W,convergence,inv_xi_expectation\n";
    for (int j = 0; j < states; ++j) {
      s << j << ',' << io::format_double(r.eigenvalues[j]) << ','
        << io::format_double(r.convergence[j]) << ',' << io::format_double(r.inv_xi[j]) << '\n';
    }
    emit(g, out, s.str());
  } else {
    emit(g, out, io::to_json(r).dump(2) + "\n");
  }
  return kExitOk;
}

struct SweepArgs {
  double gamma = 0.0;
  std::optional<double> beta_min;
  std::optional<double> beta_max;
  int steps = 0;
  std::vector<double> betas;
  int states = 4;
};

int cmd_sweep(const Globals& g, const SweepArgs& a, std::ostream& out, std::ostream& err) {
  if (!(a.gamma >= 0.0)) throw UsageError("--gamma must be non-negative");
  std::vector<double> betas = a.betas;
  if (betas.empty()) {
    if (!a.beta_min || !a.beta_max) {
      throw UsageError("sweep needs --beta-min/--beta-max/--steps or --betas");
    }
    if (!(*a.beta_min < *a.beta_max)) throw UsageError("--beta-min must be below --beta-max");
    if (a.steps < 2) throw UsageError("--steps must be at least 2");
    for (int k = 0; k < a.steps; ++k) {
      betas.push_back(*a.beta_min + (*a.beta_max - *a.beta_min) * k / (a.steps - 1));
    }
  } else {
    if (a.beta_min || a.beta_max || a.steps != 0) {
      throw UsageError("--betas is mutually exclusive with --beta-min/--beta-max/--steps");
    }
    if (betas.size() < 2 || !std::is_sorted(betas.begin(), betas.end()) ||
        std::adjacent_find(betas.begin(), betas.end()) != betas.end()) {
      throw UsageError("--betas needs at least two strictly increasing values");
    }
  }

  std::optional<variational::RitzBasis> basis;
  std::string basis_error;
  try {
    basis.emplace(basis_spec(g, a.gamma));
  } catch (const Error& e) {
    basis_error = e.what();
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  struct Row {
    double beta;
    int j;
    double W;
    double inv_xi;
  };
  std::vector<Row> rows;
  bool failed = false;
  for (double beta : betas) {
    try {
      if (!basis) throw Error(basis_error);
      const auto r = variational::solve_spectrum(*basis, beta, a.states);
      for (int j = 0; j < a.states; ++j) rows.push_back({beta, j, r.eigenvalues[j], r.inv_xi[j]});
    } catch (const Error& e) {
      failed = true;
      err << "warning: solver failed at beta = " << io::format_double(beta) << ": " << e.what()
          << '\n';
      for (int j = 0; j < a.states; ++j) rows.push_back({beta, j, nan, nan});
    }
  }

  bool monotone = true;
  for (int j = 0; j < a.states; ++j) {
    double last = -std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
      if (row.j != j || std::isnan(row.W)) continue;
      if (!(row.W > last)) {
        monotone = false;
        err << "warning: state " << j << " is not strictly increasing at beta = "
            << io::format_double(row.beta) << '\n';
      }
      last = row.W;
    }
  }

  if (resolve_format(g, "csv") == "csv") {
    std::ostringstream s;
    s << "beta,state_index,W,inv_xi_expectation\n";
    for (const auto& row : rows) {
      s << io::format_double(row.beta) << ',' << row.j << ',' << io::format_double(row.W) << ','
        << io::format_double(row.inv_xi) << '\n';
    }
    emit(g, out, s.str());
  } else {
    json arr = json::array();
    for (const auto& row : rows) {
      json r = {{"beta", row.beta}, {"state_index", row.j}};
      r["W"] = std::isnan(row.W) ? json(nullptr) : json(row.W);
      r["inv_xi_expectation"] = std::isnan(row.inv_xi) ? json(nullptr) : json(row.inv_xi);
      arr.push_back(std::move(r));
    }
    emit(g, out, json{{"gamma", a.gamma}, {"rows", arr}}.dump(2) + "\n");
  }
  return failed || !monotone ? kExitFailure : kExitOk;
}

constexpr const char* kTruncationCaveat =
    "Truncation energies belong to different potentials: each root beta^(n,i) fixes its own "
    "omega, so these values are not a spectrum of the model defined by the parameter file.";

int cmd_energies(const Globals& g, const std::string& params_file, int states, std::ostream& out) {
  const auto params = io::params_from_file(params_file);
  const auto reduced = model::reduce(params);
  const auto r = variational::solve_spectrum(reduced.gamma, reduced.beta, states,
                                             basis_spec(g, reduced.gamma));
  std::vector<model::EnergyRecord> energies;
  for (double W : r.eigenvalues) energies.push_back(model::energy_from_W(W, params.omega, params));

  json trunc = json::array();
  for (int n = 0; n <= 2; ++n) {
    for (const auto& s : recurrence::truncation_roots(n, reduced.gamma)) {
      json rec = {{"n", n}, {"i", s.i}, {"beta_root", s.beta_root}, {"W_exact", s.W_exact}};
      try {
        const auto e = model::energy_from_truncation(n, reduced.gamma, s.beta_root, params);
        rec["omega"] = e.omega;
        rec["energy"] = e.energy;
      } catch (const Error& ex) {
        rec["omega"] = nullptr;
        rec["energy"] = nullptr;
        rec["note"] = ex.what();
      }
      trunc.push_back(std::move(rec));
    }
  }

  if (resolve_format(g, "json") == "csv") {
    std::ostringstream s;
    s << "state_index,W,omega,energy\n";
    for (std::size_t j = 0; j < energies.size(); ++j) {
      s << j << ',' << io::format_double(energies[j].W) << ','
        << io::format_double(energies[j].omega) << ',' << io::format_double(energies[j].energy)
        << '\n';
    }
    emit(g, out, s.str());
    return kExitOk;
  }
  json recs = json::array();
  for (std::size_t j = 0; j < energies.size(); ++j) {
    json e = io::to_json(energies[j]);
    e["state_index"] = j;
    recs.push_back(std::move(e));
  }
  json doc = {{"params", io::to_json(params)},
              {"gamma", reduced.gamma},
              {"beta", reduced.beta},
              {"basis_kind", std::string(variational::to_string(r.kind))},
              {"basis_size", r.basis_size},
              {"energies", recs},
              {"truncation_comparison", {{"caveat", kTruncationCaveat}, {"records", trunc}}}};
  emit(g, out, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_validate(const Globals& g, std::ostream& out) {
  validation::ValidationConfig cfg;
  cfg.basis_size = g.basis_size;
  cfg.quick = g.quick;
  const auto results = validation::run_all(cfg);
  std::ostringstream text;
  json arr = json::array();
  for (const auto& r : results) {
    text << validation::format_line(r) << '\n';
    const char* status = r.status == validation::Status::Pass   ? "pass"
                         : r.status == validation::Status::Fail ? "fail"
                                                                : "skipped";
    arr.push_back({{"id", r.id}, {"name", r.name}, {"status", status}, {"detail", r.detail}});
  }
  const bool ok = validation::all_passed(results);
  if (ok) {
    text << "all checks passed\n";
  } else {
    text << "FAILED:";
    for (const auto& r : results) {
      if (r.status == validation::Status::Fail) text << ' ' << r.id << " (" << r.name << ')';
    }
    text << '\n';
  }
  out << text.str();
  if (!g.output.empty()) {
    std::ofstream file(g.output);
    if (!file) throw Error("cannot open output file " + g.output);
    file << json{{"checks", arr}, {"passed", ok}}.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "radspec: spectra of the radial eigenproblem with potential beta/xi + xi^2.\n"
      "Natural units hbar = c = 1 are used for physical-parameter files."};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--output", g.output, "Write results to this file instead of stdout");
  app.add_option("--format", g.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--basis-size", g.basis_size, "Ritz basis size N")
      ->check(CLI::PositiveNumber);
  app.add_option("--basis-kind", g.basis_kind, "orthonormal-oscillator or raw-monomial")
      ->check(CLI::IsMember({"orthonormal-oscillator", "orthonormal", "raw-monomial", "raw"}));
  app.add_flag("--quick", g.quick, "validate: run the fast subset only");

  auto* truncate = app.add_subcommand("truncate", "Polynomial (truncation) solutions for degree n");
  int n = -1;
  ProblemArgs trunc_args;
  truncate->add_option("--n", n, "Degree of the polynomial factor")->required();
  truncate->add_option("--gamma", trunc_args.gamma, "Exponent gamma >= 0");
  truncate->add_option("--beta", trunc_args.beta)->group("");
  truncate->add_option("--params", trunc_args.params_file,
                       "Physical-parameter JSON; adds the frequency each root forces");

  auto* spectrum = app.add_subcommand("spectrum", "Lowest eigenvalues W_j for given (gamma, beta)");
  ProblemArgs spec_args;
  int spec_states = 4;
  spectrum->add_option("--gamma", spec_args.gamma, "Exponent gamma >= 0");
  spectrum->add_option("--beta", spec_args.beta, "Coulomb coefficient");
  spectrum->add_option("--params", spec_args.params_file, "Physical-parameter JSON");
  spectrum->add_option("--states", spec_states, "Number of states")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Eigenvalues and <1/xi> over a range of beta (CSV)");
  SweepArgs sweep_args;
  sweep->add_option("--gamma", sweep_args.gamma, "Exponent gamma >= 0");
  sweep->add_option("--beta-min", sweep_args.beta_min);
  sweep->add_option("--beta-max", sweep_args.beta_max);
  sweep->add_option("--steps", sweep_args.steps, "Number of equally spaced beta values");
  sweep->add_option("--betas", sweep_args.betas, "Explicit increasing beta values")
      ->delimiter(',');
  sweep->add_option("--states", sweep_args.states, "Number of states")->check(CLI::PositiveNumber);

  auto* energies = app.add_subcommand("energies", "Physical energies from a parameter file");
  std::string energies_file;
  int energy_states = 4;
  energies->add_option("--params", energies_file, "Physical-parameter JSON")->required();
  energies->add_option("--states", energy_states, "Number of states")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Run the acceptance checks");

  for (auto* sub : {truncate, spectrum, sweep, energies, validate}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*truncate) return cmd_truncate(g, n, trunc_args, out);
    if (*spectrum) return cmd_spectrum(g, spec_args, spec_states, out);
    if (*sweep) return cmd_sweep(g, sweep_args, out, err);
    if (*energies) return cmd_energies(g, energies_file, energy_states, out);
    if (*validate) return cmd_validate(g, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace radspec::cli
