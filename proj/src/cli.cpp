// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlsw/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "nlsw/bloch.hpp"
#include "nlsw/checks.hpp"
#include "nlsw/energy.hpp"
#include "nlsw/errors.hpp"
#include "nlsw/evolution.hpp"
#include "nlsw/io.hpp"
#include "nlsw/reduced.hpp"

namespace nlsw::cli {

namespace {

const char* evidence_note =
    "numerical evidence from a truncated split-step simulation; not a proof "
    "of nonlinear stability or instability";

struct Binding {
  CLI::Option* opt;
  std::function<void(const json&)> set;
};

std::string default_format(Command c) {
  switch (c) {
    case Command::spectrum:
    case Command::evolve:
      return "csv";
    default:
      return "json";
  }
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out.empty())
    out << content;
  else
    write_atomic(cfg.out, content);
}

void report_checks(const std::vector<Check>& checks, std::ostream& err) {
  for (const auto& c : checks)
    err << fmt::format("{} {} (value {:.3e}, tol {:.1e})\n",
                       c.pass ? "PASS" : "FAIL", c.name, c.value, c.tol);
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  if (exceeds_amplitude_cap(cfg.params))
    err << fmt::format("warning: |(a,b)| = {} exceeds the small-amplitude cap {}\n",
                       std::hypot(cfg.params.a, cfg.params.b), amplitude_cap);
  const WaveProfile w = solve_profile(cfg.params, cfg.modes);
  std::vector<Check> checks;
  const bool csv = cfg.format == "csv";

  switch (cfg.command) {
    case Command::profile: {
      if (csv) {
        std::string s = "n,re,im\n";
        for (int n = -w.P.truncation(); n <= w.P.truncation(); n += 2)
          s += fmt::format("{},{},{}\n", n, w.P[n].real(), w.P[n].imag());
        emit(cfg, s, out);
      } else {
        emit(cfg, to_json(w).dump(2) + "\n", out);
      }
      if (cfg.verify) checks = verify_profile(w);
      break;
    }
    case Command::spectrum: {
      const BlochSpectrum s = spectrum(w, cfg.gamma, cfg.modes);
      if (csv) {
        emit(cfg, spectrum_csv(s), out);
      } else {
        json j;
        j["gamma"] = s.gamma;
        j["max_re"] = s.max_re;
        json ev = json::array();
        for (const auto& z : s.eigenvalues)
          ev.push_back(json::array({z.real(), z.imag()}));
        j["eigenvalues"] = std::move(ev);
        emit(cfg, j.dump(2) + "\n", out);
      }
      if (cfg.verify) checks = verify_spectrum(w, cfg.gamma, cfg.modes);
      break;
    }
    case Command::sweep: {
      SweepOptions so;
      so.modes = cfg.modes;
      const StabilityReport r = classify(
          w, uniform_grid(cfg.gamma_min, cfg.gamma_max, cfg.gamma_steps), so);
      emit(cfg, csv ? sweep_csv(r) : to_json(r).dump(2) + "\n", out);
      err << "verdict: " << (r.stable ? "stable" : "unstable");
      if (r.unstable_band)
        err << fmt::format(" band [{}, {}] peak {} at gamma {}",
                           r.unstable_band->gamma_lo, r.unstable_band->gamma_hi,
                           r.unstable_band->peak_growth,
                           r.unstable_band->peak_gamma);
      err << "\n";
      if (cfg.verify) {
        double worst = 0.0;
        for (double v : r.per_gamma_max_re) worst = std::max(worst, v);
        checks.push_back(make_check(
            "verdict consistent with per-gamma growth",
            (r.stable == (worst <= stability_tol)) ? 0.0 : 1.0, 0.0));
        const double g = r.gamma_grid[r.gamma_grid.size() / 2];
        for (auto& c : verify_spectrum(w, g == 0.5 ? 0.25 : g, cfg.modes))
          checks.push_back(std::move(c));
      }
      break;
    }
    case Command::reduced: {
      emit(cfg, to_json(quartet_report(w, cfg.gamma, cfg.modes)).dump(2) + "\n",
           out);
      if (cfg.verify) checks = verify_reduced(w, cfg.gamma, cfg.modes);
      break;
    }
    case Command::hessian: {
      emit(cfg, to_json(hessian_report(w, cfg.modes)).dump(2) + "\n", out);
      if (cfg.verify) checks = verify_hessian(w, cfg.modes);
      break;
    }
    case Command::evolve: {
      const int n = cfg.periods;
      const int K = cfg.modes * n;
      FourierField Q0 = embed(to_Q(w).Q, n);
      if (cfg.sideband != 0)
        Q0 += cfg.eps * sideband_seed(w, n, cfg.sideband, cfg.modes).field;
      else
        Q0 += cfg.eps * generic_perturbation(K, n);
      const Trajectory t = evolve(Q0, cfg.tmax, cfg.dt, n, w);
      err << "note: " << evidence_note << "\n";
      if (csv) {
        emit(cfg, trajectory_csv(t), out);
      } else {
        json j;
        j["note"] = evidence_note;
        j["a"] = cfg.params.a;
        j["b"] = cfg.params.b;
        j["sign"] = to_string(cfg.params.sign);
        j["periods"] = n;
        j["dt"] = cfg.dt;
        json s = json::array();
        for (size_t i = 0; i < t.times.size(); ++i) {
          const auto& d = t.diagnostics[i];
          s.push_back(json::array({t.times[i], d.N, d.M, d.E, t.rho[i]}));
        }
        j["samples"] = std::move(s);
        emit(cfg, j.dump(2) + "\n", out);
      }
      if (cfg.verify) checks = verify_trajectory(t);
      break;
    }
  }
  if (cfg.verify) {
    report_checks(checks, err);
    if (!all_pass(checks)) return exit_failure;
  }
  return exit_ok;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.modes < 1) throw Error("--modes must be positive");
  if (cfg.gamma_steps < 1) throw Error("--gamma-steps must be positive");
  if (!(cfg.dt > 0.0)) throw Error("--dt must be positive");
  if (!(cfg.tmax > 0.0)) throw Error("--tmax must be positive");
  if (cfg.periods < 1) throw Error("--periods must be positive");
  if (!(cfg.eps >= 0.0)) throw Error("--eps must be non-negative");
  if (!gamma_in_range(cfg.gamma)) throw Error("--gamma must lie in (-1/2, 1/2]");
  if (!(cfg.gamma_min >= 0.0 && cfg.gamma_max <= 0.5 &&
        cfg.gamma_min <= cfg.gamma_max))
    throw Error("sweep range must satisfy 0 <= gamma-min <= gamma-max <= 1/2");
  if (cfg.format != "json" && cfg.format != "csv")
    throw Error("--format must be json or csv");
  if (cfg.command == Command::evolve && cfg.sideband != 0 &&
      !gamma_in_range(double(cfg.sideband) / cfg.periods))
    throw Error("--sideband j must satisfy j / periods in (-1/2, 1/2]");
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Small periodic waves of the cubic NLS equation: profiles, "
               "Bloch spectra, reduced dynamics, energy Hessian, evolution"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string sign = "defocusing";
  std::string format;
  std::string config_path;

  const std::map<std::string, Command> names = {
      {"profile", Command::profile}, {"spectrum", Command::spectrum},
      {"sweep", Command::sweep},     {"reduced", Command::reduced},
      {"hessian", Command::hessian}, {"evolve", Command::evolve}};
  const std::map<std::string, std::string> help = {
      {"profile", "solve the wave profile and write it as JSON"},
      {"spectrum", "eigenvalues of the Bloch operator at one gamma"},
      {"sweep", "stability verdict over a gamma grid"},
      {"reduced", "quartet near the origin vs the quartic polynomial"},
      {"hessian", "small eigenvalues, coercivity and d-Hessian"},
      {"evolve", "split-step evolution with orbital distance"}};

  std::map<std::string, std::map<std::string, Binding>> bindings;
  for (const auto& [name, cmd] : names) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    auto& b = bindings[name];
    auto num = [&](const std::string& key, const std::string& flag, auto& var,
                   const std::string& desc) {
      using T = std::decay_t<decltype(var)>;
      CLI::Option* o = sub->add_option(flag, var, desc)->capture_default_str();
      b[key] = {o, [&var](const json& j) { var = j.get<T>(); }};
    };
    num("a", "--a", cfg.params.a, "coefficient of exp(-iy)");
    num("b", "--b", cfg.params.b, "coefficient of exp(iy)");
    num("sign", "--sign", sign, "focusing or defocusing");
    num("modes", "--modes", cfg.modes, "Fourier truncation N");
    num("gamma", "--gamma", cfg.gamma, "Floquet parameter");
    num("gamma_min", "--gamma-min", cfg.gamma_min, "sweep lower bound");
    num("gamma_max", "--gamma-max", cfg.gamma_max, "sweep upper bound");
    num("gamma_steps", "--gamma-steps", cfg.gamma_steps, "sweep grid points");
    num("dt", "--dt", cfg.dt, "time step");
    num("tmax", "--tmax", cfg.tmax, "final time");
    num("periods", "--periods", cfg.periods, "domain multiple n");
    num("eps", "--eps", cfg.eps, "perturbation amplitude");
    num("sideband", "--sideband", cfg.sideband,
        "seed with the Bloch mode at gamma = j / periods (0: generic)");
    num("out", "--out", cfg.out, "output file (default stdout)");
    num("format", "--format", format, "json or csv");
    CLI::Option* v = sub->add_flag("--verify", cfg.verify,
                                   "run the invariant suite for this command");
    b["verify"] = {v, [&cfg](const json& j) { cfg.verify = j.get<bool>(); }};
    sub->add_option("--config", config_path, "JSON file with default knobs");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  std::string active;
  for (const auto& [name, cmd] : names)
    if (app.got_subcommand(name)) active = name;
  cfg.command = names.at(active);

  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw Error("cannot read config file " + config_path);
      const json j = json::parse(f);
      for (const auto& [key, value] : j.items()) {
        auto it = bindings[active].find(key);
        if (it == bindings[active].end())
          throw Error("unknown config key '" + key + "'");
        if (it->second.opt->count() == 0) it->second.set(value);
      }
    }
    cfg.params.sign = parse_nonlinearity(sign);
    cfg.format = format.empty() ? default_format(cfg.command) : format;
    validate(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    return execute(cfg, out, err);
  } catch (const RegimeError& e) {
    err << "regime error: " << e.what() << "\n";
    return exit_regime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("nlsw");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace nlsw::cli
