// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlsw/io.hpp"

#include <fmt/format.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "nlsw/errors.hpp"

namespace nlsw {

namespace {

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

template <size_t K>
json complex_list(const std::array<cplx, K>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(complex_pair(z));
  return a;
}

}  // namespace

std::string format_double(double x) { return fmt::format("{}", x); }

json to_json(const WaveProfile& w) {
  json j;
  j["a"] = w.params.a;
  j["b"] = w.params.b;
  j["sign"] = to_string(w.params.sign);
  j["k"] = w.k;
  j["ell"] = w.ell;
  j["p"] = w.p;
  j["residual"] = w.residual;
  j["truncation"] = w.P.truncation();
  json c = json::array();
  for (int n = -w.P.truncation(); n <= w.P.truncation(); ++n) {
    const cplx z = w.P[n];
    if (z == cplx(0.0)) continue;
    c.push_back(json::array({n, z.real(), z.imag()}));
  }
  j["coeffs"] = std::move(c);
  return j;
}

WaveProfile profile_from_json(const json& j) {
  WaveProfile w;
  w.params.a = j.at("a").get<double>();
  w.params.b = j.at("b").get<double>();
  w.params.sign = parse_nonlinearity(j.at("sign").get<std::string>());
  w.k = j.at("k").get<double>();
  w.ell = j.at("ell").get<double>();
  w.p = j.value("p", w.k + w.ell);
  w.residual = j.value("residual", 0.0);
  int trunc = j.value("truncation", 0);
  for (const auto& c : j.at("coeffs"))
    trunc = std::max(trunc, std::abs(c.at(0).get<int>()));
  if (trunc % 2 == 0) ++trunc;
  w.P = FourierField(trunc);
  for (const auto& c : j.at("coeffs"))
    w.P.at(c.at(0).get<int>()) = cplx(c.at(1).get<double>(), c.at(2).get<double>());
  return w;
}

json to_json(const StabilityReport& r) {
  json j;
  j["a"] = r.params.a;
  j["b"] = r.params.b;
  j["sign"] = to_string(r.params.sign);
  j["verdict"] = r.stable ? "stable" : "unstable";
  if (r.unstable_band) {
    j["band"] = json::array({r.unstable_band->gamma_lo, r.unstable_band->gamma_hi});
    j["peak"] = {{"gamma", r.unstable_band->peak_gamma},
                 {"growth", r.unstable_band->peak_growth}};
  } else {
    j["band"] = nullptr;
    j["peak"] = nullptr;
  }
  json g = json::array();
  for (size_t i = 0; i < r.gamma_grid.size(); ++i)
    g.push_back(json::array({r.gamma_grid[i], r.per_gamma_max_re[i]}));
  j["gamma_max_re"] = std::move(g);
  return j;
}

json to_json(const QuartetReport& r) {
  json j;
  j["gamma"] = r.gamma;
  j["coeffs"] = {{"c3", r.coeffs.c3},
                 {"c2", r.coeffs.c2},
                 {"c1", r.coeffs.c1},
                 {"c0", r.coeffs.c0}};
  j["asymptotic_roots"] = complex_list(r.asymptotic_roots);
  j["asymptotic_quartet"] = complex_list(r.asymptotic_quartet);
  j["full_quartet"] = complex_list(r.full_quartet);
  j["max_mismatch"] = r.max_mismatch;
  j["realness_verdict"] = to_string(r.realness_verdict);
  return j;
}

json to_json(const HessianReport& r) {
  json j;
  j["small_eigs"] = json::array(
      {r.small_eigs[0], r.small_eigs[1], r.small_eigs[2], r.small_eigs[3]});
  j["detB2"] = r.detB2;
  j["coercivity_min"] = r.coercivity_min;
  j["coercivity_min_h1"] = r.coercivity_min_h1;
  if (r.has_d_hessian) {
    j["d_hessian"] = json::array(
        {json::array({r.d_hessian(0, 0), r.d_hessian(0, 1)}),
         json::array({r.d_hessian(1, 0), r.d_hessian(1, 1)})});
    j["d_hessian_richardson"] = r.d_hessian_richardson;
  } else {
    j["d_hessian"] = nullptr;
  }
  j["tolerances"] = {{"kernel_tol", kernel_tol}, {"fd_step", fd_step}};
  return j;
}

std::string spectrum_csv(const BlochSpectrum& s) {
  std::string out = "gamma,re_lambda,im_lambda\n";
  for (const auto& z : s.eigenvalues)
    out += fmt::format("{},{},{}\n", s.gamma, z.real(), z.imag());
  return out;
}

std::string sweep_csv(const StabilityReport& r) {
  std::string out = "gamma,max_re\n";
  for (size_t i = 0; i < r.gamma_grid.size(); ++i)
    out += fmt::format("{},{}\n", r.gamma_grid[i], r.per_gamma_max_re[i]);
  return out;
}

std::string trajectory_csv(const Trajectory& t) {
  std::string out = "t,N,M,E,rho\n";
  for (size_t i = 0; i < t.times.size(); ++i) {
    const auto& d = t.diagnostics[i];
    out += fmt::format("{},{},{},{},{}\n", t.times[i], d.N, d.M, d.E, t.rho[i]);
  }
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw Error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("rename to " + path + " failed: " + ec.message());
  }
}

}  // namespace nlsw
