// Copyright 2026 The solgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "solgeom/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "solgeom/config.hpp"
#include "solgeom/error.hpp"
#include "solgeom/probe.hpp"
#include "solgeom/sampling.hpp"
#include "solgeom/submersion.hpp"
#include "solgeom/verify.hpp"

namespace solgeom {

// --- Tolerances / Record -----------------------------------------------------

const std::vector<std::string_view>& Tolerances::keys() {
  static const std::vector<std::string_view> k = {"algebraic",      "curvature", "bitension",    "tension",
                                                  "jacobi",         "frame_derivative", "fiber", "connection",
                                                  "submersion",     "orthonormality",   "rch",   "control"};
  return k;
}

namespace {

template <typename T>
auto& field(T& t, std::string_view key) {
  if (key == "algebraic") return t.algebraic;
  if (key == "curvature") return t.curvature;
  if (key == "bitension") return t.bitension;
  if (key == "tension") return t.tension;
  if (key == "jacobi") return t.jacobi;
  if (key == "frame_derivative") return t.frame_derivative;
  if (key == "fiber") return t.fiber;
  if (key == "connection") return t.connection;
  if (key == "submersion") return t.submersion;
  if (key == "orthonormality") return t.orthonormality;
  if (key == "rch") return t.rch;
  if (key == "control") return t.control;
  throw Error(ErrorKind::InvalidArgument, "unknown tolerance '" + std::string(key) + "'");
}

}  // namespace

void Tolerances::set(std::string_view key, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, "tolerance '" + std::string(key) + "' must be positive and finite");
  }
  field(*this, key) = value;
}

double Tolerances::get(std::string_view key) const { return field(*this, key); }

json Tolerances::to_json() const {
  json j = json::object();
  for (auto k : keys()) j[std::string(k)] = get(k);
  return j;
}

json Record::to_json() const {
  json j = {{"name", name},
            {"anchor", anchor},
            {"points", points},
            {"worst_residual", worst_residual},
            {"tolerance", tolerance},
            {"pass", pass}};
  if (!value.is_null()) j["value"] = value;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

// --- RunConfig -----------------------------------------------------------------

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> c = {"paper-verify", "curvature",        "tension",  "bitension",
                                                  "integrability", "submersion-check", "probe-rch"};
  return c;
}

namespace {

std::vector<std::pair<std::string, double>> number_map(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw ConfigError(ptr, "expected an object of numbers");
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number()) throw ConfigError(ptr + "/" + k, "expected a number");
    out.emplace_back(k, v.get<double>());
  }
  return out;
}

json pairs_json(const std::vector<std::pair<std::string, double>>& v) {
  json j = json::object();
  for (const auto& [k, x] : v) j[k] = x;
  return j;
}

}  // namespace

RunConfig RunConfig::from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("", "expected an object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    const std::string ptr = "/" + key;
    auto str = [&]() -> std::string {
      if (!v.is_string()) throw ConfigError(ptr, "expected a string");
      return v.get<std::string>();
    };
    if (key == "command") {
      c.command = str();
    } else if (key == "map") {
      c.map = str();
    } else if (key == "manifold") {
      c.manifold = str();
    } else if (key == "frame") {
      c.frame = str();
    } else if (key == "points") {
      c.points = str();
    } else if (key == "output") {
      c.output = str();
    } else if (key == "configs") {
      if (!v.is_array()) throw ConfigError(ptr, "expected an array of paths");
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string()) throw ConfigError(ptr + "/" + std::to_string(i), "expected a string");
        c.configs.push_back(v[i].get<std::string>());
      }
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw ConfigError(ptr, "expected a nonnegative integer");
      c.seed = v.get<std::uint64_t>();
    } else if (key == "restarts") {
      if (!v.is_number_integer()) throw ConfigError(ptr, "expected an integer");
      c.restarts = v.get<int>();
    } else if (key == "control") {
      if (!v.is_boolean()) throw ConfigError(ptr, "expected a boolean");
      c.control = v.get<bool>();
    } else if (key == "tolerances") {
      c.tolerances = number_map(v, ptr);
    } else if (key == "params") {
      c.params = number_map(v, ptr);
    } else {
      throw ConfigError(ptr, "unknown key");
    }
  }
  return c;
}

json RunConfig::to_json() const {
  return {{"command", command},     {"map", map},
          {"manifold", manifold},   {"frame", frame},
          {"configs", configs},     {"points", points},
          {"seed", seed},           {"restarts", restarts},
          {"control", control},     {"tolerances", pairs_json(tolerances)},
          {"params", pairs_json(params)}, {"output", output}};
}

// --- run -----------------------------------------------------------------------

namespace {

bool is_config_kind(ErrorKind k) {
  return k == ErrorKind::Config || k == ErrorKind::Parse || k == ErrorKind::NotFound ||
         k == ErrorKind::InvalidArgument;
}

struct Plan {
  RunConfig cfg;
  Tolerances tol;
  Catalog catalog;
  MapPtr map;
  ManifoldPtr manifold;
  FramePtr frame;
  std::vector<Point> points;
};

json vec_json(std::span<const double> v) { return json(std::vector<double>(v.begin(), v.end())); }

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

MapPtr with_params(const MapPtr& m, const std::vector<std::pair<std::string, double>>& overrides) {
  if (overrides.empty()) return m;
  ParamMap p = m->params();
  for (const auto& [k, v] : overrides) {
    if (!p.count(k)) throw Error(ErrorKind::InvalidArgument, "map '" + m->name() + "' has no parameter '" + k + "'");
    p[k] = v;
  }
  return std::make_shared<SmoothMap>(m->name(), m->source_ptr(), m->target_ptr(), m->components(), std::move(p));
}

Plan prepare(const RunConfig& in) {
  Plan plan{in, {}, Catalog::standard(), nullptr, nullptr, nullptr, {}};
  RunConfig& c = plan.cfg;
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), c.command) == names.end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown command '" + c.command + "'");
  }
  if (c.restarts < 1) throw Error(ErrorKind::InvalidArgument, "restarts must be at least 1");
  for (const auto& [k, v] : c.tolerances) plan.tol.set(k, v);
  for (const auto& path : c.configs) plan.catalog = merge(plan.catalog, load_config(path, plan.catalog));

  auto need = [&](const std::string& v, const char* what) {
    if (v.empty()) throw Error(ErrorKind::InvalidArgument, "command '" + c.command + "' needs --" + what);
  };
  if (c.command == "tension" || c.command == "bitension" || c.command == "submersion-check") need(c.map, "map");
  if (c.command == "integrability") need(c.frame, "frame");
  if (c.command == "curvature" && c.manifold.empty() && c.frame.empty()) need(c.manifold, "manifold");
  if (!c.params.empty() && c.map.empty()) throw Error(ErrorKind::InvalidArgument, "--param needs --map");

  if (!c.map.empty()) plan.map = with_params(plan.catalog.map(c.map), c.params);
  if (!c.frame.empty()) plan.frame = plan.catalog.frame(c.frame);
  if (!c.manifold.empty()) plan.manifold = plan.catalog.manifold(c.manifold);
  if (plan.frame && plan.manifold && plan.frame->manifold().name() != plan.manifold->name()) {
    throw Error(ErrorKind::InvalidArgument, "frame '" + c.frame + "' lives on '" + plan.frame->manifold().name() +
                                                "', not '" + c.manifold + "'");
  }
  if (!plan.manifold) {
    if (plan.frame) plan.manifold = plan.frame->manifold_ptr();
    else if (plan.map) plan.manifold = plan.map->source_ptr();
  }

  if (c.command != "paper-verify" && c.command != "probe-rch") {
    if (c.points.empty()) c.points = c.command == "submersion-check" ? "quasi:64" : "random:10:" + std::to_string(c.seed);
    plan.points = parse_points(c.points, plan.manifold->dim());
    if (plan.points.empty()) throw Error(ErrorKind::InvalidArgument, "sample spec '" + c.points + "' is empty");
  }
  return plan;
}

Record failed(std::string name, const Error& e) {
  Record r;
  r.name = std::move(name);
  r.pass = false;
  r.worst_residual = std::numeric_limits<double>::quiet_NaN();
  r.points = 1;
  r.detail = e.what();
  return r;
}

template <typename F>
void per_point(const Plan& plan, const std::string& name, std::vector<Record>& out, F&& f) {
  for (const auto& p : plan.points) {
    try {
      out.push_back(f(p));
    } catch (const Error& e) {
      if (is_config_kind(e.kind())) throw;
      Record r = failed(name, e);
      r.value = {{"point", vec_json(p)}};
      out.push_back(std::move(r));
    }
  }
}

std::vector<Record> run_tension(const Plan& plan, bool bi) {
  std::vector<Record> out;
  const std::string name = std::string(bi ? "bitension/" : "tension/") + plan.map->name();
  per_point(plan, name, out, [&](const Point& p) {
    const TensionResult t = bi ? bitension(*plan.map, p) : tension(*plan.map, p);
    Record r;
    r.name = name;
    r.anchor = bi ? "tau_2 = Trace_g(D D - D_D) tau - Trace_g R^N(dphi, tau) dphi" : "tau = Trace_g D dphi";
    r.points = 1;
    // Consistency of the reported norm with the reported components.
    r.worst_residual = std::abs(target_norm(plan.map->target(), t.image, t.components) - t.norm);
    r.tolerance = bi ? plan.tol.bitension : plan.tol.tension;
    r.pass = std::isfinite(t.norm) && r.worst_residual <= r.tolerance;
    r.value = {{"point", vec_json(p)}, {"image", vec_json(t.image)}, {"components", t.components}, {"norm", t.norm}};
    return r;
  });
  return out;
}

double curvature_symmetry_residual(const CurvatureTensor& R) {
  const std::size_t n = R.dim;
  double w = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          w = std::max(w, std::abs(R(i, j, k, l) + R(j, i, k, l)));
          w = std::max(w, std::abs(R(i, j, k, l) + R(i, j, l, k)));
          w = std::max(w, std::abs(R(i, j, k, l) - R(k, l, i, j)));
          w = std::max(w, std::abs(R(i, j, k, l) + R(i, k, l, j) + R(i, l, j, k)));
        }
  return w;
}

std::vector<Record> run_curvature(const Plan& plan) {
  std::vector<Record> out;
  const auto& m = *plan.manifold;
  const std::string name = "curvature/" + (plan.frame ? plan.frame->name() : m.name());
  per_point(plan, name, out, [&](const Point& p) {
    const CurvatureTensor R = riemann_lowered(m, p);
    const Eigen::MatrixXd ric = ricci(m, p);
    const Eigen::MatrixXd ginv = inverse_metric_at(m, p);
    Record r;
    r.name = name;
    r.anchor = "R(X,Y,Z,W) = g(R(Z,W)Y, X)";
    r.points = 1;
    r.worst_residual = curvature_symmetry_residual(R);
    r.tolerance = plan.tol.algebraic;
    r.pass = r.worst_residual <= r.tolerance;
    json v = {{"point", vec_json(p)}, {"ricci", matrix_json(ric)}, {"scalar", (ginv.array() * ric.array()).sum()}};
    if (m.dim() == 2) v["gauss"] = gauss_curvature(m, p);
    if (plan.frame) {
      const CurvatureTensor F = frame_curvature(*plan.frame, p);
      json sec = json::object();
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
          sec["R" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(i + 1) + std::to_string(j + 1)] =
              F(i, j, i, j);
      v["frame"] = std::move(sec);
      r.worst_residual = std::max(r.worst_residual, curvature_symmetry_residual(F));
      r.pass = r.worst_residual <= r.tolerance;
    }
    r.value = std::move(v);
    return r;
  });
  return out;
}

std::vector<Record> run_integrability(const Plan& plan) {
  std::vector<Record> out;
  const FrameField& f = *plan.frame;
  const std::string name = "integrability/" + f.name();
  per_point(plan, name, out, [&](const Point& p) {
    const auto d = integrability_data(f, p, 2);
    ResidualReport rep = check_jacobi(f, p, plan.tol.jacobi);
    if (is_sol_chart(f.manifold(), p)) rep.append(check_curvature_identities(f, p, plan.tol.curvature));
    Record r;
    r.name = name;
    r.anchor = "[e1,e2] = f1 e1 + f2 e2 - 2 sigma e3, [e1,e3] = f3 e2 + kappa1 e3";
    r.points = 1;
    r.worst_residual = rep.worst_residual();
    r.tolerance = std::max(plan.tol.jacobi, plan.tol.curvature);
    r.pass = rep.pass();
    json v = {{"point", vec_json(p)},
              {"f1", d.f1.value()},
              {"f2", d.f2.value()},
              {"f3", d.f3.value()},
              {"kappa1", d.kappa1.value()},
              {"kappa2", d.kappa2.value()},
              {"sigma", d.sigma.value()},
              {"defect", {d.defect[0], d.defect[1], d.defect[2]}},
              {"base_curvature", gauss_curvature_base(d).value}};
    for (const auto& e : rep.entries()) {
      if (!e.pass && r.detail.empty()) r.detail = e.label + " exceeds its tolerance";
    }
    r.value = std::move(v);
    return r;
  });
  return out;
}

std::vector<Record> run_submersion(const Plan& plan) {
  const auto rep = is_riemannian_submersion(*plan.map, plan.points, plan.tol.submersion);
  Record r;
  r.name = "submersion/" + plan.map->name();
  r.anchor = "dpi restricted to the horizontal space is an isometry";
  r.points = plan.points.size();
  r.worst_residual = rep.worst_residual;
  r.tolerance = plan.tol.submersion;
  r.pass = rep.pass;
  r.detail = rep.failure;
  json vertical = json::array();
  for (const auto& s : rep.samples) vertical.push_back({{"point", vec_json(s.point)}, {"vertical", vec_json(s.vertical)}});
  r.value = {{"worst_point", vec_json(rep.worst_point)}, {"samples", std::move(vertical)}};
  return {r};
}

std::vector<Record> run_probe(const Plan& plan) {
  const auto res = probe_rch_infeasibility(plan.cfg.restarts, plan.cfg.seed, plan.cfg.control);
  Record r;
  r.name = plan.cfg.control ? "rch-control" : "rch-probe";
  r.anchor = plan.cfg.control ? "sigma^2 = 2(a_2^3)^2 + 1, sigma^2 = 2(a_1^3)^2 + 1, a_1^3 a_2^3 = 0"
                              : "sigma^2 = 2(a_2^3)^2 - 1, sigma^2 = 2(a_1^3)^2 - 1, a_1^3 a_2^3 = 0";
  r.points = static_cast<std::size_t>(res.restarts);
  r.worst_residual = res.min_residual;
  r.tolerance = plan.cfg.control ? plan.tol.control : plan.tol.rch;
  r.pass = plan.cfg.control ? res.min_residual < r.tolerance : res.min_residual >= r.tolerance;
  r.value = {{"min_residual", res.min_residual},
             {"argmin", {res.argmin[0], res.argmin[1], res.argmin[2], res.argmin[3]}},
             {"restarts", res.restarts},
             {"seed", res.seed}};
  return {r};
}

}  // namespace

RunResult run(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult result;
  Plan plan;
  try {
    plan = prepare(config);
  } catch (const Error& e) {
    result.exit_status = kExitConfigError;
    result.diagnostic = e.what();
    return result;
  }

  std::vector<Record> records;
  try {
    const std::string& cmd = plan.cfg.command;
    if (cmd == "paper-verify") {
      VerifyOptions opt;
      opt.seed = plan.cfg.seed;
      opt.restarts = plan.cfg.restarts;
      opt.tol = plan.tol;
      records = paper_verify(plan.catalog, opt);
    } else if (cmd == "tension" || cmd == "bitension") {
      records = run_tension(plan, cmd == "bitension");
    } else if (cmd == "curvature") {
      records = run_curvature(plan);
    } else if (cmd == "integrability") {
      records = run_integrability(plan);
    } else if (cmd == "submersion-check") {
      records = run_submersion(plan);
    } else {
      records = run_probe(plan);
    }
  } catch (const Error& e) {
    if (is_config_kind(e.kind())) {
      result.exit_status = kExitConfigError;
      result.diagnostic = e.what();
      return result;
    }
    records.push_back(failed(plan.cfg.command, e));
  }

  bool pass = !records.empty();
  json recs = json::array();
  for (const auto& r : records) {
    pass = pass && r.pass;
    recs.push_back(r.to_json());
  }
  json echo = plan.cfg.to_json();
  echo["tolerances"] = plan.tol.to_json();
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  result.report = {{"version", kVersion},
                   {"config", std::move(echo)},
                   {"records", std::move(recs)},
                   {"pass", pass},
                   {"wall_ms", static_cast<std::int64_t>(std::llround(ms))}};
  result.exit_status = pass ? kExitPass : kExitCheckFailed;
  if (!pass) {
    for (const auto& r : records) {
      if (!r.pass) {
        result.diagnostic = "check failed: " + r.name + (r.detail.empty() ? "" : " (" + r.detail + ")");
        break;
      }
    }
  }
  return result;
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

}  // namespace solgeom
