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

#include "solgeom.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "solgeom/config.hpp"
#include "solgeom/error.hpp"
#include "solgeom/runner.hpp"

struct sg_expr {
  solgeom::Expression expr;
};

struct sg_workspace {
  solgeom::Catalog catalog = solgeom::Catalog::standard();
};

namespace {

thread_local std::string g_last_error;

sg_status fail(sg_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
sg_status guarded(F&& f) {
  try {
    return f();
  } catch (const solgeom::Error& e) {
    return fail(static_cast<sg_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SG_ERR_INTERNAL, "unknown failure");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define SG_REQUIRE(cond, what) \
  if (!(cond)) return fail(SG_ERR_INVALID_ARGUMENT, what)

std::vector<std::string> names_of(size_t n, const char* const* names) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) {
    if (!names[i]) throw solgeom::Error(solgeom::ErrorKind::InvalidArgument, "null variable name");
    out.emplace_back(names[i]);
  }
  return out;
}

sg_status tension_impl(const sg_workspace* ws, const char* map, const double* point, size_t dim, double* comps,
                       size_t cap, double* norm, bool bi) {
  SG_REQUIRE(ws && map && point && norm, "null argument");
  return guarded([&] {
    const auto m = ws->catalog.map(map);
    if (dim != m->source().dim()) return fail(SG_ERR_INVALID_ARGUMENT, "point dimension mismatch");
    if (cap < m->target().dim() || !comps) return fail(SG_ERR_INVALID_ARGUMENT, "component buffer too small");
    const std::vector<double> p(point, point + dim);
    const auto t = bi ? solgeom::bitension(*m, p) : solgeom::tension(*m, p);
    for (size_t i = 0; i < t.components.size(); ++i) comps[i] = t.components[i];
    *norm = t.norm;
    return SG_OK;
  });
}

}  // namespace

extern "C" {

const char* sg_version(void) { return solgeom::kVersion; }

const char* sg_last_error(void) { return g_last_error.c_str(); }

void sg_string_free(char* s) { std::free(s); }

sg_status sg_expr_parse(const char* text, sg_expr** out) {
  SG_REQUIRE(text && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new sg_expr{solgeom::parse(text)};
    return SG_OK;
  });
}

void sg_expr_free(sg_expr* e) { delete e; }

sg_status sg_expr_print(const sg_expr* e, char** out) {
  SG_REQUIRE(e && out, "null argument");
  return guarded([&] {
    *out = dup(e->expr.to_string());
    return SG_OK;
  });
}

sg_status sg_expr_eval(const sg_expr* e, size_t n, const char* const* names, const double* values, double* out) {
  SG_REQUIRE(e && out && (n == 0 || (names && values)), "null argument");
  return guarded([&] {
    const auto vars = names_of(n, names);
    *out = solgeom::eval_value(e->expr, vars, std::span<const double>(values, n));
    return SG_OK;
  });
}

sg_status sg_expr_gradient(const sg_expr* e, size_t n, const char* const* names, const double* values, double* value,
                           double* grad) {
  SG_REQUIRE(e && value && (n == 0 || (names && values && grad)), "null argument");
  return guarded([&] {
    const auto vars = names_of(n, names);
    const auto j = solgeom::eval_jet(e->expr, vars, std::span<const double>(values, n), 1);
    *value = j.value();
    for (size_t i = 0; i < n; ++i) grad[i] = j.d(i);
    return SG_OK;
  });
}

sg_status sg_workspace_create(sg_workspace** out) {
  SG_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new sg_workspace();
    return SG_OK;
  });
}

void sg_workspace_free(sg_workspace* ws) { delete ws; }

sg_status sg_workspace_load_config(sg_workspace* ws, const char* json_text) {
  SG_REQUIRE(ws && json_text, "null argument");
  return guarded([&] {
    ws->catalog = solgeom::merge(ws->catalog, solgeom::parse_config(json_text, ws->catalog));
    return SG_OK;
  });
}

int sg_workspace_contains(const sg_workspace* ws, const char* name) {
  return ws && name && ws->catalog.contains(name) ? 1 : 0;
}

sg_status sg_gauss_curvature(const sg_workspace* ws, const char* manifold, const double* point, size_t dim,
                             double* out) {
  SG_REQUIRE(ws && manifold && point && out, "null argument");
  return guarded([&] {
    const auto m = ws->catalog.manifold(manifold);
    if (dim != m->dim()) return fail(SG_ERR_INVALID_ARGUMENT, "point dimension mismatch");
    *out = solgeom::gauss_curvature(*m, std::vector<double>(point, point + dim));
    return SG_OK;
  });
}

sg_status sg_tension(const sg_workspace* ws, const char* map, const double* point, size_t dim, double* components,
                     size_t cap, double* norm) {
  return tension_impl(ws, map, point, dim, components, cap, norm, false);
}

sg_status sg_bitension(const sg_workspace* ws, const char* map, const double* point, size_t dim, double* components,
                       size_t cap, double* norm) {
  return tension_impl(ws, map, point, dim, components, cap, norm, true);
}

sg_status sg_run(const char* config_json, char** report, int* exit_status) {
  SG_REQUIRE(config_json && report && exit_status, "null argument");
  *report = nullptr;
  *exit_status = solgeom::kExitConfigError;
  return guarded([&] {
    solgeom::RunConfig cfg;
    try {
      cfg = solgeom::RunConfig::from_json(config_json);
    } catch (const solgeom::Error& e) {
      g_last_error = e.what();
      return SG_OK;
    }
    const auto res = solgeom::run(cfg);
    *exit_status = res.exit_status;
    if (!res.diagnostic.empty()) g_last_error = res.diagnostic;
    if (!res.report.is_null()) *report = dup(solgeom::render(res.report));
    return SG_OK;
  });
}

}  // extern "C"
