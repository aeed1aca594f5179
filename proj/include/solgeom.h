/* Copyright 2026 The solgeom Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the solgeom engine.
 *
 * Every fallible call returns an sg_status; on failure sg_last_error() holds a
 * message for the calling thread until its next failing call. Strings handed
 * out by the library are released with sg_string_free. */

#ifndef SOLGEOM_H_
#define SOLGEOM_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(SOLGEOM_BUILDING_LIBRARY)
#define SG_API __declspec(dllexport)
#else
#define SG_API __declspec(dllimport)
#endif
#else
#define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_ERR_PARSE = 1,
  SG_ERR_DOMAIN = 2,
  SG_ERR_INVALID_ARGUMENT = 3,
  SG_ERR_NOT_FOUND = 4,
  SG_ERR_CONFIG = 5,
  SG_ERR_GEOMETRY = 6,
  SG_ERR_PRECONDITION = 7,
  SG_ERR_INTERNAL = 99
} sg_status;

typedef struct sg_expr sg_expr;
typedef struct sg_workspace sg_workspace;

SG_API const char* sg_version(void);
SG_API const char* sg_last_error(void);
SG_API void sg_string_free(char* s);

/* Expressions. Variables are bound by name; unknown names fail with SG_ERR_INVALID_ARGUMENT. */
SG_API sg_status sg_expr_parse(const char* text, sg_expr** out);
SG_API void sg_expr_free(sg_expr* e);
SG_API sg_status sg_expr_print(const sg_expr* e, char** out);
SG_API sg_status sg_expr_eval(const sg_expr* e, size_t n, const char* const* names, const double* values,
                              double* out);
/* Value and gradient with respect to the n bound variables; `grad` holds n entries. */
SG_API sg_status sg_expr_gradient(const sg_expr* e, size_t n, const char* const* names, const double* values,
                                  double* value, double* grad);

/* Workspaces hold the standard catalog plus any loaded JSON descriptions. */
SG_API sg_status sg_workspace_create(sg_workspace** out);
SG_API void sg_workspace_free(sg_workspace* ws);
SG_API sg_status sg_workspace_load_config(sg_workspace* ws, const char* json_text);
SG_API int sg_workspace_contains(const sg_workspace* ws, const char* name);
SG_API sg_status sg_gauss_curvature(const sg_workspace* ws, const char* manifold, const double* point, size_t dim,
                                    double* out);
/* Writes target-dimension components to `components` (capacity `cap`) and the norm to `norm`. */
SG_API sg_status sg_tension(const sg_workspace* ws, const char* map, const double* point, size_t dim,
                            double* components, size_t cap, double* norm);
SG_API sg_status sg_bitension(const sg_workspace* ws, const char* map, const double* point, size_t dim,
                              double* components, size_t cap, double* norm);

/* Runs a JSON run configuration. `*report` receives the JSON report (NULL on
 * configuration errors) and `*exit_status` 0, 1 or 2. Returns SG_OK whenever the
 * run itself completed, including failed checks and configuration errors. */
SG_API sg_status sg_run(const char* config_json, char** report, int* exit_status);

#ifdef __cplusplus
}
#endif

#endif /* SOLGEOM_H_ */
