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

#include <cmath>
#include <string>

#include "doctest.h"
#include "solgeom/config.hpp"
#include "solgeom/error.hpp"
#include "solgeom/mapcalc.hpp"
#include "solgeom/sampling.hpp"

using namespace solgeom;

namespace {

const char* kSolCopy = R"json({
  "manifolds": [{"name": "sol_copy", "coords": ["x", "y", "z"],
                 "metric_upper": [["exp(2*z)", "0", "0"], ["exp(-2*z)", "0"], ["1"]],
                 "samples": [[0, 0, 0], [1, -1, 0.5]]}],
  "maps": [{"name": "cubic", "source": "sol_copy", "target": "euclidean2",
            "components": ["y", "A*z^3 + B*z^2"], "params": {"A": 1, "B": 1}}],
  "frames": [{"name": "copy_frame", "manifold": "sol_copy",
              "vectors": [["exp(-z)", "0", "0"], ["0", "exp(z)", "0"], ["0", "0", "1"]],
              "vertical": 1}]
})json";

// Returns the JSON pointer of the ConfigError raised by `text`, or "<none>".
std::string error_pointer(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.pointer();
  }
  return "<none>";
}

std::string manifold_with(const std::string& rows, const std::string& extra = "") {
  return R"({"manifolds": [{"name": "m", "coords": ["x", "y", "z"], "metric_upper": )" + rows + extra + "}]}";
}

}  // namespace

TEST_CASE("a config copy of Sol matches the built-in") {
  const auto b = parse_config(kSolCopy);
  REQUIRE(b.manifolds.size() == 1);
  REQUIRE(b.samples.at("sol_copy").size() == 2);
  const auto& mine = *b.manifolds[0];
  const auto sol = catalog::sol();
  for (const auto& p : random_points(3, 20, 61)) {
    const auto R1 = riemann_lowered(mine, p), R2 = riemann_lowered(*sol, p);
    for (std::size_t i = 0; i < R1.data.size(); ++i) CHECK(std::abs(R1.data[i] - R2.data[i]) < 1e-12);
    const auto c1 = christoffel(mine, p), c2 = christoffel(*sol, p);
    for (std::size_t i = 0; i < c1.data.size(); ++i) CHECK(std::abs(c1.data[i] - c2.data[i]) < 1e-12);
    const auto t = tension(*b.maps[0], p);
    const auto ref = tension(*catalog::biharmonic_example(1, 1, 0, 0), p);
    CHECK(std::abs(t.components[1] - ref.components[1]) < 1e-12);
  }
}

TEST_CASE("merged entries are visible by name") {
  const auto cat = merge(Catalog::standard(), parse_config(kSolCopy));
  CHECK(cat.contains("sol_copy"));
  CHECK(cat.map("cubic")->params().at("A") == 1.0);
  CHECK(cat.frame("copy_frame")->vertical() == 0);
  CHECK(cat.contains("pi1"));
}

TEST_CASE("metric rows list the upper triangle only") {
  CHECK(error_pointer(manifold_with(R"([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])")) ==
        "/manifolds/0/metric_upper/1");
  try {
    parse_config(manifold_with(R"([["1", "0", "0"], ["1", "0", "0"], ["1"]])"));
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("on and above the diagonal") != std::string::npos);
  }
}

TEST_CASE("an indefinite metric is reported at the sample") {
  const auto text = manifold_with(R"([["1", "0", "0"], ["z", "0"], ["1"]])", R"(, "samples": [[0, 0, 1], [0, 0, -1]])");
  CHECK(error_pointer(text) == "/manifolds/0/samples/1");
}

TEST_CASE("expression errors carry the pointer and offset") {
  try {
    parse_config(manifold_with(R"([["1", "0", "0"], ["1 + * z", "0"], ["1"]])"));
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(e.pointer() == "/manifolds/0/metric_upper/1/0");
    CHECK(std::string(e.what()).find('4') != std::string::npos);
  }
}

TEST_CASE("schema violations") {
  CHECK(error_pointer("[1, 2]") == "");
  CHECK(error_pointer("{not json") == "");
  CHECK(error_pointer(R"({"manifold": []})") == "/manifold");
  CHECK(error_pointer(manifold_with(R"([["1", "0", "0"], ["1", "0"], ["1"]])", R"(, "colour": 1)")) ==
        "/manifolds/0/colour");
  CHECK(error_pointer(R"({"maps": [{"name": "m", "source": "nowhere", "target": "sol", "components": []}]})") ==
        "/maps/0/source");
  CHECK(error_pointer(R"({"maps": [{"name": "pi1", "source": "sol", "target": "sol", "components": []}]})") ==
        "/maps/0/name");
  CHECK(error_pointer(R"({"maps": [{"name": "m", "source": "sol", "target": "euclidean2",
                                     "components": ["x"]}]})") == "/maps/0");
  CHECK(error_pointer(R"({"maps": [{"name": "m", "source": "sol", "target": "euclidean2",
                                     "components": ["x", "y"], "params": {"A": "one"}}]})") == "/maps/0/params/A");
}

TEST_CASE("frames are checked for orthonormality at the samples") {
  const std::string text = R"({
    "manifolds": [{"name": "flat", "coords": ["x", "y", "z"],
                   "metric_upper": [["1", "0", "0"], ["1", "0"], ["1"]], "samples": [[0, 0, 0]]}],
    "frames": [{"name": "bad", "manifold": "flat",
                "vectors": [["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]], "vertical": 3}]
  })";
  CHECK(error_pointer(text) == "/frames/0");
  std::string vertical = text;
  vertical.replace(vertical.find("\"2\""), 3, "\"1\"");
  CHECK(error_pointer(vertical) == "<none>");
  vertical.replace(vertical.find("\"vertical\": 3"), 13, "\"vertical\": 4");
  CHECK(error_pointer(vertical) == "/frames/0/vertical");
}

TEST_CASE("duplicate names inside one config") {
  const std::string text = R"({"manifolds": [
    {"name": "m", "coords": ["u", "v"], "metric_upper": [["1", "0"], ["1"]]},
    {"name": "m", "coords": ["u", "v"], "metric_upper": [["1", "0"], ["1"]]}]})";
  CHECK(error_pointer(text) == "/manifolds/1/name");
}

TEST_CASE("missing files are configuration errors") {
  try {
    load_config("/nonexistent/solgeom.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
  }
}
