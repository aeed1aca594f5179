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

#include "solgeom/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "solgeom/error.hpp"

namespace solgeom {

namespace {

using json = nlohmann::ordered_json;

std::string child(const std::string& ptr, std::string_view key) { return ptr + "/" + std::string(key); }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

void require_object(const json& j, const std::string& ptr, std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional) {
  if (!j.is_object()) throw ConfigError(ptr, "expected an object");
  for (auto key : required) {
    if (!j.contains(key)) throw ConfigError(ptr, "missing key \"" + std::string(key) + "\"");
  }
  for (const auto& [key, _] : j.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) throw ConfigError(child(ptr, key), "unknown key");
  }
}

const std::string& get_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw ConfigError(ptr, "expected a string");
  return j.get_ref<const std::string&>();
}

const json& get_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw ConfigError(ptr, "expected an array");
  return j;
}

Expression get_expression(const json& j, const std::string& ptr) {
  const std::string& text = get_string(j, ptr);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ConfigError(ptr, e.what());
  }
}

double get_number(const json& j, const std::string& ptr) {
  if (!j.is_number()) throw ConfigError(ptr, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(ptr, "expected a finite number");
  return v;
}

class Resolver {
 public:
  Resolver(const Catalog& base, ConfigBundle& bundle) : base_(base), bundle_(bundle) {}

  ManifoldPtr manifold(const std::string& name, const std::string& ptr) const {
    for (const auto& m : bundle_.manifolds)
      if (m->name() == name) return m;
    if (const auto* e = base_.find(name); e && e->kind == EntryKind::Manifold) return base_.manifold(name);
    throw ConfigError(ptr, "unknown manifold '" + name + "'");
  }

  void claim(const std::string& name, const std::string& ptr) {
    if (name.empty()) throw ConfigError(ptr, "empty name");
    if (!names_.insert(name).second || base_.contains(name)) throw ConfigError(ptr, "duplicate name '" + name + "'");
  }

 private:
  const Catalog& base_;
  ConfigBundle& bundle_;
  std::set<std::string> names_;
};

template <typename F>
void wrap(const std::string& ptr, F&& f) {
  try {
    f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(ptr, e.what());
  }
}

const std::vector<Point>& samples_of(const ConfigBundle& b, const ChartedManifold& m) {
  static const std::vector<Point> none;
  auto it = b.samples.find(m.name());
  return it == b.samples.end() ? none : it->second;
}

}  // namespace

ConfigBundle parse_config(std::string_view json_text, const Catalog& base) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  require_object(root, "", {}, {"manifolds", "maps", "frames"});
  ConfigBundle out;
  Resolver names(base, out);

  if (root.contains("manifolds")) {
    const auto& arr = get_array(root["manifolds"], "/manifolds");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ptr = child("/manifolds", i);
      const json& m = arr[i];
      require_object(m, ptr, {"name", "coords", "metric_upper"}, {"samples"});
      const std::string& name = get_string(m["name"], child(ptr, "name"));
      names.claim(name, child(ptr, "name"));
      std::vector<std::string> coords;
      const auto& cj = get_array(m["coords"], child(ptr, "coords"));
      for (std::size_t k = 0; k < cj.size(); ++k) coords.push_back(get_string(cj[k], child(child(ptr, "coords"), k)));
      if (coords.size() != 2 && coords.size() != 3) throw ConfigError(child(ptr, "coords"), "dimension must be 2 or 3");
      const std::size_t n = coords.size();
      const std::string mptr = child(ptr, "metric_upper");
      const auto& rows = get_array(m["metric_upper"], mptr);
      if (rows.size() != n) throw ConfigError(mptr, "expected " + std::to_string(n) + " rows");
      std::vector<std::vector<Expression>> upper;
      for (std::size_t r = 0; r < n; ++r) {
        const std::string rptr = child(mptr, r);
        const auto& row = get_array(rows[r], rptr);
        if (row.size() != n - r) {
          throw ConfigError(rptr, "row " + std::to_string(r) + " must list the " + std::to_string(n - r) +
                                      " entries on and above the diagonal (the metric is symmetric by construction)");
        }
        upper.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) upper.back().push_back(get_expression(row[c], child(rptr, c)));
      }
      ManifoldPtr made;
      wrap(ptr, [&] { made = std::make_shared<ChartedManifold>(name, coords, upper); });
      std::vector<Point> samples;
      if (m.contains("samples")) {
        const std::string sptr = child(ptr, "samples");
        const auto& sj = get_array(m["samples"], sptr);
        for (std::size_t k = 0; k < sj.size(); ++k) {
          const std::string pptr = child(sptr, k);
          const auto& pj = get_array(sj[k], pptr);
          if (pj.size() != n) throw ConfigError(pptr, "sample needs " + std::to_string(n) + " coordinates");
          Point p;
          for (std::size_t c = 0; c < n; ++c) p.push_back(get_number(pj[c], child(pptr, c)));
          wrap(pptr, [&] { made->metric_jets(p, 0); });
          samples.push_back(std::move(p));
        }
      }
      out.samples.emplace(name, std::move(samples));
      out.manifolds.push_back(std::move(made));
    }
  }

  if (root.contains("maps")) {
    const auto& arr = get_array(root["maps"], "/maps");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ptr = child("/maps", i);
      const json& m = arr[i];
      require_object(m, ptr, {"name", "source", "target", "components"}, {"params"});
      const std::string& name = get_string(m["name"], child(ptr, "name"));
      names.claim(name, child(ptr, "name"));
      auto src = names.manifold(get_string(m["source"], child(ptr, "source")), child(ptr, "source"));
      auto dst = names.manifold(get_string(m["target"], child(ptr, "target")), child(ptr, "target"));
      std::vector<Expression> comps;
      const auto& cj = get_array(m["components"], child(ptr, "components"));
      for (std::size_t k = 0; k < cj.size(); ++k)
        comps.push_back(get_expression(cj[k], child(child(ptr, "components"), k)));
      ParamMap params;
      if (m.contains("params")) {
        const json& pj = m["params"];
        if (!pj.is_object()) throw ConfigError(child(ptr, "params"), "expected an object");
        for (const auto& [k, v] : pj.items()) params[k] = get_number(v, child(child(ptr, "params"), k));
      }
      MapPtr made;
      wrap(ptr, [&] { made = std::make_shared<SmoothMap>(name, src, dst, std::move(comps), std::move(params)); });
      for (const auto& p : samples_of(out, *src)) {
        wrap(ptr, [&] {
          const Point q = made->image(p);
          made->target().metric_jets(q, 0);
        });
      }
      out.maps.push_back(std::move(made));
    }
  }

  if (root.contains("frames")) {
    const auto& arr = get_array(root["frames"], "/frames");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ptr = child("/frames", i);
      const json& f = arr[i];
      require_object(f, ptr, {"name", "manifold", "vectors", "vertical"}, {});
      const std::string& name = get_string(f["name"], child(ptr, "name"));
      names.claim(name, child(ptr, "name"));
      auto man = names.manifold(get_string(f["manifold"], child(ptr, "manifold")), child(ptr, "manifold"));
      const std::string vptr = child(ptr, "vectors");
      const auto& vj = get_array(f["vectors"], vptr);
      if (vj.size() != 3) throw ConfigError(vptr, "expected three vectors");
      std::array<std::vector<Expression>, 3> legs;
      for (std::size_t k = 0; k < 3; ++k) {
        const auto& comp = get_array(vj[k], child(vptr, k));
        for (std::size_t c = 0; c < comp.size(); ++c)
          legs[k].push_back(get_expression(comp[c], child(child(vptr, k), c)));
      }
      const json& vert = f["vertical"];
      if (!vert.is_number_integer() || vert.get<long long>() < 1 || vert.get<long long>() > 3) {
        throw ConfigError(child(ptr, "vertical"), "expected an integer in 1..3");
      }
      FramePtr made;
      wrap(ptr, [&] {
        made = std::make_shared<FrameField>(name, man, std::move(legs), static_cast<std::size_t>(vert.get<int>() - 1));
      });
      for (const auto& p : samples_of(out, *man)) wrap(ptr, [&] { made->leg_jets(p, 0); });
      out.frames.push_back(std::move(made));
    }
  }
  return out;
}

ConfigBundle load_config(const std::filesystem::path& path, const Catalog& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Config, "cannot open config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str(), base);
  } catch (const ConfigError& e) {
    throw ConfigError(e.pointer(), std::string("in '") + path.string() + "': " + e.what());
  }
}

Catalog merge(const Catalog& base, const ConfigBundle& bundle) {
  Catalog c = base;
  for (const auto& m : bundle.manifolds) c.add({m->name(), EntryKind::Manifold, "config", m});
  for (const auto& m : bundle.maps) c.add({m->name(), EntryKind::Map, "config", m});
  for (const auto& f : bundle.frames) c.add({f->name(), EntryKind::Frame, "config", f});
  return c;
}

}  // namespace solgeom
