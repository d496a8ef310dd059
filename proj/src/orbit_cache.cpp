// Copyright 2026 The Hurwitz Orbits Authors
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

#include "hurwitz/orbit_cache.hpp"

#include <fstream>
#include <sstream>

#include "hurwitz/errors.hpp"
#include "hurwitz/group_io.hpp"
#include "json.hpp"

namespace hurwitz {

namespace {

Count parse_count(const std::string& s) {
  Count c = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw Error("bad count in cache: " + s);
    c = saturating_add(saturating_mul(c, 10), static_cast<Count>(ch - '0'));
  }
  return c;
}

}  // namespace

OrbitCache::OrbitCache(std::filesystem::path path, const FiniteGroup& g)
    : path_(std::move(path)), group_(&g), digest_(table_digest(g)) {
  std::ifstream in(path_);
  if (!in) {
    status_ = "new";
    return;
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    status_ = "discarded: unreadable";
    return;
  }
  if (doc.value("format", "") != kFormat || doc.value("version", 0) != kVersion) {
    status_ = "discarded: format";
    return;
  }
  if (doc.value("group_digest", "") != digest_) {
    status_ = "discarded: group digest";
    return;
  }
  if (doc.value("sigma_convention", "") != kSigmaConvention) {
    status_ = "discarded: sigma convention";
    return;
  }
  try {
    for (const auto& [key, value] : doc.at("fibers").items()) {
      Entry e;
      for (const auto& r : value.at("reps")) {
        std::vector<Element> entries = r.get<std::vector<Element>>();
        for (Element a : entries) {
          if (a >= g.order()) throw Error("cache entry out of range");
        }
        e.reps.emplace_back(std::move(entries));
      }
      e.sizes = value.at("sizes").get<std::vector<std::string>>();
      if (e.sizes.size() != e.reps.size()) throw Error("cache size mismatch");
      fibers_.emplace(key, std::move(e));
    }
  } catch (const std::exception&) {
    fibers_.clear();
    status_ = "discarded: malformed fibers";
    return;
  }
  status_ = "loaded";
}

std::filesystem::path OrbitCache::default_path(const std::filesystem::path& dir,
                                               const FiniteGroup& g) {
  return dir / (table_digest(g) + ".json");
}

std::string OrbitCache::fiber_key(const FiberSpec& spec) {
  std::ostringstream out;
  out << spec.nielsen.to_string() << "|ev=";
  if (spec.evaluation) {
    out << *spec.evaluation;
  } else {
    out << '*';
  }
  out << "|gen=";
  if (spec.generated) {
    out << (spec.generated->mode == SubgroupConstraint::Mode::kExact ? "eq:"
                                                                      : "ge:");
    bool first = true;
    for (Element a : spec.generated->subgroup.elements()) {
      out << (first ? "" : ".") << a;
      first = false;
    }
  } else {
    out << '*';
  }
  return out.str();
}

std::optional<std::vector<OrbitClass>> OrbitCache::lookup(
    const FiberSpec& spec) const {
  auto it = fibers_.find(fiber_key(spec));
  if (it == fibers_.end()) return std::nullopt;
  const FiniteGroup& g = *group_;
  std::vector<OrbitClass> out;
  for (std::size_t i = 0; i < it->second.reps.size(); ++i) {
    const HurwitzVector& v = it->second.reps[i];
    OrbitClass c;
    c.canonical = v;
    c.size = parse_count(it->second.sizes[i]);
    c.evaluation = evaluate(g, v);
    c.nielsen = nielsen(g, v);
    c.subgroup = generated_subgroup(g, v);
    out.push_back(std::move(c));
  }
  return out;
}

void OrbitCache::store(const FiberSpec& spec,
                       const std::vector<OrbitClass>& classes) {
  Entry e;
  for (const auto& c : classes) {
    e.reps.push_back(c.canonical);
    e.sizes.push_back(to_string(c.size));
  }
  fibers_[fiber_key(spec)] = std::move(e);
}

void OrbitCache::save() const {
  nlohmann::json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["group_digest"] = digest_;
  doc["sigma_convention"] = kSigmaConvention;
  nlohmann::json fibers = nlohmann::json::object();
  for (const auto& [key, e] : fibers_) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& r : e.reps) reps.push_back(r.entries());
    fibers[key] = {{"reps", reps}, {"sizes", e.sizes}};
  }
  doc["fibers"] = std::move(fibers);
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace hurwitz
