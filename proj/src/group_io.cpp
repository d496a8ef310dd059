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

#include "hurwitz/group_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

nlohmann::json group_to_json(const FiniteGroup& g) {
  const std::size_t n = g.order();
  nlohmann::json mul = nlohmann::json::array();
  for (std::size_t a = 0; a < n; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t b = 0; b < n; ++b) {
      row.push_back(g.mul(static_cast<Element>(a), static_cast<Element>(b)));
    }
    mul.push_back(std::move(row));
  }
  nlohmann::json doc = {{"order", n}, {"mul", std::move(mul)}};
  if (g.has_names()) doc["names"] = g.names();
  return doc;
}

FiniteGroup group_from_json(const nlohmann::json& doc,
                            const ValidationOptions& opts) {
  auto malformed = [](const std::string& why) {
    return GroupError("malformed group document: " + why);
  };
  if (!doc.is_object()) throw malformed("expected an object");
  if (!doc.contains("order") || !doc["order"].is_number_unsigned()) {
    throw malformed("missing non-negative integer 'order'");
  }
  const auto n = doc["order"].get<std::size_t>();
  if (!doc.contains("mul") || !doc["mul"].is_array()) {
    throw malformed("missing array 'mul'");
  }
  const auto& mul = doc["mul"];
  if (mul.size() != n) throw malformed("'mul' must have 'order' rows");
  std::vector<Element> table;
  table.reserve(n * n);
  for (const auto& row : mul) {
    if (!row.is_array() || row.size() != n) {
      throw malformed("every row of 'mul' must have 'order' entries");
    }
    for (const auto& x : row) {
      if (!x.is_number_unsigned()) throw malformed("table entries must be indices");
      table.push_back(x.get<Element>());
    }
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    if (!doc["names"].is_array()) throw malformed("'names' must be an array");
    for (const auto& s : doc["names"]) {
      if (!s.is_string()) throw malformed("'names' must hold strings");
      names.push_back(s.get<std::string>());
    }
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(names), opts);
}

FiniteGroup build_from_table(std::string_view text,
                             const ValidationOptions& opts) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GroupError(std::string("malformed group document: ") + e.what());
  }
  return group_from_json(doc, opts);
}

FiniteGroup load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot open group file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return build_from_table(buf.str());
}

void save_group_file(const FiniteGroup& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw GroupError("cannot write group file " + path.string());
  out << group_to_json(g).dump() << '\n';
}

FiniteGroup resolve_group(std::string_view spec_or_path) {
  const std::filesystem::path path{std::string(spec_or_path)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) return load_group_file(path);
  return build_builtin(spec_or_path);
}

std::string table_digest(const FiniteGroup& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.order());
  for (Element x : g.table()) mix(x);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hurwitz
