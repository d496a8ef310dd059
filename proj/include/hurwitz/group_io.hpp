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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hurwitz/group.hpp"
#include "json.hpp"

namespace hurwitz {

// Group document: {"order": n, "mul": [[...] × n], "names": [...]}, with
// 0-based indices and optional names.
nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& doc,
                            const ValidationOptions& opts = {});
// Parses document text; malformed JSON is reported as GroupError.
FiniteGroup build_from_table(std::string_view text,
                             const ValidationOptions& opts = {});

FiniteGroup load_group_file(const std::filesystem::path& path);
void save_group_file(const FiniteGroup& g, const std::filesystem::path& path);

// A builtin spec ("sym:3", "cyclic:2xcyclic:2") or, failing that, the path
// of a group document.
FiniteGroup resolve_group(std::string_view spec_or_path);

// FNV-1a 64 over the order and table, as 16 hex digits.
std::string table_digest(const FiniteGroup& g);

}  // namespace hurwitz
