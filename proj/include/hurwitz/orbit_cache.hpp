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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/group.hpp"
#include "hurwitz/orbit.hpp"

namespace hurwitz {

// Class lists of enumerated fibers, persisted as one JSON document per
// group. Entries are reused only when the stored table digest and σ
// convention match the current ones; otherwise the file is treated as empty
// and overwritten on save.
class OrbitCache {
 public:
  static constexpr std::string_view kFormat = "hurwitz-orbit-cache";
  static constexpr int kVersion = 1;
  static constexpr std::string_view kSigmaConvention =
      "sigma_i:(a,b)->(b,b^-1*a*b);product:left-to-right";

  OrbitCache(std::filesystem::path path, const FiniteGroup& g);

  // <dir>/<digest>.json
  static std::filesystem::path default_path(const std::filesystem::path& dir,
                                            const FiniteGroup& g);
  static std::string fiber_key(const FiberSpec& spec);

  std::optional<std::vector<OrbitClass>> lookup(const FiberSpec& spec) const;
  void store(const FiberSpec& spec, const std::vector<OrbitClass>& classes);
  // Written to a temporary file and renamed into place.
  void save() const;

  // "loaded", "new", or the reason a stale file was discarded.
  const std::string& status() const { return status_; }
  std::size_t size() const { return fibers_.size(); }

 private:
  struct Entry {
    std::vector<HurwitzVector> reps;
    std::vector<std::string> sizes;  // decimal
  };

  std::filesystem::path path_;
  const FiniteGroup* group_;
  std::string digest_;
  std::string status_;
  std::map<std::string, Entry> fibers_;
};

}  // namespace hurwitz
