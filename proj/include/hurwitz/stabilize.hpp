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

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/action_family.hpp"
#include "hurwitz/class_tower.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/hurwitz_vector.hpp"
#include "hurwitz/orbit.hpp"

namespace hurwitz {

struct Stabilizer {
  HurwitzVector vector;
  NielsenType nielsen;
  Element evaluation = kIdentity;
  std::uint32_t ell = 1;  // order of the evaluation
};

Stabilizer make_stabilizer(const FiniteGroup& g, HurwitzVector u);
// Every element of Γ in ascending index order, each repeated ord(g) times.
Stabilizer u_gamma(const FiniteGroup& g, const GammaSet& gamma);
// Same construction over an arbitrary enumeration of Γ.
Stabilizer u_gamma_ordered(const FiniteGroup& g, std::span<const Element> order);

struct StabilizationMap {
  std::vector<std::size_t> target;  // codomain index of each domain class
  std::size_t codomain_size = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};

// [v] ↦ [v·u] from `domain` (one Nielsen type) into `codomain`. Throws
// PreconditionError when an image is not among the codomain classes.
StabilizationMap stabilize_map(const FiniteGroup& g,
                               std::span<const OrbitClass> domain,
                               const Stabilizer& u,
                               std::span<const OrbitClass> codomain,
                               const Caps& caps = {});
// Codomain = every class at ν(domain) + ν(u).
StabilizationMap stabilize_map(const FiniteGroup& g,
                               std::span<const OrbitClass> domain,
                               const Stabilizer& u, const Caps& caps = {});

// Levels base + n·ν(u), n = 0…levels, inside one class tower.
class StabilizationChain {
 public:
  StabilizationChain(std::shared_ptr<const ClassTower> tower, NielsenType base,
                     Stabilizer u);

  // Tower over the classes of base, u and `extra`, with box
  // base + levels·ν(u) + extra.
  static std::shared_ptr<const ClassTower> make_tower(
      const FiniteGroup& g, const NielsenType& base, const Stabilizer& u,
      std::uint32_t levels, const NielsenType& extra, const Caps& caps,
      unsigned workers);

  const ClassTower& tower() const { return *tower_; }
  const Stabilizer& stabilizer() const { return u_; }
  const NielsenType& base() const { return base_; }
  std::uint32_t levels() const { return levels_; }
  NielsenType nielsen(std::uint32_t n) const;
  std::size_t type(std::uint32_t n) const;

  // Class indices at level n, all of them or only those with ⟨v⟩ = H
  // (H a tower subgroup id).
  std::vector<std::uint32_t> classes(std::uint32_t n,
                                     std::optional<std::uint32_t> h = {}) const;

  struct LevelMap {
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    bool injective = false;
    bool surjective = false;
    bool bijective() const { return injective && surjective; }
  };
  // ·u from level n to n+1. With a subgroup, the domain is ⟨v⟩ = H and the
  // codomain ⟨w⟩ = ⟨H, u⟩.
  LevelMap map(std::uint32_t n, std::optional<std::uint32_t> h = {}) const;

 private:
  std::shared_ptr<const ClassTower> tower_;
  NielsenType base_;
  Stabilizer u_;
  std::uint32_t levels_ = 0;
};

struct LevelRecord {
  std::uint32_t level = 0;
  NielsenType nielsen;
  std::size_t class_count = 0;       // all classes of the type
  std::size_t generating_count = 0;  // ⟨v⟩ = G
  // ·u_Γ into the next level on generating classes; absent at the last level.
  std::optional<bool> surjective;
  std::optional<bool> injective;
  std::optional<bool> bijective;
  // ·u_Γ on the whole class set.
  std::optional<bool> full_bijective;
};

struct StabilityReport {
  std::vector<LevelRecord> levels;
  std::optional<std::uint32_t> bound;
  std::uint32_t window = 0;
  bool confident = false;
  NielsenType base;
  Stabilizer stabilizer;
  // Largest bound over the base and base + [C] for each class C of Γ,
  // absent when one of them has none.
  std::optional<std::uint32_t> uniform_bound;
  // Generating-class counts at base + [C] + n·ν(u_Γ) for the shifted bases.
  std::vector<std::pair<NielsenType, std::size_t>> shifted_generating;
  std::string diagnostic;  // set when no bound was found

  bool ok() const { return bound.has_value(); }
  // base + bound·ν(u_Γ).
  std::optional<NielsenType> stable_level() const;
};

struct StabilityOptions {
  std::uint32_t window = 3;
  std::uint32_t confirmations = 2;
  // Defaults to ν(u_Γ).
  std::optional<NielsenType> base;
  bool uniform = true;
  Caps caps;
  unsigned workers = 1;
};

// Least m such that ·u_Γ maps the generating classes of level n bijectively
// onto those of level n+1 for every n = m…window-1. Throws
// PreconditionError when u_Γ does not generate G or the base leaves Γ.
// Window exhaustion is reported, not thrown.
StabilityReport find_stability_bound(const FiniteGroup& g,
                                     const GammaSet& gamma,
                                     const StabilityOptions& opts = {});

// The same search for a marked family over Γ = G∖{1}, on full class sets of
// (prefix; tail). Counts include the |G|^k prefixes.
StabilityReport find_family_stability_bound(const FiniteGroup& g,
                                            const ActionFamily& family,
                                            const StabilityOptions& opts = {});

enum class Verdict { kFalse, kTrue, kIndeterminate };
std::string_view verdict_name(Verdict v);

struct StableResult {
  Verdict verdict = Verdict::kIndeterminate;
  std::uint32_t level = 0;
  std::string reason;
};

struct StableOptions {
  std::uint32_t max_level = 3;
  // Consecutive injective ·u maps required before a negative answer at a
  // level is final.
  std::uint32_t confirmations = 2;
  Caps caps;
  unsigned workers = 1;
};

// Decides u-stable equivalence of tuples of one Nielsen type. Reuses its
// tower across queries.
class StableEquivalence {
 public:
  StableEquivalence(const FiniteGroup& g, NielsenType nu, Stabilizer u,
                    StableOptions opts = {});

  StableResult decide(const HurwitzVector& v, const HurwitzVector& w) const;
  const ClassTower& tower() const { return chain_.tower(); }

 private:
  bool stretch_bijective(std::uint32_t from, std::uint32_t h) const;

  const FiniteGroup* group_;
  NielsenType nu_;
  StableOptions opts_;
  StabilizationChain chain_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, bool> memo_;
};

StableResult stable_equivalent(const FiniteGroup& g, const HurwitzVector& v,
                               const HurwitzVector& w, const Stabilizer& u,
                               const StableOptions& opts = {});

struct FractionCheck {
  Verdict verdict = Verdict::kIndeterminate;
  std::uint32_t power = 0;  // n with every g ∈ Γ leading a member of u_Γ^n
  std::vector<HurwitzVector> witnesses;  // one per element of Γ, ascending
};

// Searches the orbits of u_Γ^n, n = 1…max_power, for members starting with
// each g ∈ Γ. Throws PreconditionError when Γ does not generate G.
FractionCheck fraction_group_check(const FiniteGroup& g, const GammaSet& gamma,
                                   std::uint32_t max_power = 3,
                                   std::uint64_t max_states = 1'000'000);

// Equality of e_{v_1}⋯e_{v_d} and e_{w_1}⋯e_{w_e} in the adjoint group of Γ.
StableResult adj_word_equal(const FiniteGroup& g, const GammaSet& gamma,
                            const HurwitzVector& v, const HurwitzVector& w,
                            const StableOptions& opts = {});

// Some v with v·u ≈ w and ⟨v⟩ = ⟨w⟩, when one exists.
std::optional<HurwitzVector> factor_through(const FiniteGroup& g,
                                            const HurwitzVector& w,
                                            const HurwitzVector& u,
                                            const Caps& caps = {});

}  // namespace hurwitz
