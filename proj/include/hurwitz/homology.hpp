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
#include <utility>
#include <vector>

#include "hurwitz/class_tower.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/hurwitz_vector.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/stabilize.hpp"

namespace hurwitz {

// The generating classes of Nielsen type k·ν(u_Γ) and evaluation 1, with
// x∘y the unique z such that z·u_Γ^k ≈ x·y.
class TorsorGroup {
 public:
  TorsorGroup(const FiniteGroup& g, const GammaSet& gamma, std::uint32_t k,
              const Caps& caps = {}, unsigned workers = 1);

  std::uint32_t multiple() const { return k_; }
  NielsenType level() const { return k_ * u_.nielsen; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<OrbitClass>& elements() const { return elements_; }
  std::size_t identity() const { return identity_; }
  std::size_t compose(std::size_t x, std::size_t y) const {
    return table_[x * elements_.size() + y];
  }
  // Element index of the class of v (ev(v) = 1, ν(v) = level, ⟨v⟩ = G).
  std::size_t index_of(const HurwitzVector& v) const;
  std::uint64_t element_order(std::size_t x) const;
  // d_1 | d_2 | …, empty for the trivial group.
  std::vector<std::uint64_t> invariant_factors() const;

  // Generating classes of one evaluation at the working level, with the
  // coordinate of each class relative to the slice's base point b: the
  // element x with b·x ≈ w·u_Γ^k.
  struct Slice {
    Element evaluation = kIdentity;
    std::vector<OrbitClass> classes;  // sorted; classes[0] is the base point
    std::vector<std::size_t> coordinate;
    bool simply_transitive = false;
  };
  std::vector<Slice> slices() const;

 private:
  using Ref = ClassTower::ClassRef;
  // The level-k generating class w with w·u_Γ^k in class `r`.
  std::optional<std::uint32_t> unstabilise(Ref r) const;

  const FiniteGroup* group_;
  std::uint32_t k_;
  Stabilizer u_;
  HurwitzVector uk_;
  std::unique_ptr<ClassTower> tower_;
  std::size_t level_type_ = 0;
  std::vector<std::uint32_t> generating_;            // level-k class indices
  std::map<std::uint32_t, std::uint32_t> preimage_;  // 2k class -> level-k class
  std::vector<OrbitClass> elements_;
  std::vector<std::uint32_t> element_class_;         // element -> level-k class
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
};

struct H2Report {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> structure;
  bool structure_computed = false;
  NielsenType stable_level;
  std::uint32_t multiple = 0;  // torsor level k with k·ν(u_Γ) ≥ stable level
  std::vector<std::pair<NielsenType, std::uint64_t>> cross_checks;
  std::uint64_t commutator_order = 0;
  std::uint64_t generating_count = 0;
  HurwitzVector base_point;  // u_Γ^k
  StabilityReport stability;
};

struct H2Options {
  StabilityOptions stability;
};

// |H_{2,Γ}| as (stable generating-class count) / |[G,G]|. Throws
// Indeterminate when no stability bound is found and Error when a count is
// not an exact multiple or differs between checked levels.
H2Report h2_order(const FiniteGroup& g, const GammaSet& gamma,
                  const H2Options& opts = {});
// h2_order plus the invariant factors of the torsor group.
H2Report h2_structure(const FiniteGroup& g, const GammaSet& gamma,
                      const H2Options& opts = {});

// Invariant factors of a finite abelian group given by its composition
// table (`table[x * n + y]`) and identity.
std::vector<std::uint64_t> abelian_invariants(std::span<const std::size_t> table,
                                              std::size_t n,
                                              std::size_t identity);

}  // namespace hurwitz
