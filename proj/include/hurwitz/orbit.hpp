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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hurwitz/class_tower.hpp"
#include "hurwitz/count.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/hurwitz_vector.hpp"

namespace hurwitz {

struct Caps {
  std::uint64_t orbit_states = 100'000'000;  // members visited by one BFS
  std::uint64_t fiber_size = 100'000'000;    // tuples walked by exhaustive enumeration
  std::uint64_t tower_cells = 200'000'000;
};

// A braid orbit, held as its lexicographically minimal member.
struct OrbitClass {
  HurwitzVector canonical;
  Count size = 0;
  Element evaluation = kIdentity;
  NielsenType nielsen;
  SubgroupMask subgroup;
};

struct SubgroupConstraint {
  enum class Mode { kExact, kContains };
  SubgroupMask subgroup;
  Mode mode = Mode::kExact;

  bool accepts(const SubgroupMask& h) const {
    return mode == Mode::kExact ? h == subgroup : subgroup.is_subset_of(h);
  }
};

// The tuples of one Nielsen type, optionally restricted further by
// evaluation and generated subgroup.
struct FiberSpec {
  NielsenType nielsen;
  std::optional<Element> evaluation;
  std::optional<SubgroupConstraint> generated;
  std::optional<GammaSet> gamma;
};

enum class EnumerationMethod {
  kAuto,        // class tower
  kExhaustive,  // walk every tuple of the fiber, BFS each unseen orbit
  kTower,
};

struct EnumerationOptions {
  Caps caps;
  EnumerationMethod method = EnumerationMethod::kAuto;
  unsigned workers = 1;
};

// Breadth-first closure of {v} under every σ_i^{±1}. Throws CapExceeded
// beyond caps.orbit_states.
OrbitClass orbit(const FiniteGroup& g, const HurwitzVector& v,
                 const Caps& caps = {});
// Every member of the orbit of v, in BFS discovery order.
std::vector<HurwitzVector> orbit_members(const FiniteGroup& g,
                                         const HurwitzVector& v,
                                         const Caps& caps = {});

// Lexicographically minimal member of the orbit of v, found through a class
// tower over the box ν(v) (no orbit walk).
HurwitzVector canonical_form(const FiniteGroup& g, const HurwitzVector& v,
                             const Caps& caps = {});

// v ≈ w. Length, evaluation, Nielsen type and generated subgroup are
// compared before any class computation.
bool braid_equivalent(const FiniteGroup& g, const HurwitzVector& v,
                      const HurwitzVector& w, const Caps& caps = {});

// |{v : ν(v) = nu}|, saturating.
Count fiber_cardinality(const FiniteGroup& g, const NielsenType& nu);

// All braid classes in the fiber, sorted by canonical representative.
std::vector<OrbitClass> enumerate_classes(const FiniteGroup& g,
                                          const FiberSpec& spec,
                                          const EnumerationOptions& opts = {});

// Same filter applied to the classes of one tower type.
std::vector<OrbitClass> classes_from_tower(const ClassTower& tower,
                                           const FiberSpec& spec);

OrbitClass orbit_class(const ClassTower& tower, ClassTower::ClassRef ref);

// Throws PreconditionError when the fiber spec is inconsistent (wrong class count,
// Nielsen type supported outside Γ, evaluation out of range).
void validate_fiber_spec(const FiniteGroup& g, const FiberSpec& spec);

}  // namespace hurwitz
