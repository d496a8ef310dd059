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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hurwitz/count.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/hurwitz_vector.hpp"

namespace hurwitz {

struct TowerOptions {
  // Upper bound on the total number of (prefix class, last letter) cells.
  std::uint64_t max_cells = 200'000'000;
  // Nielsen types of equal length are classified concurrently.
  unsigned workers = 1;
};

// Braid classes of every tuple over an alphabet Γ (a union of conjugacy
// classes) whose Nielsen type lies in the box {ν : ν ≤ bound}.
//
// Classes of length d+1 are built from classes of length d. A tuple w·g is
// recorded as the cell (class of w, g). Br_d acts inside the prefix, so two
// cells are braid equivalent iff they are connected by σ_d moves, and σ_d
// applied to a member q·a of the prefix class gives (class of q·g, a^g). The
// pairs (class of q, a) with q·a in a class are exactly that class's cells
// one level down, so the closure is a union-find over cells and every step
// is polynomial in the number of classes rather than in |Γ|^d.
//
// Canonical representatives are lexicographically minimal members: the
// minimum over cells (c, g) of canonical(c) followed by g.
class ClassTower {
 public:
  struct ClassInfo {
    HurwitzVector canonical;
    Count size = 0;
    Element evaluation = kIdentity;
    std::uint32_t subgroup = 0;  // index into subgroup()
  };

  struct ClassRef {
    std::size_t type = 0;
    std::uint32_t index = 0;
    friend bool operator==(const ClassRef&, const ClassRef&) = default;
    friend auto operator<=>(const ClassRef&, const ClassRef&) = default;
  };

  // `alphabet_classes` are conjugacy class ids; `bound` is a Nielsen type
  // over all classes of `g` that vanishes outside the alphabet. The group
  // must outlive the tower.
  ClassTower(const FiniteGroup& g, std::vector<std::uint32_t> alphabet_classes,
             NielsenType bound, TowerOptions opts = {});

  // Alphabet = classes in the support of `bound`.
  static ClassTower for_box(const FiniteGroup& g, const NielsenType& bound,
                            TowerOptions opts = {});

  const FiniteGroup& group() const { return *group_; }
  const NielsenType& bound() const { return bound_; }
  std::span<const Element> alphabet() const { return alphabet_; }
  bool in_alphabet(Element a) const { return alpha_pos_[a] >= 0; }

  bool in_box(const NielsenType& nu) const;
  std::size_t type_index(const NielsenType& nu) const;
  NielsenType type_of(std::size_t type) const;
  std::size_t num_types() const { return types_.size(); }

  std::span<const ClassInfo> classes(std::size_t type) const {
    return types_[type].classes;
  }
  std::span<const ClassInfo> classes(const NielsenType& nu) const {
    return classes(type_index(nu));
  }
  const ClassInfo& info(ClassRef c) const {
    return types_[c.type].classes[c.index];
  }
  const SubgroupMask& subgroup(std::uint32_t id) const { return subgroups_[id]; }
  std::uint32_t full_group_id() const;
  std::optional<std::uint32_t> find_subgroup(const SubgroupMask& h) const;

  ClassRef empty_class() const { return {0, 0}; }
  // Class of canonical(c)·a. Throws PreconditionError when `a` is outside
  // the alphabet or the result leaves the box.
  ClassRef append(ClassRef c, Element a) const;
  ClassRef append(ClassRef c, std::span<const Element> word) const;
  ClassRef classify(std::span<const Element> v) const {
    return append(empty_class(), v);
  }

  // All (prefix class, last letter) with prefix·letter in `c`.
  std::vector<std::pair<ClassRef, Element>> last_letter_splits(ClassRef c) const;

  std::uint64_t cell_count() const { return cells_.load(); }

 private:
  struct TypeData {
    std::vector<std::int64_t> xoffset;  // per alphabet letter, -1 if absent
    std::vector<std::uint32_t> xprefix;
    std::vector<std::uint32_t> xlast;   // alphabet position
    std::vector<std::uint32_t> xclass;
    std::vector<ClassInfo> classes;
    std::vector<std::uint32_t> member_begin;
    std::vector<std::uint32_t> members;  // cells grouped by class
  };

  std::uint32_t coordinate(std::size_t type, std::size_t local) const {
    return static_cast<std::uint32_t>((type / stride_[local]) % (dims_[local] + 1));
  }
  void build(const TowerOptions& opts);
  void build_type(std::size_t t);
  std::uint32_t intern_subgroup(SubgroupMask mask);
  std::uint32_t join_subgroup(std::uint32_t id, Element a);

  const FiniteGroup* group_;
  NielsenType bound_;
  std::vector<std::uint32_t> local_classes_;  // global class ids
  std::vector<std::uint32_t> dims_;
  std::vector<std::size_t> stride_;
  std::vector<Element> alphabet_;
  std::vector<std::int64_t> alpha_pos_;       // per element
  std::vector<std::uint32_t> alpha_local_;    // alphabet pos -> local class
  std::vector<std::uint32_t> conj_;           // [a * A + b] -> pos of a^b
  std::vector<TypeData> types_;
  std::atomic<std::uint64_t> cells_ = 0;
  std::uint64_t max_cells_ = 0;

  std::mutex subgroup_mutex_;
  std::deque<SubgroupMask> subgroups_;
  std::map<std::vector<bool>, std::uint32_t> subgroup_ids_;
  std::map<std::pair<std::uint32_t, Element>, std::uint32_t> join_memo_;
};

}  // namespace hurwitz
