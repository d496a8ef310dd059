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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

// Index of a group element; always in [0, order). The identity is 0.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

// Membership vector of a subgroup H ⊂ G.
class SubgroupMask {
 public:
  SubgroupMask() = default;
  explicit SubgroupMask(std::vector<bool> member);

  bool contains(Element g) const { return member_[g]; }
  std::size_t order() const { return order_; }
  std::size_t universe() const { return member_.size(); }
  const std::vector<bool>& members() const { return member_; }
  std::vector<Element> elements() const;
  bool is_subset_of(const SubgroupMask& other) const;

  friend bool operator==(const SubgroupMask& a, const SubgroupMask& b) {
    return a.member_ == b.member_;
  }

 private:
  std::vector<bool> member_;
  std::size_t order_ = 0;
};

// Conjugacy classes, numbered by their least element index; class 0 is
// {identity}.
struct ConjClassTable {
  std::vector<std::uint32_t> class_of;
  std::vector<Element> representatives;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<Element>> members;

  std::size_t count() const { return representatives.size(); }
};

struct ValidationOptions {
  // Associativity is checked on every triple up to this order and on
  // `samples` random triples beyond it.
  std::size_t exhaustive_order_cap = 512;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0x5eed;
};

// A finite group given by its multiplication table. Immutable after
// construction; every derived table is computed once up front so a group
// can be shared read-only between threads.
class FiniteGroup {
 public:
  // Validates `table` (row-major, order × order) as a group law with the
  // identity at index 0. Throws GroupError naming the first violation.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::vector<std::string> names = {},
                                const ValidationOptions& opts = {});

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  // a^b = b^{-1} a b.
  Element conj(Element a, Element b) const { return mul(mul(inv_[b], a), b); }
  Element power(Element a, std::int64_t k) const;
  std::uint32_t element_order(Element a) const { return elem_order_[a]; }
  bool is_abelian() const { return abelian_; }

  const ConjClassTable& classes() const { return classes_; }
  std::uint32_t class_of(Element a) const { return classes_.class_of[a]; }
  std::size_t class_count() const { return classes_.count(); }

  std::span<const Element> table() const { return mul_; }
  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  // Display label, falling back to the decimal index.
  std::string name(Element a) const;
  std::optional<Element> find(std::string_view name) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  FiniteGroup() = default;
  void derive();

  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::uint32_t> elem_order_;
  std::vector<std::string> names_;
  ConjClassTable classes_;
  bool abelian_ = true;
};

// Builds one of the builtin families:
//   cyclic:N (N ≥ 1)           elements g^k at index k
//   dihedral:N (N ≥ 2)         r^k at k, s·r^k at N + k; srs = r^{-1}
//   sym:N, alt:N (N ≤ 6)       permutations in lexicographic one-line order,
//                              composed left to right
//   quaternion:8               1, -1, i, -i, j, -j, k, -k
// and direct products "AxB" with (a, b) at index a·|B| + b.
FiniteGroup build_builtin(std::string_view spec);

inline Element conj(const FiniteGroup& g, Element a, Element b) {
  return g.conj(a, b);
}

inline const ConjClassTable& conjugacy_classes(const FiniteGroup& g) {
  return g.classes();
}

SubgroupMask subgroup_closure(const FiniteGroup& g,
                              std::span<const Element> seed);
SubgroupMask whole_group(const FiniteGroup& g);
SubgroupMask commutator_subgroup(const FiniteGroup& g);

// A union of non-trivial conjugacy classes Γ ⊂ G.
class GammaSet {
 public:
  GammaSet() = default;
  GammaSet(std::vector<bool> member, std::vector<std::uint32_t> class_ids);

  bool contains(Element g) const { return member_[g]; }
  bool contains_class(std::uint32_t c) const;
  const std::vector<bool>& members() const { return member_; }
  const std::vector<std::uint32_t>& class_ids() const { return class_ids_; }
  // Elements in ascending index order.
  std::vector<Element> elements() const;
  std::size_t size() const;

  friend bool operator==(const GammaSet&, const GammaSet&) = default;

 private:
  std::vector<bool> member_;
  std::vector<std::uint32_t> class_ids_;
};

// Union of the classes of `reps`. Throws PreconditionError on an empty list
// or an identity representative.
GammaSet make_gamma(const FiniteGroup& g, std::span<const Element> reps);
GammaSet make_gamma_all_nontrivial(const FiniteGroup& g);

}  // namespace hurwitz
