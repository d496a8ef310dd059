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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/group.hpp"

namespace hurwitz {

// A finite sequence of group elements acted on by the braid group.
class HurwitzVector {
 public:
  HurwitzVector() = default;
  explicit HurwitzVector(std::vector<Element> entries)
      : entries_(std::move(entries)) {}
  HurwitzVector(std::initializer_list<Element> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Element operator[](std::size_t i) const { return entries_[i]; }
  Element& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::span<const Element> span() const { return entries_; }
  std::span<Element> mutable_span() { return entries_; }
  const std::vector<Element>& entries() const { return entries_; }

  friend auto operator<=>(const HurwitzVector&, const HurwitzVector&) = default;
  friend bool operator==(const HurwitzVector&, const HurwitzVector&) = default;

 private:
  std::vector<Element> entries_;
};

// Counts of entries per conjugacy class, indexed by class id.
class NielsenType {
 public:
  NielsenType() = default;
  explicit NielsenType(std::vector<std::uint32_t> counts)
      : counts_(std::move(counts)) {}
  static NielsenType zero(std::size_t num_classes) {
    return NielsenType(std::vector<std::uint32_t>(num_classes, 0));
  }

  std::size_t num_classes() const { return counts_.size(); }
  std::uint32_t operator[](std::size_t c) const { return counts_[c]; }
  std::uint32_t& operator[](std::size_t c) { return counts_[c]; }
  const std::vector<std::uint32_t>& counts() const { return counts_; }
  std::size_t total() const;
  bool is_zero() const { return total() == 0; }

  // Componentwise ν ≤ ν′.
  bool leq(const NielsenType& other) const;

  NielsenType& operator+=(const NielsenType& other);
  friend NielsenType operator+(NielsenType a, const NielsenType& b) {
    return a += b;
  }
  friend NielsenType operator*(std::uint32_t k, NielsenType a) {
    for (auto& c : a.counts_) c *= k;
    return a;
  }

  // "c0:0,c1:2,…".
  std::string to_string() const;

  friend auto operator<=>(const NielsenType&, const NielsenType&) = default;
  friend bool operator==(const NielsenType&, const NielsenType&) = default;

 private:
  std::vector<std::uint32_t> counts_;
};

// Braid generator σ_i, 1 ≤ i ≤ d−1: (…, a, b, …) ↦ (…, b, a^b, …).
HurwitzVector sigma(const FiniteGroup& g, const HurwitzVector& v,
                    std::size_t i);
// σ_i^{-1}: (…, a, b, …) ↦ (…, a b a^{-1}, a, …).
HurwitzVector sigma_inv(const FiniteGroup& g, const HurwitzVector& v,
                        std::size_t i);

// In-place moves on raw storage; `i` is 1-based and unchecked.
inline void apply_sigma(const FiniteGroup& g, std::span<Element> v,
                        std::size_t i) {
  const Element a = v[i - 1], b = v[i];
  v[i - 1] = b;
  v[i] = g.conj(a, b);
}
inline void apply_sigma_inv(const FiniteGroup& g, std::span<Element> v,
                            std::size_t i) {
  const Element a = v[i - 1], b = v[i];
  v[i - 1] = g.mul(g.mul(a, b), g.inv(a));
  v[i] = a;
}

// Left-to-right product; the identity for the empty vector.
Element evaluate(const FiniteGroup& g, std::span<const Element> v);
inline Element evaluate(const FiniteGroup& g, const HurwitzVector& v) {
  return evaluate(g, v.span());
}

// Class counts of the entries at positions > skip.
NielsenType nielsen(const FiniteGroup& g, std::span<const Element> v,
                    std::size_t skip = 0);
inline NielsenType nielsen(const FiniteGroup& g, const HurwitzVector& v,
                           std::size_t skip = 0) {
  return nielsen(g, v.span(), skip);
}

inline SubgroupMask generated_subgroup(const FiniteGroup& g,
                                       const HurwitzVector& v) {
  return subgroup_closure(g, v.span());
}

HurwitzVector concat(const HurwitzVector& v, const HurwitzVector& w);
// v juxtaposed with itself k times.
HurwitzVector repeat(const HurwitzVector& v, std::size_t k);

// Nielsen type of a single element: the unit vector of its class.
NielsenType unit_type(const FiniteGroup& g, Element a);

}  // namespace hurwitz
