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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/group.hpp"
#include "hurwitz/hurwitz_vector.hpp"
#include "hurwitz/orbit.hpp"

namespace hurwitz {

// A self-map of the full tuple G^{r+d} acting alongside the braid moves on
// the tail. `inverse` must undo `forward`.
struct ExtraMove {
  std::string name;
  std::function<void(const FiniteGroup&, std::span<Element>)> forward;
  std::function<void(const FiniteGroup&, std::span<Element>)> inverse;
};

// Tuple spaces G^{r+d}: a prefix of width r that the braid group leaves
// alone, a Nielsen skip s ≤ r, the Hurwitz moves on the last d positions,
// and optional extra moves.
struct ActionFamily {
  std::size_t prefix_width = 0;  // r
  std::size_t nielsen_skip = 0;  // s
  std::vector<ExtraMove> extra_moves;

  bool is_marked() const { return extra_moves.empty(); }
};

ActionFamily plain_family();
// Marked covers: r = s = k, standard moves on the tail only.
ActionFamily marked_family(std::size_t k);
// "plain" | "marked:k".
ActionFamily parse_family(std::string_view text);
std::string family_name(const ActionFamily& family);

struct MarkedVector {
  HurwitzVector prefix;
  HurwitzVector tail;

  HurwitzVector flatten() const { return concat(prefix, tail); }
  friend auto operator<=>(const MarkedVector&, const MarkedVector&) = default;
  friend bool operator==(const MarkedVector&, const MarkedVector&) = default;
};

// "prefix | tail", each side in tuple syntax. Without a bar the whole text
// is the tail and the prefix is empty.
MarkedVector parse_marked(const FiniteGroup& g, std::string_view text);
std::string format_marked(const FiniteGroup& g, const MarkedVector& x);

// Generalised Nielsen type: classes of the entries after the first s.
NielsenType family_nielsen(const FiniteGroup& g, const ActionFamily& family,
                           const MarkedVector& x);

// A class of the family action, held by its canonical member.
struct MarkedClass {
  MarkedVector canonical;
  Count size = 0;  // members in G^{r+d}
  Element tail_evaluation = kIdentity;
  NielsenType nielsen;

  friend bool operator==(const MarkedClass& a, const MarkedClass& b) {
    return a.canonical == b.canonical;
  }
};

MarkedClass family_orbit(const FiniteGroup& g, const ActionFamily& family,
                         const MarkedVector& x, const Caps& caps = {});
bool family_equivalent(const FiniteGroup& g, const ActionFamily& family,
                       const MarkedVector& x, const MarkedVector& y,
                       const Caps& caps = {});

// Class of (prefix; tail·v).
MarkedClass monoid_act(const FiniteGroup& g, const ActionFamily& family,
                       const MarkedVector& x, const HurwitzVector& v,
                       const Caps& caps = {});

// Classes whose tail satisfies `tail_spec`, over the given prefixes (every
// element of G^r when `prefixes` is empty). Sorted by canonical member.
std::vector<MarkedClass> enumerate_marked_classes(
    const FiniteGroup& g, const ActionFamily& family, const FiberSpec& tail_spec,
    const std::vector<HurwitzVector>& prefixes = {},
    const EnumerationOptions& opts = {});

// Samples random tuples and checks that every extra move is inverted by its
// inverse and preserves the generalised Nielsen type. Returns the name of
// the first failing move, if any.
std::optional<std::string> validate_family(const FiniteGroup& g,
                                           const ActionFamily& family,
                                           std::size_t tail_length,
                                           std::size_t samples = 1000,
                                           std::uint64_t seed = 1);

// All of G^k in lexicographic order.
std::vector<HurwitzVector> all_tuples(const FiniteGroup& g, std::size_t k);

}  // namespace hurwitz
