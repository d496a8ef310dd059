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

#include <string>
#include <string_view>

#include "hurwitz/group.hpp"
#include "hurwitz/hurwitz_vector.hpp"

namespace hurwitz {

// Text forms used by the CLI and the cache. All parsers throw ParseError
// with the offset of the first offending character.
//
//   element   name ("(12)", "-i") or 0-based index ("3")
//   tuple     "1,2,4" | "[(12),(13)]" | "" | "[]"
//   gamma     "all-nontrivial" | tuple of class representatives
//   nielsen   "c0:0,c1:2" (class id : count; missing classes are 0)

Element parse_element(const FiniteGroup& g, std::string_view text);
HurwitzVector parse_tuple(const FiniteGroup& g, std::string_view text);
GammaSet parse_gamma(const FiniteGroup& g, std::string_view text);
NielsenType parse_nielsen(const FiniteGroup& g, std::string_view text);

// "[(12),(13)]" when the group has names, "1,2" otherwise.
std::string format_tuple(const FiniteGroup& g, const HurwitzVector& v);
std::string format_element(const FiniteGroup& g, Element a);

}  // namespace hurwitz
