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
#include <stdexcept>
#include <string>

namespace hurwitz {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A multiplication table that is not a group law, or a malformed group
// document.
class GroupError : public Error {
 public:
  using Error::Error;
};

// Unknown builtin family, parameter out of range, malformed spec string.
class SpecError : public Error {
 public:
  using Error::Error;
};

// A violated operation precondition (e.g. a stabiliser that does not
// generate the group).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Text that does not follow the tuple / Nielsen / family syntax. `position`
// is the 0-based character offset of the first offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A configured resource cap was hit. `reached` is the partial size
// (visited states, enumerated tuples, tower cells) at the time of abort.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t reached)
      : Error(what + " (reached " + std::to_string(reached) + ")"),
        reached_(reached) {}
  std::uint64_t reached() const { return reached_; }

 private:
  std::uint64_t reached_;
};

// A search that ran out of its window before reaching a verdict (no
// stability bound, no witness within the search limit).
class Indeterminate : public Error {
 public:
  using Error::Error;
};

}  // namespace hurwitz
