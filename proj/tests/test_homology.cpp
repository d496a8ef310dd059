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

#include "doctest.h"
#include "hurwitz/errors.hpp"
#include "hurwitz/homology.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/syntax.hpp"

using namespace hurwitz;

namespace {

// Composition table of Z/a1 × Z/a2 × …, elements in mixed radix.
std::vector<std::size_t> product_table(const std::vector<std::size_t>& mods) {
  std::size_t n = 1;
  for (auto m : mods) n *= m;
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t z = 0, scale = 1, xr = x, yr = y;
      for (auto m : mods) {
        z += ((xr % m + yr % m) % m) * scale;
        scale *= m;
        xr /= m;
        yr /= m;
      }
      t[x * n + y] = z;
    }
  }
  return t;
}

std::vector<std::uint64_t> invariants_of(const std::vector<std::size_t>& mods) {
  std::size_t n = 1;
  for (auto m : mods) n *= m;
  return abelian_invariants(product_table(mods), n, 0);
}

}  // namespace

TEST_CASE("invariant factors of known abelian groups") {
  using V = std::vector<std::uint64_t>;
  CHECK(invariants_of({1}) == V{});
  CHECK(invariants_of({6}) == V{6});
  CHECK(invariants_of({2, 3}) == V{6});
  CHECK(invariants_of({2, 4}) == V{2, 4});
  CHECK(invariants_of({4, 2}) == V{2, 4});
  CHECK(invariants_of({2, 2, 2}) == V{2, 2, 2});
  CHECK(invariants_of({2, 6}) == V{2, 6});
  CHECK(invariants_of({4, 6}) == V{2, 12});
  CHECK(invariants_of({9, 3, 2}) == V{3, 18});
}

TEST_CASE("H2 orders") {
  SUBCASE("abelian groups have order 1") {
    for (const char* spec : {"cyclic:2", "cyclic:4", "cyclic:2xcyclic:2", "cyclic:6"}) {
      CAPTURE(spec);
      const FiniteGroup g = build_builtin(spec);
      const auto r = h2_structure(g, make_gamma_all_nontrivial(g));
      CHECK(r.order == 1);
      CHECK(r.structure.empty());
      CHECK(r.commutator_order == 1);
      CHECK(r.generating_count == 1);
    }
  }
  SUBCASE("S3 with transpositions reproduces Clebsch transitivity") {
    const FiniteGroup g = build_builtin("sym:3");
    const auto r = h2_order(g, parse_gamma(g, "(12)"));
    CHECK(r.order == 1);
    CHECK(r.commutator_order == 3);
    CHECK(r.generating_count == 3);
    CHECK(!r.cross_checks.empty());
    for (const auto& [nu, count] : r.cross_checks) CHECK(count == 3);
  }
  SUBCASE("S3 with all nontrivial elements is level independent") {
    const FiniteGroup g = build_builtin("sym:3");
    const auto r = h2_order(g, make_gamma_all_nontrivial(g));
    CHECK(r.generating_count == r.order * r.commutator_order);
    CHECK(r.cross_checks.size() >= 2);
    std::uint64_t prod = 1;
    for (auto f : h2_structure(g, make_gamma_all_nontrivial(g)).structure) prod *= f;
    CHECK(prod == r.order);
  }
  SUBCASE("no bound is indeterminate") {
    const FiniteGroup g = build_builtin("sym:3");
    H2Options opts;
    opts.stability.window = 0;
    CHECK_THROWS_AS(h2_order(g, parse_gamma(g, "(12)"), opts), Indeterminate);
  }
}

TEST_CASE("torsor group laws at the S3 stable level") {
  const FiniteGroup g = build_builtin("sym:3");
  for (const char* gamma_text : {"(12)", "all-nontrivial"}) {
    CAPTURE(gamma_text);
    const GammaSet gamma = parse_gamma(g, gamma_text);
    const auto r = h2_order(g, gamma);
    const TorsorGroup t(g, gamma, r.multiple);
    const std::size_t n = t.size();
    CHECK(n == r.order);
    CHECK(t.elements()[t.identity()].canonical ==
          canonical_form(g, repeat(u_gamma(g, gamma).vector, r.multiple)));
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(t.compose(x, t.identity()) == x);
      for (std::size_t y = 0; y < n; ++y) {
        CHECK(t.compose(x, y) < n);
        CHECK(t.compose(x, y) == t.compose(y, x));
        for (std::size_t z = 0; z < n; ++z) {
          CHECK(t.compose(t.compose(x, y), z) == t.compose(x, t.compose(y, z)));
        }
      }
    }
    for (const auto& s : t.slices()) {
      CHECK(s.simply_transitive);
      CHECK(s.classes.size() == n);
    }
  }
}
