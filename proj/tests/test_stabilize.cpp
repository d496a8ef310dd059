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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "hurwitz/errors.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/stabilize.hpp"
#include "hurwitz/syntax.hpp"
#include "oracles.hpp"

using namespace hurwitz;

TEST_CASE("u_gamma") {
  const FiniteGroup g = build_builtin("sym:3");
  const Stabilizer u = u_gamma(g, parse_gamma(g, "(12)"));
  CHECK(u.vector.size() == 6);
  CHECK(u.evaluation == kIdentity);
  CHECK(u.ell == 1);
  auto sorted = u.vector.entries();
  std::sort(sorted.begin(), sorted.end());
  const auto t = parse_gamma(g, "(12)").elements();
  CHECK(sorted == std::vector<Element>{t[0], t[0], t[1], t[1], t[2], t[2]});

  const FiniteGroup c2 = build_builtin("cyclic:2");
  CHECK(u_gamma(c2, make_gamma_all_nontrivial(c2)).vector == HurwitzVector{1, 1});

  const Stabilizer all = u_gamma(g, make_gamma_all_nontrivial(g));
  CHECK(all.nielsen.counts() == std::vector<std::uint32_t>{0, 6, 6});

  // The class of u_Γ does not depend on the enumeration order of Γ.
  for (const char* spec : {"sym:3", "dihedral:4", "quaternion:8"}) {
    const FiniteGroup h = build_builtin(spec);
    auto elems = make_gamma_all_nontrivial(h).elements();
    const HurwitzVector base = u_gamma_ordered(h, elems).vector;
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(elems.begin(), elems.end(), rng);
      CHECK(braid_equivalent(h, base, u_gamma_ordered(h, elems).vector));
    }
  }
}

TEST_CASE("stabilize_map") {
  const FiniteGroup g = build_builtin("sym:3");
  FiberSpec spec;
  spec.nielsen = parse_nielsen(g, "c1:2");
  const auto domain = enumerate_classes(g, spec);

  const Stabilizer none = make_stabilizer(g, HurwitzVector{});
  const auto id = stabilize_map(g, domain, none);
  CHECK(id.bijective());
  for (std::size_t i = 0; i < domain.size(); ++i) CHECK(id.target[i] == i);

  // Two transpositions to three, by one transposition.
  const Stabilizer t = make_stabilizer(g, parse_tuple(g, "(12)"));
  const auto m = stabilize_map(g, domain, t);
  FiberSpec next;
  next.nielsen = parse_nielsen(g, "c1:3");
  const auto codomain = enumerate_classes(g, next);
  CHECK(m.codomain_size == codomain.size());
  // Oracle: map representatives through orbit BFS.
  std::set<std::size_t> hit;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto img = orbit(g, concat(domain[i].canonical, t.vector)).canonical;
    CHECK(codomain[m.target[i]].canonical == img);
    hit.insert(m.target[i]);
    // Another representative lands on the same class.
    const auto other = orbit_members(g, domain[i].canonical).back();
    CHECK(orbit(g, concat(other, t.vector)).canonical == img);
  }
  CHECK(m.surjective == (hit.size() == codomain.size()));
  CHECK(m.injective == (hit.size() == domain.size()));
}

TEST_CASE("stability bounds") {
  SUBCASE("abelian groups: bound 0, one class per level") {
    for (const char* spec : {"cyclic:2", "cyclic:4", "cyclic:2xcyclic:2", "cyclic:3"}) {
      const FiniteGroup g = build_builtin(spec);
      const auto r = find_stability_bound(g, make_gamma_all_nontrivial(g));
      REQUIRE(r.bound);
      CHECK(*r.bound == 0);
      CHECK(r.confident);
      for (const auto& l : r.levels) CHECK(l.class_count == 1);
    }
  }
  SUBCASE("S3 transpositions") {
    const FiniteGroup g = build_builtin("sym:3");
    const auto r = find_stability_bound(g, parse_gamma(g, "(12)"));
    REQUIRE(r.bound);
    CHECK(r.levels.size() == 4);
    CHECK(r.levels[0].nielsen == r.stabilizer.nielsen);
    for (std::size_t n = *r.bound; n < r.levels.size(); ++n) {
      CHECK(r.levels[n].generating_count == 3);
      CHECK(r.levels[n].class_count == r.levels[*r.bound].class_count);
    }
    CHECK(r.confident);
  }
  SUBCASE("counts never increase once the maps are surjective") {
    const FiniteGroup g = build_builtin("sym:3");
    StabilityOptions so;
    so.base = NielsenType::zero(g.class_count());
    so.window = 4;
    const auto r = find_stability_bound(g, parse_gamma(g, "(12)"), so);
    for (std::size_t n = 0; n + 1 < r.levels.size(); ++n) {
      if (*r.levels[n].surjective) {
        CHECK(r.levels[n + 1].generating_count <= r.levels[n].generating_count);
      }
    }
    // From the empty tuple the first map cannot hit the generating classes.
    CHECK(r.levels[0].generating_count == 0);
    CHECK(!*r.levels[0].surjective);
  }
  SUBCASE("empty window") {
    const FiniteGroup g = build_builtin("sym:3");
    StabilityOptions so;
    so.window = 0;
    const auto r = find_stability_bound(g, make_gamma_all_nontrivial(g), so);
    CHECK(r.levels.empty());
    CHECK(!r.bound);
    CHECK(!r.diagnostic.empty());
  }
  SUBCASE("u_Gamma must generate") {
    const FiniteGroup g = build_builtin("sym:3");
    CHECK_THROWS_AS(find_stability_bound(g, parse_gamma(g, "(123)")), PreconditionError);
  }
  SUBCASE("marked family over S3") {
    const FiniteGroup g = build_builtin("sym:3");
    const auto r = find_family_stability_bound(g, marked_family(1));
    REQUIRE(r.bound);
    for (const auto& l : r.levels) CHECK(l.class_count == 6 * 3);
  }
}

TEST_CASE("stable equivalence") {
  const FiniteGroup g = build_builtin("sym:3");
  const Stabilizer u = u_gamma(g, parse_gamma(g, "(12)"));
  const HurwitzVector v = parse_tuple(g, "(12),(13)");
  const HurwitzVector w = parse_tuple(g, "(13),(23)");
  const auto same = stable_equivalent(g, v, w, u);
  CHECK(same.verdict == Verdict::kTrue);
  CHECK(same.level == 0);

  const auto ev = stable_equivalent(g, v, parse_tuple(g, "(13),(12)"), u);
  CHECK(ev.verdict == Verdict::kFalse);
  CHECK(ev.level == 0);

  // (12)^2 and (13)^2: different subgroups, equal after one stabiliser.
  const auto pad = stable_equivalent(g, parse_tuple(g, "(12),(12)"),
                                     parse_tuple(g, "(13),(13)"), u);
  CHECK(pad.verdict == Verdict::kTrue);
  CHECK(pad.level == 1);

  // Reflexive, symmetric and consistent with braid equivalence.
  StableEquivalence ctx(g, parse_nielsen(g, "c1:4"), u);
  const auto t = parse_gamma(g, "(12)").elements();
  const auto tuples = oracle::all_tuples(t, 4);
  for (std::size_t i = 0; i < tuples.size(); i += 3) {
    const HurwitzVector a(tuples[i]);
    CHECK(ctx.decide(a, a).verdict == Verdict::kTrue);
    for (std::size_t j = 0; j < tuples.size(); j += 5) {
      const HurwitzVector b(tuples[j]);
      const auto ab = ctx.decide(a, b);
      CHECK(ab.verdict == ctx.decide(b, a).verdict);
      if (braid_equivalent(g, a, b)) CHECK(ab.verdict == Verdict::kTrue);
      CHECK(ab.verdict != Verdict::kIndeterminate);
    }
  }

  // Appending the trivial stabiliser decides at level 0.
  const Stabilizer none = make_stabilizer(g, HurwitzVector{});
  CHECK(stable_equivalent(g, parse_tuple(g, "(12),(12)"), parse_tuple(g, "(13),(13)"),
                          none)
            .verdict == Verdict::kFalse);
}

TEST_CASE("fraction group check") {
  const FiniteGroup c2 = build_builtin("cyclic:2");
  const auto r = fraction_group_check(c2, make_gamma_all_nontrivial(c2));
  CHECK(r.verdict == Verdict::kTrue);
  CHECK(r.power == 1);

  const FiniteGroup g = build_builtin("sym:3");
  const GammaSet t = parse_gamma(g, "(12)");
  const auto s = fraction_group_check(g, t);
  REQUIRE(s.verdict == Verdict::kTrue);
  CHECK(s.power == 1);
  const auto members = orbit_members(g, u_gamma(g, t).vector);
  const std::set<HurwitzVector> orbit_set(members.begin(), members.end());
  for (std::size_t i = 0; i < s.witnesses.size(); ++i) {
    CHECK(s.witnesses[i][0] == t.elements()[i]);
    CHECK(orbit_set.count(s.witnesses[i]));
  }
  CHECK_THROWS_AS(fraction_group_check(g, parse_gamma(g, "(123)")), PreconditionError);
}

TEST_CASE("adjoint word problem") {
  const FiniteGroup g = build_builtin("sym:3");
  const GammaSet gamma = parse_gamma(g, "(12)");
  for (Element a : gamma.elements()) {
    for (Element b : gamma.elements()) {
      const auto r = adj_word_equal(g, gamma, HurwitzVector{a, b},
                                    HurwitzVector{b, g.conj(a, b)});
      CHECK(r.verdict == Verdict::kTrue);
    }
  }
  const GammaSet all = make_gamma_all_nontrivial(g);
  CHECK(adj_word_equal(g, all, parse_tuple(g, "(12)"), parse_tuple(g, "(123)")).verdict ==
        Verdict::kFalse);
  CHECK(adj_word_equal(g, gamma, parse_tuple(g, "(12),(12)"), parse_tuple(g, "(13),(13)"))
            .verdict == Verdict::kTrue);
  CHECK_THROWS_AS(adj_word_equal(g, gamma, parse_tuple(g, "(123)"), parse_tuple(g, "(123)")),
                  PreconditionError);
}

TEST_CASE("Conway lemma: v g1^n ~ v g2^n for generating v") {
  const FiniteGroup g = build_builtin("sym:3");
  const auto all = oracle::all_elements(g);
  for (std::size_t d = 1; d <= 2; ++d) {
    for (const auto& t : oracle::all_tuples(all, d)) {
      const HurwitzVector v(t);
      if (generated_subgroup(g, v).order() != g.order()) continue;
      for (Element a = 1; a < g.order(); ++a) {
        for (Element b = 1; b < g.order(); ++b) {
          if (g.class_of(a) != g.class_of(b)) continue;
          const std::size_t n = g.element_order(a);
          CHECK(braid_equivalent(g, concat(v, HurwitzVector(std::vector<Element>(n, a))),
                                 concat(v, HurwitzVector(std::vector<Element>(n, b)))));
        }
      }
    }
  }
}

TEST_CASE("factorisations w = v u with generating v") {
  const FiniteGroup g = build_builtin("sym:3");
  const GammaSet t = parse_gamma(g, "(12)");
  const HurwitzVector ug = u_gamma(g, t).vector;
  // ν(w) ≥ ν(u_Γ u) with u one transposition: w has 7 transpositions.
  FiberSpec spec;
  spec.nielsen = parse_nielsen(g, "c1:7");
  spec.generated = SubgroupConstraint{whole_group(g), SubgroupConstraint::Mode::kExact};
  for (const auto& c : enumerate_classes(g, spec)) {
    for (Element a : t.elements()) {
      const auto v = factor_through(g, c.canonical, HurwitzVector{a});
      REQUIRE(v.has_value());
      CHECK(generated_subgroup(g, *v).order() == g.order());
      CHECK(braid_equivalent(g, concat(*v, HurwitzVector{a}), c.canonical));
    }
  }
  CHECK(!factor_through(g, parse_tuple(g, "(12)"), parse_tuple(g, "(123)")).has_value());
  (void)ug;
}
