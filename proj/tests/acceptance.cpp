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

// One PASS/FAIL line per acceptance criterion, with its runtime limit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hurwitz/action_family.hpp"
#include "hurwitz/homology.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/stabilize.hpp"
#include "hurwitz/syntax.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure message; later ones are counted.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome outcome(std::string detail) const {
    if (failures_ == 0) return {true, std::move(detail)};
    return {false, first_ + " (" + std::to_string(failures_) + " failures)"};
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

std::string str(const FiniteGroup& g, const HurwitzVector& v) {
  return format_tuple(g, v);
}

// Orbit labels for all of alphabet^d by library BFS, one walk per orbit.
std::map<std::vector<Element>, std::size_t> orbit_labels(
    const FiniteGroup& g, const std::vector<Element>& alphabet, std::size_t d) {
  std::map<std::vector<Element>, std::size_t> label;
  std::size_t next = 0;
  for (const auto& t : oracle::all_tuples(alphabet, d)) {
    if (label.count(t)) continue;
    for (const auto& m : orbit_members(g, HurwitzVector(t))) label[m.entries()] = next;
    ++next;
  }
  return label;
}

// 1 ---------------------------------------------------------------------
Outcome braid_relations() {
  const FiniteGroup g = build_builtin("sym:4");
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
  Check c;
  std::size_t samples = 0;
  for (std::size_t d = 1; d <= 5; ++d) {
    for (int s = 0; s < 10000; ++s, ++samples) {
      std::vector<Element> e(d);
      for (auto& x : e) x = pick(rng);
      const HurwitzVector v(e);
      for (std::size_t i = 1; i < d; ++i) {
        c.expect(sigma_inv(g, sigma(g, v, i), i) == v &&
                     sigma(g, sigma_inv(g, v, i), i) == v,
                 "invertibility fails at " + str(g, v));
        if (i + 1 < d) {
          c.expect(sigma(g, sigma(g, sigma(g, v, i), i + 1), i) ==
                       sigma(g, sigma(g, sigma(g, v, i + 1), i), i + 1),
                   "braid relation fails at " + str(g, v));
        }
        for (std::size_t j = i + 2; j < d; ++j) {
          c.expect(sigma(g, sigma(g, v, i), j) == sigma(g, sigma(g, v, j), i),
                   "far commutation fails at " + str(g, v));
        }
      }
    }
  }
  return c.outcome(std::to_string(samples) + " sampled tuples, d = 1..5");
}

// 2 ---------------------------------------------------------------------
Outcome invariant_constancy() {
  const FiniteGroup g = build_builtin("sym:3");
  const auto all = oracle::all_elements(g);
  Check c;
  std::size_t orbits = 0, tuples = 0;
  for (std::size_t d = 0; d <= 4; ++d) {
    std::set<std::vector<Element>> seen;
    for (const auto& t : oracle::all_tuples(all, d)) {
      if (seen.count(t)) continue;
      ++orbits;
      const HurwitzVector v(t);
      const Element ev = evaluate(g, v);
      const NielsenType nu = nielsen(g, v);
      const SubgroupMask h = generated_subgroup(g, v);
      for (const auto& m : orbit_members(g, v)) {
        seen.insert(m.entries());
        ++tuples;
        c.expect(evaluate(g, m) == ev, "evaluation varies on " + str(g, v));
        c.expect(nielsen(g, m) == nu, "Nielsen type varies on " + str(g, v));
        c.expect(generated_subgroup(g, m) == h, "subgroup varies on " + str(g, v));
      }
    }
  }
  return c.outcome(std::to_string(tuples) + " tuples in " + std::to_string(orbits) +
                   " orbits");
}

// 3 ---------------------------------------------------------------------
Outcome centrality() {
  const FiniteGroup g = build_builtin("sym:3");
  const auto all = oracle::all_elements(g);
  // Orbit labels for every length up to 6 answer each vw ≈ wv query.
  std::vector<std::map<std::vector<Element>, std::size_t>> label(7);
  for (std::size_t d = 0; d <= 6; ++d) label[d] = orbit_labels(g, all, d);
  Check c;
  std::size_t pairs = 0;
  for (std::size_t dv = 0; dv <= 3; ++dv) {
    for (const auto& v : oracle::all_tuples(all, dv)) {
      if (oracle::product(g, v) != kIdentity) continue;
      for (std::size_t dw = 0; dw <= 3; ++dw) {
        for (const auto& w : oracle::all_tuples(all, dw)) {
          ++pairs;
          auto vw = v, wv = w;
          vw.insert(vw.end(), w.begin(), w.end());
          wv.insert(wv.end(), v.begin(), v.end());
          const auto& l = label[vw.size()];
          c.expect(l.at(vw) == l.at(wv),
                   "vw !~ wv for v = " + str(g, HurwitzVector(v)) +
                       ", w = " + str(g, HurwitzVector(w)));
        }
      }
    }
  }
  // The tower route on a sample of the same pairs.
  std::mt19937_64 rng(2);
  for (int s = 0; s < 200; ++s) {
    std::vector<Element> v(2), w(3);
    v[0] = static_cast<Element>(rng() % 6);
    v[1] = g.inv(v[0]);
    for (auto& x : w) x = static_cast<Element>(rng() % 6);
    c.expect(braid_equivalent(g, concat(HurwitzVector(v), HurwitzVector(w)),
                              concat(HurwitzVector(w), HurwitzVector(v))),
             "tower disagrees on centrality");
  }
  return c.outcome(std::to_string(pairs) + " pairs with ev(v) = 1");
}

// 4 ---------------------------------------------------------------------
Outcome conway() {
  Check c;
  std::size_t s3_cases = 0, s4_cases = 0;
  {
    const FiniteGroup g = build_builtin("sym:3");
    const auto all = oracle::all_elements(g);
    for (std::size_t d = 1; d <= 3; ++d) {
      for (const auto& t : oracle::all_tuples(all, d)) {
        const HurwitzVector v(t);
        if (generated_subgroup(g, v).order() != g.order()) continue;
        for (Element a = 1; a < g.order(); ++a) {
          for (Element b = 1; b < g.order(); ++b) {
            if (a == b || g.class_of(a) != g.class_of(b)) continue;
            const std::size_t n = g.element_order(a);
            ++s3_cases;
            c.expect(braid_equivalent(
                         g, concat(v, HurwitzVector(std::vector<Element>(n, a))),
                         concat(v, HurwitzVector(std::vector<Element>(n, b)))),
                     "S3 counterexample at v = " + str(g, v));
          }
        }
      }
    }
  }
  {
    const FiniteGroup g = build_builtin("sym:4");
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<Element> pick(1, static_cast<Element>(g.order() - 1));
    while (s4_cases < 300) {
      std::vector<Element> e(2 + rng() % 2);
      for (auto& x : e) x = pick(rng);
      const HurwitzVector v(e);
      if (generated_subgroup(g, v).order() != g.order()) continue;
      const Element a = pick(rng);
      const auto& cls = g.classes().members[g.class_of(a)];
      const Element b = cls[rng() % cls.size()];
      const std::size_t n = g.element_order(a);
      ++s4_cases;
      c.expect(braid_equivalent(g, concat(v, HurwitzVector(std::vector<Element>(n, a))),
                                concat(v, HurwitzVector(std::vector<Element>(n, b)))),
               "S4 counterexample at v = " + str(g, v));
    }
  }
  return c.outcome(std::to_string(s3_cases) + " S3 cases, " +
                   std::to_string(s4_cases) + " sampled S4 cases");
}

// 5 ---------------------------------------------------------------------
Outcome conway_esk() {
  const FiniteGroup g = build_builtin("sym:3");
  Check c;
  std::size_t instances = 0;
  for (const char* gamma_text : {"(12)", "all-nontrivial"}) {
    const GammaSet gamma = parse_gamma(g, gamma_text);
    const Stabilizer ug = u_gamma(g, gamma);
    const std::size_t max_u = gamma.size() == 3 ? 2 : 1;
    for (std::size_t du = 0; du <= max_u; ++du) {
      for (const auto& ut : oracle::all_tuples(gamma.elements(), du)) {
        const HurwitzVector u(ut);
        // Every generating class w with ν(w) = ν(u_Γ u) + δ, δ ∈ {0, [C]}.
        std::vector<NielsenType> levels{ug.nielsen + nielsen(g, u)};
        for (std::uint32_t cl : gamma.class_ids()) {
          NielsenType nu = levels[0];
          nu[cl] += 1;
          levels.push_back(nu);
        }
        for (const auto& nu : levels) {
          FiberSpec spec;
          spec.nielsen = nu;
          spec.generated =
              SubgroupConstraint{whole_group(g), SubgroupConstraint::Mode::kExact};
          for (const auto& w : enumerate_classes(g, spec)) {
            ++instances;
            const auto v = factor_through(g, w.canonical, u);
            c.expect(v.has_value(), "no factorisation of " + str(g, w.canonical) +
                                        " through " + str(g, u));
            if (!v) continue;
            c.expect(generated_subgroup(g, *v).order() == g.order(),
                     "witness does not generate");
            c.expect(braid_equivalent(g, concat(*v, u), w.canonical),
                     "witness fails for " + str(g, w.canonical));
          }
        }
      }
    }
  }
  return c.outcome(std::to_string(instances) + " (w, u) instances, witnesses verified");
}

// 6 ---------------------------------------------------------------------
Outcome bijection() {
  const FiniteGroup g = build_builtin("sym:3");
  Check c;
  std::ostringstream detail;
  for (const char* gamma_text : {"(12)", "all-nontrivial"}) {
    const GammaSet gamma = parse_gamma(g, gamma_text);
    StabilityOptions so;
    so.window = 4;
    const auto r = find_stability_bound(g, gamma, so);
    c.expect(r.bound.has_value(), std::string("no bound for ") + gamma_text);
    if (!r.bound) continue;
    const std::uint32_t m = *r.bound;
    c.expect(r.window - m >= 2, "fewer than 2 confirming levels");
    c.expect(r.confident, "report not confident");
    for (std::uint32_t n = m; n + 1 < r.levels.size(); ++n) {
      c.expect(r.levels[n].class_count == r.levels[n + 1].class_count,
               "class counts differ between " + r.levels[n].nielsen.to_string() +
                   " and " + r.levels[n + 1].nielsen.to_string());
    }
    detail << gamma_text << ": N = " << m << " at " << r.stable_level()->to_string()
           << " (" << r.levels[m].class_count << " classes, "
           << r.window - m << " confirming levels); ";
  }
  // The transposition level-0 count against brute force.
  {
    const GammaSet t = parse_gamma(g, "(12)");
    const auto p = oracle::partition(g, t.elements(), 6);
    const auto r = find_stability_bound(g, t);
    c.expect(p.orbit_count() == r.levels[0].class_count,
             "brute-force count differs at six transpositions");
  }
  return c.outcome(detail.str());
}

// 7 ---------------------------------------------------------------------
Outcome torsor_counts() {
  Check c;
  std::ostringstream detail;
  struct Case {
    const char* group;
    const char* gamma;
  };
  for (const Case& cs : {Case{"sym:3", "(12)"}, Case{"sym:3", "all-nontrivial"},
                         Case{"cyclic:4", "all-nontrivial"},
                         Case{"cyclic:2xcyclic:2", "all-nontrivial"},
                         Case{"dihedral:4", "all-nontrivial"},
                         Case{"quaternion:8", "all-nontrivial"}}) {
    const FiniteGroup g = build_builtin(cs.group);
    const GammaSet gamma = parse_gamma(g, cs.gamma);
    try {
      const H2Report r = h2_order(g, gamma);
      c.expect(r.generating_count == r.order * r.commutator_order,
               std::string("count not order x |[G,G]| for ") + cs.group);
      std::size_t later_levels = 0;
      for (const auto& [nu, count] : r.cross_checks) {
        c.expect(count == r.generating_count,
                 std::string("level dependence for ") + cs.group);
        if (nu.leq(r.stable_level)) continue;
        ++later_levels;
      }
      c.expect(later_levels >= 1, std::string("no second stable level for ") + cs.group);
      if (g.is_abelian()) c.expect(r.order == 1, std::string("abelian ") + cs.group);
      if (std::string(cs.group) == "sym:3" && std::string(cs.gamma) == "(12)") {
        c.expect(r.order == 1, "S3 transpositions: |H2| != 1");
        // Brute force: generating orbits of six transpositions.
        const auto p = oracle::partition(g, gamma.elements(), 6);
        std::size_t generating = 0;
        for (const auto& [root, size] : p.size) {
          if (oracle::closure(g, p.tuples[root]).size() == g.order()) ++generating;
        }
        c.expect(generating == r.generating_count,
                 "brute-force generating count differs");
      }
      detail << cs.group << "/" << cs.gamma << " |H2| = " << r.order << " ("
             << r.generating_count << " = " << r.order << "x" << r.commutator_order
             << "); ";
    } catch (const std::exception& e) {
      c.expect(false, std::string(cs.group) + ": " + e.what());
    }
  }
  return c.outcome(detail.str());
}

// 8 ---------------------------------------------------------------------
Outcome torsor_law() {
  const FiniteGroup g = build_builtin("sym:3");
  Check c;
  std::ostringstream detail;
  for (const char* gamma_text : {"(12)", "all-nontrivial"}) {
    const GammaSet gamma = parse_gamma(g, gamma_text);
    const H2Report r = h2_order(g, gamma);
    const TorsorGroup t(g, gamma, r.multiple);
    const std::size_t n = t.size();
    c.expect(n == r.order, "|group| != h2_order");
    c.expect(t.elements()[t.identity()].canonical ==
                 canonical_form(g, repeat(u_gamma(g, gamma).vector, r.multiple)),
             "identity is not the class of u_Gamma^m");
    for (std::size_t x = 0; x < n; ++x) {
      c.expect(t.compose(x, t.identity()) == x, "identity law");
      for (std::size_t y = 0; y < n; ++y) {
        c.expect(t.compose(x, y) < n, "closure");
        c.expect(t.compose(x, y) == t.compose(y, x), "commutativity");
        for (std::size_t z = 0; z < n; ++z) {
          c.expect(t.compose(t.compose(x, y), z) == t.compose(x, t.compose(y, z)),
                   "associativity");
        }
      }
    }
    bool identity_slice = false;
    for (const auto& s : t.slices()) {
      c.expect(s.simply_transitive, "slice not simply transitive");
      if (s.evaluation == kIdentity) identity_slice = true;
    }
    c.expect(identity_slice, "no evaluation-identity slice");
    detail << gamma_text << ": " << n << " element(s) at " << t.level().to_string() << "; ";
  }
  return c.outcome(detail.str());
}

// 9 ---------------------------------------------------------------------
Outcome stable_range() {
  const FiniteGroup g = build_builtin("sym:3");
  const GammaSet gamma = parse_gamma(g, "(12)");
  const Stabilizer u = u_gamma(g, gamma);
  const auto r = find_stability_bound(g, gamma);
  Check c;
  if (!r.bound) return {false, "no stability bound"};
  const NielsenType level = *r.stable_level();
  const std::size_t d = level.total();
  const auto labels = orbit_labels(g, gamma.elements(), d);
  std::vector<std::vector<Element>> tuples;
  for (const auto& [t, l] : labels) {
    if (oracle::closure(g, t).size() == g.order()) tuples.push_back(t);
  }
  StableEquivalence ctx(g, level, u);
  std::size_t pairs = 0, equal = 0;
  for (const auto& v : tuples) {
    for (const auto& w : tuples) {
      ++pairs;
      const auto res = ctx.decide(HurwitzVector(v), HurwitzVector(w));
      const bool braid = labels.at(v) == labels.at(w);
      equal += braid;
      c.expect(res.verdict == (braid ? Verdict::kTrue : Verdict::kFalse),
               "verdict " + std::string(verdict_name(res.verdict)) + " for " +
                   str(g, HurwitzVector(v)) + " vs " + str(g, HurwitzVector(w)));
    }
  }
  return c.outcome(std::to_string(pairs) + " generating pairs at " + level.to_string() +
                   ", " + std::to_string(equal) + " braid equivalent");
}

// 10 --------------------------------------------------------------------
Outcome marked_covers() {
  const FiniteGroup g = build_builtin("sym:3");
  const auto all = oracle::all_elements(g);
  Check c;
  std::size_t fibers = 0, actions = 0;
  // A do-nothing extra move sends enumeration through full-tuple orbit
  // walks instead of the product construction.
  ExtraMove noop{"noop", [](const FiniteGroup&, std::span<Element>) {},
                 [](const FiniteGroup&, std::span<Element>) {}};
  for (std::size_t k : {1u, 2u}) {
    const ActionFamily marked = marked_family(k);
    ActionFamily walked = marked_family(k);
    walked.extra_moves.push_back(noop);
    std::size_t prefixes = 1;
    for (std::size_t i = 0; i < k; ++i) prefixes *= g.order();
    for (std::size_t d = 0; d <= (k == 1 ? 3u : 2u); ++d) {
      std::set<NielsenType> types;
      for (const auto& t : oracle::all_tuples(all, d)) {
        types.insert(nielsen(g, std::span<const Element>(t)));
      }
      for (const auto& nu : types) {
        ++fibers;
        FiberSpec spec;
        spec.nielsen = nu;
        const auto tail = enumerate_classes(g, spec);
        const auto a = enumerate_marked_classes(g, marked, spec);
        const auto b = enumerate_marked_classes(g, walked, spec);
        c.expect(a.size() == prefixes * tail.size(),
                 "product structure fails at " + nu.to_string());
        c.expect(b.size() == a.size(), "orbit walk disagrees at " + nu.to_string());
      }
    }

    // Representative independence of (prefix; t)·v, exhaustive for
    // |t|, |v| ≤ 2 against orbit labels of the concatenation.
    std::vector<std::map<std::vector<Element>, std::size_t>> label(5);
    for (std::size_t d = 0; d <= 4; ++d) label[d] = orbit_labels(g, all, d);
    const auto prefix_list = all_tuples(g, k);
    for (std::size_t dt = 0; dt <= 2; ++dt) {
      for (std::size_t dv = 0; dv <= 2; ++dv) {
        for (const auto& t : oracle::all_tuples(all, dt)) {
          for (const auto& v : oracle::all_tuples(all, dv)) {
            auto tv = t;
            tv.insert(tv.end(), v.begin(), v.end());
            const std::size_t expect = label[tv.size()].at(tv);
            for (const auto& tm : orbit_members(g, HurwitzVector(t))) {
              for (const auto& vm : orbit_members(g, HurwitzVector(v))) {
                const auto x = concat(tm, vm).entries();
                c.expect(label[x.size()].at(x) == expect,
                         "class of t.v depends on representatives");
              }
            }
          }
        }
        // Library monoid_act on class representatives for every prefix.
        FiberSpec any_t, any_v;
        for (const auto& t : oracle::all_tuples(all, dt)) {
          if (t != canonical_form(g, HurwitzVector(t)).entries()) continue;
          for (const auto& v : oracle::all_tuples(all, dv)) {
            if (v != canonical_form(g, HurwitzVector(v)).entries()) continue;
            const auto vm = orbit_members(g, HurwitzVector(v)).back();
            const auto tm = orbit_members(g, HurwitzVector(t)).back();
            for (const auto& p : prefix_list) {
              ++actions;
              const MarkedClass lhs = monoid_act(g, marked, MarkedVector{p, HurwitzVector(t)},
                                                 HurwitzVector(v));
              const MarkedClass rhs = monoid_act(g, marked, MarkedVector{p, tm}, vm);
              c.expect(lhs == rhs, "monoid_act depends on representatives");
              c.expect(lhs.canonical.prefix == p, "monoid_act moved the prefix");
            }
          }
        }
      }
    }
  }
  return c.outcome(std::to_string(fibers) + " fibers, " + std::to_string(actions) +
                   " monoid actions");
}

// 11 --------------------------------------------------------------------
Outcome adjoint_words() {
  const FiniteGroup g = build_builtin("sym:3");
  Check c;
  std::size_t queries = 0;
  for (const char* gamma_text : {"(12)", "all-nontrivial"}) {
    const GammaSet gamma = parse_gamma(g, gamma_text);
    const auto elems = gamma.elements();
    for (Element a : elems) {
      for (Element b : elems) {
        ++queries;
        const auto r = adj_word_equal(g, gamma, HurwitzVector{a, b},
                                      HurwitzVector{b, g.conj(a, b)});
        c.expect(r.verdict == Verdict::kTrue, "quandle relation not equal");
      }
    }
    // Every pair of words of length ≤ 2: distinct Nielsen images are false,
    // nothing is indeterminate.
    for (std::size_t dv = 0; dv <= 2; ++dv) {
      for (std::size_t dw = 0; dw <= 2; ++dw) {
        for (const auto& v : oracle::all_tuples(elems, dv)) {
          for (const auto& w : oracle::all_tuples(elems, dw)) {
            ++queries;
            const HurwitzVector hv(v), hw(w);
            const auto r = adj_word_equal(g, gamma, hv, hw);
            c.expect(r.verdict != Verdict::kIndeterminate,
                     "indeterminate for " + str(g, hv) + " vs " + str(g, hw));
            if (nielsen(g, hv) != nielsen(g, hw)) {
              c.expect(r.verdict == Verdict::kFalse, "distinct Nielsen images not false");
            }
          }
        }
      }
    }
  }
  return c.outcome(std::to_string(queries) + " word pairs");
}

// 12 --------------------------------------------------------------------
Outcome determinism(const std::string& cli_path) {
  Check c;
  const std::vector<std::vector<std::string>> configs = {
      {"classes", "--group", "sym:3", "--nielsen", "c1:6,c2:3"},
      {"classes", "--group", "dihedral:4", "--nielsen", "c1:2,c3:2,c4:1"},
      {"classes", "--group", "quaternion:8", "--nielsen", "c2:2,c3:2", "--generating"},
      {"classes", "--group", "sym:4", "--gamma", "(12)", "--nielsen", "c1:6"}};
  std::size_t runs = 0;
  for (const auto& args : configs) {
    std::string first;
    for (int rep = 0; rep < 3; ++rep) {
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      ++runs;
      c.expect(code == 0, "classes exited with " + std::to_string(code));
      if (rep == 0) {
        first = out.str();
      } else {
        c.expect(out.str() == first, "output differs between runs");
      }
    }
    if (!cli_path.empty()) {
      // Separate processes, including a second worker thread.
      std::string cmd = cli_path;
      for (const auto& a : args) cmd += " '" + a + "'";
      const std::string tmp = "acceptance_determinism.jsonl";
      for (const char* extra : {"", " --workers 2"}) {
        ++runs;
        c.expect(std::system((cmd + extra + " > " + tmp).c_str()) == 0,
                 "cli process failed");
        std::ifstream in(tmp);
        std::stringstream buf;
        buf << in.rdbuf();
        c.expect(buf.str() == first, "process output differs from in-process output");
      }
      std::remove(tmp.c_str());
    }
  }
  return c.outcome(std::to_string(runs) + " runs over " + std::to_string(configs.size()) +
                   " configurations, byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "braid relations (S4, d <= 5)", 5, braid_relations},
      {2, "invariant constancy (S3^d, d <= 4)", 10, invariant_constancy},
      {3, "centrality of ev = 1 tuples (S3)", 60, centrality},
      {4, "Conway lemma (S3 exhaustive, S4 sampled)", 120, conway},
      {5, "factorisation w ~ v u with generating v (S3)", 0, conway_esk},
      {6, "stable class counts and bound N (S3)", 300, bijection},
      {7, "torsor count divisibility and level independence", 0, torsor_counts},
      {8, "torsor group law at the S3 stable level", 0, torsor_law},
      {9, "stable equivalence = braid equivalence in the stable range", 0, stable_range},
      {10, "marked covers (S3, k = 1, 2)", 0, marked_covers},
      {11, "adjoint word problem (S3)", 0, adjoint_words},
      {12, "deterministic jsonl output", 0, [&] { return determinism(cli_path); }},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit > 0 && secs > cr.limit) {
      o.ok = false;
      o.detail = "exceeded the " + std::to_string(static_cast<int>(cr.limit)) +
                 " s limit; " + o.detail;
    }
    if (!o.ok) ++failed;
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << cr.id << ". " << cr.name << "  ["
              << time_buf << (cr.limit > 0 ? " / " + std::to_string(static_cast<int>(cr.limit)) + "s" : "")
              << "]  " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
