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

#include "hurwitz/stabilize.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::vector<std::uint32_t> support(const NielsenType& nu) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < nu.num_classes(); ++c) {
    if (nu[c] > 0) out.push_back(c);
  }
  return out;
}

TowerOptions tower_options(const Caps& caps, unsigned workers) {
  return TowerOptions{caps.tower_cells, std::max(1u, workers)};
}

void require_generating(const FiniteGroup& g, const Stabilizer& u) {
  if (subgroup_closure(g, u.vector.span()).order() != g.order()) {
    throw PreconditionError("u_Gamma does not generate the group");
  }
}

void require_on_gamma(const GammaSet& gamma, const NielsenType& nu,
                      std::string_view what) {
  for (std::uint32_t c = 0; c < nu.num_classes(); ++c) {
    if (nu[c] > 0 && !gamma.contains_class(c)) {
      throw PreconditionError(std::string(what) + " counts class c" +
                              std::to_string(c) + " outside Gamma");
    }
  }
}

}  // namespace

Stabilizer make_stabilizer(const FiniteGroup& g, HurwitzVector u) {
  Stabilizer s;
  s.nielsen = nielsen(g, u);
  s.evaluation = evaluate(g, u);
  s.ell = g.element_order(s.evaluation);
  s.vector = std::move(u);
  return s;
}

Stabilizer u_gamma_ordered(const FiniteGroup& g,
                           std::span<const Element> order) {
  std::vector<Element> out;
  for (Element a : order) {
    out.insert(out.end(), g.element_order(a), a);
  }
  return make_stabilizer(g, HurwitzVector(std::move(out)));
}

Stabilizer u_gamma(const FiniteGroup& g, const GammaSet& gamma) {
  const auto elements = gamma.elements();
  return u_gamma_ordered(g, elements);
}

StabilizationMap stabilize_map(const FiniteGroup& g,
                               std::span<const OrbitClass> domain,
                               const Stabilizer& u,
                               std::span<const OrbitClass> codomain,
                               const Caps& caps) {
  StabilizationMap out;
  out.codomain_size = codomain.size();
  if (domain.empty()) {
    out.injective = true;
    out.surjective = codomain.empty();
    return out;
  }
  const NielsenType& nu = domain.front().nielsen;
  for (const auto& c : domain) {
    if (c.nielsen != nu) {
      throw PreconditionError("stabilize_map domain mixes Nielsen types");
    }
  }
  const NielsenType box = nu + u.nielsen;
  auto classes = support(box);
  ClassTower tower(g, classes, box, tower_options(caps, 1));

  std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < codomain.size(); ++i) {
    const auto ref = tower.classify(codomain[i].canonical.span());
    index.emplace(std::pair{ref.type, ref.index}, i);
  }
  std::vector<bool> hit(codomain.size(), false);
  out.injective = true;
  for (const auto& c : domain) {
    auto ref = tower.append(tower.classify(c.canonical.span()), u.vector.span());
    auto it = index.find({ref.type, ref.index});
    if (it == index.end()) {
      throw PreconditionError("stabilised class lies outside the codomain");
    }
    if (hit[it->second]) out.injective = false;
    hit[it->second] = true;
    out.target.push_back(it->second);
  }
  out.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return out;
}

StabilizationMap stabilize_map(const FiniteGroup& g,
                               std::span<const OrbitClass> domain,
                               const Stabilizer& u, const Caps& caps) {
  if (domain.empty()) return stabilize_map(g, domain, u, {}, caps);
  FiberSpec spec;
  spec.nielsen = domain.front().nielsen + u.nielsen;
  EnumerationOptions eo;
  eo.caps = caps;
  const auto codomain = enumerate_classes(g, spec, eo);
  return stabilize_map(g, domain, u, codomain, caps);
}

// Stabilisation chain ------------------------------------------------------

StabilizationChain::StabilizationChain(std::shared_ptr<const ClassTower> tower,
                                       NielsenType base, Stabilizer u)
    : tower_(std::move(tower)), base_(std::move(base)), u_(std::move(u)) {
  if (!tower_->in_box(base_)) {
    throw PreconditionError("chain base " + base_.to_string() +
                            " lies outside the tower box");
  }
  if (u_.vector.empty()) {
    levels_ = 0;
    return;
  }
  NielsenType nu = base_;
  while (true) {
    nu += u_.nielsen;
    if (!tower_->in_box(nu)) break;
    ++levels_;
  }
}

std::shared_ptr<const ClassTower> StabilizationChain::make_tower(
    const FiniteGroup& g, const NielsenType& base, const Stabilizer& u,
    std::uint32_t levels, const NielsenType& extra, const Caps& caps,
    unsigned workers) {
  NielsenType box = base + extra + levels * u.nielsen;
  return std::make_shared<const ClassTower>(g, support(box), box,
                                            tower_options(caps, workers));
}

NielsenType StabilizationChain::nielsen(std::uint32_t n) const {
  return base_ + n * u_.nielsen;
}

std::size_t StabilizationChain::type(std::uint32_t n) const {
  return tower_->type_index(nielsen(n));
}

std::vector<std::uint32_t> StabilizationChain::classes(
    std::uint32_t n, std::optional<std::uint32_t> h) const {
  const auto cls = tower_->classes(type(n));
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < cls.size(); ++i) {
    if (!h || cls[i].subgroup == *h) out.push_back(i);
  }
  return out;
}

StabilizationChain::LevelMap StabilizationChain::map(
    std::uint32_t n, std::optional<std::uint32_t> h) const {
  LevelMap out;
  const std::size_t from = type(n);
  std::optional<std::uint32_t> target_h;
  if (h) {
    auto elems = tower_->subgroup(*h).elements();
    elems.insert(elems.end(), u_.vector.begin(), u_.vector.end());
    target_h = tower_->find_subgroup(subgroup_closure(tower_->group(), elems));
  }
  const auto domain = classes(n, h);
  std::vector<std::uint32_t> codomain;
  if (!h || target_h) codomain = classes(n + 1, h ? target_h : std::nullopt);
  out.domain_size = domain.size();
  out.codomain_size = codomain.size();

  std::vector<bool> hit(tower_->classes(type(n + 1)).size(), false);
  out.injective = true;
  std::size_t hits = 0;
  for (std::uint32_t c : domain) {
    const auto ref = tower_->append(ClassTower::ClassRef{from, c}, u_.vector.span());
    if (hit[ref.index]) {
      out.injective = false;
    } else {
      hit[ref.index] = true;
      ++hits;
    }
  }
  out.surjective = hits == codomain.size();
  return out;
}

// Stability bounds ---------------------------------------------------------

std::optional<NielsenType> StabilityReport::stable_level() const {
  if (!bound) return std::nullopt;
  return base + *bound * stabilizer.nielsen;
}

namespace {

// Least m with maps m…window-1 all bijective; `ok(n)` tests map n → n+1.
template <typename F>
std::optional<std::uint32_t> least_stable(std::uint32_t window, F ok) {
  if (window == 0) return std::nullopt;
  std::uint32_t m = window;
  while (m > 0 && ok(m - 1)) --m;
  if (m == window) return std::nullopt;
  return m;
}

std::string exhausted(std::uint32_t window) {
  return "no bijective stabilisation map closes the window of " +
         std::to_string(window) + " levels";
}

}  // namespace

StabilityReport find_stability_bound(const FiniteGroup& g,
                                     const GammaSet& gamma,
                                     const StabilityOptions& opts) {
  StabilityReport report;
  report.stabilizer = u_gamma(g, gamma);
  report.base = opts.base.value_or(report.stabilizer.nielsen);
  report.window = opts.window;
  require_generating(g, report.stabilizer);
  require_on_gamma(gamma, report.base, "stability base");
  if (report.base.num_classes() != g.class_count()) {
    throw PreconditionError("stability base has the wrong number of classes");
  }
  if (opts.window == 0) {
    report.diagnostic = "empty window: no levels explored";
    return report;
  }

  NielsenType extra = NielsenType::zero(g.class_count());
  if (opts.uniform) {
    for (std::uint32_t c : gamma.class_ids()) extra[c] = 1;
  }
  auto tower = StabilizationChain::make_tower(
      g, report.base, report.stabilizer, opts.window, extra, opts.caps,
      opts.workers);
  const std::uint32_t full = tower->full_group_id();
  const std::optional<std::uint32_t> gen =
      full == ~0u ? std::optional<std::uint32_t>{} : full;

  auto chain_bound = [&](const StabilizationChain& chain,
                         std::vector<LevelRecord>* records)
      -> std::optional<std::uint32_t> {
    std::vector<bool> bij(opts.window, false);
    for (std::uint32_t n = 0; n <= opts.window; ++n) {
      LevelRecord rec;
      if (records) {
        rec.level = n;
        rec.nielsen = chain.nielsen(n);
        rec.class_count = chain.classes(n).size();
        rec.generating_count = gen ? chain.classes(n, gen).size() : 0;
      }
      if (n < opts.window) {
        // Images of generating classes generate; with no generating class
        // at all both sides are empty.
        StabilizationChain::LevelMap m;
        if (gen) {
          m = chain.map(n, gen);
        } else {
          m.injective = m.surjective = true;
        }
        bij[n] = m.bijective();
        if (records) {
          rec.surjective = m.surjective;
          rec.injective = m.injective;
          rec.bijective = m.bijective();
          rec.full_bijective = chain.map(n).bijective();
        }
      }
      if (records) records->push_back(std::move(rec));
    }
    return least_stable(opts.window, [&](std::uint32_t n) { return bij[n]; });
  };

  StabilizationChain chain(tower, report.base, report.stabilizer);
  report.bound = chain_bound(chain, &report.levels);
  if (report.bound) {
    report.confident = opts.window - *report.bound >= opts.confirmations;
  } else {
    report.diagnostic = exhausted(opts.window);
  }

  if (opts.uniform && report.bound) {
    std::uint32_t worst = *report.bound;
    bool all = true;
    for (std::uint32_t c : gamma.class_ids()) {
      NielsenType b = report.base;
      b[c] += 1;
      StabilizationChain shifted(tower, b, report.stabilizer);
      auto m = chain_bound(shifted, nullptr);
      for (std::uint32_t n = 0; n <= opts.window && gen; ++n) {
        report.shifted_generating.emplace_back(shifted.nielsen(n),
                                               shifted.classes(n, gen).size());
      }
      if (!m) {
        all = false;
        break;
      }
      worst = std::max(worst, *m);
    }
    if (all) report.uniform_bound = worst;
  }
  return report;
}

StabilityReport find_family_stability_bound(const FiniteGroup& g,
                                            const ActionFamily& family,
                                            const StabilityOptions& opts) {
  if (!family.is_marked()) {
    throw PreconditionError("stability search needs a family without extra moves");
  }
  const GammaSet gamma = make_gamma_all_nontrivial(g);
  StabilityReport report;
  report.stabilizer = u_gamma(g, gamma);
  // Tails need ν ≥ (r - s + 1)·ν_Γ.
  const auto width = static_cast<std::uint32_t>(family.prefix_width -
                                                family.nielsen_skip + 1);
  report.base = opts.base.value_or(width * report.stabilizer.nielsen);
  report.window = opts.window;
  require_on_gamma(gamma, report.base, "stability base");
  if (opts.window == 0) {
    report.diagnostic = "empty window: no levels explored";
    return report;
  }
  std::size_t prefixes = 1;
  for (std::size_t i = 0; i < family.prefix_width; ++i) prefixes *= g.order();

  auto tower = StabilizationChain::make_tower(
      g, report.base, report.stabilizer, opts.window,
      NielsenType::zero(g.class_count()), opts.caps, opts.workers);
  StabilizationChain chain(tower, report.base, report.stabilizer);
  std::vector<bool> bij(opts.window, false);
  for (std::uint32_t n = 0; n <= opts.window; ++n) {
    LevelRecord rec;
    rec.level = n;
    rec.nielsen = chain.nielsen(n);
    rec.class_count = prefixes * chain.classes(n).size();
    rec.generating_count = rec.class_count;
    if (n < opts.window) {
      // The prefix is carried along unchanged, so the product map is
      // bijective exactly when the tail map is.
      const auto m = chain.map(n);
      rec.surjective = m.surjective;
      rec.injective = m.injective;
      rec.bijective = m.bijective();
      rec.full_bijective = m.bijective();
      bij[n] = m.bijective();
    }
    report.levels.push_back(std::move(rec));
  }
  report.bound = least_stable(opts.window, [&](std::uint32_t n) { return bij[n]; });
  if (report.bound) {
    report.confident = opts.window - *report.bound >= opts.confirmations;
  } else {
    report.diagnostic = exhausted(opts.window);
  }
  return report;
}

// Stable equivalence -------------------------------------------------------

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kIndeterminate: return "indeterminate";
  }
  return "indeterminate";
}

StableEquivalence::StableEquivalence(const FiniteGroup& g, NielsenType nu,
                                     Stabilizer u, StableOptions opts)
    : group_(&g),
      nu_(std::move(nu)),
      opts_(opts),
      chain_(StabilizationChain::make_tower(
                 g, nu_, u, opts.max_level + opts.confirmations,
                 NielsenType::zero(g.class_count()), opts.caps, opts.workers),
             nu_, u) {}

bool StableEquivalence::stretch_bijective(std::uint32_t from,
                                          std::uint32_t h) const {
  for (std::uint32_t n = from; n < from + opts_.confirmations; ++n) {
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = memo_.find({h, n});
      if (it != memo_.end()) {
        if (!it->second) return false;
        continue;
      }
    }
    const bool ok = chain_.map(n, h).bijective();
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_[{h, n}] = ok;
    if (!ok) return false;
  }
  return true;
}

StableResult StableEquivalence::decide(const HurwitzVector& v,
                                       const HurwitzVector& w) const {
  const FiniteGroup& g = *group_;
  if (nielsen(g, v) != nielsen(g, w) || evaluate(g, v) != evaluate(g, w)) {
    return {Verdict::kFalse, 0, "Nielsen types or evaluations differ"};
  }
  if (nielsen(g, v) != nu_) {
    throw PreconditionError("tuple Nielsen type " + nielsen(g, v).to_string() +
                            " does not match the context " + nu_.to_string());
  }
  const ClassTower& tower = chain_.tower();
  const Stabilizer& u = chain_.stabilizer();
  const SubgroupMask hu = subgroup_closure(g, u.vector.span());

  auto a = tower.classify(v.span());
  auto b = tower.classify(w.span());
  const std::uint32_t last = u.vector.empty() ? 0 : opts_.max_level;
  for (std::uint32_t l = 0; l <= last; ++l) {
    if (l > 0) {
      a = tower.append(a, u.vector.span());
      b = tower.append(b, u.vector.span());
    }
    if (a == b) return {Verdict::kTrue, l, "braid equivalent after stabilisation"};
    const std::uint32_t ha = tower.info(a).subgroup;
    const std::uint32_t hb = tower.info(b).subgroup;
    const bool absorbed = hu.is_subset_of(tower.subgroup(ha)) &&
                          hu.is_subset_of(tower.subgroup(hb));
    if (!absorbed) continue;
    if (ha != hb) {
      return {Verdict::kFalse, l, "generated subgroups differ and stay fixed"};
    }
    if (u.vector.empty()) {
      return {Verdict::kFalse, l, "distinct classes and the stabiliser is empty"};
    }
    if (stretch_bijective(l, ha)) {
      return {Verdict::kFalse, l,
              "distinct classes at a level where further stabilisation is "
              "bijective over " + std::to_string(opts_.confirmations) +
                  " steps"};
    }
  }
  return {Verdict::kIndeterminate, last,
          "no stable level reached within " + std::to_string(last) +
              " stabilisation steps"};
}

StableResult stable_equivalent(const FiniteGroup& g, const HurwitzVector& v,
                               const HurwitzVector& w, const Stabilizer& u,
                               const StableOptions& opts) {
  const NielsenType nv = nielsen(g, v);
  if (nv != nielsen(g, w) || evaluate(g, v) != evaluate(g, w)) {
    return {Verdict::kFalse, 0, "Nielsen types or evaluations differ"};
  }
  StableEquivalence ctx(g, nv, u, opts);
  return ctx.decide(v, w);
}

// Fraction groups ----------------------------------------------------------

FractionCheck fraction_group_check(const FiniteGroup& g, const GammaSet& gamma,
                                   std::uint32_t max_power,
                                   std::uint64_t max_states) {
  const std::vector<Element> elems = gamma.elements();
  if (subgroup_closure(g, elems).order() != g.order()) {
    throw PreconditionError("Gamma does not generate the group");
  }
  const Stabilizer u = u_gamma(g, gamma);
  FractionCheck out;
  for (std::uint32_t n = 1; n <= max_power; ++n) {
    const HurwitzVector start = repeat(u.vector, n);
    const std::size_t d = start.size();
    std::map<Element, HurwitzVector> found;
    std::set<std::vector<Element>> seen{start.entries()};
    std::deque<std::vector<Element>> queue{start.entries()};
    auto note = [&](const std::vector<Element>& x) {
      if (gamma.contains(x[0]) && !found.count(x[0])) {
        found.emplace(x[0], HurwitzVector(x));
      }
    };
    note(start.entries());
    while (!queue.empty() && found.size() < elems.size() &&
           seen.size() < max_states) {
      const auto x = std::move(queue.front());
      queue.pop_front();
      // Entry j moved to the front by σ_{j-1}…σ_1, then the single moves.
      for (std::size_t j = 2; j <= d; ++j) {
        auto y = x;
        for (std::size_t i = j - 1; i >= 1; --i) apply_sigma(g, y, i);
        if (seen.insert(y).second) {
          note(y);
          queue.push_back(std::move(y));
        }
      }
      for (std::size_t i = 1; i < d; ++i) {
        auto y = x;
        apply_sigma_inv(g, y, i);
        if (seen.insert(y).second) {
          note(y);
          queue.push_back(std::move(y));
        }
      }
    }
    if (found.size() == elems.size()) {
      out.verdict = Verdict::kTrue;
      out.power = n;
      for (Element a : elems) out.witnesses.push_back(found.at(a));
      return out;
    }
  }
  out.verdict = Verdict::kIndeterminate;
  out.power = max_power;
  return out;
}

StableResult adj_word_equal(const FiniteGroup& g, const GammaSet& gamma,
                            const HurwitzVector& v, const HurwitzVector& w,
                            const StableOptions& opts) {
  for (const HurwitzVector* x : {&v, &w}) {
    for (Element a : *x) {
      if (!gamma.contains(a)) {
        throw PreconditionError("entry " + g.name(a) + " is not in Gamma");
      }
    }
  }
  if (nielsen(g, v) != nielsen(g, w)) {
    return {Verdict::kFalse, 0, "Nielsen types differ"};
  }
  const auto check = fraction_group_check(g, gamma);
  if (check.verdict != Verdict::kTrue) {
    throw PreconditionError("fraction group check did not succeed for Gamma");
  }
  return stable_equivalent(g, v, w, u_gamma(g, gamma), opts);
}

std::optional<HurwitzVector> factor_through(const FiniteGroup& g,
                                            const HurwitzVector& w,
                                            const HurwitzVector& u,
                                            const Caps& caps) {
  const NielsenType nw = nielsen(g, w);
  if (!nielsen(g, u).leq(nw)) return std::nullopt;
  ClassTower tower(g, support(nw), nw, tower_options(caps, 1));
  std::set<ClassTower::ClassRef> current{tower.classify(w.span())};
  for (std::size_t j = u.size(); j-- > 0;) {
    std::set<ClassTower::ClassRef> next;
    for (const auto& c : current) {
      for (const auto& [prefix, letter] : tower.last_letter_splits(c)) {
        if (letter == u[j]) next.insert(prefix);
      }
    }
    current = std::move(next);
    if (current.empty()) return std::nullopt;
  }
  const std::uint32_t hw = tower.info(tower.classify(w.span())).subgroup;
  for (const auto& c : current) {
    if (tower.info(c).subgroup == hw) return tower.info(c).canonical;
  }
  return std::nullopt;
}

}  // namespace hurwitz
