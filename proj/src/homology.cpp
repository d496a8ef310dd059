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

#include "hurwitz/homology.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::size_t power(std::span<const std::size_t> table, std::size_t n,
                  std::size_t identity, std::size_t x, std::uint64_t e) {
  std::size_t r = identity;
  for (std::uint64_t i = 0; i < e; ++i) r = table[r * n + x];
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<std::uint64_t> abelian_invariants(std::span<const std::size_t> table,
                                              std::size_t n,
                                              std::size_t identity) {
  // For each prime p, #{x : x^{p^j} = 1} = p^{s_j} and s_j - s_{j-1} cyclic
  // p-factors have exponent ≥ j.
  std::vector<std::vector<std::uint32_t>> exponents;  // per prime, descending
  const auto primes = prime_factors(n);
  for (std::uint64_t p : primes) {
    std::uint32_t total = 0;
    for (std::uint64_t m = n; m % p == 0; m /= p) ++total;
    std::vector<std::uint32_t> s{0};
    std::uint64_t pj = 1;
    while (s.back() < total) {
      pj *= p;
      std::size_t killed = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (power(table, n, identity, x, pj) == identity) ++killed;
      }
      std::uint32_t sj = 0;
      for (std::size_t c = killed; c > 1; c /= p) ++sj;
      if (sj <= s.back()) throw Error("torsor group is not abelian of order " +
                                      std::to_string(n));
      s.push_back(sj);
    }
    // at_least[j] = number of factors with exponent ≥ j.
    std::vector<std::uint32_t> exps;
    for (std::size_t j = s.size() - 1; j >= 1; --j) {
      const std::uint32_t at_least = s[j] - s[j - 1];
      const std::uint32_t above = j + 1 < s.size() ? s[j + 1] - s[j] : 0;
      for (std::uint32_t i = above; i < at_least; ++i) {
        exps.push_back(static_cast<std::uint32_t>(j));
      }
    }
    exponents.push_back(std::move(exps));
  }
  std::size_t rank = 0;
  for (const auto& e : exponents) rank = std::max(rank, e.size());
  std::vector<std::uint64_t> out(rank, 1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < exponents[i].size(); ++j) {
      for (std::uint32_t t = 0; t < exponents[i][j]; ++t) out[j] *= primes[i];
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

TorsorGroup::TorsorGroup(const FiniteGroup& g, const GammaSet& gamma,
                         std::uint32_t k, const Caps& caps, unsigned workers)
    : group_(&g), k_(k), u_(u_gamma(g, gamma)) {
  if (k == 0) throw PreconditionError("torsor level must be positive");
  if (subgroup_closure(g, u_.vector.span()).order() != g.order()) {
    throw PreconditionError("u_Gamma does not generate the group");
  }
  uk_ = repeat(u_.vector, k);
  const NielsenType box = (2 * k) * u_.nielsen;
  tower_ = std::make_unique<ClassTower>(
      g, gamma.class_ids(), box,
      TowerOptions{caps.tower_cells, std::max(1u, workers)});
  level_type_ = tower_->type_index(level());
  const std::uint32_t full = tower_->full_group_id();
  const auto cls = tower_->classes(level_type_);
  for (std::uint32_t c = 0; c < cls.size(); ++c) {
    if (cls[c].subgroup != full) continue;
    generating_.push_back(c);
    const Ref r = tower_->append(Ref{level_type_, c}, uk_.span());
    if (!preimage_.emplace(r.index, c).second) {
      throw Error("torsor composition is not unique: u_Gamma^" +
                  std::to_string(k) + " is not injective at " +
                  level().to_string());
    }
    if (cls[c].evaluation == kIdentity) element_class_.push_back(c);
  }
  std::sort(element_class_.begin(), element_class_.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return cls[a].canonical < cls[b].canonical;
            });
  std::map<std::uint32_t, std::size_t> element_of;
  for (std::size_t i = 0; i < element_class_.size(); ++i) {
    elements_.push_back(orbit_class(*tower_, Ref{level_type_, element_class_[i]}));
    element_of[element_class_[i]] = i;
  }
  identity_ = index_of(uk_);

  const std::size_t n = elements_.size();
  table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Ref r = tower_->append(Ref{level_type_, element_class_[x]},
                                   elements_[y].canonical.span());
      const auto z = unstabilise(r);
      if (!z || !element_of.count(*z)) {
        throw Error("torsor product leaves the stable range at " +
                    level().to_string());
      }
      table_[x * n + y] = element_of.at(*z);
    }
  }
}

std::optional<std::uint32_t> TorsorGroup::unstabilise(Ref r) const {
  auto it = preimage_.find(r.index);
  if (it == preimage_.end()) return std::nullopt;
  return it->second;
}

std::size_t TorsorGroup::index_of(const HurwitzVector& v) const {
  const Ref r = tower_->classify(v.span());
  if (r.type != level_type_) {
    throw PreconditionError("tuple is not at the torsor level " +
                            level().to_string());
  }
  auto it = std::find(element_class_.begin(), element_class_.end(), r.index);
  if (it == element_class_.end()) {
    throw PreconditionError("tuple is not a generating class with evaluation 1");
  }
  return static_cast<std::size_t>(it - element_class_.begin());
}

std::uint64_t TorsorGroup::element_order(std::size_t x) const {
  std::uint64_t o = 1;
  for (std::size_t y = x; y != identity_; y = compose(y, x)) ++o;
  return o;
}

std::vector<std::uint64_t> TorsorGroup::invariant_factors() const {
  return abelian_invariants(table_, elements_.size(), identity_);
}

std::vector<TorsorGroup::Slice> TorsorGroup::slices() const {
  const auto cls = tower_->classes(level_type_);
  std::map<Element, std::vector<std::uint32_t>> by_ev;
  for (std::uint32_t c : generating_) by_ev[cls[c].evaluation].push_back(c);
  std::vector<Slice> out;
  for (auto& [ev, members] : by_ev) {
    std::sort(members.begin(), members.end(), [&](std::uint32_t a, std::uint32_t b) {
      return cls[a].canonical < cls[b].canonical;
    });
    Slice s;
    s.evaluation = ev;
    std::map<std::uint32_t, std::size_t> position;
    for (std::size_t i = 0; i < members.size(); ++i) {
      s.classes.push_back(orbit_class(*tower_, Ref{level_type_, members[i]}));
      position[members[i]] = i;
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    s.coordinate.assign(members.size(), kNone);
    bool injective = true;
    for (std::size_t x = 0; x < elements_.size(); ++x) {
      const Ref r = tower_->append(Ref{level_type_, members.front()},
                                   elements_[x].canonical.span());
      const auto z = unstabilise(r);
      if (!z || !position.count(*z)) {
        injective = false;
        continue;
      }
      std::size_t& slot = s.coordinate[position.at(*z)];
      if (slot != kNone) injective = false;
      slot = x;
    }
    s.simply_transitive =
        injective && members.size() == elements_.size() &&
        std::none_of(s.coordinate.begin(), s.coordinate.end(),
                     [](std::size_t c) { return c == kNone; });
    out.push_back(std::move(s));
  }
  return out;
}

H2Report h2_order(const FiniteGroup& g, const GammaSet& gamma,
                  const H2Options& opts) {
  H2Report report;
  report.stability = find_stability_bound(g, gamma, opts.stability);
  const StabilityReport& st = report.stability;
  if (!st.bound) {
    throw Indeterminate("no stability bound: " + st.diagnostic);
  }
  const std::uint32_t m = *st.bound;
  report.stable_level = *st.stable_level();
  report.commutator_order = commutator_subgroup(g).order();
  report.generating_count = st.levels[m].generating_count;
  if (report.generating_count % report.commutator_order != 0) {
    throw Error("stable generating-class count " +
                std::to_string(report.generating_count) +
                " is not a multiple of |[G,G]| = " +
                std::to_string(report.commutator_order));
  }
  report.order = report.generating_count / report.commutator_order;

  auto check = [&](const NielsenType& nu, std::uint64_t count) {
    if (count != report.generating_count) {
      throw Error("generating-class count " + std::to_string(count) + " at " +
                  nu.to_string() + " differs from " +
                  std::to_string(report.generating_count) + " at " +
                  report.stable_level.to_string());
    }
    report.cross_checks.emplace_back(nu, count);
  };
  for (std::uint32_t n = m + 1; n <= st.window; ++n) {
    check(st.levels[n].nielsen, st.levels[n].generating_count);
  }
  if (st.uniform_bound) {
    const std::size_t per = st.window + 1;
    for (std::size_t i = 0; i < st.shifted_generating.size(); ++i) {
      if (i % per >= *st.uniform_bound) {
        check(st.shifted_generating[i].first, st.shifted_generating[i].second);
      }
    }
  }

  const NielsenType& step = st.stabilizer.nielsen;
  std::uint32_t k = 1;
  while (!report.stable_level.leq(k * step)) ++k;
  report.multiple = k;
  report.base_point = repeat(st.stabilizer.vector, k);
  return report;
}

H2Report h2_structure(const FiniteGroup& g, const GammaSet& gamma,
                      const H2Options& opts) {
  H2Report report = h2_order(g, gamma, opts);
  TorsorGroup torsor(g, gamma, report.multiple, opts.stability.caps,
                     opts.stability.workers);
  if (torsor.size() != report.order) {
    throw Error("torsor group has " + std::to_string(torsor.size()) +
                " elements but |H2| = " + std::to_string(report.order));
  }
  report.structure = torsor.invariant_factors();
  report.structure_computed = true;
  return report;
}

}  // namespace hurwitz
