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

#include "hurwitz/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz {

// ---------------------------------------------------------------------------
// SubgroupMask / GammaSet

SubgroupMask::SubgroupMask(std::vector<bool> member)
    : member_(std::move(member)),
      order_(static_cast<std::size_t>(
          std::count(member_.begin(), member_.end(), true))) {}

std::vector<Element> SubgroupMask::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

bool SubgroupMask::is_subset_of(const SubgroupMask& other) const {
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i] && !other.member_[i]) return false;
  }
  return true;
}

GammaSet::GammaSet(std::vector<bool> member,
                   std::vector<std::uint32_t> class_ids)
    : member_(std::move(member)), class_ids_(std::move(class_ids)) {
  std::sort(class_ids_.begin(), class_ids_.end());
}

bool GammaSet::contains_class(std::uint32_t c) const {
  return std::binary_search(class_ids_.begin(), class_ids_.end(), c);
}

std::vector<Element> GammaSet::elements() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::size_t GammaSet::size() const {
  return static_cast<std::size_t>(
      std::count(member_.begin(), member_.end(), true));
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t order,
                                    std::vector<Element> table,
                                    std::vector<std::string> names,
                                    const ValidationOptions& opts) {
  if (order == 0) throw GroupError("group order must be positive");
  if (table.size() != order * order) {
    throw GroupError("multiplication table has " + std::to_string(table.size()) +
                     " entries, expected " + std::to_string(order * order));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      throw GroupError("table entry mul[" + std::to_string(i / order) + "][" +
                       std::to_string(i % order) + "] = " +
                       std::to_string(table[i]) + " is out of range");
    }
  }
  if (!names.empty()) {
    if (names.size() != order) {
      throw GroupError("names list has " + std::to_string(names.size()) +
                       " entries, expected " + std::to_string(order));
    }
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw GroupError("element names must be unique");
    }
    if (!sorted.empty() && sorted.front().empty()) {
      throw GroupError("element names must be non-empty");
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };

  bool zero_is_identity = true;
  for (std::size_t x = 0; x < order && zero_is_identity; ++x) {
    zero_is_identity = at(0, x) == x && at(x, 0) == x;
  }
  if (!zero_is_identity) {
    for (std::size_t e = 1; e < order; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < order && ok; ++x) {
        ok = at(e, x) == x && at(x, e) == x;
      }
      if (ok) {
        throw GroupError("identity is element " + std::to_string(e) +
                         ", not index 0");
      }
    }
    throw GroupError("table has no two-sided identity");
  }

  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      throw GroupError("associativity fails for triple " + triple(a, b, c));
    }
  };
  if (order <= opts.exhaustive_order_cap) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        for (std::size_t c = 0; c < order; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (std::size_t s = 0; s < opts.samples; ++s) {
      check(pick(rng), pick(rng), pick(rng));
    }
  }

  FiniteGroup g;
  g.inv_.assign(order, 0);
  for (std::size_t x = 0; x < order; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < order; ++y) {
      if (at(x, y) == 0 && at(y, x) == 0) {
        g.inv_[x] = static_cast<Element>(y);
        found = true;
        break;
      }
    }
    if (!found) {
      throw GroupError("element " + std::to_string(x) + " has no inverse");
    }
  }
  g.order_ = order;
  g.mul_ = std::move(table);
  g.names_ = std::move(names);
  g.derive();
  return g;
}

void FiniteGroup::derive() {
  const std::size_t n = order_;
  elem_order_.assign(n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    Element p = static_cast<Element>(x);
    std::uint32_t k = 1;
    while (p != kIdentity) {
      p = mul(p, static_cast<Element>(x));
      ++k;
    }
    elem_order_[x] = k;
  }

  abelian_ = true;
  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (std::size_t b = a + 1; b < n && abelian_; ++b)
      abelian_ = mul(a, b) == mul(b, a);

  constexpr std::uint32_t kUnset = ~0u;
  classes_ = {};
  classes_.class_of.assign(n, kUnset);
  for (std::size_t x = 0; x < n; ++x) {
    if (classes_.class_of[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(classes_.count());
    std::vector<Element> members;
    for (std::size_t b = 0; b < n; ++b) {
      Element c = conj(static_cast<Element>(x), static_cast<Element>(b));
      if (classes_.class_of[c] == kUnset) {
        classes_.class_of[c] = id;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.representatives.push_back(static_cast<Element>(x));
    classes_.sizes.push_back(members.size());
    classes_.members.push_back(std::move(members));
  }
}

Element FiniteGroup::power(Element a, std::int64_t k) const {
  if (k < 0) {
    a = inv_[a];
    k = -k;
  }
  k %= elem_order_[a];
  Element out = kIdentity;
  for (std::int64_t i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

std::string FiniteGroup::name(Element a) const {
  return names_.empty() ? std::to_string(a) : names_[a];
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Element>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Builtin families

namespace {

struct RawGroup {
  std::size_t order = 0;
  std::vector<Element> table;
  std::vector<std::string> names;
};

RawGroup cyclic(std::size_t n) {
  RawGroup g{n, std::vector<Element>(n * n), {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.table[a * n + b] = static_cast<Element>((a + b) % n);
  g.names.push_back("e");
  if (n > 1) g.names.push_back("g");
  for (std::size_t k = 2; k < n; ++k) g.names.push_back("g^" + std::to_string(k));
  return g;
}

RawGroup dihedral(std::size_t n) {
  const std::size_t order = 2 * n;
  RawGroup g{order, std::vector<Element>(order * order), {}};
  // r^a at a, s r^a at n + a. r^a s = s r^{-a}.
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const bool xs = x >= n, ys = y >= n;
      const std::size_t a = x % n, b = y % n;
      std::size_t out;
      if (!xs && !ys) out = (a + b) % n;
      else if (!xs && ys) out = n + (n - a + b) % n;
      else if (xs && !ys) out = n + (a + b) % n;
      else out = (n - a + b) % n;
      g.table[x * order + y] = static_cast<Element>(out);
    }
  }
  auto rpow = [](std::size_t k) -> std::string {
    if (k == 0) return "";
    if (k == 1) return "r";
    return "r^" + std::to_string(k);
  };
  for (std::size_t k = 0; k < n; ++k) g.names.push_back(k == 0 ? "e" : rpow(k));
  for (std::size_t k = 0; k < n; ++k) g.names.push_back("s" + rpow(k));
  return g;
}

using Perm = std::vector<int>;

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      out += static_cast<char>('1' + j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool is_even(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

RawGroup permutations(std::size_t n, bool even_only) {
  std::vector<Perm> perms;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<Element>(i);
  }
  const std::size_t order = perms.size();
  RawGroup g{order, std::vector<Element>(order * order), {}};
  Perm prod(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      // Left to right: apply a, then b.
      for (std::size_t x = 0; x < n; ++x) {
        prod[x] = perms[b][static_cast<std::size_t>(perms[a][x])];
      }
      g.table[a * order + b] = index.at(prod);
    }
  }
  for (const Perm& q : perms) g.names.push_back(cycle_notation(q));
  return g;
}

RawGroup quaternion() {
  // Index 2·u + s for unit u ∈ {1, i, j, k} and sign bit s.
  // kUnit[u][v] = (unit, sign) of u·v.
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kUnit = {{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  RawGroup g{8, std::vector<Element>(64), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}};
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const auto [u, s] = kUnit[static_cast<std::size_t>(x / 2)][static_cast<std::size_t>(y / 2)];
      const int sign = (s + x % 2 + y % 2) % 2;
      g.table[static_cast<std::size_t>(x * 8 + y)] = static_cast<Element>(2 * u + sign);
    }
  }
  return g;
}

RawGroup product(const RawGroup& a, const RawGroup& b) {
  const std::size_t order = a.order * b.order;
  RawGroup g{order, std::vector<Element>(order * order), {}};
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t xa = x / b.order, xb = x % b.order;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t ya = y / b.order, yb = y % b.order;
      g.table[x * order + y] = static_cast<Element>(
          a.table[xa * a.order + ya] * b.order + b.table[xb * b.order + yb]);
    }
  }
  for (std::size_t x = 0; x < order; ++x) {
    g.names.push_back(a.names[x / b.order] + ":" + b.names[x % b.order]);
  }
  return g;
}

constexpr std::size_t kMaxBuiltinOrder = 4096;

RawGroup factor(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw SpecError("group spec '" + std::string(spec) +
                    "' is not of the form family:N");
  }
  const std::string_view family = spec.substr(0, colon);
  const std::string_view param = spec.substr(colon + 1);
  std::size_t n = 0;
  const auto [ptr, ec] =
      std::from_chars(param.data(), param.data() + param.size(), n);
  if (ec != std::errc() || ptr != param.data() + param.size()) {
    throw SpecError("group spec '" + std::string(spec) +
                    "' has a non-numeric parameter");
  }
  auto out_of_range = [&](const char* range) {
    return SpecError("parameter of '" + std::string(spec) +
                     "' out of supported range (" + range + ")");
  };
  if (family == "cyclic") {
    if (n < 1 || n > kMaxBuiltinOrder) throw out_of_range("1..4096");
    return cyclic(n);
  }
  if (family == "dihedral") {
    if (n < 2 || 2 * n > kMaxBuiltinOrder) throw out_of_range("2..2048");
    return dihedral(n);
  }
  if (family == "sym" || family == "alt") {
    if (n < 1 || n > 6) throw out_of_range("1..6");
    return permutations(n, family == "alt");
  }
  if (family == "quaternion") {
    if (n != 8) throw out_of_range("only quaternion:8");
    return quaternion();
  }
  throw SpecError("unknown group family '" + std::string(family) + "'");
}

}  // namespace

FiniteGroup build_builtin(std::string_view spec) {
  if (spec.empty()) throw SpecError("empty group spec");
  RawGroup acc;
  bool first = true;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find('x', start);
    if (end == std::string_view::npos) end = spec.size();
    RawGroup f = factor(spec.substr(start, end - start));
    if (first) {
      acc = std::move(f);
      first = false;
    } else {
      if (acc.order * f.order > kMaxBuiltinOrder) {
        throw SpecError("product '" + std::string(spec) +
                        "' exceeds the supported order 4096");
      }
      acc = product(acc, f);
    }
    start = end + 1;
  }
  return FiniteGroup::from_table(acc.order, std::move(acc.table),
                                 std::move(acc.names));
}

// ---------------------------------------------------------------------------
// Subgroups

SubgroupMask subgroup_closure(const FiniteGroup& g,
                              std::span<const Element> seed) {
  std::vector<bool> member(g.order(), false);
  std::vector<Element> gens;
  for (Element s : seed) {
    if (s != kIdentity &&
        std::find(gens.begin(), gens.end(), s) == gens.end()) {
      gens.push_back(s);
    }
  }
  // In a finite group the monoid generated by the seed is the subgroup.
  std::vector<Element> frontier{kIdentity};
  member[kIdentity] = true;
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element s : gens) {
      const Element y = g.mul(x, s);
      if (!member[y]) {
        member[y] = true;
        frontier.push_back(y);
      }
    }
  }
  return SubgroupMask(std::move(member));
}

SubgroupMask whole_group(const FiniteGroup& g) {
  return SubgroupMask(std::vector<bool>(g.order(), true));
}

SubgroupMask commutator_subgroup(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> commutators;
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      const Element c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  return subgroup_closure(g, commutators);
}

GammaSet make_gamma(const FiniteGroup& g, std::span<const Element> reps) {
  if (reps.empty()) {
    throw PreconditionError("gamma needs at least one class representative");
  }
  std::vector<bool> member(g.order(), false);
  std::vector<std::uint32_t> ids;
  for (Element r : reps) {
    if (r >= g.order()) {
      throw PreconditionError("gamma representative " + std::to_string(r) +
                              " is not a group element");
    }
    if (r == kIdentity) {
      throw PreconditionError("gamma may not contain the identity");
    }
    const std::uint32_t c = g.class_of(r);
    if (std::find(ids.begin(), ids.end(), c) != ids.end()) continue;
    ids.push_back(c);
    for (Element x : g.classes().members[c]) member[x] = true;
  }
  return GammaSet(std::move(member), std::move(ids));
}

GammaSet make_gamma_all_nontrivial(const FiniteGroup& g) {
  if (g.order() == 1) {
    throw PreconditionError("the trivial group has no non-trivial classes");
  }
  std::vector<bool> member(g.order(), true);
  member[kIdentity] = false;
  std::vector<std::uint32_t> ids;
  for (std::uint32_t c = 1; c < g.class_count(); ++c) ids.push_back(c);
  return GammaSet(std::move(member), std::move(ids));
}

}  // namespace hurwitz
