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

#include "hurwitz/orbit.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Mixed-radix packing into 64 bits when |G|^d fits.
struct PackedCodec {
  using Key = std::uint64_t;
  std::uint64_t radix;

  Key encode(std::span<const Element> v) const {
    Key k = 0;
    for (std::size_t i = v.size(); i-- > 0;) k = k * radix + v[i];
    return k;
  }
  void decode(Key k, std::span<Element> out) const {
    for (auto& x : out) {
      x = static_cast<Element>(k % radix);
      k /= radix;
    }
  }
};

struct StringCodec {
  using Key = std::string;

  Key encode(std::span<const Element> v) const {
    Key k(v.size() * 2, '\0');
    for (std::size_t i = 0; i < v.size(); ++i) {
      k[2 * i] = static_cast<char>(v[i] & 0xff);
      k[2 * i + 1] = static_cast<char>((v[i] >> 8) & 0xff);
    }
    return k;
  }
  void decode(const Key& k, std::span<Element> out) const {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<Element>(static_cast<unsigned char>(k[2 * i])) |
               (static_cast<Element>(static_cast<unsigned char>(k[2 * i + 1])) << 8);
    }
  }
};

bool fits_packed(std::size_t n, std::size_t d) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (acc > std::numeric_limits<std::uint64_t>::max() / n) return false;
    acc *= n;
  }
  return true;
}

template <class Fn>
decltype(auto) with_codec(std::size_t n, std::size_t d, Fn&& fn) {
  if (fits_packed(n, d)) return fn(PackedCodec{n});
  return fn(StringCodec{});
}

// BFS over the braid orbit of `start`, recording members in `visited`
// (which may already hold other orbits). Calls on_member for each new
// member; returns the number of members visited.
template <class Codec, class Fn>
std::uint64_t orbit_bfs(const FiniteGroup& g, const Codec& codec,
                        std::unordered_set<typename Codec::Key>& visited,
                        std::span<const Element> start, std::uint64_t cap,
                        Fn&& on_member) {
  const std::size_t d = start.size();
  std::deque<typename Codec::Key> queue;
  auto first = codec.encode(start);
  if (!visited.insert(first).second) return 0;
  queue.push_back(std::move(first));
  std::uint64_t count = 1;
  std::vector<Element> cur(d), next(d);
  auto push = [&](std::span<const Element> v) {
    auto key = codec.encode(v);
    if (visited.insert(key).second) {
      if (++count > cap) throw CapExceeded("orbit exceeded its state cap", count - 1);
      queue.push_back(std::move(key));
    }
  };
  while (!queue.empty()) {
    codec.decode(queue.front(), cur);
    queue.pop_front();
    on_member(std::span<const Element>(cur));
    for (std::size_t i = 1; i < d; ++i) {
      next = cur;
      apply_sigma(g, next, i);
      push(next);
      next = cur;
      apply_sigma_inv(g, next, i);
      push(next);
    }
  }
  return count;
}

void check_entries(const FiniteGroup& g, const HurwitzVector& v) {
  for (Element x : v) {
    if (x >= g.order()) {
      throw PreconditionError("tuple entry " + std::to_string(x) +
                              " is not an element of the group");
    }
  }
}

}  // namespace

OrbitClass orbit(const FiniteGroup& g, const HurwitzVector& v,
                 const Caps& caps) {
  check_entries(g, v);
  OrbitClass out;
  out.canonical = v;
  out.evaluation = evaluate(g, v);
  out.nielsen = nielsen(g, v);
  out.subgroup = generated_subgroup(g, v);
  std::vector<Element> best(v.begin(), v.end());
  out.size = with_codec(g.order(), v.size(), [&](auto codec) {
    std::unordered_set<typename decltype(codec)::Key> visited;
    return orbit_bfs(g, codec, visited, v.span(), caps.orbit_states,
                     [&](std::span<const Element> m) {
                       if (std::lexicographical_compare(m.begin(), m.end(),
                                                        best.begin(), best.end())) {
                         best.assign(m.begin(), m.end());
                       }
                     });
  });
  out.canonical = HurwitzVector(std::move(best));
  return out;
}

std::vector<HurwitzVector> orbit_members(const FiniteGroup& g,
                                         const HurwitzVector& v,
                                         const Caps& caps) {
  check_entries(g, v);
  std::vector<HurwitzVector> members;
  with_codec(g.order(), v.size(), [&](auto codec) {
    std::unordered_set<typename decltype(codec)::Key> visited;
    return orbit_bfs(g, codec, visited, v.span(), caps.orbit_states,
                     [&](std::span<const Element> m) {
                       members.emplace_back(std::vector<Element>(m.begin(), m.end()));
                     });
  });
  return members;
}

HurwitzVector canonical_form(const FiniteGroup& g, const HurwitzVector& v,
                             const Caps& caps) {
  check_entries(g, v);
  if (v.size() <= 1) return v;
  const ClassTower tower = ClassTower::for_box(
      g, nielsen(g, v), TowerOptions{.max_cells = caps.tower_cells});
  return tower.info(tower.classify(v.span())).canonical;
}

bool braid_equivalent(const FiniteGroup& g, const HurwitzVector& v,
                      const HurwitzVector& w, const Caps& caps) {
  check_entries(g, v);
  check_entries(g, w);
  if (v.size() != w.size()) return false;
  if (v == w) return true;
  if (evaluate(g, v) != evaluate(g, w)) return false;
  const NielsenType nu = nielsen(g, v);
  if (nu != nielsen(g, w)) return false;
  if (!(generated_subgroup(g, v) == generated_subgroup(g, w))) return false;
  const ClassTower tower =
      ClassTower::for_box(g, nu, TowerOptions{.max_cells = caps.tower_cells});
  return tower.classify(v.span()) == tower.classify(w.span());
}

Count fiber_cardinality(const FiniteGroup& g, const NielsenType& nu) {
  Count total = 1;
  std::size_t placed = 0;
  for (std::size_t c = 0; c < nu.num_classes(); ++c) {
    // C(placed + k, k) built up one factor at a time stays integral.
    for (std::uint32_t j = 1; j <= nu[c]; ++j) {
      ++placed;
      if (total == kCountMax) return kCountMax;
      const Count next = saturating_mul(total, placed);
      if (next == kCountMax) return kCountMax;
      total = next / j;
    }
    for (std::uint32_t j = 0; j < nu[c]; ++j) {
      total = saturating_mul(total, g.classes().sizes[c]);
    }
  }
  return total;
}

void validate_fiber_spec(const FiniteGroup& g, const FiberSpec& spec) {
  if (spec.nielsen.num_classes() != g.class_count()) {
    throw PreconditionError("Nielsen type has " +
                            std::to_string(spec.nielsen.num_classes()) +
                            " entries, group has " +
                            std::to_string(g.class_count()) + " classes");
  }
  if (spec.gamma) {
    for (std::uint32_t c = 0; c < g.class_count(); ++c) {
      if (spec.nielsen[c] > 0 && !spec.gamma->contains_class(c)) {
        throw PreconditionError("Nielsen type counts class c" + std::to_string(c) +
                                " which is not contained in gamma");
      }
    }
  }
  if (spec.evaluation && *spec.evaluation >= g.order()) {
    throw PreconditionError("evaluation constraint is not a group element");
  }
  if (spec.generated && spec.generated->subgroup.universe() != g.order()) {
    throw PreconditionError("subgroup constraint over a different group");
  }
}

OrbitClass orbit_class(const ClassTower& tower, ClassTower::ClassRef ref) {
  const auto& info = tower.info(ref);
  return OrbitClass{info.canonical, info.size, info.evaluation,
                    tower.type_of(ref.type), tower.subgroup(info.subgroup)};
}

std::vector<OrbitClass> classes_from_tower(const ClassTower& tower,
                                           const FiberSpec& spec) {
  const std::size_t t = tower.type_index(spec.nielsen);
  std::vector<OrbitClass> out;
  const auto classes = tower.classes(t);
  for (std::uint32_t i = 0; i < classes.size(); ++i) {
    const auto& info = classes[i];
    if (spec.evaluation && info.evaluation != *spec.evaluation) continue;
    if (spec.generated && !spec.generated->accepts(tower.subgroup(info.subgroup))) {
      continue;
    }
    out.push_back(orbit_class(tower, {t, i}));
  }
  return out;
}

namespace {

std::vector<OrbitClass> enumerate_exhaustive(const FiniteGroup& g,
                                             const FiberSpec& spec,
                                             const Caps& caps) {
  const NielsenType& nu = spec.nielsen;
  const std::size_t d = nu.total();
  if (!spec.evaluation && fiber_cardinality(g, nu) > caps.fiber_size) {
    throw CapExceeded("fiber exceeds the enumeration cap", caps.fiber_size);
  }
  std::vector<OrbitClass> out;
  std::vector<std::uint32_t> remaining = nu.counts();
  std::vector<Element> tuple(d);
  std::uint64_t walked = 0;

  with_codec(g.order(), d, [&](auto codec) {
    std::unordered_set<typename decltype(codec)::Key> visited;
    auto visit = [&] {
      if (++walked > caps.fiber_size) {
        throw CapExceeded("fiber exceeds the enumeration cap", walked - 1);
      }
      if (visited.count(codec.encode(tuple))) return;
      std::vector<Element> best = tuple;
      const std::uint64_t size = orbit_bfs(
          g, codec, visited, tuple, caps.orbit_states,
          [&](std::span<const Element> m) {
            if (std::lexicographical_compare(m.begin(), m.end(), best.begin(),
                                             best.end())) {
              best.assign(m.begin(), m.end());
            }
          });
      HurwitzVector rep(std::move(best));
      SubgroupMask h = generated_subgroup(g, rep);
      if (spec.generated && !spec.generated->accepts(h)) return;
      out.push_back(OrbitClass{rep, size, evaluate(g, rep), nu, std::move(h)});
    };
    // Depth-first over positions; the last entry is forced when the
    // evaluation is constrained.
    auto recurse = [&](auto&& self, std::size_t pos, Element prefix) -> void {
      if (pos == d) {
        if (!spec.evaluation || prefix == *spec.evaluation) visit();
        return;
      }
      if (spec.evaluation && pos + 1 == d) {
        const Element last = g.mul(g.inv(prefix), *spec.evaluation);
        if (remaining[g.class_of(last)] != 1) return;
        tuple[pos] = last;
        visit();
        return;
      }
      for (std::uint32_t c = 0; c < remaining.size(); ++c) {
        if (remaining[c] == 0) continue;
        --remaining[c];
        for (Element x : g.classes().members[c]) {
          tuple[pos] = x;
          self(self, pos + 1, g.mul(prefix, x));
        }
        ++remaining[c];
      }
    };
    recurse(recurse, 0, kIdentity);
    return 0;
  });
  std::sort(out.begin(), out.end(), [](const OrbitClass& a, const OrbitClass& b) {
    return a.canonical < b.canonical;
  });
  return out;
}

}  // namespace

std::vector<OrbitClass> enumerate_classes(const FiniteGroup& g,
                                          const FiberSpec& spec,
                                          const EnumerationOptions& opts) {
  validate_fiber_spec(g, spec);
  if (opts.method == EnumerationMethod::kExhaustive) {
    return enumerate_exhaustive(g, spec, opts.caps);
  }
  const ClassTower tower = ClassTower::for_box(
      g, spec.nielsen,
      TowerOptions{.max_cells = opts.caps.tower_cells, .workers = opts.workers});
  return classes_from_tower(tower, spec);
}

}  // namespace hurwitz
