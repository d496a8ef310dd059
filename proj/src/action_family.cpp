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

#include "hurwitz/action_family.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <random>
#include <set>

#include "hurwitz/errors.hpp"
#include "hurwitz/syntax.hpp"

namespace hurwitz {

ActionFamily plain_family() { return ActionFamily{}; }

ActionFamily marked_family(std::size_t k) {
  ActionFamily f;
  f.prefix_width = k;
  f.nielsen_skip = k;
  return f;
}

ActionFamily parse_family(std::string_view text) {
  if (text == "plain") return plain_family();
  if (text.starts_with("marked:")) {
    const std::string_view num = text.substr(7);
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec == std::errc() && ptr == num.data() + num.size() && !num.empty()) {
      return marked_family(k);
    }
    throw ParseError("bad prefix width in family spec", 7);
  }
  throw ParseError("family must be 'plain' or 'marked:k'", 0);
}

std::string family_name(const ActionFamily& family) {
  if (family.prefix_width == 0 && family.extra_moves.empty()) return "plain";
  return "marked:" + std::to_string(family.prefix_width);
}

MarkedVector parse_marked(const FiniteGroup& g, std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return {HurwitzVector{}, parse_tuple(g, text)};
  MarkedVector x;
  x.prefix = parse_tuple(g, text.substr(0, bar));
  try {
    x.tail = parse_tuple(g, text.substr(bar + 1));
  } catch (const ParseError& e) {
    throw ParseError("bad tail", bar + 1 + e.position());
  }
  return x;
}

std::string format_marked(const FiniteGroup& g, const MarkedVector& x) {
  return format_tuple(g, x.prefix) + " | " + format_tuple(g, x.tail);
}

NielsenType family_nielsen(const FiniteGroup& g, const ActionFamily& family,
                           const MarkedVector& x) {
  return nielsen(g, x.flatten(), family.nielsen_skip);
}

namespace {

void check_prefix(const ActionFamily& family, const MarkedVector& x) {
  if (x.prefix.size() != family.prefix_width) {
    throw PreconditionError("prefix has width " + std::to_string(x.prefix.size()) +
                            ", family expects " +
                            std::to_string(family.prefix_width));
  }
}

MarkedVector split(const std::vector<Element>& flat, std::size_t r) {
  return {HurwitzVector(std::vector<Element>(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(r))),
          HurwitzVector(std::vector<Element>(flat.begin() + static_cast<std::ptrdiff_t>(r), flat.end()))};
}

// Orbit walk for families with extra moves.
std::set<std::vector<Element>> generic_walk(const FiniteGroup& g,
                                            const ActionFamily& family,
                                            const MarkedVector& x,
                                            const Caps& caps) {
  const std::size_t r = family.prefix_width;
  const std::vector<Element> start = x.flatten().entries();
  const std::size_t n = start.size();
  std::set<std::vector<Element>> seen{start};
  std::deque<std::vector<Element>> queue{start};
  auto push = [&](std::vector<Element> y) {
    if (seen.insert(y).second) {
      if (seen.size() > caps.orbit_states) {
        throw CapExceeded("family orbit exceeded its state cap", seen.size() - 1);
      }
      queue.push_back(std::move(y));
    }
  };
  while (!queue.empty()) {
    const std::vector<Element> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = r + 1; i < n; ++i) {
      auto y = cur;
      apply_sigma(g, y, i);
      push(std::move(y));
      y = cur;
      apply_sigma_inv(g, y, i);
      push(std::move(y));
    }
    for (const auto& m : family.extra_moves) {
      auto y = cur;
      m.forward(g, y);
      push(std::move(y));
      y = cur;
      m.inverse(g, y);
      push(std::move(y));
    }
  }
  return seen;
}

MarkedClass class_of_walk(const FiniteGroup& g, const ActionFamily& family,
                          const std::set<std::vector<Element>>& members) {
  MarkedClass out;
  out.canonical = split(*members.begin(), family.prefix_width);
  out.size = members.size();
  out.tail_evaluation = evaluate(g, out.canonical.tail);
  out.nielsen = family_nielsen(g, family, out.canonical);
  return out;
}

MarkedClass generic_orbit(const FiniteGroup& g, const ActionFamily& family,
                          const MarkedVector& x, const Caps& caps) {
  return class_of_walk(g, family, generic_walk(g, family, x, caps));
}

}  // namespace

MarkedClass family_orbit(const FiniteGroup& g, const ActionFamily& family,
                         const MarkedVector& x, const Caps& caps) {
  check_prefix(family, x);
  if (!family.is_marked()) return generic_orbit(g, family, x, caps);
  MarkedClass out;
  out.canonical.prefix = x.prefix;
  if (x.tail.size() <= 1) {
    out.canonical.tail = x.tail;
    out.size = 1;
  } else {
    const ClassTower tower = ClassTower::for_box(
        g, nielsen(g, x.tail), TowerOptions{.max_cells = caps.tower_cells});
    const auto& info = tower.info(tower.classify(x.tail.span()));
    out.canonical.tail = info.canonical;
    out.size = info.size;
  }
  out.tail_evaluation = evaluate(g, x.tail);
  out.nielsen = family_nielsen(g, family, x);
  return out;
}

bool family_equivalent(const FiniteGroup& g, const ActionFamily& family,
                       const MarkedVector& x, const MarkedVector& y,
                       const Caps& caps) {
  check_prefix(family, x);
  check_prefix(family, y);
  if (family_nielsen(g, family, x) != family_nielsen(g, family, y)) return false;
  if (family.is_marked()) {
    return x.prefix == y.prefix && braid_equivalent(g, x.tail, y.tail, caps);
  }
  return family_orbit(g, family, x, caps).canonical ==
         family_orbit(g, family, y, caps).canonical;
}

MarkedClass monoid_act(const FiniteGroup& g, const ActionFamily& family,
                       const MarkedVector& x, const HurwitzVector& v,
                       const Caps& caps) {
  return family_orbit(g, family, MarkedVector{x.prefix, concat(x.tail, v)}, caps);
}

std::vector<HurwitzVector> all_tuples(const FiniteGroup& g, std::size_t k) {
  std::vector<HurwitzVector> out;
  std::vector<Element> cur(k, 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++cur[i] < g.order()) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::vector<MarkedClass> enumerate_marked_classes(
    const FiniteGroup& g, const ActionFamily& family, const FiberSpec& tail_spec,
    const std::vector<HurwitzVector>& prefixes, const EnumerationOptions& opts) {
  const std::vector<HurwitzVector> all =
      prefixes.empty() ? all_tuples(g, family.prefix_width) : prefixes;
  for (const auto& p : all) check_prefix(family, MarkedVector{p, {}});
  const std::vector<OrbitClass> tails = enumerate_classes(g, tail_spec, opts);

  std::vector<MarkedClass> out;
  if (family.is_marked()) {
    for (const auto& p : all) {
      for (const auto& t : tails) {
        MarkedClass c;
        c.canonical = MarkedVector{p, t.canonical};
        c.size = t.size;
        c.tail_evaluation = t.evaluation;
        c.nielsen = family_nielsen(g, family, c.canonical);
        out.push_back(std::move(c));
      }
    }
  } else {
    // Extra moves may merge prefix/tail combinations: walk every member.
    std::set<std::vector<Element>> covered;
    for (const auto& p : all) {
      for (const auto& t : tails) {
        for (const auto& member : orbit_members(g, t.canonical, opts.caps)) {
          const MarkedVector x{p, member};
          if (covered.count(x.flatten().entries())) continue;
          auto walk = generic_walk(g, family, x, opts.caps);
          out.push_back(class_of_walk(g, family, walk));
          covered.merge(walk);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MarkedClass& a, const MarkedClass& b) {
    return a.canonical < b.canonical;
  });
  return out;
}

std::optional<std::string> validate_family(const FiniteGroup& g,
                                           const ActionFamily& family,
                                           std::size_t tail_length,
                                           std::size_t samples,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
  const std::size_t n = family.prefix_width + tail_length;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Element> x(n);
    for (auto& e : x) e = pick(rng);
    const NielsenType nu = nielsen(g, x, family.nielsen_skip);
    for (const auto& m : family.extra_moves) {
      auto y = x;
      m.forward(g, y);
      if (nielsen(g, y, family.nielsen_skip) != nu) return m.name;
      m.inverse(g, y);
      if (y != x) return m.name;
    }
  }
  return std::nullopt;
}

}  // namespace hurwitz
