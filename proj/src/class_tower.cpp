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

#include "hurwitz/class_tower.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

ClassTower::ClassTower(const FiniteGroup& g,
                       std::vector<std::uint32_t> alphabet_classes,
                       NielsenType bound, TowerOptions opts)
    : group_(&g), bound_(std::move(bound)), max_cells_(opts.max_cells) {
  if (bound_.num_classes() != g.class_count()) {
    throw PreconditionError("tower bound has " +
                            std::to_string(bound_.num_classes()) +
                            " class counts, group has " +
                            std::to_string(g.class_count()));
  }
  std::sort(alphabet_classes.begin(), alphabet_classes.end());
  alphabet_classes.erase(
      std::unique(alphabet_classes.begin(), alphabet_classes.end()),
      alphabet_classes.end());
  for (std::uint32_t c = 0; c < g.class_count(); ++c) {
    const bool in = std::binary_search(alphabet_classes.begin(),
                                       alphabet_classes.end(), c);
    if (!in && bound_[c] != 0) {
      throw PreconditionError("tower bound counts class c" + std::to_string(c) +
                              " outside the alphabet");
    }
  }
  local_classes_ = alphabet_classes;

  std::size_t num_types = 1;
  for (std::uint32_t c : local_classes_) {
    dims_.push_back(bound_[c]);
    stride_.push_back(num_types);
    const std::size_t radix = bound_[c] + 1;
    if (num_types > max_cells_ / radix) {
      throw CapExceeded("tower box has too many Nielsen types", num_types);
    }
    num_types *= radix;
  }

  alpha_pos_.assign(g.order(), -1);
  for (std::size_t k = 0; k < local_classes_.size(); ++k) {
    for (Element a : g.classes().members[local_classes_[k]]) {
      alphabet_.push_back(a);
    }
  }
  std::sort(alphabet_.begin(), alphabet_.end());
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    alpha_pos_[alphabet_[i]] = static_cast<std::int64_t>(i);
    const std::uint32_t c = g.class_of(alphabet_[i]);
    alpha_local_.push_back(static_cast<std::uint32_t>(
        std::lower_bound(local_classes_.begin(), local_classes_.end(), c) -
        local_classes_.begin()));
  }
  const std::size_t a_size = alphabet_.size();
  conj_.resize(a_size * a_size);
  for (std::size_t a = 0; a < a_size; ++a) {
    for (std::size_t b = 0; b < a_size; ++b) {
      conj_[a * a_size + b] = static_cast<std::uint32_t>(
          alpha_pos_[g.conj(alphabet_[a], alphabet_[b])]);
    }
  }

  types_.resize(num_types);
  intern_subgroup(subgroup_closure(g, std::span<const Element>{}));
  build(opts);
}

ClassTower ClassTower::for_box(const FiniteGroup& g, const NielsenType& bound,
                               TowerOptions opts) {
  std::vector<std::uint32_t> classes;
  for (std::uint32_t c = 0; c < bound.num_classes(); ++c) {
    if (bound[c] > 0) classes.push_back(c);
  }
  return ClassTower(g, std::move(classes), bound, opts);
}

std::uint32_t ClassTower::intern_subgroup(SubgroupMask mask) {
  auto it = subgroup_ids_.find(mask.members());
  if (it != subgroup_ids_.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(subgroups_.size());
  subgroup_ids_.emplace(mask.members(), id);
  subgroups_.push_back(std::move(mask));
  return id;
}

std::uint32_t ClassTower::join_subgroup(std::uint32_t id, Element a) {
  std::lock_guard<std::mutex> lock(subgroup_mutex_);
  const auto key = std::make_pair(id, a);
  auto it = join_memo_.find(key);
  if (it != join_memo_.end()) return it->second;
  std::uint32_t out = id;
  if (!subgroups_[id].contains(a)) {
    std::vector<Element> gens = subgroups_[id].elements();
    gens.push_back(a);
    out = intern_subgroup(subgroup_closure(*group_, gens));
  }
  join_memo_.emplace(key, out);
  return out;
}

std::uint32_t ClassTower::full_group_id() const {
  auto it = subgroup_ids_.find(std::vector<bool>(group_->order(), true));
  return it == subgroup_ids_.end() ? ~0u : it->second;
}

std::optional<std::uint32_t> ClassTower::find_subgroup(
    const SubgroupMask& h) const {
  auto it = subgroup_ids_.find(h.members());
  if (it == subgroup_ids_.end()) return std::nullopt;
  return it->second;
}

void ClassTower::build(const TowerOptions& opts) {
  std::vector<std::vector<std::size_t>> by_degree;
  for (std::size_t t = 0; t < types_.size(); ++t) {
    std::size_t degree = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) degree += coordinate(t, k);
    if (degree >= by_degree.size()) by_degree.resize(degree + 1);
    by_degree[degree].push_back(t);
  }
  const unsigned workers = std::max(1u, opts.workers);
  for (const auto& batch : by_degree) {
    if (workers == 1 || batch.size() < 2) {
      for (std::size_t t : batch) build_type(t);
      continue;
    }
    std::atomic<std::size_t> next = 0;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < batch.size(); i = next++) {
          try {
            build_type(batch[i]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = batch.size();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
}

void ClassTower::build_type(std::size_t t) {
  TypeData& cur = types_[t];
  const std::size_t a_size = alphabet_.size();
  cur.xoffset.assign(a_size, -1);
  if (t == 0) {
    cur.classes.push_back(ClassInfo{HurwitzVector{}, 1, kIdentity, 0});
    cur.member_begin = {0, 0};
    return;
  }

  std::size_t nx = 0;
  for (std::size_t gi = 0; gi < a_size; ++gi) {
    const std::uint32_t k = alpha_local_[gi];
    if (coordinate(t, k) == 0) continue;
    cur.xoffset[gi] = static_cast<std::int64_t>(nx);
    nx += types_[t - stride_[k]].classes.size();
  }
  const std::uint64_t total = cells_.fetch_add(nx) + nx;
  if (total > max_cells_) {
    throw CapExceeded("class tower exceeded its cell cap", total);
  }
  cur.xprefix.resize(nx);
  cur.xlast.resize(nx);
  for (std::size_t gi = 0; gi < a_size; ++gi) {
    if (cur.xoffset[gi] < 0) continue;
    const auto base = static_cast<std::size_t>(cur.xoffset[gi]);
    const std::size_t n_prefix =
        types_[t - stride_[alpha_local_[gi]]].classes.size();
    for (std::size_t c = 0; c < n_prefix; ++c) {
      cur.xprefix[base + c] = static_cast<std::uint32_t>(c);
      cur.xlast[base + c] = static_cast<std::uint32_t>(gi);
    }
  }

  // σ_d closure: cell (c, g) with c ∋ q·a is joined to (class of q·g, a^g).
  UnionFind uf(nx);
  for (std::size_t gi = 0; gi < a_size; ++gi) {
    if (cur.xoffset[gi] < 0) continue;
    const std::size_t p = t - stride_[alpha_local_[gi]];
    const TypeData& prev = types_[p];
    for (std::size_t c = 0; c < prev.classes.size(); ++c) {
      const auto x = static_cast<std::uint32_t>(cur.xoffset[gi] + static_cast<std::int64_t>(c));
      for (std::uint32_t m = prev.member_begin[c]; m < prev.member_begin[c + 1]; ++m) {
        const std::uint32_t y = prev.members[m];
        const std::uint32_t ai = prev.xlast[y];
        const std::uint32_t q_prefix = prev.xprefix[y];
        const std::size_t q = t - stride_[alpha_local_[ai]];
        const TypeData& qt = types_[q];
        const std::uint32_t qg = qt.xclass[static_cast<std::size_t>(qt.xoffset[gi]) + q_prefix];
        const std::uint32_t bi = conj_[ai * a_size + gi];
        uf.unite(x, static_cast<std::uint32_t>(cur.xoffset[bi] + qg));
      }
    }
  }

  auto prefix_info = [&](std::uint32_t x) -> const ClassInfo& {
    return types_[t - stride_[alpha_local_[cur.xlast[x]]]].classes[cur.xprefix[x]];
  };
  // (prefix canonical, last letter) lexicographic comparison.
  auto cell_less = [&](std::uint32_t x, std::uint32_t y) {
    const auto& px = prefix_info(x).canonical;
    const auto& py = prefix_info(y).canonical;
    if (px != py) return px < py;
    return alphabet_[cur.xlast[x]] < alphabet_[cur.xlast[y]];
  };

  std::vector<std::uint32_t> root_class(nx, ~0u);
  std::vector<std::uint32_t> best;  // minimal cell per provisional class
  std::vector<std::uint32_t> provisional(nx);
  for (std::uint32_t x = 0; x < nx; ++x) {
    const std::uint32_t r = uf.find(x);
    if (root_class[r] == ~0u) {
      root_class[r] = static_cast<std::uint32_t>(best.size());
      best.push_back(x);
    } else if (cell_less(x, best[root_class[r]])) {
      best[root_class[r]] = x;
    }
    provisional[x] = root_class[r];
  }

  const std::size_t n_classes = best.size();
  std::vector<std::uint32_t> order(n_classes);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return cell_less(best[a], best[b]);
  });
  std::vector<std::uint32_t> final_id(n_classes);
  for (std::uint32_t i = 0; i < n_classes; ++i) final_id[order[i]] = i;

  cur.classes.resize(n_classes);
  cur.xclass.resize(nx);
  std::vector<std::uint32_t> counts(n_classes + 1, 0);
  for (std::uint32_t x = 0; x < nx; ++x) {
    const std::uint32_t id = final_id[provisional[x]];
    cur.xclass[x] = id;
    ++counts[id + 1];
    ClassInfo& info = cur.classes[id];
    info.size = saturating_add(info.size, prefix_info(x).size);
  }
  for (std::uint32_t i = 0; i < n_classes; ++i) {
    const std::uint32_t x = best[order[i]];
    const ClassInfo& prefix = prefix_info(x);
    const Element last = alphabet_[cur.xlast[x]];
    ClassInfo& info = cur.classes[i];
    std::vector<Element> rep(prefix.canonical.begin(), prefix.canonical.end());
    rep.push_back(last);
    info.canonical = HurwitzVector(std::move(rep));
    info.evaluation = group_->mul(prefix.evaluation, last);
    info.subgroup = join_subgroup(prefix.subgroup, last);
  }
  std::partial_sum(counts.begin(), counts.end(), counts.begin());
  cur.member_begin = counts;
  cur.members.resize(nx);
  for (std::uint32_t x = 0; x < nx; ++x) {
    cur.members[counts[cur.xclass[x]]++] = x;
  }
}

bool ClassTower::in_box(const NielsenType& nu) const {
  if (nu.num_classes() != bound_.num_classes()) return false;
  return nu.leq(bound_);
}

std::size_t ClassTower::type_index(const NielsenType& nu) const {
  if (!in_box(nu)) {
    throw PreconditionError("Nielsen type " + nu.to_string() +
                            " lies outside the tower box " + bound_.to_string());
  }
  std::size_t t = 0;
  for (std::size_t k = 0; k < local_classes_.size(); ++k) {
    t += stride_[k] * nu[local_classes_[k]];
  }
  return t;
}

NielsenType ClassTower::type_of(std::size_t type) const {
  NielsenType nu = NielsenType::zero(bound_.num_classes());
  for (std::size_t k = 0; k < local_classes_.size(); ++k) {
    nu[local_classes_[k]] = coordinate(type, k);
  }
  return nu;
}

ClassTower::ClassRef ClassTower::append(ClassRef c, Element a) const {
  if (a >= alpha_pos_.size() || alpha_pos_[a] < 0) {
    throw PreconditionError("element " + group_->name(a) +
                            " is outside the tower alphabet");
  }
  const auto ai = static_cast<std::size_t>(alpha_pos_[a]);
  const std::uint32_t k = alpha_local_[ai];
  if (coordinate(c.type, k) >= dims_[k]) {
    throw PreconditionError("tuple leaves the tower box " + bound_.to_string());
  }
  const std::size_t t = c.type + stride_[k];
  const TypeData& td = types_[t];
  return {t, td.xclass[static_cast<std::size_t>(td.xoffset[ai]) + c.index]};
}

ClassTower::ClassRef ClassTower::append(ClassRef c,
                                        std::span<const Element> word) const {
  for (Element a : word) c = append(c, a);
  return c;
}

std::vector<std::pair<ClassTower::ClassRef, Element>>
ClassTower::last_letter_splits(ClassRef c) const {
  const TypeData& td = types_[c.type];
  std::vector<std::pair<ClassRef, Element>> out;
  for (std::uint32_t m = td.member_begin[c.index]; m < td.member_begin[c.index + 1]; ++m) {
    const std::uint32_t x = td.members[m];
    const std::uint32_t ai = td.xlast[x];
    out.push_back({ClassRef{c.type - stride_[alpha_local_[ai]], td.xprefix[x]},
                   alphabet_[ai]});
  }
  return out;
}

}  // namespace hurwitz
