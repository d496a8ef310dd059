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

#include "hurwitz/hurwitz_vector.hpp"

#include <numeric>
#include <stdexcept>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::size_t NielsenType::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

bool NielsenType::leq(const NielsenType& other) const {
  if (counts_.size() != other.counts_.size()) return false;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] > other.counts_[i]) return false;
  }
  return true;
}

NielsenType& NielsenType::operator+=(const NielsenType& other) {
  if (counts_.size() != other.counts_.size()) {
    throw PreconditionError("Nielsen types over different class tables");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

std::string NielsenType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) out += ',';
    out += 'c' + std::to_string(i) + ':' + std::to_string(counts_[i]);
  }
  return out;
}

namespace {

void check_position(const HurwitzVector& v, std::size_t i) {
  if (i < 1 || i + 1 > v.size()) {
    throw std::out_of_range("braid generator index " + std::to_string(i) +
                            " outside 1.." +
                            std::to_string(v.size() > 0 ? v.size() - 1 : 0));
  }
}

}  // namespace

HurwitzVector sigma(const FiniteGroup& g, const HurwitzVector& v,
                    std::size_t i) {
  check_position(v, i);
  HurwitzVector out = v;
  apply_sigma(g, out.mutable_span(), i);
  return out;
}

HurwitzVector sigma_inv(const FiniteGroup& g, const HurwitzVector& v,
                        std::size_t i) {
  check_position(v, i);
  HurwitzVector out = v;
  apply_sigma_inv(g, out.mutable_span(), i);
  return out;
}

Element evaluate(const FiniteGroup& g, std::span<const Element> v) {
  Element acc = kIdentity;
  for (Element x : v) acc = g.mul(acc, x);
  return acc;
}

NielsenType nielsen(const FiniteGroup& g, std::span<const Element> v,
                    std::size_t skip) {
  NielsenType nu = NielsenType::zero(g.class_count());
  for (std::size_t j = skip; j < v.size(); ++j) ++nu[g.class_of(v[j])];
  return nu;
}

HurwitzVector concat(const HurwitzVector& v, const HurwitzVector& w) {
  std::vector<Element> out(v.begin(), v.end());
  out.insert(out.end(), w.begin(), w.end());
  return HurwitzVector(std::move(out));
}

HurwitzVector repeat(const HurwitzVector& v, std::size_t k) {
  std::vector<Element> out;
  out.reserve(v.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), v.begin(), v.end());
  return HurwitzVector(std::move(out));
}

NielsenType unit_type(const FiniteGroup& g, Element a) {
  NielsenType nu = NielsenType::zero(g.class_count());
  nu[g.class_of(a)] = 1;
  return nu;
}

}  // namespace hurwitz
