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

#include "hurwitz/syntax.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Token trim(Token t) {
  std::size_t b = 0, e = t.text.size();
  while (b < e && is_space(t.text[b])) ++b;
  while (e > b && is_space(t.text[e - 1])) --e;
  return {t.text.substr(b, e - b), t.offset + b};
}

// Splits on commas outside parentheses / angle brackets.
std::vector<Token> split_top_level(Token t) {
  std::vector<Token> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.text.size(); ++i) {
    const char c = i < t.text.size() ? t.text[i] : ',';
    if (c == '(' || c == '<') ++depth;
    if (c == ')' || c == '>') --depth;
    if (c == ',' && depth <= 0) {
      out.push_back(trim({t.text.substr(start, i - start), t.offset + start}));
      start = i + 1;
    }
  }
  return out;
}

Element resolve(const FiniteGroup& g, Token t) {
  if (t.text.empty()) throw ParseError("empty tuple entry", t.offset);
  if (auto named = g.find(t.text)) return *named;
  std::size_t index = 0;
  const auto [ptr, ec] =
      std::from_chars(t.text.data(), t.text.data() + t.text.size(), index);
  if (ec == std::errc() && ptr == t.text.data() + t.text.size()) {
    if (index >= g.order()) {
      throw ParseError("element index " + std::to_string(index) +
                           " out of range for a group of order " +
                           std::to_string(g.order()),
                       t.offset);
    }
    return static_cast<Element>(index);
  }
  throw ParseError("unknown element '" + std::string(t.text) + "'", t.offset);
}

}  // namespace

Element parse_element(const FiniteGroup& g, std::string_view text) {
  return resolve(g, trim({text, 0}));
}

HurwitzVector parse_tuple(const FiniteGroup& g, std::string_view text) {
  Token t = trim({text, 0});
  if (!t.text.empty() && t.text.front() == '[') {
    if (t.text.back() != ']') {
      throw ParseError("unterminated '['", t.offset + t.text.size());
    }
    t = trim({t.text.substr(1, t.text.size() - 2), t.offset + 1});
  }
  if (t.text.empty()) return {};
  std::vector<Element> entries;
  for (const Token& tok : split_top_level(t)) entries.push_back(resolve(g, tok));
  return HurwitzVector(std::move(entries));
}

GammaSet parse_gamma(const FiniteGroup& g, std::string_view text) {
  const Token t = trim({text, 0});
  if (t.text == "all-nontrivial") return make_gamma_all_nontrivial(g);
  const HurwitzVector reps = parse_tuple(g, text);
  if (reps.empty()) throw ParseError("gamma needs at least one representative", t.offset);
  for (Element r : reps) {
    if (r == kIdentity) throw ParseError("gamma may not contain the identity", t.offset);
  }
  return make_gamma(g, reps.span());
}

NielsenType parse_nielsen(const FiniteGroup& g, std::string_view text) {
  NielsenType nu = NielsenType::zero(g.class_count());
  const Token t = trim({text, 0});
  if (t.text.empty() || t.text == "0") return nu;
  for (const Token& tok : split_top_level(t)) {
    std::string_view s = tok.text;
    std::size_t off = tok.offset;
    if (!s.empty() && (s.front() == 'c' || s.front() == 'C')) {
      s.remove_prefix(1);
      ++off;
    }
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected class:count", tok.offset);
    }
    std::size_t cls = 0, count = 0;
    auto r1 = std::from_chars(s.data(), s.data() + colon, cls);
    if (r1.ec != std::errc() || r1.ptr != s.data() + colon) {
      throw ParseError("bad class id", off);
    }
    auto r2 = std::from_chars(s.data() + colon + 1, s.data() + s.size(), count);
    if (r2.ec != std::errc() || r2.ptr != s.data() + s.size()) {
      throw ParseError("bad count", off + colon + 1);
    }
    if (cls >= g.class_count()) {
      throw ParseError("class id " + std::to_string(cls) + " out of range (group has " +
                           std::to_string(g.class_count()) + " classes)",
                       off);
    }
    nu[cls] = static_cast<std::uint32_t>(count);
  }
  return nu;
}

std::string format_element(const FiniteGroup& g, Element a) { return g.name(a); }

std::string format_tuple(const FiniteGroup& g, const HurwitzVector& v) {
  std::string out;
  if (g.has_names()) out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += g.name(v[i]);
  }
  if (g.has_names()) out += ']';
  return out;
}

}  // namespace hurwitz
