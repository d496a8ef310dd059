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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hurwitz/action_family.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/group_io.hpp"
#include "hurwitz/homology.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/orbit_cache.hpp"
#include "hurwitz/stabilize.hpp"
#include "hurwitz/syntax.hpp"
#include "json.hpp"

namespace hurwitz::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string group;
  std::string gamma;
  std::string nielsen;
  std::string ev;
  bool generating = false;
  std::uint32_t window = 3;
  std::uint32_t confirmations = 2;
  std::uint32_t max_level = 3;
  std::string caps;
  std::string cache;
  std::string format = "jsonl";
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::string tuple;
  std::string v;
  std::string w;
  std::string stabilizer = "ugamma";
  bool members = false;
  bool structure = false;
  std::string base;
  std::string family = "plain";
  std::string method = "auto";
};

json count_json(Count c) {
  if (fits_u64(c)) return static_cast<std::uint64_t>(c);
  return to_string(c);
}

json optional_bool(const std::optional<bool>& b) {
  return b ? json(*b) : json(nullptr);
}

// Records are printed as they come for jsonl and buffered for the tables.
class Output {
 public:
  Output(std::string format, std::ostream& out) : format_(std::move(format)), out_(out) {
    if (format_ != "jsonl" && format_ != "tsv" && format_ != "pretty") {
      throw SpecError("unknown output format '" + format_ + "'");
    }
  }

  void row(const json& r) {
    if (format_ == "jsonl") {
      out_ << r.dump() << '\n';
    } else {
      rows_.push_back(r);
    }
  }

  void finish() {
    if (format_ == "jsonl" || rows_.empty()) return;
    // One table per run of records sharing a key set.
    std::size_t start = 0;
    while (start < rows_.size()) {
      std::size_t end = start + 1;
      while (end < rows_.size() && keys(rows_[end]) == keys(rows_[start])) ++end;
      table(start, end);
      start = end;
    }
  }

 private:
  static std::vector<std::string> keys(const json& r) {
    std::vector<std::string> out;
    for (const auto& [k, v] : r.items()) out.push_back(k);
    return out;
  }

  static std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
  }

  void table(std::size_t begin, std::size_t end) {
    const auto cols = keys(rows_[begin]);
    std::vector<std::vector<std::string>> cells;
    cells.push_back(cols);
    for (std::size_t i = begin; i < end; ++i) {
      std::vector<std::string> line;
      for (const auto& c : cols) line.push_back(cell(rows_[i][c]));
      cells.push_back(std::move(line));
    }
    if (format_ == "tsv") {
      for (const auto& line : cells) {
        for (std::size_t j = 0; j < line.size(); ++j) {
          out_ << (j ? "\t" : "") << line[j];
        }
        out_ << '\n';
      }
      return;
    }
    std::vector<std::size_t> width(cols.size(), 0);
    for (const auto& line : cells) {
      for (std::size_t j = 0; j < line.size(); ++j) {
        width[j] = std::max(width[j], line[j].size());
      }
    }
    for (const auto& line : cells) {
      for (std::size_t j = 0; j < line.size(); ++j) {
        out_ << (j ? "  " : "") << line[j];
        if (j + 1 < line.size()) out_ << std::string(width[j] - line[j].size(), ' ');
      }
      out_ << '\n';
    }
    out_ << '\n';
  }

  std::string format_;
  std::ostream& out_;
  std::vector<json> rows_;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 1 || value > 1.8e19) {
    throw ParseError("bad value '" + text + "' for " + what, 0);
  }
  return static_cast<std::uint64_t>(value);
}

// "orbit_states=1e6,fiber_size=…,tower_cells=…"
Caps parse_caps(const std::string& text) {
  Caps caps;
  if (text.empty()) return caps;
  std::stringstream in(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ParseError("caps entry '" + item + "' needs key=value", offset);
    }
    const std::string key = item.substr(0, eq);
    const std::uint64_t value = parse_u64(item.substr(eq + 1), key);
    if (key == "orbit_states") {
      caps.orbit_states = value;
    } else if (key == "fiber_size") {
      caps.fiber_size = value;
    } else if (key == "tower_cells") {
      caps.tower_cells = value;
    } else {
      throw ParseError("unknown cap '" + key + "'", offset);
    }
    offset += item.size() + 1;
  }
  return caps;
}

GammaSet gamma_for(const FiniteGroup& g, const std::string& text,
                   std::initializer_list<const HurwitzVector*> tuples) {
  if (!text.empty()) return parse_gamma(g, text);
  std::vector<Element> reps;
  for (const auto* t : tuples) {
    for (Element a : *t) {
      if (a != kIdentity) reps.push_back(a);
    }
  }
  if (reps.empty()) return make_gamma_all_nontrivial(g);
  return make_gamma(g, reps);
}

json class_record(const FiniteGroup& g, const OrbitClass& c) {
  return {{"record", "class"},
          {"canonical", format_tuple(g, c.canonical)},
          {"size", count_json(c.size)},
          {"evaluation", format_element(g, c.evaluation)},
          {"nielsen", c.nielsen.to_string()},
          {"subgroup_order", c.subgroup.order()}};
}

json stability_summary(const FiniteGroup& g, const StabilityReport& r) {
  json s = {{"record", "stability"},
            {"window", r.window},
            {"confident", r.confident},
            {"base", r.base.to_string()},
            {"stabilizer", format_tuple(g, r.stabilizer.vector)},
            {"bound", r.bound ? json(*r.bound) : json(nullptr)},
            {"uniform_bound", r.uniform_bound ? json(*r.uniform_bound) : json(nullptr)}};
  if (const auto lvl = r.stable_level()) s["stable_level"] = lvl->to_string();
  if (!r.diagnostic.empty()) s["diagnostic"] = r.diagnostic;
  return s;
}

int cmd_group(const RunConfig& cfg, Output& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  const auto& cls = g.classes();
  for (std::uint32_t c = 0; c < cls.count(); ++c) {
    out.row({{"record", "conjugacy_class"},
             {"class", "c" + std::to_string(c)},
             {"representative", format_element(g, cls.representatives[c])},
             {"size", cls.sizes[c]},
             {"element_order", g.element_order(cls.representatives[c])}});
  }
  out.row({{"record", "group"},
           {"order", g.order()},
           {"classes", cls.count()},
           {"abelian", g.is_abelian()},
           {"commutator_order", commutator_subgroup(g).order()},
           {"digest", table_digest(g)}});
  return kOk;
}

int cmd_orbit(const RunConfig& cfg, const Caps& caps, Output& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  const ActionFamily family = parse_family(cfg.family);
  if (family.prefix_width > 0) {
    const MarkedVector x = parse_marked(g, cfg.tuple);
    if (x.prefix.size() != family.prefix_width) {
      throw SpecError("prefix has " + std::to_string(x.prefix.size()) +
                      " entries, family needs " +
                      std::to_string(family.prefix_width));
    }
    const MarkedClass c = family_orbit(g, family, x, caps);
    out.row({{"record", "orbit"},
             {"canonical", format_marked(g, c.canonical)},
             {"size", count_json(c.size)},
             {"tail_evaluation", format_element(g, c.tail_evaluation)},
             {"nielsen", c.nielsen.to_string()}});
    return kOk;
  }
  const HurwitzVector v = parse_tuple(g, cfg.tuple);
  if (cfg.members) {
    for (const auto& m : orbit_members(g, v, caps)) {
      out.row({{"record", "member"}, {"tuple", format_tuple(g, m)}});
    }
  }
  const OrbitClass c = orbit(g, v, caps);
  json r = class_record(g, c);
  r["record"] = "orbit";
  out.row(r);
  return kOk;
}

int cmd_classes(const RunConfig& cfg, const Caps& caps, Output& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  FiberSpec spec;
  spec.nielsen = cfg.nielsen.empty() ? NielsenType::zero(g.class_count())
                                     : parse_nielsen(g, cfg.nielsen);
  if (!cfg.ev.empty()) spec.evaluation = parse_element(g, cfg.ev);
  if (cfg.generating) {
    spec.generated = SubgroupConstraint{whole_group(g),
                                        SubgroupConstraint::Mode::kExact};
  }
  spec.gamma = cfg.gamma.empty() ? make_gamma_all_nontrivial(g)
                                 : parse_gamma(g, cfg.gamma);
  validate_fiber_spec(g, spec);

  EnumerationOptions eo;
  eo.caps = caps;
  eo.workers = cfg.workers;
  if (cfg.method == "exhaustive") {
    eo.method = EnumerationMethod::kExhaustive;
  } else if (cfg.method == "tower") {
    eo.method = EnumerationMethod::kTower;
  } else if (cfg.method != "auto") {
    throw SpecError("unknown method '" + cfg.method + "'");
  }

  const ActionFamily family = parse_family(cfg.family);
  if (family.prefix_width > 0) {
    const auto classes = enumerate_marked_classes(g, family, spec, {}, eo);
    for (const auto& c : classes) {
      out.row({{"record", "class"},
               {"canonical", format_marked(g, c.canonical)},
               {"size", count_json(c.size)},
               {"tail_evaluation", format_element(g, c.tail_evaluation)},
               {"nielsen", c.nielsen.to_string()}});
    }
    out.row({{"record", "summary"},
             {"count", classes.size()},
             {"family", family_name(family)},
             {"nielsen", spec.nielsen.to_string()}});
    return kOk;
  }

  std::optional<OrbitCache> cache;
  if (!cfg.cache.empty()) {
    cache.emplace(cfg.cache, g);
  } else if (const char* dir = std::getenv("HURWITZ_CACHE_DIR"); dir && *dir) {
    cache.emplace(OrbitCache::default_path(dir, g), g);
  }
  std::vector<OrbitClass> classes;
  if (auto hit = cache ? cache->lookup(spec) : std::nullopt) {
    classes = std::move(*hit);
  } else {
    classes = enumerate_classes(g, spec, eo);
    if (cache) {
      cache->store(spec, classes);
      cache->save();
    }
  }
  Count total = 0;
  for (const auto& c : classes) {
    out.row(class_record(g, c));
    total = saturating_add(total, c.size);
  }
  out.row({{"record", "summary"},
           {"count", classes.size()},
           {"tuples", count_json(total)},
           {"fiber_size", count_json(fiber_cardinality(g, spec.nielsen))},
           {"nielsen", spec.nielsen.to_string()}});
  return kOk;
}

StabilityOptions stability_options(const FiniteGroup& g, const RunConfig& cfg,
                                   const Caps& caps) {
  StabilityOptions so;
  so.window = cfg.window;
  so.confirmations = cfg.confirmations;
  so.caps = caps;
  so.workers = cfg.workers;
  if (!cfg.base.empty()) so.base = parse_nielsen(g, cfg.base);
  return so;
}

int cmd_stability(const RunConfig& cfg, const Caps& caps, Output& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  const ActionFamily family = parse_family(cfg.family);
  const StabilityOptions so = stability_options(g, cfg, caps);
  const StabilityReport r =
      family.prefix_width > 0
          ? find_family_stability_bound(g, family, so)
          : find_stability_bound(g,
                                 cfg.gamma.empty() ? make_gamma_all_nontrivial(g)
                                                   : parse_gamma(g, cfg.gamma),
                                 so);
  for (const auto& l : r.levels) {
    out.row({{"record", "level"},
             {"level", l.level},
             {"nielsen", l.nielsen.to_string()},
             {"classes", l.class_count},
             {"generating", l.generating_count},
             {"surjective", optional_bool(l.surjective)},
             {"injective", optional_bool(l.injective)},
             {"bijective", optional_bool(l.bijective)},
             {"full_bijective", optional_bool(l.full_bijective)}});
  }
  out.row(stability_summary(g, r));
  return r.bound ? kOk : kIndeterminate;
}

int cmd_h2(const RunConfig& cfg, const Caps& caps, Output& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  const GammaSet gamma = cfg.gamma.empty() ? make_gamma_all_nontrivial(g)
                                           : parse_gamma(g, cfg.gamma);
  H2Options opts{stability_options(g, cfg, caps)};
  const H2Report r = cfg.structure ? h2_structure(g, gamma, opts)
                                   : h2_order(g, gamma, opts);
  json checks = json::array();
  for (const auto& [nu, count] : r.cross_checks) {
    checks.push_back({{"nielsen", nu.to_string()}, {"count", count}});
  }
  json rec = {{"record", "h2"},
              {"order", r.order},
              {"stable_level", r.stable_level.to_string()},
              {"bound", *r.stability.bound},
              {"confident", r.stability.confident},
              {"commutator_order", r.commutator_order},
              {"generating_count", r.generating_count},
              {"cross_checks", checks},
              {"multiple", r.multiple},
              {"base_point", format_tuple(g, r.base_point)}};
  if (r.structure_computed) rec["structure"] = r.structure;
  out.row(rec);
  return kOk;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return kOk;
    case Verdict::kFalse: return kFalse;
    case Verdict::kIndeterminate: return kIndeterminate;
  }
  return kIndeterminate;
}

StableOptions stable_options(const RunConfig& cfg, const Caps& caps) {
  StableOptions so;
  so.max_level = cfg.max_level;
  so.confirmations = cfg.confirmations;
  so.caps = caps;
  so.workers = cfg.workers;
  return so;
}

int cmd_stable_eq(const RunConfig& cfg, const Caps& caps, Output& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  const HurwitzVector v = parse_tuple(g, cfg.v);
  const HurwitzVector w = parse_tuple(g, cfg.w);
  Stabilizer u;
  if (cfg.stabilizer == "ugamma") {
    u = u_gamma(g, gamma_for(g, cfg.gamma, {&v, &w}));
  } else {
    u = make_stabilizer(g, parse_tuple(g, cfg.stabilizer));
  }
  const StableResult r = stable_equivalent(g, v, w, u, stable_options(cfg, caps));
  out.row({{"record", "stable_eq"},
           {"verdict", verdict_name(r.verdict)},
           {"level", r.level},
           {"reason", r.reason},
           {"stabilizer", format_tuple(g, u.vector)}});
  return verdict_exit(r.verdict);
}

int cmd_adj_eq(const RunConfig& cfg, const Caps& caps, Output& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  const HurwitzVector v = parse_tuple(g, cfg.v);
  const HurwitzVector w = parse_tuple(g, cfg.w);
  const GammaSet gamma = gamma_for(g, cfg.gamma, {&v, &w});
  const StableResult r = adj_word_equal(g, gamma, v, w, stable_options(cfg, caps));
  out.row({{"record", "adj_eq"},
           {"verdict", verdict_name(r.verdict)},
           {"level", r.level},
           {"reason", r.reason}});
  return verdict_exit(r.verdict);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Braid orbits of Hurwitz vectors over finite groups", "hurwitz"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group,
                     "builtin spec (sym:3, dihedral:4, cyclic:2xcyclic:2, …) or group file")
        ->required();
    sub->add_option("--caps", cfg.caps,
                    "orbit_states=N,fiber_size=N,tower_cells=N");
    sub->add_option("--format", cfg.format, "jsonl | tsv | pretty");
    sub->add_option("--workers", cfg.workers, "worker threads for class towers");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
  };

  auto* group = app.add_subcommand("group", "conjugacy classes and table digest");
  common(group);

  auto* orbit_cmd = app.add_subcommand("orbit", "braid orbit of one tuple");
  common(orbit_cmd);
  orbit_cmd->add_option("--tuple", cfg.tuple, "tuple, or 'prefix | tail' for marked families")
      ->required();
  orbit_cmd->add_flag("--members", cfg.members, "list every orbit member");
  orbit_cmd->add_option("--family", cfg.family, "plain | marked:k");

  auto* classes = app.add_subcommand("classes", "braid classes of a fiber");
  common(classes);
  classes->add_option("--gamma", cfg.gamma, "all-nontrivial or class representatives");
  classes->add_option("--nielsen", cfg.nielsen, "c0:0,c1:2,…");
  classes->add_option("--ev", cfg.ev, "required evaluation");
  classes->add_flag("--generating", cfg.generating, "only tuples generating the group");
  classes->add_option("--cache", cfg.cache, "orbit cache file (default: $HURWITZ_CACHE_DIR/<digest>.json)");
  classes->add_option("--family", cfg.family, "plain | marked:k");
  classes->add_option("--method", cfg.method, "auto | tower | exhaustive");

  auto* stability = app.add_subcommand("stability", "empirical stability bound");
  common(stability);
  stability->add_option("--gamma", cfg.gamma, "all-nontrivial or class representatives");
  stability->add_option("--window", cfg.window, "levels explored");
  stability->add_option("--confirmations", cfg.confirmations, "bijective levels needed for confidence");
  stability->add_option("--base", cfg.base, "base Nielsen type (default: that of u_Gamma)");
  stability->add_option("--family", cfg.family, "plain | marked:k");

  auto* h2 = app.add_subcommand("h2", "order and structure of H_{2,Gamma}");
  common(h2);
  h2->add_option("--gamma", cfg.gamma, "all-nontrivial or class representatives");
  h2->add_option("--window", cfg.window, "levels explored by the stability search");
  h2->add_option("--confirmations", cfg.confirmations, "bijective levels needed for confidence");
  h2->add_option("--base", cfg.base, "base Nielsen type (default: that of u_Gamma)");
  h2->add_flag("--structure", cfg.structure, "also compute invariant factors");

  auto* stable_eq = app.add_subcommand("stable-eq", "u-stable equivalence of two tuples");
  common(stable_eq);
  stable_eq->add_option("--v", cfg.v, "first tuple")->required();
  stable_eq->add_option("--w", cfg.w, "second tuple")->required();
  stable_eq->add_option("--stabilizer", cfg.stabilizer, "ugamma or a tuple");
  stable_eq->add_option("--gamma", cfg.gamma, "Gamma for ugamma (default: classes of v and w)");
  stable_eq->add_option("--max-level", cfg.max_level, "largest power of u appended");
  stable_eq->add_option("--confirmations", cfg.confirmations, "bijective steps before a final false");

  auto* adj_eq = app.add_subcommand("adj-eq", "equality of words in the adjoint group");
  common(adj_eq);
  adj_eq->add_option("--v", cfg.v, "first word")->required();
  adj_eq->add_option("--w", cfg.w, "second word")->required();
  adj_eq->add_option("--gamma", cfg.gamma, "Gamma (default: classes of v and w)");
  adj_eq->add_option("--max-level", cfg.max_level, "largest power of u_Gamma appended");
  adj_eq->add_option("--confirmations", cfg.confirmations, "bijective steps before a final false");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Caps caps = parse_caps(cfg.caps);
    Output output(cfg.format, out);
    int code = kOk;
    if (group->parsed()) {
      code = cmd_group(cfg, output);
    } else if (orbit_cmd->parsed()) {
      code = cmd_orbit(cfg, caps, output);
    } else if (classes->parsed()) {
      code = cmd_classes(cfg, caps, output);
    } else if (stability->parsed()) {
      code = cmd_stability(cfg, caps, output);
    } else if (h2->parsed()) {
      code = cmd_h2(cfg, caps, output);
    } else if (stable_eq->parsed()) {
      code = cmd_stable_eq(cfg, caps, output);
    } else if (adj_eq->parsed()) {
      code = cmd_adj_eq(cfg, caps, output);
    }
    output.finish();
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const GroupError& e) {
    err << "group error: " << e.what() << '\n';
    return kUsage;
  } catch (const SpecError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kIndeterminate;
  } catch (const Indeterminate& e) {
    err << "indeterminate: " << e.what() << '\n';
    return kIndeterminate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFalse;
  }
}

}  // namespace hurwitz::cli
