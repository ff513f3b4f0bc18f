// Copyright 2026 The Holonomic Authors
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

// Experiment configuration: a sectioned key = value text format.
//
//   [system]      alphabet_size, lambda, row (repeated), symbol_base
//   [potential]   past_depth, future_depth, default, entry = w0 w1 … : n/d
//   [constraint]  one φ component per section, same keys as [potential]
//   [targets]     c = …, h = …
//   [boundary]    f = …
//   [solver]      k_max, inner_tolerance, outer_stop, seed
//
// Weights and vectors are exact rationals ("n" or "n/d"); only the solver
// tolerances accept decimal literals.

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "holonomic/errors.hpp"
#include "holonomic/potential.hpp"
#include "holonomic/rational.hpp"
#include "holonomic/subaction.hpp"
#include "holonomic/symbolic.hpp"

namespace holonomic {

struct SolverConfig {
  int k_max = 30;
  long double inner_tolerance = 1e-12L;
  long double outer_stop = 1e-9L;
  std::uint64_t seed = 1;

  DiscountSchedule schedule() const {
    DiscountSchedule s = DiscountSchedule::standard(k_max);
    s.inner_tolerance = inner_tolerance;
    s.outer_stop = outer_stop;
    return s;
  }
};

struct ExperimentConfig {
  SubshiftSystem system;
  LocallyConstantPotential potential;
  ConstraintSpec constraints;
  std::optional<std::vector<Rational>> boundary;
  SolverConfig solver;
  int symbol_base = 0;
};

namespace detail {

struct TableBlock {
  int line = 0;
  std::optional<int> past_depth;
  std::optional<int> future_depth;
  Rational fill{0};
  std::vector<std::pair<int, std::pair<Word, Rational>>> entries;  // (line, (window, value))
};

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream in(t);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline long long parse_int(const std::string& s, int line, const std::string& key) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line, key + ": expected an integer, got '" + s + "'");
  }
}

inline Rational parse_rational(const std::string& s, int line, const std::string& key) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw ConfigError(line, key + ": expected a rational n or n/d, got '" + s + "'");
  }
}

inline long double parse_float(const std::string& s, int line, const std::string& key) {
  try {
    std::size_t pos = 0;
    long double v = std::stold(s, &pos);
    if (pos != s.size() || !(v > 0)) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line, key + ": expected a positive number, got '" + s + "'");
  }
}

inline std::vector<Rational> parse_vector(const std::string& s, int line, const std::string& key) {
  std::vector<Rational> out;
  for (const auto& tok : split_list(s)) out.push_back(parse_rational(tok, line, key));
  if (out.empty()) throw ConfigError(line, key + ": empty vector");
  return out;
}

inline LocallyConstantPotential build_table(const SubshiftSystem& system, const TableBlock& block,
                                            const std::string& name) {
  if (!block.past_depth || !block.future_depth)
    throw ConfigError(block.line, name + ": past_depth and future_depth are required");
  std::map<Word, Rational> entries;
  for (const auto& [line, kv] : block.entries) {
    const auto& [w, v] = kv;
    if (static_cast<int>(w.size()) != *block.past_depth + *block.future_depth)
      throw ConfigError(line, name + ".entry: window " + word_string(w) + " has the wrong length");
    if (!system.allowed_word(w)) throw ConfigError(line, name + ".entry: window " + word_string(w) + " is not allowed");
    if (!entries.emplace(w, v).second)
      throw ConfigError(line, name + ".entry: duplicate window " + word_string(w));
  }
  try {
    return LocallyConstantPotential(system, *block.past_depth, *block.future_depth, entries, block.fill);
  } catch (const InvalidPotential& e) {
    throw ConfigError(block.line, name + ": " + e.what());
  }
}

}  // namespace detail

inline ExperimentConfig parse_config(std::istream& in) {
  using namespace detail;
  std::optional<int> alphabet;
  std::vector<std::vector<int>> rows;
  std::vector<int> row_lines;
  Rational lambda(1, 2);
  int symbol_base = 0;
  TableBlock potential;
  std::vector<TableBlock> constraints;
  std::optional<std::vector<Rational>> c, h, boundary;
  SolverConfig solver;
  bool have_potential = false;

  std::string section;
  std::string raw;
  // Symbol lists are converted to 0-based once symbol_base is known.
  struct Pending {
    int line;
    std::vector<long long> syms;
    Rational value;
  };
  std::vector<std::pair<int, Pending>> pending;  // (constraint index or −1, entry)

  for (int line = 1; std::getline(in, raw); ++line) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string text = trim(raw);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError(line, "malformed section header");
      section = trim(text.substr(1, text.size() - 2));
      if (section == "constraint") {
        constraints.emplace_back();
        constraints.back().line = line;
      } else if (section == "potential") {
        if (have_potential) throw ConfigError(line, "duplicate [potential] section");
        have_potential = true;
        potential.line = line;
      } else if (section != "system" && section != "targets" && section != "boundary" && section != "solver") {
        throw ConfigError(line, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    const std::string field = section + "." + key;
    if (section.empty()) throw ConfigError(line, "key '" + key + "' outside any section");

    if (section == "system") {
      if (key == "alphabet_size") {
        long long r = parse_int(value, line, field);
        if (r < 1) throw ConfigError(line, field + ": must be at least 1");
        alphabet = static_cast<int>(r);
      } else if (key == "lambda") {
        lambda = parse_rational(value, line, field);
      } else if (key == "row") {
        std::vector<int> row;
        for (const auto& tok : split_list(value)) row.push_back(static_cast<int>(parse_int(tok, line, field)));
        rows.push_back(std::move(row));
        row_lines.push_back(line);
      } else if (key == "symbol_base") {
        long long b = parse_int(value, line, field);
        if (b != 0 && b != 1) throw ConfigError(line, field + ": must be 0 or 1");
        symbol_base = static_cast<int>(b);
      } else {
        throw ConfigError(line, "unknown key " + field);
      }
    } else if (section == "potential" || section == "constraint") {
      TableBlock& block = section == "potential" ? potential : constraints.back();
      const int owner = section == "potential" ? -1 : static_cast<int>(constraints.size()) - 1;
      if (key == "past_depth" || key == "future_depth") {
        long long d = parse_int(value, line, field);
        if (d < 1) throw ConfigError(line, field + ": must be at least 1");
        (key == "past_depth" ? block.past_depth : block.future_depth) = static_cast<int>(d);
      } else if (key == "default") {
        block.fill = parse_rational(value, line, field);
      } else if (key == "entry") {
        const auto colon = value.find(':');
        if (colon == std::string::npos) throw ConfigError(line, field + ": expected 'symbols : value'");
        std::vector<long long> syms;
        for (const auto& tok : split_list(value.substr(0, colon))) syms.push_back(parse_int(tok, line, field));
        if (syms.empty()) throw ConfigError(line, field + ": empty window");
        pending.push_back({owner, Pending{line, syms, parse_rational(trim(value.substr(colon + 1)), line, field)}});
      } else {
        throw ConfigError(line, "unknown key " + field);
      }
    } else if (section == "targets") {
      if (key == "c") c = parse_vector(value, line, field);
      else if (key == "h") h = parse_vector(value, line, field);
      else throw ConfigError(line, "unknown key " + field);
    } else if (section == "boundary") {
      if (key == "f") boundary = parse_vector(value, line, field);
      else throw ConfigError(line, "unknown key " + field);
    } else if (section == "solver") {
      if (key == "k_max") {
        long long k = parse_int(value, line, field);
        if (k < 2 || k > 60) throw ConfigError(line, field + ": must lie in [2, 60]");
        solver.k_max = static_cast<int>(k);
      } else if (key == "inner_tolerance") {
        solver.inner_tolerance = parse_float(value, line, field);
      } else if (key == "outer_stop") {
        solver.outer_stop = parse_float(value, line, field);
      } else if (key == "seed") {
        long long s = parse_int(value, line, field);
        if (s < 0) throw ConfigError(line, field + ": must be nonnegative");
        solver.seed = static_cast<std::uint64_t>(s);
      } else {
        throw ConfigError(line, "unknown key " + field);
      }
    }
  }

  if (!have_potential) throw ConfigError(0, "missing [potential] section");
  if (!alphabet && rows.empty()) throw ConfigError(0, "system.alphabet_size or system.row is required");
  if (rows.empty()) rows.assign(*alphabet, std::vector<int>(*alphabet, 1));
  if (alphabet && static_cast<int>(rows.size()) != *alphabet)
    throw ConfigError(row_lines.empty() ? 0 : row_lines.back(),
                      "system: " + std::to_string(rows.size()) + " rows for alphabet_size " + std::to_string(*alphabet));
  std::optional<SubshiftSystem> system;
  try {
    system.emplace(rows, lambda);
  } catch (const InvalidSystem& e) {
    throw ConfigError(row_lines.empty() ? 0 : row_lines.front(), std::string("system: ") + e.what());
  }

  for (auto& [owner, p] : pending) {
    TableBlock& block = owner < 0 ? potential : constraints[owner];
    Word w;
    for (long long s : p.syms) {
      long long v = s - symbol_base;
      if (v < 0 || v >= system->alphabet_size())
        throw ConfigError(p.line, "entry: symbol " + std::to_string(s) + " outside the alphabet");
      w.push_back(static_cast<Symbol>(v));
    }
    block.entries.push_back({p.line, {std::move(w), p.value}});
  }

  ExperimentConfig cfg{*system, build_table(*system, potential, "potential"), {}, boundary, solver, symbol_base};
  for (const auto& block : constraints) cfg.constraints.components.push_back(build_table(*system, block, "constraint"));
  if ((c || h) && constraints.empty()) throw ConfigError(0, "targets given without any [constraint] section");
  if (c && c->size() != constraints.size())
    throw ConfigError(0, "targets.c has " + std::to_string(c->size()) + " entries for " +
                             std::to_string(constraints.size()) + " constraints");
  if (h && h->size() != constraints.size())
    throw ConfigError(0, "targets.h has " + std::to_string(h->size()) + " entries for " +
                             std::to_string(constraints.size()) + " constraints");
  cfg.constraints.multiplier = c;
  cfg.constraints.target = h;
  return cfg;
}

inline ExperimentConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open " + path);
  return parse_config(in);
}

}  // namespace holonomic
