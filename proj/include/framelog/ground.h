// Copyright 2026 The Framelog Authors.
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

#ifndef FRAMELOG_GROUND_H_
#define FRAMELOG_GROUND_H_

#include <chrono>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "framelog/program.h"

namespace framelog {

class GroundError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

struct Bounds {
  std::size_t max_ground_rules = 100000;
  std::size_t max_atoms = std::size_t{1} << 20;
  std::chrono::milliseconds time_budget{10000};

  // Defaults overridden by FRAMELOG_MAX_GROUND_RULES, FRAMELOG_MAX_ATOMS and
  // FRAMELOG_TIME_BUDGET_MS when set.
  static Bounds from_environment();
};

// Throws ResourceError once the budget is spent.
class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : end_(std::chrono::steady_clock::now() + budget) {}
  void check(const char* stage) const;

 private:
  std::chrono::steady_clock::time_point end_;
};

struct GroundRule {
  std::vector<int> head;
  std::vector<int> pos;
  std::vector<int> neg;
  friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

class GroundProgram {
 public:
  int intern(const Term& atom);
  // -1 when the atom does not occur.
  int find(const Term& atom) const;
  const Term& atom(int id) const { return atoms_[static_cast<std::size_t>(id)]; }
  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<GroundRule>& rules() const { return rules_; }
  // Returns false when the rule is already present.
  bool add_rule(GroundRule rule);
  Program to_program() const;

  std::vector<std::string> warnings;

 private:
  std::vector<Term> atoms_;
  std::unordered_map<Term, int, TermHash> index_;
  std::vector<GroundRule> rules_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> rule_index_;
};

// Bottom-up instantiation over the atoms derivable when negation is ignored.
// Comparisons are evaluated, naf literals over underivable atoms dropped and
// `p(a..b)` ranges expanded. Throws GroundError on an unsafe rule.
GroundProgram ground(const Program& program, const Bounds& bounds = {});

// One-way matching of `pattern` (may hold variables) against ground `term`.
// Extends `subst`; on failure `subst` may hold partial bindings.
bool match(const Term& pattern, const Term& term,
           std::unordered_map<std::string, Term>& subst);

Term substitute(const Term& t, const std::unordered_map<std::string, Term>& subst);

}  // namespace framelog

#endif  // FRAMELOG_GROUND_H_
