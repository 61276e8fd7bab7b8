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

#ifndef FRAMELOG_PROGRAM_H_
#define FRAMELOG_PROGRAM_H_

#include <string>
#include <variant>
#include <vector>

#include "framelog/term.h"

namespace framelog {

enum class CompareOp { kNotEqual, kLess };

// A body literal: a positive atom, a negation-as-failure atom, or an
// integer/constant comparison.
struct Literal {
  enum class Kind { kPositive, kNaf, kCompare };

  Kind kind = Kind::kPositive;
  Term atom;  // kPositive, kNaf
  CompareOp op = CompareOp::kNotEqual;
  Term lhs, rhs;  // kCompare

  static Literal positive(Term atom);
  static Literal naf(Term atom);
  static Literal compare(CompareOp op, Term lhs, Term rhs);

  bool is_positive() const { return kind == Kind::kPositive; }
  bool is_naf() const { return kind == Kind::kNaf; }
  bool is_compare() const { return kind == Kind::kCompare; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

// `H1 v ... v Hm :- B1, ..., Bn.` An empty body makes a (disjunctive) fact,
// an empty head an integrity constraint.
struct Rule {
  std::vector<Term> head;
  std::vector<Literal> body;

  bool is_fact() const { return body.empty() && head.size() == 1; }
  bool is_constraint() const { return head.empty(); }

  friend bool operator==(const Rule&, const Rule&) = default;
};

// `atom?`
struct Query {
  Term atom;
  friend bool operator==(const Query&, const Query&) = default;
};

using Statement = std::variant<Rule, Query>;

struct Program {
  std::vector<Rule> rules;
};

class UnsafeRuleError : public Error {
 public:
  UnsafeRuleError(const std::string& message, std::vector<std::string> vars)
      : Error(message), variables_(std::move(vars)) {}
  const std::vector<std::string>& variables() const { return variables_; }

 private:
  std::vector<std::string> variables_;
};

// Variables occurring in the head, in a naf literal or in a comparison that
// have no occurrence in a positive body literal. Empty means safe.
std::vector<std::string> unsafe_variables(const Rule& rule);

// Builds a rule and rejects it with UnsafeRuleError if it is unsafe.
Rule make_rule(std::vector<Term> head, std::vector<Literal> body);

std::string render(const Literal& literal);
std::string render(const Rule& rule);
std::string render(const Query& query);
std::string render(const Statement& statement);
std::string render(const Program& program);

// Collapses all whitespace; used to compare renderings against multi-line
// displays of the same statement.
std::string squash_whitespace(std::string_view text);

}  // namespace framelog

#endif  // FRAMELOG_PROGRAM_H_
