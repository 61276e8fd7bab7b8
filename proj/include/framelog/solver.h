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

#ifndef FRAMELOG_SOLVER_H_
#define FRAMELOG_SOLVER_H_

#include <string>
#include <vector>

#include "framelog/ground.h"
#include "framelog/program.h"
#include "framelog/schema.h"

namespace framelog {

class QueryError : public Error {
 public:
  using Error::Error;
};

// Ground atoms in ascending term order.
struct AnswerSet {
  std::vector<Term> atoms;
  bool contains(const Term& atom) const;
  friend bool operator==(const AnswerSet&, const AnswerSet&) = default;
  friend auto operator<=>(const AnswerSet& a, const AnswerSet& b) {
    return a.atoms <=> b.atoms;
  }
};

std::string render(const AnswerSet& answer_set);

// All stable models, sorted. Well-founded bounds fix most atoms; the rest are
// searched with propagation and each candidate is checked for minimality
// against its reduct.
std::vector<AnswerSet> answer_sets(const GroundProgram& program,
                                   const Bounds& bounds = {});

enum class Mode { kBrave, kCautious };

std::string_view mode_name(Mode mode);
Mode parse_mode(std::string_view name);

// Matching used by queries: a frame pattern matches a frame atom with the
// same name whose role list contains every pattern role with a matching
// filler. Other terms match structurally.
bool query_match(const Term& pattern, const Term& atom,
                 std::unordered_map<std::string, Term>& subst);

struct QueryResult {
  Mode mode = Mode::kBrave;
  std::vector<std::string> variables;  // first-occurrence order
  // Each binding lists values in `variables` order; sorted and unique. A
  // satisfied ground query holds one empty binding.
  std::vector<std::vector<Term>> bindings;
  std::size_t answer_set_count = 0;

  bool satisfied() const { return !bindings.empty(); }
};

// `{Who="Mary",Therapy=mental}` per binding, one per line; `yes`/`no` for
// ground queries.
std::string render(const QueryResult& result);

QueryResult query(const std::vector<AnswerSet>& answer_sets, const Term& q,
                  Mode mode);

// Rejects frame names in `q` unknown to `schemas` (when non-empty).
void check_query_frames(const Term& q, const SchemaSet& schemas);

// Ground, solve and query in one step.
QueryResult solve_query(const Program& program, const Term& q, Mode mode,
                        const Bounds& bounds = {});

}  // namespace framelog

#endif  // FRAMELOG_SOLVER_H_
