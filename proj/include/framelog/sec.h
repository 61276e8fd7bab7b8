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

#ifndef FRAMELOG_SEC_H_
#define FRAMELOG_SEC_H_

#include <optional>
#include <string>
#include <vector>

#include "framelog/extract.h"
#include "framelog/program.h"
#include "framelog/rulec.h"

namespace framelog {

// `<trigger> initiates <effect>.` or `<trigger> terminates <effect>.`
struct InitTermStatement {
  enum class Kind { kInitiation, kTermination };
  Kind kind = Kind::kInitiation;
  std::string trigger;
  std::string effect;
};

// nullopt when the line has neither verb.
std::optional<InitTermStatement> parse_init_term(std::string_view line);

// `initiates(A,F) :- guards.` with one domain guard per trigger role (and,
// for termination, per effect role) and `X!=Y` for variables that share a
// type, such as `$place1`/`$place2`. Throws CompileError when an initiated
// fluent mentions a variable the trigger lacks.
Rule compile_init_term(const InitTermStatement& statement, const CompileContext& ctx);

// Every line of an initiation/termination file; errors are "line N: ...".
struct InitTermFile {
  std::vector<Rule> rules;
  std::vector<std::string> errors;
};
InitTermFile compile_init_term_file(std::string_view text, const CompileContext& ctx);

// Frames happening at one instant. More than one payload means the sentence
// was a disjunction and exactly one of them happened.
struct Occurrence {
  std::vector<UlrTerm> payloads;
  int time = 1;
};

struct Narrative {
  std::vector<Occurrence> occurrences;
  std::vector<DomainAtom> domain;
  std::vector<UlrTerm> observed;  // payloads of observable frames
  int sentence_count = 0;
  std::vector<std::string> warnings;

  // Timestamps run 1..sentence_count+1; the last instant is reserved for
  // queries.
  int max_time() const { return sentence_count + 1; }
};

// Sentence k happens at time k. Copies made by coreference resolution keep
// their source sentence's time.
Narrative narrative_to_occurrences(const std::vector<ResolvedSentence>& sentences,
                                   int sentence_count, const LvpStore& store,
                                   const SchemaSet& schemas);
Narrative narrative_to_occurrences(const std::vector<DepParse>& sentences,
                                   const LvpStore& store, const SchemaSet& schemas);

// The two inertia rules plus `initiates(F,F) :- observable(F).`
std::vector<Rule> sec_axioms();

// happensAt facts, observable facts, domain facts and `timestamp(1..n+1).`
std::vector<Rule> narrative_rules(const Narrative& narrative);

// Frame literals become `holdsAt(Frame,T)` over one shared T guarded by
// `timestamp(T)`; domain guards are left alone.
Rule wrap_time_rule(const Rule& rule);
Rule unwrap_time_rule(const Rule& rule);

Query build_temporal_query(const Term& q, int max_time);

// Narrative, axioms, initiation/termination rules, time-wrapped rules and
// schema subdomain rules in one program.
Program assemble_sec_program(const Narrative& narrative,
                             const std::vector<Rule>& init_term_rules,
                             const std::vector<Rule>& time_rules,
                             const SchemaSet& schemas);

}  // namespace framelog

#endif  // FRAMELOG_SEC_H_
