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

#ifndef FRAMELOG_EXTRACT_H_
#define FRAMELOG_EXTRACT_H_

#include <optional>
#include <string>
#include <vector>

#include "framelog/conllu.h"
#include "framelog/lvp.h"
#include "framelog/program.h"
#include "framelog/schema.h"
#include "framelog/ulr.h"

namespace framelog {

class ExtractError : public Error {
 public:
  using Error::Error;
};

enum class Connective { kNone, kAnd, kOr };

std::string_view connective_name(Connective c);

struct Trigger {
  const Lvp* lvp = nullptr;
  int lu_token = 0;
};

// Every token whose lemma (or, for a `$type` variable token, whose type
// word) keys an LVP in the store, in surface order.
std::vector<Trigger> trigger_lvps(const DepParse& parse, const LvpStore& store);

struct RoleFill {
  std::string role;
  int token = 0;  // 0 when the filler does not come from a single token
  Term value;
  friend bool operator==(const RoleFill&, const RoleFill&) = default;
};

struct Score {
  int required = 0;
  int total = 0;
  // Summed path length of the filled roles; prefers the more specific of
  // two LVPs that fill the same number of roles.
  int depth = 0;
  friend auto operator<=>(const Score&, const Score&) = default;
};

// Result of applying one LVP at one lexical unit. A role listed more than
// once holds coordinated alternatives joined by `connective`; `expand`
// turns those into one parse per combination.
struct FrameParse {
  std::string frame;
  int lu_token = 0;
  std::vector<RoleFill> fillers;
  bool negated = false;
  // "is or is not able": both polarities, joined by `connective`.
  bool both_polarities = false;
  Connective connective = Connective::kNone;
  Score score;
  friend bool operator==(const FrameParse&, const FrameParse&) = default;
};

// Constant or variable for one filler token. `$name` tokens become the
// variable `Name`, Wh-words the variable named after them, proper nouns
// quoted strings, numerals and counted nouns integers, other words their
// lowercased lemma.
Term filler_value(const DepParse& parse, int token);

// nullopt when a required role stays unfilled or the coordination mixes
// "and" with "or".
std::optional<FrameParse> apply_lvp(const DepParse& parse, const Lvp& lvp,
                                    int lu_token);

// Per lexical unit, keeps the candidates with the maximal score (ties are
// all kept). Output is ordered by (lu_token, frame).
std::vector<FrameParse> select_parses(std::vector<FrameParse> candidates);

// Resolves coordinated alternatives into single-valued parses.
std::vector<FrameParse> expand(const FrameParse& parse);

struct SentenceGroup {
  std::vector<FrameParse> parses;  // already expanded
  Connective connective = Connective::kNone;
};

// Trigger, apply, select and expand over one sentence. Throws ExtractError
// when no frame is recognised or the connectives are mixed.
SentenceGroup extract_sentence(const DepParse& parse, const LvpStore& store);

// Frame term of an expanded parse, roles in schema order.
UlrTerm to_ulr(const FrameParse& parse, const SchemaSet& schemas);

struct Composition {
  std::vector<Rule> rules;
  std::vector<DomainAtom> domain;
  std::vector<std::string> warnings;
};

// Conjunction yields one fact per parse, disjunction one fact with a head
// disjunct per parse. Domain atoms cover every constant filler.
Composition compose_ulr(const SentenceGroup& group, const SchemaSet& schemas);

// Domain atoms for the constant fillers of `term`, in role order.
void append_domain_atoms(const UlrTerm& term, const SchemaSet& schemas,
                         std::vector<DomainAtom>& out);

struct ResolvedSentence {
  DepParse parse;
  std::size_t source = 0;  // index of the input sentence
};

// Replaces pronouns by the most recent agreeing proper-noun entity. A plural
// pronoun duplicates its sentence once per member of the nearest preceding
// coordination of proper nouns. Unresolvable pronouns are left in place and
// reported through `diagnostics`.
std::vector<ResolvedSentence> resolve_coreference(
    const std::vector<DepParse>& sentences,
    std::vector<std::string>* diagnostics = nullptr);

// Full pipeline over a document: coreference, extraction, composition.
Composition extract_document(const std::vector<DepParse>& sentences,
                             const LvpStore& store, const SchemaSet& schemas);

}  // namespace framelog

#endif  // FRAMELOG_EXTRACT_H_
