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

#ifndef FRAMELOG_RULEC_H_
#define FRAMELOG_RULEC_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "framelog/conllu.h"
#include "framelog/extract.h"
#include "framelog/lvp.h"
#include "framelog/program.h"
#include "framelog/schema.h"

namespace framelog {

class CompileError : public Error {
 public:
  using Error::Error;
};

// Everything needed to turn an English sentence into frames: the parse
// lookup for the sentence text, the LVPs and the frame schemas.
struct CompileContext {
  const LvpStore& store;
  const SchemaSet& schemas;
  const ParseBank& bank;
};

struct CompileOptions {
  // Split disjunctive premises and conjunctive conclusions into several
  // equivalent rules instead of rejecting them.
  bool normalize_connectives = false;
};

// `If P1, P2, ..., and Pn, then C1, ..., or Cm.`
struct RuleSource {
  std::vector<std::string> premises;
  std::vector<std::string> conclusions;
  std::string text;
};

// Splits a rule sentence. Comma-separated pieces are regrouped into the
// longest runs the parse bank knows, so commas inside a premise survive.
RuleSource split_rule(std::string_view text, const ParseBank& bank);

// Looks the sentence up and extracts its frames.
SentenceGroup parse_sentence(std::string_view text, const CompileContext& ctx);

// Renaming applied to typed variables of one statement: `Place1` becomes
// `Place` unless `Place` is also used.
std::unordered_map<std::string, std::string> typed_variable_renaming(
    const std::vector<std::string>& names);
Term rename_variables(const Term& t,
                      const std::unordered_map<std::string, std::string>& renaming);
Rule rename_variables(const Rule& rule,
                      const std::unordered_map<std::string, std::string>& renaming);

// One rule, or several when connectives are normalised. Throws CompileError
// on connective violations or a `not provable` conclusion, UnsafeRuleError
// when a conclusion variable occurs in no premise.
std::vector<Rule> compile_rule(const RuleSource& source, const CompileContext& ctx,
                               CompileOptions options = {});
std::vector<Rule> compile_rule(std::string_view text, const CompileContext& ctx,
                               CompileOptions options = {});

// `Who undergoes $therapy?` -> frame with variables, roles limited to the
// ones the question mentions.
Query compile_query(std::string_view text, const CompileContext& ctx);

std::vector<std::string> check_safety(const Rule& rule);

struct CompiledFile {
  std::vector<Rule> rules;
  std::vector<Query> queries;
  std::vector<std::string> errors;  // "line N: ..."
};

// One statement per line: rules start with `If`, queries end with `?`.
// Blank lines and `%` comments are skipped.
CompiledFile compile_file(std::string_view text, const CompileContext& ctx,
                          CompileOptions options = {});

}  // namespace framelog

#endif  // FRAMELOG_RULEC_H_
