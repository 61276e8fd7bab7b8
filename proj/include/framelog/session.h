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

#ifndef FRAMELOG_SESSION_H_
#define FRAMELOG_SESSION_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "framelog/conllu.h"
#include "framelog/ground.h"
#include "framelog/lvp.h"
#include "framelog/program.h"
#include "framelog/schema.h"
#include "framelog/solver.h"

namespace framelog {

// Interactive knowledge base. English input is looked up in the parse bank;
// logic text in the rendered grammar is accepted verbatim.
//
//   Daniel's patient Mary has UTI.      assert a fact sentence
//   If ..., then ....                   assert a rule
//   A initiates F. / A terminates F.    assert an initiation/termination
//   Who undergoes $therapy?             ask
//   frame("F",[rl("R",a)]).             assert logic text
//   ?- frame("F",[rl("R",X)]).          ask in logic text
//   :act Mary goes to the bedroom.      append a narrative sentence
//   :mode brave|cautious  :show program  :reset  :help
class Session {
 public:
  Session(SchemaSet schemas, LvpStore store, ParseBank bank, Bounds bounds = {});

  struct Reply {
    std::string text;
    bool ok = true;
  };

  // Runs one line. On error the session is left as it was.
  Reply execute(std::string_view line);

  Mode mode() const { return mode_; }
  bool empty() const;
  // The program queries run against.
  Program program() const;

 private:
  Reply ask(const Term& q);
  Program static_program() const;
  bool temporal() const { return !narrative_.empty(); }

  SchemaSet schemas_;
  LvpStore store_;
  ParseBank bank_;
  Bounds bounds_;
  Mode mode_ = Mode::kBrave;
  std::vector<DepParse> facts_;
  std::vector<DepParse> narrative_;
  std::vector<Rule> logic_rules_;
  std::vector<Rule> english_rules_;
  std::vector<Rule> init_term_rules_;
};

// Reads commands until end of input, echoing a prompt when `interactive`.
void run_repl(Session& session, std::istream& in, std::ostream& out, bool interactive);

struct RunInputs {
  std::string schema;       // schema file text
  std::string lvps;         // saved LVP store
  std::string facts;        // CoNLL-U of the fact or narrative sentences, in order
  std::string bank;         // CoNLL-U of every rule, statement and query sentence
  std::string rules;        // rule file
  std::string init_term;    // initiation/termination file
  std::string queries;      // one English or logic query per line
  Mode mode = Mode::kBrave;
  bool normalize_connectives = true;
  Bounds bounds;
};

struct RunReport {
  std::string text;
  std::size_t errors = 0;
};

// ingest -> coreference -> extract -> compile -> (SEC when any
// initiation/termination statement is given) -> solve.
RunReport run_files(const RunInputs& inputs);

}  // namespace framelog

#endif  // FRAMELOG_SESSION_H_
