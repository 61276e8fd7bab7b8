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

#include "framelog/session.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "framelog/extract.h"
#include "framelog/rulec.h"
#include "framelog/sec.h"
#include "framelog/syntax.h"
#include "framelog/text.h"

namespace framelog {
namespace {

constexpr std::string_view kHelp =
    "sentence.            assert a fact (needs a parse in the bank)\n"
    "If ..., then ....    assert a rule\n"
    "A initiates F.       assert an initiation (or terminates)\n"
    "question?            ask in English\n"
    "logic text.          assert a rule in logic syntax\n"
    "?- atom.             ask in logic syntax\n"
    ":act sentence.       append a narrative sentence\n"
    ":mode brave|cautious\n"
    ":show program\n"
    ":reset\n";

bool looks_like_logic(std::string_view line) {
  if (line.starts_with("?-") || line.starts_with(":-")) return true;
  if (line.empty()) return false;
  char c = line.front();
  return c >= 'a' && c <= 'z';
}

void add_composition(const Composition& c, std::vector<Rule>& out) {
  for (const Rule& r : c.rules) out.push_back(r);
  for (const DomainAtom& d : c.domain) out.push_back(Rule{{d.to_term()}, {}});
}

std::string render_rules(const std::vector<Rule>& rules) {
  std::string out;
  for (const Rule& r : rules) out += render(r) + "\n";
  return out;
}

}  // namespace

Session::Session(SchemaSet schemas, LvpStore store, ParseBank bank, Bounds bounds)
    : schemas_(std::move(schemas)),
      store_(std::move(store)),
      bank_(std::move(bank)),
      bounds_(bounds) {}

bool Session::empty() const {
  return facts_.empty() && narrative_.empty() && logic_rules_.empty() &&
         english_rules_.empty() && init_term_rules_.empty();
}

Program Session::static_program() const {
  Program p;
  add_composition(extract_document(facts_, store_, schemas_), p.rules);
  for (const Rule& r : logic_rules_) p.rules.push_back(r);
  return p;
}

Program Session::program() const {
  Program base = static_program();
  if (!temporal()) {
    for (const Rule& r : english_rules_) base.rules.push_back(r);
    for (const Rule& r : schemas_.domain_rules()) base.rules.push_back(r);
    return base;
  }
  Narrative n = narrative_to_occurrences(narrative_, store_, schemas_);
  Program p = assemble_sec_program(n, init_term_rules_, english_rules_, schemas_);
  for (const Rule& r : base.rules) p.rules.push_back(r);
  return p;
}

Session::Reply Session::ask(const Term& q) {
  if (empty()) return {"empty program", true};
  check_query_frames(q, schemas_);
  Term atom = q;
  if (temporal()) {
    Narrative n = narrative_to_occurrences(narrative_, store_, schemas_);
    atom = build_temporal_query(q, n.max_time()).atom;
  }
  QueryResult r = solve_query(program(), atom, mode_, bounds_);
  std::string text = render(r);
  if (text.empty()) text = "no answers";
  return {text, true};
}

Session::Reply Session::execute(std::string_view raw) {
  std::string line(trim(raw));
  if (line.empty() || line.front() == '%') return {"", true};
  CompileContext ctx{store_, schemas_, bank_};
  try {
    if (line.front() == ':') {
      std::istringstream in(line.substr(1));
      std::string cmd;
      in >> cmd;
      std::string rest;
      std::getline(in, rest);
      rest = trim(rest);
      if (cmd == "mode") {
        if (rest.empty()) return {std::string(mode_name(mode_)), true};
        mode_ = parse_mode(rest);
        return {"mode " + std::string(mode_name(mode_)), true};
      }
      if (cmd == "show") {
        if (rest != "program") return {"error: usage :show program", false};
        if (empty()) return {"empty program", true};
        return {render(program()), true};
      }
      if (cmd == "reset") {
        *this = Session(std::move(schemas_), std::move(store_), std::move(bank_), bounds_);
        return {"empty program", true};
      }
      if (cmd == "act") {
        const DepParse* parse = bank_.find(rest);
        if (parse == nullptr) return {"error: no parse for sentence: " + rest, false};
        std::vector<DepParse> next = narrative_;
        next.push_back(*parse);
        narrative_to_occurrences(next, store_, schemas_);
        narrative_ = std::move(next);
        return {"ok", true};
      }
      if (cmd == "help") return {std::string(kHelp), true};
      return {"error: unknown command :" + cmd, false};
    }
    if (looks_like_logic(line)) {
      Statement st = parse_statement(line);
      if (const Query* q = std::get_if<Query>(&st)) return ask(q->atom);
      const Rule& rule = std::get<Rule>(st);
      std::vector<std::string> unsafe = unsafe_variables(rule);
      if (!unsafe.empty()) {
        throw UnsafeRuleError("unsafe rule: variable " + unsafe.front() +
                                  " does not occur in a positive body literal",
                              unsafe);
      }
      logic_rules_.push_back(rule);
      return {"ok", true};
    }
    if (line.back() == '?') return ask(compile_query(line, ctx).atom);
    if (starts_with_ci(line, "if ")) {
      std::vector<Rule> rules = compile_rule(line, ctx);
      english_rules_.insert(english_rules_.end(), rules.begin(), rules.end());
      return {render_rules(rules), true};
    }
    if (std::optional<InitTermStatement> st = parse_init_term(line)) {
      Rule rule = compile_init_term(*st, ctx);
      init_term_rules_.push_back(rule);
      return {render(rule), true};
    }
    const DepParse* parse = bank_.find(line);
    if (parse == nullptr) return {"error: no parse for sentence: " + line, false};
    std::vector<DepParse> next = facts_;
    next.push_back(*parse);
    extract_document(next, store_, schemas_);
    Composition one = extract_document({*parse}, store_, schemas_);
    facts_ = std::move(next);
    return {render_rules(one.rules), true};
  } catch (const Error& e) {
    return {"error: " + std::string(e.what()), false};
  }
}

void run_repl(Session& session, std::istream& in, std::ostream& out, bool interactive) {
  std::string line;
  for (;;) {
    if (interactive) out << "framelog> " << std::flush;
    if (!std::getline(in, line)) break;
    std::string t(trim(line));
    if (t == ":quit" || t == ":q") break;
    Session::Reply reply = session.execute(t);
    if (reply.text.empty()) continue;
    out << reply.text;
    if (reply.text.back() != '\n') out << '\n';
  }
}

RunReport run_files(const RunInputs& in) {
  RunReport report;
  std::ostringstream out;
  auto error = [&](const std::string& msg) {
    out << "error: " << msg << "\n";
    ++report.errors;
  };

  SchemaSet schemas;
  LvpStore store;
  ParseBank bank;
  std::vector<DepParse> facts;
  try {
    schemas = SchemaSet::parse(in.schema);
    store = load_store(in.lvps);
    std::vector<std::string> warnings;
    facts = load_conllu(in.facts, &warnings);
    bank.add_all(load_conllu(in.bank, &warnings));
    bank.add_all(facts);
    for (const std::string& w : warnings) out << "warning: " << w << "\n";
  } catch (const Error& e) {
    error(e.what());
    report.text = out.str();
    return report;
  }

  CompileContext ctx{store, schemas, bank};
  CompileOptions options;
  options.normalize_connectives = in.normalize_connectives;
  CompiledFile rules = compile_file(in.rules, ctx, options);
  for (const std::string& e : rules.errors) error("rules: " + e);
  InitTermFile it = compile_init_term_file(in.init_term, ctx);
  for (const std::string& e : it.errors) error("init-term: " + e);
  const bool temporal = !it.rules.empty();

  Program program;
  int max_time = 0;
  try {
    if (temporal) {
      Narrative n = narrative_to_occurrences(facts, store, schemas);
      for (const std::string& w : n.warnings) out << "warning: " << w << "\n";
      program = assemble_sec_program(n, it.rules, rules.rules, schemas);
      max_time = n.max_time();
    } else {
      std::vector<std::string> diagnostics;
      resolve_coreference(facts, &diagnostics);
      for (const std::string& d : diagnostics) out << "warning: " << d << "\n";
      Composition c = extract_document(facts, store, schemas);
      for (const std::string& w : c.warnings) out << "warning: " << w << "\n";
      add_composition(c, program.rules);
      for (const Rule& r : rules.rules) program.rules.push_back(r);
      for (const Rule& r : schemas.domain_rules()) program.rules.push_back(r);
    }
  } catch (const Error& e) {
    error(e.what());
    report.text = out.str();
    return report;
  }
  out << "% program\n" << render(program);

  std::vector<Term> queries;
  for (const Query& q : rules.queries) queries.push_back(q.atom);
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(in.queries)) {
    ++line_no;
    std::string line(trim(raw));
    if (line.empty() || line.front() == '%') continue;
    try {
      if (looks_like_logic(line)) {
        Statement st = parse_statement(line);
        const Query* q = std::get_if<Query>(&st);
        if (q == nullptr) throw QueryError("not a query: " + line);
        queries.push_back(q->atom);
      } else {
        queries.push_back(compile_query(line, ctx).atom);
      }
    } catch (const Error& e) {
      error("queries: line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  if (!queries.empty()) {
    GroundProgram ground_program;
    std::vector<AnswerSet> sets;
    try {
      ground_program = ground(program, in.bounds);
      for (const std::string& w : ground_program.warnings) out << "warning: " << w << "\n";
      sets = answer_sets(ground_program, in.bounds);
    } catch (const Error& e) {
      error(e.what());
      report.text = out.str();
      return report;
    }
    out << "% " << sets.size() << " answer set(s), mode " << mode_name(in.mode) << "\n";
    for (const Term& raw : queries) {
      try {
        check_query_frames(raw, schemas);
        Term q = temporal ? build_temporal_query(raw, max_time).atom : raw;
        out << "?- " << render(q) << ".\n";
        std::string answer = render(query(sets, q, in.mode));
        out << (answer.empty() ? "no answers" : answer) << "\n";
      } catch (const Error& e) {
        error(e.what());
      }
    }
  }
  report.text = out.str();
  return report;
}

}  // namespace framelog
