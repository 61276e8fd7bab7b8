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

#include "framelog/sec.h"

#include <algorithm>
#include <cctype>

#include "framelog/syntax.h"
#include "framelog/text.h"

namespace framelog {

namespace {

std::string type_base(const std::string& var) {
  std::string s = to_lower(var);
  while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

Term single_frame(std::string_view sentence, std::string_view what,
                  const CompileContext& ctx) {
  SentenceGroup g = parse_sentence(sentence, ctx);
  if (g.parses.size() != 1 || g.connective != Connective::kNone) {
    throw CompileError(std::string(what) + " \"" + std::string(sentence) +
                       "\" must be a single frame without conjunction or disjunction");
  }
  try {
    return to_ulr(g.parses.front(), ctx.schemas).to_term();
  } catch (const CompileError&) {
    throw;
  } catch (const Error& e) {
    throw CompileError(e.what());
  }
}

void add_guards(const Term& frame, const SchemaSet& schemas, std::vector<Literal>& out) {
  auto u = UlrTerm::from_term(frame);
  if (!u) return;
  for (const auto& rf : u->roles()) {
    if (!rf.filler.is_variable()) continue;
    Literal g = Literal::positive(Term::compound(
        schemas.domain_predicate(u->frame_name(), rf.role), {rf.filler}));
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
}

bool is_frame(const Term& t) { return t.is_compound("frame", 2); }

std::string fresh_time_variable(const Rule& rule) {
  std::vector<std::string> used;
  for (const Term& h : rule.head) h.collect_variables(used);
  for (const Literal& l : rule.body) {
    l.atom.collect_variables(used);
    l.lhs.collect_variables(used);
    l.rhs.collect_variables(used);
  }
  std::string name = "T";
  for (int i = 0; std::find(used.begin(), used.end(), name) != used.end(); ++i) {
    name = "T_" + std::to_string(i);
  }
  return name;
}

}  // namespace

std::optional<InitTermStatement> parse_init_term(std::string_view line) {
  std::string_view t = trim(line);
  while (!t.empty() && t.back() == '.') t = trim(t.substr(0, t.size() - 1));
  for (auto [word, kind] : {std::pair{std::string_view(" initiates "),
                                      InitTermStatement::Kind::kInitiation},
                            std::pair{std::string_view(" terminates "),
                                      InitTermStatement::Kind::kTermination}}) {
    std::size_t pos = t.find(word);
    if (pos == std::string_view::npos) continue;
    return InitTermStatement{kind, std::string(trim(t.substr(0, pos))),
                             std::string(trim(t.substr(pos + word.size())))};
  }
  return std::nullopt;
}

Rule compile_init_term(const InitTermStatement& statement, const CompileContext& ctx) {
  Term trigger = single_frame(statement.trigger, "trigger", ctx);
  Term effect = single_frame(statement.effect, "effect", ctx);
  std::vector<std::string> names;
  trigger.collect_variables(names);
  std::size_t trigger_vars = names.size();
  effect.collect_variables(names);
  if (statement.kind == InitTermStatement::Kind::kInitiation &&
      names.size() > trigger_vars) {
    throw CompileError("unbound effect variable " + to_lower(names[trigger_vars]) +
                       " in \"" + statement.effect + "\"");
  }
  auto renaming = typed_variable_renaming(names);
  trigger = rename_variables(trigger, renaming);
  effect = rename_variables(effect, renaming);

  std::vector<Literal> body;
  add_guards(trigger, ctx.schemas, body);
  if (statement.kind == InitTermStatement::Kind::kTermination) {
    add_guards(effect, ctx.schemas, body);
  }
  auto renamed = [&](const std::string& n) {
    auto it = renaming.find(n);
    return it == renaming.end() ? n : it->second;
  };
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (type_base(names[i]) == type_base(names[j])) {
        body.push_back(Literal::compare(CompareOp::kNotEqual,
                                        Term::variable(renamed(names[i])),
                                        Term::variable(renamed(names[j]))));
      }
    }
  }
  const char* functor =
      statement.kind == InitTermStatement::Kind::kInitiation ? "initiates" : "terminates";
  return make_rule({Term::compound(functor, {trigger, effect})}, std::move(body));
}

InitTermFile compile_init_term_file(std::string_view text, const CompileContext& ctx) {
  InitTermFile out;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '%') continue;
    try {
      auto st = parse_init_term(t);
      if (!st) throw CompileError("expected \"... initiates ...\" or \"... terminates ...\"");
      out.rules.push_back(compile_init_term(*st, ctx));
    } catch (const Error& e) {
      out.errors.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

Narrative narrative_to_occurrences(const std::vector<ResolvedSentence>& sentences,
                                   int sentence_count, const LvpStore& store,
                                   const SchemaSet& schemas) {
  Narrative n;
  n.sentence_count = sentence_count;
  for (const ResolvedSentence& rs : sentences) {
    int time = static_cast<int>(rs.source) + 1;
    SentenceGroup g = extract_sentence(rs.parse, store);
    std::vector<UlrTerm> terms;
    for (const auto& fp : g.parses) terms.push_back(to_ulr(fp, schemas));
    for (const UlrTerm& u : terms) {
      append_domain_atoms(u, schemas, n.domain);
      const FrameSchema* fs = schemas.find(u.frame_name());
      if (fs && fs->observable &&
          std::find(n.observed.begin(), n.observed.end(), u) == n.observed.end()) {
        n.observed.push_back(u);
      }
    }
    if (g.connective == Connective::kOr && terms.size() > 1) {
      n.occurrences.push_back({terms, time});
    } else {
      for (auto& u : terms) n.occurrences.push_back({{std::move(u)}, time});
    }
  }
  return n;
}

Narrative narrative_to_occurrences(const std::vector<DepParse>& sentences,
                                   const LvpStore& store, const SchemaSet& schemas) {
  std::vector<std::string> diagnostics;
  auto resolved = resolve_coreference(sentences, &diagnostics);
  Narrative n = narrative_to_occurrences(resolved, static_cast<int>(sentences.size()),
                                         store, schemas);
  n.warnings.insert(n.warnings.begin(), diagnostics.begin(), diagnostics.end());
  return n;
}

std::vector<Rule> sec_axioms() {
  static const std::vector<Rule> axioms = parse_program(
      "holdsAt(F,T2) :- happensAt(A,T1), initiates(A,F), timestamp(T2), T1<T2, "
      "not stoppedIn(T1,F,T2).\n"
      "stoppedIn(T1,F,T2) :- happensAt(A,T), terminates(A,F), timestamp(T1), T1<T, "
      "timestamp(T2), T<T2.\n"
      "initiates(F,F) :- observable(F).\n").rules;
  return axioms;
}

std::vector<Rule> narrative_rules(const Narrative& narrative) {
  std::vector<Rule> out;
  for (const Occurrence& o : narrative.occurrences) {
    Rule r;
    for (const UlrTerm& p : o.payloads) {
      r.head.push_back(Term::compound("happensAt", {p.to_term(), Term::integer(o.time)}));
    }
    out.push_back(std::move(r));
  }
  for (const UlrTerm& u : narrative.observed) {
    out.push_back(Rule{{Term::compound("observable", {u.to_term()})}, {}});
  }
  for (const DomainAtom& d : narrative.domain) out.push_back(Rule{{d.to_term()}, {}});
  out.push_back(Rule{{Term::compound("timestamp", {Term::range(1, narrative.max_time())})}, {}});
  return out;
}

Rule wrap_time_rule(const Rule& rule) {
  Term t = Term::variable(fresh_time_variable(rule));
  Rule out;
  for (const Term& h : rule.head) {
    out.head.push_back(is_frame(h) ? Term::compound("holdsAt", {h, t}) : h);
  }
  for (const Literal& l : rule.body) {
    if (!l.is_compare() && is_frame(l.atom)) {
      Term w = Term::compound("holdsAt", {l.atom, t});
      out.body.push_back(l.is_naf() ? Literal::naf(w) : Literal::positive(w));
    } else {
      out.body.push_back(l);
    }
  }
  out.body.push_back(Literal::positive(Term::compound("timestamp", {t})));
  return out;
}

Rule unwrap_time_rule(const Rule& rule) {
  std::optional<Term> t;
  auto unwrap = [&](const Term& x) {
    if (x.is_compound("holdsAt", 2) && is_frame(x.args()[0])) {
      if (!t) t = x.args()[1];
      return x.args()[0];
    }
    return x;
  };
  Rule out;
  for (const Term& h : rule.head) out.head.push_back(unwrap(h));
  for (const Literal& l : rule.body) {
    if (l.is_compare()) {
      out.body.push_back(l);
      continue;
    }
    Term a = unwrap(l.atom);
    out.body.push_back(l.is_naf() ? Literal::naf(a) : Literal::positive(a));
  }
  if (t) {
    Literal guard = Literal::positive(Term::compound("timestamp", {*t}));
    auto it = std::find(out.body.rbegin(), out.body.rend(), guard);
    if (it != out.body.rend()) out.body.erase(std::next(it).base());
  }
  return out;
}

Query build_temporal_query(const Term& q, int max_time) {
  return Query{Term::compound("holdsAt", {q, Term::integer(max_time)})};
}

Program assemble_sec_program(const Narrative& narrative,
                             const std::vector<Rule>& init_term_rules,
                             const std::vector<Rule>& time_rules,
                             const SchemaSet& schemas) {
  Program p;
  p.rules = narrative_rules(narrative);
  for (const Rule& r : sec_axioms()) p.rules.push_back(r);
  for (const Rule& r : init_term_rules) p.rules.push_back(r);
  for (const Rule& r : time_rules) p.rules.push_back(wrap_time_rule(r));
  for (const Rule& r : schemas.domain_rules()) p.rules.push_back(r);
  return p;
}

}  // namespace framelog
