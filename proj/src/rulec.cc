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

#include "framelog/rulec.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "framelog/text.h"

namespace framelog {

namespace {

std::vector<std::string> split_pieces(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = text.find(", ", pos);
    out.emplace_back(trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 2;
  }
  return out;
}

std::string_view strip_connective(std::string_view s) {
  for (std::string_view w : {"and ", "or "}) {
    if (starts_with_ci(s, w)) return trim(s.substr(w.size()));
  }
  return s;
}

constexpr std::string_view kNotProvable = "not provable ";

std::string_view strip_naf(std::string_view s) {
  return starts_with_ci(s, kNotProvable) ? trim(s.substr(kNotProvable.size())) : s;
}

std::vector<std::string> segment(std::string_view text, const ParseBank& bank) {
  std::vector<std::string> pieces = split_pieces(text);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < pieces.size()) {
    std::size_t best = pieces.size();
    std::string chosen;
    for (std::size_t j = pieces.size(); j-- > i;) {
      std::string cand = pieces[i];
      for (std::size_t k = i + 1; k <= j; ++k) cand += ", " + pieces[k];
      std::string_view c = strip_connective(cand);
      if (bank.find(strip_naf(c))) {
        best = j;
        chosen = std::string(c);
        break;
      }
    }
    if (best == pieces.size()) {
      throw CompileError("no parse for sentence \"" +
                         std::string(strip_naf(strip_connective(pieces[i]))) + "\"");
    }
    out.push_back(std::move(chosen));
    i = best + 1;
  }
  return out;
}

// `$doctor` for the logic variable `Doctor`.
std::string surface_name(const std::string& var) {
  std::string s = var;
  if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return "$" + s;
}

template <typename T>
std::vector<std::vector<T>> product(const std::vector<std::vector<T>>& a,
                                    const std::vector<std::vector<T>>& b) {
  std::vector<std::vector<T>> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      auto z = x;
      z.insert(z.end(), y.begin(), y.end());
      out.push_back(std::move(z));
    }
  }
  return out;
}

std::vector<Term> group_terms(const SentenceGroup& g, const SchemaSet& schemas) {
  std::vector<Term> out;
  for (const auto& fp : g.parses) {
    try {
      out.push_back(to_ulr(fp, schemas).to_term());
    } catch (const CompileError&) {
      throw;
    } catch (const Error& e) {
      throw CompileError(e.what());
    }
  }
  return out;
}

void collect(const Rule& r, std::vector<std::string>& out) {
  for (const Term& h : r.head) h.collect_variables(out);
  for (const Literal& l : r.body) {
    if (l.is_compare()) {
      l.lhs.collect_variables(out);
      l.rhs.collect_variables(out);
    } else {
      l.atom.collect_variables(out);
    }
  }
}

}  // namespace

RuleSource split_rule(std::string_view text, const ParseBank& bank) {
  std::string_view t = trim(text);
  while (!t.empty() && t.back() == '.') t = trim(t.substr(0, t.size() - 1));
  if (!starts_with_ci(t, "if ")) {
    throw CompileError("rule must have the form \"If ..., then ...\": " + std::string(text));
  }
  std::size_t then = find_ci(t, ", then ");
  if (then == std::string_view::npos) {
    throw CompileError("rule has no \", then\": " + std::string(text));
  }
  RuleSource src;
  src.text = std::string(t);
  src.premises = segment(trim(t.substr(3, then - 3)), bank);
  src.conclusions = segment(trim(t.substr(then + 7)), bank);
  return src;
}

SentenceGroup parse_sentence(std::string_view text, const CompileContext& ctx) {
  const DepParse* parse = ctx.bank.find(text);
  if (!parse) throw CompileError("no parse for sentence \"" + std::string(text) + "\"");
  try {
    return extract_sentence(*parse, ctx.store);
  } catch (const ExtractError& e) {
    throw CompileError(e.what());
  }
}

std::unordered_map<std::string, std::string> typed_variable_renaming(
    const std::vector<std::string>& names) {
  std::set<std::string> present(names.begin(), names.end());
  std::unordered_map<std::string, std::string> out;
  for (const auto& n : names) {
    if (n.size() < 2 || n.back() != '1' ||
        std::isdigit(static_cast<unsigned char>(n[n.size() - 2]))) {
      continue;
    }
    std::string base = n.substr(0, n.size() - 1);
    if (!present.contains(base)) out[n] = base;
  }
  return out;
}

Term rename_variables(const Term& t,
                      const std::unordered_map<std::string, std::string>& renaming) {
  if (renaming.empty()) return t;
  switch (t.kind()) {
    case TermKind::kVariable: {
      auto it = renaming.find(t.name());
      return it == renaming.end() ? t : Term::variable(it->second);
    }
    case TermKind::kCompound:
    case TermKind::kList: {
      std::vector<Term> args;
      for (const Term& a : t.args()) args.push_back(rename_variables(a, renaming));
      return t.kind() == TermKind::kList ? Term::list(std::move(args))
                                         : Term::compound(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

Rule rename_variables(const Rule& rule,
                      const std::unordered_map<std::string, std::string>& renaming) {
  Rule out;
  for (const Term& h : rule.head) out.head.push_back(rename_variables(h, renaming));
  for (const Literal& l : rule.body) {
    Literal m = l;
    m.atom = rename_variables(l.atom, renaming);
    m.lhs = rename_variables(l.lhs, renaming);
    m.rhs = rename_variables(l.rhs, renaming);
    out.body.push_back(std::move(m));
  }
  return out;
}

std::vector<Rule> compile_rule(const RuleSource& source, const CompileContext& ctx,
                               CompileOptions options) {
  std::vector<std::vector<Literal>> body{{}};
  for (const auto& premise : source.premises) {
    bool naf = starts_with_ci(premise, kNotProvable);
    std::string_view text = strip_naf(premise);
    SentenceGroup g = parse_sentence(text, ctx);
    std::vector<Term> terms = group_terms(g, ctx.schemas);
    std::vector<std::vector<Literal>> alts;
    if (naf) {
      if (terms.size() != 1) {
        throw CompileError("\"not provable\" must govern a single frame: \"" +
                           std::string(text) + "\"");
      }
      alts = {{Literal::naf(terms[0])}};
    } else if (g.connective == Connective::kOr && terms.size() > 1) {
      if (!options.normalize_connectives) {
        throw CompileError("premise contains a disjunction: \"" + premise + "\"");
      }
      for (const Term& t : terms) alts.push_back({Literal::positive(t)});
    } else {
      std::vector<Literal> conj;
      for (const Term& t : terms) conj.push_back(Literal::positive(t));
      alts = {conj};
    }
    body = product(body, alts);
  }
  std::vector<std::vector<Term>> head{{}};
  for (const auto& conclusion : source.conclusions) {
    if (starts_with_ci(conclusion, "not provable")) {
      throw CompileError("\"not provable\" is not allowed in a conclusion: \"" +
                         conclusion + "\"");
    }
    SentenceGroup g = parse_sentence(conclusion, ctx);
    std::vector<Term> terms = group_terms(g, ctx.schemas);
    std::vector<std::vector<Term>> cnf;
    if (g.connective != Connective::kOr && terms.size() > 1) {
      if (!options.normalize_connectives) {
        throw CompileError("conclusion contains a conjunction: \"" + conclusion + "\"");
      }
      for (const Term& t : terms) cnf.push_back({t});
    } else {
      cnf = {terms};
    }
    head = product(head, cnf);
  }

  std::vector<Rule> rules;
  for (const auto& b : body) {
    for (const auto& h : head) rules.push_back(Rule{h, b});
  }
  std::vector<std::string> names;
  for (const Rule& r : rules) collect(r, names);
  auto renaming = typed_variable_renaming(names);
  for (Rule& r : rules) r = rename_variables(r, renaming);

  for (Rule& r : rules) {
    std::vector<std::string> positive, negative, conclusion;
    for (const Literal& l : r.body) {
      l.atom.collect_variables(l.is_naf() ? negative : positive);
    }
    for (const Term& h : r.head) h.collect_variables(conclusion);
    auto in = [](const std::vector<std::string>& v, const std::string& x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    };
    for (const auto& v : conclusion) {
      if (!in(positive, v) && !in(negative, v)) {
        throw UnsafeRuleError("unsafe rule: variable " + surface_name(v) +
                                  " occurs in a conclusion but in no premise",
                              {v});
      }
    }
    std::vector<std::string> guarded;
    std::vector<Literal> guards;
    for (const Literal& l : r.body) {
      if (!l.is_naf()) continue;
      auto u = UlrTerm::from_term(l.atom);
      if (!u) continue;
      for (const auto& rf : u->roles()) {
        if (!rf.filler.is_variable()) continue;
        const std::string& v = rf.filler.name();
        if (in(positive, v) || in(guarded, v)) continue;
        guarded.push_back(v);
        guards.push_back(Literal::positive(Term::compound(
            ctx.schemas.domain_predicate(u->frame_name(), rf.role), {rf.filler})));
      }
    }
    r.body.insert(r.body.end(), guards.begin(), guards.end());
    auto unsafe = unsafe_variables(r);
    if (!unsafe.empty()) {
      throw UnsafeRuleError("unsafe rule: variable " + surface_name(unsafe.front()) +
                                " is not bound by a positive premise",
                            unsafe);
    }
  }
  return rules;
}

std::vector<Rule> compile_rule(std::string_view text, const CompileContext& ctx,
                               CompileOptions options) {
  return compile_rule(split_rule(text, ctx.bank), ctx, options);
}

Query compile_query(std::string_view text, const CompileContext& ctx) {
  std::string_view t = trim(text);
  if (t.empty() || t.back() != '?') {
    throw CompileError("query must end with '?': " + std::string(text));
  }
  t = trim(t.substr(0, t.size() - 1));
  SentenceGroup g;
  try {
    g = parse_sentence(t, ctx);
  } catch (const CompileError& e) {
    throw CompileError(std::string("unrecognized query: ") + e.what());
  }
  std::vector<Term> terms = group_terms(g, ctx.schemas);
  if (terms.size() != 1) {
    throw CompileError("query denotes " + std::to_string(terms.size()) +
                       " frames: " + std::string(text));
  }
  std::vector<std::string> names;
  terms[0].collect_variables(names);
  return Query{rename_variables(terms[0], typed_variable_renaming(names))};
}

std::vector<std::string> check_safety(const Rule& rule) { return unsafe_variables(rule); }

CompiledFile compile_file(std::string_view text, const CompileContext& ctx,
                          CompileOptions options) {
  CompiledFile out;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '%') continue;
    try {
      if (t.back() == '?') {
        out.queries.push_back(compile_query(t, ctx));
      } else if (starts_with_ci(t, "if ")) {
        for (Rule& r : compile_rule(t, ctx, options)) out.rules.push_back(std::move(r));
      } else {
        throw CompileError("expected a rule or a query");
      }
    } catch (const Error& e) {
      out.errors.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace framelog
