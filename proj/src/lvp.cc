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

#include "framelog/lvp.h"

#include <algorithm>

#include "framelog/syntax.h"

namespace framelog {

namespace {

[[noreturn]] void bad_training(std::string_view line, const std::string& why) {
  throw LearnError("malformed training annotation (" + why + "): " +
                   std::string(line));
}

std::string symbol_text(const Term& t) {
  if (t.kind() == TermKind::kAtom || t.kind() == TermKind::kString) return t.name();
  throw Error("expected a name, got " + render(t));
}

Term symbol_term(const std::string& s) {
  return is_plain_atom_name(s) ? Term::atom(s) : Term::string(s);
}

}  // namespace

TrainingAnnotation parse_training_line(std::string_view line) {
  Term t;
  std::string_view body = line;
  while (!body.empty() && (body.back() == '.' || body.back() == ' ' ||
                           body.back() == '\r' || body.back() == '\n')) {
    body.remove_suffix(1);
  }
  try {
    t = parse_term(body, TermSyntax{.annotation_operators = true});
  } catch (const SyntaxError& e) {
    bad_training(line, e.what());
  }
  if (!t.is_compound("train", 5)) bad_training(line, "expected train/5");
  const auto& a = t.args();
  TrainingAnnotation ann;
  if (a[0].kind() != TermKind::kString || a[1].kind() != TermKind::kString) {
    bad_training(line, "sentence and frame must be strings");
  }
  ann.sentence = a[0].name();
  ann.frame = a[1].name();
  if (!a[2].is_compound("=", 2) || a[2].args()[1].kind() != TermKind::kInteger) {
    bad_training(line, "expected \"LU\"=k");
  }
  ann.lu_index = static_cast<int>(a[2].args()[1].value());
  if (a[3].kind() != TermKind::kList) bad_training(line, "expected synonym list");
  for (const Term& s : a[3].args()) ann.lu_synonyms.push_back(symbol_text(s));
  if (a[4].kind() != TermKind::kList) bad_training(line, "expected role list");
  for (const Term& r : a[4].args()) {
    if (!r.is_compound("=", 2) || r.args()[0].kind() != TermKind::kString) {
      bad_training(line, "expected \"Role\"=i+flag");
    }
    RoleSpec spec;
    spec.role = r.args()[0].name();
    const Term& rhs = r.args()[1];
    const Term* idx = &rhs;
    if (rhs.is_compound("+", 2)) {
      idx = &rhs.args()[0];
      const Term& flag = rhs.args()[1];
      if (flag == Term::atom("required")) {
        spec.required = true;
      } else if (flag == Term::atom("optional")) {
        spec.required = false;
      } else {
        bad_training(line, "flag must be required or optional");
      }
    }
    if (idx->kind() != TermKind::kInteger) bad_training(line, "role index");
    spec.token = static_cast<int>(idx->value());
    ann.role_specs.push_back(std::move(spec));
  }
  return ann;
}

std::vector<TrainingAnnotation> parse_training_file(std::string_view text) {
  std::vector<TrainingAnnotation> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '%') continue;
    out.push_back(parse_training_line(line));
  }
  return out;
}

std::string render(const Lvp& lvp) {
  std::vector<Term> pats;
  for (const Pattern& p : lvp.patterns) {
    std::vector<Term> labels;
    for (const auto& l : p.path) labels.push_back(symbol_term(l));
    pats.push_back(Term::compound(
        "pattern", {Term::string(p.role), Term::list(std::move(labels)),
                    Term::atom(p.required ? "required" : "optional")}));
  }
  return render(Term::compound("lvp", {symbol_term(lvp.lu_lemma),
                                       Term::string(lvp.frame),
                                       Term::list(std::move(pats))}));
}

Lvp parse_lvp(std::string_view text) {
  Term t = parse_term(text);
  if (!t.is_compound("lvp", 3) || t.args()[1].kind() != TermKind::kString ||
      t.args()[2].kind() != TermKind::kList) {
    throw Error("expected lvp(LU,\"Frame\",[pattern(...),...])");
  }
  Lvp lvp;
  lvp.lu_lemma = symbol_text(t.args()[0]);
  lvp.frame = t.args()[1].name();
  for (const Term& p : t.args()[2].args()) {
    if (!p.is_compound("pattern", 3) || p.args()[0].kind() != TermKind::kString ||
        p.args()[1].kind() != TermKind::kList) {
      throw Error("malformed pattern " + render(p));
    }
    Pattern pat;
    pat.role = p.args()[0].name();
    for (const Term& l : p.args()[1].args()) pat.path.push_back(symbol_text(l));
    if (p.args()[2] == Term::atom("required")) {
      pat.required = true;
    } else if (p.args()[2] == Term::atom("optional")) {
      pat.required = false;
    } else {
      throw Error("pattern flag must be required or optional");
    }
    lvp.patterns.push_back(std::move(pat));
  }
  return lvp;
}

Lvp learn_lvp(const TrainingAnnotation& ann, const DepParse& parse,
              const SchemaSet* schemas) {
  if (!parse.valid_id(ann.lu_index)) {
    throw LearnError("\"" + ann.sentence + "\": LU index " +
                     std::to_string(ann.lu_index) + " out of range");
  }
  const FrameSchema* fs = schemas ? schemas->find(ann.frame) : nullptr;
  if (schemas && !fs) throw LearnError("unknown frame \"" + ann.frame + "\"");
  Lvp lvp;
  lvp.lu_lemma = parse.token(ann.lu_index).lemma;
  lvp.frame = ann.frame;
  for (std::size_t i = 0; i < ann.role_specs.size(); ++i) {
    const RoleSpec& spec = ann.role_specs[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (ann.role_specs[j].role == spec.role) {
        throw LearnError("\"" + ann.sentence + "\": role \"" + spec.role +
                         "\" annotated twice");
      }
    }
    if (fs && !fs->find_role(spec.role)) {
      throw LearnError("frame \"" + ann.frame + "\" has no role \"" +
                       spec.role + "\"");
    }
    if (!parse.valid_id(spec.token)) {
      throw LearnError("\"" + ann.sentence + "\": role \"" + spec.role +
                       "\" token " + std::to_string(spec.token) + " out of range");
    }
    auto path = dep_path(parse, ann.lu_index, spec.token);
    if (!path) {
      throw LearnError("\"" + ann.sentence + "\": filler of role \"" +
                       spec.role + "\" is not reachable downward from the LU");
    }
    lvp.patterns.push_back({spec.role, std::move(*path), spec.required});
  }
  return lvp;
}

void LvpStore::add(Lvp lvp) {
  if (std::find(lvps_.begin(), lvps_.end(), lvp) != lvps_.end()) return;
  by_lemma_[lvp.lu_lemma].push_back(lvps_.size());
  lvps_.push_back(std::move(lvp));
}

void LvpStore::add_synonym(const std::string& lu, const std::string& synonym) {
  if (synonym == lu) return;
  for (const auto& [l, s] : synonym_list_) {
    if (l == lu && s == synonym) return;
  }
  synonym_list_.emplace_back(lu, synonym);
  synonym_of_.emplace(synonym, lu);
}

std::vector<const Lvp*> LvpStore::lookup(std::string_view lemma) const {
  std::vector<const Lvp*> out;
  auto add_key = [&](std::string_view key) {
    auto it = by_lemma_.find(key);
    if (it == by_lemma_.end()) return;
    for (std::size_t i : it->second) {
      if (std::find(out.begin(), out.end(), &lvps_[i]) == out.end()) {
        out.push_back(&lvps_[i]);
      }
    }
  };
  auto syn = synonym_of_.find(lemma);
  if (syn != synonym_of_.end()) add_key(syn->second);
  add_key(lemma);
  return out;
}

std::string save_store(const LvpStore& store) {
  std::string out;
  for (const Lvp& l : store.lvps()) out += render(l) + ".\n";
  for (const auto& [lu, syn] : store.synonyms()) {
    out += render(Term::compound("synonym", {symbol_term(lu), symbol_term(syn)})) + ".\n";
  }
  return out;
}

LvpStore load_store(std::string_view text) {
  LvpStore store;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '%') continue;
    try {
      Statement st = parse_statement(line);
      const Rule* r = std::get_if<Rule>(&st);
      if (!r || !r->is_fact()) throw Error("expected a fact");
      const Term& t = r->head.front();
      if (t.is_compound("synonym", 2)) {
        store.add_synonym(symbol_text(t.args()[0]), symbol_text(t.args()[1]));
      } else {
        store.add(parse_lvp(render(t)));
      }
    } catch (const Error& e) {
      throw LearnError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return store;
}

LvpStore learn_all(const std::vector<TrainingAnnotation>& annotations,
                   const std::vector<DepParse>& parses,
                   const SchemaSet* schemas) {
  if (annotations.size() != parses.size()) {
    throw LearnError(std::to_string(annotations.size()) +
                     " training annotations but " +
                     std::to_string(parses.size()) + " parses");
  }
  LvpStore store;
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    const auto& ann = annotations[i];
    if (ParseBank::key(ann.sentence) != ParseBank::key(parses[i].text())) {
      throw LearnError("annotation " + std::to_string(i + 1) + " is for \"" +
                       ann.sentence + "\" but parse " + std::to_string(i + 1) +
                       " is \"" + parses[i].text() + "\"");
    }
    Lvp lvp = learn_lvp(ann, parses[i], schemas);
    for (const auto& s : ann.lu_synonyms) store.add_synonym(lvp.lu_lemma, s);
    store.add(std::move(lvp));
  }
  return store;
}

}  // namespace framelog
