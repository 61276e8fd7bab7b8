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

#include "framelog/extract.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace framelog {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_negation_word(const Token& t) {
  std::string l = lower(t.lemma);
  return l == "not" || l == "no" || l == "never" || l == "n't";
}

bool is_wh_word(std::string_view lemma) {
  return lemma == "who" || lemma == "what" || lemma == "where" ||
         lemma == "which" || lemma == "whom";
}

// Coarse part-of-speech class used to decide which conjuncts coordinate
// with a filler.
int pos_class(std::string_view upos) {
  if (upos == "NOUN" || upos == "PROPN" || upos == "PRON" || upos == "NUM" ||
      upos == "X" || upos == "SYM") {
    return 0;
  }
  if (upos == "ADJ") return 1;
  if (upos == "ADV") return 2;
  return 3;
}

std::string capitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

// Strips `$` and trailing digits: `$species1` -> `species`.
std::string type_word(std::string_view form) {
  std::string_view s = form.substr(1);
  while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return lower(s);
}

Connective connective_of_cc(const DepParse& parse, int conjunct) {
  for (int c : parse.children(conjunct, "cc")) {
    std::string l = lower(parse.token(c).lemma);
    if (l == "and") return Connective::kAnd;
    if (l == "or") return Connective::kOr;
  }
  return Connective::kNone;
}

// Merges `c` into `acc`; false on an and/or mixture.
bool merge(Connective& acc, Connective c) {
  if (c == Connective::kNone) return true;
  if (acc == Connective::kNone) {
    acc = c;
    return true;
  }
  return acc == c;
}

// First token whose coordinated dependents mix "and" with "or", or 0.
int mixed_coordination(const DepParse& parse) {
  for (int id = 1; id <= parse.size(); ++id) {
    Connective acc = Connective::kNone;
    for (int c : parse.children(id, "conj")) {
      if (!merge(acc, connective_of_cc(parse, c))) return id;
    }
  }
  return 0;
}

bool has_negation(const DepParse& parse, int token) {
  for (int c : parse.children(token)) {
    if (is_negation_word(parse.token(c))) return true;
  }
  return false;
}

bool is_aux_label(std::string_view d) {
  return d == "aux" || d == "aux:pass" || d == "cop";
}

// Children with `label`, negation words excluded.
std::vector<int> labelled_children(const DepParse& parse, int token,
                                   std::string_view label) {
  std::vector<int> out;
  for (int c : parse.children(token, label)) {
    if (!is_negation_word(parse.token(c))) out.push_back(c);
  }
  return out;
}

std::optional<int> walk(const DepParse& parse, int from,
                        const std::vector<std::string>& path,
                        const std::set<int>& claimed) {
  int cur = from;
  for (std::size_t i = 0; i < path.size(); ++i) {
    std::vector<int> kids = labelled_children(parse, cur, path[i]);
    if (kids.empty()) return std::nullopt;
    int pick = kids.front();
    if (i + 1 == path.size()) {
      for (int k : kids) {
        if (!claimed.contains(k)) {
          pick = k;
          break;
        }
      }
    }
    cur = pick;
  }
  return cur;
}

std::optional<Term> comparative(const DepParse& parse, int numeral,
                                std::int64_t value) {
  for (int c : parse.children(numeral)) {
    std::string l = lower(parse.token(c).lemma);
    std::vector<std::string> words{l};
    for (int g : parse.children(c)) words.push_back(lower(parse.token(g).lemma));
    for (const auto& w : words) {
      if (w == "least") return Term::compound("at_least", {Term::integer(value)});
      if (w == "most") return Term::compound("at_most", {Term::integer(value)});
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view connective_name(Connective c) {
  switch (c) {
    case Connective::kAnd:
      return "and";
    case Connective::kOr:
      return "or";
    case Connective::kNone:
      break;
  }
  return "none";
}

std::vector<Trigger> trigger_lvps(const DepParse& parse, const LvpStore& store) {
  std::vector<Trigger> out;
  for (const Token& t : parse.tokens()) {
    std::vector<const Lvp*> found = store.lookup(lower(t.lemma));
    if (!t.form.empty() && t.form[0] == '$') {
      for (const Lvp* l : store.lookup(type_word(t.form))) {
        if (std::find(found.begin(), found.end(), l) == found.end()) found.push_back(l);
      }
    }
    for (const Lvp* l : found) out.push_back({l, t.id});
  }
  return out;
}

Term filler_value(const DepParse& parse, int token) {
  const Token& t = parse.token(token);
  if (!t.form.empty() && t.form[0] == '$') {
    std::string name = t.form.substr(1);
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
      throw ExtractError("malformed typed variable \"" + t.form + "\"");
    }
    return Term::variable(capitalize(name));
  }
  std::string lemma = lower(t.lemma);
  if (is_wh_word(lemma)) return Term::variable(capitalize(lemma));
  for (int c : parse.children(token)) {
    const Token& d = parse.token(c);
    std::string dl = lower(d.lemma);
    if ((d.deprel == "det" || d.deprel == "det:wh") && (dl == "what" || dl == "which")) {
      return Term::variable("What");
    }
    if (d.deprel == "amod" && dl == "many") {
      for (int g : parse.children(c)) {
        if (lower(parse.token(g).lemma) == "how") return Term::variable("What");
      }
    }
  }
  if (t.upos == "NUM") {
    Term n = normalize_constant(t.form, "NUM");
    if (n.kind() == TermKind::kInteger) {
      if (auto cmp = comparative(parse, token, n.value())) return *cmp;
    }
    return n;
  }
  for (int c : parse.children(token, "nummod")) {
    Term n = normalize_constant(parse.token(c).form, "NUM");
    if (n.kind() == TermKind::kInteger) {
      if (auto cmp = comparative(parse, c, n.value())) return *cmp;
      return n;
    }
  }
  if (t.upos == "PROPN") return normalize_constant(t.form, "PROPN");
  return normalize_constant(t.lemma, t.upos);
}

std::optional<FrameParse> apply_lvp(const DepParse& parse, const Lvp& lvp,
                                    int lu_token) {
  FrameParse fp;
  fp.frame = lvp.frame;
  fp.lu_token = lu_token;
  Connective conn = Connective::kNone;
  std::set<int> claimed;
  for (const Pattern& p : lvp.patterns) {
    std::optional<int> land = walk(parse, lu_token, p.path, claimed);
    if (!land && !p.path.empty() && parse.children(lu_token, p.path.front()).empty()) {
      // A conjoined predicate shares the subject and objects of the one it
      // attaches to when it has none of its own.
      int cur = lu_token;
      while (!land && parse.token(cur).deprel == "conj") {
        cur = parse.token(cur).head;
        land = walk(parse, cur, p.path, claimed);
      }
    }
    if (!land) {
      if (p.required) return std::nullopt;
      continue;
    }
    std::vector<int> alts{*land};
    if (!p.path.empty()) {
      int cls = pos_class(parse.token(*land).upos);
      for (int c : parse.children(*land, "conj")) {
        if (pos_class(parse.token(c).upos) != cls) continue;
        alts.push_back(c);
        if (!merge(conn, connective_of_cc(parse, c))) return std::nullopt;
      }
    }
    for (int a : alts) {
      claimed.insert(a);
      fp.fillers.push_back({p.role, a, filler_value(parse, a)});
    }
    fp.score.total += 1;
    fp.score.depth += static_cast<int>(p.path.size());
    if (p.required) fp.score.required += 1;
  }
  fp.negated = has_negation(parse, lu_token);
  for (int c : parse.children(lu_token)) {
    const Token& aux = parse.token(c);
    if (!is_aux_label(aux.deprel)) continue;
    if (has_negation(parse, c)) fp.negated = true;
    for (int c2 : parse.children(c, "conj")) {
      if (has_negation(parse, c2) != has_negation(parse, c)) {
        fp.both_polarities = true;
        if (!merge(conn, connective_of_cc(parse, c2))) return std::nullopt;
      }
    }
  }
  fp.connective = conn;
  return fp;
}

std::vector<FrameParse> select_parses(std::vector<FrameParse> candidates) {
  std::map<int, Score> best;
  for (const auto& c : candidates) {
    auto it = best.find(c.lu_token);
    if (it == best.end() || it->second < c.score) best[c.lu_token] = c.score;
  }
  std::vector<FrameParse> out;
  for (auto& c : candidates) {
    if (c.score != best[c.lu_token]) continue;
    if (std::find(out.begin(), out.end(), c) != out.end()) continue;
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const FrameParse& a, const FrameParse& b) {
    if (a.lu_token != b.lu_token) return a.lu_token < b.lu_token;
    return a.frame < b.frame;
  });
  return out;
}

std::vector<FrameParse> expand(const FrameParse& parse) {
  std::vector<std::string> roles;
  std::map<std::string, std::vector<const RoleFill*>> alts;
  for (const auto& f : parse.fillers) {
    if (!alts.contains(f.role)) roles.push_back(f.role);
    alts[f.role].push_back(&f);
  }
  std::vector<std::vector<RoleFill>> combos{{}};
  for (const auto& r : roles) {
    std::vector<std::vector<RoleFill>> next;
    for (const auto& prefix : combos) {
      for (const RoleFill* f : alts[r]) {
        auto c = prefix;
        c.push_back(*f);
        next.push_back(std::move(c));
      }
    }
    combos = std::move(next);
  }
  std::vector<FrameParse> out;
  for (bool neg : parse.both_polarities ? std::vector<bool>{parse.negated, !parse.negated}
                                        : std::vector<bool>{parse.negated}) {
    for (const auto& c : combos) {
      FrameParse fp = parse;
      fp.fillers = c;
      fp.negated = neg;
      fp.both_polarities = false;
      fp.connective = Connective::kNone;
      out.push_back(std::move(fp));
    }
  }
  return out;
}

SentenceGroup extract_sentence(const DepParse& parse, const LvpStore& store) {
  if (mixed_coordination(parse) != 0) {
    throw ExtractError("mixture of conjunction and disjunction in \"" + parse.text() + "\"");
  }
  std::vector<FrameParse> candidates;
  for (const Trigger& t : trigger_lvps(parse, store)) {
    if (auto fp = apply_lvp(parse, *t.lvp, t.lu_token)) {
      candidates.push_back(std::move(*fp));
    }
  }
  if (candidates.empty()) {
    throw ExtractError("no frame recognized in \"" + parse.text() + "\"");
  }
  std::vector<FrameParse> chosen = select_parses(std::move(candidates));
  SentenceGroup group;
  std::set<int> lus;
  for (const auto& fp : chosen) lus.insert(fp.lu_token);
  bool mixed = false;
  for (const auto& fp : chosen) {
    mixed |= !merge(group.connective, fp.connective);
    const Token& lu = parse.token(fp.lu_token);
    if (lu.deprel == "conj" && lus.contains(lu.head)) {
      mixed |= !merge(group.connective, connective_of_cc(parse, lu.id));
    }
    for (auto& e : expand(fp)) group.parses.push_back(std::move(e));
  }
  if (mixed) {
    throw ExtractError("mixture of conjunction and disjunction in \"" +
                       parse.text() + "\"");
  }
  return group;
}

UlrTerm to_ulr(const FrameParse& parse, const SchemaSet& schemas) {
  std::vector<RoleFiller> roles;
  for (const auto& f : parse.fillers) roles.push_back({f.role, f.value});
  return schemas.canonical(UlrTerm(parse.frame, std::move(roles), parse.negated));
}

void append_domain_atoms(const UlrTerm& term, const SchemaSet& schemas,
                         std::vector<DomainAtom>& out) {
  for (const auto& rf : term.roles()) {
    if (!rf.filler.is_ground()) continue;
    DomainAtom d{schemas.domain_predicate(term.frame_name(), rf.role), rf.filler};
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  }
}

Composition compose_ulr(const SentenceGroup& group, const SchemaSet& schemas) {
  Composition out;
  std::vector<Term> heads;
  for (const auto& fp : group.parses) {
    UlrTerm u = to_ulr(fp, schemas);
    append_domain_atoms(u, schemas, out.domain);
    heads.push_back(u.to_term());
  }
  if (group.connective == Connective::kOr && heads.size() >= 2) {
    out.rules.push_back(Rule{std::move(heads), {}});
    return out;
  }
  if (group.connective == Connective::kOr) {
    out.warnings.push_back("disjunction with a single alternative emitted as a fact");
  }
  for (auto& h : heads) out.rules.push_back(Rule{{std::move(h)}, {}});
  return out;
}

namespace {

enum class Gender { kUnknown, kMale, kFemale };

Gender name_gender(std::string_view name) {
  static const std::set<std::string, std::less<>> kMale{
      "Bill", "Bob", "Brian", "Daniel", "Fred", "Greg", "Jeff", "John",
      "Julius", "Bernhard", "Jason", "Antoine", "Yann", "Sumit"};
  static const std::set<std::string, std::less<>> kFemale{
      "Mary", "Sandra", "Julie", "Emily", "Lily", "Gertrude", "Jessica",
      "Winona", "Kate"};
  if (kMale.contains(name)) return Gender::kMale;
  if (kFemale.contains(name)) return Gender::kFemale;
  return Gender::kUnknown;
}

enum class PronounKind { kNone, kMale, kFemale, kPlural };

PronounKind pronoun_kind(const Token& t) {
  if (t.upos != "PRON" && t.upos != "DET") return PronounKind::kNone;
  std::string l = lower(t.form);
  if (l == "he" || l == "him" || l == "his" || l == "himself") return PronounKind::kMale;
  if (l == "she" || l == "her" || l == "hers" || l == "herself") return PronounKind::kFemale;
  if (l == "they" || l == "them" || l == "their") return PronounKind::kPlural;
  return PronounKind::kNone;
}

bool is_acronym(std::string_view form) {
  if (form.size() < 2) return false;
  for (char c : form) {
    if (!std::isupper(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void substitute(DepParse& parse, int token, const std::string& name) {
  Token& t = parse.mutable_token(token);
  t.form = name;
  t.lemma = name;
  t.upos = "PROPN";
}

}  // namespace

std::vector<ResolvedSentence> resolve_coreference(
    const std::vector<DepParse>& sentences, std::vector<std::string>* diagnostics) {
  std::vector<std::string> mentions;
  std::vector<std::string> last_group;
  std::vector<ResolvedSentence> out;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    DepParse parse = sentences[s];
    std::vector<int> plural;
    for (const Token& t : sentences[s].tokens()) {
      PronounKind k = pronoun_kind(t);
      if (k == PronounKind::kNone) continue;
      if (k == PronounKind::kPlural) {
        plural.push_back(t.id);
        continue;
      }
      Gender want = k == PronounKind::kMale ? Gender::kMale : Gender::kFemale;
      const std::string* found = nullptr;
      for (auto it = mentions.rbegin(); it != mentions.rend(); ++it) {
        Gender g = name_gender(*it);
        if (g == want || g == Gender::kUnknown) {
          found = &*it;
          break;
        }
      }
      if (found) {
        substitute(parse, t.id, *found);
      } else if (diagnostics) {
        diagnostics->push_back("sentence " + std::to_string(s + 1) +
                               ": unresolved pronoun \"" + t.form + "\"");
      }
    }
    std::vector<DepParse> copies;
    if (!plural.empty() && last_group.size() >= 2) {
      for (const auto& entity : last_group) {
        DepParse c = parse;
        for (int id : plural) substitute(c, id, entity);
        copies.push_back(std::move(c));
      }
    } else {
      if (!plural.empty() && diagnostics) {
        diagnostics->push_back("sentence " + std::to_string(s + 1) +
                               ": no coordination for plural pronoun");
      }
      copies.push_back(parse);
    }
    for (const auto& c : copies) {
      for (const Token& t : c.tokens()) {
        if (t.upos != "PROPN" || is_acronym(t.form)) continue;
        mentions.push_back(t.form);
        std::vector<int> conj;
        for (int k : c.children(t.id, "conj")) {
          if (c.token(k).upos == "PROPN" && !is_acronym(c.token(k).form)) conj.push_back(k);
        }
        if (!conj.empty() && t.deprel != "conj") {
          last_group = {t.form};
          for (int k : conj) last_group.push_back(c.token(k).form);
        }
      }
      out.push_back({c, s});
    }
  }
  return out;
}

Composition extract_document(const std::vector<DepParse>& sentences,
                             const LvpStore& store, const SchemaSet& schemas) {
  Composition out;
  for (const auto& rs : resolve_coreference(sentences, &out.warnings)) {
    Composition c = compose_ulr(extract_sentence(rs.parse, store), schemas);
    for (auto& r : c.rules) {
      if (std::find(out.rules.begin(), out.rules.end(), r) == out.rules.end()) {
        out.rules.push_back(std::move(r));
      }
    }
    for (auto& d : c.domain) {
      if (std::find(out.domain.begin(), out.domain.end(), d) == out.domain.end()) {
        out.domain.push_back(std::move(d));
      }
    }
    for (auto& w : c.warnings) out.warnings.push_back(std::move(w));
  }
  return out;
}

}  // namespace framelog
