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

#include "properties.h"

#include <algorithm>
#include <regex>
#include <set>

#include "framelog/oracle.h"
#include "framelog/rulec.h"
#include "framelog/sec.h"
#include "framelog/syntax.h"
#include "oracles.h"
#include "support.h"

namespace framelog::testing {

void PropertyResult::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& from) {
  return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
}

std::set<std::string> variables_of(const Term& t) {
  std::vector<std::string> v;
  t.collect_variables(v);
  return {v.begin(), v.end()};
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// `$patient` -> `Patient`, straight from the surface text.
std::set<std::string> typed_variables(const std::string& text) {
  static const std::regex kTyped(R"(\$([a-z_]+))");
  std::set<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kTyped);
       it != std::sregex_iterator(); ++it) {
    std::string name = (*it)[1];
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    out.insert(name);
  }
  return out;
}

DepParse goes(const std::string& who, const std::string& where) {
  return make_parse(who + " goes to the " + where,
                    {who + "/PROPN/2/nsubj", "goes/VERB/0/root/go", "to/ADP/5/case",
                     "the/DET/5/det", where + "/NOUN/2/obl"});
}

}  // namespace

PropertyResult round_trip_property(int cases, std::uint64_t seed) {
  PropertyResult out;
  Rng rng(seed);
  for (int i = 0; i < cases; ++i, ++out.cases) {
    Term t = random_term(rng, 3);
    Rule r = random_rule(rng);
    try {
      if (!(parse_term(render(t)) == t)) out.fail("term " + render(t));
      Statement st = parse_statement(render(r));
      if (!std::holds_alternative<Rule>(st) || !(std::get<Rule>(st) == r)) {
        out.fail("rule " + render(r));
      }
    } catch (const Error& e) {
      out.fail(render(r) + ": " + e.what());
    }
  }
  return out;
}

PropertyResult rule_safety_property(int cases, std::uint64_t seed) {
  static const std::vector<std::string> kPremises = {
      "$patient undergoes $therapy from $doctor",
      "$doctor administers $therapy for $patient",
      "$doctor's $patient is a young child and has an unexplained fever",
      "$person travels to $place",
      "$person is located in $place",
      "Mary goes to the hospital",
      "$doctor's $patient is sufficiently ill",
      "$doctor assesses $patient's ability to retain oral intake",
      "$doctor does not administer $therapy for $patient",
      "not provable $doctor does not administer $therapy for $patient",
      "not provable $person is located in $place",
  };
  static const std::vector<std::string> kConclusions = {
      "$patient undergoes $therapy from $doctor",
      "$doctor sees Mary",
      "$person is located in $place",
      "$doctor considers UTI for $patient",
      "$doctor assesses $patient's degree of toxicity or dehydration",
      "$doctor considers hospitalization for $patient",
      "$doctor performs VCUG or RNC for $patient",
      "$doctor does not administer $therapy for $patient",
  };
  const Kb& kb = Kb::get();
  PropertyResult out;
  Rng rng(seed);
  int accepted = 0, rejected = 0;
  for (int i = 0; i < cases; ++i, ++out.cases) {
    int np = std::uniform_int_distribution<int>(1, 3)(rng);
    int nc = std::uniform_int_distribution<int>(1, 2)(rng);
    std::string text = "If ";
    std::set<std::string> premise_vars, conclusion_vars;
    for (int k = 0; k < np; ++k) {
      const std::string& p = pick(rng, kPremises);
      text += (k == 0 ? "" : (k + 1 == np ? ", and " : ", ")) + p;
      premise_vars.merge(typed_variables(p));
    }
    text += ", then ";
    for (int k = 0; k < nc; ++k) {
      const std::string& c = pick(rng, kConclusions);
      text += (k == 0 ? "" : ", or ") + c;
      conclusion_vars.merge(typed_variables(c));
    }
    text += ".";
    const bool expect_safe = subset(conclusion_vars, premise_vars);

    std::vector<Rule> rules;
    try {
      rules = compile_rule(text, kb.context(), CompileOptions{true});
    } catch (const UnsafeRuleError&) {
      if (expect_safe) out.fail("rejected a safe rule: " + text);
      ++rejected;
      continue;
    } catch (const Error& e) {
      out.fail(text + ": " + e.what());
      continue;
    }
    if (!expect_safe || rules.empty()) {
      out.fail("accepted an unsafe rule: " + text);
      continue;
    }
    ++accepted;
    std::set<std::string> expected = premise_vars;
    expected.insert(conclusion_vars.begin(), conclusion_vars.end());
    for (const Rule& r : rules) {
      std::set<std::string> positive, all;
      for (const Literal& l : r.body) {
        if (l.is_positive()) positive.merge(variables_of(l.atom));
        if (!l.is_compare()) all.merge(variables_of(l.atom));
      }
      bool ok = true;
      for (const Term& h : r.head) {
        ok = ok && subset(variables_of(h), positive);
        all.merge(variables_of(h));
      }
      for (const Literal& l : r.body) {
        if (l.is_naf()) ok = ok && subset(variables_of(l.atom), positive);
      }
      if (!ok) out.fail("unbound variable in " + render(r));
      if (all != expected) out.fail("variables drifted in " + render(r));
    }
  }
  if (accepted * 10 < cases || rejected * 10 < cases) {
    out.fail("sample too lopsided: " + std::to_string(accepted) + " accepted, " +
             std::to_string(rejected) + " rejected");
  }
  return out;
}

PropertyResult inertia_property(int cases, std::uint64_t seed) {
  static const std::vector<std::string> kPeople = {"Mary", "John", "Sandra"};
  static const std::vector<std::string> kPlaces = {"kitchen", "garden", "bedroom", "hallway"};
  const Kb& kb = Kb::get();
  InitTermFile it = compile_init_term_file(data_file("kb/travel.it"), kb.context());
  PropertyResult out;
  if (!it.errors.empty()) {
    out.fail(it.errors.front());
    return out;
  }
  Rng rng(seed);
  for (int i = 0; i < cases; ++i, ++out.cases) {
    int length = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<DepParse> parses;
    std::vector<Move> moves;
    std::string story;
    for (int k = 1; k <= length; ++k) {
      Move m{pick(rng, kPeople), pick(rng, kPlaces), k};
      parses.push_back(goes(m.person, m.place));
      story += parses.back().text() + ". ";
      moves.push_back(m);
    }
    try {
      Narrative n = narrative_to_occurrences(parses, kb.store, kb.schemas);
      auto sets = answer_sets(ground(assemble_sec_program(n, it.rules, {}, kb.schemas)));
      if (sets.size() != 1) {
        out.fail(story + "has " + std::to_string(sets.size()) + " answer sets");
        continue;
      }
      std::map<std::pair<std::string, int>, std::string> got;
      for (const Term& a : sets[0].atoms) {
        if (!a.is_compound("holdsAt", 2)) continue;
        auto u = UlrTerm::from_term(a.args()[0]);
        if (!u || u->frame_name() != "Located") continue;
        auto key = std::make_pair(u->filler("Entity")->name(),
                                  static_cast<int>(a.args()[1].value()));
        if (got.contains(key)) out.fail(story + "puts " + key.first + " in two places");
        got[key] = u->filler("Location")->name();
      }
      if (got != simulate_locations(moves, n.max_time())) {
        out.fail(story + "disagrees with the simulation");
      }
      for (const auto& [key, place] : got) {
        const auto& [who, t] = key;
        bool moved = std::any_of(moves.begin(), moves.end(), [&](const Move& m) {
          return m.person == who && m.time == t - 1;
        });
        auto before = got.find({who, t - 1});
        if (!moved && (before == got.end() || before->second != place)) {
          out.fail(story + who + " moved without travelling at " + std::to_string(t));
        }
      }
    } catch (const Error& e) {
      out.fail(story + e.what());
    }
  }
  return out;
}

PropertyResult solver_oracle_property(int cases, std::uint64_t seed) {
  PropertyResult out;
  Rng rng(seed);
  for (int i = 0; i < cases; ++i, ++out.cases) {
    GroundProgram gp = random_ground_program(rng, {});
    try {
      if (answer_sets(gp) != oracle_answer_sets(gp)) out.fail(render(gp.to_program()));
    } catch (const Error& e) {
      out.fail(render(gp.to_program()) + e.what());
    }
  }
  return out;
}

PropertyResult mode_containment_property(int cases, std::uint64_t seed) {
  PropertyResult out;
  Rng rng(seed);
  const Term q = Term::compound("p", {Term::variable("X")});
  for (int i = 0; i < cases; ++i, ++out.cases) {
    GroundProgram gp = random_ground_program(rng, {});
    auto sets = answer_sets(gp);
    QueryResult brave = query(sets, q, Mode::kBrave);
    QueryResult cautious = query(sets, q, Mode::kCautious);
    std::set<std::vector<Term>> b(brave.bindings.begin(), brave.bindings.end());
    std::set<std::vector<Term>> c(cautious.bindings.begin(), cautious.bindings.end());
    std::set<std::vector<Term>> want_b, want_c;
    for (const Term& t : brave_atoms(sets)) want_b.insert({t.args()[0]});
    for (const Term& t : cautious_atoms(sets)) want_c.insert({t.args()[0]});
    const bool contained = std::includes(b.begin(), b.end(), c.begin(), c.end());
    if (!contained || b != want_b || c != want_c) out.fail(render(gp.to_program()));
  }
  return out;
}

}  // namespace framelog::testing
