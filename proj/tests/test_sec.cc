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

#include "doctest.h"

#include "framelog/ground.h"
#include "framelog/oracle.h"
#include "framelog/rulec.h"
#include "framelog/sec.h"
#include "framelog/solver.h"
#include "framelog/syntax.h"
#include "oracles.h"
#include "properties.h"
#include "support.h"

namespace framelog {
namespace {

using testing::Kb;

std::vector<Rule> travel_rules() {
  const Kb& kb = Kb::get();
  InitTermFile f = compile_init_term_file(testing::data_file("kb/travel.it"), kb.context());
  REQUIRE(f.errors.empty());
  return f.rules;
}

Term located(const std::string& who, const std::string& where, int time) {
  UlrTerm u("Located", {{"Entity", Term::string(who)}, {"Location", Term::atom(where)}});
  return Term::compound("holdsAt", {u.to_term(), Term::integer(time)});
}

Narrative story(const std::vector<std::string>& sentences) {
  const Kb& kb = Kb::get();
  std::vector<DepParse> parses;
  for (const auto& s : sentences) parses.push_back(kb.parse(s));
  return narrative_to_occurrences(parses, kb.store, kb.schemas);
}

DepParse goes(const std::string& who, const std::string& where) {
  return testing::make_parse(who + " goes to the " + where,
                             {who + "/PROPN/2/nsubj", "goes/VERB/0/root/go", "to/ADP/5/case",
                              "the/DET/5/det", where + "/NOUN/2/obl"});
}

TEST_SUITE("sec") {

TEST_CASE("statements split at the verb") {
  auto s = parse_init_term("$person travels to $place initiates $person is located in $place.");
  REQUIRE(s.has_value());
  CHECK(s->kind == InitTermStatement::Kind::kInitiation);
  CHECK(s->trigger == "$person travels to $place");
  CHECK(s->effect == "$person is located in $place");
  CHECK(parse_init_term("x terminates y")->kind == InitTermStatement::Kind::kTermination);
  CHECK_FALSE(parse_init_term("Mary goes to the bedroom.").has_value());
}

TEST_CASE("travel statements compile with typed guards") {
  CHECK(squash_whitespace(testing::render_rules(travel_rules())) ==
        squash_whitespace(testing::data_file("kb/gold/travel_init_term.ulr")));
}

TEST_CASE("an initiated variable must occur in the trigger") {
  const Kb& kb = Kb::get();
  InitTermFile f = compile_init_term_file(
      "$person travels to $place1 initiates $person is located in $place2.\n", kb.context());
  REQUIRE(f.errors.size() == 1);
  CHECK(f.errors[0].starts_with("line 1: "));
}

TEST_CASE("narrative sentences become occurrences") {
  Narrative n = story({"Mary goes to the bedroom", "The bedroom is north of the garden"});
  CHECK(n.sentence_count == 2);
  CHECK(n.max_time() == 3);
  REQUIRE(n.occurrences.size() == 2);
  CHECK(n.occurrences[1].time == 2);
  CHECK(n.observed.size() == 1);
  std::string happens;
  for (const Rule& r : narrative_rules(n)) {
    if (r.head.size() == 1 && r.head[0].is_compound("happensAt", 2)) happens += render(r) + "\n";
  }
  CHECK(squash_whitespace(happens) == squash_whitespace(testing::data_file("kb/gold/travel_happens.ulr")));
}

TEST_CASE("time wrapping round-trips") {
  Rule r = parse_program(
               "frame(\"A\",[rl(\"X\",X)]) :- frame(\"B\",[rl(\"X\",X)]), not "
               "frame(\"C\",[rl(\"X\",X)]), x(X).")
               .rules[0];
  Rule w = wrap_time_rule(r);
  CHECK(render(w) ==
        "holdsAt(frame(\"A\",[rl(\"X\",X)]),T) :- holdsAt(frame(\"B\",[rl(\"X\",X)]),T), not "
        "holdsAt(frame(\"C\",[rl(\"X\",X)]),T), x(X), timestamp(T).");
  CHECK(unwrap_time_rule(w) == r);
  Rule clash = parse_program("frame(\"A\",[rl(\"X\",T)]) :- t(T).").rules[0];
  CHECK(render(wrap_time_rule(clash)) ==
        "holdsAt(frame(\"A\",[rl(\"X\",T)]),T_0) :- t(T), timestamp(T_0).");
}

TEST_CASE("a location persists until the next move") {
  const Kb& kb = Kb::get();
  Narrative n = story({"Mary goes to the bedroom", "The bedroom is north of the garden"});
  Program p = assemble_sec_program(n, travel_rules(), {}, kb.schemas);
  GroundProgram gp = ground(p);
  auto sets = answer_sets(gp);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].contains(located("Mary", "bedroom", 3)));
  CHECK_FALSE(sets[0].contains(located("Mary", "bedroom", 1)));
  Query q = compile_query("Where is Mary?", kb.context());
  QueryResult r = query(sets, build_temporal_query(q.atom, n.max_time()).atom, Mode::kCautious);
  CHECK(render(r) == "{Where=bedroom}");

  n = story({"Mary goes to the bedroom", "The bedroom is north of the garden",
             "Mary goes to the garden"});
  sets = answer_sets(ground(assemble_sec_program(n, travel_rules(), {}, kb.schemas)));
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].contains(located("Mary", "garden", 4)));
  CHECK(sets[0].contains(located("Mary", "bedroom", 3)));
  CHECK_FALSE(sets[0].contains(located("Mary", "bedroom", 4)));
}

TEST_CASE("a disjunctive move yields one answer set per branch") {
  const Kb& kb = Kb::get();
  Narrative n;
  n.sentence_count = 1;
  Occurrence o;
  o.time = 1;
  for (const char* place : {"kitchen", "garden"}) {
    o.payloads.push_back(
        UlrTerm("Travel", {{"Person", Term::string("Mary")}, {"Place", Term::atom(place)}}));
    n.domain.push_back({"place", Term::atom(place)});
  }
  n.occurrences.push_back(o);
  n.domain.push_back({"person", Term::string("Mary")});
  auto sets = answer_sets(ground(assemble_sec_program(n, travel_rules(), {}, kb.schemas)));
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].contains(located("Mary", "garden", 2)) !=
        sets[1].contains(located("Mary", "garden", 2)));
}

TEST_CASE("random travel narratives match a direct simulation") {
  testing::PropertyResult r = testing::inertia_property(1000, 5);
  INFO(r.first_failure);
  CHECK(r.cases == 1000);
  CHECK(r.failures == 0);
}

TEST_CASE("the brute-force oracle agrees on a small narrative") {
  const Kb& kb = Kb::get();
  Narrative n = narrative_to_occurrences({goes("Mary", "bedroom")}, kb.store, kb.schemas);
  GroundProgram gp = ground(assemble_sec_program(n, travel_rules(), {}, kb.schemas));
  CHECK(answer_sets(gp) == oracle_answer_sets(gp));
}

}  // TEST_SUITE

}  // namespace
}  // namespace framelog
