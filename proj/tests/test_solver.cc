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

#include <cstdlib>

#include "framelog/ground.h"
#include "framelog/oracle.h"
#include "framelog/solver.h"
#include "framelog/syntax.h"
#include "oracles.h"
#include "properties.h"

namespace framelog {
namespace {

std::vector<AnswerSet> solve(const std::string& text) {
  return answer_sets(ground(parse_program(text)));
}

std::string all(const std::vector<AnswerSet>& sets) {
  std::string out;
  for (const AnswerSet& s : sets) out += render(s) + "\n";
  return out;
}

TEST_SUITE("solver") {

TEST_CASE("stratified negation has one model") {
  CHECK(all(solve("p(1..3). q(X) :- p(X), not r(X). r(2).")) ==
        "{p(1), p(2), p(3), q(1), q(3), r(2)}\n");
}

TEST_CASE("even loops branch and odd loops kill") {
  CHECK(solve("a :- not b. b :- not a.").size() == 2);
  CHECK(solve("a :- not a.").empty());
  CHECK(solve("a v b. :- a.").size() == 1);
}

TEST_CASE("disjunctive heads are minimal") {
  CHECK(all(solve("a v b. a :- b.")) == "{a}\n");
  CHECK(all(solve("a v b v c.")) == "{a}\n{b}\n{c}\n");
}

TEST_CASE("grounding evaluates comparisons and ranges") {
  CHECK(all(solve("n(1..4). lt(X,Y) :- n(X), n(Y), X<Y, Y<3. ne(X) :- n(X), X!=2, X<3.")) ==
        "{lt(1,2), n(1), n(2), n(3), n(4), ne(1)}\n");
  CHECK_THROWS_AS(ground(parse_program("p(X) :- not q(X).")), GroundError);
}

TEST_CASE("resource bounds are enforced") {
  Bounds tight;
  tight.max_ground_rules = 5;
  CHECK_THROWS_AS(ground(parse_program("n(1..10). m(X) :- n(X)."), tight), ResourceError);
  setenv("FRAMELOG_MAX_ATOMS", "42", 1);
  setenv("FRAMELOG_TIME_BUDGET_MS", "250", 1);
  Bounds env = Bounds::from_environment();
  CHECK(env.max_atoms == 42);
  CHECK(env.time_budget.count() == 250);
  unsetenv("FRAMELOG_MAX_ATOMS");
  unsetenv("FRAMELOG_TIME_BUDGET_MS");
}

TEST_CASE("frame queries match on a subset of roles") {
  Term pattern = parse_term("frame(\"Cure\",[rl(\"Patient\",P)])");
  Term atom = parse_term("frame(\"Cure\",[rl(\"Doctor\",\"Daniel\"),rl(\"Patient\",\"Mary\")])");
  std::unordered_map<std::string, Term> subst;
  CHECK(query_match(pattern, atom, subst));
  CHECK(subst.at("P") == Term::string("Mary"));
  subst.clear();
  CHECK_FALSE(query_match(parse_term("frame(\"Cure\",[rl(\"Method\",M)])"), atom, subst));
}

TEST_CASE("brave and cautious answers") {
  Program p = parse_program("p(a) v p(b). p(c).");
  QueryResult brave = solve_query(p, parse_term("p(X)"), Mode::kBrave);
  QueryResult cautious = solve_query(p, parse_term("p(X)"), Mode::kCautious);
  CHECK(render(brave) == "{X=a}\n{X=b}\n{X=c}");
  CHECK(render(cautious) == "{X=c}");
  CHECK(render(solve_query(p, parse_term("p(c)"), Mode::kCautious)) == "yes");
  CHECK(render(solve_query(p, parse_term("p(a)"), Mode::kCautious)) == "no");
  CHECK(parse_mode("cautious") == Mode::kCautious);
  CHECK(mode_name(Mode::kBrave) == "brave");
  CHECK_THROWS_AS(parse_mode("skeptical"), Error);
}

TEST_CASE("an inconsistent program answers nothing in either mode") {
  Program p = parse_program("a :- not a. p(1).");
  CHECK_FALSE(solve_query(p, parse_term("p(X)"), Mode::kBrave).satisfied());
  CHECK_FALSE(solve_query(p, parse_term("p(X)"), Mode::kCautious).satisfied());
}

TEST_CASE("unknown frames in a query are rejected") {
  SchemaSet s = SchemaSet::parse("schema(\"Cure\",[\"Doctor\"]).");
  CHECK_NOTHROW(check_query_frames(parse_term("frame(\"Cure_not\",[])"), s));
  CHECK_THROWS_AS(check_query_frames(parse_term("frame(\"Curing\",[])"), s), QueryError);
}

TEST_CASE("the oracle refuses programs beyond its size") {
  GroundProgram gp;
  for (int i = 0; i < 30; ++i) {
    int a = gp.intern(Term::compound("p", {Term::integer(i)}));
    gp.add_rule({{a}, {}, {a}});
  }
  CHECK_THROWS_AS(oracle_answer_sets(gp), Error);
}

TEST_CASE("random ground programs agree with the brute-force oracle") {
  testing::PropertyResult r = testing::solver_oracle_property(500, 2026);
  INFO(r.first_failure);
  CHECK(r.cases == 500);
  CHECK(r.failures == 0);
}

TEST_CASE("cautious answers are among the brave ones") {
  testing::PropertyResult r = testing::mode_containment_property(1000, 99);
  INFO(r.first_failure);
  CHECK(r.cases == 1000);
  CHECK(r.failures == 0);
}

}  // TEST_SUITE

}  // namespace
}  // namespace framelog
