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

#include "framelog/extract.h"
#include "support.h"

namespace framelog {
namespace {

using testing::Kb;

std::string facts_of(const std::vector<std::string>& sentences, bool with_domain) {
  const Kb& kb = Kb::get();
  std::vector<DepParse> doc;
  for (const auto& s : sentences) doc.push_back(kb.parse(s));
  Composition c = extract_document(doc, kb.store, kb.schemas);
  std::string out = testing::render_rules(c.rules);
  if (with_domain) {
    for (const DomainAtom& d : c.domain) out += render(d.to_term()) + ".\n";
  }
  return out;
}

std::string gold(const std::string& name) {
  return squash_whitespace(testing::data_file("kb/gold/" + name));
}

TEST_SUITE("extract") {

TEST_CASE("a new sentence reuses the learned pattern") {
  CHECK(squash_whitespace(facts_of({"Bob bought a watch"}, false)) == gold("bought_watch.ulr"));
}

TEST_CASE("paraphrases share one representation") {
  CHECK(facts_of({"Mary purchases a car"}, false) ==
        "frame(\"Commerce_buy\",[rl(\"Buyer\",\"Mary\"),rl(\"Goods\",car)]).\n");
}

TEST_CASE("coordinated fillers") {
  CHECK(squash_whitespace(facts_of(
            {"Daniel administers a parenteral and an oral antimicrobial therapy for Mary"},
            true)) == gold("coordinated_and.ulr"));
  CHECK(squash_whitespace(facts_of(
            {"Daniel administers a parenteral or an oral antimicrobial therapy for Mary"},
            false)) == gold("coordinated_or.ulr"));
  const Kb& kb = Kb::get();
  CHECK_THROWS_AS(
      extract_sentence(
          kb.parse("Daniel administers a parenteral and an oral or a rectal antimicrobial "
                   "therapy for Mary"),
          kb.store),
      ExtractError);
}

TEST_CASE("explicit negation") {
  CHECK(squash_whitespace(facts_of({"Daniel's patient Mary does not have UTI"}, false)) ==
        gold("negated_fact.ulr"));
}

TEST_CASE("pronouns take the latest agreeing name") {
  CHECK(squash_whitespace(facts_of({"Daniel's patient Mary has UTI",
                                    "He administers an antimicrobial therapy for her"},
                                   false)) == gold("coreference.ulr"));
}

TEST_CASE("no frame is an error") {
  const Kb& kb = Kb::get();
  CHECK_THROWS_AS(extract_sentence(kb.parse("Hello there"), kb.store), ExtractError);
}

TEST_CASE("triggers follow surface order") {
  const Kb& kb = Kb::get();
  auto triggers = trigger_lvps(kb.parse("Bob bought a watch"), kb.store);
  REQUIRE(triggers.size() == 1);
  CHECK(triggers[0].lu_token == 2);
  CHECK(triggers[0].lvp->frame == "Commerce_buy");
}

TEST_CASE("filler values by token kind") {
  DepParse p = testing::make_parse(
      "Who gives $person 7 apples",
      {"Who/PRON/2/nsubj/who", "gives/VERB/0/root/give", "$person/NOUN/2/iobj",
       "7/NUM/5/nummod", "apples/NOUN/2/obj/apple"});
  CHECK(filler_value(p, 1) == Term::variable("Who"));
  CHECK(filler_value(p, 3) == Term::variable("Person"));
  CHECK(filler_value(p, 4) == Term::integer(7));
  CHECK(filler_value(p, 5) == Term::integer(7));
  DepParse q = testing::make_parse(
      "Mary eats an x-ray", {"Mary/PROPN/2/nsubj", "eats/VERB/0/root/eat", "an/DET/4/det",
                             "x-ray/NOUN/2/obj"});
  CHECK(filler_value(q, 4) == Term::atom("x_ray"));
  CHECK(filler_value(q, 1) == Term::string("Mary"));
}

TEST_CASE("plural pronouns copy the sentence per coordinated name") {
  DepParse first = testing::make_parse(
      "Mary and John buy a car",
      {"Mary/PROPN/4/nsubj", "and/CCONJ/3/cc", "John/PROPN/1/conj", "buy/VERB/0/root",
       "a/DET/6/det", "car/NOUN/4/obj"});
  DepParse second = testing::make_parse(
      "They buy a watch",
      {"They/PRON/2/nsubj", "buy/VERB/0/root", "a/DET/4/det", "watch/NOUN/2/obj"});
  auto resolved = resolve_coreference({first, second});
  REQUIRE(resolved.size() == 3);
  CHECK(resolved[1].source == 1);
  CHECK(resolved[2].source == 1);
  CHECK(resolved[1].parse.token(1).form == "Mary");
  CHECK(resolved[2].parse.token(1).form == "John");
  const Kb& kb = Kb::get();
  Composition c = extract_document({first, second}, kb.store, kb.schemas);
  CHECK(c.rules.size() == 4);
}

TEST_CASE("unresolved pronouns are reported and left alone") {
  DepParse p = testing::make_parse(
      "She buys a car", {"She/PRON/2/nsubj", "buys/VERB/0/root/buy", "a/DET/4/det",
                         "car/NOUN/2/obj"});
  std::vector<std::string> diagnostics;
  auto resolved = resolve_coreference({p}, &diagnostics);
  REQUIRE(resolved.size() == 1);
  CHECK(resolved[0].parse.token(1).form == "She");
  REQUIRE(diagnostics.size() == 1);
  CHECK(diagnostics[0].find("unresolved pronoun") != std::string::npos);
}

TEST_CASE("abbreviations are not antecedents") {
  DepParse p = testing::make_parse(
      "UTI troubles her", {"UTI/PROPN/2/nsubj", "troubles/VERB/0/root/trouble",
                           "her/PRON/2/obj/she"});
  std::vector<std::string> diagnostics;
  resolve_coreference({p, p}, &diagnostics);
  CHECK(diagnostics.size() == 2);
}

TEST_CASE("selection keeps every best candidate per lexical unit") {
  FrameParse a{"A", 2, {}, false, false, Connective::kNone, Score{1, 1, 1}};
  FrameParse b{"B", 2, {}, false, false, Connective::kNone, Score{1, 1, 1}};
  FrameParse c{"C", 2, {}, false, false, Connective::kNone, Score{1, 2, 2}};
  FrameParse d{"D", 5, {}, false, false, Connective::kNone, Score{0, 0, 0}};
  auto kept = select_parses({a, b, d});
  REQUIRE(kept.size() == 3);
  CHECK(kept[0].frame == "A");
  CHECK(kept[2].frame == "D");
  kept = select_parses({a, b, c});
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].frame == "C");
}

}  // TEST_SUITE

}  // namespace
}  // namespace framelog
