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

#include "framelog/conllu.h"
#include "oracles.h"
#include "support.h"

namespace framelog {
namespace {

constexpr const char* kTwoSentences =
    "# sent_id = 1\n"
    "# text = Mary buys a car.\n"
    "1\tMary\tMary\tPROPN\t_\t_\t2\tnsubj\t_\t_\n"
    "2\tbuys\tbuy\tVERB\t_\t_\t0\troot\t_\t_\n"
    "3\ta\ta\tDET\t_\t_\t4\tdet\t_\t_\n"
    "4\tcar\tcar\tNOUN\t_\t_\t2\tobj\t_\t_\n"
    "5\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_\n"
    "\n"
    "# text = Bob's watch stops\n"
    "1-2\tBob's\t_\t_\t_\t_\t_\t_\t_\t_\n"
    "1\tBob\tBob\tPROPN\t_\t_\t3\tnmod:poss\t_\t_\n"
    "2\t's\t's\tPART\t_\t_\t1\tcase\t_\t_\n"
    "3\twatch\twatch\tNOUN\t_\t_\t4\tnsubj\t_\t_\n"
    "4\tstops\tstop\tVERB\t_\t_\t0\troot\t_\t_\n";

std::string one_sentence(const std::string& rows) { return "# text = x\n" + rows; }

TEST_SUITE("ingest") {

TEST_CASE("sentence blocks keep the consumed columns") {
  std::vector<std::string> warnings;
  std::vector<DepParse> parses = load_conllu(kTwoSentences, &warnings);
  REQUIRE(parses.size() == 2);
  CHECK(parses[0].text() == "Mary buys a car.");
  CHECK(parses[0].root() == 2);
  CHECK(parses[0].token(2).lemma == "buy");
  CHECK(parses[1].size() == 4);
  CHECK(warnings.size() == 1);
  CHECK(parses[0].children(2) == std::vector<int>{1, 4, 5});
  CHECK(parses[0].children(2, "obj") == std::vector<int>{4});
  CHECK(parses[1].depth(2) == 3);
}

TEST_CASE("malformed input names the problem") {
  CHECK_THROWS_AS(load_conllu(one_sentence("1\tMary\tMary\tPROPN\t_\t_\t0\n")), IngestError);
  CHECK_THROWS_AS(load_conllu(one_sentence("1\tMary\tMary\tPROPN\t_\t_\tx\troot\t_\t_\n")),
                  IngestError);
  // Two roots.
  CHECK_THROWS_AS(load_conllu(one_sentence("1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n"
                                           "2\tb\tb\tX\t_\t_\t0\troot\t_\t_\n")),
                  IngestError);
  // A cycle that avoids the root.
  CHECK_THROWS_AS(load_conllu(one_sentence("1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n"
                                           "2\tb\tb\tX\t_\t_\t3\tdep\t_\t_\n"
                                           "3\tc\tc\tX\t_\t_\t2\tdep\t_\t_\n")),
                  IngestError);
  // A head outside the sentence.
  CHECK_THROWS_AS(load_conllu(one_sentence("1\ta\ta\tX\t_\t_\t4\tdep\t_\t_\n")), IngestError);
  // Ids out of order.
  CHECK_THROWS_AS(load_conllu(one_sentence("2\ta\ta\tX\t_\t_\t0\troot\t_\t_\n")), IngestError);
  try {
    load_conllu(std::string(kTwoSentences) + "\n" + one_sentence("1\tMary\n"));
    FAIL("expected an ingest error");
  } catch (const IngestError& e) {
    CHECK(std::string(e.what()).find("line 17") != std::string::npos);
  }
}

TEST_CASE("empty input has no sentences") {
  CHECK(load_conllu("").empty());
  CHECK(load_conllu("\n\n# just a comment\n").empty());
}

TEST_CASE("paths walk down from a head") {
  DepParse p = load_conllu(kTwoSentences)[1];
  CHECK(*dep_path(p, 4, 2) == std::vector<std::string>{"nsubj", "nmod:poss", "case"});
  CHECK(dep_path(p, 4, 4)->empty());
  CHECK_FALSE(dep_path(p, 1, 4).has_value());
}

TEST_CASE("bank keys ignore case, spacing and final punctuation") {
  CHECK(ParseBank::key("Mary buys a car .") == ParseBank::key("mary buys a car"));
  CHECK(ParseBank::key("Where is Mary ?") == ParseBank::key("where is Mary?"));
  CHECK(ParseBank::key("Daniel 's patient") == ParseBank::key("Daniel's patient"));
  ParseBank bank;
  bank.add_all(load_conllu(kTwoSentences));
  REQUIRE(bank.find("MARY BUYS A CAR") != nullptr);
  CHECK(bank.find("Mary buys a watch") == nullptr);
  CHECK(bank.size() == 2);
}

TEST_CASE("factual check flags fragments and imperatives") {
  const auto& kb = testing::Kb::get();
  CHECK(validate_factual(kb.parse("Bob bought a watch")).empty());
  auto hello = validate_factual(kb.parse("Hello there"));
  REQUIRE(hello.size() == 1);
  CHECK(hello[0].property == "no factual root");
  auto imperative = validate_factual(testing::make_parse(
      "Buy a car", {"Buy/VERB/0/root/buy", "a/DET/3/det", "car/NOUN/1/obj"}));
  REQUIRE(imperative.size() == 1);
  CHECK(imperative[0].property == "imperative");
}

TEST_CASE("shipped parse files load") {
  for (const char* f : {"kb/training.conllu", "kb/examples.conllu", "kb/uti.conllu",
                        "babi/training.conllu", "babi/statements.conllu",
                        "babi/samples.conllu"}) {
    INFO(f);
    CHECK_FALSE(load_conllu(testing::data_file(f)).empty());
  }
}

TEST_CASE("random trees survive a write and reload") {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Token> tokens(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      int id = order[static_cast<std::size_t>(k)];
      Token& t = tokens[static_cast<std::size_t>(id - 1)];
      t.id = id;
      t.form = "w" + std::to_string(id);
      t.lemma = t.form;
      t.upos = "X";
      t.head = k == 0 ? 0
                      : order[static_cast<std::size_t>(
                            std::uniform_int_distribution<int>(0, k - 1)(rng))];
      t.deprel = k == 0 ? "root" : "dep";
    }
    DepParse p(tokens, "random tree");
    std::vector<DepParse> back = load_conllu(to_conllu(p));
    REQUIRE(back.size() == 1);
    CHECK(back[0] == p);
    for (int id = 1; id <= n; ++id) {
      auto path = dep_path(p, p.root(), id);
      REQUIRE(path.has_value());
      CHECK(static_cast<int>(path->size()) == p.depth(id));
    }
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace framelog
