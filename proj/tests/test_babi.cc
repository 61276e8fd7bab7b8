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

#include "framelog/babi.h"
#include "support.h"

namespace framelog {
namespace {

using testing::data_dir;
using testing::data_file;

std::filesystem::path task_config(int n) {
  return data_dir() / "babi" / "tasks" / ("task" + std::to_string(n) + ".json");
}

std::vector<BabiDataPoint> samples(int n) {
  return parse_babi(data_file("babi/samples/qa" + std::to_string(n) + ".txt"));
}

TEST_SUITE("babi") {

TEST_CASE("stories restart at id one") {
  auto points = parse_babi(
      "1 Mary moved to the bathroom.\n"
      "2 John went to the hallway.\n"
      "3 Where is Mary?\tbathroom\t1\n"
      "4 Daniel went back to the hallway.\n"
      "5 Where is Daniel?\thallway\t4\n"
      "1 Sandra journeyed to the garden.\n"
      "2 Where is Sandra?\tgarden\t1\n");
  REQUIRE(points.size() == 3);
  CHECK(points[0].narrative.size() == 2);
  CHECK(points[0].gold == "bathroom");
  CHECK(points[0].supporting == std::vector<int>{1});
  CHECK(points[1].narrative.size() == 3);
  CHECK(points[2].narrative == std::vector<std::string>{"Sandra journeyed to the garden."});
  CHECK(points[2].line == 7);
}

TEST_CASE("malformed question lines are kept and flagged") {
  auto points = parse_babi("1 Mary moved to the bathroom.\n2 Where is Mary?\n");
  REQUIRE(points.size() == 1);
  CHECK_FALSE(points[0].malformed.empty());
  CHECK(parse_babi("").empty());
}

TEST_CASE("answers compare loosely") {
  CHECK(answers_equal("North , East", "north,east"));
  CHECK_FALSE(answers_equal("north", "south"));
  CHECK(parse_answer_mode("yes-no") == AnswerMode::kYesNo);
  CHECK(answer_mode_name(AnswerMode::kBefore) == "before");
  CHECK_THROWS_AS(parse_answer_mode("guess"), Error);
}

TEST_CASE("configs resolve paths next to the file") {
  TaskConfig c = TaskConfig::parse(
      R"({"task": 19, "schema": "s.txt", "training": "t.txt", "training_parses": "t.conllu",
          "parses": ["p.conllu"], "answer": "path",
          "directions": {"North_of": ["n", "s"]},
          "time_words": {"yesterday": 1}})",
      "/base");
  CHECK(c.schema == std::filesystem::path("/base/s.txt"));
  CHECK(c.answer == AnswerMode::kPath);
  CHECK(c.directions.at("North_of") == std::make_pair(std::string("n"), std::string("s")));
  CHECK(c.time_words == std::vector<std::pair<std::string, int>>{{"yesterday", 1}});
  CHECK_THROWS_AS(TaskConfig::parse("{\"task\": 1}", "/base"), Error);
  CHECK_THROWS_AS(TaskConfig::parse("not json", "/base"), Error);
}

TEST_CASE("modifiers merge into their head") {
  DepParse p = testing::make_parse(
      "The red square is below the box",
      {"The/DET/3/det", "red/ADJ/3/amod", "square/NOUN/4/nsubj", "is/AUX/0/root/be",
       "below/ADP/7/case", "the/DET/7/det", "box/NOUN/4/obl"});
  DepParse j = join_modifiers(p);
  CHECK(j.size() == p.size());
  CHECK(j.token(3).lemma == "red-square");
  CHECK(j.token(7).lemma == "box");
}

TEST_CASE("data points are solved independently and deterministically") {
  BabiTask task(TaskConfig::load(task_config(1)));
  auto points = samples(1);
  REQUIRE_FALSE(points.empty());
  DataPointResult first = task.answer(points[0]);
  CHECK(first.correct);
  TaskReport a = task.run(points);
  TaskReport b = task.run(points);
  CHECK(a.render() == b.render());
  // A previous story must not leak into the next one.
  BabiDataPoint moved = points[0];
  moved.narrative.insert(moved.narrative.begin(), "Mary went to the hallway.");
  task.answer(moved);
  CHECK(task.answer(points[0]).answer == first.answer);
}

TEST_CASE("a sentence without a parse is an error for that point only") {
  BabiTask task(TaskConfig::load(task_config(1)));
  BabiDataPoint p = samples(1)[0];
  p.narrative.push_back("Mary teleported to the moon.");
  DataPointResult r = task.answer(p);
  CHECK_FALSE(r.correct);
  CHECK_FALSE(r.error.empty());
}

TEST_CASE("the shipped samples") {
  int correct = 0;
  for (int n = 1; n <= 20; ++n) {
    BabiTask task(TaskConfig::load(task_config(n)));
    TaskReport report = task.run(samples(n));
    INFO(report.render());
    REQUIRE(report.results.size() == 1);
    if (report.results[0].correct) ++correct;
    if (n != 16) CHECK(report.results[0].correct);
  }
  CHECK(correct >= 18);
}

}  // TEST_SUITE

}  // namespace
}  // namespace framelog
