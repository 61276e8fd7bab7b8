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

#ifndef FRAMELOG_BABI_H_
#define FRAMELOG_BABI_H_

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "framelog/conllu.h"
#include "framelog/ground.h"
#include "framelog/lvp.h"
#include "framelog/program.h"
#include "framelog/schema.h"

namespace framelog {

// Whole file as a string; throws Error when it cannot be read.
std::string read_file(const std::filesystem::path& path);

// How the answer set is turned into a bAbI answer word.
enum class AnswerMode {
  kNone,     // values of the first query variable, comma separated
  kCount,    // number of values as a word ("none", "one", "two", ...)
  kList,     // sorted values, comma separated, "nothing" when empty
  kYesNo,    // cautious -> yes, brave only -> maybe, otherwise no
  kPath,     // shortest route over the direction frames
  kBefore,   // location held just before the anchor location
};

std::string_view answer_mode_name(AnswerMode mode);
AnswerMode parse_answer_mode(std::string_view name);

struct TaskConfig {
  int task = 0;
  std::string name;
  std::filesystem::path schema;
  std::filesystem::path training;         // annotation lines
  std::filesystem::path training_parses;  // CoNLL-U aligned with `training`
  std::filesystem::path init_term;        // optional
  std::filesystem::path rules;            // optional
  std::vector<std::filesystem::path> parses;  // bank for stories and questions
  AnswerMode answer = AnswerMode::kNone;
  // Merges adjectival modifiers into their head noun ("pink_rectangle").
  bool join_modifiers = false;
  // Leading time phrase -> rank; sentences are replayed in rank order.
  std::vector<std::pair<std::string, int>> time_words;
  // Direction frame -> (step from ground to figure, step back).
  std::map<std::string, std::pair<std::string, std::string>> directions;

  // Paths inside the JSON are relative to the file's directory.
  static TaskConfig load(const std::filesystem::path& path);
  static TaskConfig parse(std::string_view json, const std::filesystem::path& base);
};

struct BabiDataPoint {
  std::vector<std::string> narrative;  // story sentences before the question
  std::string question;
  std::string gold;
  std::vector<int> supporting;
  std::size_t line = 0;  // line of the question in the task file
  std::string malformed;  // non-empty when the question line could not be read
};

// Stories restart at id 1. Every question becomes one data point whose
// narrative is the story's statements so far.
std::vector<BabiDataPoint> parse_babi(std::string_view text);

struct DataPointResult {
  BabiDataPoint point;
  std::string answer;
  std::string error;
  bool correct = false;
};

struct TaskReport {
  int task = 0;
  std::vector<DataPointResult> results;

  std::size_t correct() const;
  double accuracy() const;  // percent; 0 when there are no data points
  std::string render() const;
};

// Answers are compared case-insensitively with blanks around commas removed.
bool answers_equal(std::string_view a, std::string_view b);

// The learned model and compiled statements of one task, shared by all of
// its data points. Each data point is solved as a fresh program.
class BabiTask {
 public:
  BabiTask(TaskConfig config, std::vector<DepParse> extra_parses = {}, Bounds bounds = {});

  const TaskConfig& config() const { return config_; }
  const std::vector<Rule>& init_term_rules() const { return init_term_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const LvpStore& store() const { return store_; }

  DataPointResult answer(const BabiDataPoint& point) const;
  TaskReport run(const std::vector<BabiDataPoint>& points) const;

  // The program solved for `point`, for inspection.
  Program program_for(const BabiDataPoint& point) const;

 private:
  struct Prepared;
  Prepared prepare(const BabiDataPoint& point) const;
  DepParse lookup(const std::string& sentence) const;

  TaskConfig config_;
  SchemaSet schemas_;
  LvpStore store_;
  ParseBank bank_;
  Bounds bounds_;
  std::vector<Rule> init_term_;
  std::vector<Rule> rules_;
};

// Merges each ADJ `amod` child into its head's lemma.
DepParse join_modifiers(const DepParse& parse);

}  // namespace framelog

#endif  // FRAMELOG_BABI_H_
