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

#ifndef FRAMELOG_CONLLU_H_
#define FRAMELOG_CONLLU_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "framelog/term.h"

namespace framelog {

class IngestError : public Error {
 public:
  using Error::Error;
};

// One CoNLL-U word line. Only ID, FORM, LEMMA, UPOS, HEAD and DEPREL are
// kept.
struct Token {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  int head = 0;
  std::string deprel;

  friend bool operator==(const Token&, const Token&) = default;
};

// A dependency tree over one sentence. Token ids run 1..size().
class DepParse {
 public:
  DepParse() = default;
  // Validates the tree; throws IngestError naming the problem.
  DepParse(std::vector<Token> tokens, std::string text);

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::string& text() const { return text_; }
  int size() const { return static_cast<int>(tokens_.size()); }
  bool valid_id(int id) const { return id >= 1 && id <= size(); }

  const Token& token(int id) const { return tokens_.at(id - 1); }
  Token& mutable_token(int id) { return tokens_.at(id - 1); }
  int root() const { return root_; }

  // Dependents of `id` in surface order, optionally filtered by relation.
  std::vector<int> children(int id) const;
  std::vector<int> children(int id, std::string_view deprel) const;
  int depth(int id) const;

  friend bool operator==(const DepParse&, const DepParse&) = default;

 private:
  std::vector<Token> tokens_;
  std::string text_;
  int root_ = 0;
};

// Splits `text` into sentence blocks. Multiword-token ranges and empty
// nodes are skipped; a note is appended to `warnings` when given. Throws
// IngestError on malformed lines or trees, naming the sentence and line.
std::vector<DepParse> load_conllu(std::string_view text,
                                  std::vector<std::string>* warnings = nullptr);

// Writes the consumed columns back out; unconsumed columns become `_`.
std::string to_conllu(const DepParse& parse);

struct Violation {
  int token = 0;
  std::string property;  // "imperative", "no factual root"
  std::string message;
};

// Minimal factual-sentence check: the root must be a finite verb with a
// subject, or a copular predicate; interjection-rooted fragments fail.
// Advisory only: the full property list of factual English is larger.
std::vector<Violation> validate_factual(const DepParse& parse);

// Relation labels along the downward path from `from` to `to`; nullopt when
// `to` is not in the subtree of `from`.
std::optional<std::vector<std::string>> dep_path(const DepParse& parse,
                                                 int from, int to);

// Sentence text -> parse lookup used wherever a component receives English
// text rather than a parse. Keys ignore case, spacing and final
// punctuation.
class ParseBank {
 public:
  static std::string key(std::string_view sentence);

  void add(DepParse parse);
  void add_all(std::vector<DepParse> parses);
  const DepParse* find(std::string_view sentence) const;
  std::size_t size() const { return parses_.size(); }

 private:
  std::vector<DepParse> parses_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace framelog

#endif  // FRAMELOG_CONLLU_H_
