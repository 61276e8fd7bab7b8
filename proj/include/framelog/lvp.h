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

#ifndef FRAMELOG_LVP_H_
#define FRAMELOG_LVP_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "framelog/conllu.h"
#include "framelog/schema.h"

namespace framelog {

class LearnError : public Error {
 public:
  using Error::Error;
};

struct RoleSpec {
  std::string role;
  int token = 0;  // 1-based
  bool required = true;
  friend bool operator==(const RoleSpec&, const RoleSpec&) = default;
};

// One `train("Sentence","Frame","LU"=k,[syn,...],["Role"=i+required,...]).`
struct TrainingAnnotation {
  std::string sentence;
  std::string frame;
  int lu_index = 0;
  std::vector<std::string> lu_synonyms;
  std::vector<RoleSpec> role_specs;
  friend bool operator==(const TrainingAnnotation&, const TrainingAnnotation&) = default;
};

TrainingAnnotation parse_training_line(std::string_view line);
std::vector<TrainingAnnotation> parse_training_file(std::string_view text);

struct Pattern {
  std::string role;
  // Relation labels walked downward from the lexical unit. Empty when the
  // lexical unit itself fills the role (`Gertrude is a sheep`).
  std::vector<std::string> path;
  bool required = true;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Logical valence pattern.
struct Lvp {
  std::string lu_lemma;
  std::string frame;
  std::vector<Pattern> patterns;
  friend bool operator==(const Lvp&, const Lvp&) = default;
};

// `lvp(buy,"Commerce_buy",[pattern("Buyer",[nsubj],required),...])`
std::string render(const Lvp& lvp);
Lvp parse_lvp(std::string_view text);

// Throws LearnError when a role token is not below the lexical unit, when a
// role is annotated twice, or (given schemas) when the frame or a role is
// unknown.
Lvp learn_lvp(const TrainingAnnotation& annotation, const DepParse& parse,
              const SchemaSet* schemas = nullptr);

class LvpStore {
 public:
  // Structurally identical LVPs are stored once.
  void add(Lvp lvp);
  void add_synonym(const std::string& lu, const std::string& synonym);

  // LVPs keyed by `lemma` plus those of the lexical unit it is a declared
  // synonym of.
  std::vector<const Lvp*> lookup(std::string_view lemma) const;
  bool empty() const { return lvps_.empty(); }
  std::size_t size() const { return lvps_.size(); }
  const std::vector<Lvp>& lvps() const { return lvps_; }
  const std::vector<std::pair<std::string, std::string>>& synonyms() const {
    return synonym_list_;
  }

  friend bool operator==(const LvpStore& a, const LvpStore& b) {
    return a.lvps_ == b.lvps_ && a.synonym_list_ == b.synonym_list_;
  }

 private:
  std::vector<Lvp> lvps_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_lemma_;
  std::map<std::string, std::string, std::less<>> synonym_of_;
  std::vector<std::pair<std::string, std::string>> synonym_list_;
};

// One rendered `lvp(...)` per line, then one `synonym(lu,syn).` per synonym.
std::string save_store(const LvpStore& store);
// Throws LearnError("line N: ...") on malformed input.
LvpStore load_store(std::string_view text);

// Learns annotation i against parse i; the sentence texts must agree.
LvpStore learn_all(const std::vector<TrainingAnnotation>& annotations,
                   const std::vector<DepParse>& parses,
                   const SchemaSet* schemas = nullptr);

}  // namespace framelog

#endif  // FRAMELOG_LVP_H_
