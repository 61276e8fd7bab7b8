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

#ifndef FRAMELOG_TESTS_SUPPORT_H_
#define FRAMELOG_TESTS_SUPPORT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "framelog/babi.h"
#include "framelog/conllu.h"
#include "framelog/lvp.h"
#include "framelog/program.h"
#include "framelog/rulec.h"
#include "framelog/schema.h"

namespace framelog::testing {

inline std::filesystem::path data_dir() { return FRAMELOG_DATA_DIR; }

inline std::string data_file(const std::string& relative) {
  return read_file(data_dir() / relative);
}

// The clinical and travel knowledge base under data/kb. The bank holds the
// example, guideline and training sentences.
struct Kb {
  SchemaSet schemas;
  LvpStore store;
  ParseBank bank;

  static const Kb& get() {
    static const Kb kb = [] {
      Kb k;
      k.schemas = SchemaSet::parse(data_file("kb/schema.txt"));
      k.store = load_store(data_file("kb/lvps.txt"));
      k.bank.add_all(load_conllu(data_file("kb/examples.conllu")));
      k.bank.add_all(load_conllu(data_file("kb/uti.conllu")));
      k.bank.add_all(load_conllu(data_file("kb/training.conllu")));
      return k;
    }();
    return kb;
  }

  CompileContext context() const { return {store, schemas, bank}; }

  const DepParse& parse(std::string_view sentence) const {
    const DepParse* p = bank.find(sentence);
    if (p == nullptr) throw Error("test bank lacks: " + std::string(sentence));
    return *p;
  }
};

// Renders every rule of a program, one per line.
inline std::string render_rules(const std::vector<Rule>& rules) {
  std::string out;
  for (const Rule& r : rules) out += render(r) + "\n";
  return out;
}

// Builds a parse from `form/UPOS/head/deprel[/lemma]` items.
DepParse make_parse(const std::string& text, const std::vector<std::string>& items);

}  // namespace framelog::testing

#endif  // FRAMELOG_TESTS_SUPPORT_H_
