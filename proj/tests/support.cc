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

#include "support.h"

#include <sstream>

namespace framelog::testing {

DepParse make_parse(const std::string& text, const std::vector<std::string>& items) {
  std::vector<Token> tokens;
  for (const std::string& item : items) {
    std::vector<std::string> f;
    std::stringstream s(item);
    std::string part;
    while (std::getline(s, part, '/')) f.push_back(part);
    if (f.size() < 4) throw Error("bad token spec: " + item);
    Token t;
    t.id = static_cast<int>(tokens.size()) + 1;
    t.form = f[0];
    t.upos = f[1];
    t.head = std::stoi(f[2]);
    t.deprel = f[3];
    if (f.size() > 4) {
      t.lemma = f[4];
    } else if (t.upos == "PROPN" || t.form.starts_with("$")) {
      t.lemma = t.form;
    } else {
      for (char c : t.form) t.lemma += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    tokens.push_back(std::move(t));
  }
  return DepParse(std::move(tokens), text);
}

}  // namespace framelog::testing
