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

#ifndef FRAMELOG_SYNTAX_H_
#define FRAMELOG_SYNTAX_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "framelog/program.h"

namespace framelog {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::string expected);
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

struct TermSyntax {
  // Accept `a=b` and `a+b` inside argument lists; used by the training
  // annotation format where `"Buyer"=1+required` occurs.
  bool annotation_operators = false;
};

// Parses one term; the whole input must be consumed (surrounding whitespace
// allowed).
Term parse_term(std::string_view text, TermSyntax syntax = {});

// Parses exactly one statement terminated by `.` or `?`.
Statement parse_statement(std::string_view text);

// Parses a sequence of statements. `%` starts a comment running to the end
// of the line.
std::vector<Statement> parse_statements(std::string_view text);

// Convenience over parse_statements that rejects queries.
Program parse_program(std::string_view text);

}  // namespace framelog

#endif  // FRAMELOG_SYNTAX_H_
