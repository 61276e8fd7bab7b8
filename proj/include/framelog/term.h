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

#ifndef FRAMELOG_TERM_H_
#define FRAMELOG_TERM_H_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace framelog {

// Base of every diagnostic raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Terms of the logic language. Constants come in three flavours: plain
// atoms (`watch`), quoted strings (`"Mary"`) and integers. Compound terms
// cover `frame(...)`, `rl(...)`, domain atoms and the temporal predicates;
// lists hold role lists. Ranges only appear as the argument of a unary fact
// such as `timestamp(1..3)`.
enum class TermKind : std::uint8_t {
  kAtom,
  kString,
  kInteger,
  kVariable,
  kCompound,
  kList,
  kRange,
};

class Term {
 public:
  Term() = default;

  static Term atom(std::string name);
  static Term string(std::string text);
  static Term integer(std::int64_t value);
  static Term variable(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);
  static Term list(std::vector<Term> elements);
  static Term range(std::int64_t lo, std::int64_t hi);

  TermKind kind() const { return kind_; }
  // Atom name, string text, variable name or compound functor.
  const std::string& name() const { return name_; }
  std::int64_t value() const { return value_; }
  std::int64_t hi() const { return hi_; }
  const std::vector<Term>& args() const { return args_; }

  bool is_variable() const { return kind_ == TermKind::kVariable; }
  bool is_constant() const {
    return kind_ == TermKind::kAtom || kind_ == TermKind::kString ||
           kind_ == TermKind::kInteger;
  }
  bool is_compound(std::string_view functor, std::size_t arity) const {
    return kind_ == TermKind::kCompound && name_ == functor &&
           args_.size() == arity;
  }
  bool is_ground() const;

  // Appends variables in first-occurrence order, skipping ones already
  // present in `out`.
  void collect_variables(std::vector<std::string>& out) const;

  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  TermKind kind_ = TermKind::kAtom;
  std::string name_;
  std::int64_t value_ = 0;
  std::int64_t hi_ = 0;
  std::vector<Term> args_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

std::string render(const Term& term);

bool is_plain_atom_name(std::string_view s);
bool is_variable_name(std::string_view s);

}  // namespace framelog

#endif  // FRAMELOG_TERM_H_
