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

#include "framelog/term.h"

#include <cctype>
#include <functional>

namespace framelog {

Term Term::atom(std::string name) {
  Term t;
  t.kind_ = TermKind::kAtom;
  t.name_ = std::move(name);
  return t;
}

Term Term::string(std::string text) {
  Term t;
  t.kind_ = TermKind::kString;
  t.name_ = std::move(text);
  return t;
}

Term Term::integer(std::int64_t value) {
  Term t;
  t.kind_ = TermKind::kInteger;
  t.value_ = value;
  return t;
}

Term Term::variable(std::string name) {
  Term t;
  t.kind_ = TermKind::kVariable;
  t.name_ = std::move(name);
  return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  Term t;
  t.kind_ = TermKind::kCompound;
  t.name_ = std::move(functor);
  t.args_ = std::move(args);
  return t;
}

Term Term::list(std::vector<Term> elements) {
  Term t;
  t.kind_ = TermKind::kList;
  t.args_ = std::move(elements);
  return t;
}

Term Term::range(std::int64_t lo, std::int64_t hi) {
  Term t;
  t.kind_ = TermKind::kRange;
  t.value_ = lo;
  t.hi_ = hi;
  return t;
}

bool Term::is_ground() const {
  if (kind_ == TermKind::kVariable) return false;
  for (const Term& a : args_) {
    if (!a.is_ground()) return false;
  }
  return true;
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (kind_ == TermKind::kVariable) {
    for (const auto& v : out) {
      if (v == name_) return;
    }
    out.push_back(name_);
    return;
  }
  for (const Term& a : args_) a.collect_variables(out);
}

std::size_t Term::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(std::hash<std::string>{}(name_));
  mix(std::hash<std::int64_t>{}(value_));
  mix(std::hash<std::int64_t>{}(hi_));
  for (const Term& a : args_) mix(a.hash());
  return h;
}

bool operator==(const Term& a, const Term& b) {
  return a.kind_ == b.kind_ && a.value_ == b.value_ && a.hi_ == b.hi_ &&
         a.name_ == b.name_ && a.args_ == b.args_;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.value_ <=> b.value_; c != 0) return c;
  if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
  if (auto c = a.name_.compare(b.name_); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::lexicographical_compare_three_way(
      a.args_.begin(), a.args_.end(), b.args_.begin(), b.args_.end());
}

namespace {

void render_to(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::kAtom:
    case TermKind::kVariable:
      out += t.name();
      return;
    case TermKind::kString:
      out += '"';
      for (char c : t.name()) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
      return;
    case TermKind::kInteger:
      out += std::to_string(t.value());
      return;
    case TermKind::kRange:
      out += std::to_string(t.value());
      out += "..";
      out += std::to_string(t.hi());
      return;
    case TermKind::kCompound:
      out += t.name();
      out += '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ',';
        render_to(t.args()[i], out);
      }
      out += ')';
      return;
    case TermKind::kList:
      out += '[';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ',';
        render_to(t.args()[i], out);
      }
      out += ']';
      return;
  }
}

}  // namespace

std::string render(const Term& term) {
  std::string out;
  render_to(term, out);
  return out;
}

bool is_plain_atom_name(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_variable_name(std::string_view s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace framelog
