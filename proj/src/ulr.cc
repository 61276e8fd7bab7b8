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

#include "framelog/ulr.h"

#include <array>
#include <cctype>

namespace framelog {

UlrTerm::UlrTerm(std::string frame_name, std::vector<RoleFiller> roles,
                 bool negated)
    : frame_name_(std::move(frame_name)),
      negated_(negated),
      roles_(std::move(roles)) {
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    for (std::size_t j = i + 1; j < roles_.size(); ++j) {
      if (roles_[i].role == roles_[j].role) {
        throw Error("duplicate role \"" + roles_[i].role + "\" in frame \"" +
                    frame_name_ + "\"");
      }
    }
  }
}

std::string UlrTerm::rendered_name() const {
  return negated_ ? frame_name_ + std::string(kNegationSuffix) : frame_name_;
}

const Term* UlrTerm::filler(std::string_view role) const {
  for (const auto& rf : roles_) {
    if (rf.role == role) return &rf.filler;
  }
  return nullptr;
}

UlrTerm UlrTerm::negate(bool negated) const {
  UlrTerm t = *this;
  t.negated_ = negated;
  return t;
}

Term UlrTerm::to_term() const {
  std::vector<Term> rls;
  rls.reserve(roles_.size());
  for (const auto& rf : roles_) {
    rls.push_back(Term::compound("rl", {Term::string(rf.role), rf.filler}));
  }
  return Term::compound(
      "frame", {Term::string(rendered_name()), Term::list(std::move(rls))});
}

std::optional<UlrTerm> UlrTerm::from_term(const Term& t) {
  if (!t.is_compound("frame", 2)) return std::nullopt;
  const Term& name = t.args()[0];
  const Term& list = t.args()[1];
  if (name.kind() != TermKind::kString || list.kind() != TermKind::kList) {
    return std::nullopt;
  }
  std::vector<RoleFiller> roles;
  for (const Term& rl : list.args()) {
    if (!rl.is_compound("rl", 2) || rl.args()[0].kind() != TermKind::kString) {
      return std::nullopt;
    }
    roles.push_back({rl.args()[0].name(), rl.args()[1]});
  }
  std::string frame = name.name();
  bool negated = false;
  if (frame.size() > kNegationSuffix.size() &&
      frame.ends_with(kNegationSuffix)) {
    frame.resize(frame.size() - kNegationSuffix.size());
    negated = true;
  }
  try {
    return UlrTerm(std::move(frame), std::move(roles), negated);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string render(const UlrTerm& term) { return render(term.to_term()); }

std::string render_fact(const UlrTerm& term) { return render(term) + "."; }

namespace {

constexpr std::array<std::string_view, 21> kNumberWords = {
    "zero",  "one",     "two",      "three",    "four",    "five",
    "six",   "seven",   "eight",    "nine",     "ten",     "eleven",
    "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen",
    "eighteen", "nineteen", "twenty"};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Term normalize_constant(std::string_view token, std::string_view upos) {
  if (token.empty()) throw Error("empty token");
  for (char c : token) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') {
      throw Error("token \"" + std::string(token) +
                  "\" contains characters outside letters, digits and '-'");
    }
  }
  if (upos == "PROPN") return Term::string(std::string(token));
  if (upos == "NUM") {
    bool digits = true;
    for (char c : token) digits = digits && std::isdigit(static_cast<unsigned char>(c));
    if (digits) return Term::integer(std::stoll(std::string(token)));
    std::string w = lower(token);
    for (std::size_t i = 0; i < kNumberWords.size(); ++i) {
      if (kNumberWords[i] == w) return Term::integer(static_cast<std::int64_t>(i));
    }
  }
  std::string atom = lower(token);
  for (char& c : atom) {
    if (c == '-') c = '_';
  }
  if (!std::islower(static_cast<unsigned char>(atom[0]))) {
    // Leading digit on a non-numeral token, e.g. "2nd".
    atom = "n" + atom;
  }
  return Term::atom(std::move(atom));
}

}  // namespace framelog
