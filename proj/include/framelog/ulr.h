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

#ifndef FRAMELOG_ULR_H_
#define FRAMELOG_ULR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "framelog/program.h"
#include "framelog/term.h"

namespace framelog {

inline constexpr std::string_view kNegationSuffix = "_not";

struct RoleFiller {
  std::string role;
  Term filler;  // constant, variable or structured filler such as at_least(7)
  friend bool operator==(const RoleFiller&, const RoleFiller&) = default;
};

// A frame instance `frame("Name",[rl("Role",Filler),...])`. Explicit
// negation is a flag that renders as a `_not` suffix on the frame name.
class UlrTerm {
 public:
  UlrTerm() = default;
  // Throws Error on duplicate role names.
  UlrTerm(std::string frame_name, std::vector<RoleFiller> roles,
          bool negated = false);

  const std::string& frame_name() const { return frame_name_; }
  bool negated() const { return negated_; }
  const std::vector<RoleFiller>& roles() const { return roles_; }
  std::string rendered_name() const;
  const Term* filler(std::string_view role) const;

  UlrTerm negate(bool negated) const;

  Term to_term() const;
  // Returns nullopt unless `t` has the frame/rl shape.
  static std::optional<UlrTerm> from_term(const Term& t);

  friend bool operator==(const UlrTerm&, const UlrTerm&) = default;

 private:
  std::string frame_name_;
  bool negated_ = false;
  std::vector<RoleFiller> roles_;
};

std::string render(const UlrTerm& term);
// `frame(...).`
std::string render_fact(const UlrTerm& term);

// Unary domain fact such as `doctor("Daniel")`.
struct DomainAtom {
  std::string predicate;
  Term argument;

  Term to_term() const { return Term::compound(predicate, {argument}); }
  friend bool operator==(const DomainAtom&, const DomainAtom&) = default;
};

// Proper nouns become quoted strings keeping their capitalisation, numerals
// integers, everything else a lowercase plain atom. Hyphens map to
// underscores. Throws Error on characters outside letters, digits and
// hyphens.
Term normalize_constant(std::string_view token, std::string_view upos);

}  // namespace framelog

#endif  // FRAMELOG_ULR_H_
