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

#ifndef FRAMELOG_SCHEMA_H_
#define FRAMELOG_SCHEMA_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "framelog/program.h"
#include "framelog/ulr.h"

namespace framelog {

struct RoleSchema {
  std::string name;
  std::string domain_predicate;
  bool required = false;
};

struct FrameSchema {
  std::string name;
  std::vector<RoleSchema> roles;
  // Observed (exogenously inserted) fluents rather than actions.
  bool observable = false;

  const RoleSchema* find_role(std::string_view role) const;
  int role_index(std::string_view role) const;
};

// `Buyer` -> `buyer`, `Entity1` -> `entity`.
std::string default_domain_predicate(std::string_view role);

// The set of frames a program may mention. Loaded from a schema file:
//
//   schema("Commerce_buy",["Buyer","Goods","Recipient"]).
//   schema("North_of",["Entity1","Entity2"],[observable]).
//   schema("Located",["Entity",role("Location",location)]).
//   subdomain(place,location).
//
// `subdomain(a,b)` contributes the rule `b(X) :- a(X).`
class SchemaSet {
 public:
  static SchemaSet parse(std::string_view text);

  void add(FrameSchema schema);
  void add_subdomain(std::string sub, std::string super);

  // Looks up by base name; a `_not` suffix is not accepted here.
  const FrameSchema* find(std::string_view name) const;
  // Accepts rendered names, including negated ones.
  bool is_known_frame(std::string_view rendered_name) const;

  // Reorders roles into declaration order. Throws Error on an unknown frame
  // or role.
  UlrTerm canonical(const UlrTerm& term) const;

  std::string domain_predicate(std::string_view frame,
                               std::string_view role) const;

  std::vector<Rule> domain_rules() const;
  const std::vector<FrameSchema>& frames() const { return frames_; }
  bool empty() const { return frames_.empty(); }

 private:
  std::vector<FrameSchema> frames_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::pair<std::string, std::string>> subdomains_;
};

}  // namespace framelog

#endif  // FRAMELOG_SCHEMA_H_
