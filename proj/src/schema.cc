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

#include "framelog/schema.h"

#include <algorithm>
#include <cctype>

#include "framelog/syntax.h"

namespace framelog {

const RoleSchema* FrameSchema::find_role(std::string_view role) const {
  for (const auto& r : roles) {
    if (r.name == role) return &r;
  }
  return nullptr;
}

int FrameSchema::role_index(std::string_view role) const {
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i].name == role) return static_cast<int>(i);
  }
  return -1;
}

std::string default_domain_predicate(std::string_view role) {
  std::string out;
  for (char c : role) {
    if (std::isdigit(static_cast<unsigned char>(c))) continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

namespace {

RoleSchema role_from_term(const Term& t, const std::string& frame) {
  if (t.kind() == TermKind::kString) {
    return {t.name(), default_domain_predicate(t.name()), false};
  }
  if (t.kind() == TermKind::kCompound && t.name() == "role" &&
      (t.args().size() == 2 || t.args().size() == 3) &&
      t.args()[0].kind() == TermKind::kString &&
      t.args()[1].kind() == TermKind::kAtom) {
    RoleSchema r{t.args()[0].name(), t.args()[1].name(), false};
    if (t.args().size() == 3) {
      r.required = t.args()[2] == Term::atom("required");
    }
    return r;
  }
  throw Error("schema for \"" + frame + "\": malformed role " + render(t));
}

}  // namespace

SchemaSet SchemaSet::parse(std::string_view text) {
  SchemaSet set;
  for (const Statement& st : parse_statements(text)) {
    const Rule* rule = std::get_if<Rule>(&st);
    if (!rule || !rule->is_fact()) {
      throw Error("schema file: expected facts, got " + render(st));
    }
    const Term& t = rule->head.front();
    if (t.kind() == TermKind::kCompound && t.name() == "schema" &&
        (t.args().size() == 2 || t.args().size() == 3) &&
        t.args()[0].kind() == TermKind::kString &&
        t.args()[1].kind() == TermKind::kList) {
      FrameSchema fs;
      fs.name = t.args()[0].name();
      for (const Term& r : t.args()[1].args()) {
        fs.roles.push_back(role_from_term(r, fs.name));
      }
      if (t.args().size() == 3) {
        for (const Term& flag : t.args()[2].args()) {
          if (flag == Term::atom("observable")) fs.observable = true;
        }
      }
      set.add(std::move(fs));
    } else if (t.is_compound("subdomain", 2) &&
               t.args()[0].kind() == TermKind::kAtom &&
               t.args()[1].kind() == TermKind::kAtom) {
      set.add_subdomain(t.args()[0].name(), t.args()[1].name());
    } else {
      throw Error("schema file: unrecognised declaration " + render(t));
    }
  }
  return set;
}

void SchemaSet::add(FrameSchema schema) {
  if (schema.name.ends_with(kNegationSuffix)) {
    throw Error("frame name \"" + schema.name + "\" may not end in _not");
  }
  for (std::size_t i = 0; i < schema.roles.size(); ++i) {
    for (std::size_t j = i + 1; j < schema.roles.size(); ++j) {
      if (schema.roles[i].name == schema.roles[j].name) {
        throw Error("schema \"" + schema.name + "\": duplicate role \"" +
                    schema.roles[i].name + "\"");
      }
    }
  }
  if (auto it = index_.find(schema.name); it != index_.end()) {
    frames_[it->second] = std::move(schema);
    return;
  }
  index_.emplace(schema.name, frames_.size());
  frames_.push_back(std::move(schema));
}

void SchemaSet::add_subdomain(std::string sub, std::string super) {
  subdomains_.emplace_back(std::move(sub), std::move(super));
}

const FrameSchema* SchemaSet::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &frames_[it->second];
}

bool SchemaSet::is_known_frame(std::string_view rendered_name) const {
  if (find(rendered_name)) return true;
  if (rendered_name.ends_with(kNegationSuffix)) {
    return find(rendered_name.substr(0, rendered_name.size() -
                                            kNegationSuffix.size())) != nullptr;
  }
  return false;
}

UlrTerm SchemaSet::canonical(const UlrTerm& term) const {
  const FrameSchema* fs = find(term.frame_name());
  if (!fs) throw Error("unknown frame \"" + term.frame_name() + "\"");
  std::vector<RoleFiller> roles = term.roles();
  for (const auto& rf : roles) {
    if (fs->role_index(rf.role) < 0) {
      throw Error("frame \"" + fs->name + "\" has no role \"" + rf.role + "\"");
    }
  }
  std::stable_sort(roles.begin(), roles.end(),
                   [fs](const RoleFiller& a, const RoleFiller& b) {
                     return fs->role_index(a.role) < fs->role_index(b.role);
                   });
  return UlrTerm(term.frame_name(), std::move(roles), term.negated());
}

std::string SchemaSet::domain_predicate(std::string_view frame,
                                        std::string_view role) const {
  if (const FrameSchema* fs = find(frame)) {
    if (const RoleSchema* r = fs->find_role(role)) return r->domain_predicate;
  }
  return default_domain_predicate(role);
}

std::vector<Rule> SchemaSet::domain_rules() const {
  std::vector<Rule> out;
  for (const auto& [sub, super] : subdomains_) {
    Term x = Term::variable("X");
    out.push_back(Rule{{Term::compound(super, {x})},
                       {Literal::positive(Term::compound(sub, {x}))}});
  }
  return out;
}

}  // namespace framelog
