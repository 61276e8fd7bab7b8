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

#include "framelog/program.h"

#include <algorithm>
#include <cctype>

namespace framelog {

Literal Literal::positive(Term atom) {
  Literal l;
  l.kind = Kind::kPositive;
  l.atom = std::move(atom);
  return l;
}

Literal Literal::naf(Term atom) {
  Literal l;
  l.kind = Kind::kNaf;
  l.atom = std::move(atom);
  return l;
}

Literal Literal::compare(CompareOp op, Term lhs, Term rhs) {
  Literal l;
  l.kind = Kind::kCompare;
  l.op = op;
  l.lhs = std::move(lhs);
  l.rhs = std::move(rhs);
  return l;
}

std::vector<std::string> unsafe_variables(const Rule& rule) {
  std::vector<std::string> bound;
  for (const Literal& l : rule.body) {
    if (l.is_positive()) l.atom.collect_variables(bound);
  }
  std::vector<std::string> needed;
  for (const Term& h : rule.head) h.collect_variables(needed);
  for (const Literal& l : rule.body) {
    if (l.is_naf()) {
      l.atom.collect_variables(needed);
    } else if (l.is_compare()) {
      l.lhs.collect_variables(needed);
      l.rhs.collect_variables(needed);
    }
  }
  std::vector<std::string> unsafe;
  for (const auto& v : needed) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
      unsafe.push_back(v);
    }
  }
  return unsafe;
}

Rule make_rule(std::vector<Term> head, std::vector<Literal> body) {
  Rule rule{std::move(head), std::move(body)};
  auto unsafe = unsafe_variables(rule);
  if (!unsafe.empty()) {
    std::string msg = "unsafe rule: variable";
    if (unsafe.size() > 1) msg += 's';
    for (std::size_t i = 0; i < unsafe.size(); ++i) {
      msg += (i ? ", " : " ") + unsafe[i];
    }
    msg += " not bound by a positive body literal";
    throw UnsafeRuleError(msg, std::move(unsafe));
  }
  return rule;
}

std::string render(const Literal& literal) {
  switch (literal.kind) {
    case Literal::Kind::kPositive:
      return render(literal.atom);
    case Literal::Kind::kNaf:
      return "not " + render(literal.atom);
    case Literal::Kind::kCompare:
      return render(literal.lhs) +
             (literal.op == CompareOp::kNotEqual ? "!=" : "<") +
             render(literal.rhs);
  }
  return {};
}

std::string render(const Rule& rule) {
  std::string out;
  for (std::size_t i = 0; i < rule.head.size(); ++i) {
    if (i) out += " v ";
    out += render(rule.head[i]);
  }
  if (!rule.body.empty()) {
    out += rule.head.empty() ? ":- " : " :- ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      if (i) out += ", ";
      out += render(rule.body[i]);
    }
  }
  out += '.';
  return out;
}

std::string render(const Query& query) { return render(query.atom) + "?"; }

std::string render(const Statement& statement) {
  return std::visit([](const auto& s) { return render(s); }, statement);
}

std::string render(const Program& program) {
  std::string out;
  for (const Rule& r : program.rules) {
    out += render(r);
    out += '\n';
  }
  return out;
}

std::string squash_whitespace(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

}  // namespace framelog
