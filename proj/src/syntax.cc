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

#include "framelog/syntax.h"

#include <cctype>
#include <charconv>

namespace framelog {

SyntaxError::SyntaxError(std::size_t offset, std::string expected)
    : Error("syntax error at offset " + std::to_string(offset) +
            ": expected " + expected),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Reader {
 public:
  Reader(std::string_view text, TermSyntax syntax)
      : text_(text), syntax_(syntax) {}

  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(std::string_view s) {
    skip_space();
    return text_.substr(pos_, s.size()) == s;
  }

  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("'" + std::string(s) + "'");
  }

  // Keyword followed by whitespace, e.g. `not ` or ` v `.
  bool accept_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t after = pos_ + kw.size();
    if (after >= text_.size() ||
        !std::isspace(static_cast<unsigned char>(text_[after]))) {
      return false;
    }
    pos_ = after;
    return true;
  }

  [[noreturn]] void fail(std::string expected) const {
    throw SyntaxError(pos_, std::move(expected));
  }

  Term term() {
    skip_space();
    if (pos_ >= text_.size()) fail("term");
    char c = text_[pos_];
    if (c == '"') return quoted();
    if (c == '[') return list();
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      return number();
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      return Term::variable(identifier());
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name = identifier();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        std::vector<Term> args = arguments(')');
        return Term::compound(std::move(name), std::move(args));
      }
      return Term::atom(std::move(name));
    }
    fail("term");
  }

 private:
  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer_literal() {
    std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer");
    }
    return v;
  }

  Term number() {
    std::int64_t lo = integer_literal();
    if (text_.substr(pos_, 2) == ".." && pos_ + 2 < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_ + 2])) ||
         text_[pos_ + 2] == '-')) {
      pos_ += 2;
      std::int64_t hi = integer_literal();
      return Term::range(lo, hi);
    }
    return Term::integer(lo);
  }

  Term quoted() {
    ++pos_;  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("closing '\"'");
      char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= text_.size()) fail("escaped character");
        c = text_[pos_++];
      }
      out += c;
    }
    return Term::string(std::move(out));
  }

  Term list() {
    ++pos_;  // '['
    return Term::list(arguments(']'));
  }

  std::vector<Term> arguments(char close) {
    std::vector<Term> args;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == close) {
      ++pos_;
      return args;
    }
    while (true) {
      args.push_back(argument());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == close) {
        ++pos_;
        return args;
      }
      fail(std::string("',' or '") + close + "'");
    }
  }

  Term argument() {
    Term t = term();
    if (!syntax_.annotation_operators) return t;
    if (accept("+")) t = Term::compound("+", {std::move(t), term()});
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '=' &&
        text_.substr(pos_, 2) != "=<") {
      ++pos_;
      Term rhs = term();
      if (accept("+")) rhs = Term::compound("+", {std::move(rhs), term()});
      t = Term::compound("=", {std::move(t), std::move(rhs)});
    }
    return t;
  }

  std::string_view text_;
  TermSyntax syntax_;
  std::size_t pos_ = 0;
};

Literal body_literal(Reader& r) {
  if (r.accept_keyword("not")) return Literal::naf(r.term());
  Term lhs = r.term();
  if (r.accept("!=")) return Literal::compare(CompareOp::kNotEqual, lhs, r.term());
  if (r.accept("<")) return Literal::compare(CompareOp::kLess, lhs, r.term());
  return Literal::positive(std::move(lhs));
}

std::vector<Literal> body(Reader& r) {
  std::vector<Literal> out;
  out.push_back(body_literal(r));
  while (r.accept(",")) out.push_back(body_literal(r));
  return out;
}

Statement statement(Reader& r) {
  if (r.accept(":-")) {
    Rule rule;
    rule.body = body(r);
    r.expect(".");
    return rule;
  }
  if (r.accept("?-")) {
    Query q{r.term()};
    r.expect(".");
    return q;
  }
  Rule rule;
  rule.head.push_back(r.term());
  while (r.accept_keyword("v")) rule.head.push_back(r.term());
  if (r.accept(":-")) {
    rule.body = body(r);
    r.expect(".");
    return rule;
  }
  if (rule.head.size() == 1 && r.accept("?")) return Query{rule.head.front()};
  if (!r.accept(".")) {
    r.fail(rule.head.size() == 1 ? "'.', '?', ':-' or 'v'" : "'.', ':-' or 'v'");
  }
  return rule;
}

}  // namespace

Term parse_term(std::string_view text, TermSyntax syntax) {
  Reader r(text, syntax);
  Term t = r.term();
  if (!r.at_end()) r.fail("end of input");
  return t;
}

Statement parse_statement(std::string_view text) {
  Reader r(text, {});
  Statement s = statement(r);
  if (!r.at_end()) r.fail("end of input");
  return s;
}

std::vector<Statement> parse_statements(std::string_view text) {
  Reader r(text, {});
  std::vector<Statement> out;
  while (!r.at_end()) out.push_back(statement(r));
  return out;
}

Program parse_program(std::string_view text) {
  Program p;
  Reader r(text, {});
  while (!r.at_end()) {
    std::size_t at = r.pos();
    Statement s = statement(r);
    if (!std::holds_alternative<Rule>(s)) throw SyntaxError(at, "rule or fact, not a query");
    p.rules.push_back(std::get<Rule>(std::move(s)));
  }
  return p;
}

}  // namespace framelog
