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

#include "framelog/conllu.h"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace framelog {

DepParse::DepParse(std::vector<Token> tokens, std::string text)
    : tokens_(std::move(tokens)), text_(std::move(text)) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (tokens_[i].id != i + 1) {
      throw IngestError("token ids not contiguous at id " +
                        std::to_string(tokens_[i].id));
    }
    if (tokens_[i].head < 0 || tokens_[i].head > n) {
      throw IngestError("dangling head " + std::to_string(tokens_[i].head) +
                        " on token " + std::to_string(i + 1));
    }
    if (tokens_[i].head == 0) {
      if (root_ != 0) {
        throw IngestError("more than one root (tokens " +
                          std::to_string(root_) + " and " +
                          std::to_string(i + 1) + ")");
      }
      root_ = i + 1;
    }
  }
  if (n > 0 && root_ == 0) throw IngestError("no root token");
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != 0) {
      if (++steps > n) {
        throw IngestError("cyclic head chain through token " +
                          std::to_string(i));
      }
      cur = tokens_[cur - 1].head;
    }
  }
  if (text_.empty()) {
    for (const Token& t : tokens_) {
      if (!text_.empty()) text_ += ' ';
      text_ += t.form;
    }
  }
}

std::vector<int> DepParse::children(int id) const {
  std::vector<int> out;
  for (const Token& t : tokens_) {
    if (t.head == id) out.push_back(t.id);
  }
  return out;
}

std::vector<int> DepParse::children(int id, std::string_view deprel) const {
  std::vector<int> out;
  for (const Token& t : tokens_) {
    if (t.head == id && t.deprel == deprel) out.push_back(t.id);
  }
  return out;
}

int DepParse::depth(int id) const {
  int d = 0;
  while (token(id).head != 0) {
    id = token(id).head;
    ++d;
  }
  return d;
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::vector<DepParse> load_conllu(std::string_view text,
                                  std::vector<std::string>* warnings) {
  std::vector<DepParse> out;
  std::vector<Token> tokens;
  std::string sentence_text;
  int line_no = 0;
  int block_start = 0;

  auto flush = [&]() {
    if (tokens.empty()) {
      sentence_text.clear();
      return;
    }
    std::string name = sentence_text.empty()
                           ? "sentence " + std::to_string(out.size() + 1)
                           : "sentence \"" + sentence_text + "\"";
    try {
      out.emplace_back(std::move(tokens), std::move(sentence_text));
    } catch (const IngestError& e) {
      throw IngestError(name + " (line " + std::to_string(block_start) +
                        "): " + e.what());
    }
    tokens.clear();
    sentence_text.clear();
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty()) {
      flush();
      continue;
    }
    if (tokens.empty() && sentence_text.empty()) block_start = line_no;
    if (line.front() == '#') {
      constexpr std::string_view kText = "# text = ";
      if (line.starts_with(kText)) sentence_text = std::string(line.substr(kText.size()));
      continue;
    }
    auto cols = split_tabs(line);
    std::string where = "line " + std::to_string(line_no);
    if (cols.size() != 10) {
      throw IngestError(where + ": expected 10 tab-separated columns, got " +
                        std::to_string(cols.size()));
    }
    if (cols[0].find_first_of("-.") != std::string_view::npos) {
      if (warnings) {
        warnings->push_back(where + ": skipped multiword token or empty node " +
                            std::string(cols[0]));
      }
      continue;
    }
    Token t;
    if (!parse_int(cols[0], t.id)) {
      throw IngestError(where + ": non-integer id '" + std::string(cols[0]) + "'");
    }
    if (!parse_int(cols[6], t.head)) {
      throw IngestError(where + ": non-integer head '" + std::string(cols[6]) + "'");
    }
    t.form = cols[1];
    t.lemma = cols[2];
    t.upos = cols[3];
    t.deprel = cols[7];
    tokens.push_back(std::move(t));
  }
  flush();
  return out;
}

std::string to_conllu(const DepParse& parse) {
  std::string out = "# text = " + parse.text() + "\n";
  for (const Token& t : parse.tokens()) {
    out += std::to_string(t.id) + '\t' + t.form + '\t' + t.lemma + '\t' +
           t.upos + "\t_\t_\t" + std::to_string(t.head) + '\t' + t.deprel +
           "\t_\t_\n";
  }
  out += '\n';
  return out;
}

namespace {

bool is_subject(std::string_view rel) {
  return rel == "nsubj" || rel == "nsubj:pass" || rel == "csubj" ||
         rel == "expl";
}

bool has_subject(const DepParse& p, int id) {
  for (int c : p.children(id)) {
    if (is_subject(p.token(c).deprel)) return true;
  }
  return false;
}

}  // namespace

std::vector<Violation> validate_factual(const DepParse& parse) {
  std::vector<Violation> v;
  if (parse.size() == 0) {
    v.push_back({0, "no factual root", "empty sentence"});
    return v;
  }
  const int root = parse.root();
  const Token& r = parse.token(root);
  if (r.upos == "INTJ") {
    v.push_back({root, "no factual root",
                 "sentence is rooted in the interjection \"" + r.form + "\""});
    return v;
  }
  const bool copular = !parse.children(root, "cop").empty();
  if (r.upos == "VERB" || r.upos == "AUX") {
    if (!has_subject(parse, root)) {
      v.push_back({root, "imperative",
                   "verbal root \"" + r.form + "\" has no subject"});
    }
  } else if (copular) {
    if (!has_subject(parse, root)) {
      v.push_back({root, "no factual root",
                   "copular predicate \"" + r.form + "\" has no subject"});
    }
  } else {
    v.push_back({root, "no factual root",
                 "root \"" + r.form + "\" is neither a verb nor a copular predicate"});
  }
  return v;
}

std::optional<std::vector<std::string>> dep_path(const DepParse& parse,
                                                 int from, int to) {
  std::vector<std::string> labels;
  int cur = to;
  while (cur != from) {
    if (cur == 0) return std::nullopt;
    const Token& t = parse.token(cur);
    labels.push_back(t.deprel);
    cur = t.head;
  }
  std::reverse(labels.begin(), labels.end());
  return labels;
}

std::string ParseBank::key(std::string_view sentence) {
  std::string out;
  bool space = false;
  for (char c : sentence) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !out.empty() && c != ',' && c != '\'' && c != '.' && c != '?') {
      out += ' ';
    }
    space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  while (!out.empty() && (out.back() == '.' || out.back() == '?' || out.back() == ' ')) {
    out.pop_back();
  }
  return out;
}

void ParseBank::add(DepParse parse) {
  std::string k = key(parse.text());
  if (auto it = index_.find(k); it != index_.end()) {
    parses_[it->second] = std::move(parse);
    return;
  }
  index_.emplace(std::move(k), parses_.size());
  parses_.push_back(std::move(parse));
}

void ParseBank::add_all(std::vector<DepParse> parses) {
  for (auto& p : parses) add(std::move(p));
}

const DepParse* ParseBank::find(std::string_view sentence) const {
  auto it = index_.find(key(sentence));
  return it == index_.end() ? nullptr : &parses_[it->second];
}

}  // namespace framelog
