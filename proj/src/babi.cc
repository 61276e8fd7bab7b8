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

#include "framelog/babi.h"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "framelog/extract.h"
#include "framelog/rulec.h"
#include "framelog/sec.h"
#include "framelog/solver.h"
#include "framelog/text.h"

namespace framelog {
namespace {

constexpr const char* kNumberWords[] = {"none", "one", "two",   "three", "four", "five",
                                        "six",  "seven", "eight", "nine", "ten"};

std::string display(const Term& t) {
  if (t.kind() == TermKind::kString || t.kind() == TermKind::kAtom) return t.name();
  return render(t);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

std::string normalize_answer(std::string_view a) {
  std::string out;
  for (char c : to_lower(trim(a))) {
    if (c == ' ' || c == '\t') continue;
    out += c;
  }
  return out;
}

// Token governed by a `case` child with the given lemma, or 0.
int case_marked(const DepParse& parse, std::string_view marker) {
  for (int id = 1; id <= parse.size(); ++id) {
    for (int c : parse.children(id, "case")) {
      if (to_lower(parse.token(c).lemma) == marker) return id;
    }
  }
  return 0;
}

std::vector<std::string> first_values(const QueryResult& r) {
  std::set<std::string> values;
  for (const auto& b : r.bindings) {
    if (!b.empty()) values.insert(display(b.front()));
  }
  return {values.begin(), values.end()};
}

std::vector<std::filesystem::path> path_list(const nlohmann::json& j,
                                             const std::filesystem::path& base) {
  std::vector<std::filesystem::path> out;
  if (j.is_string()) {
    out.push_back(base / j.get<std::string>());
  } else {
    for (const auto& item : j) out.push_back(base / item.get<std::string>());
  }
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string_view answer_mode_name(AnswerMode mode) {
  switch (mode) {
    case AnswerMode::kNone: return "none";
    case AnswerMode::kCount: return "count";
    case AnswerMode::kList: return "list";
    case AnswerMode::kYesNo: return "yes-no";
    case AnswerMode::kPath: return "path";
    case AnswerMode::kBefore: return "before";
  }
  return "none";
}

AnswerMode parse_answer_mode(std::string_view name) {
  for (AnswerMode m : {AnswerMode::kNone, AnswerMode::kCount, AnswerMode::kList,
                       AnswerMode::kYesNo, AnswerMode::kPath, AnswerMode::kBefore}) {
    if (answer_mode_name(m) == name) return m;
  }
  throw Error("unknown answer mode: " + std::string(name));
}

TaskConfig TaskConfig::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.parent_path());
}

TaskConfig TaskConfig::parse(std::string_view text, const std::filesystem::path& base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("task config: ") + e.what());
  }
  TaskConfig c;
  try {
    c.task = j.at("task").get<int>();
    c.name = j.value("name", "");
    c.schema = base / j.at("schema").get<std::string>();
    c.training = base / j.at("training").get<std::string>();
    c.training_parses = base / j.at("training_parses").get<std::string>();
    if (j.contains("init_term")) c.init_term = base / j["init_term"].get<std::string>();
    if (j.contains("rules")) c.rules = base / j["rules"].get<std::string>();
    if (j.contains("parses")) c.parses = path_list(j["parses"], base);
    c.answer = parse_answer_mode(j.value("answer", "none"));
    c.join_modifiers = j.value("join_modifiers", false);
    if (j.contains("time_words")) {
      for (const auto& [phrase, rank] : j["time_words"].items()) {
        c.time_words.emplace_back(to_lower(phrase), rank.get<int>());
      }
      // Longer phrases first so "this morning" is not shadowed by "this".
      std::stable_sort(c.time_words.begin(), c.time_words.end(),
                       [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    }
    if (j.contains("directions")) {
      for (const auto& [frame, steps] : j["directions"].items()) {
        c.directions[frame] = {steps.at(0).get<std::string>(), steps.at(1).get<std::string>()};
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("task config: ") + e.what());
  }
  if (c.answer == AnswerMode::kPath && c.directions.empty()) {
    throw Error("task config: path answers need a directions table");
  }
  return c;
}

std::vector<BabiDataPoint> parse_babi(std::string_view text) {
  std::vector<BabiDataPoint> out;
  std::vector<std::string> story;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    std::size_t sp = line.find(' ');
    int id = 0;
    bool numbered = sp != std::string_view::npos &&
                    std::all_of(line.begin(), line.begin() + static_cast<std::ptrdiff_t>(sp),
                                [](char c) { return c >= '0' && c <= '9'; });
    if (numbered) id = std::stoi(std::string(line.substr(0, sp)));
    std::string_view body = numbered ? trim(line.substr(sp + 1)) : line;
    if (id == 1) story.clear();
    if (body.find('\t') == std::string_view::npos && !body.ends_with("?")) {
      if (!numbered) {
        BabiDataPoint bad;
        bad.line = line_no;
        bad.malformed = "line " + std::to_string(line_no) + ": missing line number";
        out.push_back(std::move(bad));
        continue;
      }
      story.emplace_back(body);
      continue;
    }
    BabiDataPoint p;
    p.line = line_no;
    p.narrative = story;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = body.find('\t', start);
      fields.emplace_back(trim(body.substr(start, tab - start)));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (!numbered || fields.size() < 2 || fields[1].empty()) {
      p.malformed = "line " + std::to_string(line_no) + ": malformed question";
    } else {
      p.question = fields[0];
      p.gold = fields[1];
      if (fields.size() > 2) {
        std::istringstream s(fields[2]);
        int n;
        while (s >> n) p.supporting.push_back(n);
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool answers_equal(std::string_view a, std::string_view b) {
  return normalize_answer(a) == normalize_answer(b);
}

std::size_t TaskReport::correct() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return r.correct; }));
}

double TaskReport::accuracy() const {
  if (results.empty()) return 0.0;
  return 100.0 * static_cast<double>(correct()) / static_cast<double>(results.size());
}

std::string TaskReport::render() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const DataPointResult& r = results[i];
    out << "task " << task << " #" << (i + 1) << " ";
    if (!r.point.malformed.empty()) {
      out << "skipped: " << r.point.malformed << "\n";
      continue;
    }
    out << r.point.question << " -> " << (r.error.empty() ? r.answer : "error: " + r.error)
        << " (gold " << r.point.gold << ") " << (r.correct ? "ok" : "wrong") << "\n";
  }
  char acc[32];
  std::snprintf(acc, sizeof acc, "%.2f", accuracy());
  out << "task " << task << ": " << correct() << "/" << results.size()
      << " correct, accuracy " << acc << "%\n";
  return out.str();
}

DepParse join_modifiers(const DepParse& parse) {
  DepParse out = parse;
  for (int id = 1; id <= parse.size(); ++id) {
    std::string prefix;
    for (int c : parse.children(id, "amod")) {
      if (parse.token(c).upos == "ADJ") prefix += to_lower(parse.token(c).lemma) + "-";
    }
    if (!prefix.empty()) out.mutable_token(id).lemma = prefix + parse.token(id).lemma;
  }
  return out;
}

struct BabiTask::Prepared {
  Program program;
  DepParse question;
  int max_time = 1;
};

BabiTask::BabiTask(TaskConfig config, std::vector<DepParse> extra_parses, Bounds bounds)
    : config_(std::move(config)), bounds_(bounds) {
  schemas_ = SchemaSet::parse(read_file(config_.schema));
  store_ = learn_all(parse_training_file(read_file(config_.training)),
                     load_conllu(read_file(config_.training_parses)), &schemas_);
  for (const auto& p : config_.parses) {
    for (DepParse& d : load_conllu(read_file(p))) extra_parses.push_back(std::move(d));
  }
  for (DepParse& d : extra_parses) {
    bank_.add(config_.join_modifiers ? join_modifiers(d) : std::move(d));
  }
  CompileContext ctx{store_, schemas_, bank_};
  if (!config_.init_term.empty()) {
    InitTermFile f = compile_init_term_file(read_file(config_.init_term), ctx);
    if (!f.errors.empty()) throw Error(config_.init_term.string() + ": " + f.errors.front());
    init_term_ = std::move(f.rules);
  }
  if (!config_.rules.empty()) {
    CompileOptions options;
    options.normalize_connectives = true;
    CompiledFile f = compile_file(read_file(config_.rules), ctx, options);
    if (!f.errors.empty()) throw Error(config_.rules.string() + ": " + f.errors.front());
    rules_ = std::move(f.rules);
  }
}

DepParse BabiTask::lookup(const std::string& sentence) const {
  const DepParse* p = bank_.find(sentence);
  if (p == nullptr) throw Error("no parse for sentence: " + sentence);
  return *p;
}

BabiTask::Prepared BabiTask::prepare(const BabiDataPoint& point) const {
  std::vector<DepParse> parses;
  std::vector<int> rank;
  for (const std::string& s : point.narrative) {
    parses.push_back(lookup(s));
    int r = 0;
    std::string lower = to_lower(s);
    for (const auto& [phrase, value] : config_.time_words) {
      if (lower.starts_with(phrase)) {
        r = value;
        break;
      }
    }
    rank.push_back(r);
  }
  std::vector<std::size_t> order(parses.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  std::vector<std::size_t> position(parses.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  std::vector<ResolvedSentence> resolved = resolve_coreference(parses);
  for (ResolvedSentence& r : resolved) r.source = position[r.source];
  Narrative n = narrative_to_occurrences(resolved, static_cast<int>(parses.size()), store_,
                                         schemas_);
  Prepared out;
  out.program = assemble_sec_program(n, init_term_, rules_, schemas_);
  out.max_time = n.max_time();
  out.question = lookup(point.question);
  return out;
}

Program BabiTask::program_for(const BabiDataPoint& point) const {
  return prepare(point).program;
}

DataPointResult BabiTask::answer(const BabiDataPoint& point) const {
  DataPointResult result;
  result.point = point;
  if (!point.malformed.empty()) {
    result.error = point.malformed;
    return result;
  }
  try {
    Prepared p = prepare(point);
    std::vector<AnswerSet> sets = answer_sets(ground(p.program, bounds_), bounds_);
    CompileContext ctx{store_, schemas_, bank_};
    auto at = [&](const Term& q, const Term& time) {
      return Term::compound("holdsAt", {q, time});
    };
    const Term tmax = Term::integer(p.max_time);

    switch (config_.answer) {
      case AnswerMode::kNone:
      case AnswerMode::kList:
      case AnswerMode::kCount: {
        Term q = compile_query(point.question, ctx).atom;
        QueryResult r = query(sets, at(q, tmax), Mode::kBrave);
        if (r.variables.empty()) {
          result.answer = r.satisfied() ? "yes" : "no";
          break;
        }
        std::vector<std::string> values = first_values(r);
        if (config_.answer == AnswerMode::kCount) {
          result.answer = values.size() < std::size(kNumberWords)
                              ? kNumberWords[values.size()]
                              : std::to_string(values.size());
        } else if (values.empty()) {
          result.answer = config_.answer == AnswerMode::kList ? "nothing" : "none";
        } else {
          result.answer = join(values);
        }
        break;
      }
      case AnswerMode::kYesNo: {
        Term q = at(compile_query(point.question, ctx).atom, tmax);
        if (query(sets, q, Mode::kCautious).satisfied() && !sets.empty()) {
          result.answer = "yes";
        } else if (query(sets, q, Mode::kBrave).satisfied()) {
          result.answer = "maybe";
        } else {
          result.answer = "no";
        }
        break;
      }
      case AnswerMode::kBefore: {
        int anchor_token = case_marked(p.question, "before");
        if (anchor_token == 0) throw Error("question has no \"before\" anchor");
        std::string anchor = display(filler_value(p.question, anchor_token));
        Term q = compile_query(point.question, ctx).atom;
        const std::string time_var = "T_before";
        QueryResult r = query(sets, at(q, Term::variable(time_var)), Mode::kBrave);
        if (r.variables.size() < 2) throw Error("question has no open role");
        std::map<std::int64_t, std::set<std::string>> timeline;
        for (const auto& b : r.bindings) {
          if (b.back().kind() == TermKind::kInteger) {
            timeline[b.back().value()].insert(display(b.front()));
          }
        }
        std::int64_t first = -1;
        for (const auto& [t, values] : timeline) {
          if (values.contains(anchor)) {
            first = t;
            break;
          }
        }
        std::vector<std::string> before;
        for (auto it = timeline.rbegin(); first >= 0 && it != timeline.rend(); ++it) {
          if (it->first >= first) continue;
          for (const auto& v : it->second) {
            if (v != anchor) before.push_back(v);
          }
          if (!before.empty()) break;
        }
        result.answer = before.empty() ? "none" : join(before);
        break;
      }
      case AnswerMode::kPath: {
        int from = case_marked(p.question, "from");
        int to = case_marked(p.question, "to");
        if (from == 0 || to == 0) throw Error("question names no source or target");
        std::string source = display(filler_value(p.question, from));
        std::string target = display(filler_value(p.question, to));
        std::map<std::string, std::set<std::pair<std::string, std::string>>> edges;
        for (const auto& [frame, steps] : config_.directions) {
          const FrameSchema* fs = schemas_.find(frame);
          if (fs == nullptr || fs->roles.size() < 2) {
            throw Error("direction frame " + frame + " needs two roles");
          }
          Term pattern = Term::compound(
              "frame",
              {Term::string(frame),
               Term::list({Term::compound("rl", {Term::string(fs->roles[0].name),
                                                 Term::variable("Figure_")}),
                           Term::compound("rl", {Term::string(fs->roles[1].name),
                                                 Term::variable("Ground_")})})});
          for (const auto& b : query(sets, at(pattern, tmax), Mode::kBrave).bindings) {
            std::string figure = display(b[0]);
            std::string ground_node = display(b[1]);
            edges[ground_node].insert({steps.first, figure});
            edges[figure].insert({steps.second, ground_node});
          }
        }
        std::map<std::string, std::pair<std::string, std::string>> came_from;
        std::deque<std::string> frontier{source};
        came_from[source] = {"", ""};
        while (!frontier.empty() && !came_from.contains(target)) {
          std::string node = frontier.front();
          frontier.pop_front();
          for (const auto& [step, next] : edges[node]) {
            if (came_from.contains(next)) continue;
            came_from[next] = {node, step};
            frontier.push_back(next);
          }
        }
        if (!came_from.contains(target) || source == target) {
          result.answer = "none";
          break;
        }
        std::vector<std::string> route;
        for (std::string node = target; node != source; node = came_from[node].first) {
          route.push_back(came_from[node].second);
        }
        std::reverse(route.begin(), route.end());
        result.answer = join(route);
        break;
      }
    }
  } catch (const Error& e) {
    result.error = e.what();
    return result;
  }
  result.correct = answers_equal(result.answer, point.gold);
  return result;
}

TaskReport BabiTask::run(const std::vector<BabiDataPoint>& points) const {
  TaskReport report;
  report.task = config_.task;
  for (const BabiDataPoint& p : points) report.results.push_back(answer(p));
  return report;
}

}  // namespace framelog
