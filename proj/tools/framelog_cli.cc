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

// Command-line front end: learn, parse, compile, solve, run, repl, babi.

#include <fstream>
#include <iostream>
#include <string>
#include <unistd.h>
#include <vector>

#include "CLI11.hpp"

#include "framelog/babi.h"
#include "framelog/conllu.h"
#include "framelog/extract.h"
#include "framelog/lvp.h"
#include "framelog/rulec.h"
#include "framelog/schema.h"
#include "framelog/sec.h"
#include "framelog/session.h"
#include "framelog/solver.h"
#include "framelog/syntax.h"
#include "framelog/text.h"

namespace {

using namespace framelog;

std::vector<DepParse> load_parses(const std::vector<std::string>& files) {
  std::vector<DepParse> out;
  for (const auto& f : files) {
    std::vector<std::string> warnings;
    for (DepParse& p : load_conllu(read_file(f), &warnings)) out.push_back(std::move(p));
    for (const auto& w : warnings) std::cerr << f << ": warning: " << w << "\n";
  }
  return out;
}

ParseBank make_bank(const std::vector<std::string>& files) {
  ParseBank bank;
  bank.add_all(load_parses(files));
  return bank;
}

SchemaSet load_schemas(const std::string& path) {
  return path.empty() ? SchemaSet{} : SchemaSet::parse(read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frame-based knowledge authoring and reasoning"};
  app.require_subcommand(1);

  std::string schema_file, lvp_file, training_file, output_file, rules_file, init_term_file,
      program_file, queries_file, facts_file, config_file, data_file, mode_name_arg = "brave";
  std::vector<std::string> parse_files, bank_files, query_texts;
  bool strict = false;

  CLI::App* learn = app.add_subcommand("learn", "Learn LVPs from annotated sentences");
  learn->add_option("--schema", schema_file, "Frame schema file");
  learn->add_option("--training", training_file, "Annotation file")->required();
  learn->add_option("--parses", parse_files, "CoNLL-U parses aligned with the annotations")
      ->required();
  learn->add_option("-o,--output", output_file, "Write the LVP store here");

  CLI::App* parse = app.add_subcommand("parse", "Translate factual sentences to ULR facts");
  parse->add_option("--schema", schema_file, "Frame schema file");
  parse->add_option("--lvps", lvp_file, "LVP store")->required();
  parse->add_option("conllu", parse_files, "CoNLL-U document(s)")->required();

  CLI::App* compile = app.add_subcommand("compile", "Compile rules or initiation/termination statements");
  compile->add_option("--schema", schema_file, "Frame schema file");
  compile->add_option("--lvps", lvp_file, "LVP store")->required();
  compile->add_option("--bank", bank_files, "CoNLL-U parses of the statement sentences")
      ->required();
  compile->add_option("--rules", rules_file, "Rule file");
  compile->add_option("--init-term", init_term_file, "Initiation/termination file");
  compile->add_flag("--strict", strict, "Reject disjunctive premises and conjunctive conclusions");

  CLI::App* solve = app.add_subcommand("solve", "Answer queries against a logic program");
  solve->add_option("program", program_file, "Program in logic syntax")->required();
  solve->add_option("-q,--query", query_texts, "Query atom, e.g. 'p(X)'");
  solve->add_option("--queries", queries_file, "File of queries, one per line");
  solve->add_option("--mode", mode_name_arg, "brave or cautious");
  solve->add_option("--schema", schema_file, "Reject queries over unknown frames");

  CLI::App* run = app.add_subcommand("run", "Run the whole pipeline over files");
  run->add_option("--schema", schema_file, "Frame schema file")->required();
  run->add_option("--lvps", lvp_file, "LVP store")->required();
  run->add_option("--facts", facts_file, "CoNLL-U of the fact or narrative sentences");
  run->add_option("--bank", bank_files, "CoNLL-U of rule, statement and query sentences");
  run->add_option("--rules", rules_file, "Rule file");
  run->add_option("--init-term", init_term_file, "Initiation/termination file");
  run->add_option("--queries", queries_file, "Query file");
  run->add_option("--mode", mode_name_arg, "brave or cautious");

  CLI::App* repl = app.add_subcommand("repl", "Interactive session");
  repl->add_option("--schema", schema_file, "Frame schema file");
  repl->add_option("--lvps", lvp_file, "LVP store")->required();
  repl->add_option("--bank", bank_files, "CoNLL-U parses of the sentences to be typed");
  repl->add_option("--mode", mode_name_arg, "brave or cautious");

  CLI::App* babi = app.add_subcommand("babi", "Evaluate a bAbI task");
  babi->add_option("--config", config_file, "Task config (JSON)")->required();
  babi->add_option("--data", data_file, "bAbI task file")->required();
  babi->add_option("--parses", parse_files, "Extra CoNLL-U parses for the task file");

  CLI11_PARSE(app, argc, argv);

  try {
    Bounds bounds = Bounds::from_environment();
    if (*learn) {
      SchemaSet schemas = load_schemas(schema_file);
      LvpStore store = learn_all(parse_training_file(read_file(training_file)),
                                 load_parses(parse_files),
                                 schemas.empty() ? nullptr : &schemas);
      std::string text = save_store(store);
      if (output_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output_file);
        out << text;
        if (!out) throw Error("cannot write " + output_file);
      }
      return 0;
    }
    if (*parse) {
      SchemaSet schemas = load_schemas(schema_file);
      LvpStore store = load_store(read_file(lvp_file));
      std::vector<DepParse> doc = load_parses(parse_files);
      std::vector<std::string> diagnostics;
      resolve_coreference(doc, &diagnostics);
      for (const auto& d : diagnostics) std::cerr << "warning: " << d << "\n";
      Composition c = extract_document(doc, store, schemas);
      for (const auto& w : c.warnings) std::cerr << "warning: " << w << "\n";
      for (const Rule& r : c.rules) std::cout << render(r) << "\n";
      for (const DomainAtom& d : c.domain) std::cout << render(d.to_term()) << ".\n";
      return 0;
    }
    if (*compile) {
      SchemaSet schemas = load_schemas(schema_file);
      LvpStore store = load_store(read_file(lvp_file));
      ParseBank bank = make_bank(bank_files);
      CompileContext ctx{store, schemas, bank};
      int status = 0;
      if (!rules_file.empty()) {
        CompileOptions options;
        options.normalize_connectives = !strict;
        CompiledFile f = compile_file(read_file(rules_file), ctx, options);
        for (const Rule& r : f.rules) std::cout << render(r) << "\n";
        for (const Query& q : f.queries) std::cout << "?- " << render(q.atom) << ".\n";
        for (const auto& e : f.errors) std::cerr << rules_file << ": " << e << "\n";
        if (!f.errors.empty()) status = 1;
      }
      if (!init_term_file.empty()) {
        InitTermFile f = compile_init_term_file(read_file(init_term_file), ctx);
        for (const Rule& r : f.rules) std::cout << render(r) << "\n";
        for (const auto& e : f.errors) std::cerr << init_term_file << ": " << e << "\n";
        if (!f.errors.empty()) status = 1;
      }
      return status;
    }
    if (*solve) {
      Mode mode = parse_mode(mode_name_arg);
      SchemaSet schemas = load_schemas(schema_file);
      Program program = parse_program(read_file(program_file));
      std::vector<Term> queries;
      for (const auto& q : query_texts) queries.push_back(parse_term(q));
      if (!queries_file.empty()) {
        std::string text = read_file(queries_file);
        for (std::string_view line : split_lines(text)) {
          line = trim(line);
          if (line.empty() || line.front() == '%') continue;
          Statement st = parse_statement(line);
          if (const Query* q = std::get_if<Query>(&st)) {
            queries.push_back(q->atom);
          } else {
            throw QueryError("not a query: " + std::string(line));
          }
        }
      }
      GroundProgram gp = ground(program, bounds);
      for (const auto& w : gp.warnings) std::cerr << "warning: " << w << "\n";
      std::vector<AnswerSet> sets = answer_sets(gp, bounds);
      if (queries.empty()) {
        for (std::size_t i = 0; i < sets.size(); ++i) {
          std::cout << "Answer " << (i + 1) << ": " << render(sets[i]) << "\n";
        }
        if (sets.empty()) std::cout << "no answer sets\n";
        return 0;
      }
      for (const Term& q : queries) {
        check_query_frames(q, schemas);
        std::string answer = render(query(sets, q, mode));
        std::cout << (answer.empty() ? "no answers" : answer) << "\n";
      }
      return 0;
    }
    if (*run) {
      RunInputs in;
      in.schema = read_file(schema_file);
      in.lvps = read_file(lvp_file);
      if (!facts_file.empty()) in.facts = read_file(facts_file);
      for (const auto& b : bank_files) in.bank += read_file(b) + "\n";
      if (!rules_file.empty()) in.rules = read_file(rules_file);
      if (!init_term_file.empty()) in.init_term = read_file(init_term_file);
      if (!queries_file.empty()) in.queries = read_file(queries_file);
      in.mode = parse_mode(mode_name_arg);
      in.bounds = bounds;
      RunReport report = run_files(in);
      std::cout << report.text;
      return report.errors == 0 ? 0 : 1;
    }
    if (*repl) {
      Session session(load_schemas(schema_file), load_store(read_file(lvp_file)),
                      make_bank(bank_files), bounds);
      if (mode_name_arg != "brave") session.execute(":mode " + mode_name_arg);
      run_repl(session, std::cin, std::cout, isatty(0) != 0);
      return 0;
    }
    if (*babi) {
      BabiTask task(TaskConfig::load(config_file), load_parses(parse_files), bounds);
      TaskReport report = task.run(parse_babi(read_file(data_file)));
      std::cout << report.render();
      return 0;
    }
  } catch (const UnsafeRuleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
