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

#include "oracles.h"

#include <algorithm>

namespace framelog::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string pick_name(Rng& rng, bool upper) {
  static const char* const kStems[] = {"a", "mary", "place", "x1", "fever_2", "b_c", "watch"};
  std::string s = kStems[uniform(rng, 0, 6)];
  if (upper) s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string random_text(Rng& rng) {
  static const std::string kAlphabet = "abcXYZ 09_,.()[]\"\\'-";
  std::string s;
  int n = uniform(rng, 0, 6);
  for (int i = 0; i < n; ++i) s += kAlphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(kAlphabet.size()) - 1))];
  return s;
}

}  // namespace

Term random_term(Rng& rng, int depth) {
  int pick = uniform(rng, 0, depth > 0 ? 6 : 3);
  switch (pick) {
    case 0:
      return Term::atom(pick_name(rng, false));
    case 1:
      return Term::string(random_text(rng));
    case 2:
      return Term::integer(uniform(rng, -50, 50));
    case 3:
      return Term::variable(pick_name(rng, true));
    case 4:
    case 5: {
      std::vector<Term> args;
      int n = uniform(rng, 1, 3);
      for (int i = 0; i < n; ++i) args.push_back(random_term(rng, depth - 1));
      if (pick == 4) return Term::compound(pick_name(rng, false), std::move(args));
      if (uniform(rng, 0, 3) == 0) args.clear();
      return Term::list(std::move(args));
    }
    default: {
      int lo = uniform(rng, 0, 5);
      return Term::compound(pick_name(rng, false), {Term::range(lo, lo + uniform(rng, 0, 4))});
    }
  }
}

Rule random_rule(Rng& rng) {
  auto atom = [&] {
    Term t = random_term(rng, 2);
    while (t.kind() != TermKind::kCompound && t.kind() != TermKind::kAtom) t = random_term(rng, 2);
    return t;
  };
  Rule r;
  int heads = uniform(rng, 0, 3);
  for (int i = 0; i < heads; ++i) r.head.push_back(atom());
  int body = uniform(rng, heads == 0 ? 1 : 0, 3);
  for (int i = 0; i < body; ++i) {
    switch (uniform(rng, 0, 2)) {
      case 0:
        r.body.push_back(Literal::positive(atom()));
        break;
      case 1:
        r.body.push_back(Literal::naf(atom()));
        break;
      default:
        r.body.push_back(Literal::compare(uniform(rng, 0, 1) ? CompareOp::kLess : CompareOp::kNotEqual,
                                          Term::variable(pick_name(rng, true)),
                                          uniform(rng, 0, 1) ? Term::integer(uniform(rng, 0, 9))
                                                             : Term::variable(pick_name(rng, true))));
    }
  }
  return r;
}

GroundProgram random_ground_program(Rng& rng, const RandomProgramShape& shape) {
  GroundProgram gp;
  int atoms = uniform(rng, 1, shape.max_atoms);
  for (int i = 0; i < atoms; ++i) gp.intern(Term::compound("p", {Term::integer(i)}));
  int rules = uniform(rng, 0, shape.max_rules);
  auto some = [&](int lo, int hi) {
    std::vector<int> out;
    int n = uniform(rng, lo, hi);
    for (int i = 0; i < n; ++i) {
      int a = uniform(rng, 0, atoms - 1);
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int i = 0; i < rules; ++i) {
    GroundRule r;
    r.head = some(uniform(rng, 0, 5) == 0 ? 0 : 1, shape.max_head);
    r.pos = some(0, shape.max_body);
    r.neg = some(0, shape.max_body - 1);
    if (r.head.empty() && r.pos.empty() && r.neg.empty()) continue;
    gp.add_rule(std::move(r));
  }
  return gp;
}

std::set<Term> brave_atoms(const std::vector<AnswerSet>& sets) {
  std::set<Term> out;
  for (const AnswerSet& s : sets) out.insert(s.atoms.begin(), s.atoms.end());
  return out;
}

std::set<Term> cautious_atoms(const std::vector<AnswerSet>& sets) {
  if (sets.empty()) return {};
  std::set<Term> out(sets.front().atoms.begin(), sets.front().atoms.end());
  for (const AnswerSet& s : sets) {
    std::set<Term> here(s.atoms.begin(), s.atoms.end());
    std::set<Term> kept;
    std::set_intersection(out.begin(), out.end(), here.begin(), here.end(),
                          std::inserter(kept, kept.begin()));
    out = std::move(kept);
  }
  return out;
}

std::map<std::pair<std::string, int>, std::string> simulate_locations(
    const std::vector<Move>& moves, int max_time) {
  std::map<std::pair<std::string, int>, std::string> out;
  std::map<std::string, std::string> where;
  for (int t = 1; t <= max_time; ++t) {
    for (const auto& [person, place] : where) out[{person, t}] = place;
    for (const Move& m : moves) {
      if (m.time == t) where[m.person] = m.place;
    }
  }
  return out;
}

}  // namespace framelog::testing
