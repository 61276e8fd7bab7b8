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

#include "framelog/oracle.h"

#include <algorithm>
#include <cstdint>

namespace framelog {

namespace {

using Mask = std::uint32_t;

struct MaskRule {
  Mask head = 0, pos = 0, neg = 0;
  bool fixed_body_false = false;  // mentions an atom that can never be true
  bool fixed_head_true = false;
};

bool satisfies_reduct(const std::vector<MaskRule>& rules, Mask reduct_of, Mask m) {
  for (const MaskRule& r : rules) {
    if (r.fixed_body_false || r.fixed_head_true) continue;
    if (r.neg & reduct_of) continue;
    if ((r.pos & m) != r.pos) continue;
    if ((r.head & m) == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<AnswerSet> oracle_answer_sets(const GroundProgram& program) {
  const std::size_t n = program.atom_count();
  std::vector<bool> fact(n, false), in_head(n, false);
  for (const GroundRule& r : program.rules()) {
    if (r.head.size() == 1 && r.pos.empty() && r.neg.empty()) {
      fact[static_cast<std::size_t>(r.head[0])] = true;
    }
    for (int h : r.head) in_head[static_cast<std::size_t>(h)] = true;
  }
  std::vector<int> open;
  std::vector<int> bit(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (in_head[a] && !fact[a]) {
      bit[a] = static_cast<int>(open.size());
      open.push_back(static_cast<int>(a));
    }
  }
  if (open.size() > kOracleMaxAtoms) {
    throw Error("oracle refuses " + std::to_string(open.size()) +
                " open atoms (limit " + std::to_string(kOracleMaxAtoms) + ")");
  }
  std::vector<MaskRule> rules;
  for (const GroundRule& r : program.rules()) {
    MaskRule m;
    for (int h : r.head) {
      std::size_t a = static_cast<std::size_t>(h);
      if (fact[a]) m.fixed_head_true = true;
      else if (bit[a] >= 0) m.head |= Mask{1} << bit[a];
    }
    for (int p : r.pos) {
      std::size_t a = static_cast<std::size_t>(p);
      if (fact[a]) continue;
      if (bit[a] < 0) m.fixed_body_false = true;
      else m.pos |= Mask{1} << bit[a];
    }
    for (int q : r.neg) {
      std::size_t a = static_cast<std::size_t>(q);
      if (fact[a]) m.fixed_body_false = true;
      else if (bit[a] >= 0) m.neg |= Mask{1} << bit[a];
    }
    rules.push_back(m);
  }
  std::vector<AnswerSet> out;
  const Mask limit = Mask{1} << open.size();
  for (Mask m = 0; m < limit; ++m) {
    if (!satisfies_reduct(rules, m, m)) continue;
    bool minimal = true;
    // Proper subsets of m, largest first.
    for (Mask s = (m - 1) & m;; s = (s - 1) & m) {
      if (s != m && satisfies_reduct(rules, m, s)) {
        minimal = false;
        break;
      }
      if (s == 0) break;
    }
    if (m == 0) minimal = true;
    if (!minimal) continue;
    AnswerSet set;
    for (std::size_t a = 0; a < n; ++a) {
      if (fact[a] || (bit[a] >= 0 && (m >> bit[a]) & 1)) set.atoms.push_back(program.atom(static_cast<int>(a)));
    }
    std::sort(set.atoms.begin(), set.atoms.end());
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace framelog
