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

#include "framelog/solver.h"

#include <algorithm>
#include <deque>
#include <set>

namespace framelog {

namespace {

constexpr std::int8_t kUnknown = -1;
constexpr std::int8_t kFalse = 0;
constexpr std::int8_t kTrue = 1;

// Clause-level DPLL used by the minimality check. Literals are encoded as
// 2*var (positive) and 2*var+1 (negative).
class MiniSat {
 public:
  explicit MiniSat(int vars) : val_(static_cast<std::size_t>(vars), kUnknown) {}
  void add(std::vector<int> clause) { clauses_.push_back(std::move(clause)); }
  bool solve() { return search(); }

 private:
  std::int8_t lit_value(int lit) const {
    std::int8_t v = val_[static_cast<std::size_t>(lit / 2)];
    if (v == kUnknown) return kUnknown;
    return (lit % 2 == 0) == (v == kTrue) ? kTrue : kFalse;
  }

  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses_) {
        int unknown = -1;
        int unknowns = 0;
        bool sat = false;
        for (int lit : c) {
          std::int8_t v = lit_value(lit);
          if (v == kTrue) {
            sat = true;
            break;
          }
          if (v == kUnknown) {
            ++unknowns;
            unknown = lit;
          }
        }
        if (sat) continue;
        if (unknowns == 0) return false;
        if (unknowns == 1) {
          val_[static_cast<std::size_t>(unknown / 2)] = unknown % 2 == 0 ? kTrue : kFalse;
          trail.push_back(unknown / 2);
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    bool ok = propagate(trail);
    if (ok) {
      auto it = std::find(val_.begin(), val_.end(), kUnknown);
      if (it == val_.end()) return true;
      std::size_t var = static_cast<std::size_t>(it - val_.begin());
      for (std::int8_t choice : {kFalse, kTrue}) {
        val_[var] = choice;
        if (search()) return true;
      }
      val_[var] = kUnknown;
    }
    for (int v : trail) val_[static_cast<std::size_t>(v)] = kUnknown;
    return false;
  }

  std::vector<std::vector<int>> clauses_;
  std::vector<std::int8_t> val_;
};

class Solver {
 public:
  Solver(const GroundProgram& gp, const Bounds& bounds)
      : gp_(gp), n_(gp.atom_count()), deadline_(bounds.time_budget) {
    if (n_ > bounds.max_atoms) {
      throw ResourceError("atom universe of " + std::to_string(n_) +
                          " atoms exceeds the bound of " +
                          std::to_string(bounds.max_atoms));
    }
    head_of_.resize(n_);
    for (std::size_t i = 0; i < gp.rules().size(); ++i) {
      const GroundRule& r = gp.rules()[i];
      if (r.head.size() > 1) disjunctive_ = true;
      for (int h : r.head) head_of_[static_cast<std::size_t>(h)].push_back(i);
    }
  }

  std::vector<AnswerSet> run() {
    if (!bounds()) return {};
    val_.assign(n_, kFalse);
    for (std::size_t a = 0; a < n_; ++a) {
      if (known_[a]) {
        val_[a] = kTrue;
      } else if (possible_[a]) {
        val_[a] = kUnknown;
      }
    }
    search();
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    std::vector<AnswerSet> out;
    for (const auto& ids : found_) {
      AnswerSet s;
      for (int id : ids) s.atoms.push_back(gp_.atom(id));
      std::sort(s.atoms.begin(), s.atoms.end());
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const std::vector<GroundRule>& rules() const { return gp_.rules(); }

  // Least fixpoint over rules accepted by `fires`. `fires` returns the head
  // atoms to derive once the positive body holds.
  template <typename Fires>
  std::vector<bool> lfp(Fires fires) const {
    std::vector<bool> in(n_, false);
    std::vector<std::size_t> missing(rules().size());
    std::vector<std::vector<std::size_t>> watch(n_);
    std::deque<int> queue;
    auto derive = [&](std::size_t ri) {
      for (int h : fires(rules()[ri])) {
        if (!in[static_cast<std::size_t>(h)]) {
          in[static_cast<std::size_t>(h)] = true;
          queue.push_back(h);
        }
      }
    };
    for (std::size_t i = 0; i < rules().size(); ++i) {
      missing[i] = rules()[i].pos.size();
      for (int p : rules()[i].pos) watch[static_cast<std::size_t>(p)].push_back(i);
      if (missing[i] == 0) derive(i);
    }
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (std::size_t ri : watch[static_cast<std::size_t>(a)]) {
        if (--missing[ri] == 0) derive(ri);
      }
    }
    return in;
  }

  // Alternating fixpoint: known_ holds atoms true in every stable model,
  // possible_ a superset of every stable model. False when some constraint
  // is violated by the known atoms alone.
  bool bounds() {
    known_.assign(n_, false);
    possible_ = lfp([&](const GroundRule& r) { return r.head; });
    for (;;) {
      bool inconsistent = false;
      auto k = lfp([&](const GroundRule& r) {
        std::vector<int> out;
        for (int a : r.neg) {
          if (possible_[static_cast<std::size_t>(a)]) return out;
        }
        for (int h : r.head) {
          if (possible_[static_cast<std::size_t>(h)]) out.push_back(h);
        }
        if (out.empty()) inconsistent = true;
        if (out.size() > 1) out.clear();
        return out;
      });
      if (inconsistent) return false;
      auto u = lfp([&](const GroundRule& r) {
        for (int a : r.neg) {
          if (k[static_cast<std::size_t>(a)]) return std::vector<int>{};
        }
        return r.head;
      });
      if (k == known_ && u == possible_) break;
      known_ = std::move(k);
      possible_ = std::move(u);
    }
    return true;
  }

  std::int8_t value(int a) const { return val_[static_cast<std::size_t>(a)]; }

  void assign(int a, std::int8_t v, std::vector<int>& trail) {
    val_[static_cast<std::size_t>(a)] = v;
    trail.push_back(a);
  }

  bool body_false(const GroundRule& r) const {
    for (int p : r.pos) {
      if (value(p) == kFalse) return true;
    }
    for (int q : r.neg) {
      if (value(q) == kTrue) return true;
    }
    return false;
  }

  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const GroundRule& r : rules()) {
        if (body_false(r)) continue;
        int head_unknown = -1;
        int head_unknowns = 0;
        bool head_true = false;
        for (int h : r.head) {
          if (value(h) == kTrue) head_true = true;
          if (value(h) == kUnknown) {
            ++head_unknowns;
            head_unknown = h;
          }
        }
        if (head_true) continue;
        int body_unknown = -1;
        bool body_unknown_neg = false;
        int body_unknowns = 0;
        for (int p : r.pos) {
          if (value(p) == kUnknown) {
            ++body_unknowns;
            body_unknown = p;
            body_unknown_neg = false;
          }
        }
        for (int q : r.neg) {
          if (value(q) == kUnknown) {
            ++body_unknowns;
            body_unknown = q;
            body_unknown_neg = true;
          }
        }
        if (body_unknowns == 0) {
          if (head_unknowns == 0) return false;
          if (head_unknowns == 1) {
            assign(head_unknown, kTrue, trail);
            changed = true;
          }
        } else if (body_unknowns == 1 && head_unknowns == 0) {
          assign(body_unknown, body_unknown_neg ? kTrue : kFalse, trail);
          changed = true;
        }
      }
      for (std::size_t a = 0; a < n_; ++a) {
        if (val_[a] == kFalse) continue;
        bool supported = false;
        for (std::size_t ri : head_of_[a]) {
          const GroundRule& r = rules()[ri];
          if (body_false(r)) continue;
          bool other_true = false;
          for (int h : r.head) {
            if (static_cast<std::size_t>(h) != a && value(h) == kTrue) other_true = true;
          }
          if (!other_true) {
            supported = true;
            break;
          }
        }
        if (supported) continue;
        if (val_[a] == kTrue) return false;
        assign(static_cast<int>(a), kFalse, trail);
        changed = true;
      }
    }
    return true;
  }

  void search() {
    if (++steps_ % 256 == 0) deadline_.check("answer set search");
    std::vector<int> trail;
    if (propagate(trail)) {
      auto it = std::find(val_.begin(), val_.end(), kUnknown);
      if (it == val_.end()) {
        check_candidate();
      } else {
        int a = static_cast<int>(it - val_.begin());
        for (std::int8_t choice : {kTrue, kFalse}) {
          val_[static_cast<std::size_t>(a)] = choice;
          search();
        }
        val_[static_cast<std::size_t>(a)] = kUnknown;
      }
    }
    for (int a : trail) val_[static_cast<std::size_t>(a)] = kUnknown;
  }

  bool is_model() const {
    for (const GroundRule& r : rules()) {
      if (body_false(r)) continue;
      bool head_true = false;
      for (int h : r.head) head_true = head_true || value(h) == kTrue;
      if (!head_true) return false;
    }
    return true;
  }

  void check_candidate() {
    if (!is_model()) return;
    bool stable = disjunctive_ ? minimal_disjunctive() : reduct_least_model_matches();
    if (!stable) return;
    std::vector<int> ids;
    for (std::size_t a = 0; a < n_; ++a) {
      if (val_[a] == kTrue) ids.push_back(static_cast<int>(a));
    }
    found_.push_back(std::move(ids));
  }

  bool reduct_least_model_matches() const {
    auto least = lfp([&](const GroundRule& r) {
      for (int q : r.neg) {
        if (value(q) == kTrue) return std::vector<int>{};
      }
      return r.head;
    });
    for (std::size_t a = 0; a < n_; ++a) {
      if (least[a] != (val_[a] == kTrue)) return false;
    }
    return true;
  }

  // True iff no proper subset of the candidate is a model of its reduct.
  bool minimal_disjunctive() const {
    std::vector<int> var(n_, -1);
    int vars = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      if (val_[a] == kTrue && !known_[a]) var[a] = vars++;
    }
    if (vars == 0) return true;
    MiniSat sat(vars);
    for (const GroundRule& r : rules()) {
      bool dropped = false;
      for (int q : r.neg) dropped = dropped || value(q) == kTrue;
      for (int p : r.pos) dropped = dropped || value(p) != kTrue;
      if (dropped) continue;
      std::vector<int> clause;
      bool satisfied = false;
      for (int h : r.head) {
        if (value(h) != kTrue) continue;
        if (known_[static_cast<std::size_t>(h)]) satisfied = true;
        else clause.push_back(2 * var[static_cast<std::size_t>(h)]);
      }
      if (satisfied) continue;
      for (int p : r.pos) {
        if (!known_[static_cast<std::size_t>(p)]) {
          clause.push_back(2 * var[static_cast<std::size_t>(p)] + 1);
        }
      }
      sat.add(std::move(clause));
    }
    std::vector<int> smaller;
    for (int v = 0; v < vars; ++v) smaller.push_back(2 * v + 1);
    sat.add(std::move(smaller));
    return !sat.solve();
  }

  const GroundProgram& gp_;
  std::size_t n_;
  Deadline deadline_;
  bool disjunctive_ = false;
  std::vector<std::vector<std::size_t>> head_of_;
  std::vector<bool> known_;
  std::vector<bool> possible_;
  std::vector<std::int8_t> val_;
  std::vector<std::vector<int>> found_;
  std::size_t steps_ = 0;
};

}  // namespace

bool AnswerSet::contains(const Term& atom) const {
  return std::binary_search(atoms.begin(), atoms.end(), atom);
}

std::string render(const AnswerSet& answer_set) {
  std::string out = "{";
  for (std::size_t i = 0; i < answer_set.atoms.size(); ++i) {
    if (i) out += ", ";
    out += render(answer_set.atoms[i]);
  }
  return out + "}";
}

std::vector<AnswerSet> answer_sets(const GroundProgram& program, const Bounds& bounds) {
  return Solver(program, bounds).run();
}

std::string_view mode_name(Mode mode) {
  return mode == Mode::kBrave ? "brave" : "cautious";
}

Mode parse_mode(std::string_view name) {
  if (name == "brave") return Mode::kBrave;
  if (name == "cautious") return Mode::kCautious;
  throw Error("unknown mode \"" + std::string(name) + "\" (expected brave or cautious)");
}

bool query_match(const Term& pattern, const Term& atom,
                 std::unordered_map<std::string, Term>& subst) {
  if (pattern.is_variable()) {
    auto [it, inserted] = subst.try_emplace(pattern.name(), atom);
    return inserted || it->second == atom;
  }
  if (pattern.is_compound("frame", 2) && atom.is_compound("frame", 2) &&
      pattern.args()[1].kind() == TermKind::kList &&
      atom.args()[1].kind() == TermKind::kList) {
    if (pattern.args()[0] != atom.args()[0]) return false;
    for (const Term& prl : pattern.args()[1].args()) {
      if (!prl.is_compound("rl", 2)) return false;
      const Term* filler = nullptr;
      for (const Term& arl : atom.args()[1].args()) {
        if (arl.is_compound("rl", 2) && arl.args()[0] == prl.args()[0]) {
          filler = &arl.args()[1];
          break;
        }
      }
      if (!filler || !query_match(prl.args()[1], *filler, subst)) return false;
    }
    return true;
  }
  if (pattern.kind() != atom.kind()) return false;
  if (pattern.kind() == TermKind::kCompound || pattern.kind() == TermKind::kList) {
    if (pattern.name() != atom.name() || pattern.args().size() != atom.args().size()) {
      return false;
    }
    for (std::size_t i = 0; i < pattern.args().size(); ++i) {
      if (!query_match(pattern.args()[i], atom.args()[i], subst)) return false;
    }
    return true;
  }
  return pattern == atom;
}

std::string render(const QueryResult& result) {
  if (result.variables.empty()) return result.satisfied() ? "yes" : "no";
  std::string out;
  for (const auto& b : result.bindings) {
    out += "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ",";
      out += result.variables[i] + "=" + render(b[i]);
    }
    out += "}\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

QueryResult query(const std::vector<AnswerSet>& answer_sets, const Term& q, Mode mode) {
  QueryResult result;
  result.mode = mode;
  result.answer_set_count = answer_sets.size();
  q.collect_variables(result.variables);
  std::set<std::vector<Term>> acc;
  bool first = true;
  for (const AnswerSet& s : answer_sets) {
    std::set<std::vector<Term>> here;
    for (const Term& atom : s.atoms) {
      std::unordered_map<std::string, Term> subst;
      if (!query_match(q, atom, subst)) continue;
      std::vector<Term> b;
      for (const auto& v : result.variables) b.push_back(subst.at(v));
      here.insert(std::move(b));
    }
    if (mode == Mode::kBrave || first) {
      acc.insert(here.begin(), here.end());
    } else {
      std::set<std::vector<Term>> both;
      std::set_intersection(acc.begin(), acc.end(), here.begin(), here.end(),
                            std::inserter(both, both.begin()));
      acc = std::move(both);
    }
    first = false;
  }
  result.bindings.assign(acc.begin(), acc.end());
  return result;
}

void check_query_frames(const Term& q, const SchemaSet& schemas) {
  if (schemas.empty()) return;
  if (q.is_compound("frame", 2) && q.args()[0].kind() == TermKind::kString &&
      !schemas.is_known_frame(q.args()[0].name())) {
    throw QueryError("unknown frame \"" + q.args()[0].name() + "\" in query");
  }
  for (const Term& a : q.args()) check_query_frames(a, schemas);
}

QueryResult solve_query(const Program& program, const Term& q, Mode mode,
                        const Bounds& bounds) {
  return query(answer_sets(ground(program, bounds), bounds), q, mode);
}

}  // namespace framelog
