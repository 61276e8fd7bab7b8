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

#include "framelog/ground.h"

#include <cstdlib>
#include <functional>
#include <optional>
#include <unordered_set>

namespace framelog {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_ids(const std::vector<int>& v, std::size_t seed) {
  for (int x : v) seed = combine(seed, std::hash<int>{}(x));
  return seed;
}

std::size_t rule_hash(const GroundRule& r) {
  std::size_t h = hash_ids(r.head, 1);
  h = hash_ids(r.pos, combine(h, 2));
  return hash_ids(r.neg, combine(h, 3));
}

std::size_t read_env(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') {
    throw Error(std::string("environment variable ") + name +
                " is not a non-negative integer: " + v);
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

Bounds Bounds::from_environment() {
  Bounds b;
  b.max_ground_rules = read_env("FRAMELOG_MAX_GROUND_RULES", b.max_ground_rules);
  b.max_atoms = read_env("FRAMELOG_MAX_ATOMS", b.max_atoms);
  b.time_budget = std::chrono::milliseconds(
      read_env("FRAMELOG_TIME_BUDGET_MS", static_cast<std::size_t>(b.time_budget.count())));
  return b;
}

void Deadline::check(const char* stage) const {
  if (std::chrono::steady_clock::now() > end_) {
    throw ResourceError(std::string("time budget exhausted during ") + stage);
  }
}

int GroundProgram::intern(const Term& atom) {
  auto [it, inserted] = index_.try_emplace(atom, static_cast<int>(atoms_.size()));
  if (inserted) atoms_.push_back(atom);
  return it->second;
}

int GroundProgram::find(const Term& atom) const {
  auto it = index_.find(atom);
  return it == index_.end() ? -1 : it->second;
}

bool GroundProgram::add_rule(GroundRule rule) {
  std::size_t h = rule_hash(rule);
  auto& bucket = rule_index_[h];
  for (std::size_t i : bucket) {
    if (rules_[i] == rule) return false;
  }
  bucket.push_back(rules_.size());
  rules_.push_back(std::move(rule));
  return true;
}

Program GroundProgram::to_program() const {
  Program p;
  for (const auto& r : rules_) {
    Rule out;
    for (int h : r.head) out.head.push_back(atom(h));
    for (int a : r.pos) out.body.push_back(Literal::positive(atom(a)));
    for (int a : r.neg) out.body.push_back(Literal::naf(atom(a)));
    p.rules.push_back(std::move(out));
  }
  return p;
}

bool match(const Term& pattern, const Term& term,
           std::unordered_map<std::string, Term>& subst) {
  if (pattern.is_variable()) {
    auto [it, inserted] = subst.try_emplace(pattern.name(), term);
    return inserted || it->second == term;
  }
  if (pattern.kind() != term.kind()) return false;
  switch (pattern.kind()) {
    case TermKind::kCompound:
      if (pattern.name() != term.name()) return false;
      [[fallthrough]];
    case TermKind::kList: {
      if (pattern.args().size() != term.args().size()) return false;
      for (std::size_t i = 0; i < pattern.args().size(); ++i) {
        if (!match(pattern.args()[i], term.args()[i], subst)) return false;
      }
      return true;
    }
    default:
      return pattern == term;
  }
}

Term substitute(const Term& t, const std::unordered_map<std::string, Term>& subst) {
  switch (t.kind()) {
    case TermKind::kVariable: {
      auto it = subst.find(t.name());
      return it == subst.end() ? t : it->second;
    }
    case TermKind::kCompound:
    case TermKind::kList: {
      if (t.is_ground()) return t;
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(substitute(a, subst));
      return t.kind() == TermKind::kList ? Term::list(std::move(args))
                                         : Term::compound(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

namespace {

std::size_t functor_key(const Term& t) {
  std::size_t h = std::hash<std::string>{}(t.name());
  return combine(h, t.kind() == TermKind::kCompound ? t.args().size() : 0);
}

// Secondary key over the functor and a ground first argument.
std::optional<std::size_t> first_arg_key(const Term& t) {
  if (t.kind() != TermKind::kCompound || t.args().empty() ||
      !t.args()[0].is_ground()) {
    return std::nullopt;
  }
  return combine(functor_key(t), t.args()[0].hash());
}

struct PendingRule {
  std::vector<int> head;
  std::vector<int> pos;
  std::vector<Term> neg;
  friend bool operator==(const PendingRule&, const PendingRule&) = default;
};

struct PendingHash {
  std::size_t operator()(const PendingRule& r) const {
    std::size_t h = hash_ids(r.pos, hash_ids(r.head, 7));
    for (const Term& t : r.neg) h = combine(h, t.hash());
    return h;
  }
};

bool compare_holds(CompareOp op, const Term& a, const Term& b) {
  if (op == CompareOp::kNotEqual) return a != b;
  if (a.kind() == TermKind::kInteger && b.kind() == TermKind::kInteger) {
    return a.value() < b.value();
  }
  return a < b;
}

class Grounder {
 public:
  explicit Grounder(const Bounds& bounds) : bounds_(bounds), deadline_(bounds.time_budget) {}

  GroundProgram run(const Program& program) {
    std::vector<const Rule*> rules;
    for (const Rule& r : program.rules) {
      auto unsafe = unsafe_variables(r);
      if (!unsafe.empty()) {
        throw GroundError("cannot ground unsafe rule " + render(r) +
                          " (variable " + unsafe.front() + ")");
      }
      if (r.body.empty() && r.head.size() == 1 &&
          r.head[0].kind() == TermKind::kCompound && r.head[0].args().size() == 1 &&
          r.head[0].args()[0].kind() == TermKind::kRange) {
        const Term& rg = r.head[0].args()[0];
        for (std::int64_t v = rg.value(); v <= rg.hi(); ++v) {
          Term fact = Term::compound(r.head[0].name(), {Term::integer(v)});
          add_atom(fact);
          facts_.push_back(gp_.find(fact));
        }
        continue;
      }
      rules.push_back(&r);
    }
    instances_.assign(rules.size(), 0);
    std::size_t lo = 0;
    bool first = true;
    while (first || lo < gp_.atom_count()) {
      std::size_t hi = gp_.atom_count();
      for (std::size_t i = 0; i < rules.size(); ++i) {
        const Rule& r = *rules[i];
        std::size_t positives = 0;
        for (const auto& l : r.body) positives += l.is_positive() ? 1 : 0;
        if (positives == 0) {
          if (first) instantiate(i, r, -1, lo, hi);
          continue;
        }
        for (std::size_t j = 0; j < r.body.size(); ++j) {
          if (r.body[j].is_positive()) instantiate(i, r, static_cast<int>(j), lo, hi);
        }
      }
      first = false;
      lo = hi;
      if (lo == gp_.atom_count()) break;
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (instances_[i] == 0) warn_if_empty_domain(*rules[i]);
    }
    for (int f : facts_) gp_.add_rule(GroundRule{{f}, {}, {}});
    for (const PendingRule& p : pending_) {
      GroundRule g{p.head, p.pos, {}};
      for (const Term& n : p.neg) {
        int id = gp_.find(n);
        if (id >= 0) g.neg.push_back(id);
      }
      gp_.add_rule(std::move(g));
    }
    return std::move(gp_);
  }

 private:
  void add_atom(const Term& t) {
    std::size_t before = gp_.atom_count();
    int id = gp_.intern(t);
    if (gp_.atom_count() == before) return;
    if (gp_.atom_count() > bounds_.max_atoms) {
      throw ResourceError("atom universe exceeds " + std::to_string(bounds_.max_atoms) +
                          " atoms");
    }
    by_functor_[functor_key(t)].push_back(id);
    if (auto k = first_arg_key(t)) by_first_[*k].push_back(id);
  }

  // Enumerates substitutions where body literal `delta_lit` matches an atom
  // with id in [lo, hi) and the other positive literals atoms below hi.
  void instantiate(std::size_t rule_no, const Rule& r, int delta_lit,
                   std::size_t lo, std::size_t hi) {
    std::vector<int> order;
    if (delta_lit >= 0) order.push_back(delta_lit);
    for (std::size_t j = 0; j < r.body.size(); ++j) {
      if (r.body[j].is_positive() && static_cast<int>(j) != delta_lit) {
        order.push_back(static_cast<int>(j));
      }
    }
    std::unordered_map<std::string, Term> subst;
    std::vector<bool> checked(r.body.size(), false);
    join(rule_no, r, order, 0, delta_lit, lo, hi, subst, checked);
  }

  bool comparisons_ok(const Rule& r, std::unordered_map<std::string, Term>& subst,
                      std::vector<bool>& checked, std::vector<std::size_t>& newly) {
    for (std::size_t j = 0; j < r.body.size(); ++j) {
      const Literal& l = r.body[j];
      if (!l.is_compare() || checked[j]) continue;
      Term a = substitute(l.lhs, subst);
      Term b = substitute(l.rhs, subst);
      if (!a.is_ground() || !b.is_ground()) continue;
      checked[j] = true;
      newly.push_back(j);
      if (!compare_holds(l.op, a, b)) return false;
    }
    return true;
  }

  void join(std::size_t rule_no, const Rule& r, const std::vector<int>& order,
            std::size_t k, int delta_lit, std::size_t lo, std::size_t hi,
            std::unordered_map<std::string, Term>& subst, std::vector<bool>& checked) {
    if (++steps_ % 4096 == 0) deadline_.check("grounding");
    std::vector<std::size_t> newly;
    bool ok = comparisons_ok(r, subst, checked, newly);
    if (ok && k == order.size()) {
      emit(rule_no, r, subst);
    } else if (ok) {
      int li = order[k];
      Term pat = substitute(r.body[static_cast<std::size_t>(li)].atom, subst);
      const std::vector<int>* bucket = nullptr;
      std::size_t key;
      auto fk = first_arg_key(pat);
      if (fk) {
        key = *fk;
        auto it = by_first_.find(key);
        bucket = it == by_first_.end() ? nullptr : &it->second;
      } else {
        key = functor_key(pat);
        auto it = by_functor_.find(key);
        bucket = it == by_functor_.end() ? nullptr : &it->second;
      }
      std::size_t from = li == delta_lit ? lo : 0;
      for (std::size_t i = 0; bucket && i < bucket->size(); ++i) {
        std::size_t id = static_cast<std::size_t>((*bucket)[i]);
        if (id >= hi) break;
        if (id < from) continue;
        std::unordered_map<std::string, Term> next = subst;
        if (!match(pat, gp_.atom(static_cast<int>(id)), next)) continue;
        join(rule_no, r, order, k + 1, delta_lit, lo, hi, next, checked);
        auto it = fk ? by_first_.find(key) : by_functor_.find(key);
        bucket = &it->second;
      }
    }
    for (std::size_t j : newly) checked[j] = false;
  }

  void emit(std::size_t rule_no, const Rule& r,
            const std::unordered_map<std::string, Term>& subst) {
    PendingRule p;
    for (const Literal& l : r.body) {
      if (l.is_positive()) {
        p.pos.push_back(gp_.find(substitute(l.atom, subst)));
      } else if (l.is_naf()) {
        p.neg.push_back(substitute(l.atom, subst));
      }
    }
    std::vector<Term> heads;
    for (const Term& h : r.head) heads.push_back(substitute(h, subst));
    for (const Term& h : heads) add_atom(h);
    for (const Term& h : heads) p.head.push_back(gp_.find(h));
    if (pending_set_.insert(p).second) {
      pending_.push_back(std::move(p));
      ++instances_[rule_no];
      if (pending_.size() > bounds_.max_ground_rules) {
        throw ResourceError("ground program exceeds " +
                            std::to_string(bounds_.max_ground_rules) + " rules");
      }
    }
  }

  void warn_if_empty_domain(const Rule& r) {
    for (const Literal& l : r.body) {
      if (!l.is_positive() || l.atom.kind() != TermKind::kCompound ||
          l.atom.args().size() != 1) {
        continue;
      }
      if (!by_functor_.contains(functor_key(l.atom))) {
        gp_.warnings.push_back("rule dropped, empty domain " + l.atom.name() +
                               "/1: " + render(r));
        return;
      }
    }
  }

  Bounds bounds_;
  Deadline deadline_;
  GroundProgram gp_;
  std::unordered_map<std::size_t, std::vector<int>> by_functor_;
  std::unordered_map<std::size_t, std::vector<int>> by_first_;
  std::vector<PendingRule> pending_;
  std::unordered_set<PendingRule, PendingHash> pending_set_;
  std::vector<std::size_t> instances_;
  std::vector<int> facts_;
  std::size_t steps_ = 0;
};

}  // namespace

GroundProgram ground(const Program& program, const Bounds& bounds) {
  return Grounder(bounds).run(program);
}

}  // namespace framelog
