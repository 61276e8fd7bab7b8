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

#ifndef FRAMELOG_ORACLE_H_
#define FRAMELOG_ORACLE_H_

#include <vector>

#include "framelog/ground.h"
#include "framelog/solver.h"

namespace framelog {

inline constexpr std::size_t kOracleMaxAtoms = 20;

// Brute-force stable models straight from the definition: every
// interpretation over the open atoms is tested for being a model of its
// reduct with no smaller model. Facts are fixed true and atoms that head no
// rule fixed false. Throws Error when more than kOracleMaxAtoms atoms stay
// open.
std::vector<AnswerSet> oracle_answer_sets(const GroundProgram& program);

}  // namespace framelog

#endif  // FRAMELOG_ORACLE_H_
