// Copyright 2026 The dsphere Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsphere/loops.h"

#include <gtest/gtest.h>

#include "dsphere/errors.h"
#include "dsphere/named_graphs.h"

namespace dsphere {
namespace {

TEST(CanonicalLoop, RotationAndReversal) {
  EXPECT_EQ(canonical_loop({3, 1, 2}), (Loop{1, 2, 3}));
  EXPECT_EQ(canonical_loop({2, 1, 3}), (Loop{1, 2, 3}));
  EXPECT_EQ(canonical_loop({5, 0, 4, 0}), (Loop{0, 4, 0, 5}));
  EXPECT_EQ(canonical_loop({7}), (Loop{7}));
}

TEST(ContractLoop, TriangleTakesOneMove) {
  const Graph octa = octahedron();
  const Loop tri{0, 2, 4};
  const auto r = contract_loop(octa, tri);
  ASSERT_EQ(r.verdict, LoopVerdict::contractible);
  EXPECT_EQ(r.moves.size(), 1u);
  EXPECT_EQ(r.moves[0].kind, LoopMoveKind::shortcut);
  EXPECT_TRUE(replay_loop_contraction(octa, tri, r.moves));
}

TEST(ContractLoop, OctahedronEquator) {
  const Graph octa = octahedron();
  const Loop equator{0, 2, 1, 3};
  const auto r = contract_loop(octa, equator);
  ASSERT_EQ(r.verdict, LoopVerdict::contractible);
  EXPECT_TRUE(replay_loop_contraction(octa, equator, r.moves));
}

TEST(ContractLoop, IcosahedronSixCycles) {
  const Graph ico = icosahedron();
  // The boundary of the star of edge (0,1).
  const Loop hexagon{2, 3, 4, 5, 6, 7};
  ASSERT_NO_THROW(validate_loop(ico, hexagon));
  const auto r = contract_loop(ico, hexagon);
  ASSERT_EQ(r.verdict, LoopVerdict::contractible);
  EXPECT_TRUE(replay_loop_contraction(ico, hexagon, r.moves));
}

TEST(ContractLoop, BacktrackingWalkCancels) {
  const Graph c = cycle_graph(6);
  const Loop walk{0, 1, 2, 1};
  const auto r = contract_loop(c, walk);
  ASSERT_EQ(r.verdict, LoopVerdict::contractible);
  EXPECT_EQ(r.moves[0].kind, LoopMoveKind::cancel);
  EXPECT_TRUE(replay_loop_contraction(c, walk, r.moves));
}

TEST(ContractLoop, TrivialLoops) {
  const Graph c = cycle_graph(5);
  EXPECT_EQ(contract_loop(c, {3}).verdict, LoopVerdict::contractible);
  EXPECT_EQ(contract_loop(c, {3, 4}).verdict, LoopVerdict::contractible);
  EXPECT_TRUE(contract_loop(c, {3, 4}).moves.empty());
}

TEST(ContractLoop, CycleGraphLoopIsStuck) {
  // No triangles at all: the loop space under the moves is finite and the
  // search ends without spending the budget.
  const Graph c = cycle_graph(5);
  const auto r = contract_loop(c, {0, 1, 2, 3, 4});
  EXPECT_EQ(r.verdict, LoopVerdict::unknown);
  EXPECT_FALSE(r.budget_exhausted);
}

TEST(ContractLoop, TorusEssentialLoopIsUnknown) {
  LoopOptions options;
  options.state_budget = 100'000;
  const auto r = contract_loop(flat_torus(), flat_torus_essential_loop(), options);
  EXPECT_EQ(r.verdict, LoopVerdict::unknown);
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_GE(r.states, options.state_budget);
}

TEST(ContractLoop, RejectsInvalidLoops) {
  const Graph octa = octahedron();
  EXPECT_THROW(contract_loop(octa, {}), InputError);
  EXPECT_THROW(contract_loop(octa, {0, 1, 2}), InputError);  // 0 and 1 antipodal
  EXPECT_THROW(contract_loop(octa, {0, 9}), InputError);
}

TEST(Replay, RejectsTamperedSequences) {
  const Graph octa = octahedron();
  const Loop equator{0, 2, 1, 3};
  auto moves = contract_loop(octa, equator).moves;
  ASSERT_FALSE(moves.empty());
  auto wrong_kind = moves;
  wrong_kind[0].kind = wrong_kind[0].kind == LoopMoveKind::expand ? LoopMoveKind::shortcut
                                                                  : LoopMoveKind::expand;
  EXPECT_FALSE(replay_loop_contraction(octa, equator, wrong_kind));
  auto short_seq = moves;
  short_seq.pop_back();
  EXPECT_FALSE(replay_loop_contraction(octa, equator, short_seq));
  auto wrong_after = moves;
  wrong_after[0].after = equator;
  EXPECT_FALSE(replay_loop_contraction(octa, equator, wrong_after));
}

}  // namespace
}  // namespace dsphere
