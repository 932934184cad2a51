// Copyright 2026 The cssp-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "cssp/errors.hpp"
#include "cssp/verifier.hpp"

namespace cssp {
namespace {

using label::Edge;
using label::VertexCopy;

TEST(VerifyTheorem, SmallCorpusFullMode) {
  struct Case {
    Graph g;
    const char* name;
    bool colorable;
  };
  for (const auto& c : {Case{complete_graph(3), "k3", true},
                        Case{complete_graph(4), "k4", false},
                        Case{cycle_graph(5), "c5", true}}) {
    const auto rep = verify_theorem(c.g, c.name, VerifyMode::kFull);
    EXPECT_TRUE(rep.passed()) << c.name;
    EXPECT_EQ(rep.colorable, c.colorable) << c.name;
    EXPECT_EQ(rep.decision, c.colorable) << c.name;
  }
}

TEST(VerifyTheorem, StructuredMode) {
  for (const auto& g : {complete_graph(2), complete_graph(3), complete_graph(4),
                        path_graph(3), cycle_graph(5), cycle_graph(7)}) {
    EXPECT_TRUE(verify_theorem(g, "g", VerifyMode::kStructured).passed());
  }
}

TEST(VerifyTheorem, FullModeRespectsCap) {
  EXPECT_THROW(verify_theorem(complete_graph(4), "k4", VerifyMode::kFull, 100),
               CombinatorialBlowup);
}

TEST(UncoveredVertex, Examples) {
  const auto inst = build_instance(complete_graph(3));
  const auto rec = check_uncovered_vertex(
      inst, "k3", {{VertexCopy{1, 1}, VertexCopy{1, 2}, VertexCopy{2, 1}}});
  EXPECT_TRUE(rec.pass);
  EXPECT_GE(rec.lhs, 3);
  EXPECT_THROW(check_uncovered_vertex(
                   inst, "k3",
                   {{VertexCopy{1, 1}, VertexCopy{2, 1}, VertexCopy{3, 1}}}),
               HypothesisMismatch);
  EXPECT_THROW(check_uncovered_vertex(
                   inst, "k3", {{VertexCopy{1, 1}, VertexCopy{2, 1}, Edge{1, 2}}}),
               HypothesisMismatch);
}

TEST(UncoveredVertex, RandomFourVertexGraph) {
  const auto inst = build_instance(random_graph(4, 0.5, 7));
  const auto rec = check_uncovered_vertex(
      inst, "r4",
      {{VertexCopy{1, 1}, VertexCopy{2, 1}, VertexCopy{3, 2}, VertexCopy{3, 3}}});
  EXPECT_TRUE(rec.pass);
  EXPECT_GE(rec.lhs, 3);
}

TEST(EdgeColumns, Exhaustive) {
  for (const auto& g : {complete_graph(2), complete_graph(3)}) {
    const auto rec = check_edge_columns(build_instance(g), "g");
    EXPECT_TRUE(rec.pass);
  }
  const auto rec = check_edge_columns(build_instance(complete_graph(3)), "k3");
  EXPECT_EQ(rec.witness, "136 selections");
}

TEST(EdgeColumns, SingleSelection) {
  const auto inst = build_instance(complete_graph(3));
  EXPECT_TRUE(check_edge_selection(inst, "k3",
                                   {{Edge{1, 2}, Edge{1, 3}, Edge{2, 3}}})
                  .pass);
  EXPECT_TRUE(check_edge_selection(
                  inst, "k3", {{VertexCopy{1, 1}, VertexCopy{2, 2}, Edge{1, 2}}})
                  .pass);
  EXPECT_THROW(check_edge_selection(
                   inst, "k3",
                   {{VertexCopy{1, 1}, VertexCopy{2, 2}, VertexCopy{3, 3}}}),
               HypothesisMismatch);
}

TEST(Witness, Examples) {
  EXPECT_TRUE(
      check_witness(build_instance(complete_graph(3)), "k3", {{1, 2, 3}}).pass);
  const auto c5 = cycle_graph(5);
  EXPECT_TRUE(
      check_witness(build_instance(c5), "c5", *three_color_backtracking(c5))
          .pass);
  EXPECT_TRUE(check_witness(build_instance(path_graph(3)), "p3", {{1, 2, 1}}).pass);
  EXPECT_THROW(check_witness(build_instance(complete_graph(3)), "k3", {{1, 1, 2}}),
               NotAColoring);
}

TEST(NonColoringBound, Triangle) {
  const auto inst = build_instance(complete_graph(3));
  EXPECT_TRUE(check_non_coloring_bound(inst, "k3", {{1, 1, 1}}).pass);
  EXPECT_TRUE(check_non_coloring_bound(inst, "k3", {{1, 1, 2}}).pass);
  int non_colorings = 0;
  for (const auto& psi : all_structured_selections(3)) {
    if (is_three_coloring(inst.graph, Coloring{psi.psi})) continue;
    ++non_colorings;
    EXPECT_TRUE(check_non_coloring_bound(inst, "k3", psi).pass);
  }
  EXPECT_EQ(non_colorings, 21);
  EXPECT_THROW(check_non_coloring_bound(inst, "k3", {{1, 2, 3}}), IsAColoring);
}

TEST(ProjectorFormula, Examples) {
  const auto k3 = build_instance(complete_graph(3));
  for (const auto& psi : all_structured_selections(3)) {
    const auto rec = check_projector_formula(k3, "k3", psi);
    EXPECT_TRUE(rec.pass);
    EXPECT_EQ(rec.lhs, 0);
  }
  EXPECT_TRUE(
      check_projector_formula(build_instance(complete_graph(2)), "k2", {{1, 1}})
          .pass);
}

TEST(SelectionSpace, TrianglePartition) {
  const auto rep =
      check_selection_space(build_instance(complete_graph(3)), "k3");
  ASSERT_EQ(rep.records.size(), 4u);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.records[0].witness, "6 selections");
  EXPECT_EQ(rep.records[1].witness, "21 selections");
  EXPECT_EQ(rep.records[2].witness, "136 selections");
  EXPECT_EQ(rep.records[3].witness, "57 selections");
}

TEST(CheckAllLemmas, TriangleAllPass) {
  const auto rep = check_all_lemmas(complete_graph(3), "k3");
  EXPECT_TRUE(rep.passed());
  // 27 projector + 27 witness/bound + threshold + edge + 4 classes.
  EXPECT_EQ(rep.records.size(), 27u + 27u + 1u + 1u + 4u);
}

TEST(Format, Lines) {
  const auto rep = verify_theorem(complete_graph(3), "k3", VerifyMode::kStructured);
  const auto text = format_verification(rep);
  EXPECT_EQ(text.rfind("CHECK colorable-iff-below-threshold-structured k3 PASS lhs=", 0),
            0u);
  EXPECT_NE(text.find(" rhs=" + to_string(build_instance(complete_graph(3)).tau_sq) +
                      "\nVERDICT PASS\n"),
            std::string::npos);
}

TEST(Reports, Deterministic) {
  const auto a = format_verification(check_all_lemmas(path_graph(3), "p3"));
  const auto b = format_verification(check_all_lemmas(path_graph(3), "p3"));
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace cssp
