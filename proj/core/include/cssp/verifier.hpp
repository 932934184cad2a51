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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cssp/reduction.hpp"
#include "cssp/solvers.hpp"

namespace cssp {

// One exact comparison. `pass` is decided from lhs and rhs alone (plus, for
// matrix identities, exact entrywise equality); no tolerances.
struct CheckRecord {
  std::string name;
  std::string graph;
  std::string witness;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::optional<bool> colorable;
  std::optional<bool> decision;

  bool passed() const;
  void append(VerificationReport other);
};

// "CHECK <name> <graph> PASS|FAIL lhs=<p/q> rhs=<p/q>" per record, then
// "VERDICT PASS|FAIL".
std::string format_verification(const VerificationReport& report);

enum class VerifyMode { kFull, kStructured };

// Colorability (backtracking) versus the CSSP decision (exact solver):
// the record passes iff both answers agree. lhs is the solver's delta_sq,
// rhs the threshold. Full mode propagates CombinatorialBlowup.
VerificationReport verify_theorem(const Graph& g, const std::string& name,
                                  VerifyMode mode,
                                  std::uint64_t cap = kDefaultEnumerationCap);

// A selection that misses every copy of some vertex and uses no edge
// column: the residual keeps three unit entries, so residual_sq >= 3 and
// residual_sq > tau_sq. Throws HypothesisMismatch otherwise.
CheckRecord check_uncovered_vertex(const ReductionInstance& inst,
                                   const std::string& name,
                                   const ColumnSelection& sel);

// A single selection containing at least one edge column must leave
// residual_sq > tau_sq. Throws HypothesisMismatch if it has no edge column.
CheckRecord check_edge_selection(const ReductionInstance& inst,
                                 const std::string& name,
                                 const ColumnSelection& sel);

// Every n-subset containing an edge column exceeds the threshold. lhs is
// the smallest such residual. Throws CombinatorialBlowup above `cap`.
CheckRecord check_edge_columns(const ReductionInstance& inst,
                               const std::string& name,
                               std::uint64_t cap = kDefaultEnumerationCap);

// ||M - S A||^2 == tau_sq for the witness A of a proper coloring, and the
// optimal residual of that selection is at most tau_sq.
// Throws NotAColoring.
CheckRecord check_witness(const ReductionInstance& inst,
                          const std::string& name, const Coloring& phi);

// For psi that is not a coloring: residual_sq >= lower_bound_sq > tau_sq.
// Throws IsAColoring when psi is proper.
CheckRecord check_non_coloring_bound(const ReductionInstance& inst,
                                     const std::string& name,
                                     const StructuredSelection& psi);

// Closed-form I - S S^+ equals the directly computed projector entrywise,
// and the direct projector is symmetric and idempotent. lhs is the squared
// norm of the difference, rhs is 0.
CheckRecord check_projector_formula(const ReductionInstance& inst,
                                    const std::string& name,
                                    const StructuredSelection& psi);

// lower_bound_sq(n, m, t) > threshold_sq(n, m, t) with t from (n, m).
CheckRecord check_bound_exceeds_threshold(int n, int m,
                                          const std::string& name);

enum class SelectionClass {
  kColoring,        // structured and a proper coloring
  kNonColoring,     // structured, some edge monochromatic
  kEdgeContaining,  // at least one edge column
  kVertexUncovered  // no edge column, some vertex without a copy
};

std::string_view to_string(SelectionClass c);

// Exactly one class applies to every n-subset of the columns.
SelectionClass classify_selection(const ReductionInstance& inst,
                                  const ColumnSelection& sel);

// Classifies every n-subset and checks its class inequality: colorings
// reach the threshold, non-colorings stay above the structured lower
// bound, edge-containing selections exceed the threshold, uncovered
// selections leave at least 3. One record per class; `witness` carries the
// number of selections in the class.
VerificationReport check_selection_space(
    const ReductionInstance& inst, const std::string& name,
    std::uint64_t cap = kDefaultEnumerationCap);

// Every check above that fits under `cap` for this graph.
VerificationReport check_all_lemmas(const Graph& g, const std::string& name,
                                    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace cssp
