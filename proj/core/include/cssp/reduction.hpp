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

#include <cstddef>
#include <optional>
#include <vector>

#include "cssp/graph.hpp"
#include "cssp/rat_matrix.hpp"

namespace cssp {

// The CSSP instance built from a graph G = (V, E), n = |V|, m = |E|.
//
// Rows, in order: v1..vn, c1, c2, c3, eps.
// Columns, in order: v1^1..vn^1, v1^2..vn^2, v1^3..vn^3, then the edges in
// lexicographic order.
//
// Entries, for distinct u, v and distinct colors i, j:
//   M(u, u^i) = 1,   M(u, v^i) = 0
//   M(u, e)   = t^2 if u is an endpoint of e, else 0
//   M(i, v^i) = t^3, M(i, v^j) = 0, M(i, e) = t^5
//   M(eps, v^i) = 0, M(eps, e) = t
// with t = 1 / (4 (m + n)^3). G is 3-colorable iff some n columns leave a
// squared residual of at most tau_sq = m t^2 + 4n t^6 + m t^10.
struct ReductionInstance {
  Graph graph;
  RatMatrix matrix;
  std::size_t k;
  Rational t;
  Rational tau_sq;
};

// Sorted labels of chosen columns.
struct ColumnSelection {
  std::vector<Label> labels;
  friend bool operator==(const ColumnSelection&,
                         const ColumnSelection&) = default;
};

// psi[v-1] in {1,2,3}: the selection {v^psi(v)}.
struct StructuredSelection {
  std::vector<int> psi;
  friend bool operator==(const StructuredSelection&,
                         const StructuredSelection&) = default;
};

// Throws DegenerateGraph when n or m is zero.
Rational compute_t(int n, int m);

Rational threshold_sq(int n, int m, const Rational& t);

// m t^2 + 4n (t^3/(1+n t^6))^2 + (m+2) (t^5/(1+n t^6))^2: lower bound on
// the squared residual of any structured selection that is not a coloring.
Rational lower_bound_sq(int n, int m, const Rational& t);

// Throws DegenerateGraph when the graph has no edges.
ReductionInstance build_instance(const Graph& g);

std::vector<Label> reduction_row_labels(int n);
std::vector<Label> reduction_col_labels(const Graph& g);

// Column positions in `m` for the labels of `sel`. Throws InvalidColumn for
// labels that are not columns of `m`.
std::vector<std::size_t> selection_positions(const RatMatrix& m,
                                             const ColumnSelection& sel);

// Labels of the given positions, sorted into the matrix's column order.
ColumnSelection selection_from_positions(const RatMatrix& m,
                                         std::vector<std::size_t> positions);

ColumnSelection coloring_to_selection(const Graph& g, const Coloring& phi);

ColumnSelection structured_to_selection(const StructuredSelection& psi);

// psi if `sel` holds exactly one copy of every vertex 1..n and no edge
// column; nullopt otherwise.
std::optional<StructuredSelection> selection_to_structured(
    int n, const ColumnSelection& sel);

// The coefficient matrix A with M - S A at squared norm tau_sq, where S
// holds the columns v^phi(v). Rows: v^phi(v) for v = 1..n; columns: those of
// M. Throws NotAColoring unless phi is a proper three-coloring.
RatMatrix witness_A(const ReductionInstance& inst, const Coloring& phi);

// I - S S^+ for the structured selection psi, written out block by block:
// with n_i = |psi^{-1}(i)| and u_i = 1/(1 + n_i t^6),
//   vertex rows of class i:   u_i t^6 on the class-i block, -u_i t^3 with c_i
//   color row c_i:            u_i on the diagonal
//   eps:                      1 on the diagonal
// and zero elsewhere. Rows and columns use the instance's row order.
RatMatrix closed_form_projector(const ReductionInstance& inst,
                                const StructuredSelection& psi);

// Every psi in lexicographic order: (1,..,1), (1,..,1,2), ...
std::vector<StructuredSelection> all_structured_selections(int n);

// Reconstructs the graph when `m` is exactly build_instance(G).matrix for
// some G (labels included); nullopt otherwise.
std::optional<Graph> recognize_reduction(const RatMatrix& m);

}  // namespace cssp
