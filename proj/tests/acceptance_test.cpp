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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact unless a float slack is named.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cssp/linalg.hpp"
#include "cssp/verifier.hpp"
#include "test_support.hpp"

namespace {

using namespace cssp;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(const char* name, double max_seconds,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > max_seconds) {
    o.pass = false;
    o.detail += " (over time budget " + std::to_string(max_seconds) + " s)";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %s  %.2fs  %s\n", o.pass ? "PASS" : "FAIL", name, secs,
              o.detail.c_str());
  std::fflush(stdout);
}

Rational R(long p, long q = 1) { return make_rational(p, q); }

// The printed triangle matrix; edge columns in printed order are {1,3},
// {2,3}, {1,2}.
Outcome k3_golden() {
  const auto inst = build_instance(complete_graph(3));
  if (inst.t != R(1, 864)) return {false, "t = " + to_string(inst.t)};
  const Rational t = inst.t;
  const Rational z = 0, o = 1, a = pow(t, 2), b = pow(t, 3), c = pow(t, 5);
  const std::vector<std::vector<Rational>> rows = {
      {o, z, z, o, z, z, o, z, z, a, z, a},
      {z, o, z, z, o, z, z, o, z, z, a, a},
      {z, z, o, z, z, o, z, z, o, a, a, z},
      {b, b, b, z, z, z, z, z, z, c, c, c},
      {z, z, z, b, b, b, z, z, z, c, c, c},
      {z, z, z, z, z, z, b, b, b, c, c, c},
      {z, z, z, z, z, z, z, z, z, t, t, t},
  };
  std::vector<Label> cols;
  for (int i = 1; i <= 3; ++i) {
    for (int v = 1; v <= 3; ++v) cols.emplace_back(label::VertexCopy{v, i});
  }
  cols.emplace_back(label::Edge{1, 3});
  cols.emplace_back(label::Edge{2, 3});
  cols.emplace_back(label::Edge{1, 2});
  RatMatrix printed(reduction_row_labels(3), cols);
  for (std::size_t r = 0; r < 7; ++r) {
    for (std::size_t j = 0; j < 12; ++j) printed(r, j) = rows[r][j];
  }
  const bool same =
      inst.matrix == printed.reordered(inst.matrix.row_labels(),
                                       inst.matrix.col_labels());
  return {same, "7x12, t=1/864"};
}

Outcome theorem_small_full() {
  struct Case {
    const char* name;
    Graph g;
    std::uint64_t subsets;
  };
  const Case cases[] = {{"k2", complete_graph(2), 21},
                        {"k3", complete_graph(3), 220},
                        {"k4", complete_graph(4), 3060},
                        {"p3", path_graph(3), 165},
                        {"c5", cycle_graph(5), 15504}};
  std::string detail;
  bool ok = true;
  for (const auto& c : cases) {
    const auto inst = build_instance(c.g);
    const auto solved = exact_brute_force(inst.matrix, inst.k, inst.tau_sq);
    const bool colorable = three_color_backtracking(c.g).has_value();
    const bool agree = colorable == solved.decision &&
                       solved.subsets_examined == c.subsets;
    ok = ok && agree;
    detail += std::string(c.name) + (colorable ? ":YES " : ":NO ");
  }
  return {ok, detail};
}

Outcome theorem_petersen_structured() {
  const auto g = petersen_graph();
  const auto inst = build_instance(g);
  const auto solved = exact_structured(inst);
  const bool colorable = three_color_backtracking(g).has_value();
  const bool ok = colorable && solved.decision &&
                  solved.subsets_examined == 59049;
  return {ok, std::to_string(solved.subsets_examined) + " evaluations"};
}

Outcome witness_equality() {
  int checked = 0;
  for (const auto& g : {complete_graph(3), path_graph(3), cycle_graph(5)}) {
    const auto inst = build_instance(g);
    const Rational expected = g.m() * pow(inst.t, 2) +
                              4 * g.n() * pow(inst.t, 6) +
                              g.m() * pow(inst.t, 10);
    for (const auto& phi : all_three_colorings(g)) {
      const auto a = witness_A(inst, phi);
      std::vector<std::size_t> cols;
      for (const auto& l : a.row_labels()) {
        cols.push_back(*inst.matrix.find_col(l));
      }
      const Rational lhs = frobenius_sq(
          inst.matrix - matmul(inst.matrix.select_columns(cols), a));
      if (lhs != expected) return {false, "mismatch at checked=" + std::to_string(checked)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " colorings"};
}

Outcome projector_differential() {
  int checked = 0;
  for (const auto& g : {complete_graph(3), complete_graph(2)}) {
    const auto inst = build_instance(g);
    for (const auto& psi : all_structured_selections(g.n())) {
      if (!check_projector_formula(inst, "g", psi).pass) {
        return {false, "psi mismatch"};
      }
      ++checked;
    }
  }
  return {checked == 27 + 9, std::to_string(checked) + " selections"};
}

Outcome non_coloring_bounds() {
  const auto inst = build_instance(complete_graph(3));
  int checked = 0;
  for (const auto& psi : all_structured_selections(3)) {
    if (is_three_coloring(inst.graph, Coloring{psi.psi})) continue;
    if (!check_non_coloring_bound(inst, "k3", psi).pass) {
      return {false, "bound violated"};
    }
    ++checked;
  }
  std::vector<Graph> corpus = {complete_graph(2), complete_graph(3),
                               complete_graph(4), path_graph(3),
                               cycle_graph(5),    petersen_graph()};
  for (std::uint64_t s = 1; s <= 20; ++s) corpus.push_back(random_graph(4, 0.5, s));
  for (const auto& g : corpus) {
    if (!check_bound_exceeds_threshold(g.n(), g.m(), "g").pass) {
      return {false, "lower bound <= threshold"};
    }
  }
  return {checked == 21, std::to_string(checked) + " non-colorings, " +
                             std::to_string(corpus.size()) + " (n,m) pairs"};
}

Outcome selection_partition() {
  const auto rep =
      check_selection_space(build_instance(complete_graph(3)), "k3");
  std::string detail;
  for (const auto& r : rep.records) detail += r.name + "=" + r.witness + " ";
  const bool counts = rep.records.size() == 4 &&
                      rep.records[0].witness == "6 selections" &&
                      rep.records[1].witness == "21 selections" &&
                      rep.records[2].witness == "136 selections" &&
                      rep.records[3].witness == "57 selections";
  return {rep.passed() && counts, detail};
}

Outcome random_oracle_equivalence() {
  int agree = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_graph(4, 0.5, seed);
    const auto inst = build_instance(g);
    const bool full =
        exact_brute_force(inst.matrix, inst.k, inst.tau_sq).decision;
    const bool structured = exact_structured(inst).decision;
    const bool colorable = three_color_backtracking(g).has_value();
    if (full == structured && structured == colorable) ++agree;
  }
  return {agree == 20, std::to_string(agree) + "/20 agree"};
}

Outcome solver_sandwich() {
  for (const auto& g : {complete_graph(3), complete_graph(4)}) {
    const auto inst = build_instance(g);
    const auto full = exact_brute_force(inst.matrix, inst.k, inst.tau_sq);
    const auto structured = exact_structured(inst);
    if (!(full.delta_sq <= structured.delta_sq)) return {false, "brute > structured"};
    if (auto phi = three_color_backtracking(g)) {
      const auto a = witness_A(inst, *phi);
      std::vector<std::size_t> cols;
      for (const auto& l : a.row_labels()) cols.push_back(*inst.matrix.find_col(l));
      const Rational w = frobenius_sq(
          inst.matrix - matmul(inst.matrix.select_columns(cols), a));
      if (!(structured.delta_sq <= w)) return {false, "structured > witness"};
    }
    const auto greedy = greedy_forward(FloatMatrix::from(inst.matrix), inst.k);
    if (greedy.residual_sq < full.delta_sq.get_d() - 1e-9) {
      return {false, "greedy beat exact"};
    }
  }
  return {true, "k3, k4"};
}

Outcome linalg_properties() {
  constexpr int kTrials = 100;
  testing::MatrixGen gen(2026);
  int counts[4] = {0, 0, 0, 0};
  // Projector idempotence and symmetry.
  while (counts[0] < kTrials) {
    const auto m = gen.matrix(gen.size(1, 5), gen.size(1, 4));
    const auto basis = rref(m).pivot_columns;
    if (basis.empty()) continue;
    const auto s = m.select_columns(basis);
    const auto p = matmul(s, pseudoinverse_full_rank(s));
    if (matmul(p, p) != p || p.transpose().unlabeled() != p.unlabeled()) {
      return {false, "projector not idempotent/symmetric"};
    }
    ++counts[0];
  }
  // Monotonicity under column addition.
  while (counts[1] < kTrials) {
    const auto m = gen.matrix(gen.size(1, 5), gen.size(2, 6));
    auto small = gen.subset(m.cols());
    auto large = small;
    large.push_back(gen.size(0, m.cols() - 1));
    if (projection_residual_sq(m, large) > projection_residual_sq(m, small)) {
      return {false, "residual grew after adding a column"};
    }
    ++counts[1];
  }
  // Basis independence under a duplicated column.
  while (counts[2] < kTrials) {
    const auto m = gen.matrix(gen.size(1, 5), gen.size(1, 6));
    auto sel = gen.subset(m.cols());
    if (sel.empty()) continue;
    auto doubled = sel;
    doubled.push_back(sel.front());
    if (projection_residual_sq(m, doubled) != projection_residual_sq(m, sel) ||
        projection_residual_sq(m, sel) !=
            testing::gram_schmidt_residual_sq(m, sel)) {
      return {false, "duplicate column changed the residual"};
    }
    ++counts[2];
  }
  // Strict column dominance implies invertibility.
  while (counts[3] < kTrials) {
    const std::size_t n = gen.size(1, 5);
    auto d = gen.matrix(n, n, 0.2);
    for (std::size_t j = 0; j < n; ++j) {
      Rational off = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j) off += abs(d(i, j));
      }
      d(j, j) = off + R(static_cast<long>(gen.size(1, 4)), 3);
    }
    if (!is_strictly_column_diagonally_dominant(d)) return {false, "generator"};
    const auto inv = invert(d);
    if (matmul(d, inv).unlabeled() != RatMatrix::identity(n)) {
      return {false, "bad inverse"};
    }
    ++counts[3];
  }
  return {true, "4 properties x 100 matrices"};
}

}  // namespace

int main() {
  std::printf("cssp acceptance suite\n");
  criterion("k3-golden-matrix", 1.0, k3_golden);
  criterion("theorem-small-graphs-full-enumeration", 120.0, theorem_small_full);
  criterion("theorem-petersen-structured", 600.0, theorem_petersen_structured);
  criterion("witness-equality-all-colorings", 60.0, witness_equality);
  criterion("closed-form-projector-differential", 60.0, projector_differential);
  criterion("non-coloring-lower-bounds", 60.0, non_coloring_bounds);
  criterion("k3-selection-space-partition", 60.0, selection_partition);
  criterion("random-g4-oracle-equivalence", 300.0, random_oracle_equivalence);
  criterion("solver-sandwich", 60.0, solver_sandwich);
  criterion("linalg-property-suite", 120.0, linalg_properties);
  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              failures);
  return failures == 0 ? 0 : 1;
}
