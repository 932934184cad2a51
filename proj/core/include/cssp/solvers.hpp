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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cssp/reduction.hpp"

namespace cssp {

enum class SolveMode { kExactFull, kExactStructured, kGreedy };

std::string_view to_string(SolveMode mode);
// Accepts "exact-full", "exact-structured", "greedy".
SolveMode parse_solve_mode(std::string_view text);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct SolveReport {
  SolveMode mode = SolveMode::kExactFull;
  // Exact modes. In structured mode this is the minimum over structured
  // selections only, an upper bound on the true optimum.
  Rational delta_sq;
  // Greedy mode only.
  double delta_sq_float = 0.0;
  ColumnSelection best_selection;
  std::vector<std::size_t> best_positions;
  std::uint64_t subsets_examined = 0;
  bool decision = false;

  bool delta_is_upper_bound() const {
    return mode == SolveMode::kExactStructured;
  }
};

// Line-oriented rendering: decision, delta_sq, delta_sq_kind, selection,
// subsets, mode.
std::string format_report(const SolveReport& report);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Minimum of projection_residual_sq over all k-subsets of columns, visited
// in lexicographic order; the first minimizer wins ties.
// Throws CombinatorialBlowup when C(cols, k) > cap, DimensionMismatch when
// k is outside 1..cols.
SolveReport exact_brute_force(const RatMatrix& m, std::size_t k,
                              const Rational& tau_sq,
                              std::uint64_t cap = kDefaultEnumerationCap);

// Minimum over the 3^n structured selections {v^psi(v)}. The decision is
// exact for the reduction (any selection meeting the threshold is
// structured); delta_sq is only an upper bound on the optimum.
SolveReport exact_structured(const ReductionInstance& inst);

// Dense double matrix used only by the heuristic.
struct FloatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  double operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
  static FloatMatrix from(const RatMatrix& m);
};

struct GreedyResult {
  std::vector<std::size_t> selection;  // in pick order
  double residual_sq = 0.0;
  std::uint64_t candidates_evaluated = 0;
};

// Forward selection: repeatedly add the column whose inclusion leaves the
// smallest residual, lowest index on ties. Not for verification.
GreedyResult greedy_forward(const FloatMatrix& m, std::size_t k);

// Greedy wrapped as a report; decision compares the float residual against
// tau_sq rounded to double and is only a heuristic.
SolveReport greedy_report(const RatMatrix& m, std::size_t k,
                          const Rational& tau_sq);

// Is delta_k(M)^2 <= tau_sq? kExactStructured needs `m` to be a reduction
// matrix with k = n, otherwise ModeUnavailable; kGreedy is never accepted.
bool decide_cssp(const RatMatrix& m, std::size_t k, const Rational& tau_sq,
                 SolveMode mode, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace cssp
