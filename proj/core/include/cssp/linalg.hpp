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
#include <span>
#include <vector>

#include "cssp/rat_matrix.hpp"

namespace cssp {

// Sum of squared entries.
Rational frobenius_sq(const RatMatrix& m);

// Exact product; labels (rows of a, cols of b). Zero entries of `a` are
// skipped, which matters for the sparse reduction matrices.
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

// Gauss-Jordan inverse, first nonzero entry as pivot. The result is
// labelled (cols of m) x (rows of m). Throws SingularMatrix.
RatMatrix invert(const RatMatrix& m);

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const RatMatrix& m);

// (S^T S)^{-1} S^T for S of full column rank. Throws SingularMatrix when
// S^T S is singular.
RatMatrix pseudoinverse_full_rank(const RatMatrix& s);

// I - S S^+ for the given full-column-rank S, labelled by the rows of S.
RatMatrix complement_projector(const RatMatrix& s);

// ||M - P M||^2 where P projects orthogonally onto the span of the selected
// columns. The selection may be rank deficient or contain repeats; a column
// basis is extracted with rref first.
Rational projection_residual_sq(const RatMatrix& m,
                                std::span<const std::size_t> selection);

// Every diagonal entry strictly exceeds the sum of absolute values of the
// other entries in its column. Throws DimensionMismatch if not square.
bool is_strictly_column_diagonally_dominant(const RatMatrix& d);

}  // namespace cssp
