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

#include "cssp/linalg.hpp"

#include <utility>

#include "cssp/errors.hpp"

namespace cssp {

namespace {

// In-place Gauss-Jordan on a row-major rows x cols buffer, choosing pivots
// only among the first `pivot_cols` columns. Pivot = first nonzero entry at
// or below the current row. Returns the pivot column indices.
std::vector<std::size_t> gauss_jordan(std::vector<Rational>& a,
                                      std::size_t rows, std::size_t cols,
                                      std::size_t pivot_cols) {
  auto at = [&](std::size_t r, std::size_t c) -> Rational& {
    return a[r * cols + c];
  };
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < pivot_cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && is_zero(at(p, col))) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(at(p, c), at(row, c));
    }
    const Rational inv = 1 / at(row, col);
    for (std::size_t c = col; c < cols; ++c) {
      if (!is_zero(at(row, c))) at(row, c) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || is_zero(at(r, col))) continue;
      factor = at(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        if (!is_zero(at(row, c))) at(r, c) -= factor * at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational frobenius_sq(const RatMatrix& m) {
  Rational sum = 0;
  for (const auto& x : m.entries()) {
    if (!is_zero(x)) sum += x * x;
  }
  return sum;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  RatMatrix out(a.row_labels(), b.col_labels());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Rational& x = a(i, l);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(l, j))) out(i, j) += x * b(l, j);
      }
    }
  }
  return out;
}

RatMatrix invert(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("invert: matrix is not square");
  const std::size_t w = 2 * n;
  std::vector<Rational> aug(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = m(i, j);
    aug[i * w + n + i] = 1;
  }
  if (gauss_jordan(aug, n, w, n).size() < n) {
    throw SingularMatrix("invert: matrix is singular");
  }
  RatMatrix out(m.col_labels(), m.row_labels());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug[i * w + n + j];
  }
  return out;
}

RrefResult rref(const RatMatrix& m) {
  std::vector<Rational> buf(m.entries().begin(), m.entries().end());
  auto pivots = gauss_jordan(buf, m.rows(), m.cols(), m.cols());
  RatMatrix reduced(m.row_labels(), m.col_labels());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      reduced(i, j) = buf[i * m.cols() + j];
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

RatMatrix pseudoinverse_full_rank(const RatMatrix& s) {
  const RatMatrix st = s.transpose();
  RatMatrix gram_inv;
  try {
    gram_inv = invert(matmul(st, s));
  } catch (const SingularMatrix&) {
    throw SingularMatrix(
        "pseudoinverse: S^T S is singular (S lacks full column rank)");
  }
  // gram_inv is labelled cols(S) x cols(S); the product takes rows(S) as
  // its column axis.
  return matmul(gram_inv, st);
}

RatMatrix complement_projector(const RatMatrix& s) {
  RatMatrix p = matmul(s, pseudoinverse_full_rank(s));
  return RatMatrix::identity(s.row_labels()) - p;
}

Rational projection_residual_sq(const RatMatrix& m,
                                std::span<const std::size_t> selection) {
  const RatMatrix s = m.select_columns(selection);
  const auto basis_cols = rref(s).pivot_columns;
  if (basis_cols.empty()) return frobenius_sq(m);
  const RatMatrix basis = s.select_columns(basis_cols);
  const RatMatrix coeffs = matmul(pseudoinverse_full_rank(basis), m);
  return frobenius_sq(m - matmul(basis, coeffs));
}

bool is_strictly_column_diagonally_dominant(const RatMatrix& d) {
  if (d.rows() != d.cols()) {
    throw DimensionMismatch("dominance test needs a square matrix");
  }
  for (std::size_t j = 0; j < d.cols(); ++j) {
    Rational off = 0;
    for (std::size_t i = 0; i < d.rows(); ++i) {
      if (i != j) off += abs(d(i, j));
    }
    if (!(d(j, j) > off)) return false;
  }
  return true;
}

}  // namespace cssp
