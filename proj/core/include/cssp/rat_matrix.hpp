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
#include <span>
#include <vector>

#include "cssp/label.hpp"
#include "cssp/rational.hpp"

namespace cssp {

// Dense row-major matrix of Rationals with a label on every row and
// column. Labels within one axis are distinct.
class RatMatrix {
 public:
  RatMatrix() = default;

  // Zero matrix with Index labels.
  RatMatrix(std::size_t rows, std::size_t cols);

  // Zero matrix with the given labels. Throws ValidationError on duplicate
  // labels within an axis.
  RatMatrix(std::vector<Label> row_labels, std::vector<Label> col_labels);

  // Row-major literal with Index labels; every row must have equal length.
  static RatMatrix from_rows(
      const std::vector<std::vector<Rational>>& rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix identity(const std::vector<Label>& labels);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }

  const std::vector<Label>& row_labels() const { return row_labels_; }
  const std::vector<Label>& col_labels() const { return col_labels_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols() + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols() + c];
  }

  std::span<const Rational> entries() const { return entries_; }

  std::optional<std::size_t> find_row(const Label& l) const;
  std::optional<std::size_t> find_col(const Label& l) const;

  RatMatrix transpose() const;

  // Columns at the given positions, in the given order. Duplicate positions
  // are allowed and yield Index labels on the column axis (labels must stay
  // distinct). Throws InvalidColumn on an out-of-range position.
  RatMatrix select_columns(std::span<const std::size_t> positions) const;

  // Row and column order of `order_rows` / `order_cols`, which must be
  // permutations of this matrix's labels.
  RatMatrix reordered(const std::vector<Label>& order_rows,
                      const std::vector<Label>& order_cols) const;

  // Same entries with all labels replaced by Index labels.
  RatMatrix unlabeled() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
  std::vector<Rational> entries_;
};

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);

}  // namespace cssp
