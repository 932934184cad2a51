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

#include "cssp/rat_matrix.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "cssp/errors.hpp"

namespace cssp {

namespace {

std::vector<Label> index_labels(std::size_t n) {
  std::vector<Label> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(label::Index{i});
  return out;
}

void require_distinct(const std::vector<Label>& labels, const char* axis) {
  std::set<Label> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw ValidationError(std::string("duplicate ") + axis + " label " +
                            to_string(l));
    }
  }
}

std::optional<std::size_t> find_in(const std::vector<Label>& labels,
                                   const Label& l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : row_labels_(index_labels(rows)),
      col_labels_(index_labels(cols)),
      entries_(rows * cols) {}

RatMatrix::RatMatrix(std::vector<Label> row_labels,
                     std::vector<Label> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(row_labels_.size() * col_labels_.size()) {
  require_distinct(row_labels_, "row");
  require_distinct(col_labels_, "column");
}

RatMatrix RatMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  RatMatrix out(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) {
      throw DimensionMismatch("ragged row literal");
    }
    for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  return identity(index_labels(n));
}

RatMatrix RatMatrix::identity(const std::vector<Label>& labels) {
  RatMatrix out(labels, labels);
  for (std::size_t i = 0; i < labels.size(); ++i) out(i, i) = 1;
  return out;
}

std::optional<std::size_t> RatMatrix::find_row(const Label& l) const {
  return find_in(row_labels_, l);
}

std::optional<std::size_t> RatMatrix::find_col(const Label& l) const {
  return find_in(col_labels_, l);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out;
  out.row_labels_ = col_labels_;
  out.col_labels_ = row_labels_;
  out.entries_.resize(entries_.size());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

RatMatrix RatMatrix::select_columns(
    std::span<const std::size_t> positions) const {
  std::set<std::size_t> unique;
  for (auto p : positions) {
    if (p >= cols()) {
      throw InvalidColumn("column position " + std::to_string(p) +
                          " out of range (" + std::to_string(cols()) +
                          " columns)");
    }
    unique.insert(p);
  }
  RatMatrix out;
  out.row_labels_ = row_labels_;
  if (unique.size() == positions.size()) {
    for (auto p : positions) out.col_labels_.push_back(col_labels_[p]);
  } else {
    out.col_labels_ = index_labels(positions.size());
  }
  out.entries_.resize(rows() * positions.size());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < positions.size(); ++j) {
      out(i, j) = (*this)(i, positions[j]);
    }
  }
  return out;
}

RatMatrix RatMatrix::reordered(const std::vector<Label>& order_rows,
                               const std::vector<Label>& order_cols) const {
  if (order_rows.size() != rows() || order_cols.size() != cols()) {
    throw DimensionMismatch("reorder does not match matrix shape");
  }
  std::vector<std::size_t> rmap;
  std::vector<std::size_t> cmap;
  for (const auto& l : order_rows) {
    auto r = find_row(l);
    if (!r) throw ValidationError("unknown row label " + to_string(l));
    rmap.push_back(*r);
  }
  for (const auto& l : order_cols) {
    auto c = find_col(l);
    if (!c) throw ValidationError("unknown column label " + to_string(l));
    cmap.push_back(*c);
  }
  RatMatrix out(order_rows, order_cols);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      out(i, j) = (*this)(rmap[i], cmap[j]);
    }
  }
  return out;
}

RatMatrix RatMatrix::unlabeled() const {
  RatMatrix out = *this;
  out.row_labels_ = index_labels(rows());
  out.col_labels_ = index_labels(cols());
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("subtraction of differently shaped matrices");
  }
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

}  // namespace cssp
