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

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

namespace cssp {

namespace label {

// Positional label for matrices that carry no domain meaning.
struct Index {
  std::size_t value;
  auto operator<=>(const Index&) const = default;
};

// Row v of the reduction matrix (1-based vertex id).
struct Vertex {
  int v;
  auto operator<=>(const Vertex&) const = default;
};

// Color row 1, 2 or 3.
struct ColorRow {
  int color;
  auto operator<=>(const ColorRow&) const = default;
};

struct Epsilon {
  auto operator<=>(const Epsilon&) const = default;
};

// Column v^color.
struct VertexCopy {
  int v;
  int color;
  auto operator<=>(const VertexCopy&) const = default;
};

// Column for edge {u, v}; always stored with u < v.
struct Edge {
  int u;
  int v;
  auto operator<=>(const Edge&) const = default;
};

}  // namespace label

// One axis entry of a RatMatrix. Row axes of reduction matrices use
// Vertex/ColorRow/Epsilon, column axes use VertexCopy/Edge; Index is for
// plain matrices.
using Label = std::variant<label::Index, label::Vertex, label::ColorRow,
                           label::Epsilon, label::VertexCopy, label::Edge>;

Label make_edge(int a, int b);

// Text forms used in instance files: "v3", "c1", "eps", "v3^2", "e1_3",
// and "#7" for Index.
std::string to_string(const Label& l);
Label parse_label(std::string_view text);

}  // namespace cssp
