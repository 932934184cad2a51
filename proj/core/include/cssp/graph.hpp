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
#include <string_view>
#include <utility>
#include <vector>

namespace cssp {

// Simple undirected graph on vertices 1..n. Edges are stored as (u, v)
// with u < v, sorted lexicographically, without duplicates.
class Graph {
 public:
  using EdgeList = std::vector<std::pair<int, int>>;

  // Throws ValidationError on n < 1, self-loops, out-of-range endpoints.
  // Duplicate edges (in either orientation) collapse to one.
  Graph(int n, EdgeList edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }
  bool adjacent(int u, int v) const;

  // Graph with vertex v renamed to perm[v-1]; perm is a permutation of 1..n.
  Graph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  EdgeList edges_;
};

// DIMACS .col subset: "c" comment lines, one "p edge <n> <m>" header, then
// exactly m "e <u> <v>" lines. LF or CRLF line endings.
// Throws ParseError on malformed lines and ValidationError on self-loops,
// out-of-range vertices or an edge-line count different from m.
Graph parse_graph(std::string_view text);

// Canonical DIMACS text (header plus sorted edges).
std::string format_graph(const Graph& g, std::string_view comment = {});

// color[v-1] in {1,2,3}; 0 marks an unassigned vertex.
struct Coloring {
  std::vector<int> color;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Throws PartialColoring if phi does not assign every vertex a color in
// {1,2,3}.
bool is_three_coloring(const Graph& g, const Coloring& phi);

// Depth-first search over vertices 1..n in order, colors 1,2,3 in order,
// vertex 1 pinned to color 1. Returns the first proper coloring found.
std::optional<Coloring> three_color_backtracking(const Graph& g);

// All proper three-colorings, in lexicographic order of the color vector
// (no symmetry breaking).
std::vector<Coloring> all_three_colorings(const Graph& g);

// Erdős–Rényi G(n, p).
//
// Generator: std::mt19937_64 seeded with `seed`. Pairs (u, v), u < v, are
// visited in lexicographic order; each draws one 64-bit output x and the
// edge is kept iff (x >> 11) * 2^-53 < p. If no edge was kept, one more
// output y picks edge number y mod C(n,2) in the same order. This procedure
// is part of the public contract and must not change.
//
// Throws EmptyEdgeSet when n < 2 and ValidationError for p outside [0,1].
Graph random_graph(int n, double p, std::uint64_t seed);

// Standard small graphs.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();

}  // namespace cssp
