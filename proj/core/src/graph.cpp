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

#include "cssp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "cssp/errors.hpp"

namespace cssp {

Graph::Graph(int n, EdgeList edges) : n_(n) {
  if (n < 1) throw ValidationError("graph needs at least one vertex");
  for (auto [u, v] : edges) {
    if (u == v) {
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ValidationError("edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "} outside 1.." +
                            std::to_string(n));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::adjacent(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(),
                            std::pair{std::min(u, v), std::max(u, v)});
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw ValidationError("permutation size does not match vertex count");
  }
  EdgeList mapped;
  for (auto [u, v] : edges_) mapped.emplace_back(perm[u - 1], perm[v - 1]);
  return Graph(n_, std::move(mapped));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, int line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": '" +
                     std::string(tok) + "' is not an integer");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<long> n;
  long m = 0;
  Graph::EdgeList edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "p") {
      if (n) throw ParseError(where + "second problem line");
      if (tok.size() != 4 || tok[1] != "edge") {
        throw ParseError(where + "expected 'p edge <n> <m>'");
      }
      n = parse_int(tok[2], line_no);
      m = parse_int(tok[3], line_no);
      if (*n < 1) throw ValidationError(where + "vertex count must be >= 1");
      if (m < 0) throw ValidationError(where + "negative edge count");
    } else if (tok[0] == "e") {
      if (!n) throw ParseError(where + "edge before problem line");
      if (tok.size() != 3) throw ParseError(where + "expected 'e <u> <v>'");
      long u = parse_int(tok[1], line_no);
      long v = parse_int(tok[2], line_no);
      if (u == v) {
        throw ValidationError(where + "self-loop at vertex " +
                              std::to_string(u));
      }
      if (u < 1 || v < 1 || u > *n || v > *n) {
        throw ValidationError(where + "vertex out of range 1.." +
                              std::to_string(*n));
      }
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    } else {
      throw ParseError(where + "unknown line type '" + std::string(tok[0]) +
                       "'");
    }
  }
  if (!n) throw ParseError("missing 'p edge' line");
  if (static_cast<long>(edges.size()) != m) {
    throw ValidationError("header declares " + std::to_string(m) +
                          " edges but " + std::to_string(edges.size()) +
                          " edge lines follow");
  }
  return Graph(static_cast<int>(*n), std::move(edges));
}

std::string format_graph(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

bool is_three_coloring(const Graph& g, const Coloring& phi) {
  if (static_cast<int>(phi.color.size()) != g.n()) {
    throw PartialColoring("coloring covers " +
                          std::to_string(phi.color.size()) + " of " +
                          std::to_string(g.n()) + " vertices");
  }
  for (std::size_t i = 0; i < phi.color.size(); ++i) {
    if (phi.color[i] < 1 || phi.color[i] > 3) {
      throw PartialColoring("vertex " + std::to_string(i + 1) +
                            " has no color in {1,2,3}");
    }
  }
  return std::none_of(g.edges().begin(), g.edges().end(), [&](auto e) {
    return phi.color[e.first - 1] == phi.color[e.second - 1];
  });
}

namespace {

std::vector<std::vector<int>> lower_neighbors(const Graph& g) {
  std::vector<std::vector<int>> out(g.n());
  for (auto [u, v] : g.edges()) out[v - 1].push_back(u - 1);
  return out;
}

// Extends colors[0..v) to colors[0..n). Returns false when no extension
// exists or when `visit` asks to stop.
template <class Visit>
bool extend(const std::vector<std::vector<int>>& lower, std::vector<int>& colors,
            int v, int first_color, Visit&& visit) {
  const int n = static_cast<int>(colors.size());
  if (v == n) return visit(colors);
  const int last_color = (v == 0) ? first_color : 3;
  for (int c = 1; c <= last_color; ++c) {
    bool ok = true;
    for (int u : lower[v]) {
      if (colors[u] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    colors[v] = c;
    if (extend(lower, colors, v + 1, first_color, visit)) return true;
  }
  colors[v] = 0;
  return false;
}

}  // namespace

std::optional<Coloring> three_color_backtracking(const Graph& g) {
  const auto lower = lower_neighbors(g);
  std::vector<int> colors(g.n(), 0);
  std::optional<Coloring> found;
  extend(lower, colors, 0, 1, [&](const std::vector<int>& c) {
    found = Coloring{c};
    return true;
  });
  return found;
}

std::vector<Coloring> all_three_colorings(const Graph& g) {
  const auto lower = lower_neighbors(g);
  std::vector<int> colors(g.n(), 0);
  std::vector<Coloring> out;
  extend(lower, colors, 0, 3, [&](const std::vector<int>& c) {
    out.push_back(Coloring{c});
    return false;
  });
  return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("edge probability must lie in [0, 1]");
  }
  if (n < 2) {
    throw EmptyEdgeSet("a graph on " + std::to_string(n) +
                       " vertex cannot have an edge");
  }
  std::mt19937_64 rng(seed);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  Graph::EdgeList edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * kScale;
      if (x < p) edges.emplace_back(u, v);
    }
  }
  if (edges.empty()) {
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    std::uint64_t pick = rng() % pairs;
    for (int u = 1; u <= n && edges.empty(); ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (pick-- == 0) {
          edges.emplace_back(u, v);
          break;
        }
      }
    }
  }
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  Graph::EdgeList edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  Graph::EdgeList edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  Graph::EdgeList edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 1);
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  // Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram 6..10.
  Graph::EdgeList edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(1 + i, 1 + (i + 1) % 5);
    edges.emplace_back(1 + i, 6 + i);
    edges.emplace_back(6 + i, 6 + (i + 2) % 5);
  }
  return Graph(10, std::move(edges));
}

}  // namespace cssp
