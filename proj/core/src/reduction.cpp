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

#include "cssp/reduction.hpp"

#include <algorithm>
#include <tuple>

#include "cssp/errors.hpp"

namespace cssp {

Rational compute_t(int n, int m) {
  if (n <= 0 || m <= 0) {
    throw DegenerateGraph("reduction requires n >= 1 and m >= 1");
  }
  const long s = static_cast<long>(n) + m;
  return make_rational(1, 4 * s * s * s);
}

Rational threshold_sq(int n, int m, const Rational& t) {
  return m * pow(t, 2) + 4 * n * pow(t, 6) + m * pow(t, 10);
}

Rational lower_bound_sq(int n, int m, const Rational& t) {
  const Rational denom = 1 + n * pow(t, 6);
  const Rational a = pow(t, 3) / denom;
  const Rational b = pow(t, 5) / denom;
  return m * pow(t, 2) + 4 * n * a * a + (m + 2) * b * b;
}

std::vector<Label> reduction_row_labels(int n) {
  std::vector<Label> rows;
  for (int v = 1; v <= n; ++v) rows.emplace_back(label::Vertex{v});
  for (int i = 1; i <= 3; ++i) rows.emplace_back(label::ColorRow{i});
  rows.emplace_back(label::Epsilon{});
  return rows;
}

std::vector<Label> reduction_col_labels(const Graph& g) {
  std::vector<Label> cols;
  for (int i = 1; i <= 3; ++i) {
    for (int v = 1; v <= g.n(); ++v) cols.emplace_back(label::VertexCopy{v, i});
  }
  for (auto [u, v] : g.edges()) cols.emplace_back(label::Edge{u, v});
  return cols;
}

ReductionInstance build_instance(const Graph& g) {
  if (g.m() == 0) throw DegenerateGraph("reduction requires m >= 1");
  const int n = g.n();
  const Rational t = compute_t(n, g.m());
  const Rational t2 = pow(t, 2);
  const Rational t3 = pow(t, 3);
  const Rational t5 = pow(t, 5);

  RatMatrix m(reduction_row_labels(n), reduction_col_labels(g));
  const std::size_t eps = n + 3;
  auto color_row = [n](int i) { return static_cast<std::size_t>(n + i - 1); };
  for (int i = 1; i <= 3; ++i) {
    for (int v = 1; v <= n; ++v) {
      const std::size_t col = (i - 1) * n + (v - 1);
      m(v - 1, col) = 1;
      m(color_row(i), col) = t3;
    }
  }
  std::size_t col = 3 * n;
  for (auto [u, v] : g.edges()) {
    m(u - 1, col) = t2;
    m(v - 1, col) = t2;
    for (int i = 1; i <= 3; ++i) m(color_row(i), col) = t5;
    m(eps, col) = t;
    ++col;
  }
  return {g, std::move(m), static_cast<std::size_t>(n), t,
          threshold_sq(n, g.m(), t)};
}

std::vector<std::size_t> selection_positions(const RatMatrix& m,
                                             const ColumnSelection& sel) {
  std::vector<std::size_t> out;
  out.reserve(sel.labels.size());
  for (const auto& l : sel.labels) {
    auto c = m.find_col(l);
    if (!c) throw InvalidColumn("no column labelled " + to_string(l));
    out.push_back(*c);
  }
  return out;
}

ColumnSelection selection_from_positions(const RatMatrix& m,
                                         std::vector<std::size_t> positions) {
  std::sort(positions.begin(), positions.end());
  ColumnSelection sel;
  for (auto p : positions) {
    if (p >= m.cols()) {
      throw InvalidColumn("column position " + std::to_string(p) +
                          " out of range");
    }
    sel.labels.push_back(m.col_labels()[p]);
  }
  return sel;
}

namespace {

// Canonical column order for selections built without a matrix at hand:
// copies by color then vertex, then edges.
bool column_order(const Label& a, const Label& b) {
  auto key = [](const Label& l) {
    if (auto* vc = std::get_if<label::VertexCopy>(&l)) {
      return std::tuple{0, vc->color, vc->v};
    }
    if (auto* e = std::get_if<label::Edge>(&l)) return std::tuple{1, e->u, e->v};
    return std::tuple{2, 0, 0};
  };
  return key(a) < key(b);
}

}  // namespace

ColumnSelection coloring_to_selection(const Graph& g, const Coloring& phi) {
  if (static_cast<int>(phi.color.size()) != g.n()) {
    throw PartialColoring("coloring does not cover every vertex");
  }
  StructuredSelection psi{phi.color};
  for (int c : psi.psi) {
    if (c < 1 || c > 3) throw PartialColoring("vertex without a color");
  }
  return structured_to_selection(psi);
}

ColumnSelection structured_to_selection(const StructuredSelection& psi) {
  ColumnSelection sel;
  for (std::size_t i = 0; i < psi.psi.size(); ++i) {
    sel.labels.emplace_back(
        label::VertexCopy{static_cast<int>(i + 1), psi.psi[i]});
  }
  std::sort(sel.labels.begin(), sel.labels.end(), column_order);
  return sel;
}

std::optional<StructuredSelection> selection_to_structured(
    int n, const ColumnSelection& sel) {
  if (static_cast<int>(sel.labels.size()) != n) return std::nullopt;
  StructuredSelection out{std::vector<int>(n, 0)};
  for (const auto& l : sel.labels) {
    auto* vc = std::get_if<label::VertexCopy>(&l);
    if (!vc || vc->v < 1 || vc->v > n || out.psi[vc->v - 1] != 0) {
      return std::nullopt;
    }
    out.psi[vc->v - 1] = vc->color;
  }
  return out;
}

RatMatrix witness_A(const ReductionInstance& inst, const Coloring& phi) {
  if (!is_three_coloring(inst.graph, phi)) {
    throw NotAColoring("witness matrix needs a proper three-coloring");
  }
  const int n = inst.graph.n();
  std::vector<Label> rows;
  for (int v = 1; v <= n; ++v) {
    rows.emplace_back(label::VertexCopy{v, phi.color[v - 1]});
  }
  RatMatrix a(rows, inst.matrix.col_labels());
  const Rational t2 = pow(inst.t, 2);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const Label& l = a.col_labels()[c];
    if (auto* vc = std::get_if<label::VertexCopy>(&l)) {
      a(vc->v - 1, c) = 1;
    } else if (auto* e = std::get_if<label::Edge>(&l)) {
      a(e->u - 1, c) = t2;
      a(e->v - 1, c) = t2;
    }
  }
  return a;
}

RatMatrix closed_form_projector(const ReductionInstance& inst,
                                const StructuredSelection& psi) {
  const int n = inst.graph.n();
  if (static_cast<int>(psi.psi.size()) != n) {
    throw PartialColoring("structured selection must cover every vertex");
  }
  // Block order: psi^-1(1), psi^-1(2), psi^-1(3), c1, c2, c3, eps.
  std::vector<Label> order;
  std::vector<int> klass;  // color class per position, 0 for eps
  std::vector<bool> is_vertex;
  int class_size[4] = {0, 0, 0, 0};
  for (int i = 1; i <= 3; ++i) {
    for (int v = 1; v <= n; ++v) {
      if (psi.psi[v - 1] == i) {
        order.emplace_back(label::Vertex{v});
        klass.push_back(i);
        is_vertex.push_back(true);
        ++class_size[i];
      }
    }
  }
  for (int i = 1; i <= 3; ++i) {
    order.emplace_back(label::ColorRow{i});
    klass.push_back(i);
    is_vertex.push_back(false);
  }
  order.emplace_back(label::Epsilon{});
  klass.push_back(0);
  is_vertex.push_back(false);
  if (static_cast<int>(order.size()) != n + 4) {
    throw PartialColoring("structured selection has a color outside 1..3");
  }

  const Rational t3 = pow(inst.t, 3);
  const Rational t6 = pow(inst.t, 6);
  Rational u[4];
  for (int i = 1; i <= 3; ++i) u[i] = 1 / (1 + class_size[i] * t6);

  RatMatrix block(order, order);
  for (std::size_t r = 0; r < order.size(); ++r) {
    for (std::size_t c = 0; c < order.size(); ++c) {
      if (klass[r] != klass[c]) continue;
      const int i = klass[r];
      if (i == 0) {
        block(r, c) = 1;
      } else if (is_vertex[r] && is_vertex[c]) {
        block(r, c) = u[i] * t6;
      } else if (is_vertex[r] != is_vertex[c]) {
        block(r, c) = -u[i] * t3;
      } else {
        block(r, c) = u[i];
      }
    }
  }
  const auto native = reduction_row_labels(n);
  return block.reordered(native, native);
}

std::vector<StructuredSelection> all_structured_selections(int n) {
  std::vector<StructuredSelection> out;
  std::vector<int> psi(n, 1);
  while (true) {
    out.push_back({psi});
    int i = n - 1;
    while (i >= 0 && psi[i] == 3) psi[i--] = 1;
    if (i < 0) break;
    ++psi[i];
  }
  return out;
}

std::optional<Graph> recognize_reduction(const RatMatrix& m) {
  if (m.rows() < 5) return std::nullopt;
  const int n = static_cast<int>(m.rows()) - 4;
  if (m.cols() <= static_cast<std::size_t>(3 * n)) return std::nullopt;
  Graph::EdgeList edges;
  for (std::size_t c = 3 * n; c < m.cols(); ++c) {
    auto* e = std::get_if<label::Edge>(&m.col_labels()[c]);
    if (!e) return std::nullopt;
    edges.emplace_back(e->u, e->v);
  }
  try {
    Graph g(n, edges);
    if (g.m() != static_cast<int>(edges.size())) return std::nullopt;
    if (build_instance(g).matrix != m) return std::nullopt;
    return g;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace cssp
