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

#include "cssp/instance_io.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "cssp/errors.hpp"

namespace cssp {

std::string write_instance(const ReductionInstance& inst) {
  std::ostringstream out;
  out << "cssp-instance v1\n";
  out << "n " << inst.graph.n() << " m " << inst.graph.m() << " k " << inst.k
      << '\n';
  out << "t " << to_string(inst.t) << '\n';
  out << "tau_sq " << to_string(inst.tau_sq) << '\n';
  const RatMatrix& m = inst.matrix;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (is_zero(m(r, c))) continue;
      out << to_string(m.row_labels()[r]) << ' '
          << to_string(m.col_labels()[c]) << ' ' << to_string(m(r, c))
          << '\n';
    }
  }
  return out.str();
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long to_long(std::string_view tok, std::string_view what) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("instance: bad " + std::string(what) + " '" +
                     std::string(tok) + "'");
  }
  return v;
}

}  // namespace

ReductionInstance read_instance(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.size() < 4 || lines[0] != "cssp-instance v1") {
    throw ParseError("instance: missing 'cssp-instance v1' header");
  }
  auto dims = words(lines[1]);
  if (dims.size() != 6 || dims[0] != "n" || dims[2] != "m" || dims[4] != "k") {
    throw ParseError("instance: expected 'n <n> m <m> k <k>' on line 2");
  }
  const long n = to_long(dims[1], "n");
  const long m = to_long(dims[3], "m");
  const long k = to_long(dims[5], "k");
  if (n < 1 || m < 1 || k < 1) {
    throw ValidationError("instance: n, m and k must be positive");
  }
  auto t_line = words(lines[2]);
  auto tau_line = words(lines[3]);
  if (t_line.size() != 2 || t_line[0] != "t") {
    throw ParseError("instance: expected 't <p/q>' on line 3");
  }
  if (tau_line.size() != 2 || tau_line[0] != "tau_sq") {
    throw ParseError("instance: expected 'tau_sq <p/q>' on line 4");
  }

  struct Entry {
    Label row;
    Label col;
    Rational value;
  };
  std::vector<Entry> entries;
  std::set<std::pair<int, int>> edge_set;
  for (std::size_t i = 4; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto w = words(lines[i]);
    if (w.size() != 3) {
      throw ParseError("instance line " + std::to_string(i + 1) +
                       ": expected '<row> <col> <value>'");
    }
    Entry e{parse_label(w[0]), parse_label(w[1]), parse_rational(w[2])};
    if (auto* edge = std::get_if<label::Edge>(&e.col)) {
      edge_set.emplace(edge->u, edge->v);
    }
    entries.push_back(std::move(e));
  }
  if (static_cast<long>(edge_set.size()) != m) {
    throw ValidationError("instance: header says m = " + std::to_string(m) +
                          " but entries name " +
                          std::to_string(edge_set.size()) + " edge columns");
  }

  Graph g(static_cast<int>(n),
          Graph::EdgeList(edge_set.begin(), edge_set.end()));
  RatMatrix matrix(reduction_row_labels(g.n()), reduction_col_labels(g));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& e : entries) {
    auto r = matrix.find_row(e.row);
    auto c = matrix.find_col(e.col);
    if (!r || !c) {
      throw ValidationError("instance: entry at " + to_string(e.row) + " " +
                            to_string(e.col) + " lies outside the matrix");
    }
    if (!seen.emplace(*r, *c).second) {
      throw ValidationError("instance: duplicate entry at " +
                            to_string(e.row) + " " + to_string(e.col));
    }
    matrix(*r, *c) = std::move(e.value);
  }
  return {std::move(g), std::move(matrix), static_cast<std::size_t>(k),
          parse_rational(t_line[1]), parse_rational(tau_line[1])};
}

}  // namespace cssp
