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

#include "cssp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

#include "cssp/errors.hpp"
#include "cssp/linalg.hpp"

namespace cssp {

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::kExactFull:
      return "exact-full";
    case SolveMode::kExactStructured:
      return "exact-structured";
    case SolveMode::kGreedy:
      return "greedy";
  }
  return "?";
}

SolveMode parse_solve_mode(std::string_view text) {
  if (text == "exact-full") return SolveMode::kExactFull;
  if (text == "exact-structured") return SolveMode::kExactStructured;
  if (text == "greedy") return SolveMode::kGreedy;
  throw ParseError("unknown mode '" + std::string(text) + "'");
}

std::string format_report(const SolveReport& report) {
  std::ostringstream out;
  out << "decision " << (report.decision ? "YES" : "NO") << '\n';
  if (report.mode == SolveMode::kGreedy) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", report.delta_sq_float);
    out << "delta_sq " << buf << '\n' << "delta_sq_kind float\n";
  } else {
    out << "delta_sq " << to_string(report.delta_sq) << '\n';
    out << "delta_sq_kind "
        << (report.delta_is_upper_bound() ? "upper-bound" : "exact") << '\n';
  }
  out << "selection";
  for (const auto& l : report.best_selection.labels) {
    out << ' ' << to_string(l);
  }
  out << '\n';
  out << "subsets " << report.subsets_examined << '\n';
  out << "mode " << to_string(report.mode) << '\n';
  return out.str();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

SolveReport exact_brute_force(const RatMatrix& m, std::size_t k,
                              const Rational& tau_sq, std::uint64_t cap) {
  const std::size_t c = m.cols();
  if (k < 1 || k > c) {
    throw DimensionMismatch("selection size " + std::to_string(k) +
                            " outside 1.." + std::to_string(c));
  }
  const std::uint64_t total = binomial(c, k);
  if (total > cap) {
    throw CombinatorialBlowup("C(" + std::to_string(c) + "," +
                              std::to_string(k) + ") subsets exceed the cap " +
                              std::to_string(cap) + "; raise --cap or use "
                              "exact-structured");
  }
  SolveReport report;
  report.mode = SolveMode::kExactFull;
  std::vector<std::size_t> sel(k);
  std::iota(sel.begin(), sel.end(), 0);
  bool have_best = false;
  while (true) {
    Rational r = projection_residual_sq(m, sel);
    ++report.subsets_examined;
    if (!have_best || r < report.delta_sq) {
      report.delta_sq = std::move(r);
      report.best_positions = sel;
      have_best = true;
    }
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && sel[i - 1] == c - k + i - 1) --i;
    if (i == 0) break;
    ++sel[i - 1];
    for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
  }
  report.best_selection = selection_from_positions(m, report.best_positions);
  report.decision = report.delta_sq <= tau_sq;
  return report;
}

SolveReport exact_structured(const ReductionInstance& inst) {
  SolveReport report;
  report.mode = SolveMode::kExactStructured;
  bool have_best = false;
  for (const auto& psi : all_structured_selections(inst.graph.n())) {
    auto sel = structured_to_selection(psi);
    auto pos = selection_positions(inst.matrix, sel);
    Rational r = projection_residual_sq(inst.matrix, pos);
    ++report.subsets_examined;
    if (!have_best || r < report.delta_sq ||
        (r == report.delta_sq && pos < report.best_positions)) {
      report.delta_sq = std::move(r);
      report.best_positions = std::move(pos);
      report.best_selection = std::move(sel);
      have_best = true;
    }
  }
  report.decision = report.delta_sq <= inst.tau_sq;
  return report;
}

FloatMatrix FloatMatrix::from(const RatMatrix& m) {
  FloatMatrix out{m.rows(), m.cols(), {}};
  out.data.reserve(m.rows() * m.cols());
  for (const auto& x : m.entries()) out.data.push_back(x.get_d());
  return out;
}

GreedyResult greedy_forward(const FloatMatrix& m, std::size_t k) {
  if (k > m.cols) {
    throw DimensionMismatch("greedy: k exceeds column count");
  }
  const std::size_t r = m.rows;
  // residual[c] is column c with the current span projected out.
  std::vector<std::vector<double>> residual(m.cols, std::vector<double>(r));
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (std::size_t i = 0; i < r; ++i) residual[c][i] = m(i, c);
  }
  auto dot = [r](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < r; ++i) s += a[i] * b[i];
    return s;
  };
  auto total_sq = [&] {
    double s = 0.0;
    for (const auto& col : residual) s += dot(col, col);
    return s;
  };

  GreedyResult out;
  std::vector<bool> used(m.cols, false);
  double current = total_sq();
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t best = m.cols;
    double best_gain = -1.0;
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (used[j]) continue;
      ++out.candidates_evaluated;
      const double norm_sq = dot(residual[j], residual[j]);
      double gain = 0.0;
      if (norm_sq > 0.0) {
        for (const auto& col : residual) {
          const double d = dot(residual[j], col);
          gain += d * d;
        }
        gain /= norm_sq;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = j;
      }
    }
    used[best] = true;
    out.selection.push_back(best);
    const double norm_sq = dot(residual[best], residual[best]);
    if (norm_sq > 0.0) {
      std::vector<double> q = residual[best];
      const double inv = 1.0 / std::sqrt(norm_sq);
      for (auto& x : q) x *= inv;
      for (auto& col : residual) {
        const double d = dot(q, col);
        for (std::size_t i = 0; i < r; ++i) col[i] -= d * q[i];
      }
    }
    current = total_sq();
  }
  out.residual_sq = current;
  return out;
}

SolveReport greedy_report(const RatMatrix& m, std::size_t k,
                          const Rational& tau_sq) {
  auto g = greedy_forward(FloatMatrix::from(m), k);
  SolveReport report;
  report.mode = SolveMode::kGreedy;
  report.delta_sq_float = g.residual_sq;
  report.best_positions = g.selection;
  std::sort(report.best_positions.begin(), report.best_positions.end());
  report.best_selection = selection_from_positions(m, report.best_positions);
  report.subsets_examined = g.candidates_evaluated;
  report.decision = g.residual_sq <= tau_sq.get_d();
  return report;
}

bool decide_cssp(const RatMatrix& m, std::size_t k, const Rational& tau_sq,
                 SolveMode mode, std::uint64_t cap) {
  switch (mode) {
    case SolveMode::kExactFull:
      return exact_brute_force(m, k, tau_sq, cap).decision;
    case SolveMode::kExactStructured: {
      auto g = recognize_reduction(m);
      if (!g || static_cast<std::size_t>(g->n()) != k) {
        throw ModeUnavailable(
            "exact-structured needs a reduction matrix with k = n");
      }
      ReductionInstance inst = build_instance(*g);
      inst.tau_sq = tau_sq;
      return exact_structured(inst).decision;
    }
    case SolveMode::kGreedy:
      break;
  }
  throw ModeUnavailable("greedy is a heuristic and cannot decide CSSP");
}

}  // namespace cssp
