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

#include "cssp/verifier.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "cssp/errors.hpp"
#include "cssp/linalg.hpp"

namespace cssp {

bool VerificationReport::passed() const {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

void VerificationReport::append(VerificationReport other) {
  for (auto& r : other.records) records.push_back(std::move(r));
  if (other.colorable) colorable = other.colorable;
  if (other.decision) decision = other.decision;
}

std::string format_verification(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& r : report.records) {
    out << "CHECK " << r.name << ' ' << r.graph << ' '
        << (r.pass ? "PASS" : "FAIL") << " lhs=" << to_string(r.lhs)
        << " rhs=" << to_string(r.rhs) << '\n';
  }
  out << "VERDICT " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

std::string digits(const std::vector<int>& colors) {
  std::string s;
  for (int c : colors) s += static_cast<char>('0' + c);
  return s;
}

std::string describe(const ColumnSelection& sel) {
  std::string s;
  for (const auto& l : sel.labels) {
    if (!s.empty()) s += ',';
    s += to_string(l);
  }
  return s;
}

bool has_edge_column(const ColumnSelection& sel) {
  return std::any_of(sel.labels.begin(), sel.labels.end(), [](const Label& l) {
    return std::holds_alternative<label::Edge>(l);
  });
}

bool covers_every_vertex(int n, const ColumnSelection& sel) {
  std::vector<bool> seen(n, false);
  for (const auto& l : sel.labels) {
    if (auto* vc = std::get_if<label::VertexCopy>(&l)) seen[vc->v - 1] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Rational residual_of(const ReductionInstance& inst,
                     const ColumnSelection& sel) {
  return projection_residual_sq(inst.matrix,
                                selection_positions(inst.matrix, sel));
}

// Visits every k-subset of 0..c-1 in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t c, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> sel(k);
  std::iota(sel.begin(), sel.end(), 0);
  while (true) {
    visit(sel);
    std::size_t i = k;
    while (i > 0 && sel[i - 1] == c - k + i - 1) --i;
    if (i == 0) return;
    ++sel[i - 1];
    for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
  }
}

void require_under_cap(const ReductionInstance& inst, std::uint64_t cap) {
  const auto total = binomial(inst.matrix.cols(), inst.k);
  if (total > cap) {
    throw CombinatorialBlowup("C(" + std::to_string(inst.matrix.cols()) +
                              "," + std::to_string(inst.k) +
                              ") selections exceed the cap " +
                              std::to_string(cap));
  }
}

}  // namespace

VerificationReport verify_theorem(const Graph& g, const std::string& name,
                                  VerifyMode mode, std::uint64_t cap) {
  const auto inst = build_instance(g);
  const bool colorable = three_color_backtracking(g).has_value();
  const SolveReport solved =
      mode == VerifyMode::kFull
          ? exact_brute_force(inst.matrix, inst.k, inst.tau_sq, cap)
          : exact_structured(inst);
  VerificationReport report;
  report.colorable = colorable;
  report.decision = solved.decision;
  report.records.push_back(
      {mode == VerifyMode::kFull ? "colorable-iff-below-threshold-full"
                                 : "colorable-iff-below-threshold-structured",
       name, describe(solved.best_selection), solved.delta_sq, inst.tau_sq,
       colorable == solved.decision});
  return report;
}

CheckRecord check_uncovered_vertex(const ReductionInstance& inst,
                                   const std::string& name,
                                   const ColumnSelection& sel) {
  if (has_edge_column(sel) || covers_every_vertex(inst.graph.n(), sel)) {
    throw HypothesisMismatch(
        "uncovered-vertex check needs a selection with no edge column that "
        "misses every copy of some vertex");
  }
  Rational r = residual_of(inst, sel);
  const bool pass = r >= 3 && r > inst.tau_sq;
  return {"uncovered-vertex", name, describe(sel), std::move(r), Rational(3),
          pass};
}

CheckRecord check_edge_selection(const ReductionInstance& inst,
                                 const std::string& name,
                                 const ColumnSelection& sel) {
  if (!has_edge_column(sel)) {
    throw HypothesisMismatch("edge check needs a selection with an edge column");
  }
  Rational r = residual_of(inst, sel);
  const bool pass = r > inst.tau_sq;
  return {"edge-column", name, describe(sel), std::move(r), inst.tau_sq,
          pass};
}

CheckRecord check_edge_columns(const ReductionInstance& inst,
                               const std::string& name, std::uint64_t cap) {
  require_under_cap(inst, cap);
  const auto first_edge = static_cast<std::size_t>(3 * inst.graph.n());
  std::optional<Rational> smallest;
  std::uint64_t count = 0;
  for_each_subset(inst.matrix.cols(), inst.k, [&](const auto& pos) {
    if (pos.back() < first_edge) return;
    ++count;
    Rational r = projection_residual_sq(inst.matrix, pos);
    if (!smallest || r < *smallest) smallest = std::move(r);
  });
  CheckRecord rec{"edge-columns-exhaustive", name,
                  std::to_string(count) + " selections",
                  smallest.value_or(Rational(0)), inst.tau_sq, false};
  rec.pass = smallest.has_value() && rec.lhs > rec.rhs;
  return rec;
}

CheckRecord check_witness(const ReductionInstance& inst,
                          const std::string& name, const Coloring& phi) {
  const RatMatrix a = witness_A(inst, phi);
  const ColumnSelection sel = coloring_to_selection(inst.graph, phi);
  // Rows of A are ordered by vertex; take S's columns in the same order.
  std::vector<std::size_t> by_vertex;
  for (const auto& l : a.row_labels()) {
    by_vertex.push_back(*inst.matrix.find_col(l));
  }
  const RatMatrix s = inst.matrix.select_columns(by_vertex);
  Rational lhs = frobenius_sq(inst.matrix - matmul(s, a));
  const bool optimal_ok = residual_of(inst, sel) <= inst.tau_sq;
  const bool pass = lhs == inst.tau_sq && optimal_ok;
  return {"witness-equality", name, "phi=" + digits(phi.color), std::move(lhs),
          inst.tau_sq, pass};
}

CheckRecord check_non_coloring_bound(const ReductionInstance& inst,
                                     const std::string& name,
                                     const StructuredSelection& psi) {
  if (is_three_coloring(inst.graph, Coloring{psi.psi})) {
    throw IsAColoring("psi=" + digits(psi.psi) + " is a proper coloring");
  }
  Rational r = residual_of(inst, structured_to_selection(psi));
  const Rational bound = lower_bound_sq(inst.graph.n(), inst.graph.m(), inst.t);
  const bool pass = r >= bound && bound > inst.tau_sq;
  return {"non-coloring-bound", name, "psi=" + digits(psi.psi), std::move(r),
          bound, pass};
}

CheckRecord check_projector_formula(const ReductionInstance& inst,
                                    const std::string& name,
                                    const StructuredSelection& psi) {
  const auto pos = selection_positions(inst.matrix, structured_to_selection(psi));
  const RatMatrix direct =
      complement_projector(inst.matrix.select_columns(pos));
  const RatMatrix closed = closed_form_projector(inst, psi);
  const RatMatrix diff = closed - direct;
  const bool symmetric = direct.transpose().unlabeled() == direct.unlabeled();
  const bool idempotent = matmul(direct, direct) == direct;
  const bool pass = closed == direct && symmetric && idempotent;
  return {"projector-closed-form", name, "psi=" + digits(psi.psi),
          frobenius_sq(diff), Rational(0), pass};
}

CheckRecord check_bound_exceeds_threshold(int n, int m,
                                          const std::string& name) {
  const Rational t = compute_t(n, m);
  Rational lb = lower_bound_sq(n, m, t);
  Rational tau = threshold_sq(n, m, t);
  const bool pass = lb > tau;
  return {"bound-exceeds-threshold", name,
          "n=" + std::to_string(n) + ",m=" + std::to_string(m), std::move(lb),
          std::move(tau), pass};
}

std::string_view to_string(SelectionClass c) {
  switch (c) {
    case SelectionClass::kColoring:
      return "coloring";
    case SelectionClass::kNonColoring:
      return "non-coloring";
    case SelectionClass::kEdgeContaining:
      return "edge-containing";
    case SelectionClass::kVertexUncovered:
      return "vertex-uncovered";
  }
  return "?";
}

SelectionClass classify_selection(const ReductionInstance& inst,
                                  const ColumnSelection& sel) {
  if (has_edge_column(sel)) return SelectionClass::kEdgeContaining;
  const int n = inst.graph.n();
  if (!covers_every_vertex(n, sel)) return SelectionClass::kVertexUncovered;
  auto psi = selection_to_structured(n, sel);
  if (!psi) {
    // n vertex copies covering n vertices is always one copy each.
    throw HypothesisMismatch("selection of size " +
                             std::to_string(sel.labels.size()) +
                             " covers every vertex but is not structured");
  }
  return is_three_coloring(inst.graph, Coloring{psi->psi})
             ? SelectionClass::kColoring
             : SelectionClass::kNonColoring;
}

VerificationReport check_selection_space(const ReductionInstance& inst,
                                         const std::string& name,
                                         std::uint64_t cap) {
  require_under_cap(inst, cap);
  const Rational lb =
      lower_bound_sq(inst.graph.n(), inst.graph.m(), inst.t);
  struct Tally {
    std::uint64_t count = 0;
    std::optional<Rational> extreme;  // max for colorings, min otherwise
    bool ok = true;
  };
  std::array<Tally, 4> tally{};
  for_each_subset(inst.matrix.cols(), inst.k, [&](const auto& pos) {
    const auto sel = selection_from_positions(inst.matrix, pos);
    const auto cls = classify_selection(inst, sel);
    Rational r = projection_residual_sq(inst.matrix, pos);
    Tally& t = tally.at(static_cast<std::size_t>(cls));
    ++t.count;
    bool ok = false;
    switch (cls) {
      case SelectionClass::kColoring:
        ok = r <= inst.tau_sq;
        break;
      case SelectionClass::kNonColoring:
        ok = r >= lb && lb > inst.tau_sq;
        break;
      case SelectionClass::kEdgeContaining:
        ok = r > inst.tau_sq;
        break;
      case SelectionClass::kVertexUncovered:
        ok = r >= 3 && r > inst.tau_sq;
        break;
    }
    t.ok = t.ok && ok;
    const bool take_max = cls == SelectionClass::kColoring;
    if (!t.extreme || (take_max ? r > *t.extreme : r < *t.extreme)) {
      t.extreme = std::move(r);
    }
  });

  VerificationReport report;
  const Rational rhs[4] = {inst.tau_sq, lb, inst.tau_sq, Rational(3)};
  for (int c = 0; c < 4; ++c) {
    report.records.push_back(
        {"selection-class-" +
             std::string(to_string(static_cast<SelectionClass>(c))),
         name, std::to_string(tally[c].count) + " selections",
         tally[c].extreme.value_or(Rational(0)), rhs[c], tally[c].ok});
  }
  return report;
}

VerificationReport check_all_lemmas(const Graph& g, const std::string& name,
                                    std::uint64_t cap) {
  const auto inst = build_instance(g);
  VerificationReport report;

  std::uint64_t structured_count = 1;
  for (int i = 0; i < g.n() && structured_count <= cap; ++i) {
    structured_count *= 3;
  }
  if (structured_count <= cap) {
    const auto all_psi = all_structured_selections(g.n());
    // The closed form is checked against the direct projector first.
    for (const auto& psi : all_psi) {
      report.records.push_back(check_projector_formula(inst, name, psi));
    }
    for (const auto& psi : all_psi) {
      if (is_three_coloring(g, Coloring{psi.psi})) {
        report.records.push_back(check_witness(inst, name, Coloring{psi.psi}));
      } else {
        report.records.push_back(check_non_coloring_bound(inst, name, psi));
      }
    }
  }
  report.records.push_back(check_bound_exceeds_threshold(g.n(), g.m(), name));
  if (binomial(inst.matrix.cols(), inst.k) <= cap) {
    report.records.push_back(check_edge_columns(inst, name, cap));
    report.append(check_selection_space(inst, name, cap));
  }
  return report;
}

}  // namespace cssp
