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

// Command-line front end: reduce, decide, verify, check-lemmas, color,
// gen-corpus. Results go to stdout, diagnostics to stderr.
//
// Exit codes: 0 completed (whatever the decision), 2 input error,
// 3 enumeration cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cssp/errors.hpp"
#include "cssp/graph.hpp"
#include "cssp/instance_io.hpp"
#include "cssp/reduction.hpp"
#include "cssp/solvers.hpp"
#include "cssp/verifier.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cssp::ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw cssp::ValidationError("cannot write '" + path.string() + "'");
  }
  out << text;
}

std::string graph_name(const std::string& path) {
  return fs::path(path).stem().string();
}

cssp::Graph load_graph(const std::string& path) {
  return cssp::parse_graph(read_file(path));
}

int run_reduce(const std::string& input, const std::string& output) {
  const auto g = load_graph(input);
  if (g.m() == 0) {
    throw cssp::DegenerateGraph("reduction requires m ≥ 1");
  }
  const auto inst = cssp::build_instance(g);
  const std::string text = cssp::write_instance(inst);
  std::ostream& summary = output.empty() ? std::cerr : std::cout;
  if (output.empty()) {
    std::cout << text;
  } else {
    write_file(output, text);
  }
  summary << "n " << g.n() << "\nm " << g.m() << "\nt "
          << cssp::to_string(inst.t) << "\ntau_sq "
          << cssp::to_string(inst.tau_sq) << '\n';
  return 0;
}

int run_decide(const std::string& input, const std::string& mode_text,
               std::uint64_t cap) {
  const auto inst = cssp::read_instance(read_file(input));
  const auto mode = cssp::parse_solve_mode(mode_text);
  cssp::SolveReport report;
  switch (mode) {
    case cssp::SolveMode::kExactFull:
      report = cssp::exact_brute_force(inst.matrix, inst.k, inst.tau_sq, cap);
      break;
    case cssp::SolveMode::kExactStructured: {
      auto g = cssp::recognize_reduction(inst.matrix);
      if (!g || static_cast<std::size_t>(g->n()) != inst.k) {
        throw cssp::ModeUnavailable(
            "exact-structured needs an unmodified reduction instance");
      }
      report = cssp::exact_structured(inst);
      break;
    }
    case cssp::SolveMode::kGreedy:
      report = cssp::greedy_report(inst.matrix, inst.k, inst.tau_sq);
      std::cerr << "note: greedy is a float heuristic, not a certificate\n";
      break;
  }
  std::cout << cssp::format_report(report);
  return 0;
}

int run_verify(const std::string& input, const std::string& mode_text,
               std::uint64_t cap) {
  cssp::VerifyMode mode;
  if (mode_text == "full") {
    mode = cssp::VerifyMode::kFull;
  } else if (mode_text == "structured") {
    mode = cssp::VerifyMode::kStructured;
  } else {
    throw cssp::ParseError("verify mode must be 'full' or 'structured'");
  }
  const auto report =
      cssp::verify_theorem(load_graph(input), graph_name(input), mode, cap);
  std::cout << "colorable " << (*report.colorable ? "YES" : "NO") << '\n'
            << "decision " << (*report.decision ? "YES" : "NO") << '\n'
            << cssp::format_verification(report);
  return 0;
}

int run_check_lemmas(const std::string& input, std::uint64_t cap) {
  const auto report =
      cssp::check_all_lemmas(load_graph(input), graph_name(input), cap);
  std::cout << cssp::format_verification(report);
  return 0;
}

int run_color(const std::string& input) {
  const auto g = load_graph(input);
  const auto phi = cssp::three_color_backtracking(g);
  if (!phi) {
    std::cout << "no three-coloring\nVERDICT PASS\n";
    return 0;
  }
  std::cout << "coloring";
  for (int c : phi->color) std::cout << ' ' << c;
  std::cout << '\n'
            << "VERDICT " << (cssp::is_three_coloring(g, *phi) ? "PASS" : "FAIL")
            << '\n';
  return 0;
}

int run_gen_corpus(const std::string& output, std::uint64_t seed, int count) {
  const fs::path dir = output.empty() ? fs::path(".") : fs::path(output);
  fs::create_directories(dir);
  const std::pair<const char*, cssp::Graph> fixed[] = {
      {"k2", cssp::complete_graph(2)},   {"k3", cssp::complete_graph(3)},
      {"k4", cssp::complete_graph(4)},   {"p3", cssp::path_graph(3)},
      {"c5", cssp::cycle_graph(5)},      {"petersen", cssp::petersen_graph()},
  };
  for (const auto& [name, g] : fixed) {
    write_file(dir / (std::string(name) + ".col"), cssp::format_graph(g, name));
    std::cout << (dir / (std::string(name) + ".col")).string() << '\n';
  }
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const auto g = cssp::random_graph(4, 0.5, s);
    const std::string name = "random4_" + std::to_string(s);
    write_file(dir / (name + ".col"),
               cssp::format_graph(g, "G(4, 0.5) seed " + std::to_string(s)));
    std::cout << (dir / (name + ".col")).string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact column subset selection and the three-coloring reduction"};
  app.require_subcommand(1, 1);

  std::string input;
  std::string output;
  std::string mode;
  std::uint64_t cap = cssp::kDefaultEnumerationCap;
  std::uint64_t seed = 1;
  int count = 20;

  auto* reduce = app.add_subcommand("reduce", "Build the CSSP instance of a .col graph");
  reduce->add_option("-i,--input", input, "DIMACS .col graph")->required();
  reduce->add_option("-o,--output", output, "instance file (default stdout)");

  auto* decide = app.add_subcommand("decide", "Answer the CSSP decision question for an instance");
  decide->add_option("-i,--input", input, "instance file")->required();
  decide->add_option("--mode", mode, "exact-full | exact-structured | greedy")
      ->default_val("exact-full");
  decide->add_option("--cap", cap, "maximum number of subsets to enumerate");

  auto* verify = app.add_subcommand("verify", "Check colorability against the CSSP decision");
  verify->add_option("-i,--input", input, "DIMACS .col graph")->required();
  verify->add_option("--mode", mode, "full | structured")->default_val("full");
  verify->add_option("--cap", cap, "maximum number of subsets to enumerate");

  auto* lemmas = app.add_subcommand("check-lemmas", "Run every exact reduction check on a graph");
  lemmas->add_option("-i,--input", input, "DIMACS .col graph")->required();
  lemmas->add_option("--cap", cap, "maximum number of subsets to enumerate");

  auto* color = app.add_subcommand("color", "Find a three-coloring by backtracking");
  color->add_option("-i,--input", input, "DIMACS .col graph")->required();

  auto* corpus = app.add_subcommand("gen-corpus", "Write the standard test graphs");
  corpus->add_option("-o,--output", output, "output directory")->default_val(".");
  corpus->add_option("--seed", seed, "first seed for the random graphs");
  corpus->add_option("--count", count, "number of random G(4, 0.5) graphs")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*reduce) return run_reduce(input, output);
    if (*decide) return run_decide(input, mode, cap);
    if (*verify) return run_verify(input, mode, cap);
    if (*lemmas) return run_check_lemmas(input, cap);
    if (*color) return run_color(input);
    if (*corpus) return run_gen_corpus(output, seed, count);
  } catch (const cssp::CombinatorialBlowup& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
