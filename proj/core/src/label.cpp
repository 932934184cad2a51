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

#include "cssp/label.hpp"

#include <charconv>
#include <utility>

#include "cssp/errors.hpp"

namespace cssp {

Label make_edge(int a, int b) {
  if (a > b) std::swap(a, b);
  return label::Edge{a, b};
}

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

[[noreturn]] void bad_label(std::string_view text) {
  throw ParseError("malformed label '" + std::string(text) + "'");
}

int parse_positive(std::string_view digits, std::string_view whole,
                   int minimum = 1) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      value < minimum) {
    bad_label(whole);
  }
  return value;
}

}  // namespace

std::string to_string(const Label& l) {
  return std::visit(
      Overloaded{
          [](const label::Index& x) { return "#" + std::to_string(x.value); },
          [](const label::Vertex& x) { return "v" + std::to_string(x.v); },
          [](const label::ColorRow& x) {
            return "c" + std::to_string(x.color);
          },
          [](const label::Epsilon&) { return std::string("eps"); },
          [](const label::VertexCopy& x) {
            return "v" + std::to_string(x.v) + "^" + std::to_string(x.color);
          },
          [](const label::Edge& x) {
            return "e" + std::to_string(x.u) + "_" + std::to_string(x.v);
          },
      },
      l);
}

Label parse_label(std::string_view text) {
  if (text == "eps") return label::Epsilon{};
  if (text.size() < 2) bad_label(text);
  std::string_view rest = text.substr(1);
  switch (text.front()) {
    case '#':
      return label::Index{
          static_cast<std::size_t>(parse_positive(rest, text, 0))};
    case 'c': {
      int color = parse_positive(rest, text);
      if (color > 3) bad_label(text);
      return label::ColorRow{color};
    }
    case 'v': {
      auto caret = rest.find('^');
      if (caret == std::string_view::npos) {
        return label::Vertex{parse_positive(rest, text)};
      }
      int v = parse_positive(rest.substr(0, caret), text);
      int color = parse_positive(rest.substr(caret + 1), text);
      if (color > 3) bad_label(text);
      return label::VertexCopy{v, color};
    }
    case 'e': {
      auto sep = rest.find('_');
      if (sep == std::string_view::npos) bad_label(text);
      int u = parse_positive(rest.substr(0, sep), text);
      int v = parse_positive(rest.substr(sep + 1), text);
      if (u >= v) bad_label(text);
      return label::Edge{u, v};
    }
    default:
      bad_label(text);
  }
}

}  // namespace cssp
