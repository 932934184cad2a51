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

#include <string>
#include <string_view>

#include "cssp/reduction.hpp"

namespace cssp {

// Text instance format, LF line endings:
//
//   cssp-instance v1
//   n <n> m <m> k <k>
//   t <p/q>
//   tau_sq <p/q>
//   <row label> <column label> <p/q>     one line per nonzero entry
//
// Entries are sorted by (row position, column position) in the canonical
// reduction order, so writing is deterministic.
std::string write_instance(const ReductionInstance& inst);

// Parses the format above. The graph is recovered from the edge column
// labels; the matrix is taken verbatim from the entry lines (it need not be
// the reduction of that graph). Throws ParseError or ValidationError.
ReductionInstance read_instance(std::string_view text);

}  // namespace cssp
