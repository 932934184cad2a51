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

#include <stdexcept>
#include <string>

namespace cssp {

// Base of every error raised by the library. The CLI maps subclasses to
// exit codes: resource caps exit 3, everything else exits 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class InvalidColumn : public Error {
 public:
  using Error::Error;
};

class DegenerateGraph : public Error {
 public:
  using Error::Error;
};

class EmptyEdgeSet : public Error {
 public:
  using Error::Error;
};

class PartialColoring : public Error {
 public:
  using Error::Error;
};

class NotAColoring : public Error {
 public:
  using Error::Error;
};

class IsAColoring : public Error {
 public:
  using Error::Error;
};

class HypothesisMismatch : public Error {
 public:
  using Error::Error;
};

class ModeUnavailable : public Error {
 public:
  using Error::Error;
};

// Raised when an enumeration would exceed the configured subset cap.
class CombinatorialBlowup : public Error {
 public:
  using Error::Error;
};

}  // namespace cssp
