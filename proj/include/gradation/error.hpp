// Copyright 2026 The Gradation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradation {

// Error classes map one-to-one onto CLI exit codes.
enum class ErrorKind {
  kInvalidInput = 1,
  kDisconnected = 2,
  kInvariantViolation = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::kInvalidInput, what) {}
};

// Malformed graph text; line is 1-based, 0 when not attributable to a line.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput(line == 0 ? what
                               : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedGraph : public Error {
 public:
  explicit DisconnectedGraph(const std::string& what)
      : Error(ErrorKind::kDisconnected, what) {}
};

class UnreachablePair : public InvalidInput {
 public:
  UnreachablePair(std::size_t u, std::size_t v)
      : InvalidInput("vertices " + std::to_string(u) + " and " +
                     std::to_string(v) + " are mutually unreachable") {}
};

// Raised when a solver run contradicts a property the algorithm guarantees;
// always indicates a bug rather than bad input.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what)
      : Error(ErrorKind::kInvariantViolation, what) {}
};

}  // namespace gradation
