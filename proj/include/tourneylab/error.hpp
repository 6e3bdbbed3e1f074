// Copyright 2026 The tourneylab Authors
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
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tourneylab {

using Vertex = std::uint32_t;

// Error families. The CLI maps each family to its own exit code.
enum class ErrorKind {
  kMalformedMatrix,
  kDiagonalNonzero,
  kPairViolation,
  kParse,
  kSubsetOutOfRange,
  kTooLarge,
  kBadParams,
  kEmptyPart,
  kIo,
  kBadConfig,
  kInvalidCertificate,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class MalformedMatrix : public Error {
 public:
  explicit MalformedMatrix(const std::string& what)
      : Error(ErrorKind::kMalformedMatrix, "malformed matrix: " + what) {}
};

class DiagonalNonzero : public Error {
 public:
  explicit DiagonalNonzero(Vertex v)
      : Error(ErrorKind::kDiagonalNonzero,
              "diagonal entry (" + std::to_string(v) + "," +
                  std::to_string(v) + ") is nonzero"),
        vertex(v) {}
  Vertex vertex;
};

class PairViolation : public Error {
 public:
  PairViolation(Vertex i_in, Vertex j_in)
      : Error(ErrorKind::kPairViolation,
              "pair (" + std::to_string(i_in) + "," + std::to_string(j_in) +
                  ") must be oriented exactly one way"),
        i(i_in),
        j(j_in) {}
  Vertex i;
  Vertex j;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line_in, const std::string& what)
      : Error(ErrorKind::kParse,
              "line " + std::to_string(line_in) + ": " + what),
        line(line_in) {}
  std::size_t line;
};

class SubsetOutOfRange : public Error {
 public:
  SubsetOutOfRange(Vertex v, std::size_t n)
      : Error(ErrorKind::kSubsetOutOfRange,
              "vertex " + std::to_string(v) + " outside universe of size " +
                  std::to_string(n)),
        vertex(v) {}
  Vertex vertex;
};

class TooLarge : public Error {
 public:
  TooLarge(std::size_t n_in, std::size_t limit)
      : Error(ErrorKind::kTooLarge,
              "n = " + std::to_string(n_in) + " exceeds limit " +
                  std::to_string(limit)),
        n(n_in) {}
  std::size_t n;
};

class BadParams : public Error {
 public:
  explicit BadParams(const std::string& what)
      : Error(ErrorKind::kBadParams, "bad parameters: " + what) {}
};

class EmptyPart : public Error {
 public:
  explicit EmptyPart(const std::string& which)
      : Error(ErrorKind::kEmptyPart, "sample misses part " + which) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what)
      : Error(ErrorKind::kIo, "io: " + what) {}
};

class BadConfig : public Error {
 public:
  explicit BadConfig(const std::string& what)
      : Error(ErrorKind::kBadConfig, "bad config: " + what) {}
};

class InvalidCertificate : public Error {
 public:
  InvalidCertificate(std::size_t position_in, const std::string& what)
      : Error(ErrorKind::kInvalidCertificate,
              "invalid certificate at position " +
                  std::to_string(position_in) + ": " + what),
        position(position_in) {}
  std::size_t position;
};

}  // namespace tourneylab
