// Copyright 2026 The solgeom Authors
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
#include <vector>

namespace solgeom {

/// Error categories. The numeric values are mirrored by the C API status codes.
enum class ErrorKind {
  Parse = 1,
  Domain = 2,
  InvalidArgument = 3,
  NotFound = 4,
  Config = 5,
  Geometry = 6,
  Precondition = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error at a byte offset of the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail);
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Evaluation left the domain of an elementary function; carries the printed subtree.
class DomainError : public Error {
 public:
  DomainError(std::string subtree, const std::string& detail)
      : Error(ErrorKind::Domain, detail + " in '" + subtree + "'"), subtree_(std::move(subtree)) {}
  const std::string& subtree() const noexcept { return subtree_; }

 private:
  std::string subtree_;
};

/// Schema violation while reading a JSON configuration; `pointer` is a JSON pointer.
class ConfigError : public Error {
 public:
  ConfigError(std::string pointer, const std::string& detail)
      : Error(ErrorKind::Config, (pointer.empty() ? std::string("/") : pointer) + ": " + detail),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace solgeom
