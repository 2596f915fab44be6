// Copyright 2026 The kindc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KINDC_ERRORS_H_
#define KINDC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kindc {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 1-based line/column into a source text. Line 0 means "unknown".
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;

  std::string ToString() const;
  bool operator==(const SourcePos&) const = default;
};

// An error anchored at a source position. what() is "line:col: message".
class PositionedError : public Error {
 public:
  PositionedError(SourcePos pos, const std::string& message);
  const SourcePos& pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

// kind_store
class InvalidAssetError : public Error {
 public:
  using Error::Error;
};
class CycleError : public Error {
 public:
  using Error::Error;
};
class ConflictError : public Error {
 public:
  using Error::Error;
};

// canonical
class NoCanonicalTarget : public Error {
 public:
  using Error::Error;
};
class UnknownAssetError : public Error {
 public:
  using Error::Error;
};

// sidl_parser
class SyntaxError : public PositionedError {
 public:
  using PositionedError::PositionedError;
};
class UnknownKeyword : public PositionedError {
 public:
  using PositionedError::PositionedError;
};

// kinding
class UnboundIdentifier : public Error {
 public:
  using Error::Error;
};
class UnknownKind : public Error {
 public:
  using Error::Error;
};
class UndecidableContract : public Error {
 public:
  using Error::Error;
};

// bridge / codegen
class NoBridge : public Error {
 public:
  using Error::Error;
};
class UnrealizableConversion : public Error {
 public:
  using Error::Error;
};

// kb_format
class VersionMismatch : public PositionedError {
 public:
  using PositionedError::PositionedError;
};
class KbParseError : public PositionedError {
 public:
  using PositionedError::PositionedError;
};

}  // namespace kindc

#endif  // KINDC_ERRORS_H_
