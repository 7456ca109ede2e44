// Copyright 2026 The eb2dbc Authors
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

#ifndef EB2DBC_ERROR_HPP_
#define EB2DBC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace eb2dbc {

/// 1-based line/column inside one source unit. A zero line means "unknown".
struct SourcePos {
  int line = 0;
  int column = 0;

  bool known() const { return line > 0 && column > 0; }
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class ErrorKind {
  Lex,
  Parse,
  MissingInitialisation,
  UnresolvedIdentifier,
  MissingContext,
  DuplicateDeclaration,
  Xml,
  UnsupportedElement,
  Type,
  UnsupportedExpr,
  InitReadsState,
  MissingBinding,
  BindingViolatesAxioms,
  BadBinding,
  Eval,
  NotEnabled,
  StateSpaceExceeded,
  UnsupportedParameter,
  Io,
};

/// Stable diagnostic code for an error kind, e.g. "PARSE001".
const char* error_code(ErrorKind kind);

/// The single exception type thrown by every stage of the pipeline.
///
/// `subject` carries the offending name where one exists (an identifier,
/// a context name, an element name, a constant). `detail` carries the
/// second name of a pair, e.g. the axiom label for BindingViolatesAxioms
/// or the guard label for NotEnabled.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, SourcePos pos = {},
        std::string unit = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        pos_(pos),
        unit_(std::move(unit)) {}

  ErrorKind kind() const { return kind_; }
  const char* code() const { return error_code(kind_); }
  const SourcePos& pos() const { return pos_; }
  const std::string& unit() const { return unit_; }
  const std::string& subject() const { return subject_; }
  const std::string& detail() const { return detail_; }
  const std::vector<std::string>& expected() const { return expected_; }

  Error& with_unit(std::string unit) {
    if (unit_.empty()) unit_ = std::move(unit);
    return *this;
  }
  Error& with_subject(std::string s) {
    subject_ = std::move(s);
    return *this;
  }
  Error& with_detail(std::string d) {
    detail_ = std::move(d);
    return *this;
  }
  Error& with_expected(std::vector<std::string> e) {
    expected_ = std::move(e);
    return *this;
  }

 private:
  ErrorKind kind_;
  SourcePos pos_;
  std::string unit_;
  std::string subject_;
  std::string detail_;
  std::vector<std::string> expected_;
};

}  // namespace eb2dbc

#endif  // EB2DBC_ERROR_HPP_
