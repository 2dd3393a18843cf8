// Copyright 2026 The qcp Authors
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

#ifndef QCP_CORE_ERRORS_HPP
#define QCP_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcp {

// Error classes. Kept in sync with the qcp_status codes of the C API and
// with the CLI exit codes (value + 1).
enum class ErrorCode {
  invalid_argument = 1,  // bad parameters, malformed config
  missing_artifact = 2,  // upstream stage output not present
  capability = 3,        // request exceeds a backend limit
  io = 4,                // filesystem failure
  format = 5,            // bad magic / version / truncated payload
  numeric = 6,           // integration blowup, non-convergence
  provenance = 7,        // input hash mismatch
  degenerate_input = 8,  // e.g. all clustering points identical, exact tie
  internal = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::missing_artifact: return "missing_artifact";
    case ErrorCode::capability: return "capability";
    case ErrorCode::io: return "io";
    case ErrorCode::format: return "format";
    case ErrorCode::numeric: return "numeric";
    case ErrorCode::provenance: return "provenance";
    case ErrorCode::degenerate_input: return "degenerate_input";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qcp

#endif
