// Copyright 2026 The Quasar Authors
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

#ifndef QUASAR_ERROR_HPP
#define QUASAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace quasar {

// Mirrors the quasar_status codes of the C API (see quasar.h).
enum class ErrorCode {
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kIo = 3,
  kParse = 4,
  kConfig = 5,
  kNumeric = 6,
  kFormat = 7,
  kCheckFailed = 8,
  kInternal = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace quasar

#endif  // QUASAR_ERROR_HPP
