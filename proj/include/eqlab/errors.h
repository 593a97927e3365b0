// Copyright 2026 The Eqlab Authors
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

#ifndef EQLAB_ERRORS_H_
#define EQLAB_ERRORS_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace eqlab {

// Malformed or inconsistent input (bad dimensions, illegal coloring,
// unparseable file, ...).  CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource budget was exceeded (enumeration too large,
// game too big to materialize, ...).  CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant; indicates a bug.  CLI exit code 4.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

namespace internal {
inline std::string CheckMessage(const char* cond, const char* file, int line) {
  std::ostringstream oss;
  oss << "check failed: " << cond << " at " << file << ":" << line;
  return oss.str();
}
}  // namespace internal

#define EQLAB_CHECK(cond)                                      \
  do {                                                         \
    if (!(cond)) {                                             \
      throw ::eqlab::InternalError(                            \
          ::eqlab::internal::CheckMessage(#cond, __FILE__, __LINE__)); \
    }                                                          \
  } while (false)

}  // namespace eqlab

#endif  // EQLAB_ERRORS_H_
