// Copyright 2026 The quasibell Authors
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

#ifndef QUASIBELL_ERRORS_HPP_
#define QUASIBELL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace quasibell {

// Inconsistent shapes or labels between model components.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Setting or hidden value not present in a table.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Request exceeds the supported enumeration size.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed input document; the message names the offending location.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quasibell

#endif  // QUASIBELL_ERRORS_HPP_
