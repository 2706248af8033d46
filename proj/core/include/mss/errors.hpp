// Copyright 2026 The mss Authors
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

#ifndef MSS_ERRORS_HPP_
#define MSS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or binary input (wrong length, bad header, bad nibble).
class FormatError : public Error {
 public:
  using Error::Error;
};

// A character outside '0'..'8' where a digit was expected.
class DigitError : public Error {
 public:
  using Error::Error;
};

// A block or board lacks structure an operation relies on.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (bad label, bad mu parameters,
// board failing the required variant predicate).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not. Signals a bug or a false mathematical claim.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Group closure grew beyond its element cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace mss

#endif  // MSS_ERRORS_HPP_
