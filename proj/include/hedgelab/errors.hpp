// Copyright 2026 The hedgelab Authors.
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

#ifndef HEDGELAB_ERRORS_HPP_
#define HEDGELAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hedgelab {

// Base of every error raised by the C++ core. The C API maps each subclass
// onto one hl_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument: learning rate, switch probability, counts, q vectors.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A loss outside [0, H].
class BoundsViolation : public Error {
 public:
  using Error::Error;
};

// Duplicate reveal, reveal from the future, out-of-order rounds.
class ProtocolViolation : public Error {
 public:
  using Error::Error;
};

// Enumeration too large for the brute-force oracle.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. `line` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, long line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hedgelab

#endif  // HEDGELAB_ERRORS_HPP_
