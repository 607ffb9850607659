// Copyright 2026 The qentropy Authors
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

#ifndef QENTROPY_ERRORS_HPP
#define QENTROPY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// A Choi matrix with a significantly negative eigenvalue.
class NotCompletelyPositive : public Error {
 public:
  using Error::Error;
};

class NotTracePreserving : public Error {
 public:
  using Error::Error;
};

class NotBistochastic : public Error {
 public:
  using Error::Error;
};

class NonSquareChannel : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; the message names the line, column or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qent

#endif  // QENTROPY_ERRORS_HPP
