// Copyright 2026 The candidatesort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSORT_ERRORS_HPP_
#define CSORT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace csort {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A parameter is outside its documented range (n < 1, nu >= n, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// An element id is out of range.
class InvalidElement : public Error {
 public:
  using Error::Error;
};

// A pair (i, j) is degenerate (i == j) or out of range.
class InvalidPair : public Error {
 public:
  using Error::Error;
};

// The requested operation is not defined for these arguments
// (e.g. asymmetric ambiguity parameters).
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A corruption request asked for more two-cycles than the graph has.
class InsufficientTwoCycles : public Error {
 public:
  using Error::Error;
};

// The verification oracle ran out of budget on a fresh pair.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// The sorter stalled: candidate set and heap both empty. The input is not
// derivable from any ambiguity-bounded base graph for the given parameters.
class ModelViolation : public Error {
 public:
  using Error::Error;
};

// A round trace contains a nonpositive heap size.
class InvalidTrace : public Error {
 public:
  using Error::Error;
};

// An experiment trial produced an order that disagrees with ground truth.
class ExperimentAbort : public Error {
 public:
  using Error::Error;
};

// Malformed graph or config file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace csort

#endif  // CSORT_ERRORS_HPP_
