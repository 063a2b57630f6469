// Copyright 2026 The Barrier Coverage Authors
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

#ifndef BARRIER_ERRORS_HPP_
#define BARRIER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace barrier {

// Root of every error thrown by this library. A solver that merely finds no
// solution returns an empty optional instead of throwing.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: mismatched lengths, empty instance where one is required,
// non-positive radius.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation precondition does not hold (e.g. non-integral input to an
// integer solver, eps <= 0).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The barrier is not (or cannot be) covered.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A search was cut off by a configured cap. Never means "no solution".
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Exact arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace barrier

#endif  // BARRIER_ERRORS_HPP_
