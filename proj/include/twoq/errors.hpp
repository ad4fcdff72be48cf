// Copyright 2026 The twoq Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace twoq {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: malformed JSON, non-unitary or non-Hermitian matrices,
/// out-of-range parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A formula was evaluated outside its domain (e.g. a square root of a
/// negative number that signals a Weyl-chamber violation).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An iterative search gave up. Carries the best residual it reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string &what, double best_residual)
      : Error(what), best_residual_(best_residual) {}

  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace twoq
