// Copyright 2026 The trotterz Authors
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

#ifndef TROTTERZ_ERRORS_HPP
#define TROTTERZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trotterz {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad sizes, out-of-range parameters, invalid documents.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operator dimension exceeds the configured dense cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A numerical contract failed (hermiticity, unitarity, admissibility, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An eigenphase sits too close to -pi for a principal logarithm.
class BranchCutError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace trotterz

#endif
