// Copyright 2026 The listcap Authors
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

namespace listcap {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// A file or JSON payload could not be interpreted.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// A probability vector has a negative entry or does not sum to one.
class NonStochasticRowError : public Error {
  public:
    using Error::Error;
};

/// A matrix that must be Hermitian is not, beyond tolerance.
class NotHermitianError : public Error {
  public:
    using Error::Error;
};

/// A matrix that must be positive semidefinite has an eigenvalue below
/// the rejection threshold.
class NotPositiveSemidefiniteError : public Error {
  public:
    using Error::Error;
};

/// A density matrix whose trace differs from one beyond tolerance.
class TraceNotOneError : public Error {
  public:
    using Error::Error;
};

/// Operands have incompatible sizes or dimensions.
class DimensionMismatchError : public Error {
  public:
    using Error::Error;
};

/// Classical and quantum objects were mixed in one computation.
class VariantMismatchError : public Error {
  public:
    using Error::Error;
};

/// An exact enumeration would exceed the configured budget.
class BudgetExceededError : public Error {
  public:
    using Error::Error;
};

/// A divergence required to be finite is infinite (support violation).
class InfiniteDivergenceError : public Error {
  public:
    using Error::Error;
};

/// A caller-supplied argument violates a documented precondition.
class InvalidArgumentError : public Error {
  public:
    using Error::Error;
};

} // namespace listcap
