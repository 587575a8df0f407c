/*
 * Copyright 2026 The modman Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MODMAN_ERRORS_HPP
#define MODMAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modman {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-side failures: the caller handed us something outside the domain.

class DomainError : public Error {
 public:
  using Error::Error;
};

class HermiticityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NormalizationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A density matrix has an eigenvalue below the faithfulness floor.
class FaithfulnessError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed external input (JSON schema violations, unreadable files).
class InputError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class MajorizationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ConstantGeneratorError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Numeric failures: inputs were admissible but the computation could not
// finish within the guards.

class NumericError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Newton inversion of the dual coordinates did not converge.
class NotAttainedError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace modman

#endif  // MODMAN_ERRORS_HPP
