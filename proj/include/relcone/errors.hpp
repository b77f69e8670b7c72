/*
   Copyright 2026 The relcone Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace relcone {

// Every failure raised by the core derives from Error; the C API maps the
// concrete type onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad mask, NaN entry, bad JSON, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but outside the mathematical domain of the operation,
// e.g. decomposing a vector that is not in the cone.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid construction parameters (non-prime modulus, threshold > shares).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Requested operation is well defined but deliberately not supported
// (infinite targets for decomposition, n too large for enumeration).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A constructed object failed its own numerical verification.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace relcone
