/*
 *   Copyright 2026 The semirings authors
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

#ifndef SEMIRINGS_ERROR_HPP_
#define SEMIRINGS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace semirings {

//! Base class for everything this library throws on bad input or a failed
//! precondition (e.g. asking for rho of a semiring that is not quasi
//! completely regular).
struct SemiringError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Malformed input at the file/table level: ragged tables, out-of-range
//! entries, bad syntax.  Kept distinct from axiom violations so the CLI can
//! report them with a different exit code.
struct ParseError : SemiringError {
  using SemiringError::SemiringError;
};

//! An internal cross-check failed.  These are raised where the library
//! verifies a fact that should be guaranteed (for instance, that an
//! H+-class contains at most one additive idempotent); seeing one means a
//! bug or a genuinely inconsistent structure, never user error.
struct ConsistencyError : SemiringError {
  using SemiringError::SemiringError;
};

}  // namespace semirings

#endif  // SEMIRINGS_ERROR_HPP_
