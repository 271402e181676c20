/*
 * Copyright 2026 The gkring Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented requirement (non-prime p, mismatched q, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured element/point bound.
/// Callers that hit this must fall back to the symbolic route.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked in a state its precondition excludes.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input or an unknown builtin name.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gk
