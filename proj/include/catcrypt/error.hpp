//
// Copyright 2026 The catcrypt Authors.
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
//
#ifndef CATCRYPT_ERROR_HPP_
#define CATCRYPT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace catcrypt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two morphisms that were required to line up do not.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A system, ensemble or distribution violates a structural invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A quantity is undefined, e.g. a posterior conditioned on a null event.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Input files that cannot be parsed. `context` names the offending field.
class ParseError : public Error {
 public:
  ParseError(const std::string& context, const std::string& message)
      : Error(context.empty() ? message : context + ": " + message),
        context_(context) {}

  const std::string& context() const { return context_; }

 private:
  std::string context_;
};

}  // namespace catcrypt

#endif  // CATCRYPT_ERROR_HPP_
