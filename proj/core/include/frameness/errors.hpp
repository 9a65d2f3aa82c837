/*
Copyright (c) 2026 The frameness authors. All Rights Reserved.

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

#ifndef FRAMENESS_ERRORS_HPP
#define FRAMENESS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frameness {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a validated invariant (state, distribution, POVM, group).
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested object would exceed the configured dimension cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A theorem or closed form was invoked outside its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace frameness

#endif  // FRAMENESS_ERRORS_HPP
