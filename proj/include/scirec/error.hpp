// Copyright 2026 The scirec Authors
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

#ifndef SCIREC_ERROR_HPP_
#define SCIREC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace scirec {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A user/strategy pair that cannot be served (empty user profile).
// Distinct from Error so callers can record the pair and move on.
class UnservableError : public Error {
 public:
  explicit UnservableError(const std::string& what) : Error(what) {}
};

}  // namespace scirec

#endif  // SCIREC_ERROR_HPP_
