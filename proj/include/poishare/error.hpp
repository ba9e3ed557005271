// Copyright 2026 The Authors.
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

#ifndef POISHARE_ERROR_HPP_
#define POISHARE_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace poishare {

// Malformed input: bad indices, invalid instance files, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well-formed but cannot be satisfied (not enough candidates,
// enumeration caps exceeded).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceededError : public InfeasibleError {
 public:
  CapExceededError(const std::string& what_enumerated, std::uint64_t cap)
      : InfeasibleError(what_enumerated + " exceeds the enumeration cap of " +
                        std::to_string(cap)),
        cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

// Two independent evaluation routes disagreed.
class CrosscheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace poishare

#endif  // POISHARE_ERROR_HPP_
