// Copyright 2026 The owc Authors
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
#include <utility>
#include <variant>
#include <vector>

namespace owc {

using Label = int;

// A definite negative answer ("no flow exists", "no matching graph"), as
// opposed to a precondition violation, which is reported by exception.
struct Failure {
  std::string reason;
  std::vector<Label> witness;
};

template <typename T>
class Result {
 public:
  Result(T value) : state_(std::move(value)) {}  // NOLINT: implicit by intent
  Result(Failure failure) : state_(std::move(failure)) {}  // NOLINT

  static Result fail(std::string reason, std::vector<Label> witness = {}) {
    return Result(Failure{std::move(reason), std::move(witness)});
  }

  [[nodiscard]] bool ok() const { return state_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Result::value on failure: " + reason());
    return std::get<0>(state_);
  }
  T& value() & {
    if (!ok()) throw std::logic_error("Result::value on failure: " + reason());
    return std::get<0>(state_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Result::value on failure: " + reason());
    return std::get<0>(std::move(state_));
  }
  const T* operator->() const { return &value(); }
  const T& operator*() const { return value(); }

  const Failure& failure() const { return std::get<1>(state_); }
  const std::string& reason() const {
    static const std::string kEmpty;
    return ok() ? kEmpty : std::get<1>(state_).reason;
  }
  const std::vector<Label>& witness() const {
    static const std::vector<Label> kNone;
    return ok() ? kNone : std::get<1>(state_).witness;
  }

 private:
  std::variant<T, Failure> state_;
};

}  // namespace owc
