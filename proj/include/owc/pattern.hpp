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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "owc/flow.hpp"
#include "owc/graphmatch.hpp"

namespace owc {

struct Prepare {
  Label qubit;
  friend bool operator==(const Prepare&, const Prepare&) = default;
};
struct Entangle {
  Label a;
  Label b;
  friend bool operator==(const Entangle&, const Entangle&) = default;
};
struct Measure {
  Label qubit;
  double angle;
  friend bool operator==(const Measure&, const Measure&) = default;
};
struct CorrectX {
  Label qubit;
  Label signal;
  friend bool operator==(const CorrectX&, const CorrectX&) = default;
};
struct CorrectZ {
  Label qubit;
  Label signal;
  friend bool operator==(const CorrectZ&, const CorrectZ&) = default;
};

using Command = std::variant<Prepare, Entangle, Measure, CorrectX, CorrectZ>;

/// A one-way measurement pattern. Commands are stored in application order:
/// commands[0] acts first.
struct Pattern {
  std::vector<Label> space;
  std::vector<Label> inputs;
  std::vector<Label> outputs;
  std::vector<Command> commands;
};

/// Angle for summaries: exact multiples of pi/4 are written symbolically.
std::string format_angle(double radians);

std::string to_string(const Command& c);
std::string to_string(const Pattern& p);

/// Non-outputs in a linear extension of the dependency order, smallest
/// label first among the ready vertices.
std::vector<Label> measurement_order(const Geometry& g, const Flow& flow);

/// Deterministic pattern for a geometry with flow: prepare the non-inputs,
/// entangle along every edge, then for each non-output i in dependency order
/// measure i at alpha_i, apply X on f(i) and Z on every other neighbour of
/// f(i), all conditioned on s_i. Throws if an angle is missing.
Pattern synthesize(const Geometry& g, const Flow& flow, const AngleMap& angles);

enum class Violation {
  kMalformedSpace,
  kUnknownQubit,
  kPreparesInput,
  kPreparedTwice,
  kNotPrepared,
  kActsOnMeasured,
  kDependsOnUnmeasured,
  kMeasuresOutput,
  kUnmeasuredNonOutput,
  kNotStandardForm,
};

std::string to_string(Violation v);

struct ValidationReport {
  bool ok = true;
  Violation violation = Violation::kMalformedSpace;
  std::size_t command_index = 0;  // commands.size() for end-of-pattern checks
  std::string message;
};

/// Checks the pattern conditions (signals measured before use, nothing acts
/// on a measured qubit, exactly the non-outputs measured and exactly the
/// non-inputs prepared) and standard form (entanglers before any
/// measurement or correction). Reports the first violation.
ValidationReport validate(const Pattern& p);

}  // namespace owc
