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

#include "owc/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace owc {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_angle(double radians) {
  const double quarters = radians / (std::numbers::pi / 4);
  const double nearest = std::round(quarters);
  if (std::abs(quarters - nearest) < 1e-9) {
    long q = static_cast<long>(nearest);
    if (q == 0) return "0";
    // Reduce q/4.
    long den = 4;
    while (den > 1 && q % 2 == 0) {
      q /= 2;
      den /= 2;
    }
    std::string num = q == 1 ? "" : q == -1 ? "-" : std::to_string(q);
    return num + "pi" + (den == 1 ? "" : "/" + std::to_string(den));
  }
  std::ostringstream os;
  os.precision(6);
  os << radians;
  return os.str();
}

std::string to_string(const Command& c) {
  return std::visit(
      Overloaded{
          [](const Prepare& x) { return "N" + std::to_string(x.qubit); },
          [](const Entangle& x) {
            return "E" + std::to_string(x.a) + "," + std::to_string(x.b);
          },
          [](const Measure& x) {
            return "M" + std::to_string(x.qubit) + "^" + format_angle(x.angle);
          },
          [](const CorrectX& x) {
            return "X" + std::to_string(x.qubit) + "^s" + std::to_string(x.signal);
          },
          [](const CorrectZ& x) {
            return "Z" + std::to_string(x.qubit) + "^s" + std::to_string(x.signal);
          },
      },
      c);
}

std::string to_string(const Pattern& p) {
  std::string out;
  for (const auto& c : p.commands) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

std::vector<Label> measurement_order(const Geometry& g, const Flow& flow) {
  const int n = g.size();
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indegree(n, 0);
  for (int x = 0; x < n; ++x) {
    const auto fx = flow.successor(x);
    if (!fx) continue;
    auto add = [&](int y) {
      succ[x].push_back(y);
      ++indegree[y];
    };
    add(*fx);
    for (int y : g.neighbors(*fx)) {
      if (y != x) add(y);
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<Label> order;
  std::size_t seen = 0;
  while (!ready.empty()) {
    const int x = ready.top();
    ready.pop();
    ++seen;
    if (!g.is_output(x)) order.push_back(g.label(x));
    for (int y : succ[x]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  if (seen != static_cast<std::size_t>(n)) {
    throw std::logic_error("dependency relation has a cycle; not a flow");
  }
  return order;
}

Pattern synthesize(const Geometry& g, const Flow& flow, const AngleMap& angles) {
  const int n = g.size();
  if (flow.cover.successor.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("flow does not belong to this geometry");
  }
  for (int x = 0; x < n; ++x) {
    const auto fx = flow.successor(x);
    if (g.is_output(x) != !fx.has_value()) {
      throw std::invalid_argument("flow is not defined exactly on the non-outputs");
    }
    if (fx && (!g.adjacent(x, *fx) || g.is_input(*fx))) {
      throw std::invalid_argument("flow successor of " + std::to_string(g.label(x)) +
                                  " is not a neighbouring non-input");
    }
  }

  Pattern p;
  p.space = g.vertices();
  p.inputs = g.inputs();
  p.outputs = g.outputs();
  for (int v = 0; v < n; ++v) {
    if (!g.is_input(v)) p.commands.emplace_back(Prepare{g.label(v)});
  }
  for (const Edge& e : g.edges()) p.commands.emplace_back(Entangle{e.a, e.b});
  for (Label i : measurement_order(g, flow)) {
    auto it = angles.find(i);
    if (it == angles.end()) {
      throw std::invalid_argument("no measurement angle for qubit " + std::to_string(i));
    }
    const int x = g.index_of(i);
    const int fx = *flow.successor(x);
    p.commands.emplace_back(Measure{i, it->second});
    p.commands.emplace_back(CorrectX{g.label(fx), i});
    for (int k : g.neighbors(fx)) {
      if (k != x) p.commands.emplace_back(CorrectZ{g.label(k), i});
    }
  }
  return p;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::kMalformedSpace: return "malformed-space";
    case Violation::kUnknownQubit: return "unknown-qubit";
    case Violation::kPreparesInput: return "prepares-input";
    case Violation::kPreparedTwice: return "prepared-twice";
    case Violation::kNotPrepared: return "not-prepared";
    case Violation::kActsOnMeasured: return "acts-on-measured";
    case Violation::kDependsOnUnmeasured: return "depends-on-unmeasured";
    case Violation::kMeasuresOutput: return "measures-output";
    case Violation::kUnmeasuredNonOutput: return "unmeasured-non-output";
    case Violation::kNotStandardForm: return "not-standard-form";
  }
  return "unknown";
}

ValidationReport validate(const Pattern& p) {
  ValidationReport report;
  auto fail = [&](Violation v, std::size_t index, std::string msg) {
    report.ok = false;
    report.violation = v;
    report.command_index = index;
    report.message = std::move(msg);
    return report;
  };

  auto distinct = [](std::vector<Label> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  std::vector<Label> space = p.space;
  std::sort(space.begin(), space.end());
  auto in_space = [&](Label q) { return std::binary_search(space.begin(), space.end(), q); };
  auto listed = [](const std::vector<Label>& v, Label q) {
    return std::find(v.begin(), v.end(), q) != v.end();
  };
  if (!distinct(space) || !distinct(p.inputs) || !distinct(p.outputs) ||
      !std::all_of(p.inputs.begin(), p.inputs.end(), in_space) ||
      !std::all_of(p.outputs.begin(), p.outputs.end(), in_space)) {
    return fail(Violation::kMalformedSpace, 0,
                "space, inputs and outputs must be duplicate-free with I, O inside V");
  }

  enum class State { kUnprepared, kLive, kMeasured };
  std::map<Label, State> state;
  for (Label q : space) state[q] = listed(p.inputs, q) ? State::kLive : State::kUnprepared;
  bool measuring_started = false;

  auto require_live = [&](Label q, std::size_t i) -> std::optional<ValidationReport> {
    if (!in_space(q)) {
      return fail(Violation::kUnknownQubit, i, "qubit " + std::to_string(q) + " not in space");
    }
    if (state[q] == State::kMeasured) {
      return fail(Violation::kActsOnMeasured, i,
                  "qubit " + std::to_string(q) + " was already measured");
    }
    if (state[q] == State::kUnprepared) {
      return fail(Violation::kNotPrepared, i,
                  "qubit " + std::to_string(q) + " used before preparation");
    }
    return std::nullopt;
  };
  auto require_signal = [&](Label s, std::size_t i) -> std::optional<ValidationReport> {
    if (!in_space(s) || state[s] != State::kMeasured) {
      return fail(Violation::kDependsOnUnmeasured, i,
                  "signal s" + std::to_string(s) + " is not yet measured");
    }
    return std::nullopt;
  };

  for (std::size_t i = 0; i < p.commands.size(); ++i) {
    const Command& c = p.commands[i];
    std::optional<ValidationReport> bad;
    if (const auto* prep = std::get_if<Prepare>(&c)) {
      const Label q = prep->qubit;
      if (!in_space(q)) {
        bad = fail(Violation::kUnknownQubit, i, "qubit " + std::to_string(q) + " not in space");
      } else if (listed(p.inputs, q)) {
        bad = fail(Violation::kPreparesInput, i, "input " + std::to_string(q) + " is prepared");
      } else if (state[q] == State::kMeasured) {
        bad = fail(Violation::kActsOnMeasured, i,
                   "qubit " + std::to_string(q) + " was already measured");
      } else if (state[q] == State::kLive) {
        bad = fail(Violation::kPreparedTwice, i,
                   "qubit " + std::to_string(q) + " prepared twice");
      } else {
        state[q] = State::kLive;
      }
    } else if (const auto* ent = std::get_if<Entangle>(&c)) {
      if (measuring_started) {
        bad = fail(Violation::kNotStandardForm, i, "entangler after a measurement or correction");
      } else if (ent->a == ent->b) {
        bad = fail(Violation::kUnknownQubit, i, "entangler on a single qubit");
      } else if (!(bad = require_live(ent->a, i))) {
        bad = require_live(ent->b, i);
      }
    } else if (const auto* m = std::get_if<Measure>(&c)) {
      measuring_started = true;
      if (!(bad = require_live(m->qubit, i))) {
        if (listed(p.outputs, m->qubit)) {
          bad = fail(Violation::kMeasuresOutput, i,
                     "output " + std::to_string(m->qubit) + " is measured");
        } else {
          state[m->qubit] = State::kMeasured;
        }
      }
    } else {
      measuring_started = true;
      const auto [q, s] = std::visit(
          Overloaded{[](const CorrectX& x) { return std::pair{x.qubit, x.signal}; },
                     [](const CorrectZ& x) { return std::pair{x.qubit, x.signal}; },
                     [](const auto&) { return std::pair{Label{0}, Label{0}}; }},
          c);
      if (!(bad = require_signal(s, i))) bad = require_live(q, i);
    }
    if (bad) return *bad;
  }

  for (Label q : space) {
    const bool output = listed(p.outputs, q);
    if (!output && state[q] != State::kMeasured) {
      return fail(Violation::kUnmeasuredNonOutput, p.commands.size(),
                  "non-output " + std::to_string(q) + " is never measured");
    }
    if (output && state[q] == State::kUnprepared) {
      return fail(Violation::kNotPrepared, p.commands.size(),
                  "non-input " + std::to_string(q) + " is never prepared");
    }
  }
  return report;
}

}  // namespace owc
