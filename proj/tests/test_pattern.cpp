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

#include <gtest/gtest.h>

#include <numbers>
#include <random>
#include <set>

#include "owc/pattern.hpp"
#include "test_util.hpp"

namespace owc {
namespace {

constexpr double kPi = std::numbers::pi;

Pattern synth(const Geometry& g, const AngleMap& angles) {
  const auto flow = find_flow(g);
  EXPECT_TRUE(flow.ok());
  return synthesize(g, *flow, angles);
}

Pattern j_pattern(double a) {
  return Pattern{{1, 2}, {1}, {2}, {Prepare{2}, Entangle{1, 2}, Measure{1, a}, CorrectX{2, 1}}};
}

TEST(FormatAngle, SymbolicForQuarterTurns) {
  EXPECT_EQ(format_angle(0.0), "0");
  EXPECT_EQ(format_angle(kPi / 4), "pi/4");
  EXPECT_EQ(format_angle(kPi / 2), "pi/2");
  EXPECT_EQ(format_angle(kPi), "pi");
  EXPECT_EQ(format_angle(3 * kPi / 4), "3pi/4");
  EXPECT_EQ(format_angle(-kPi / 2), "-pi/2");
  EXPECT_EQ(format_angle(2 * kPi), "2pi");
  EXPECT_EQ(format_angle(1.23), "1.23");
}

TEST(ToString, Commands) {
  EXPECT_EQ(to_string(j_pattern(kPi / 4)), "N2 E1,2 M1^pi/4 X2^s1");
  EXPECT_EQ(to_string(Command{CorrectZ{3, 1}}), "Z3^s1");
}

TEST(Synthesize, SingleEdge) {
  const Geometry g({1, 2}, {{1, 2}}, {1}, {2});
  const Pattern p = synth(g, {{1, 0.7}});
  EXPECT_EQ(p.commands, j_pattern(0.7).commands);
  EXPECT_EQ(p.space, (std::vector<Label>{1, 2}));
  EXPECT_TRUE(validate(p).ok);
}

TEST(Synthesize, ThreeVertexPathCorrectsEverySuccessor) {
  const double a = kPi / 3;
  const Geometry g({1, 2, 3}, {{1, 2}, {2, 3}}, {1}, {3});
  const Pattern p = synth(g, {{1, -a}, {2, 0.0}});
  const std::vector<Command> want{Prepare{2},     Entangle{1, 2}, Entangle{2, 3},
                                  Measure{1, -a}, CorrectX{2, 1}, CorrectZ{3, 1},
                                  Measure{2, 0.0}, CorrectX{3, 2}};
  EXPECT_EQ(p.commands.size(), want.size() + 1);
  EXPECT_EQ(p.commands[0], Command{Prepare{2}});
  EXPECT_EQ(p.commands[1], Command{Prepare{3}});
  EXPECT_EQ(std::vector<Command>(p.commands.begin() + 2, p.commands.end()),
            std::vector<Command>(want.begin() + 1, want.end()));
  EXPECT_TRUE(validate(p).ok);
}

TEST(Synthesize, NoMeasurementsWhenEveryVertexIsOutput) {
  const Geometry g({1, 2, 3}, {{1, 2}, {2, 3}}, {1, 2, 3}, {1, 2, 3});
  const Pattern p = synth(g, {});
  EXPECT_EQ(p.commands, (std::vector<Command>{Entangle{1, 2}, Entangle{2, 3}}));
  EXPECT_TRUE(validate(p).ok);
}

TEST(Synthesize, RejectsMissingAngleAndForeignFlow) {
  const Geometry g({1, 2, 3}, {{1, 2}, {2, 3}}, {1}, {3});
  const auto flow = find_flow(g);
  ASSERT_TRUE(flow.ok());
  EXPECT_THROW(synthesize(g, *flow, {{1, 0.1}}), std::invalid_argument);
  const Geometry other({1, 2}, {{1, 2}}, {1}, {2});
  EXPECT_THROW(synthesize(other, *flow, {{1, 0.1}}), std::invalid_argument);
}

TEST(MeasurementOrder, SmallestReadyLabelFirst) {
  // Two independent chains: 1-3-5 and 2-4-6.
  const Geometry g({1, 2, 3, 4, 5, 6}, {{1, 3}, {3, 5}, {2, 4}, {4, 6}}, {1, 2}, {5, 6});
  const auto flow = find_flow(g);
  ASSERT_TRUE(flow.ok());
  EXPECT_EQ(measurement_order(g, *flow), (std::vector<Label>{1, 2, 3, 4}));
}

TEST(Validate, AcceptsSynthesizedPatterns) {
  EXPECT_TRUE(validate(j_pattern(0.1)).ok);
}

TEST(Validate, FlagsMeasurementBeforeEntangler) {
  Pattern p{{1, 2}, {1}, {2}, {Prepare{2}, Measure{1, 0.1}, Entangle{1, 2}, CorrectX{2, 1}}};
  const auto r = validate(p);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.command_index, 2u);
  // The entangler also touches a measured qubit; standard form is reported.
  EXPECT_EQ(r.violation, Violation::kNotStandardForm);
}

TEST(Validate, FlagsSignalFromUnmeasuredQubit) {
  Pattern p{{1, 2, 3}, {1}, {3},
            {Prepare{2}, Prepare{3}, Entangle{1, 2}, Entangle{2, 3}, Measure{1, 0.0},
             CorrectX{3, 2}, Measure{2, 0.0}}};
  const auto r = validate(p);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violation, Violation::kDependsOnUnmeasured);
  EXPECT_EQ(r.command_index, 5u);
}

TEST(Validate, FlagsEachDefinitionalCondition) {
  struct Case {
    Pattern p;
    Violation v;
    std::size_t index;
  };
  const std::vector<Case> cases{
      {{{1, 2}, {1}, {2}, {Prepare{1}, Prepare{2}}}, Violation::kPreparesInput, 0},
      {{{1, 2}, {1}, {2}, {Prepare{2}, Prepare{2}}}, Violation::kPreparedTwice, 1},
      {{{1, 2}, {1}, {2}, {Entangle{1, 2}}}, Violation::kNotPrepared, 0},
      {{{1, 2}, {1}, {2}, {Prepare{2}, Measure{1, 0}, CorrectZ{1, 1}}},
       Violation::kActsOnMeasured, 2},
      {{{1, 2}, {1}, {2}, {Prepare{2}, Measure{2, 0}}}, Violation::kMeasuresOutput, 1},
      {{{1, 2}, {1}, {2}, {Prepare{2}}}, Violation::kUnmeasuredNonOutput, 1},
      {{{1, 2}, {1}, {2}, {Prepare{3}}}, Violation::kUnknownQubit, 0},
      {{{1, 2}, {1}, {2, 2}, {}}, Violation::kMalformedSpace, 0},
      {{{1, 2}, {1}, {5}, {}}, Violation::kMalformedSpace, 0},
      {{{1, 2}, {1}, {1, 2}, {}}, Violation::kNotPrepared, 0},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto r = validate(cases[i].p);
    EXPECT_FALSE(r.ok) << "case " << i;
    EXPECT_EQ(r.violation, cases[i].v) << "case " << i << ": " << r.message;
    EXPECT_EQ(r.command_index, cases[i].index) << "case " << i;
    EXPECT_FALSE(r.message.empty());
  }
}

TEST(Synthesize, RandomGeometriesYieldValidPatterns) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> turn(0.0, 2 * kPi);
  int checked = 0;
  for (int trial = 0; trial < 20000 && checked < 150; ++trial) {
    const Geometry g = testing::random_geometry(3 + trial % 6, 1 + trial % 3, 0.35, rng);
    const auto flow = find_flow(g);
    if (!flow.ok()) continue;
    ++checked;
    AngleMap angles;
    for (int v = 0; v < g.size(); ++v) {
      if (!g.is_output(v)) angles[g.label(v)] = turn(rng);
    }
    const Pattern p = synthesize(g, *flow, angles);
    const auto r = validate(p);
    ASSERT_TRUE(r.ok) << r.message;

    // Z targets for signal i are exactly N(f(i)) minus i.
    std::map<Label, std::set<Label>> z_targets;
    std::map<Label, Label> x_target;
    std::vector<Label> measured;
    for (const Command& c : p.commands) {
      if (const auto* z = std::get_if<CorrectZ>(&c)) z_targets[z->signal].insert(z->qubit);
      if (const auto* x = std::get_if<CorrectX>(&c)) x_target[x->signal] = x->qubit;
      if (const auto* m = std::get_if<Measure>(&c)) measured.push_back(m->qubit);
    }
    for (const auto& [i, fi] : successor_map(g, flow->cover)) {
      EXPECT_EQ(x_target.at(i), fi);
      std::set<Label> want;
      for (int k : g.neighbors(g.index_of(fi))) {
        if (g.label(k) != i) want.insert(g.label(k));
      }
      EXPECT_EQ(z_targets[i], want);
    }
    // Measurements respect the dependency order.
    for (std::size_t a = 0; a < measured.size(); ++a) {
      for (std::size_t b = a + 1; b < measured.size(); ++b) {
        EXPECT_FALSE(
            flow->order.precedes(g.index_of(measured[b]), g.index_of(measured[a])));
      }
    }
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace owc
