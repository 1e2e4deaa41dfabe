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

#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>

#include "owc/io.hpp"
#include "test_util.hpp"

namespace owc::io {
namespace {

constexpr double kPi = std::numbers::pi;

Json parse(const char* text) { return Json::parse(text); }

TEST(Unitary, RoundTripIsExact) {
  std::mt19937_64 rng(4);
  for (int k = 1; k <= 3; ++k) {
    const Matrix m = testing::random_unitary(k, rng);
    const Json j = write_unitary(m);
    EXPECT_EQ(j.at("num_qubits"), k);
    const UnitaryMatrix u = read_unitary(Json::parse(dump(j)));
    EXPECT_EQ(u.matrix().max_abs_diff(m), 0.0);
  }
}

TEST(Unitary, RejectsMalformed) {
  EXPECT_THROW(read_unitary(parse(R"({"matrix": [[[1,0]]]})")), ParseError);
  EXPECT_THROW(read_unitary(parse(R"({"num_qubits": 1, "matrix": [[[1,0],[0,0]]]})")),
               ParseError);
  EXPECT_THROW(read_unitary(parse(R"({"num_qubits": 1, "matrix": [[[1,0],[0,0]],[[0,0],[2,0]]]})")),
               ParseError);
  EXPECT_THROW(read_unitary(parse(R"({"num_qubits": 1, "matrix": [[1,0],[0,1]]})")), ParseError);
  EXPECT_THROW(read_unitary(parse(R"({"num_qubits": 1, "matrix": [[[1,0],[0]],[[0,0],[1,0]]]})")),
               ParseError);
  EXPECT_THROW(read_unitary(parse(R"({"num_qubits": -1, "matrix": []})")), ParseError);
  EXPECT_THROW(read_unitary(parse(R"({"num_qubits": "one", "matrix": []})")), ParseError);
}

TEST(PhaseMap, RoundTripKeepsIndexing) {
  const QubitIndexing idx({1, 2, 3}, {1}, {3});
  const Complex f = std::polar(1.0, kPi / 3);
  const PhaseMapDiagonal phi(3, {1.0, 1.0, 1.0, -1.0, f, f, -f, f});
  const PhaseMapFile back = read_phase_map(Json::parse(dump(write_phase_map(phi, idx))));
  EXPECT_EQ(back.indexing.vertices(), idx.vertices());
  EXPECT_EQ(back.indexing.inputs(), idx.inputs());
  EXPECT_EQ(back.indexing.outputs(), idx.outputs());
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(back.phi[i], phi[i]);
}

TEST(PhaseMap, DefaultsAndErrors) {
  const PhaseMapFile f =
      read_phase_map(parse(R"({"num_qubits": 1, "diagonal": [[1,0],[0,1]]})"));
  EXPECT_EQ(f.indexing.vertices(), std::vector<Label>{1});
  EXPECT_TRUE(f.indexing.inputs().empty());
  EXPECT_TRUE(f.indexing.outputs().empty());
  EXPECT_THROW(read_phase_map(parse(R"({"num_qubits": 1, "diagonal": [[1,0]]})")), ParseError);
  EXPECT_THROW(read_phase_map(parse(R"({"num_qubits": 1, "diagonal": [[1,0],[2,0]]})")),
               ParseError);
  EXPECT_THROW(read_phase_map(parse(
                   R"({"num_qubits": 1, "vertices": [1, 2], "diagonal": [[1,0],[1,0]]})")),
               ParseError);
  EXPECT_THROW(read_phase_map(parse(
                   R"({"num_qubits": 1, "inputs": [5], "diagonal": [[1,0],[1,0]]})")),
               ParseError);
}

TEST(Geometry, RoundTrip) {
  const Geometry g = testing::six_cycle();
  const Geometry back = read_geometry(Json::parse(dump(write_geometry(g))));
  EXPECT_EQ(back.vertices(), g.vertices());
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.inputs(), g.inputs());
  EXPECT_EQ(back.outputs(), g.outputs());
}

TEST(Geometry, RejectsMalformed) {
  EXPECT_THROW(read_geometry(parse(R"({"edges": []})")), ParseError);
  EXPECT_THROW(read_geometry(parse(R"({"vertices": [1,2], "edges": [[1,3]]})")), ParseError);
  EXPECT_THROW(read_geometry(parse(R"({"vertices": [1,2], "edges": [[1,1]]})")), ParseError);
  EXPECT_THROW(read_geometry(parse(R"({"vertices": [1,2], "edges": [[1]]})")), ParseError);
  EXPECT_THROW(read_geometry(parse(R"({"vertices": [1,1], "edges": []})")), ParseError);
  EXPECT_THROW(read_geometry(parse(R"({"vertices": [1,2], "edges": [], "inputs": [7]})")),
               ParseError);
}

TEST(Match, RoundTripAndDoublesAsGeometry) {
  const QubitIndexing idx({1, 2, 3}, {1}, {3});
  const MatchResult m{{{1, 2}, {2, 3}}, {{1, 5 * kPi / 3}, {2, 0.0}}};
  const Json j = Json::parse(dump(write_match(m, idx)));
  const MatchResult back = read_match(j);
  EXPECT_EQ(back.edges, m.edges);
  EXPECT_EQ(back.angles, m.angles);
  const Geometry g = read_geometry(j);
  EXPECT_EQ(g.edges(), m.edges);
  EXPECT_EQ(g.outputs(), std::vector<Label>{3});
  EXPECT_THROW(read_match(parse(R"({"edges": [], "angles": {"x": 1.0}})")), ParseError);
  EXPECT_THROW(read_match(parse(R"({"edges": [], "angles": {"1": "a"}})")), ParseError);
  EXPECT_THROW(read_match(parse(R"({"edges": []})")), ParseError);
}

TEST(Flow, SerializesSuccessorAndChains) {
  const Geometry g({1, 2, 3}, {{1, 2}, {2, 3}}, {1}, {3});
  const Json j = write_flow(g, *find_flow(g));
  EXPECT_EQ(j.at("f"), parse(R"({"1": 2, "2": 3})"));
  EXPECT_EQ(j.at("order_chains"), parse("[[1, 2, 3]]"));
  EXPECT_EQ(j.at("sup"), parse(R"({"1": [0], "2": [1], "3": [2]})"));
}

TEST(Pattern, RoundTrip) {
  const Pattern p{{1, 2, 3}, {1}, {3},
                  {Prepare{2}, Prepare{3}, Entangle{1, 2}, Entangle{2, 3}, Measure{1, -kPi / 3},
                   CorrectX{2, 1}, CorrectZ{3, 1}, Measure{2, 0.0}, CorrectX{3, 2}}};
  const Pattern back = read_pattern(Json::parse(dump(write_pattern(p))));
  EXPECT_EQ(to_string(back), to_string(p));
  EXPECT_EQ(back.space, p.space);
  EXPECT_EQ(back.inputs, p.inputs);
  EXPECT_EQ(back.outputs, p.outputs);
  EXPECT_EQ(std::get<Measure>(back.commands[4]).angle, -kPi / 3);
}

TEST(Pattern, RejectsMalformed) {
  const char* base = R"({"space": [1], "inputs": [1], "outputs": [1], "commands": %s})";
  auto with = [&](const char* cmds) {
    char buf[256];
    std::snprintf(buf, sizeof buf, base, cmds);
    return Json::parse(buf);
  };
  EXPECT_NO_THROW(read_pattern(with("[]")));
  EXPECT_THROW(read_pattern(with(R"([{"op": "Q", "q": 1}])")), ParseError);
  EXPECT_THROW(read_pattern(with(R"([{"op": "E", "q": [1]}])")), ParseError);
  EXPECT_THROW(read_pattern(with(R"([{"op": "M", "q": 1}])")), ParseError);
  EXPECT_THROW(read_pattern(with(R"([{"op": "X", "q": 1}])")), ParseError);
  EXPECT_THROW(read_pattern(parse(R"({"space": [1], "commands": []})")), ParseError);
}

TEST(Plan, RoundTrip) {
  const QubitIndexing idx({1, 2, 3}, {1}, {3});
  CandidatePlan cand{2, {3}, 7, {std::nullopt, kPi / 3, 0.0, std::nullopt},
                     {{0, 1}, {1, 0}, {0, 1}, {0, 1}}};
  CompileConfig cfg;
  cfg.seed = 9;
  const Json j = Json::parse(dump(write_plan(cand, idx, cfg)));
  EXPECT_EQ(j.at("perm_seed"), 9);
  EXPECT_EQ(j.at("aux"), 2);
  const PlanFile back = read_plan(j);
  EXPECT_EQ(back.indexing.vertices(), idx.vertices());
  EXPECT_EQ(back.indexing.outputs(), idx.outputs());
  EXPECT_EQ(back.slot_axes, cand.slot_axes);
  EXPECT_EQ(back.permutations, cand.permutations);
}

TEST(Plan, MinimalFormAndErrors) {
  const PlanFile p = read_plan(parse(R"({"inputs": [1], "outputs": [2], "aux": 1})"));
  EXPECT_EQ(p.indexing.vertices(), (std::vector<Label>{1, 2}));
  EXPECT_TRUE(p.slot_axes.empty());
  EXPECT_TRUE(p.permutations.empty());
  EXPECT_THROW(read_plan(parse(R"({"inputs": [1], "outputs": [2], "aux": -1})")), ParseError);
  EXPECT_THROW(read_plan(parse(R"({"inputs": [1], "outputs": [2], "aux": 1, "vertices": [1]})")),
               ParseError);
  EXPECT_THROW(read_plan(parse(R"({"inputs": [1], "aux": 1})")), ParseError);
}

TEST(Exhaustion, ListsEveryStage) {
  ExhaustionReport r;
  r.trials = 5;
  r.failures[1] = 4;
  r.successes = 1;
  r.min_aux = 2;
  r.max_aux = 3;
  const Json j = write_exhaustion(r);
  EXPECT_EQ(j.at("failures").size(), static_cast<std::size_t>(kStageCount));
  EXPECT_EQ(j.at("failures").at("no-matching-graph"), 4);
  EXPECT_EQ(j.at("aux_range"), parse("[2, 3]"));
}

TEST(Bundle, IsByteIdenticalAcrossRuns) {
  CompileConfig cfg;
  cfg.aux = 2;
  cfg.outputs = std::vector<Label>{3};
  const UnitaryMatrix u(testing::z_alpha(kPi / 3));
  const std::string a = dump(write_bundle(*compile(u, cfg).bundle, cfg));
  const std::string b = dump(write_bundle(*compile(u, cfg).bundle, cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
}

TEST(Files, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "owc_io_test.json";
  save_file(path.string(), write_unitary(Matrix::identity(2)));
  EXPECT_EQ(load_file(path.string()), write_unitary(Matrix::identity(2)));
  std::filesystem::remove(path);
  EXPECT_THROW(load_file(path.string()), ParseError);
  const auto bad = std::filesystem::temp_directory_path() / "owc_io_bad.json";
  {
    std::FILE* f = std::fopen(bad.string().c_str(), "w");
    std::fputs("{not json", f);
    std::fclose(f);
  }
  EXPECT_THROW(load_file(bad.string()), ParseError);
  std::filesystem::remove(bad);
}

TEST(LabelList, Parses) {
  EXPECT_EQ(parse_label_list("3,5"), (std::vector<Label>{3, 5}));
  EXPECT_EQ(parse_label_list(" 1 , 2"), (std::vector<Label>{1, 2}));
  EXPECT_EQ(parse_label_list("0"), std::vector<Label>{0});
  EXPECT_THROW(parse_label_list("1,,2"), ParseError);
  EXPECT_THROW(parse_label_list("a"), ParseError);
  EXPECT_THROW(parse_label_list("1.5"), ParseError);
}

}  // namespace
}  // namespace owc::io
