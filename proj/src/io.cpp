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

#include "owc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace owc::io {
namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const std::length_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Complex read_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("complex numbers are [re, im] pairs");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json write_complex(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Label parse_label(const std::string& s) {
  Label v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ParseError("bad vertex label '" + s + "'");
  }
  return v;
}

std::vector<Label> labels(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<Label>>();
}

Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const Edge& e : edges) a.push_back({e.a, e.b});
  return a;
}

std::vector<Edge> read_edges(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges are [a, b] pairs");
    edges.emplace_back(e.at(0).get<Label>(), e.at(1).get<Label>());
  }
  return edges;
}

}  // namespace

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void save_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump(j);
}

UnitaryMatrix read_unitary(const Json& j, double tol) {
  return guarded("unitary", [&] {
    const int k = j.at("num_qubits").get<int>();
    const Json& rows = j.at("matrix");
    if (k < 0 || k > 20) throw ParseError("num_qubits out of range");
    const std::size_t dim = std::size_t{1} << k;
    if (!rows.is_array() || rows.size() != dim) throw ParseError("matrix must have 2^k rows");
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != dim) {
        throw ParseError("matrix must have 2^k columns");
      }
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = read_complex(rows[r][c]);
    }
    return UnitaryMatrix(std::move(m), tol);
  });
}

Json write_unitary(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(write_complex(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"num_qubits", log2_exact(m.rows())}, {"matrix", std::move(rows)}};
}

PhaseMapFile read_phase_map(const Json& j) {
  return guarded("phase map", [&] {
    const int v = j.at("num_qubits").get<int>();
    if (v < 0 || v > 30) throw ParseError("num_qubits out of range");
    std::vector<Complex> d;
    for (const auto& z : j.at("diagonal")) d.push_back(read_complex(z));
    std::vector<Label> vertices = labels(j, "vertices");
    if (!j.contains("vertices")) {
      for (int i = 1; i <= v; ++i) vertices.push_back(i);
    }
    if (vertices.size() != static_cast<std::size_t>(v)) {
      throw ParseError("vertex list does not match num_qubits");
    }
    QubitIndexing indexing(std::move(vertices), labels(j, "inputs"), labels(j, "outputs"));
    return PhaseMapFile{PhaseMapDiagonal(v, std::move(d)), std::move(indexing)};
  });
}

Json write_phase_map(const PhaseMapDiagonal& phi, const QubitIndexing& indexing) {
  Json d = Json::array();
  for (const Complex& z : phi.entries()) d.push_back(write_complex(z));
  return Json{{"num_qubits", phi.num_qubits()},
              {"vertices", indexing.vertices()},
              {"inputs", indexing.inputs()},
              {"outputs", indexing.outputs()},
              {"diagonal", std::move(d)}};
}

Geometry read_geometry(const Json& j) {
  return guarded("geometry", [&] {
    return Geometry(j.at("vertices").get<std::vector<Label>>(), read_edges(j.at("edges")),
                    labels(j, "inputs"), labels(j, "outputs"));
  });
}

Json write_geometry(const Geometry& g) {
  return Json{{"vertices", g.vertices()},
              {"edges", edges_json(g.edges())},
              {"inputs", g.inputs()},
              {"outputs", g.outputs()}};
}

MatchResult read_match(const Json& j) {
  return guarded("match result", [&] {
    MatchResult m;
    m.edges = read_edges(j.at("edges"));
    for (const auto& [key, value] : j.at("angles").items()) {
      m.angles[parse_label(key)] = value.get<double>();
    }
    return m;
  });
}

Json write_match(const MatchResult& m, const QubitIndexing& indexing) {
  Json angles = Json::object();
  for (const auto& [q, a] : m.angles) angles[std::to_string(q)] = a;
  return Json{{"vertices", indexing.vertices()},
              {"inputs", indexing.inputs()},
              {"outputs", indexing.outputs()},
              {"edges", edges_json(m.edges)},
              {"angles", std::move(angles)}};
}

Json write_flow(const Geometry& g, const Flow& flow) {
  Json f = Json::object();
  for (const auto& [x, y] : successor_map(g, flow.cover)) f[std::to_string(x)] = y;
  Json sup = Json::object();
  for (int x = 0; x < g.size(); ++x) {
    Json row = Json::array();
    for (int c = 0; c < flow.order.num_paths(); ++c) row.push_back(flow.order.sup(x, c));
    sup[std::to_string(g.label(x))] = std::move(row);
  }
  return Json{{"f", std::move(f)},
              {"order_chains", labeled_paths(g, flow.cover)},
              {"sup", std::move(sup)}};
}

Pattern read_pattern(const Json& j) {
  return guarded("pattern", [&] {
    Pattern p;
    p.space = j.at("space").get<std::vector<Label>>();
    p.inputs = j.at("inputs").get<std::vector<Label>>();
    p.outputs = j.at("outputs").get<std::vector<Label>>();
    for (const auto& c : j.at("commands")) {
      const std::string op = c.at("op").get<std::string>();
      if (op == "N") {
        p.commands.emplace_back(Prepare{c.at("q").get<Label>()});
      } else if (op == "E") {
        const auto q = c.at("q").get<std::vector<Label>>();
        if (q.size() != 2) throw ParseError("E acts on two qubits");
        p.commands.emplace_back(Entangle{q[0], q[1]});
      } else if (op == "M") {
        p.commands.emplace_back(Measure{c.at("q").get<Label>(), c.at("angle").get<double>()});
      } else if (op == "X") {
        p.commands.emplace_back(CorrectX{c.at("q").get<Label>(), c.at("signal").get<Label>()});
      } else if (op == "Z") {
        p.commands.emplace_back(CorrectZ{c.at("q").get<Label>(), c.at("signal").get<Label>()});
      } else {
        throw ParseError("unknown command '" + op + "'");
      }
    }
    return p;
  });
}

Json write_pattern(const Pattern& p) {
  Json cmds = Json::array();
  for (const Command& c : p.commands) {
    if (const auto* x = std::get_if<Prepare>(&c)) {
      cmds.push_back({{"op", "N"}, {"q", x->qubit}});
    } else if (const auto* x = std::get_if<Entangle>(&c)) {
      cmds.push_back({{"op", "E"}, {"q", {x->a, x->b}}});
    } else if (const auto* x = std::get_if<Measure>(&c)) {
      cmds.push_back({{"op", "M"}, {"q", x->qubit}, {"angle", x->angle}});
    } else if (const auto* x = std::get_if<CorrectX>(&c)) {
      cmds.push_back({{"op", "X"}, {"q", x->qubit}, {"signal", x->signal}});
    } else if (const auto* x = std::get_if<CorrectZ>(&c)) {
      cmds.push_back({{"op", "Z"}, {"q", x->qubit}, {"signal", x->signal}});
    }
  }
  return Json{{"space", p.space},
              {"inputs", p.inputs},
              {"outputs", p.outputs},
              {"commands", std::move(cmds)}};
}

Json write_report(const VerificationReport& r) {
  return Json{{"deterministic", r.deterministic},
              {"max_branch_discrepancy", r.max_branch_discrepancy},
              {"matches_unitary", r.matches_unitary},
              {"max_entry_error", r.max_entry_error}};
}

PlanFile read_plan(const Json& j) {
  return guarded("plan", [&] {
    const auto inputs = j.at("inputs").get<std::vector<Label>>();
    const auto outputs = j.at("outputs").get<std::vector<Label>>();
    const int aux = j.at("aux").get<int>();
    if (aux < 0 || aux > 30) throw ParseError("aux out of range");
    std::vector<Label> vertices;
    if (j.contains("vertices")) {
      vertices = j.at("vertices").get<std::vector<Label>>();
    } else {
      for (Label v = 1; v <= static_cast<Label>(inputs.size()) + aux; ++v) vertices.push_back(v);
    }
    if (vertices.size() != inputs.size() + static_cast<std::size_t>(aux)) {
      throw ParseError("vertex count must be |I| + aux");
    }
    PlanFile plan{QubitIndexing(std::move(vertices), inputs, outputs), {}, {}};
    if (j.contains("slot_axes")) {
      for (const auto& a : j.at("slot_axes")) {
        plan.slot_axes.push_back(a.is_null() ? std::nullopt
                                             : std::optional<double>(a.get<double>()));
      }
    }
    if (j.contains("permutations")) {
      plan.permutations = j.at("permutations").get<std::vector<std::vector<int>>>();
    }
    return plan;
  });
}

Json write_plan(const CandidatePlan& plan, const QubitIndexing& indexing,
                const CompileConfig& cfg) {
  Json axes = Json::array();
  for (const auto& a : plan.slot_axes) axes.push_back(a ? Json(*a) : Json(nullptr));
  return Json{{"vertices", indexing.vertices()},
              {"inputs", indexing.inputs()},
              {"outputs", plan.outputs},
              {"aux", plan.aux},
              {"perm_seed", cfg.seed},
              {"max_trials", cfg.max_trials},
              {"slot_variant", plan.slot_variant},
              {"slot_axes", std::move(axes)},
              {"permutations", plan.permutations}};
}

Json write_bundle(const CompileBundle& b, const CompileConfig& cfg) {
  return Json{{"plan", write_plan(b.plan, b.indexing, cfg)},
              {"phase_map", write_phase_map(b.phase_map, b.indexing)},
              {"match", write_match(b.match, b.indexing)},
              {"flow", write_flow(b.geometry, b.flow)},
              {"pattern", write_pattern(b.pattern)},
              {"report", write_report(b.report)},
              {"trials", b.trials}};
}

Json write_exhaustion(const ExhaustionReport& r) {
  Json failures = Json::object();
  for (int s = 0; s < kStageCount; ++s) failures[to_string(static_cast<Stage>(s))] = r.failures[s];
  return Json{{"trials", r.trials},
              {"failures", std::move(failures)},
              {"successes", r.successes},
              {"cap_exhausted", r.cap_exhausted},
              {"aux_range", {r.min_aux, r.max_aux}}};
}

std::vector<Label> parse_label_list(const std::string& text) {
  std::vector<Label> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty label in list '" + text + "'");
    out.push_back(parse_label(item.substr(b, e - b + 1)));
  }
  return out;
}

}  // namespace owc::io
