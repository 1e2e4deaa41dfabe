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

#include <map>
#include <optional>
#include <vector>

#include "owc/core.hpp"

namespace owc {

/// An undirected simple graph with input and output vertex subsets, which
/// may overlap. Vertices are also addressed by a dense index in ascending
/// label order; all per-vertex tables in this module use that index.
class Geometry {
 public:
  Geometry(std::vector<Label> vertices, std::vector<Edge> edges, std::vector<Label> inputs,
           std::vector<Label> outputs);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Label>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Label>& inputs() const { return inputs_; }
  const std::vector<Label>& outputs() const { return outputs_; }

  Label label(int i) const { return vertices_[i]; }
  int index_of(Label v) const;
  bool contains(Label v) const;

  /// Dense neighbour indices, ascending.
  const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }
  bool adjacent(int i, int j) const;

  bool is_input(int i) const { return input_flag_[i] != 0; }
  bool is_output(int i) const { return output_flag_[i] != 0; }

 private:
  std::vector<Label> vertices_;
  std::vector<Edge> edges_;
  std::vector<Label> inputs_;
  std::vector<Label> outputs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<char> input_flag_;
  std::vector<char> output_flag_;
};

/// Unit-capacity network whose integral flows are families of vertex-disjoint
/// I-O paths. Each vertex v is split into an out-flow node A_v (v in I or
/// O^c) and an in-flow node B_v (v in O or I^c), merged when v is in I and O.
struct MaxFlowDigraph {
  enum class NodeKind { kSource, kSink, kOutFlow, kInFlow, kMerged };
  struct Node {
    NodeKind kind;
    int vertex;  // dense vertex index, -1 for source and sink
  };
  struct Arc {
    int from;
    int to;
  };

  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  std::vector<Node> nodes;
  std::vector<Arc> arcs;
  std::vector<int> out_node;  // A_v per vertex, -1 if absent
  std::vector<int> in_node;   // B_v per vertex, -1 if absent
};

MaxFlowDigraph build_max_flow_digraph(const Geometry& g);

struct NetworkFlow {
  std::vector<int> arc_flow;  // 0 or 1 per arc of the digraph
  int value = 0;
};

/// Ford-Fulkerson with breadth-first augmenting paths; neighbours are
/// scanned in ascending vertex order. O(k m) for k = |I|.
NetworkFlow max_integral_flow(const MaxFlowDigraph& net);

/// Vertex-disjoint directed paths covering V, each starting at an input (or
/// containing none) and meeting O only at its end.
struct PathCover {
  std::vector<std::vector<int>> paths;  // dense indices, start to end
  std::vector<int> path_of;
  std::vector<int> position;   // distance from the start of the path
  std::vector<int> successor;  // f(v), -1 on outputs
};

/// Extracts the paths carried by a maximum flow, inputs in ascending order,
/// and fails if they leave some vertex uncovered (witness: the uncovered
/// vertices). Throws if |I| != |O|.
Result<PathCover> find_path_cover(const Geometry& g);

/// The dependency order of f, stored as a chain decomposition: sup[x, P] is
/// the position of the earliest vertex of path P above x, or -1.
class DependencyOrder {
 public:
  DependencyOrder(int num_paths, std::vector<int> sup, std::vector<int> path_of,
                  std::vector<int> position);

  int num_paths() const { return num_paths_; }
  int sup(int x, int path) const { return sup_[static_cast<std::size_t>(x) * num_paths_ + path]; }

  /// x precedes-or-equals y.
  bool precedes(int x, int y) const {
    const int s = sup(x, path_of_[y]);
    return s >= 0 && s <= position_[y];
  }

 private:
  int num_paths_;
  std::vector<int> sup_;
  std::vector<int> path_of_;
  std::vector<int> position_;
};

/// Depth-first closure of the dependency relation
///   x -> y  iff  y = f(x) or y ~ f(x), y != x.
/// Fails when a dependency cycle is met; the witness lists the cycle.
Result<DependencyOrder> find_dependency_order(const Geometry& g, const PathCover& cover);

struct Flow {
  PathCover cover;
  DependencyOrder order;

  std::optional<int> successor(int x) const {
    const int y = cover.successor[x];
    return y < 0 ? std::nullopt : std::optional<int>(y);
  }
};

/// Path cover followed by dependency order. The failure reason is either
/// "no-path-cover" or "dependency-cycle".
Result<Flow> find_flow(const Geometry& g);

/// f as a label map.
std::map<Label, Label> successor_map(const Geometry& g, const PathCover& cover);
std::vector<std::vector<Label>> labeled_paths(const Geometry& g, const PathCover& cover);

}  // namespace owc
