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

#include "owc/flow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace owc {
namespace {

void sort_labels(std::vector<Label>& labels, const char* what) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw std::invalid_argument(std::string("duplicate label in ") + what);
  }
  if (!labels.empty() && labels.front() < 0) {
    throw std::invalid_argument(std::string("negative label in ") + what);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Geometry

Geometry::Geometry(std::vector<Label> vertices, std::vector<Edge> edges,
                   std::vector<Label> inputs, std::vector<Label> outputs)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
  sort_labels(vertices_, "vertices");
  sort_labels(inputs_, "inputs");
  sort_labels(outputs_, "outputs");

  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  const int n = size();
  adjacency_.assign(n, {});
  input_flag_.assign(n, 0);
  output_flag_.assign(n, 0);
  for (const Edge& e : edges_) {
    if (e.a == e.b) throw std::invalid_argument("self-loop on " + std::to_string(e.a));
    const int i = index_of(e.a);
    const int j = index_of(e.b);
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  for (Label v : inputs_) input_flag_[index_of(v)] = 1;
  for (Label v : outputs_) output_flag_[index_of(v)] = 1;
}

int Geometry::index_of(Label v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw std::invalid_argument("label " + std::to_string(v) + " is not a vertex");
  }
  return static_cast<int>(it - vertices_.begin());
}

bool Geometry::contains(Label v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Geometry::adjacent(int i, int j) const {
  const auto& nb = adjacency_[i];
  return std::binary_search(nb.begin(), nb.end(), j);
}

// ---------------------------------------------------------------------------
// Max-flow digraph

MaxFlowDigraph build_max_flow_digraph(const Geometry& g) {
  using Kind = MaxFlowDigraph::NodeKind;
  MaxFlowDigraph net;
  const int n = g.size();
  net.nodes.push_back({Kind::kSource, -1});
  net.nodes.push_back({Kind::kSink, -1});
  net.out_node.assign(n, -1);
  net.in_node.assign(n, -1);

  for (int v = 0; v < n; ++v) {
    const bool in = g.is_input(v);
    const bool out = g.is_output(v);
    if (in && out) {
      const int id = static_cast<int>(net.nodes.size());
      net.nodes.push_back({Kind::kMerged, v});
      net.out_node[v] = net.in_node[v] = id;
      continue;
    }
    if (in || !out) {
      net.out_node[v] = static_cast<int>(net.nodes.size());
      net.nodes.push_back({Kind::kOutFlow, v});
    }
    if (out || !in) {
      net.in_node[v] = static_cast<int>(net.nodes.size());
      net.nodes.push_back({Kind::kInFlow, v});
    }
  }

  for (int v = 0; v < n; ++v) {
    if (g.is_input(v)) net.arcs.push_back({MaxFlowDigraph::kSource, net.out_node[v]});
    if (g.is_output(v)) net.arcs.push_back({net.in_node[v], MaxFlowDigraph::kSink});
    if (!g.is_input(v) && !g.is_output(v)) net.arcs.push_back({net.in_node[v], net.out_node[v]});
  }
  for (int v = 0; v < n; ++v) {
    if (g.is_output(v)) continue;
    for (int w : g.neighbors(v)) {
      if (g.is_input(w)) continue;
      net.arcs.push_back({net.out_node[v], net.in_node[w]});
    }
  }
  return net;
}

// ---------------------------------------------------------------------------
// Ford-Fulkerson

NetworkFlow max_integral_flow(const MaxFlowDigraph& net) {
  const int num_nodes = static_cast<int>(net.nodes.size());
  const int num_arcs = static_cast<int>(net.arcs.size());

  // Residual adjacency: entry 2a is arc a forward, 2a+1 is arc a backward.
  std::vector<std::vector<int>> residual(num_nodes);
  for (int a = 0; a < num_arcs; ++a) {
    residual[net.arcs[a].from].push_back(2 * a);
    residual[net.arcs[a].to].push_back(2 * a + 1);
  }
  auto head = [&](int r) { return r % 2 == 0 ? net.arcs[r / 2].to : net.arcs[r / 2].from; };
  auto order_key = [&](int node) {
    const auto& nd = net.nodes[node];
    if (nd.kind == MaxFlowDigraph::NodeKind::kSink) return std::numeric_limits<int>::max();
    return nd.vertex;
  };
  for (auto& adj : residual) {
    std::stable_sort(adj.begin(), adj.end(),
                     [&](int x, int y) { return order_key(head(x)) < order_key(head(y)); });
  }

  NetworkFlow result;
  result.arc_flow.assign(num_arcs, 0);
  std::vector<int> via(num_nodes);
  std::vector<int> queue;
  queue.reserve(num_nodes);

  while (true) {
    std::fill(via.begin(), via.end(), -1);
    queue.clear();
    queue.push_back(MaxFlowDigraph::kSource);
    via[MaxFlowDigraph::kSource] = -2;
    for (std::size_t qi = 0; qi < queue.size() && via[MaxFlowDigraph::kSink] == -1; ++qi) {
      const int x = queue[qi];
      for (int r : residual[x]) {
        const bool forward = r % 2 == 0;
        const int flow = result.arc_flow[r / 2];
        if (forward ? flow != 0 : flow != 1) continue;
        const int y = head(r);
        if (via[y] != -1) continue;
        via[y] = r;
        queue.push_back(y);
      }
    }
    if (via[MaxFlowDigraph::kSink] == -1) break;
    for (int y = MaxFlowDigraph::kSink; y != MaxFlowDigraph::kSource;) {
      const int r = via[y];
      result.arc_flow[r / 2] = r % 2 == 0 ? 1 : 0;
      y = r % 2 == 0 ? net.arcs[r / 2].from : net.arcs[r / 2].to;
    }
    ++result.value;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Path cover

Result<PathCover> find_path_cover(const Geometry& g) {
  if (g.inputs().size() != g.outputs().size()) {
    throw std::invalid_argument("path cover search requires |I| = |O|");
  }
  const MaxFlowDigraph net = build_max_flow_digraph(g);
  const NetworkFlow flow = max_integral_flow(net);

  const int n = g.size();
  // Positive-flow successor of each out-flow node, translated to vertices.
  std::vector<int> next(n, -1);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    if (flow.arc_flow[a] == 0) continue;
    const auto& from = net.nodes[net.arcs[a].from];
    const auto& to = net.nodes[net.arcs[a].to];
    if (from.kind == MaxFlowDigraph::NodeKind::kOutFlow &&
        to.kind == MaxFlowDigraph::NodeKind::kInFlow) {
      next[from.vertex] = to.vertex;
    }
  }

  PathCover cover;
  cover.path_of.assign(n, -1);
  cover.position.assign(n, -1);
  cover.successor.assign(n, -1);
  for (Label in : g.inputs()) {
    std::vector<int> path{g.index_of(in)};
    while (!g.is_output(path.back()) && next[path.back()] >= 0) path.push_back(next[path.back()]);
    if (!g.is_output(path.back())) continue;  // input carries no flow
    const int id = static_cast<int>(cover.paths.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      cover.path_of[path[i]] = id;
      cover.position[path[i]] = static_cast<int>(i);
      if (i + 1 < path.size()) cover.successor[path[i]] = path[i + 1];
    }
    cover.paths.push_back(std::move(path));
  }

  std::vector<Label> uncovered;
  for (int v = 0; v < n; ++v) {
    if (cover.path_of[v] < 0) uncovered.push_back(g.label(v));
  }
  if (!uncovered.empty()) {
    return Result<PathCover>::fail("no-path-cover", std::move(uncovered));
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Dependency order

DependencyOrder::DependencyOrder(int num_paths, std::vector<int> sup, std::vector<int> path_of,
                                 std::vector<int> position)
    : num_paths_(num_paths),
      sup_(std::move(sup)),
      path_of_(std::move(path_of)),
      position_(std::move(position)) {}

Result<DependencyOrder> find_dependency_order(const Geometry& g, const PathCover& cover) {
  enum class Status : char { kNone, kPending, kFixed };
  const int n = g.size();
  const int k = static_cast<int>(cover.paths.size());
  std::vector<int> sup(static_cast<std::size_t>(n) * k, -1);
  std::vector<Status> status(n, Status::kNone);

  auto dependents = [&](int x) {
    std::vector<int> ys;
    const int fx = cover.successor[x];
    if (fx < 0) return ys;
    ys.reserve(g.neighbors(fx).size() + 1);
    for (int y : g.neighbors(fx)) {
      if (y != x) ys.push_back(y);
    }
    ys.insert(std::upper_bound(ys.begin(), ys.end(), fx), fx);
    return ys;
  };
  auto merge = [&](int x, int y) {
    int* sx = &sup[static_cast<std::size_t>(x) * k];
    const int* sy = &sup[static_cast<std::size_t>(y) * k];
    for (int p = 0; p < k; ++p) {
      if (sy[p] >= 0 && (sx[p] < 0 || sy[p] < sx[p])) sx[p] = sy[p];
    }
  };

  struct Frame {
    int vertex;
    std::vector<int> pending;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;

  for (int root = 0; root < n; ++root) {
    if (status[root] != Status::kNone) continue;
    auto enter = [&](int x) {
      status[x] = Status::kPending;
      sup[static_cast<std::size_t>(x) * k + cover.path_of[x]] = cover.position[x];
      stack.push_back({x, dependents(x)});
    };
    enter(root);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.pending.size()) {
        const int x = top.vertex;
        status[x] = Status::kFixed;
        stack.pop_back();
        if (!stack.empty()) merge(stack.back().vertex, x);
        continue;
      }
      const int y = top.pending[top.next++];
      switch (status[y]) {
        case Status::kNone:
          enter(y);
          break;
        case Status::kPending: {
          std::vector<Label> cycle;
          auto it = std::find_if(stack.begin(), stack.end(),
                                 [y](const Frame& f) { return f.vertex == y; });
          for (; it != stack.end(); ++it) cycle.push_back(g.label(it->vertex));
          return Result<DependencyOrder>::fail("dependency-cycle", std::move(cycle));
        }
        case Status::kFixed:
          merge(top.vertex, y);
          break;
      }
    }
  }
  return DependencyOrder(k, std::move(sup), cover.path_of, cover.position);
}

Result<Flow> find_flow(const Geometry& g) {
  auto cover = find_path_cover(g);
  if (!cover) return cover.failure();
  auto order = find_dependency_order(g, *cover);
  if (!order) return order.failure();
  return Flow{std::move(cover).value(), std::move(order).value()};
}

std::map<Label, Label> successor_map(const Geometry& g, const PathCover& cover) {
  std::map<Label, Label> f;
  for (int v = 0; v < g.size(); ++v) {
    if (cover.successor[v] >= 0) f[g.label(v)] = g.label(cover.successor[v]);
  }
  return f;
}

std::vector<std::vector<Label>> labeled_paths(const Geometry& g, const PathCover& cover) {
  std::vector<std::vector<Label>> out;
  for (const auto& p : cover.paths) {
    auto& lp = out.emplace_back();
    for (int v : p) lp.push_back(g.label(v));
  }
  return out;
}

}  // namespace owc
