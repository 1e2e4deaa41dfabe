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

#include "oracles.hpp"

#include <stdexcept>

namespace owc::oracle {
namespace {

struct Masks {
  int n = 0;
  std::vector<std::uint32_t> adj;
  std::uint32_t in = 0;
  std::uint32_t out = 0;
};

Masks masks(const Geometry& g) {
  if (g.size() > kMaxVertices) throw std::length_error("oracle instance too large");
  Masks m;
  m.n = g.size();
  m.adj.assign(m.n, 0);
  for (int v = 0; v < m.n; ++v) {
    for (int w : g.neighbors(v)) m.adj[v] |= 1u << w;
    if (g.is_input(v)) m.in |= 1u << v;
    if (g.is_output(v)) m.out |= 1u << v;
  }
  return m;
}

// Edges of the relation generated by f, excluding self-loops.
std::vector<std::uint32_t> relation(const Masks& m, const std::vector<int>& f) {
  std::vector<std::uint32_t> rel(m.n, 0);
  for (int x = 0; x < m.n; ++x) {
    if (f[x] < 0) continue;
    rel[x] = ((1u << f[x]) | m.adj[f[x]]) & ~(1u << x);
  }
  return rel;
}

bool acyclic(const std::vector<std::uint32_t>& rel) {
  const int n = static_cast<int>(rel.size());
  std::uint32_t removed = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if (removed >> v & 1) continue;
      if ((rel[v] & ~removed) == 0) {
        removed |= 1u << v;
        progress = true;
      }
    }
  }
  return removed == (n == 32 ? ~0u : (1u << n) - 1);
}

// Injective successor tables on O^c into I^c along edges.
template <class Visit>
void injective_successors(const Masks& m, Visit&& visit) {
  std::vector<int> f(m.n, -1);
  std::vector<int> domain;
  for (int v = 0; v < m.n; ++v) {
    if (!(m.out >> v & 1)) domain.push_back(v);
  }
  const std::uint32_t targets = ~m.in;
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t used) -> void {
    if (i == domain.size()) {
      visit(f);
      return;
    }
    const int x = domain[i];
    std::uint32_t options = m.adj[x] & targets & ~used;
    while (options) {
      const int y = __builtin_ctz(options);
      options &= options - 1;
      f[x] = y;
      self(self, i + 1, used | (1u << y));
    }
    f[x] = -1;
  };
  rec(rec, 0, 0);
}

bool cycle_free(const std::vector<int>& f) {
  const int n = static_cast<int>(f.size());
  for (int x = 0; x < n; ++x) {
    int y = x;
    for (int steps = 0; steps <= n && y >= 0; ++steps) y = f[y];
    if (y >= 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> flows(const Geometry& g) {
  const Masks m = masks(g);
  std::vector<std::vector<int>> out;
  injective_successors(m, [&](const std::vector<int>& f) {
    if (acyclic(relation(m, f))) out.push_back(f);
  });
  return out;
}

bool has_flow(const Geometry& g) { return !flows(g).empty(); }

std::vector<std::vector<int>> path_covers(const Geometry& g) {
  const Masks m = masks(g);
  std::vector<std::vector<int>> out;
  injective_successors(m, [&](const std::vector<int>& f) {
    if (cycle_free(f)) out.push_back(f);
  });
  return out;
}

bool is_causal(const Geometry& g, const std::vector<int>& successor) {
  const Masks m = masks(g);
  // Nodes are directed edges a->b, numbered a * n + b.
  const int n = m.n;
  auto is_arc = [&](int a, int b) { return successor[a] == b; };
  std::vector<int> state(n * n, 0);  // 0 new, 1 on stack, 2 done
  auto dfs = [&](auto&& self, int a, int b) -> bool {
    state[a * n + b] = 1;
    std::uint32_t next = m.adj[b] & ~(1u << a);
    while (next) {
      const int c = __builtin_ctz(next);
      next &= next - 1;
      if (!is_arc(a, b) && !is_arc(b, c)) continue;
      const int s = state[b * n + c];
      if (s == 1) return true;
      if (s == 0 && self(self, b, c)) return true;
    }
    state[a * n + b] = 2;
    return false;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((m.adj[a] >> b & 1) && state[a * n + b] == 0 && dfs(dfs, a, b)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> disjoint_path_families(const Geometry& g) {
  const Masks m = masks(g);
  std::vector<int> inputs;
  for (int v = 0; v < m.n; ++v) {
    if (m.in >> v & 1) inputs.push_back(v);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> f(m.n, -1);
  const std::uint32_t interior = ~(m.in | m.out);

  // Extend the path of inputs[i] from its current end v.
  auto rec = [&](auto&& self, std::size_t i, int v, std::uint32_t used) -> void {
    if (m.out >> v & 1) {
      if (i + 1 == inputs.size()) {
        out.push_back(f);
      } else {
        const int s = inputs[i + 1];
        self(self, i + 1, s, used | (1u << s));
      }
      return;
    }
    std::uint32_t options = m.adj[v] & ~used & (interior | (m.out & ~m.in));
    while (options) {
      const int w = __builtin_ctz(options);
      options &= options - 1;
      f[v] = w;
      self(self, i, w, used | (1u << w));
    }
    f[v] = -1;
  };
  if (inputs.empty()) {
    out.push_back(f);
    return out;
  }
  std::uint32_t used = m.in;
  rec(rec, 0, inputs[0], used);
  return out;
}

std::vector<std::uint32_t> dependency_closure(const Geometry& g,
                                              const std::vector<int>& successor) {
  const Masks m = masks(g);
  std::vector<std::uint32_t> reach = relation(m, successor);
  for (int x = 0; x < m.n; ++x) reach[x] |= 1u << x;
  for (int k = 0; k < m.n; ++k) {
    for (int x = 0; x < m.n; ++x) {
      if (reach[x] >> k & 1) reach[x] |= reach[k];
    }
  }
  return reach;
}

}  // namespace owc::oracle
