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

#include "owc/compile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace owc {
namespace {

constexpr double kTermTolerance = 1e-12;

double uniform_angle(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
}

// Lexicographic k-subsets of `pool`.
std::vector<std::vector<Label>> subsets(const std::vector<Label>& pool, std::size_t k) {
  std::vector<std::vector<Label>> out;
  if (k > pool.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Label> s;
    for (std::size_t i : idx) s.push_back(pool[i]);
    out.push_back(std::move(s));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Label> range(Label first, Label last) {
  std::vector<Label> v;
  for (Label x = first; x <= last; ++x) v.push_back(x);
  return v;
}

}  // namespace

std::string to_string(Stage s) {
  switch (s) {
    case Stage::kLemmaBound: return "lemma-bound";
    case Stage::kNoMatchingGraph: return "no-matching-graph";
    case Stage::kNoPathCover: return "no-path-cover";
    case Stage::kDependencyCycle: return "dependency-cycle";
    case Stage::kVerificationMismatch: return "verification-mismatch";
  }
  return "unknown";
}

std::vector<double> anchor_phases(const UnitaryMatrix& u) {
  std::vector<double> phases;
  for (const Complex& z : u.matrix().data()) {
    if (std::abs(z) <= kTermTolerance) continue;
    double a = std::fmod(std::arg(z), std::numbers::pi);
    if (a < 0) a += std::numbers::pi;
    if (std::numbers::pi - a < 1e-9) a = 0.0;
    phases.push_back(a);
  }
  std::sort(phases.begin(), phases.end());
  std::vector<double> out;
  for (double a : phases) {
    if (out.empty() || a - out.back() > 1e-9) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<std::optional<double>>> slot_variants(const UnitaryMatrix& u, int aux,
                                                              std::size_t cap,
                                                              std::uint64_t seed) {
  const int k = u.num_qubits();
  const std::size_t count = u.dim() * u.dim();
  std::vector<std::size_t> varying;
  for (std::size_t c = 0; c < count; ++c) {
    if (antipodal_pair_count(u.matrix().data()[c], aux, k) > 0) varying.push_back(c);
  }

  std::vector<std::vector<std::optional<double>>> out;
  out.emplace_back(count, std::nullopt);
  if (varying.empty()) return out;

  const std::vector<double> anchors = anchor_phases(u);
  const std::size_t radix = anchors.size() + 1;
  std::vector<std::size_t> digits(varying.size(), 0);
  while (out.size() < cap) {
    std::size_t i = digits.size();
    while (i > 0 && digits[i - 1] + 1 == radix) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
    std::vector<std::optional<double>> axes(count, std::nullopt);
    for (std::size_t j = 0; j < varying.size(); ++j) {
      if (digits[j] > 0) axes[varying[j]] = anchors[digits[j] - 1];
    }
    out.push_back(std::move(axes));
  }

  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(aux));
  while (out.size() < cap) {
    std::vector<std::optional<double>> axes(count, std::nullopt);
    for (std::size_t c : varying) axes[c] = uniform_angle(rng);
    out.push_back(std::move(axes));
  }
  return out;
}

PermutationOdometer::PermutationOdometer(const std::vector<SlotSolution>& slots) {
  for (const SlotSolution& s : slots) {
    std::vector<int> cls(s.terms.size());
    std::vector<Complex> reps;
    std::vector<std::vector<int>> members;
    for (std::size_t t = 0; t < s.terms.size(); ++t) {
      std::size_t r = 0;
      while (r < reps.size() && std::abs(reps[r] - s.terms[t]) > kTermTolerance) ++r;
      if (r == reps.size()) {
        reps.push_back(s.terms[t]);
        members.emplace_back();
      }
      cls[t] = static_cast<int>(r);
      members[r].push_back(static_cast<int>(t));
    }
    classes_.push_back(cls);
    start_.push_back(std::move(cls));
    members_.push_back(std::move(members));
  }
  perms_.resize(slots.size());
  for (std::size_t c = 0; c < slots.size(); ++c) rebuild(c);
}

void PermutationOdometer::rebuild(std::size_t c) {
  std::vector<std::size_t> used(members_[c].size(), 0);
  perms_[c].resize(classes_[c].size());
  for (std::size_t s = 0; s < classes_[c].size(); ++s) {
    const int cls = classes_[c][s];
    perms_[c][s] = members_[c][cls][used[cls]++];
  }
}

bool PermutationOdometer::next() {
  for (std::size_t c = classes_.size(); c-- > 0;) {
    std::next_permutation(classes_[c].begin(), classes_[c].end());
    rebuild(c);
    if (classes_[c] != start_[c]) return true;
  }
  return false;
}

void PermutationOdometer::randomize(std::mt19937_64& rng) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto& v = classes_[c];
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[rng() % i]);
    }
    rebuild(c);
  }
}

CompileOutcome compile(const UnitaryMatrix& u, const CompileConfig& cfg) {
  const int k = u.num_qubits();
  const int n0 = cfg.aux.value_or(2 * k);
  const int n1 = cfg.max_aux.value_or(n0);
  if (n0 < k) throw std::invalid_argument("auxiliary count must be at least the qubit count");
  if (n1 < n0) throw std::invalid_argument("max_aux must not be below aux");
  if (k + n1 > cfg.limits.max_qubits) {
    throw std::invalid_argument("computation space exceeds the simulation limit");
  }
  if (cfg.max_perms == 0 || cfg.max_slot_variants == 0 || cfg.max_trials == 0) {
    throw std::invalid_argument("search caps must be positive");
  }
  if (!(cfg.tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (cfg.outputs) {
    std::vector<Label> o = *cfg.outputs;
    std::sort(o.begin(), o.end());
    if (o.size() != static_cast<std::size_t>(k) ||
        std::adjacent_find(o.begin(), o.end()) != o.end()) {
      throw std::invalid_argument("explicit outputs must be " + std::to_string(k) +
                                  " distinct labels");
    }
    for (Label x : o) {
      if (x <= k || x > k + n0) {
        throw std::invalid_argument("explicit output " + std::to_string(x) +
                                    " is not an auxiliary qubit");
      }
    }
  }

  CompileOutcome outcome;
  ExhaustionReport& rep = outcome.report;
  rep.min_aux = n0;
  rep.max_aux = n1;
  std::mt19937_64 perm_rng(cfg.seed);
  const std::vector<Label> inputs = range(1, k);

  auto fail = [&](Stage s) { ++rep.failures[static_cast<int>(s)]; };
  auto out_of_trials = [&] {
    if (rep.trials < cfg.max_trials) return false;
    rep.cap_exhausted = true;
    return true;
  };

  for (int aux = n0; aux <= n1; ++aux) {
    const std::vector<Label> vertices = range(1, k + aux);
    std::vector<std::vector<Label>> output_sets;
    if (cfg.outputs) {
      output_sets.push_back(*cfg.outputs);
      std::sort(output_sets.back().begin(), output_sets.back().end());
    } else {
      output_sets = subsets(range(k + 1, k + aux), static_cast<std::size_t>(k));
    }

    std::vector<std::vector<std::optional<double>>> variants;
    try {
      variants = slot_variants(u, aux, cfg.max_slot_variants, cfg.seed);
    } catch (const NoJointSolution&) {
      for (std::size_t i = 0; i < output_sets.size(); ++i) {
        if (out_of_trials()) return outcome;
        ++rep.trials;
        fail(Stage::kLemmaBound);
      }
      continue;
    }

    for (const auto& outputs : output_sets) {
      const QubitIndexing indexing(vertices, inputs, outputs);
      for (std::size_t v = 0; v < variants.size(); ++v) {
        const std::vector<SlotSolution> slots = solve_all_slots(u, aux, variants[v]);
        PermutationOdometer odo(slots);
        bool more = true;
        for (std::size_t t = 0; more && t < cfg.max_perms + cfg.random_perms; ++t) {
          if (out_of_trials()) return outcome;
          if (t == cfg.max_perms) {
            // Lexicographic cap reached with arrangements left: sample.
            rep.cap_exhausted = true;
          }
          if (t >= cfg.max_perms) odo.randomize(perm_rng);
          ++rep.trials;

          const DecompositionPlan plan(indexing, odo.current());
          const PlannedDiagonal view(plan, slots);
          auto match = match_graph(view, indexing, cfg.tol);
          if (!match || !verify_full(view, *match, indexing, cfg.tol)) {
            fail(Stage::kNoMatchingGraph);
          } else {
            Geometry g(vertices, match->edges, inputs, outputs);
            auto flow = find_flow(g);
            if (!flow) {
              fail(flow.reason() == "no-path-cover" ? Stage::kNoPathCover
                                                    : Stage::kDependencyCycle);
            } else {
              Pattern p = synthesize(g, *flow, match->angles);
              const VerificationReport check =
                  check_deterministic_and_equal(p, u, cfg.tol, cfg.limits);
              if (!check.ok()) {
                fail(Stage::kVerificationMismatch);
              } else {
                ++rep.successes;
                CandidatePlan cand{aux, outputs, v, variants[v], odo.current()};
                if (std::all_of(cand.slot_axes.begin(), cand.slot_axes.end(),
                                [](const auto& a) { return !a.has_value(); })) {
                  cand.slot_axes.clear();
                }
                outcome.bundle.emplace(CompileBundle{indexing, std::move(cand),
                                                     enumerate_diagonal(u, plan, slots),
                                                     std::move(*match), std::move(g),
                                                     std::move(*flow), std::move(p), check,
                                                     rep.trials});
                return outcome;
              }
            }
          }
          if (t + 1 < cfg.max_perms) {
            more = odo.next();
          } else if (t + 1 == cfg.max_perms) {
            // Peek whether the lexicographic enumeration was cut short.
            PermutationOdometer probe = odo;
            if (probe.next()) {
              if (cfg.random_perms == 0) rep.cap_exhausted = true;
            } else {
              more = false;
            }
          }
        }
      }
      if (variants.size() == cfg.max_slot_variants && variants.size() > 1) {
        rep.cap_exhausted = true;
      }
    }
  }
  return outcome;
}

}  // namespace owc
