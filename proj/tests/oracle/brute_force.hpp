// Copyright 2026 The sublabel Authors.
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

// Test-only brute force over all permutations of 1..N. Deliberately shares
// nothing with the library: plain pairs for arcs, its own weight and
// progression code.

#ifndef SUBLABEL_TESTS_ORACLE_BRUTE_FORCE_HPP_
#define SUBLABEL_TESTS_ORACLE_BRUTE_FORCE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Arcs = std::vector<std::pair<int, int>>;

enum class Want { kMagic, kDistinct, kProgression };

struct Weights {
  std::vector<long> arc;
  std::vector<long> vertex;
};

inline Weights weights(int vertices, const Arcs& arcs, const std::vector<int>& perm) {
  Weights w;
  for (int v = 0; v < vertices; ++v) w.vertex.push_back(perm[v]);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const int label = perm[vertices + i];
    const auto [tail, head] = arcs[i];
    w.arc.push_back(label + perm[head] - perm[tail]);
    w.vertex[head] += label;
    w.vertex[tail] -= label;
  }
  return w;
}

inline bool all_equal(const std::vector<long>& w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [&](long x) { return x == w[0]; });
}

inline bool all_distinct(const std::vector<long>& w) {
  return !w.empty() && std::set<long>(w.begin(), w.end()).size() == w.size();
}

// Progression with difference >= 1 and at least two terms; first term and
// difference returned through the out-params.
inline bool progression(std::vector<long> w, long* first = nullptr, long* step = nullptr) {
  if (w.size() < 2) return false;
  std::sort(w.begin(), w.end());
  const long d = w[1] - w[0];
  if (d < 1) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] - w[i - 1] != d) return false;
  }
  if (first) *first = w[0];
  if (step) *step = d;
  return true;
}

inline bool wanted(const std::vector<long>& w, Want want) {
  switch (want) {
    case Want::kMagic: return all_equal(w);
    case Want::kDistinct: return all_distinct(w);
    case Want::kProgression: return progression(w);
  }
  return false;
}

struct Result {
  std::uint64_t count = 0;
  std::vector<std::vector<int>> solutions;  // label per slot, vertices first
};

/// Every bijection onto 1..N in lexicographic slot order.
inline Result enumerate(int vertices, const Arcs& arcs, bool arc_side, Want want,
                        bool strong = false, bool strong_star = false) {
  const int n = vertices + static_cast<int>(arcs.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Result r;
  if (n == 0) return r;
  do {
    if (strong && !std::all_of(perm.begin(), perm.begin() + vertices,
                               [&](int x) { return x <= vertices; })) {
      continue;
    }
    if (strong_star && !std::all_of(perm.begin() + vertices, perm.end(),
                                    [&](int x) { return x <= n - vertices; })) {
      continue;
    }
    const Weights w = weights(vertices, arcs, perm);
    if (wanted(arc_side ? w.arc : w.vertex, want)) {
      ++r.count;
      r.solutions.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

}  // namespace oracle

#endif  // SUBLABEL_TESTS_ORACLE_BRUTE_FORCE_HPP_
