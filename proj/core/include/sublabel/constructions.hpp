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

#ifndef SUBLABEL_CONSTRUCTIONS_HPP_
#define SUBLABEL_CONSTRUCTIONS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sublabel/digraph.hpp"
#include "sublabel/labeling.hpp"

namespace sublabel {

/// Which labeling a constructor produces.
///
///   kSaml    arc-magic                      (path, star)
///   kSaAl    arc-arithmetic                 (path, star, friendship, butterfly)
///   kSvAl    vertex-arithmetic              (path, tadpole)
///   kSaal    arc-antimagic                  (tadpole)
///   kSval    vertex-antimagic               (star, wheel, butterfly)
///   kSaSvAl  arc- and vertex-arithmetic     (cycle)
enum class LabelingKind { kSaml, kSaAl, kSvAl, kSaal, kSval, kSaSvAl };

std::string_view to_string(LabelingKind kind);
std::optional<LabelingKind> parse_labeling_kind(std::string_view name);

/// Kinds with a constructor for `family`, in a fixed order.
std::vector<LabelingKind> valid_kinds(Family family);

struct Construction {
  Digraph graph;
  TotalLabeling labeling;
  /// Set when the shipped labeling departs from the commonly cited formula.
  std::optional<std::string> discrepancy;
};

/// kSaml: alternating orientation, Magic(n), strong.
/// kSaAl: forward, lambda(v_i)=i, lambda(a_i)=2n-i, Arithmetic(n+2,1), strong.
///        The often-quoted 2n+1-i uses label 2n and skips n+1, so it is not a
///        bijection; the discrepancy note records this.
/// kSvAl: forward, vertex Arithmetic(n,1), strong*.
Construction construct_path(int n, LabelingKind kind);

/// Arc Arithmetic(n+1,1) and vertex Arithmetic(1,1) at once, strong.
Construction construct_cycle(int n);

/// kSaml (out-star) Magic(2n+2), strong; kSaAl (in-star) Arithmetic(2n+2,2);
/// kSval (in-star) leaf weights 1,3,..,2n-1 and center (n+1)(n+2)/2, strong*.
Construction construct_star(int n, LabelingKind kind);

/// Vertex-antimagic; rim weights are n+1, n+3, .., 3n-1 and the center is
/// (n+1)(n+2)/2.
Construction construct_wheel(int n);

/// kSaal: strong, arc weights {n+t+1..2n+2t+1} with 2n+t+1 missing. The path
/// arc entering u_j (j = 2..t) carries 2n+2t+2-j.
/// kSvAl: strong*, vertex Arithmetic(n+t+1,1).
Construction construct_tadpole(int n, int t, LabelingKind kind);

/// Arc Arithmetic(2n+2,1), strong.
Construction construct_friendship(int n);

/// kSaAl: Arithmetic(2n,1), strong. kSval: vertex weights {3} u {2n+3..4n},
/// strong*.
Construction construct_butterfly(int n, LabelingKind kind);

/// Dispatches to the family constructor. `t` is required for tadpoles only.
/// Throws BoundsError (parameter "labeling") for a kind the family lacks.
Construction construct(Family family, int n, std::optional<int> t, LabelingKind kind);

struct TreeEdge {
  Vertex a = 0;
  Vertex b = 0;
};

/// Orients each edge of a gracefully labeled tree from the larger to the
/// smaller phi endpoint and gives it label n + |phi difference|, with vertex
/// labels phi. The result is arc-magic with constant n and strong.
///
/// Throws ValidationError if the edges do not form a tree on phi.size()
/// vertices, or phi is not a graceful bijection onto {1..n}.
Construction graceful_to_strong_saml(std::span<const TreeEdge> edges, std::span<const Label> phi);

}  // namespace sublabel

#endif  // SUBLABEL_CONSTRUCTIONS_HPP_
