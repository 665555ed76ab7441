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

#ifndef SUBLABEL_LABELING_HPP_
#define SUBLABEL_LABELING_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sublabel/digraph.hpp"

namespace sublabel {

using Label = std::int64_t;
using Weight = std::int64_t;

/// A total labeling: vertex labels and arc labels, index-aligned with the
/// digraph they belong to. Valid iff together they are exactly {1..|V|+|A|}.
struct TotalLabeling {
  std::vector<Label> vertex_labels;
  std::vector<Label> arc_labels;

  friend bool operator==(const TotalLabeling&, const TotalLabeling&) = default;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ValidationError if the label vectors do not match the graph's
/// sizes or are not a bijection onto {1..N}.
void validate(const Digraph& g, const TotalLabeling& l);

/// Non-throwing form of `validate`.
bool is_bijection(const Digraph& g, const TotalLabeling& l) noexcept;

/// lambda(arc) + lambda(head) - lambda(tail).
Weight arc_weight(const Digraph& g, const TotalLabeling& l, std::size_t arc);

/// lambda(v) + sum of incoming arc labels - sum of outgoing arc labels.
Weight vertex_weight(const Digraph& g, const TotalLabeling& l, Vertex v);

struct WeightProfile {
  std::vector<Weight> arc_weights;
  std::vector<Weight> vertex_weights;

  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

WeightProfile weight_profile(const Digraph& g, const TotalLabeling& l);

struct Magic {
  Weight mu = 0;
  friend bool operator==(const Magic&, const Magic&) = default;
};
struct Arithmetic {
  Weight a = 0;
  Weight d = 0;
  friend bool operator==(const Arithmetic&, const Arithmetic&) = default;
};
struct Antimagic {
  friend bool operator==(const Antimagic&, const Antimagic&) = default;
};
/// A repeated weight without all weights equal, or no weights at all.
struct NoVerdict {
  friend bool operator==(const NoVerdict&, const NoVerdict&) = default;
};

using Verdict = std::variant<Magic, Arithmetic, Antimagic, NoVerdict>;

std::string to_string(const Verdict& verdict);

/// True for Antimagic and Arithmetic, and for Magic over a single weight:
/// the weights are pairwise distinct.
bool is_distinct(const Verdict& verdict, std::size_t weight_count);

/// Verdict for one side's weights. All-equal is Magic (never Arithmetic with
/// d = 0); Arithmetic needs at least two weights forming a progression with
/// d >= 1; an empty list is NoVerdict.
Verdict classify_weights(std::span<const Weight> weights);

struct Classification {
  Verdict arc_verdict = NoVerdict{};
  Verdict vertex_verdict = NoVerdict{};
  bool strong = false;       // vertex labels are exactly {1..|V|}
  bool strong_star = false;  // arc labels are exactly {1..|A|}

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Digraph& g, const TotalLabeling& l);
Classification classify(const TotalLabeling& l, const WeightProfile& profile);

/// Replaces every label x with N + 1 - x. An involution.
TotalLabeling dual(const Digraph& g, const TotalLabeling& l);

/// Length of the longest directed cycle, 0 if acyclic. Exhaustive search,
/// exponential in the worst case.
std::size_t longest_circuit(const Digraph& g);

/// An exact multiple of one half.
struct HalfInteger {
  std::int64_t twice = 0;

  double value() const noexcept { return static_cast<double>(twice) / 2.0; }
  std::string to_string() const;

  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

/// Range any arc-magic constant must fall in: (s+1)/2 <= mu <= (2N-s+1)/2,
/// where s is the longest circuit.
struct MuBound {
  std::size_t s = 0;
  HalfInteger lower;
  HalfInteger upper;

  bool contains(Weight mu) const noexcept {
    return lower.twice <= 2 * mu && 2 * mu <= upper.twice;
  }

  friend bool operator==(const MuBound&, const MuBound&) = default;
};

MuBound mu_bounds(const Digraph& g);

}  // namespace sublabel

#endif  // SUBLABEL_LABELING_HPP_
