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

#ifndef SUBLABEL_DIGRAPH_HPP_
#define SUBLABEL_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sublabel {

using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class Family { kPath, kCycle, kStar, kWheel, kTadpole, kFriendship, kButterfly };

// kCanonical resolves to the family's only (or default) orientation:
// forward for paths, out for stars.
enum class Orientation { kCanonical, kForward, kAlternating, kOut, kIn };

std::string_view to_string(Family family);
std::string_view to_string(Orientation orientation);
std::optional<Family> parse_family(std::string_view name);
std::optional<Orientation> parse_orientation(std::string_view name);

/// Raised when a family parameter is out of range. `parameter()` names the
/// offending argument ("n", "t" or "orientation").
class BoundsError : public std::out_of_range {
 public:
  BoundsError(std::string parameter, const std::string& message);
  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

/// Family descriptor plus the index map back to the conventional names
/// (v_1, u_2, x, a_{i0}, ...).
struct FamilyTag {
  Family family = Family::kPath;
  int n = 0;
  std::optional<int> t;
  Orientation orientation = Orientation::kCanonical;
  std::vector<std::string> vertex_names;
  std::vector<std::string> arc_names;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Simple digraph: vertex count plus an ordered arc list. Arc order is
/// significant; labelings and weight profiles are index-aligned with it.
class Digraph {
 public:
  Digraph() = default;

  /// Throws std::invalid_argument on out-of-range endpoints, self-loops or
  /// duplicate arcs.
  Digraph(std::size_t vertex_count, std::vector<Arc> arcs,
          std::optional<FamilyTag> tag = std::nullopt);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  /// |V| + |A|, the size of the label range.
  std::size_t order() const noexcept { return vertex_count_ + arcs_.size(); }

  std::span<const Arc> arcs() const noexcept { return arcs_; }
  const Arc& arc(std::size_t index) const { return arcs_.at(index); }

  std::size_t out_degree(Vertex v) const;
  std::size_t in_degree(Vertex v) const;

  /// True when deg+(v) == deg-(v) for every vertex.
  bool is_balanced() const;

  const std::optional<FamilyTag>& family_tag() const noexcept { return tag_; }

  std::string vertex_name(Vertex v) const;
  std::string arc_name(std::size_t index) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::optional<FamilyTag> tag_;
};

/// Builds one of the seven families with its canonical vertex and arc order.
///
///   path        v_1..v_n -> 0..n-1; a_i is arc i-1. forward: v_i -> v_{i+1};
///               alternating: v_{i+1} -> v_i for odd i, v_i -> v_{i+1} else.
///   cycle       v_1..v_n -> 0..n-1; a_i = v_i -> v_{i+1}, a_n = v_n -> v_1.
///   star        v_0 -> 0, v_i -> i; a_i = v_0 -> v_i (out) or v_i -> v_0 (in).
///   wheel       v_0 -> 0; spokes a_i = v_i -> v_0 first, then rim b_i.
///   tadpole     v_1..v_n -> 0..n-1, u_1..u_t -> n..n+t-1;
///               arcs a_1..a_n, b_1..b_{t-1}, c = u_t -> v_1.
///   friendship  x -> 0, v_{i1} -> i, v_{i2} -> n+i;
///               arcs a_{i0} (i=1..n), then a_{i1}, then a_{i2}.
///   butterfly   x -> 0, v_i -> i, u_i -> n-1+i (i < n);
///               arcs a_1..a_n, then b_1..b_n.
Digraph build_family(Family family, int n, std::optional<int> t = std::nullopt,
                     Orientation orientation = Orientation::kCanonical);

/// Every orientation of the underlying graph, in flip-mask order over the
/// arc list (bit i set reverses arc i). The first entry is `g` itself; masks
/// that would create a duplicate arc are skipped. At most 20 arcs.
std::vector<Digraph> all_orientations(const Digraph& g);

}  // namespace sublabel

#endif  // SUBLABEL_DIGRAPH_HPP_
