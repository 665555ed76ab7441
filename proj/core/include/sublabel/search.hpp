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

#ifndef SUBLABEL_SEARCH_HPP_
#define SUBLABEL_SEARCH_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sublabel/digraph.hpp"
#include "sublabel/labeling.hpp"

namespace sublabel {

enum class Side { kArc, kVertex };
enum class TargetKind { kMagic, kAntimagic, kArithmetic };

/// The labeling class being searched for. `a` and `d` constrain arithmetic
/// targets only; either may be left open.
struct Target {
  TargetKind kind = TargetKind::kMagic;
  Side side = Side::kArc;
  std::optional<Weight> a;
  std::optional<Weight> d;

  friend bool operator==(const Target&, const Target&) = default;
};

/// "saml", "svml", "saal", "sval", "sa-al", "sv-al".
std::string to_string(const Target& target);
std::optional<Target> parse_target(std::string_view name);

/// Whether a labeling with this classification and weight counts belongs to
/// the target class. Antimagic targets accept any pairwise-distinct profile,
/// including arithmetic ones.
bool matches(const Target& target, const Classification& c, std::size_t arc_count,
             std::size_t vertex_count);

struct SearchMode {
  enum class Kind { kCountAll, kFirstWitness, kCollect };
  Kind kind = Kind::kCountAll;
  /// Witness bound for kCollect; also caps stored witnesses in kCountAll.
  std::size_t limit = 16;

  static SearchMode count_all(std::size_t keep = 16) { return {Kind::kCountAll, keep}; }
  static SearchMode first_witness() { return {Kind::kFirstWitness, 1}; }
  static SearchMode collect(std::size_t k) { return {Kind::kCollect, k}; }

  friend bool operator==(const SearchMode&, const SearchMode&) = default;
};

std::string_view to_string(SearchMode::Kind kind);
std::optional<SearchMode::Kind> parse_search_mode(std::string_view name);

struct SearchQuery {
  Digraph graph;
  Target target;
  bool require_strong = false;
  bool require_strong_star = false;
  SearchMode mode;
};

struct SearchOptions {
  static constexpr std::size_t kDefaultCap = 12;
  /// Largest |V|+|A| the search accepts.
  std::size_t cap = kDefaultCap;
  /// Worker threads splitting the top-level branches. 1 is the reference.
  unsigned workers = 1;
};

struct SearchReport {
  SearchQuery query;
  bool exhaustive = false;
  std::uint64_t solutions_found = 0;
  /// Canonical order: lexicographic over (vertex labels, arc labels).
  std::vector<TotalLabeling> witnesses;
  std::uint64_t nodes_visited = 0;
  std::chrono::nanoseconds elapsed{0};
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t order, std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Backtracking enumeration of all total labelings in the target class.
///
/// Slots are the vertices in index order followed by the arcs in index
/// order, and labels are tried in increasing order, so witnesses come out
/// lexicographically. Pruning:
///   * vertex-magic fixes mu = sum(vertex labels) / |V| once the vertex
///     slots are filled (the arc labels cancel in the weight sum);
///   * arc-magic on a balanced digraph fixes mu = sum(arc labels) / |A|;
///     otherwise the first arc fixes it, and later arc labels are forced;
///   * every weight is checked as soon as all labels it depends on are
///     placed (equality for magic, no repeats otherwise, progression
///     membership when a or d is given).
///
/// Throws CapExceeded when |V|+|A| exceeds `options.cap`, and
/// std::invalid_argument above 62 regardless of the cap.
SearchReport search(const SearchQuery& query, const SearchOptions& options = {});

/// Unpruned enumeration in the same slot order, classifying every complete
/// labeling with `classify`. Reference for `search`; factorial cost.
SearchReport reference_enumerate(const SearchQuery& query, const SearchOptions& options = {});

/// The dicycle C_n has an arc-magic labeling iff it has a vertex-magic one,
/// checked by two exhaustive counts.
bool verify_iff_cycles(int n, const SearchOptions& options = {});

}  // namespace sublabel

#endif  // SUBLABEL_SEARCH_HPP_
