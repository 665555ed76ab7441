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

#include "sublabel/digraph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

namespace sublabel {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kStar, "star"},
    {Family::kWheel, "wheel"},
    {Family::kTadpole, "tadpole"},
    {Family::kFriendship, "friendship"},
    {Family::kButterfly, "butterfly"},
}};

constexpr std::array<std::pair<Orientation, std::string_view>, 5> kOrientationNames{{
    {Orientation::kCanonical, "canonical"},
    {Orientation::kForward, "forward"},
    {Orientation::kAlternating, "alternating"},
    {Orientation::kOut, "out"},
    {Orientation::kIn, "in"},
}};

std::string indexed(std::string_view stem, int i) {
  return std::string(stem) + "_" + std::to_string(i);
}

std::string indexed2(std::string_view stem, int i, int j) {
  return std::string(stem) + "_{" + std::to_string(i) + std::to_string(j) + "}";
}

void require_at_least(std::string_view parameter, int value, int minimum, Family family) {
  if (value < minimum) {
    throw BoundsError(std::string(parameter),
                      std::string(to_string(family)) + ": parameter " +
                          std::string(parameter) + " must be >= " + std::to_string(minimum) +
                          ", got " + std::to_string(value));
  }
}

struct Builder {
  std::vector<Arc> arcs;
  FamilyTag tag;

  void add(std::size_t tail, std::size_t head, std::string name) {
    arcs.push_back({static_cast<Vertex>(tail), static_cast<Vertex>(head)});
    tag.arc_names.push_back(std::move(name));
  }
};

Orientation resolve_orientation(Family family, Orientation orientation) {
  auto reject = [&] {
    throw BoundsError("orientation", std::string(to_string(family)) +
                                         ": orientation '" +
                                         std::string(to_string(orientation)) +
                                         "' is not available for this family");
  };
  switch (family) {
    case Family::kPath:
      if (orientation == Orientation::kCanonical) return Orientation::kForward;
      if (orientation != Orientation::kForward && orientation != Orientation::kAlternating) {
        reject();
      }
      return orientation;
    case Family::kStar:
      if (orientation == Orientation::kCanonical) return Orientation::kOut;
      if (orientation != Orientation::kOut && orientation != Orientation::kIn) reject();
      return orientation;
    default:
      if (orientation != Orientation::kCanonical && orientation != Orientation::kForward) {
        reject();
      }
      return Orientation::kCanonical;
  }
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::string_view to_string(Orientation orientation) {
  for (const auto& [o, name] : kOrientationNames) {
    if (o == orientation) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::optional<Orientation> parse_orientation(std::string_view name) {
  for (const auto& [o, n] : kOrientationNames) {
    if (n == name) return o;
  }
  return std::nullopt;
}

BoundsError::BoundsError(std::string parameter, const std::string& message)
    : std::out_of_range(message), parameter_(std::move(parameter)) {}

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs, std::optional<FamilyTag> tag)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), tag_(std::move(tag)) {
  std::set<Arc> seen;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.tail >= vertex_count_ || a.head >= vertex_count_) {
      throw std::invalid_argument("arc " + std::to_string(i) + " has an endpoint outside [0, " +
                                  std::to_string(vertex_count_) + ")");
    }
    if (a.tail == a.head) {
      throw std::invalid_argument("arc " + std::to_string(i) + " is a self-loop");
    }
    if (!seen.insert(a).second) {
      throw std::invalid_argument("arc " + std::to_string(i) + " duplicates an earlier arc");
    }
  }
  if (tag_ && (tag_->vertex_names.size() != vertex_count_ ||
               tag_->arc_names.size() != arcs_.size())) {
    throw std::invalid_argument("family tag name map does not match graph size");
  }
}

std::size_t Digraph::out_degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.tail == v; }));
}

std::size_t Digraph::in_degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.head == v; }));
}

bool Digraph::is_balanced() const {
  std::vector<long> balance(vertex_count_, 0);
  for (const Arc& a : arcs_) {
    ++balance[a.tail];
    --balance[a.head];
  }
  return std::all_of(balance.begin(), balance.end(), [](long b) { return b == 0; });
}

std::string Digraph::vertex_name(Vertex v) const {
  if (tag_ && v < tag_->vertex_names.size()) return tag_->vertex_names[v];
  return "v" + std::to_string(v);
}

std::string Digraph::arc_name(std::size_t index) const {
  if (tag_ && index < tag_->arc_names.size()) return tag_->arc_names[index];
  return "a" + std::to_string(index);
}

Digraph build_family(Family family, int n, std::optional<int> t, Orientation orientation) {
  if (family == Family::kTadpole) {
    if (!t) throw BoundsError("t", "tadpole: parameter t is required");
  } else if (t) {
    throw BoundsError("t", std::string(to_string(family)) + ": parameter t is only valid for tadpole");
  }
  switch (family) {
    case Family::kPath:
      require_at_least("n", n, 2, family);
      break;
    case Family::kStar:
    case Family::kFriendship:
      require_at_least("n", n, 1, family);
      break;
    case Family::kTadpole:
      require_at_least("n", n, 3, family);
      require_at_least("t", *t, 1, family);
      break;
    default:
      require_at_least("n", n, 3, family);
      break;
  }

  Builder b;
  b.tag.family = family;
  b.tag.n = n;
  b.tag.t = t;
  b.tag.orientation = resolve_orientation(family, orientation);
  auto& names = b.tag.vertex_names;
  std::size_t vertex_count = 0;

  switch (family) {
    case Family::kPath: {
      vertex_count = static_cast<std::size_t>(n);
      for (int i = 1; i <= n; ++i) names.push_back(indexed("v", i));
      const bool alternating = b.tag.orientation == Orientation::kAlternating;
      for (int i = 1; i < n; ++i) {
        // v_i has index i-1.
        if (alternating && i % 2 == 1) {
          b.add(i, i - 1, indexed("a", i));
        } else {
          b.add(i - 1, i, indexed("a", i));
        }
      }
      break;
    }
    case Family::kCycle: {
      vertex_count = static_cast<std::size_t>(n);
      for (int i = 1; i <= n; ++i) names.push_back(indexed("v", i));
      for (int i = 1; i <= n; ++i) b.add(i - 1, i % n, indexed("a", i));
      break;
    }
    case Family::kStar: {
      vertex_count = static_cast<std::size_t>(n) + 1;
      for (int i = 0; i <= n; ++i) names.push_back(indexed("v", i));
      const bool out = b.tag.orientation == Orientation::kOut;
      for (int i = 1; i <= n; ++i) {
        if (out) {
          b.add(0, i, indexed("a", i));
        } else {
          b.add(i, 0, indexed("a", i));
        }
      }
      break;
    }
    case Family::kWheel: {
      vertex_count = static_cast<std::size_t>(n) + 1;
      for (int i = 0; i <= n; ++i) names.push_back(indexed("v", i));
      for (int i = 1; i <= n; ++i) b.add(i, 0, indexed("a", i));
      for (int i = 1; i <= n; ++i) b.add(i, i % n + 1, indexed("b", i));
      break;
    }
    case Family::kTadpole: {
      const int len = *t;
      vertex_count = static_cast<std::size_t>(n + len);
      for (int i = 1; i <= n; ++i) names.push_back(indexed("v", i));
      for (int i = 1; i <= len; ++i) names.push_back(indexed("u", i));
      for (int i = 1; i <= n; ++i) b.add(i - 1, i % n, indexed("a", i));
      for (int i = 1; i < len; ++i) b.add(n + i - 1, n + i, indexed("b", i));
      b.add(n + len - 1, 0, "c");
      break;
    }
    case Family::kFriendship: {
      vertex_count = 2 * static_cast<std::size_t>(n) + 1;
      names.push_back("x");
      for (int i = 1; i <= n; ++i) names.push_back(indexed2("v", i, 1));
      for (int i = 1; i <= n; ++i) names.push_back(indexed2("v", i, 2));
      for (int i = 1; i <= n; ++i) b.add(0, i, indexed2("a", i, 0));
      for (int i = 1; i <= n; ++i) b.add(i, n + i, indexed2("a", i, 1));
      for (int i = 1; i <= n; ++i) b.add(n + i, 0, indexed2("a", i, 2));
      break;
    }
    case Family::kButterfly: {
      vertex_count = 2 * static_cast<std::size_t>(n) - 1;
      names.push_back("x");
      for (int i = 1; i < n; ++i) names.push_back(indexed("v", i));
      for (int i = 1; i < n; ++i) names.push_back(indexed("u", i));
      // v_n = u_n = x has index 0.
      auto v_index = [](int i, int len) { return i == len ? 0 : i; };
      auto u_index = [](int i, int len) { return i == len ? 0 : len - 1 + i; };
      for (int i = 1; i <= n; ++i) b.add(v_index(i, n), v_index(i % n + 1, n), indexed("a", i));
      for (int i = 1; i <= n; ++i) b.add(u_index(i, n), u_index(i % n + 1, n), indexed("b", i));
      break;
    }
  }
  return Digraph(vertex_count, std::move(b.arcs), std::move(b.tag));
}

std::vector<Digraph> all_orientations(const Digraph& g) {
  const std::size_t m = g.arc_count();
  if (m > 20) throw std::invalid_argument("all_orientations: more than 20 arcs");
  std::vector<Digraph> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint32_t{1} << i)) std::swap(arcs[i].tail, arcs[i].head);
    }
    std::set<Arc> unique(arcs.begin(), arcs.end());
    if (unique.size() != arcs.size()) continue;
    if (mask == 0) {
      out.push_back(g);
    } else {
      out.emplace_back(g.vertex_count(), std::move(arcs));
    }
  }
  return out;
}

}  // namespace sublabel
