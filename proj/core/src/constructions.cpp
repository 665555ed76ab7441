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

#include "sublabel/constructions.hpp"

#include <array>
#include <cstdlib>
#include <numeric>

namespace sublabel {
namespace {

constexpr std::array<std::pair<LabelingKind, std::string_view>, 6> kKindNames{{
    {LabelingKind::kSaml, "saml"},
    {LabelingKind::kSaAl, "sa-al"},
    {LabelingKind::kSvAl, "sv-al"},
    {LabelingKind::kSaal, "saal"},
    {LabelingKind::kSval, "sval"},
    {LabelingKind::kSaSvAl, "sa-sv-al"},
}};

[[noreturn]] void reject_kind(Family family, LabelingKind kind) {
  std::string valid;
  for (LabelingKind k : valid_kinds(family)) {
    if (!valid.empty()) valid += ", ";
    valid += to_string(k);
  }
  throw BoundsError("labeling", std::string(to_string(family)) + ": labeling '" +
                                    std::string(to_string(kind)) + "' is not available (valid: " +
                                    valid + ")");
}

// 1-based accessors over 0-based storage, to keep the formulas readable.
struct Labels {
  TotalLabeling l;
  Labels(std::size_t vertices, std::size_t arcs) {
    l.vertex_labels.assign(vertices, 0);
    l.arc_labels.assign(arcs, 0);
  }
  Label& vertex(std::size_t index) { return l.vertex_labels.at(index); }
  Label& arc(std::size_t index) { return l.arc_labels.at(index); }
};

Construction finish(Digraph g, Labels labels, std::optional<std::string> note = std::nullopt) {
  validate(g, labels.l);
  return {std::move(g), std::move(labels.l), std::move(note)};
}

}  // namespace

std::string_view to_string(LabelingKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<LabelingKind> parse_labeling_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<LabelingKind> valid_kinds(Family family) {
  using K = LabelingKind;
  switch (family) {
    case Family::kPath: return {K::kSaml, K::kSaAl, K::kSvAl};
    case Family::kCycle: return {K::kSaSvAl};
    case Family::kStar: return {K::kSaml, K::kSaAl, K::kSval};
    case Family::kWheel: return {K::kSval};
    case Family::kTadpole: return {K::kSaal, K::kSvAl};
    case Family::kFriendship: return {K::kSaAl};
    case Family::kButterfly: return {K::kSaAl, K::kSval};
  }
  return {};
}

Construction construct_path(int n, LabelingKind kind) {
  switch (kind) {
    case LabelingKind::kSaml: {
      Digraph g = build_family(Family::kPath, n, std::nullopt, Orientation::kAlternating);
      Labels l(g.vertex_count(), g.arc_count());
      for (int i = 1; i <= n; ++i) l.vertex(i - 1) = i % 2 == 1 ? (i + 1) / 2 : n + 1 - i / 2;
      for (int i = 1; i < n; ++i) l.arc(i - 1) = 2 * n - i;
      return finish(std::move(g), std::move(l));
    }
    case LabelingKind::kSaAl: {
      Digraph g = build_family(Family::kPath, n, std::nullopt, Orientation::kForward);
      Labels l(g.vertex_count(), g.arc_count());
      for (int i = 1; i <= n; ++i) l.vertex(i - 1) = i;
      for (int i = 1; i < n; ++i) l.arc(i - 1) = 2 * n - i;
      return finish(std::move(g), std::move(l),
                    "arc labels use 2n-i; the 2n+1-i variant is not a bijection onto 1..2n-1, "
                    "so the progression starts at n+2 rather than n+3");
    }
    case LabelingKind::kSvAl: {
      Digraph g = build_family(Family::kPath, n, std::nullopt, Orientation::kForward);
      Labels l(g.vertex_count(), g.arc_count());
      for (int i = 1; i <= n; ++i) l.vertex(i - 1) = 2 * n - i;
      for (int i = 1; i < n; ++i) l.arc(i - 1) = i;
      return finish(std::move(g), std::move(l));
    }
    default:
      reject_kind(Family::kPath, kind);
  }
}

Construction construct_cycle(int n) {
  Digraph g = build_family(Family::kCycle, n);
  Labels l(g.vertex_count(), g.arc_count());
  for (int i = 1; i <= n; ++i) l.vertex(i - 1) = i;
  for (int i = 1; i < n; ++i) l.arc(i - 1) = 2 * n - i;
  l.arc(n - 1) = 2 * n;
  return finish(std::move(g), std::move(l));
}

Construction construct_star(int n, LabelingKind kind) {
  switch (kind) {
    case LabelingKind::kSaml: {
      Digraph g = build_family(Family::kStar, n, std::nullopt, Orientation::kOut);
      Labels l(g.vertex_count(), g.arc_count());
      l.vertex(0) = 1;
      for (int i = 1; i <= n; ++i) {
        l.vertex(i) = i + 1;
        l.arc(i - 1) = 2 * (n + 1) - i;
      }
      return finish(std::move(g), std::move(l));
    }
    case LabelingKind::kSaAl: {
      Digraph g = build_family(Family::kStar, n, std::nullopt, Orientation::kIn);
      Labels l(g.vertex_count(), g.arc_count());
      l.vertex(0) = 2 * n + 1;
      for (int i = 1; i <= n; ++i) {
        l.vertex(i) = i;
        l.arc(i - 1) = 2 * n + 1 - i;
      }
      return finish(std::move(g), std::move(l));
    }
    case LabelingKind::kSval: {
      Digraph g = build_family(Family::kStar, n, std::nullopt, Orientation::kIn);
      Labels l(g.vertex_count(), g.arc_count());
      l.vertex(0) = 1;
      for (int i = 1; i <= n; ++i) {
        l.vertex(i) = n + 1 + i;
        l.arc(i - 1) = n + 2 - i;
      }
      return finish(std::move(g), std::move(l));
    }
    default:
      reject_kind(Family::kStar, kind);
  }
}

Construction construct_wheel(int n) {
  Digraph g = build_family(Family::kWheel, n);
  Labels l(g.vertex_count(), g.arc_count());
  // Spokes a_i occupy arcs 0..n-1, rim arcs b_i occupy n..2n-1.
  auto spoke = [&](int i) -> Label& { return l.arc(i - 1); };
  auto rim = [&](int i) -> Label& { return l.arc(n + i - 1); };
  l.vertex(0) = 1;
  for (int i = 1; i < n; ++i) l.vertex(i) = 3 * n + 1 - i;
  l.vertex(n) = 3 * n + 1;
  for (int i = 1; i <= n; ++i) spoke(i) = i + 1;
  for (int i = 1; i < n; ++i) rim(i) = n + 2 + i;
  rim(n) = n + 2;
  return finish(std::move(g), std::move(l));
}

Construction construct_tadpole(int n, int t, LabelingKind kind) {
  if (kind != LabelingKind::kSaal && kind != LabelingKind::kSvAl) {
    reject_kind(Family::kTadpole, kind);
  }
  Digraph g = build_family(Family::kTadpole, n, t);
  Labels l(g.vertex_count(), g.arc_count());
  auto v = [&](int i) -> Label& { return l.vertex(i - 1); };
  auto u = [&](int i) -> Label& { return l.vertex(n + i - 1); };
  auto a = [&](int i) -> Label& { return l.arc(i - 1); };
  // b_i = u_i -> u_{i+1}, i = 1..t-1.
  auto b = [&](int i) -> Label& { return l.arc(n + i - 1); };
  Label& c = l.arc(n + t - 1);

  if (kind == LabelingKind::kSaal) {
    v(1) = t + 1;
    for (int i = 2; i <= n; ++i) v(i) = n + t + 2 - i;
    for (int i = 1; i <= t; ++i) u(i) = i;
    for (int i = 1; i <= n; ++i) a(i) = n + t + i;
    // The arc entering u_j is b_{j-1}.
    for (int j = 2; j <= t; ++j) b(j - 1) = 2 * n + 2 * t + 2 - j;
    c = 2 * n + t + 1;
  } else {
    v(1) = n + t + 1;
    for (int i = 2; i <= n; ++i) v(i) = 2 * n + t + 2 - i;
    for (int i = 1; i <= t; ++i) u(i) = 2 * n + 2 * t + 1 - i;
    for (int i = 1; i <= n; ++i) a(i) = t + i;
    for (int i = 1; i < t; ++i) b(i) = i;
    c = t;
  }
  return finish(std::move(g), std::move(l));
}

Construction construct_friendship(int n) {
  Digraph g = build_family(Family::kFriendship, n);
  Labels l(g.vertex_count(), g.arc_count());
  l.vertex(0) = 1;
  for (int i = 1; i <= n; ++i) {
    l.vertex(i) = i + 1;          // v_{i1}
    l.vertex(n + i) = n + 1 + i;  // v_{i2}
    l.arc(i - 1) = 2 * n + 1 + i;          // a_{i0}
    l.arc(n + i - 1) = 3 * n + 1 + i;      // a_{i1}
    l.arc(2 * n + i - 1) = 5 * n + 2 - i;  // a_{i2}
  }
  return finish(std::move(g), std::move(l));
}

Construction construct_butterfly(int n, LabelingKind kind) {
  if (kind != LabelingKind::kSaAl && kind != LabelingKind::kSval) {
    reject_kind(Family::kButterfly, kind);
  }
  Digraph g = build_family(Family::kButterfly, n);
  Labels l(g.vertex_count(), g.arc_count());
  Label& x = l.vertex(0);
  auto v = [&](int i) -> Label& { return l.vertex(i); };
  auto u = [&](int i) -> Label& { return l.vertex(n - 1 + i); };
  auto a = [&](int i) -> Label& { return l.arc(i - 1); };
  auto b = [&](int i) -> Label& { return l.arc(n + i - 1); };

  if (kind == LabelingKind::kSaAl) {
    x = 2 * n - 1;
    for (int i = 1; i < n; ++i) {
      v(i) = 2 * n - 1 - 2 * i;
      u(i) = 2 * n - 2 * i;
    }
    for (int i = 1; i <= n - 2; ++i) {
      a(i) = 4 * n - 1 - 2 * i;
      b(i) = 4 * n - 2 - 2 * i;
    }
    a(n - 1) = 2 * n + 1;
    b(n - 1) = 2 * n;
    a(n) = 4 * n - 2;
    b(n) = 4 * n - 1;
  } else {
    x = 4 * n - 1;
    for (int i = 1; i < n; ++i) {
      v(i) = 2 * n - 1 + 2 * i;
      u(i) = 2 * n + 2 * i;
      a(i) = 2 * n - 1 - 2 * i;
      b(i) = 2 * n - 2 * i;
    }
    a(n) = 2 * n - 1;
    b(n) = 2 * n;
  }
  return finish(std::move(g), std::move(l));
}

Construction construct(Family family, int n, std::optional<int> t, LabelingKind kind) {
  if (family != Family::kTadpole && t) {
    throw BoundsError("t", std::string(to_string(family)) + ": parameter t is only valid for tadpole");
  }
  switch (family) {
    case Family::kPath:
      return construct_path(n, kind);
    case Family::kCycle:
      if (kind != LabelingKind::kSaSvAl) reject_kind(family, kind);
      return construct_cycle(n);
    case Family::kStar:
      return construct_star(n, kind);
    case Family::kWheel:
      if (kind != LabelingKind::kSval) reject_kind(family, kind);
      return construct_wheel(n);
    case Family::kTadpole:
      if (!t) throw BoundsError("t", "tadpole: parameter t is required");
      return construct_tadpole(n, *t, kind);
    case Family::kFriendship:
      if (kind != LabelingKind::kSaAl) reject_kind(family, kind);
      return construct_friendship(n);
    case Family::kButterfly:
      return construct_butterfly(n, kind);
  }
  reject_kind(family, kind);
}

Construction graceful_to_strong_saml(std::span<const TreeEdge> edges, std::span<const Label> phi) {
  const std::size_t n = phi.size();
  if (n == 0) throw ValidationError("tree must have at least one vertex");
  if (edges.size() != n - 1) {
    throw ValidationError("not a tree: expected " + std::to_string(n - 1) + " edges, got " +
                          std::to_string(edges.size()));
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const TreeEdge& e : edges) {
    if (e.a >= n || e.b >= n) throw ValidationError("not a tree: edge endpoint out of range");
    const std::size_t ra = find(e.a);
    const std::size_t rb = find(e.b);
    if (ra == rb) throw ValidationError("not a tree: edges contain a cycle");
    parent[ra] = rb;
  }

  std::vector<bool> seen(n + 1, false);
  for (Label p : phi) {
    if (p < 1 || p > static_cast<Label>(n) || seen[static_cast<std::size_t>(p)]) {
      throw ValidationError("phi is not graceful: vertex labels must be a bijection onto 1.." +
                            std::to_string(n));
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<bool> diff_seen(n, false);
  for (const TreeEdge& e : edges) {
    const auto d = static_cast<std::size_t>(std::llabs(phi[e.a] - phi[e.b]));
    if (diff_seen[d]) {
      throw ValidationError("phi is not graceful: edge difference " + std::to_string(d) +
                            " repeats");
    }
    diff_seen[d] = true;
  }

  std::vector<Arc> arcs;
  TotalLabeling l;
  l.vertex_labels.assign(phi.begin(), phi.end());
  for (const TreeEdge& e : edges) {
    const bool a_larger = phi[e.a] > phi[e.b];
    arcs.push_back(a_larger ? Arc{e.a, e.b} : Arc{e.b, e.a});
    l.arc_labels.push_back(static_cast<Label>(n) + std::llabs(phi[e.a] - phi[e.b]));
  }
  Digraph g(n, std::move(arcs));
  validate(g, l);
  return {std::move(g), std::move(l), std::nullopt};
}

}  // namespace sublabel
