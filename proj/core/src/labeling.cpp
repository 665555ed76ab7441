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

#include "sublabel/labeling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sublabel {
namespace {

bool is_prefix_range(std::span<const Label> labels) {
  std::vector<Label> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<Label>(i + 1)) return false;
  }
  return true;
}

}  // namespace

bool is_bijection(const Digraph& g, const TotalLabeling& l) noexcept {
  if (l.vertex_labels.size() != g.vertex_count() || l.arc_labels.size() != g.arc_count()) {
    return false;
  }
  const std::size_t n = g.order();
  std::vector<bool> seen(n + 1, false);
  auto mark = [&](Label x) {
    if (x < 1 || x > static_cast<Label>(n) || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
    return true;
  };
  return std::all_of(l.vertex_labels.begin(), l.vertex_labels.end(), mark) &&
         std::all_of(l.arc_labels.begin(), l.arc_labels.end(), mark);
}

void validate(const Digraph& g, const TotalLabeling& l) {
  if (l.vertex_labels.size() != g.vertex_count()) {
    throw ValidationError("expected " + std::to_string(g.vertex_count()) + " vertex labels, got " +
                          std::to_string(l.vertex_labels.size()));
  }
  if (l.arc_labels.size() != g.arc_count()) {
    throw ValidationError("expected " + std::to_string(g.arc_count()) + " arc labels, got " +
                          std::to_string(l.arc_labels.size()));
  }
  if (!is_bijection(g, l)) {
    throw ValidationError("labels not a bijection onto 1.." + std::to_string(g.order()));
  }
}

Weight arc_weight(const Digraph& g, const TotalLabeling& l, std::size_t arc) {
  if (arc >= g.arc_count()) {
    throw std::out_of_range("arc index " + std::to_string(arc) + " out of range");
  }
  validate(g, l);
  const Arc& a = g.arc(arc);
  return l.arc_labels[arc] + l.vertex_labels[a.head] - l.vertex_labels[a.tail];
}

Weight vertex_weight(const Digraph& g, const TotalLabeling& l, Vertex v) {
  if (v >= g.vertex_count()) {
    throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
  }
  validate(g, l);
  Weight w = l.vertex_labels[v];
  for (std::size_t i = 0; i < g.arc_count(); ++i) {
    const Arc& a = g.arc(i);
    if (a.head == v) w += l.arc_labels[i];
    if (a.tail == v) w -= l.arc_labels[i];
  }
  return w;
}

WeightProfile weight_profile(const Digraph& g, const TotalLabeling& l) {
  validate(g, l);
  WeightProfile p;
  p.vertex_weights.assign(l.vertex_labels.begin(), l.vertex_labels.end());
  p.arc_weights.reserve(g.arc_count());
  for (std::size_t i = 0; i < g.arc_count(); ++i) {
    const Arc& a = g.arc(i);
    const Label x = l.arc_labels[i];
    p.arc_weights.push_back(x + l.vertex_labels[a.head] - l.vertex_labels[a.tail]);
    p.vertex_weights[a.head] += x;
    p.vertex_weights[a.tail] -= x;
  }
  return p;
}

std::string to_string(const Verdict& verdict) {
  struct Visitor {
    std::string operator()(const Magic& m) const { return "Magic(" + std::to_string(m.mu) + ")"; }
    std::string operator()(const Arithmetic& ar) const {
      return "Arithmetic(" + std::to_string(ar.a) + "," + std::to_string(ar.d) + ")";
    }
    std::string operator()(const Antimagic&) const { return "Antimagic"; }
    std::string operator()(const NoVerdict&) const { return "None"; }
  };
  return std::visit(Visitor{}, verdict);
}

bool is_distinct(const Verdict& verdict, std::size_t weight_count) {
  if (std::holds_alternative<Antimagic>(verdict) || std::holds_alternative<Arithmetic>(verdict)) {
    return true;
  }
  return std::holds_alternative<Magic>(verdict) && weight_count == 1;
}

Verdict classify_weights(std::span<const Weight> weights) {
  if (weights.empty()) return NoVerdict{};
  std::vector<Weight> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == sorted.back()) return Magic{sorted.front()};
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return NoVerdict{};
  const Weight d = sorted[1] - sorted[0];
  for (std::size_t i = 2; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] != d) return Antimagic{};
  }
  return Arithmetic{sorted.front(), d};
}

Classification classify(const TotalLabeling& l, const WeightProfile& profile) {
  Classification c;
  c.arc_verdict = classify_weights(profile.arc_weights);
  c.vertex_verdict = classify_weights(profile.vertex_weights);
  c.strong = is_prefix_range(l.vertex_labels);
  c.strong_star = is_prefix_range(l.arc_labels);
  return c;
}

Classification classify(const Digraph& g, const TotalLabeling& l) {
  return classify(l, weight_profile(g, l));
}

TotalLabeling dual(const Digraph& g, const TotalLabeling& l) {
  validate(g, l);
  const Label top = static_cast<Label>(g.order()) + 1;
  TotalLabeling out = l;
  for (Label& x : out.vertex_labels) x = top - x;
  for (Label& x : out.arc_labels) x = top - x;
  return out;
}

std::size_t longest_circuit(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> out(n);
  for (const Arc& a : g.arcs()) out[a.tail].push_back(a.head);

  std::size_t best = 0;
  std::vector<bool> on_path(n, false);
  // Each simple cycle is enumerated once from its smallest vertex.
  for (Vertex start = 0; start < n; ++start) {
    std::function<void(Vertex, std::size_t)> dfs = [&](Vertex v, std::size_t depth) {
      for (Vertex w : out[v]) {
        if (w == start) {
          best = std::max(best, depth);
        } else if (w > start && !on_path[w]) {
          on_path[w] = true;
          dfs(w, depth + 1);
          on_path[w] = false;
        }
      }
    };
    on_path[start] = true;
    dfs(start, 1);
    on_path[start] = false;
  }
  return best;
}

std::string HalfInteger::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

MuBound mu_bounds(const Digraph& g) {
  MuBound b;
  b.s = longest_circuit(g);
  const auto s = static_cast<std::int64_t>(b.s);
  const auto order = static_cast<std::int64_t>(g.order());
  b.lower.twice = s + 1;
  b.upper.twice = 2 * order - s + 1;
  return b;
}

}  // namespace sublabel
