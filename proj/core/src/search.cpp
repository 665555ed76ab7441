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

#include "sublabel/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>

namespace sublabel {
namespace {

constexpr std::size_t kHardLimit = 62;

constexpr std::array<std::pair<SearchMode::Kind, std::string_view>, 3> kModeNames{{
    {SearchMode::Kind::kCountAll, "count-all"},
    {SearchMode::Kind::kFirstWitness, "first-witness"},
    {SearchMode::Kind::kCollect, "collect"},
}};

bool side_matches(const Target& target, const Verdict& verdict, std::size_t count) {
  if (count == 0) return false;
  switch (target.kind) {
    case TargetKind::kMagic:
      return std::holds_alternative<Magic>(verdict);
    case TargetKind::kAntimagic:
      return is_distinct(verdict, count);
    case TargetKind::kArithmetic: {
      const auto* ar = std::get_if<Arithmetic>(&verdict);
      return ar != nullptr && (!target.a || *target.a == ar->a) && (!target.d || *target.d == ar->d);
    }
  }
  return false;
}

std::uint64_t stop_limit(const SearchMode& mode) {
  switch (mode.kind) {
    case SearchMode::Kind::kCountAll: return std::numeric_limits<std::uint64_t>::max();
    case SearchMode::Kind::kFirstWitness: return 1;
    case SearchMode::Kind::kCollect: return std::max<std::size_t>(mode.limit, 1);
  }
  return std::numeric_limits<std::uint64_t>::max();
}

std::size_t kept_witnesses(const SearchMode& mode) {
  return mode.kind == SearchMode::Kind::kFirstWitness ? 1 : mode.limit;
}

struct BranchResult {
  std::uint64_t solutions = 0;
  std::uint64_t nodes = 0;
  std::vector<TotalLabeling> witnesses;
  // nodes visited inside the branch when its k-th solution was reached
  std::vector<std::uint64_t> nodes_at_solution;
};

// One depth-first enumerator. Not thread-safe; each worker owns a copy.
class Kernel {
 public:
  Kernel(const SearchQuery& query, bool prune)
      : graph_(query.graph),
        target_(query.target),
        prune_(prune),
        stop_limit_(stop_limit(query.mode)),
        keep_(kept_witnesses(query.mode)),
        require_strong_(query.require_strong),
        require_strong_star_(query.require_strong_star),
        vertices_(graph_.vertex_count()),
        arcs_(graph_.arc_count()),
        order_(vertices_ + arcs_) {
    labels_.assign(order_, 0);
    vertex_weight_.assign(vertices_, 0);
    arc_weight_.assign(arcs_, 0);
    completing_.assign(order_, {});
    undo_.assign(order_, {});

    // A vertex weight is final once its last incident arc is placed, and
    // never before the vertex phase ends.
    std::vector<std::size_t> done(vertices_, vertices_ - 1);
    for (std::size_t j = 0; j < arcs_; ++j) {
      const Arc& a = graph_.arc(j);
      done[a.tail] = std::max(done[a.tail], vertices_ + j);
      done[a.head] = std::max(done[a.head], vertices_ + j);
    }
    for (Vertex v = 0; v < vertices_; ++v) completing_[done[v]].push_back(v);

    const auto n = static_cast<std::int64_t>(order_);
    bound_ = n * (n + 1) / 2 + n;
    seen_.assign(static_cast<std::size_t>(2 * bound_ + 1), 0);

    balanced_ = graph_.is_balanced();

    // Label ranges per slot kind.
    vertex_lo_ = 1;
    vertex_hi_ = static_cast<int>(order_);
    arc_lo_ = 1;
    arc_hi_ = static_cast<int>(order_);
    if (prune_) {
      if (require_strong_) {
        vertex_hi_ = std::min(vertex_hi_, static_cast<int>(vertices_));
        arc_lo_ = std::max(arc_lo_, static_cast<int>(vertices_) + 1);
      }
      if (require_strong_star_) {
        arc_hi_ = std::min(arc_hi_, static_cast<int>(arcs_));
        vertex_lo_ = std::max(vertex_lo_, static_cast<int>(arcs_) + 1);
      }
    }
  }

  std::vector<int> root_candidates() const {
    std::vector<int> out;
    if (order_ == 0) return out;
    const auto [lo, hi] = range(0);
    for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
  }

  BranchResult run_branch(int label) {
    result_ = BranchResult{};
    stopped_ = false;
    place(0, label);
    return std::move(result_);
  }

 private:
  enum class Undo : std::uint8_t { kSeen, kMu, kRef };
  struct UndoEntry {
    Undo kind;
    std::int64_t value;
  };

  std::pair<int, int> range(std::size_t slot) const {
    return slot < vertices_ ? std::pair{vertex_lo_, vertex_hi_} : std::pair{arc_lo_, arc_hi_};
  }

  bool used(int x) const { return (used_ >> x) & 1U; }

  void descend(std::size_t slot) {
    const auto [lo, hi] = range(slot);
    if (prune_ && slot >= vertices_) {
      std::optional<std::int64_t> forced;
      if (!forced_label(slot, forced)) return;
      if (forced) {
        if (*forced >= lo && *forced <= hi && !used(static_cast<int>(*forced))) {
          place(slot, static_cast<int>(*forced));
        }
        return;
      }
    }
    for (int x = lo; x <= hi && !stopped_; ++x) {
      if (!used(x)) place(slot, x);
    }
  }

  // Magic targets with a known constant determine the label of an arc slot.
  // Returns false when two constraints disagree.
  bool forced_label(std::size_t slot, std::optional<std::int64_t>& forced) const {
    if (target_.kind != TargetKind::kMagic || !mu_) return true;
    const std::size_t j = slot - vertices_;
    const Arc& a = graph_.arc(j);
    auto require = [&](std::int64_t x) {
      if (forced && *forced != x) return false;
      forced = x;
      return true;
    };
    if (target_.side == Side::kArc) {
      return require(*mu_ - labels_[a.head] + labels_[a.tail]);
    }
    for (Vertex v : completing_[slot]) {
      const std::int64_t x = v == a.head ? *mu_ - vertex_weight_[v] : vertex_weight_[v] - *mu_;
      if (!require(x)) return false;
    }
    return true;
  }

  void place(std::size_t slot, int x) {
    ++result_.nodes;
    labels_[slot] = x;
    used_ |= std::uint64_t{1} << x;
    const bool ok = apply(slot, x);
    if (ok) {
      if (slot + 1 == order_) {
        leaf();
      } else {
        descend(slot + 1);
      }
    }
    revert(slot, x);
    used_ &= ~(std::uint64_t{1} << x);
  }

  bool apply(std::size_t slot, int x) {
    if (slot < vertices_) {
      vertex_weight_[slot] = x;
      vertex_sum_ += x;
      if (prune_ && slot + 1 == vertices_ && !end_of_vertex_phase(slot)) return false;
    } else {
      const std::size_t j = slot - vertices_;
      const Arc& a = graph_.arc(j);
      arc_weight_[j] = x + labels_[a.head] - labels_[a.tail];
      vertex_weight_[a.head] += x;
      vertex_weight_[a.tail] -= x;
      if (prune_ && target_.side == Side::kArc && !check(slot, arc_weight_[j])) return false;
    }
    if (prune_ && target_.side == Side::kVertex) {
      for (Vertex v : completing_[slot]) {
        if (!check(slot, vertex_weight_[v])) return false;
      }
    }
    return true;
  }

  // Sum identities: vertex weights sum to the vertex labels, and on a
  // balanced digraph arc weights sum to the arc labels.
  bool end_of_vertex_phase(std::size_t slot) {
    if (target_.kind != TargetKind::kMagic) return true;
    std::int64_t total = 0;
    std::int64_t parts = 0;
    if (target_.side == Side::kVertex) {
      total = vertex_sum_;
      parts = static_cast<std::int64_t>(vertices_);
    } else if (balanced_ && arcs_ > 0) {
      const auto n = static_cast<std::int64_t>(order_);
      total = n * (n + 1) / 2 - vertex_sum_;
      parts = static_cast<std::int64_t>(arcs_);
    } else {
      return true;
    }
    if (total % parts != 0) return false;
    mu_ = total / parts;
    undo_[slot].push_back({Undo::kMu, 0});
    return true;
  }

  bool check(std::size_t slot, std::int64_t w) {
    auto& undo = undo_[slot];
    if (target_.kind == TargetKind::kMagic) {
      if (!mu_) {
        mu_ = w;
        undo.push_back({Undo::kMu, 0});
        return true;
      }
      return *mu_ == w;
    }
    auto& seen = seen_[static_cast<std::size_t>(w + bound_)];
    if (seen) return false;
    seen = 1;
    undo.push_back({Undo::kSeen, w});
    if (target_.kind == TargetKind::kArithmetic) {
      const std::size_t count = target_.side == Side::kArc ? arcs_ : vertices_;
      if (target_.a && w < *target_.a) return false;
      if (target_.d) {
        if (*target_.d < 1) return false;
        if (target_.a) {
          if ((w - *target_.a) % *target_.d != 0) return false;
          if (w > *target_.a + static_cast<std::int64_t>(count - 1) * *target_.d) return false;
        } else if (!ref_) {
          ref_ = w;
          undo.push_back({Undo::kRef, 0});
        } else if ((w - *ref_) % *target_.d != 0) {
          return false;
        }
      }
    }
    return true;
  }

  void revert(std::size_t slot, int x) {
    auto& undo = undo_[slot];
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
      switch (it->kind) {
        case Undo::kSeen:
          seen_[static_cast<std::size_t>(it->value + bound_)] = 0;
          break;
        case Undo::kMu:
          mu_.reset();
          break;
        case Undo::kRef:
          ref_.reset();
          break;
      }
    }
    undo.clear();
    if (slot < vertices_) {
      vertex_sum_ -= x;
    } else {
      const Arc& a = graph_.arc(slot - vertices_);
      vertex_weight_[a.head] -= x;
      vertex_weight_[a.tail] += x;
    }
  }

  TotalLabeling current() const {
    TotalLabeling l;
    l.vertex_labels.assign(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(vertices_));
    l.arc_labels.assign(labels_.begin() + static_cast<std::ptrdiff_t>(vertices_), labels_.end());
    return l;
  }

  void leaf() {
    bool ok = false;
    std::optional<TotalLabeling> labeling;
    if (prune_) {
      const auto& weights = target_.side == Side::kArc ? arc_weight_ : vertex_weight_;
      ok = side_matches(target_, classify_weights(weights), weights.size());
    } else {
      labeling = current();
      const Classification c = classify(graph_, *labeling);
      ok = matches(target_, c, arcs_, vertices_) && (!require_strong_ || c.strong) &&
           (!require_strong_star_ || c.strong_star);
    }
    if (!ok) return;
    ++result_.solutions;
    if (stop_limit_ != std::numeric_limits<std::uint64_t>::max()) {
      result_.nodes_at_solution.push_back(result_.nodes);
    }
    if (result_.witnesses.size() < keep_) {
      result_.witnesses.push_back(labeling ? std::move(*labeling) : current());
    }
    if (result_.solutions >= stop_limit_) stopped_ = true;
  }

  const Digraph& graph_;
  Target target_;
  bool prune_;
  std::uint64_t stop_limit_;
  std::size_t keep_;
  bool require_strong_;
  bool require_strong_star_;
  std::size_t vertices_;
  std::size_t arcs_;
  std::size_t order_;
  bool balanced_ = false;

  int vertex_lo_ = 1, vertex_hi_ = 0, arc_lo_ = 1, arc_hi_ = 0;

  std::vector<std::int64_t> labels_;
  std::uint64_t used_ = 0;
  std::int64_t vertex_sum_ = 0;
  std::vector<std::int64_t> vertex_weight_;
  std::vector<std::int64_t> arc_weight_;
  std::vector<std::vector<Vertex>> completing_;
  std::vector<std::vector<UndoEntry>> undo_;

  std::int64_t bound_ = 0;
  std::vector<std::uint8_t> seen_;
  std::optional<std::int64_t> mu_;
  std::optional<std::int64_t> ref_;

  BranchResult result_;
  bool stopped_ = false;
};

SearchReport run(const SearchQuery& query, const SearchOptions& options, bool prune) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t order = query.graph.order();
  if (order > kHardLimit) {
    throw std::invalid_argument("search supports at most " + std::to_string(kHardLimit) +
                                " labels, graph has " + std::to_string(order));
  }
  if (order > options.cap) throw CapExceeded(order, options.cap);

  SearchReport report;
  report.query = query;
  report.nodes_visited = 1;  // root

  const Kernel prototype(query, prune);
  const std::vector<int> roots = prototype.root_candidates();
  const bool stops = query.mode.kind != SearchMode::Kind::kCountAll;
  const std::uint64_t limit = stop_limit(query.mode);
  const std::size_t keep = kept_witnesses(query.mode);

  std::vector<BranchResult> results(roots.size());
  std::atomic<std::size_t> next{0};
  // Lowest branch that alone reached the stop limit; later branches cannot
  // contribute to the merged result.
  std::atomic<std::size_t> satisfied{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    Kernel kernel = prototype;
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      if (stops && i > satisfied.load()) continue;
      results[i] = kernel.run_branch(roots[i]);
      if (stops && results[i].solutions >= limit) {
        std::size_t cur = satisfied.load();
        while (i < cur && !satisfied.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers,
                                                           static_cast<unsigned>(roots.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Merge in branch order, reproducing a sequential early stop exactly.
  report.exhaustive = true;
  for (BranchResult& r : results) {
    if (stops && report.solutions_found + r.solutions >= limit) {
      const auto need = static_cast<std::size_t>(limit - report.solutions_found);
      report.nodes_visited += r.nodes_at_solution[need - 1];
      report.solutions_found = limit;
      for (std::size_t k = 0; k < need && report.witnesses.size() < keep; ++k) {
        report.witnesses.push_back(std::move(r.witnesses[k]));
      }
      report.exhaustive = false;
      break;
    }
    report.nodes_visited += r.nodes;
    report.solutions_found += r.solutions;
    for (auto& w : r.witnesses) {
      if (report.witnesses.size() >= keep) break;
      report.witnesses.push_back(std::move(w));
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace

std::string to_string(const Target& target) {
  const bool arc = target.side == Side::kArc;
  switch (target.kind) {
    case TargetKind::kMagic: return arc ? "saml" : "svml";
    case TargetKind::kAntimagic: return arc ? "saal" : "sval";
    case TargetKind::kArithmetic: return arc ? "sa-al" : "sv-al";
  }
  return "unknown";
}

std::optional<Target> parse_target(std::string_view name) {
  for (TargetKind kind : {TargetKind::kMagic, TargetKind::kAntimagic, TargetKind::kArithmetic}) {
    for (Side side : {Side::kArc, Side::kVertex}) {
      Target t{kind, side, std::nullopt, std::nullopt};
      if (to_string(t) == name) return t;
    }
  }
  return std::nullopt;
}

bool matches(const Target& target, const Classification& c, std::size_t arc_count,
             std::size_t vertex_count) {
  return target.side == Side::kArc ? side_matches(target, c.arc_verdict, arc_count)
                                   : side_matches(target, c.vertex_verdict, vertex_count);
}

std::string_view to_string(SearchMode::Kind kind) {
  for (const auto& [k, name] : kModeNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<SearchMode::Kind> parse_search_mode(std::string_view name) {
  for (const auto& [k, n] : kModeNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

CapExceeded::CapExceeded(std::size_t order, std::size_t cap)
    : std::runtime_error("search refused: |V|+|A| = " + std::to_string(order) +
                         " exceeds the search cap of " + std::to_string(cap) +
                         " (raise it with --cap or SUBLABEL_SEARCH_CAP)"),
      cap_(cap) {}

SearchReport search(const SearchQuery& query, const SearchOptions& options) {
  return run(query, options, /*prune=*/true);
}

SearchReport reference_enumerate(const SearchQuery& query, const SearchOptions& options) {
  SearchOptions single = options;
  single.workers = 1;
  return run(query, single, /*prune=*/false);
}

bool verify_iff_cycles(int n, const SearchOptions& options) {
  SearchQuery q;
  q.graph = build_family(Family::kCycle, n);
  q.mode = SearchMode::count_all(0);
  q.target = {TargetKind::kMagic, Side::kArc, std::nullopt, std::nullopt};
  const bool arc_magic = search(q, options).solutions_found > 0;
  q.target.side = Side::kVertex;
  const bool vertex_magic = search(q, options).solutions_found > 0;
  return arc_magic == vertex_magic;
}

}  // namespace sublabel
