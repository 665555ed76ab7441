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

#include "sublabel/document.hpp"

#include <sstream>

namespace sublabel {
namespace {

using ojson = nlohmann::ordered_json;

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw DocumentError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw DocumentError(std::string("'") + what + "' must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_array(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw DocumentError(std::string("'") + what + "' must be an array");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

ojson family_json(const FamilyDescriptor& f) {
  ojson j;
  j["name"] = to_string(f.family);
  j["n"] = f.n;
  if (f.t) j["t"] = *f.t;
  j["orientation"] = to_string(f.orientation);
  return j;
}

FamilyDescriptor parse_family_descriptor(const nlohmann::json& j) {
  if (!j.is_object()) throw DocumentError("'family' must be an object");
  const auto& name = field(j, "name");
  if (!name.is_string()) throw DocumentError("'family.name' must be a string");
  FamilyDescriptor f;
  auto family = parse_family(name.get<std::string>());
  if (!family) throw DocumentError("unknown family '" + name.get<std::string>() + "'");
  f.family = *family;
  f.n = static_cast<int>(as_int(field(j, "n"), "family.n"));
  if (auto it = j.find("t"); it != j.end() && !it->is_null()) {
    f.t = static_cast<int>(as_int(*it, "family.t"));
  }
  if (auto it = j.find("orientation"); it != j.end()) {
    if (!it->is_string()) throw DocumentError("'family.orientation' must be a string");
    auto o = parse_orientation(it->get<std::string>());
    if (!o) throw DocumentError("unknown orientation '" + it->get<std::string>() + "'");
    f.orientation = *o;
  }
  return f;
}

Verdict parse_verdict(const nlohmann::json& j) {
  if (!j.is_object()) throw DocumentError("verdict must be an object");
  const auto& kind = field(j, "verdict");
  if (!kind.is_string()) throw DocumentError("'verdict' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "magic") return Magic{as_int(field(j, "mu"), "mu")};
  if (k == "arithmetic") return Arithmetic{as_int(field(j, "a"), "a"), as_int(field(j, "d"), "d")};
  if (k == "antimagic") return Antimagic{};
  if (k == "none") return NoVerdict{};
  throw DocumentError("unknown verdict '" + k + "'");
}

bool as_bool(const nlohmann::json& j, const char* what) {
  if (!j.is_boolean()) throw DocumentError(std::string("'") + what + "' must be a boolean");
  return j.get<bool>();
}

}  // namespace

std::optional<FamilyDescriptor> descriptor_of(const Digraph& g) {
  const auto& tag = g.family_tag();
  if (!tag) return std::nullopt;
  return FamilyDescriptor{tag->family, tag->n, tag->t, tag->orientation};
}

LabelingDocument make_document(const Digraph& g, std::optional<TotalLabeling> l,
                               bool with_classification) {
  LabelingDocument doc;
  doc.family = descriptor_of(g);
  doc.graph = g;
  doc.labeling = std::move(l);
  if (with_classification && doc.labeling) {
    doc.weights = weight_profile(g, *doc.labeling);
    doc.classification = classify(*doc.labeling, *doc.weights);
  }
  return doc;
}

ojson to_json(const Verdict& verdict) {
  struct Visitor {
    ojson operator()(const Magic& m) const { return {{"verdict", "magic"}, {"mu", m.mu}}; }
    ojson operator()(const Arithmetic& a) const {
      return {{"verdict", "arithmetic"}, {"a", a.a}, {"d", a.d}};
    }
    ojson operator()(const Antimagic&) const { return {{"verdict", "antimagic"}}; }
    ojson operator()(const NoVerdict&) const { return {{"verdict", "none"}}; }
  };
  return std::visit(Visitor{}, verdict);
}

ojson to_json(const Classification& c, const WeightProfile& weights) {
  ojson j;
  j["arc"] = to_json(c.arc_verdict);
  j["vertex"] = to_json(c.vertex_verdict);
  j["strong"] = c.strong;
  j["strong_star"] = c.strong_star;
  j["arc_weights"] = weights.arc_weights;
  j["vertex_weights"] = weights.vertex_weights;
  return j;
}

ojson to_json(const LabelingDocument& doc) {
  ojson j;
  j["format_version"] = doc.format_version;
  if (doc.family) j["family"] = family_json(*doc.family);
  j["vertex_count"] = doc.graph.vertex_count();
  ojson arcs = ojson::array();
  for (const Arc& a : doc.graph.arcs()) arcs.push_back({a.tail, a.head});
  j["arcs"] = std::move(arcs);
  if (doc.labeling) {
    j["vertex_labels"] = doc.labeling->vertex_labels;
    j["arc_labels"] = doc.labeling->arc_labels;
  }
  if (doc.classification && doc.weights) {
    j["classification"] = to_json(*doc.classification, *doc.weights);
  }
  if (doc.discrepancy) j["notes"] = {{"paper-discrepancy", *doc.discrepancy}};
  return j;
}

LabelingDocument document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  LabelingDocument doc;
  doc.format_version = static_cast<int>(as_int(field(j, "format_version"), "format_version"));
  if (doc.format_version != kFormatVersion) {
    throw DocumentError("unsupported format_version " + std::to_string(doc.format_version));
  }

  const std::int64_t vertex_count = as_int(field(j, "vertex_count"), "vertex_count");
  if (vertex_count < 0) throw DocumentError("'vertex_count' must be nonnegative");
  const auto& arcs_json = field(j, "arcs");
  if (!arcs_json.is_array()) throw DocumentError("'arcs' must be an array");
  std::vector<Arc> arcs;
  for (const auto& a : arcs_json) {
    if (!a.is_array() || a.size() != 2) throw DocumentError("each arc must be [tail, head]");
    const std::int64_t tail = as_int(a[0], "arc tail");
    const std::int64_t head = as_int(a[1], "arc head");
    if (tail < 0 || head < 0) throw DocumentError("arc endpoints must be nonnegative");
    arcs.push_back({static_cast<Vertex>(tail), static_cast<Vertex>(head)});
  }

  std::optional<FamilyTag> tag;
  if (auto it = j.find("family"); it != j.end() && !it->is_null()) {
    doc.family = parse_family_descriptor(*it);
    Digraph built;
    try {
      built = build_family(doc.family->family, doc.family->n, doc.family->t,
                           doc.family->orientation);
    } catch (const std::exception& e) {
      throw DocumentError(std::string("invalid family descriptor: ") + e.what());
    }
    if (built.vertex_count() != static_cast<std::size_t>(vertex_count) ||
        !std::equal(built.arcs().begin(), built.arcs().end(), arcs.begin(), arcs.end())) {
      throw DocumentError("arcs do not match the family descriptor");
    }
    tag = built.family_tag();
    // Stored descriptors always carry the resolved orientation.
    doc.family->orientation = tag->orientation;
  }
  try {
    doc.graph = Digraph(static_cast<std::size_t>(vertex_count), std::move(arcs), std::move(tag));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }

  const bool has_v = j.contains("vertex_labels");
  const bool has_a = j.contains("arc_labels");
  if (has_v != has_a) throw DocumentError("vertex_labels and arc_labels must appear together");
  if (has_v) {
    TotalLabeling l;
    l.vertex_labels = as_int_array(j["vertex_labels"], "vertex_labels");
    l.arc_labels = as_int_array(j["arc_labels"], "arc_labels");
    doc.labeling = std::move(l);
  }

  if (auto it = j.find("classification"); it != j.end() && !it->is_null()) {
    const auto& c = *it;
    Classification cl;
    cl.arc_verdict = parse_verdict(field(c, "arc"));
    cl.vertex_verdict = parse_verdict(field(c, "vertex"));
    cl.strong = as_bool(field(c, "strong"), "strong");
    cl.strong_star = as_bool(field(c, "strong_star"), "strong_star");
    WeightProfile w;
    w.arc_weights = as_int_array(field(c, "arc_weights"), "arc_weights");
    w.vertex_weights = as_int_array(field(c, "vertex_weights"), "vertex_weights");
    doc.classification = cl;
    doc.weights = std::move(w);
  }

  if (auto it = j.find("notes"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw DocumentError("'notes' must be an object");
    if (auto d = it->find("paper-discrepancy"); d != it->end()) {
      if (!d->is_string()) throw DocumentError("'notes.paper-discrepancy' must be a string");
      doc.discrepancy = d->get<std::string>();
    }
  }
  return doc;
}

LabelingDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

std::string emit_document(const LabelingDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string to_dot(const LabelingDocument& doc) {
  if (!doc.labeling) throw DocumentError("DOT export needs vertex_labels and arc_labels");
  const Digraph& g = doc.graph;
  const TotalLabeling& l = *doc.labeling;
  const WeightProfile w = weight_profile(g, l);

  std::ostringstream out;
  out << "digraph sublabel {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"v" << v << ":" << l.vertex_labels[v] << "\"];\n";
  }
  for (std::size_t i = 0; i < g.arc_count(); ++i) {
    const Arc& a = g.arc(i);
    out << "  " << a.tail << " -> " << a.head << " [label=\"" << l.arc_labels[i]
        << " (w=" << w.arc_weights[i] << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

ojson to_json(const SearchReport& report, bool include_elapsed) {
  const SearchQuery& q = report.query;
  ojson query;
  if (auto f = descriptor_of(q.graph)) query["family"] = family_json(*f);
  query["vertex_count"] = q.graph.vertex_count();
  ojson arcs = ojson::array();
  for (const Arc& a : q.graph.arcs()) arcs.push_back({a.tail, a.head});
  query["arcs"] = std::move(arcs);
  query["class"] = to_string(q.target);
  if (q.target.a) query["a"] = *q.target.a;
  if (q.target.d) query["d"] = *q.target.d;
  query["strong"] = q.require_strong;
  query["strong_star"] = q.require_strong_star;
  query["mode"] = to_string(q.mode.kind);
  query["limit"] = q.mode.limit;

  ojson j;
  j["query"] = std::move(query);
  j["exhaustive"] = report.exhaustive;
  j["solutions_found"] = report.solutions_found;
  j["nodes_visited"] = report.nodes_visited;
  ojson witnesses = ojson::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"vertex_labels", w.vertex_labels}, {"arc_labels", w.arc_labels}});
  }
  j["witnesses"] = std::move(witnesses);
  if (include_elapsed) {
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();
  }
  return j;
}

}  // namespace sublabel
