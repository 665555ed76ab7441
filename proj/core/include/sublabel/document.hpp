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

#ifndef SUBLABEL_DOCUMENT_HPP_
#define SUBLABEL_DOCUMENT_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sublabel/digraph.hpp"
#include "sublabel/labeling.hpp"
#include "sublabel/search.hpp"

namespace sublabel {

inline constexpr int kFormatVersion = 1;

struct FamilyDescriptor {
  Family family = Family::kPath;
  int n = 0;
  std::optional<int> t;
  Orientation orientation = Orientation::kCanonical;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

/// The interchange format: a digraph, optionally with a labeling, the
/// classification computed on verify, and free-form notes.
///
///   {
///     "format_version": 1,
///     "family": {"name": "tadpole", "n": 3, "t": 2, "orientation": "canonical"},
///     "vertex_count": 5,
///     "arcs": [[0, 1], [1, 2], ...],
///     "vertex_labels": [...],          // optional
///     "arc_labels": [...],             // optional, together with vertex_labels
///     "classification": {...},         // optional
///     "notes": {"paper-discrepancy": "..."}  // optional
///   }
struct LabelingDocument {
  int format_version = kFormatVersion;
  std::optional<FamilyDescriptor> family;
  Digraph graph;
  std::optional<TotalLabeling> labeling;
  std::optional<Classification> classification;
  std::optional<WeightProfile> weights;
  std::optional<std::string> discrepancy;

  friend bool operator==(const LabelingDocument&, const LabelingDocument&) = default;
};

/// Malformed input: bad JSON, missing fields, wrong types, a family
/// descriptor that disagrees with the arc list.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<FamilyDescriptor> descriptor_of(const Digraph& g);

/// Builds a document for `g` and `l`, filling the family descriptor from the
/// graph's tag. With `with_classification`, also embeds the weights and
/// verdicts.
LabelingDocument make_document(const Digraph& g, std::optional<TotalLabeling> l,
                               bool with_classification);

nlohmann::ordered_json to_json(const LabelingDocument& doc);
nlohmann::ordered_json to_json(const Verdict& verdict);
nlohmann::ordered_json to_json(const Classification& c, const WeightProfile& weights);

/// Throws DocumentError on malformed input. Labels are not checked for the
/// bijection property; call `validate` for that.
LabelingDocument document_from_json(const nlohmann::json& j);
LabelingDocument parse_document(std::string_view text);

/// Pretty-printed JSON text with a trailing newline.
std::string emit_document(const LabelingDocument& doc);

/// Graphviz rendering: nodes "v<i>:<label>", edges "<label> (w=<weight>)".
/// Requires a labeling.
std::string to_dot(const LabelingDocument& doc);

/// Report as JSON. `include_elapsed` = false gives a byte-stable form.
nlohmann::ordered_json to_json(const SearchReport& report, bool include_elapsed = true);

}  // namespace sublabel

#endif  // SUBLABEL_DOCUMENT_HPP_
