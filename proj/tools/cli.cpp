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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sublabel/constructions.hpp"
#include "sublabel/document.hpp"
#include "sublabel/search.hpp"

namespace sublabel::cli {
namespace {

// Reported as exit code 2 with a one-line diagnostic.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::string kind_list(Family family) {
  std::string s;
  for (LabelingKind k : valid_kinds(family)) {
    if (!s.empty()) s += ", ";
    s += to_string(k);
  }
  return s;
}

Family family_or_throw(const std::string& name) {
  auto f = parse_family(name);
  if (!f) {
    throw UsageError("unknown family '" + name +
                     "' (valid: path, cycle, star, wheel, tadpole, friendship, butterfly)");
  }
  return *f;
}

std::optional<int> optional_int(const std::optional<long long>& v) {
  if (!v) return std::nullopt;
  return static_cast<int>(*v);
}

std::size_t parse_cap(const std::string& text, const char* source) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw UsageError(std::string(source) + " must be a positive integer, got '" + text + "'");
  }
  return value;
}

std::string verdict_line(const Verdict& v) { return to_string(v); }

void print_weights(std::ostream& out, const Digraph& g, const WeightProfile& w) {
  out << "arc weights:   ";
  for (std::size_t i = 0; i < g.arc_count(); ++i) {
    out << ' ' << g.arc_name(i) << '=' << w.arc_weights[i];
  }
  out << "\nvertex weights:";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << ' ' << g.vertex_name(v) << '=' << w.vertex_weights[v];
  }
  out << '\n';
}

std::string describe(const Digraph& g) {
  std::ostringstream s;
  if (auto f = descriptor_of(g)) {
    s << to_string(f->family) << " n=" << f->n;
    if (f->t) s << " t=" << *f->t;
    s << " (" << to_string(f->orientation) << ") ";
  }
  s << "|V|=" << g.vertex_count() << " |A|=" << g.arc_count() << " N=" << g.order();
  return s.str();
}

struct ConstructArgs {
  std::string family;
  long long n = 0;
  std::optional<long long> t;
  std::optional<std::string> orientation;
  std::string labeling;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const Family family = family_or_throw(a.family);
  const auto kind = parse_labeling_kind(a.labeling);
  if (!kind || !std::ranges::count(valid_kinds(family), *kind)) {
    throw UsageError("labeling '" + a.labeling + "' is not available for " +
                     std::string(to_string(family)) + " (valid: " + kind_list(family) + ")");
  }
  Construction c = construct(family, static_cast<int>(a.n), optional_int(a.t), *kind);
  if (a.orientation) {
    auto o = parse_orientation(*a.orientation);
    const Orientation built = c.graph.family_tag()->orientation;
    if (!o || (*o != built && !(*o == Orientation::kForward && built == Orientation::kCanonical))) {
      throw UsageError("labeling '" + a.labeling + "' on " + std::string(to_string(family)) +
                       " uses orientation '" + std::string(to_string(built)) + "', not '" +
                       *a.orientation + "'");
    }
  }
  LabelingDocument doc = make_document(c.graph, c.labeling, /*with_classification=*/true);
  doc.discrepancy = c.discrepancy;
  write_output(a.out, emit_document(doc), out);
  return kOk;
}

int cmd_verify(const std::string& input, bool quiet, std::istream& in, std::ostream& out) {
  LabelingDocument doc = parse_document(read_input(input, in));
  if (!doc.labeling) throw UsageError("document has no labels to verify");
  validate(doc.graph, *doc.labeling);
  const Digraph& g = doc.graph;
  doc.weights = weight_profile(g, *doc.labeling);
  doc.classification = classify(*doc.labeling, *doc.weights);
  const Classification& c = *doc.classification;

  if (!quiet) {
    out << "graph:          " << describe(g) << '\n';
    out << "arc verdict:    " << verdict_line(c.arc_verdict) << '\n';
    out << "vertex verdict: " << verdict_line(c.vertex_verdict) << '\n';
    out << "strong:         " << (c.strong ? "yes" : "no") << '\n';
    out << "strong*:        " << (c.strong_star ? "yes" : "no") << '\n';
    print_weights(out, g, *doc.weights);
    out << '\n';
  }
  out << emit_document(doc);

  const bool arc_present = g.arc_count() > 0;
  const bool vertex_present = g.vertex_count() > 0;
  const bool any = (arc_present && !std::holds_alternative<NoVerdict>(c.arc_verdict)) ||
                   (vertex_present && !std::holds_alternative<NoVerdict>(c.vertex_verdict));
  return any ? kOk : kNegative;
}

struct SearchArgs {
  std::optional<std::string> family;
  std::optional<long long> n;
  std::optional<long long> t;
  std::optional<std::string> orientation;
  std::optional<std::string> input;
  std::string cls;
  std::optional<long long> a;
  std::optional<long long> d;
  bool strong = false;
  bool strong_star = false;
  std::string mode = "count-all";
  std::size_t limit = 16;
  std::optional<std::size_t> cap;
  unsigned workers = 1;
  bool all_orientations = false;
  bool quiet = false;
};

void print_summary(std::ostream& out, const SearchReport& r) {
  out << "graph:      " << describe(r.query.graph) << '\n';
  out << "class:      " << to_string(r.query.target);
  if (r.query.require_strong) out << " strong";
  if (r.query.require_strong_star) out << " strong*";
  out << '\n';
  out << "solutions:  " << r.solutions_found << (r.exhaustive ? " (exhaustive)" : " (stopped early)")
      << '\n';
  out << "nodes:      " << r.nodes_visited << '\n';
}

int cmd_search(const SearchArgs& a, std::istream& in, std::ostream& out, const Environment& env) {
  SearchOptions options;
  if (a.cap) {
    if (*a.cap == 0) throw UsageError("--cap must be a positive integer");
    options.cap = *a.cap;
  } else if (env.search_cap) {
    options.cap = parse_cap(*env.search_cap, "SUBLABEL_SEARCH_CAP");
  }
  options.workers = std::max(1U, a.workers);

  SearchQuery q;
  if (a.input) {
    if (a.family) throw UsageError("give either --input or --family, not both");
    q.graph = parse_document(read_input(*a.input, in)).graph;
  } else {
    if (!a.family || !a.n) throw UsageError("search needs --family and --n, or --input");
    Orientation o = Orientation::kCanonical;
    if (a.orientation) {
      auto parsed = parse_orientation(*a.orientation);
      if (!parsed) throw UsageError("unknown orientation '" + *a.orientation + "'");
      o = *parsed;
    }
    q.graph = build_family(family_or_throw(*a.family), static_cast<int>(*a.n), optional_int(a.t), o);
  }

  auto target = parse_target(a.cls);
  if (!target) {
    throw UsageError("unknown class '" + a.cls + "' (valid: saml, svml, saal, sval, sa-al, sv-al)");
  }
  if ((a.a || a.d) && target->kind != TargetKind::kArithmetic) {
    throw UsageError("--a and --d apply to sa-al and sv-al only");
  }
  target->a = a.a;
  target->d = a.d;
  q.target = *target;
  q.require_strong = a.strong;
  q.require_strong_star = a.strong_star;
  auto mode = parse_search_mode(a.mode);
  if (!mode) throw UsageError("unknown mode '" + a.mode + "' (valid: count-all, first-witness, collect)");
  q.mode = {*mode, *mode == SearchMode::Kind::kFirstWitness ? 1 : a.limit};

  if (!a.all_orientations) {
    const SearchReport r = search(q, options);
    if (!a.quiet) {
      print_summary(out, r);
      out << '\n';
    }
    out << to_json(r).dump(2) << '\n';
    return r.solutions_found > 0 ? kOk : kNegative;
  }

  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  std::uint64_t total = 0;
  bool exhaustive = true;
  const auto variants = all_orientations(q.graph);
  for (const Digraph& g : variants) {
    SearchQuery v = q;
    v.graph = g;
    const SearchReport r = search(v, options);
    total += r.solutions_found;
    exhaustive = exhaustive && r.exhaustive;
    reports.push_back(to_json(r));
  }
  if (!a.quiet) {
    out << "graph:        " << describe(q.graph) << ", all " << variants.size() << " orientations\n";
    out << "class:        " << to_string(q.target) << '\n';
    out << "solutions:    " << total << (exhaustive ? " (exhaustive)" : " (stopped early)") << "\n\n";
  }
  nlohmann::ordered_json j;
  j["orientations"] = std::move(reports);
  j["total_solutions"] = total;
  j["exhaustive"] = exhaustive;
  out << j.dump(2) << '\n';
  return total > 0 ? kOk : kNegative;
}

int cmd_export(const std::string& format, const std::string& input, const std::string& path,
               std::istream& in, std::ostream& out) {
  LabelingDocument doc = parse_document(read_input(input, in));
  if (format == "json") {
    write_output(path, emit_document(doc), out);
  } else {
    if (!doc.labeling) throw UsageError("DOT export needs vertex_labels and arc_labels");
    validate(doc.graph, *doc.labeling);
    write_output(path, to_dot(doc), out);
  }
  return kOk;
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* cap = std::getenv("SUBLABEL_SEARCH_CAP")) env.search_cap = cap;
  return env;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Environment& env) {
  CLI::App app{"Subtractive magic and antimagic total labelings of digraphs", "sublabel"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Emit a family labeling as JSON");
  construct->add_option("--family", construct_args.family, "Graph family")->required();
  construct->add_option("--n", construct_args.n, "Family size parameter")->required();
  construct->add_option("--t", construct_args.t, "Tadpole path length");
  construct->add_option("--orientation", construct_args.orientation, "Expected orientation");
  construct->add_option("--labeling", construct_args.labeling, "Labeling kind")->required();
  construct->add_option("--out", construct_args.out, "Output file (default stdout)");

  std::string verify_input;
  bool verify_quiet = false;
  auto* verify = app.add_subcommand("verify", "Classify a labeling document");
  verify->add_option("input", verify_input, "Document path, or - for stdin");
  verify->add_flag("--quiet", verify_quiet, "Print only the JSON block");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Exhaustively search for labelings");
  search_cmd->add_option("--family", search_args.family, "Graph family");
  search_cmd->add_option("--n", search_args.n, "Family size parameter");
  search_cmd->add_option("--t", search_args.t, "Tadpole path length");
  search_cmd->add_option("--orientation", search_args.orientation, "Path or star orientation");
  search_cmd->add_option("--input", search_args.input, "Search the graph of a document instead");
  search_cmd->add_option("--class", search_args.cls, "saml|svml|saal|sval|sa-al|sv-al")->required();
  search_cmd->add_option("--a", search_args.a, "Required first term (sa-al, sv-al)");
  search_cmd->add_option("--d", search_args.d, "Required difference (sa-al, sv-al)");
  search_cmd->add_flag("--strong", search_args.strong, "Vertex labels must be 1..|V|");
  search_cmd->add_flag("--strong-star", search_args.strong_star, "Arc labels must be 1..|A|");
  search_cmd->add_option("--mode", search_args.mode, "count-all|first-witness|collect");
  search_cmd->add_option("--limit", search_args.limit, "Witnesses to keep or collect");
  search_cmd->add_option("--cap", search_args.cap, "Largest |V|+|A| to search");
  search_cmd->add_option("--workers", search_args.workers, "Worker threads");
  search_cmd->add_flag("--all-orientations", search_args.all_orientations,
                       "Search every orientation of the underlying graph");
  search_cmd->add_flag("--quiet", search_args.quiet, "Print only the JSON report");

  std::string export_format = "dot";
  std::string export_input;
  std::string export_out;
  auto* export_cmd = app.add_subcommand("export", "Render a document as DOT or JSON");
  export_cmd->add_option("--format", export_format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("input", export_input, "Document path, or - for stdin");
  export_cmd->add_option("--out", export_out, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(construct_args, out);
    if (*verify) return cmd_verify(verify_input, verify_quiet, in, out);
    if (*search_cmd) return cmd_search(search_args, in, out, env);
    if (*export_cmd) return cmd_export(export_format, export_input, export_out, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sublabel::cli
