#include "trisect/cli.hpp"

#include "trisect/document.hpp"
#include "trisect/moves.hpp"
#include "trisect/vertical.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>

namespace trisect::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string path;
  std::string word;
  std::string out_path;
  std::size_t depth = 2;
  std::string format = "text";
  bool json = false;
  bool oriented = false;
  std::vector<std::string> lens_args;
};

// Thrown for domain failures that have already been described to the user.
struct Reported {
  int code;
};

ordered_json invariant_json(const InvariantVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& e : v.entries) out.push_back(e.str());
  return out;
}

ordered_json issues_json(const std::vector<Issue>& issues) {
  ordered_json out = ordered_json::array();
  for (const auto& issue : issues) out.push_back({{"code", issue_name(issue.code)}, {"detail", issue.detail}});
  return out;
}

std::vector<Issue> all_issues(const DiagramDocument& doc) {
  auto issues = doc.issues();
  if (issues.empty() && !doc.is_torus()) {
    try {
      surgery_project(doc.genus2());
    } catch (const DiagramError& e) {
      issues.push_back({IssueCode::IdentityCaseViolation, e.what()});
    }
  }
  return issues;
}

DiagramDocument load_valid(const Options& o, std::ostream& err) {
  DiagramDocument doc = read_document(o.path);
  const auto issues = all_issues(doc);
  if (!issues.empty()) {
    for (const auto& issue : issues) err << issue_name(issue.code) << ": " << issue.detail << "\n";
    throw Reported{DomainFailure};
  }
  return doc;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const DiagramDocument doc = read_document(o.path);
  const auto issues = all_issues(doc);
  if (o.json) {
    out << ordered_json{{"valid", issues.empty()},
                        {"model", doc.is_torus() ? "torus" : "genus2"},
                        {"issues", issues_json(issues)}}
               .dump(2)
        << "\n";
  } else if (issues.empty()) {
    out << "valid (" << (doc.is_torus() ? "torus" : "genus2") << " model)\n";
  } else {
    for (const auto& issue : issues) out << issue_name(issue.code) << ": " << issue.detail << "\n";
  }
  return issues.empty() ? Success : DomainFailure;
}

int cmd_invariant(const Options& o, std::ostream& out, std::ostream& err) {
  const DiagramDocument doc = load_valid(o, err);
  const InvariantVector v = doc.is_torus() ? invariant(doc.torus()) : invariant(doc.genus2());
  if (o.json)
    out << ordered_json{{"invariant", invariant_json(v)}}.dump(2) << "\n";
  else
    out << "I = " << v.str() << "\n";
  return Success;
}

int cmd_move(const Options& o, std::ostream& out, std::ostream& err) {
  const MoveWord word = MoveWord::parse(o.word);
  const DiagramDocument doc = load_valid(o, err);
  DiagramDocument result = doc;
  if (doc.is_torus())
    result.diagram = apply_word(doc.torus(), word);
  else
    result.diagram = apply_word(doc.genus2(), word);
  const std::string text = serialize(result);
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << o.out_path << "\n";
      return UsageFailure;
    }
    file << text;
  }
  return Success;
}

ordered_json tuple_json(const SixTuple& t) {
  ordered_json out = ordered_json::object();
  for (int i = 0; i < 6; ++i) out[vertical_name(static_cast<Vertical>(i))] = t.entries[i].str();
  return out;
}

int cmd_six_tuple(const Options& o, std::ostream& out, std::ostream& err) {
  const SixTuple t = six_tuple(load_valid(o, err).surgered());
  if (o.json)
    out << tuple_json(t).dump(2) << "\n";
  else
    out << t.matrix();
  return Success;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const SixTuple t = six_tuple(load_valid(o, err).surgered());
  const auto match = classify(t, o.oriented ? Orientation::Oriented : Orientation::Unoriented);
  if (o.json) {
    ordered_json j = {{"tuple", tuple_json(t)}, {"match", nullptr}};
    if (match) {
      ordered_json m = {{"family", match->family}};
      if (match->q) m["q"] = match->q->str();
      if (match->epsilon) m["epsilon"] = *match->epsilon;
      m["epsilon_ambiguous"] = match->epsilon_ambiguous;
      m["reflected"] = match->reflected;
      m["rotations"] = match->rotations;
      j["match"] = m;
    }
    out << j.dump(2) << "\n";
    return match ? Success : DomainFailure;
  }
  if (!match) {
    out << "no family matches " << t.str() << "\n";
    return DomainFailure;
  }
  out << match->str() << "\n";
  out << "symmetry: " << (match->reflected ? "reflection, " : "") << "rotations=" << match->rotations << "\n";
  if (match->epsilon_ambiguous) out << "note: ε=-1 matches as well under unoriented comparison\n";
  return Success;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check_theorem(const Options& o, std::ostream& out, std::ostream& err) {
  const TorusDiagram v0 = load_valid(o, err).surgered();
  const TheoremHypotheses h = theorem_hypotheses(v0);
  const TorusDiagram v1 = apply_sigma2(v0);
  const TorusDiagram v2 = apply_sigma2(v1);
  const std::array<InvariantVector, 3> inv = {invariant(v0), invariant(v1), invariant(v2)};

  std::string verdict;
  bool certified = false;
  if (!h.monodromy_nontrivial) {
    verdict = "hypotheses not met: monodromy is identity";
  } else if (!h.b2_c2_not_parallel) {
    verdict = "hypotheses not met: b2 ∥ c2";
  } else if (!h.a2_muinv_c2_not_parallel) {
    verdict = "hypotheses not met: a2 ∥ mu1^-1(c2)";
  } else {
    const std::array<const TorusDiagram*, 3> diagrams = {&v0, &v1, &v2};
    bool distinct = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (inv[i] == inv[j] || equivalent(*diagrams[i], *diagrams[j])) distinct = false;
    certified = distinct;
    verdict = distinct ? "three pairwise-inequivalent diagrams certified"
                       : "not certified: the invariant does not separate the three diagrams";
  }

  if (o.json) {
    out << ordered_json{{"hypotheses",
                         {{"monodromy_nontrivial", h.monodromy_nontrivial},
                          {"b2_c2_not_parallel", h.b2_c2_not_parallel},
                          {"a2_muinv_c2_not_parallel", h.a2_muinv_c2_not_parallel}}},
                        {"invariants", {invariant_json(inv[0]), invariant_json(inv[1]), invariant_json(inv[2])}},
                        {"certified", certified},
                        {"verdict", verdict}}
               .dump(2)
        << "\n";
    return Success;
  }
  out << "monodromy nontrivial: " << yes_no(h.monodromy_nontrivial) << "\n";
  out << "b2, c2 not parallel: " << yes_no(h.b2_c2_not_parallel) << "\n";
  out << "a2, mu1^-1(c2) not parallel: " << yes_no(h.a2_muinv_c2_not_parallel) << "\n";
  out << "I(V) = " << inv[0].str() << "\n";
  out << "I(sigma2 V) = " << inv[1].str() << "\n";
  out << "I(sigma2^2 V) = " << inv[2].str() << "\n";
  out << "verdict: " << verdict << "\n";
  return Success;
}

int cmd_orbit(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format != "text" && o.format != "dot") {
    err << "--format must be text or dot\n";
    return UsageFailure;
  }
  const DiagramDocument doc = load_valid(o, err);
  const OrbitGraph graph = doc.is_torus() ? orbit(doc.torus(), o.depth) : orbit(doc.genus2(), o.depth);

  if (o.json) {
    ordered_json nodes = ordered_json::array(), edges = ordered_json::array();
    for (const auto& n : graph.nodes)
      nodes.push_back({{"key", n.key}, {"depth", n.depth}, {"invariant", invariant_json(n.invariant)}});
    for (const auto& e : graph.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"move", move_token(e.move)}});
    out << ordered_json{{"nodes", nodes}, {"edges", edges}}.dump(2) << "\n";
    return Success;
  }
  if (o.format == "dot") {
    out << "digraph orbit {\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
      out << "  n" << i << " [label=\"" << graph.nodes[i].invariant.str() << "\"];\n";
    for (const auto& e : graph.edges)
      out << "  n" << e.from << " -> n" << e.to << " [label=\"" << move_token(e.move) << "\"];\n";
    out << "}\n";
    return Success;
  }
  out << "nodes: " << graph.nodes.size() << "\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& n = graph.nodes[i];
    out << "  [" << i << "] depth " << n.depth << "  I = " << n.invariant.str() << "  " << n.key << "\n";
  }
  out << "edges: " << graph.edges.size() << "\n";
  for (const auto& e : graph.edges) out << "  " << e.from << " --" << move_token(e.move) << "--> " << e.to << "\n";
  return Success;
}

Integer parse_cli_integer(const std::string& text) {
  const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() <= start || text.find_first_not_of("0123456789", start) != std::string::npos)
    throw DocumentError("'" + text + "' is not an integer");
  return Integer(text);
}

int cmd_lens(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.lens_args.size() != 4) {
    err << "lens expects four integers: p q p' q'\n";
    return UsageFailure;
  }
  std::array<Integer, 4> n;
  for (int i = 0; i < 4; ++i) n[i] = parse_cli_integer(o.lens_args[i]);
  LensSpace first = LensSpace::s3(), second = LensSpace::s3();
  try {
    first = LensSpace::make(n[0], n[1]);
    second = LensSpace::make(n[2], n[3]);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return DomainFailure;
  }
  const Orientation orientation = o.oriented ? Orientation::Oriented : Orientation::Unoriented;
  const bool same = lens_equivalent(first, second, orientation);
  const char* mode = o.oriented ? "oriented" : "unoriented";
  if (o.json) {
    out << ordered_json{{"first", first.str()}, {"second", second.str()}, {"oriented", o.oriented}, {"equivalent", same}}
               .dump(2)
        << "\n";
  } else {
    out << (same ? "equivalent: " : "not equivalent: ") << first.str() << (same ? " ~ " : " vs ") << second.str()
        << " (" << mode << ")\n";
  }
  return Success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology-level computations with simplified (2,0)-trisection diagrams", "trisect"};
  app.require_subcommand(1);
  Options o;

  auto with_path = [&](CLI::App* sub) {
    sub->add_option("path", o.path, "diagram file (JSON)")->required();
    sub->add_flag("--json", o.json, "machine-readable output");
    return sub;
  };
  auto* validate_cmd = with_path(app.add_subcommand("validate", "check every diagram invariant"));
  auto* invariant_cmd = with_path(app.add_subcommand("invariant", "print I(V)"));
  auto* move_cmd = with_path(app.add_subcommand("move", "apply a word of reference-path moves"));
  move_cmd->add_option("--word", o.word, "comma-separated D1, D1', D2, D2'")->required();
  move_cmd->add_option("--out", o.out_path, "output file (default: stdout)");
  auto* six_cmd = with_path(app.add_subcommand("six-tuple", "vertical 3-manifolds V_aa ... V_ac"));
  auto* classify_cmd = with_path(app.add_subcommand("classify", "match the 6-tuple against the five families"));
  classify_cmd->add_flag("--oriented", o.oriented, "compare lens spaces up to oriented equivalence");
  auto* theorem_cmd = with_path(app.add_subcommand("check-theorem", "hypotheses and certification verdict"));
  auto* orbit_cmd = with_path(app.add_subcommand("orbit", "orbit of the diagram under the move group"));
  orbit_cmd->add_option("--depth", o.depth, "breadth-first depth")->capture_default_str();
  orbit_cmd->add_option("--format", o.format, "text or dot")->capture_default_str();
  auto* lens_cmd = app.add_subcommand("lens", "decide L(p,q) ~ L(p',q')");
  lens_cmd->add_option("numbers", o.lens_args, "p q p' q'")->required()->expected(4);
  lens_cmd->add_flag("--oriented", o.oriented, "oriented equivalence");
  lens_cmd->add_flag("--json", o.json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return UsageFailure;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (invariant_cmd->parsed()) return cmd_invariant(o, out, err);
    if (move_cmd->parsed()) return cmd_move(o, out, err);
    if (six_cmd->parsed()) return cmd_six_tuple(o, out, err);
    if (classify_cmd->parsed()) return cmd_classify(o, out, err);
    if (theorem_cmd->parsed()) return cmd_check_theorem(o, out, err);
    if (orbit_cmd->parsed()) return cmd_orbit(o, out, err);
    if (lens_cmd->parsed()) return cmd_lens(o, out, err);
  } catch (const Reported& r) {
    return r.code;
  } catch (const DocumentError& e) {
    err << e.what() << "\n";
    return UsageFailure;
  } catch (const MoveWordParseError& e) {
    err << e.what() << "\n";
    return UsageFailure;
  } catch (const std::domain_error& e) {  // DiagramError, MoveError, LatticeError
    err << e.what() << "\n";
    return DomainFailure;
  }
  return UsageFailure;
}

}  // namespace trisect::cli
