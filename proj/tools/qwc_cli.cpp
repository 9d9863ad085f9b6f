// qwc: command-line front end for quivers with cycles.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qwc/canvas.hpp"
#include "qwc/io.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qwc::Error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

qwc::LabeledQuiverWithCycles load(const std::string& path) { return qwc::parse_quiver(read_input(path)); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void warn_if_not_covered(const qwc::QuiverWithCycles& q) {
  const auto missing = qwc::uncovered_arrows(q);
  if (missing.empty()) return;
  std::cerr << "warning: not covered; arrows in no cycle:";
  for (auto a : missing) std::cerr << ' ' << q.quiver().arrow(a).id;
  std::cerr << '\n';
}

qwc::VertexIndex vertex_arg(const qwc::Quiver& q, const std::string& id) {
  auto v = q.find_vertex(qwc::VertexId(id));
  if (!v) throw qwc::PreconditionError("unknown vertex " + id);
  return *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cuts, mutations and canvases of quivers with cycles"};
  app.require_subcommand(1);

  std::string file = "-";
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "QuiverDocument JSON ('-' or omitted reads stdin)");
  };

  auto* validate = app.add_subcommand("validate", "Check a document; exit 0 iff valid");
  add_file(validate);

  auto* cuts = app.add_subcommand("cuts", "List all cuts, sorted");
  add_file(cuts);
  bool count_only = false;
  cuts->add_flag("--count-only", count_only, "Print only the number of cuts");

  auto* check = app.add_subcommand("check", "Structural predicates and the simply-connected verdict");
  add_file(check);
  std::size_t budget = qwc::kDefaultCosetBudget;
  check->add_option("--coset-budget", budget, "Live-coset limit for Todd-Coxeter")->check(CLI::PositiveNumber);

  auto* mutate = app.add_subcommand("mutate", "Mutate a cut at a strict source or sink");
  add_file(mutate);
  std::string cut_text, vertex_text, dir_text;
  mutate->add_option("--cut", cut_text, "Arrow ids, e.g. d,e")->required();
  mutate->add_option("--vertex", vertex_text)->required();
  mutate->add_option("--dir", dir_text)->required()->check(CLI::IsMember({"plus", "minus"}));

  auto* graph = app.add_subcommand("graph", "Export the mutation graph");
  add_file(graph);
  bool as_dot = false, as_json = false, directed = false;
  auto* dot_flag = graph->add_flag("--dot", as_dot, "DOT output (default)");
  graph->add_flag("--json", as_json, "JSON output")->excludes(dot_flag);
  graph->add_flag("--directed", directed, "Labelled directed edges in DOT output");

  auto* dot = app.add_subcommand("dot", "Export the quiver as DOT, cut arrows dashed");
  add_file(dot);
  dot->add_option("--cut", cut_text);

  auto* tensor = app.add_subcommand("tensor", "Build the tensor quiver with cycles of two Dynkin species");
  std::string left_text, right_text;
  bool split = false;
  int split_count = 2;
  tensor->add_option("--left", left_text, "e.g. A3:1<2>3")->required();
  tensor->add_option("--right", right_text, "e.g. B2")->required();
  tensor->add_flag("--split", split, "Apply the Morita vertex splitting");
  tensor->add_option("--split-count", split_count, "Simple blocks of Ext (x) Ext")->check(CLI::PositiveNumber);

  auto* truncate = app.add_subcommand("truncate", "Truncated quiver and relations for a cut");
  add_file(truncate);
  bool truncate_json = false;
  truncate->add_option("--cut", cut_text)->required();
  truncate->add_flag("--json", truncate_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) {
      const auto doc = qwc::parse_document(read_input(file));
      auto violations = qwc::validate(doc.description);
      std::erase(violations, std::string("quiver is not connected"));
      for (const auto& v : violations) std::cout << "violation: " << v << '\n';
      if (!violations.empty()) return 1;
      std::cout << "valid\n";
    } else if (*cuts) {
      const auto q = load(file);
      warn_if_not_covered(q.qwc);
      const auto all = qwc::enumerate_cuts(q.qwc);
      if (count_only) {
        std::cout << all.size() << '\n';
      } else {
        for (const auto& c : all) std::cout << qwc::format_cut(q.qwc.quiver(), c) << '\n';
      }
    } else if (*check) {
      const auto q = load(file);
      warn_if_not_covered(q.qwc);
      const auto& quiver = q.qwc.quiver();
      const auto all = qwc::enumerate_cuts(q.qwc);
      const auto g = qwc::mutation_graph(q.qwc, all);
      std::cout << "vertices: " << quiver.vertex_count() << '\n'
                << "arrows: " << quiver.arrow_count() << '\n'
                << "cycles: " << q.qwc.cycles().size() << '\n'
                << "cuts: " << all.size() << '\n'
                << "covered: " << yes_no(qwc::is_covered(q.qwc)) << '\n'
                << "enough-cuts: " << yes_no(qwc::has_enough_cuts(q.qwc, all)) << '\n'
                << "fully-compatible: " << yes_no(qwc::is_fully_compatible(q.qwc, all)) << '\n'
                << "transitive: " << yes_no(qwc::is_transitive(g)) << '\n'
                << "euler-characteristic: " << qwc::euler_characteristic(q.qwc) << '\n';
      if (qwc::is_connected(quiver)) std::cout << "h1: " << qwc::h1(q.qwc).describe() << '\n';
      const auto verdict = qwc::is_simply_connected(q.qwc, budget);
      std::cout << "simply-connected: " << qwc::to_string(verdict.status) << " (" << verdict.evidence << ")\n";
    } else if (*mutate) {
      const auto q = load(file);
      const auto c = qwc::parse_cut(q.qwc.quiver(), cut_text);
      const auto d = dir_text == "plus" ? qwc::Direction::Plus : qwc::Direction::Minus;
      const auto result = qwc::mutate(q.qwc, c, vertex_arg(q.qwc.quiver(), vertex_text), d);
      std::cout << qwc::format_cut(q.qwc.quiver(), result) << '\n';
    } else if (*graph) {
      const auto q = load(file);
      warn_if_not_covered(q.qwc);
      const auto g = qwc::mutation_graph(q.qwc);
      std::cout << (as_json ? qwc::export_json(g, q.qwc.quiver()) : qwc::export_dot(g, q.qwc.quiver(), directed));
    } else if (*dot) {
      const auto q = load(file);
      if (cut_text.empty()) {
        std::cout << qwc::export_dot(q.qwc.quiver());
      } else {
        const auto c = qwc::parse_cut(q.qwc.quiver(), cut_text);
        std::cout << qwc::export_dot(q.qwc.quiver(), &c);
      }
    } else if (*tensor) {
      const auto left = qwc::dynkin_quiver(qwc::parse_dynkin_spec(left_text, split_count));
      const auto right = qwc::dynkin_quiver(qwc::parse_dynkin_spec(right_text, split_count));
      auto t = qwc::tensor_qwc(left, right);
      if (split) t = qwc::morita_split(t);
      std::cout << qwc::serialize_quiver(t);
    } else if (*truncate) {
      const auto q = load(file);
      const auto c = qwc::parse_cut(q.qwc.quiver(), cut_text);
      const auto p = qwc::truncated_presentation(q.qwc, c);
      std::cout << (truncate_json ? qwc::presentation_json(p) : qwc::format_presentation(p));
    }
  } catch (const qwc::InvalidQuiver& e) {
    std::cerr << "error: invalid quiver\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
