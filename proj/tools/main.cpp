#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdl/elementary.hpp"
#include "mdl/graph_io.hpp"
#include "mdl/spec_string.hpp"
#include "mdl/verify.hpp"
#include "mdl/ztransform.hpp"

namespace {

using nlohmann::json;

enum Exit { Ok = 0, VerifyFailed = 1, InputError = 2, CapExceeded = 3 };

struct Options {
  std::size_t cap_vertices = mdl::Caps{}.max_vertices;
  std::size_t cap_matchings = mdl::Caps{}.max_matchings;
  std::string format = "json";
  std::string out;

  mdl::Caps caps() const {
    mdl::Caps c;
    c.max_vertices = cap_vertices;
    c.max_matchings = cap_matchings;
    return c;
  }
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty())
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  else
    mdl::write_text_file(opt.out, text.back() == '\n' ? text : text + "\n");
}

std::vector<std::string> labels_of(const mdl::FiniteLattice& l, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(l.label(x));
  return out;
}

json analyze_target(const mdl::PlaneBipartiteGraph& g, const std::string& target, const Options& opt,
                    std::string& text, std::string& dot) {
  const auto caps = opt.caps();
  if (target == "matchings") {
    const auto ms = mdl::enumerate_perfect_matchings(g, caps);
    text = "matchings: " + std::to_string(ms.size()) + "\n";
    for (const auto& m : ms) {
      text += " ";
      for (auto e : m.edges) text += " " + std::to_string(e);
      text += "\n";
    }
    return {{"count", ms.size()}, {"matchings", json::parse(mdl::matchings_to_json(ms))}};
  }
  if (target == "zdig") {
    const auto z = mdl::build_z_digraph(g, caps);
    dot = mdl::zdigraph_to_dot(z);
    json arcs = json::array();
    for (const auto& a : z.arcs) arcs.push_back({{"from", a.from}, {"to", a.to}, {"face", a.face}});
    text = "Z: " + std::to_string(z.matchings.size()) + " matchings, " + std::to_string(z.arcs.size()) + " arcs\n";
    return {{"nodes", z.matchings.size()}, {"arcs", arcs}};
  }
  if (target == "lattice") {
    const auto mp = mdl::matching_poset(g, caps);
    const auto l = mdl::matching_lattice(mp);
    dot = mdl::hasse_to_dot(l);
    const auto d = mdl::is_distributive(l);
    text = "lattice: " + std::to_string(l.size()) + " elements, height " + std::to_string(l.height()) +
           (d.distributive ? ", distributive\n" : ", not distributive\n");
    auto j = json::parse(mdl::lattice_to_json(l));
    j["distributive"] = d.distributive;
    return j;
  }
  if (target == "decompose") {
    const auto l = mdl::matching_lattice(mdl::matching_poset(g, caps));
    const auto d = mdl::irreducible_decomposition(l);
    const auto central = mdl::central_elements(l, d);
    json factors = json::array();
    text = "factors: " + std::to_string(d.factors.size()) + "\n";
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      factors.push_back({{"size", d.factors[i].size()}, {"join_irreducibles", labels_of(l, d.components[i])}});
      text += "  factor " + std::to_string(i + 1) + ": size " + std::to_string(d.factors[i].size()) + "\n";
    }
    text += "central elements:";
    for (const auto& s : labels_of(l, central)) text += " " + s;
    text += central.empty() ? " none\n" : "\n";
    return {{"factors", factors}, {"central_elements", labels_of(l, central)}, {"lattice_size", l.size()}};
  }
  if (target == "faceposet") {
    const auto fp = mdl::face_poset_outerplane(g);
    dot = mdl::poset_to_dot(fp.poset);
    text = "face poset: " + std::to_string(fp.poset.size()) + " faces, " + std::to_string(fp.poset.covers().size()) +
           " covers\n";
    auto j = json::parse(mdl::poset_to_json(fp.poset));
    j["faces"] = fp.faces;
    return j;
  }
  if (target == "dual") {
    dot = mdl::dual_to_dot(g, true);
    const auto dual = mdl::oriented_dual(g, true);
    json arcs = json::array();
    for (const auto& a : dual.arcs)
      arcs.push_back({{"from", dual.nodes[static_cast<std::size_t>(a.from)]},
                      {"to", dual.nodes[static_cast<std::size_t>(a.to)]}, {"edge", a.edge}});
    text = "dual: " + std::to_string(dual.nodes.size()) + " faces, " + std::to_string(dual.arcs.size()) + " arcs\n";
    return {{"faces", dual.nodes}, {"arcs", arcs}, {"outer_face", g.outer_face()}};
  }
  if (target == "elementary") {
    const auto s = mdl::elementary_structure(g, caps);
    text = std::string("elementary: ") + (s.is_elementary ? "yes" : "no") +
           ", weakly elementary: " + (s.is_weakly_elementary ? "yes" : "no") + ", forbidden edges: " +
           std::to_string(s.forbidden_edges.size()) + "\n";
    return {{"forbidden_edges", s.forbidden_edges},
            {"elementary_components", s.elementary_components},
            {"is_elementary", s.is_elementary},
            {"is_weakly_elementary", s.is_weakly_elementary}};
  }
  mdl::fail(mdl::ErrorCode::InvalidInput, "unknown analysis target '" + target + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching lattices of plane bipartite graphs"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--cap-vertices", opt.cap_vertices, "Largest vertex count accepted")->check(CLI::Range(1, 64));
  app.add_option("--cap-matchings", opt.cap_matchings, "Largest matching count accepted")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--out", opt.out, "Write output to this path");

  std::string spec;
  bool optimize = false;
  auto* gen = app.add_subcommand("gen", "Generate a graph from a family name");
  gen->add_option("spec", spec, "L(r1,..), P(m,n), T(m), C(n), tree:1>2,.., link:A+B")->required();
  gen->add_flag("--optimize", optimize, "Shorter faces for tree realizations");

  std::string graph_file;
  std::vector<std::string> targets;
  auto* analyze = app.add_subcommand("analyze", "Analyze a graph file");
  analyze->add_option("graph", graph_file, "JSON graph file")->required()->check(CLI::ExistingFile);
  analyze->add_option("targets", targets, "matchings|zdig|lattice|decompose|faceposet|dual|elementary")->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "core|parallelogram|outerplane|decomposition|all")
      ->required()
      ->check(CLI::IsMember({"core", "parallelogram", "outerplane", "decomposition", "all"}));

  for (auto* sub : {gen, analyze, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : InputError;
  }

  try {
    if (*gen) {
      const auto g = mdl::parse_graph_spec(spec, optimize);
      emit(opt, opt.format == "dot" ? mdl::graph_to_dot(g) : mdl::graph_to_json(g));
      return Ok;
    }
    if (*analyze) {
      const auto g = mdl::read_graph_file(graph_file);
      json all = json::object();
      std::string text_all, dot_all;
      for (const auto& t : targets) {
        std::string text, dot;
        all[t] = analyze_target(g, t, opt, text, dot);
        text_all += text;
        if (opt.format == "dot") {
          if (dot.empty()) mdl::fail(mdl::ErrorCode::InvalidInput, "target '" + t + "' has no DOT form");
          dot_all += dot;
        }
      }
      if (opt.format == "json") emit(opt, all.dump(2));
      if (opt.format == "text") emit(opt, text_all);
      if (opt.format == "dot") emit(opt, dot_all);
      return Ok;
    }
    const auto report = mdl::run_verification(suite, opt.caps());
    emit(opt, opt.format == "text" ? report.to_text() : report.to_json());
    return report.ok() ? Ok : VerifyFailed;
  } catch (const mdl::Error& e) {
    std::cerr << "mdl: " << e.what() << "\n";
    return e.code() == mdl::ErrorCode::SizeCapExceeded ? CapExceeded : InputError;
  }
}
