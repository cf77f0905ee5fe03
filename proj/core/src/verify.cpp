#include "mdl/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mdl/generators.hpp"
#include "mdl/lattice.hpp"
#include "mdl/spec_string.hpp"
#include "mdl/ztransform.hpp"

namespace mdl {

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
  j["totals"] = {{"pass", passed()}, {"fail", failed()}, {"total", checks.size()}};
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.id;
    if (!c.passed) os << "  -- " << c.witness;
    os << "\n";
  }
  os << suite << ": " << passed() << "/" << checks.size() << " passed\n";
  return os.str();
}

namespace {

constexpr std::size_t kPathsPerPair = 1000;

class Runner {
 public:
  Runner(VerificationReport& r, const Caps& caps) : report_(r), caps_(caps) {}

  // body returns an empty string on success, a witness otherwise
  void check(const std::string& id, const std::function<std::string()>& body) {
    std::string witness;
    try {
      witness = body();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SizeCapExceeded) throw;
      witness = e.what();
    }
    report_.checks.push_back({id, witness.empty(), witness});
  }

  const Caps& caps() const { return caps_; }

 private:
  VerificationReport& report_;
  Caps caps_;
};

std::string delta_matches_paths(const PlaneBipartiteGraph& g, const MatchingPoset& mp) {
  const int n = static_cast<int>(mp.z.matchings.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!mp.poset.leq(b, a)) continue;
      const auto delta = delta_cycle_counts(g, mp, a, b);
      for (const auto& path : directed_paths(mp.z, a, b, kPathsPerPair).paths)
        for (FaceId f : g.inner_faces())
          if (path_face_multiplicity(mp.z, path, f) != delta[static_cast<std::size_t>(f)])
            return "delta differs on face " + std::to_string(f) + " for M" + std::to_string(a) + " -> M" +
                   std::to_string(b);
    }
  return {};
}

void core_suite(Runner& run) {
  for (const char* spec : {"C(4)", "C(6)", "P(2,1)", "P(2,2)", "T(2)", "tree:1>2", "link:C(6)+C(6)"}) {
    const std::string name = spec;
    const auto g = parse_graph_spec(spec);
    std::optional<MatchingPoset> mp;
    run.check(name + ": Z acyclic, Hasse diagram equals Z", [&] {
      mp = matching_poset(g, run.caps());
      return std::string{};
    });
    if (!mp) continue;
    run.check(name + ": distributive graded lattice", [&]() -> std::string {
      const auto l = matching_lattice(*mp);
      if (!is_distributive(l).distributive) return "not distributive";
      rank_check(l);
      return {};
    });
    run.check(name + ": source and root have the cycle property", [&]() -> std::string {
      return extremal_matchings(g, *mp).cycle_property_verified ? "" : "alternating cycle of the wrong class";
    });
    run.check(name + ": path face counts equal cycle counts", [&] { return delta_matches_paths(g, *mp); });
    run.check(name + ": J(Irr L) is isomorphic to L", [&]() -> std::string {
      const auto l = matching_lattice(*mp);
      const auto j = order_ideal_lattice(join_irreducibles(l).poset, run.caps().max_lattice_elements);
      const auto iso = lattice_isomorphic(l, j.lattice, run.caps().max_lattice_elements);
      return iso ? "" : iso.witness;
    });
  }
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void parallelogram_suite(Runner& run) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const auto spec = TruncatedParallelogramSpec::parallelogram(m, n);
      run.check(spec.name() + ": matching count C(m+n,m)", [&]() -> std::string {
        const auto h = truncated_parallelogram(spec);
        const auto count = enumerate_perfect_matchings(h.graph, run.caps()).size();
        return static_cast<long long>(count) == binomial(m + n, m)
                   ? ""
                   : "got " + std::to_string(count) + ", want " + std::to_string(binomial(m + n, m));
      });
    }
  for (int m = 1; m <= 3; ++m) {
    const auto spec = TruncatedParallelogramSpec::prolate_triangle(m);
    run.check(spec.name() + ": matching count is Catalan", [&]() -> std::string {
      const auto count = enumerate_perfect_matchings(truncated_parallelogram(spec).graph, run.caps()).size();
      const auto want = binomial(2 * m + 2, m + 1) / (m + 2);
      return static_cast<long long>(count) == want ? "" : "got " + std::to_string(count);
    });
  }
  for (const auto& spec : row_profiles(9)) {
    if (spec.rows.size() > 3 || spec.rows.front() > 3) continue;
    run.check(spec.name() + ": M(H) isomorphic to J(F(H))", [&] {
      verify_iso_parallelogram(truncated_parallelogram(spec), run.caps());
      return std::string{};
    });
    run.check(spec.name() + ": forcing edge and root shape", [&]() -> std::string {
      const auto h = truncated_parallelogram(spec);
      const auto ms = enumerate_perfect_matchings(h.graph, run.caps());
      const auto forcing = forcing_edges(h.graph, ms);
      if (!std::binary_search(forcing.begin(), forcing.end(), h.forcing_edge)) return "left edge of h1,1 not forcing";
      const auto mp = matching_poset(h.graph, run.caps());
      const auto& root = mp.z.matchings[static_cast<std::size_t>(extremal_matchings(h.graph, mp).root)];
      for (EdgeId e : h.left_perimeter)
        if ((h.slant[static_cast<std::size_t>(e)] == Slant::Vertical) != root.contains(e))
          return "root disagrees on left perimeter edge " + std::to_string(e);
      for (EdgeId e : h.bottom_perimeter)
        if ((h.slant[static_cast<std::size_t>(e)] == Slant::Rising) != root.contains(e))
          return "root disagrees on bottom perimeter edge " + std::to_string(e);
      for (EdgeId e : root.edges)
        if (!std::binary_search(h.left_perimeter.begin(), h.left_perimeter.end(), e) &&
            !std::binary_search(h.bottom_perimeter.begin(), h.bottom_perimeter.end(), e) &&
            h.slant[static_cast<std::size_t>(e)] != Slant::Falling)
          return "root edge " + std::to_string(e) + " off the perimeters is not falling";
      return {};
    });
  }
}

std::string outerplane_checks(const OrientedTree& t, const Caps& caps) {
  const auto r = realize_tree(t);
  const auto& g = r.graph;
  const auto mp = matching_poset(g, caps);
  const auto& ms = mp.z.matchings;
  for (const auto& cut : find_e_cuts(g).cuts)
    for (const auto& m : ms) {
      const auto hits = std::count_if(cut.edges.begin(), cut.edges.end(), [&](EdgeId e) { return m.contains(e); });
      if (hits != 1) return "e-cut meets a matching in " + std::to_string(hits) + " edges";
    }
  const auto ext = extremal_matchings(g, mp);
  const auto paths = directed_paths(mp.z, ext.source, ext.root, 10000);
  for (const auto& p : paths.paths)
    for (FaceId f : g.inner_faces())
      if (path_face_multiplicity(mp.z, p, f) != 1) return "face " + std::to_string(f) + " not flipped exactly once";
  verify_iso_matchings_ideals(g, caps);
  return {};
}

std::string describe(const OrientedTree& t) {
  std::string s;
  for (auto [a, b] : t.arcs) s += (s.empty() ? "" : ",") + std::to_string(a + 1) + ">" + std::to_string(b + 1);
  return "tree:" + (s.empty() ? std::string("1") : s);
}

void outerplane_suite(Runner& run) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& shape : tree_shapes(n))
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << shape.arcs.size()); ++mask) {
        const auto t = orient(shape, mask);
        run.check(describe(t) + ": dual, e-cuts, single flips, sigma", [&] { return outerplane_checks(t, run.caps()); });
      }
}

std::string factor_signature(const std::vector<FiniteLattice>& factors) {
  std::vector<std::size_t> sizes;
  for (const auto& f : factors) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  std::string s;
  for (auto x : sizes) s += (s.empty() ? "" : "x") + std::to_string(x);
  return s.empty() ? "1" : s;
}

void decomposition_suite(Runner& run) {
  const std::vector<std::string> parts = {"C(6)", "P(2,1)", "P(2,2)"};
  std::map<std::string, std::size_t> size_of = {{"C(6)", 2}, {"P(2,1)", 3}, {"P(2,2)", 6}};
  for (const auto& a : parts)
    for (const auto& b : parts) {
      const std::string spec = "link:" + a + "+" + b;
      run.check(spec + ": product of the parts", [&]() -> std::string {
        const auto g = parse_graph_spec(spec);
        const auto l = matching_lattice(matching_poset(g, run.caps()));
        const auto la = matching_lattice(matching_poset(parse_graph_spec(a), run.caps()));
        const auto lb = matching_lattice(matching_poset(parse_graph_spec(b), run.caps()));
        const auto prod = direct_product(la, lb, run.caps().max_lattice_elements);
        if (!lattice_isomorphic(l, prod, run.caps().max_lattice_elements)) return "not isomorphic to the product";
        const auto d = irreducible_decomposition(l);
        std::vector<std::size_t> want = {size_of[a], size_of[b]}, got;
        for (const auto& f : d.factors) got.push_back(f.size());
        std::sort(want.begin(), want.end());
        if (got != want) return "factors " + factor_signature(d.factors);
        if (central_elements(l, d).size() != 2) return "expected two central elements";
        return {};
      });
    }
  for (const char* spec : {"C(6)", "P(2,1)", "P(2,2)", "T(2)", "T(3)", "L(3,1)"}) {
    run.check(std::string(spec) + ": elementary graph gives an irreducible lattice", [&]() -> std::string {
      const auto l = matching_lattice(matching_poset(parse_graph_spec(spec), run.caps()));
      if (!central_elements(l).empty()) return "has central elements";
      const auto comp = complements(l);
      for (int x = 0; x < static_cast<int>(l.size()); ++x)
        if (comp[static_cast<std::size_t>(x)] && x != l.top() && x != l.bottom())
          return l.label(x) + " has a complement";
      return {};
    });
  }
  run.check("2x3 product: grid spanned by complementary pairs", [&]() -> std::string {
    const auto l = direct_product(chain_lattice(2), chain_lattice(3));
    const auto comp = complements(l);
    int grids = 0;
    for (int x = 0; x < static_cast<int>(l.size()); ++x) {
      const auto y = comp[static_cast<std::size_t>(x)];
      if (!y || x == l.top() || x == l.bottom()) continue;
      const auto g = grid_sublattice(l, x, *y, saturated_chain(l, l.bottom(), x), saturated_chain(l, l.bottom(), *y));
      if (g.rows + g.cols - 2 != l.height()) return "grid has the wrong shape";
      ++grids;
    }
    return grids == 2 ? "" : "expected 2 complementary pairs, found " + std::to_string(grids);
  });
}

}  // namespace

VerificationReport run_verification(std::string_view suite, const Caps& caps) {
  VerificationReport report;
  report.suite = std::string(suite);
  Runner run(report, caps);
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "core") core_suite(run), known = true;
  if (all || suite == "parallelogram") parallelogram_suite(run), known = true;
  if (all || suite == "outerplane") outerplane_suite(run), known = true;
  if (all || suite == "decomposition") decomposition_suite(run), known = true;
  if (!known) fail(ErrorCode::InvalidInput, "unknown suite '" + std::string(suite) + "'");
  return report;
}

}  // namespace mdl
