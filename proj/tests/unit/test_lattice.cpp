#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mdl/generators.hpp"
#include "oracles.hpp"

using namespace mdl;
using fixture::code_of;

namespace {

FiniteLattice m3() {
  return lattice_from_poset(FinitePoset({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

FiniteLattice n5() {
  return lattice_from_poset(FinitePoset({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
}

int by_label(const FiniteLattice& l, const std::string& s) {
  for (int x = 0; x < static_cast<int>(l.size()); ++x)
    if (l.label(x) == s) return x;
  FAIL("no element " << s);
  return -1;
}

bool is_complemented(const FiniteLattice& l, int x) {
  for (int y = 0; y < static_cast<int>(l.size()); ++y)
    if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) return true;
  return false;
}

}  // namespace

TEST_CASE("M3 and N5 are not distributive") {
  const auto a = m3();
  const auto r = is_distributive(a);
  CHECK_FALSE(r.distributive);
  REQUIRE(r.witness);
  const auto [x, y, z] = *r.witness;
  CHECK(a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)));
  CHECK_FALSE(is_distributive(n5()).distributive);
  CHECK(code_of([] { complements(m3()); }) == ErrorCode::DuplicateComplement);
  CHECK(code_of([] { rank_check(n5()); }) == ErrorCode::NotGraded);
}

TEST_CASE("posets that are not lattices") {
  CHECK(code_of([] { lattice_from_poset(FinitePoset::antichain(2)); }) == ErrorCode::NotALattice);
  // two incomparable upper bounds of a and b
  CHECK(code_of([] {
          lattice_from_poset(FinitePoset({"0", "a", "b", "c", "d", "1"},
                                         {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}));
        }) == ErrorCode::NotALattice);
  CHECK(code_of([] { FinitePoset({"a", "b"}, {{0, 1}, {1, 0}}); }) == ErrorCode::CycleDetected);
  CHECK(code_of([] { FinitePoset({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}); }) == ErrorCode::HasseMismatch);
}

TEST_CASE("2x3 grid: complements, centrals and the spanned grid") {
  const auto l = direct_product(chain_lattice(2), chain_lattice(3));
  CHECK(l.size() == 6);
  CHECK(is_distributive(l).distributive);
  const auto comp = complements(l);
  CHECK(std::count_if(comp.begin(), comp.end(), [](const auto& c) { return c.has_value(); }) == 4);

  const auto central = central_elements(l);
  std::vector<std::string> names;
  for (int x : central) names.push_back(l.label(x));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"(1,3)", "(2,1)"});

  const int x = by_label(l, "(2,1)");
  const int y = by_label(l, "(1,3)");
  REQUIRE(comp[static_cast<std::size_t>(x)] == y);
  const auto cx = saturated_chain(l, l.bottom(), x);
  const auto cy = saturated_chain(l, l.bottom(), y);
  CHECK(cx.size() == 2);
  CHECK(cy.size() == 3);
  const auto grid = grid_sublattice(l, x, y, cx, cy);
  CHECK(grid.rows == 2);
  CHECK(grid.cols == 3);
  std::set<int> cells;
  for (const auto& row : grid.element) cells.insert(row.begin(), row.end());
  CHECK(cells.size() == 6);
  CHECK(code_of([&] { grid_sublattice(l, l.bottom(), l.top(), {l.bottom()}, saturated_chain(l, l.bottom(), l.top())); }) ==
        ErrorCode::InvalidInput);
  CHECK(code_of([&] { grid_sublattice(l, x, x, cx, cx); }) == ErrorCode::NotComplementary);
  CHECK(code_of([&] { grid_sublattice(l, x, y, cx, {l.bottom(), y}); }) == ErrorCode::ChainNotSaturated);
}

TEST_CASE("saturated chains step along covers") {
  const auto l = order_ideal_lattice(FinitePoset::grid(3, 3)).lattice;
  const auto c = saturated_chain(l, l.bottom(), l.top());
  CHECK(static_cast<int>(c.size()) == l.height() + 1);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const auto& up = l.poset().upper_covers(c[i]);
    CHECK(std::find(up.begin(), up.end(), c[i + 1]) != up.end());
  }
  CHECK(saturated_chain(l, l.top(), l.bottom()).empty());
}

TEST_CASE("order ideal lattices") {
  CHECK(order_ideal_lattice(FinitePoset::grid(2, 2)).lattice.size() == 6);
  CHECK(order_ideal_lattice(hexagon_poset(TruncatedParallelogramSpec::prolate_triangle(2))).lattice.size() == 5);
  CHECK(order_ideal_lattice(FinitePoset::chain(4)).lattice.size() == 5);
  CHECK(order_ideal_lattice(FinitePoset::antichain(4)).lattice.size() == 16);
  const auto empty = order_ideal_lattice(FinitePoset::antichain(0));
  CHECK(empty.lattice.size() == 1);
  CHECK(empty.lattice.top() == empty.lattice.bottom());
  CHECK(code_of([] { order_ideal_lattice(FinitePoset::antichain(10), 100); }) == ErrorCode::SizeCapExceeded);
}

TEST_CASE("ideal lattices agree with the oracles on random posets") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 9;
    const auto p = fixture::random_poset(rng, n, 0.35);
    const auto j = order_ideal_lattice(p);
    const auto naive = oracle::order_ideals(p);
    REQUIRE(j.ideals.size() == naive.size());
    std::set<oracle::EdgeSet> a(naive.begin(), naive.end()), b;
    for (const auto& ideal : j.ideals) {
      oracle::EdgeSet members;
      for (auto k = ideal.find_first(); k != Bitset::npos; k = ideal.find_next(k)) members.push_back(static_cast<int>(k));
      b.insert(members);
    }
    CHECK(a == b);
    const auto& l = j.lattice;
    const int size = static_cast<int>(l.size());
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) {
        CHECK(l.meet(x, y) == oracle::meet(l.poset(), x, y));
        CHECK(l.join(x, y) == oracle::join(l.poset(), x, y));
        CHECK(j.ideals[static_cast<std::size_t>(l.meet(x, y))] ==
              (j.ideals[static_cast<std::size_t>(x)] & j.ideals[static_cast<std::size_t>(y)]));
      }
    CHECK(is_distributive(l).distributive);
    CHECK(oracle::distributive(l.poset()));
    CHECK_NOTHROW(rank_check(l));
    // Birkhoff: J(Irr(J(P))) is P again
    CHECK(poset_isomorphism(join_irreducibles(l).poset, p).has_value());
  }
}

TEST_CASE("isomorphism tests") {
  const auto chain4 = chain_lattice(4);
  const auto square = direct_product(chain_lattice(2), chain_lattice(2));
  const auto r = lattice_isomorphic(chain4, square);
  CHECK_FALSE(r);
  CHECK_FALSE(r.witness.empty());
  CHECK_FALSE(lattice_isomorphic(m3(), n5()));
  CHECK(lattice_isomorphic(m3(), m3()));

  const auto j = order_ideal_lattice(FinitePoset::antichain(2)).lattice;
  const auto iso = lattice_isomorphic(j, square);
  REQUIRE(iso);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(j.leq(x, y) == square.leq((*iso.map)[static_cast<std::size_t>(x)], (*iso.map)[static_cast<std::size_t>(y)]));
}

TEST_CASE("products of ideal lattices are ideal lattices of disjoint unions") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p1 = fixture::random_poset(rng, 1 + trial % 4, 0.5);
    const auto p2 = fixture::random_poset(rng, 1 + (trial / 4) % 4, 0.5);
    const auto prod = direct_product(order_ideal_lattice(p1).lattice, order_ideal_lattice(p2).lattice);
    const auto sum = order_ideal_lattice(FinitePoset::disjoint_union(p1, p2)).lattice;
    CHECK(lattice_isomorphic(prod, sum));
  }
}

TEST_CASE("decomposition into irreducible factors") {
  const auto l = direct_product(direct_product(chain_lattice(2), chain_lattice(3)), chain_lattice(2));
  const auto d = irreducible_decomposition(l);
  REQUIRE(d.factors.size() == 3);
  CHECK(d.factors[0].size() == 2);
  CHECK(d.factors[1].size() == 2);
  CHECK(d.factors[2].size() == 3);
  CHECK(central_elements(l, d).size() == 3);

  const auto single = irreducible_decomposition(chain_lattice(5));
  CHECK(single.factors.size() == 1);
  CHECK(central_elements(chain_lattice(5)).empty());
  CHECK(irreducible_decomposition(order_ideal_lattice(FinitePoset::antichain(0)).lattice).factors.empty());
  CHECK(code_of([] { irreducible_decomposition(m3()); }) == ErrorCode::InvalidInput);
}

TEST_CASE("central elements are the minimal nontrivial complemented elements") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = fixture::random_poset(rng, 2 + trial % 7, 0.25);
    const auto l = order_ideal_lattice(p).lattice;
    const auto d = irreducible_decomposition(l);
    CHECK(d.factors.size() == p.components().size());
    std::vector<int> want;
    if (d.factors.size() >= 2)
      for (int x = 0; x < static_cast<int>(l.size()); ++x) {
        if (x == l.bottom() || !is_complemented(l, x)) continue;
        bool minimal = true;
        for (int y = 0; y < static_cast<int>(l.size()); ++y)
          if (y != l.bottom() && l.poset().less(y, x) && is_complemented(l, y)) minimal = false;
        if (minimal) want.push_back(x);
      }
    CHECK(central_elements(l, d) == want);
  }
}
