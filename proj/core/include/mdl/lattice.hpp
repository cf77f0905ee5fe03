#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mdl/error.hpp"
#include "mdl/poset.hpp"

namespace mdl {

/// A finite lattice with explicit meet/join tables and the rank function
/// (longest chain length from the bottom).
class FiniteLattice {
 public:
  FiniteLattice() = default;

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(int x) const { return poset_.label(x); }
  bool leq(int a, int b) const { return poset_.leq(a, b); }

  int meet(int a, int b) const { return meet_[index(a, b)]; }
  int join(int a, int b) const { return join_[index(a, b)]; }
  int top() const { return top_; }
  int bottom() const { return bottom_; }
  int rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }
  int height() const { return rank_[static_cast<std::size_t>(top_)]; }

  /// Assembles a lattice from known tables (no glb/lub search). Used by
  /// constructions whose tables are correct by definition.
  static FiniteLattice from_tables(FinitePoset poset, std::vector<int> meet, std::vector<int> join);

 private:
  friend FiniteLattice lattice_from_poset(FinitePoset poset);
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b); }
  void finish();

  FinitePoset poset_;
  std::vector<int> meet_;
  std::vector<int> join_;
  std::vector<int> rank_;
  int top_ = 0;
  int bottom_ = 0;
};

/// Fills meet/join tables. Throws NotALattice naming a pair without glb or lub.
FiniteLattice lattice_from_poset(FinitePoset poset);

struct DistributivityResult {
  bool distributive = true;
  std::optional<std::array<int, 3>> witness;  // x, y, z with x^(y v z) != (x^y) v (x^z)
};

DistributivityResult is_distributive(const FiniteLattice& l);

/// Checks gradedness and rho(x)+rho(y) = rho(x^y)+rho(xvy). Throws NotGraded.
std::vector<int> rank_check(const FiniteLattice& l);

/// complement[x] if one exists. Throws DuplicateComplement on a second one.
std::vector<std::optional<int>> complements(const FiniteLattice& l);

/// Some saturated chain from `from` up to `to` (inclusive); empty if from !<= to.
std::vector<int> saturated_chain(const FiniteLattice& l, int from, int to);

struct GridSublattice {
  int rows = 0;  // r + 1
  int cols = 0;  // k - r + 1
  std::vector<std::vector<int>> element;  // element[i][j] = x_i v y_j
};

/// The (r+1)x(k-r+1) grid spanned by two saturated chains from the bottom to
/// a complementary pair x, y.
GridSublattice grid_sublattice(const FiniteLattice& l, int x, int y, const std::vector<int>& chain_x,
                               const std::vector<int>& chain_y);

struct JoinIrreducibles {
  FinitePoset poset;
  std::vector<int> elements;  // poset element i is lattice element elements[i]
};

/// Non-bottom elements with exactly one lower cover, with the inherited order.
JoinIrreducibles join_irreducibles(const FiniteLattice& l);

struct IdealLattice {
  FiniteLattice lattice;
  std::vector<Bitset> ideals;  // lattice element i is the down-set ideals[i]
  int index_of(const Bitset& ideal) const;
};

/// J(P): down-sets ordered by inclusion, meet = intersection, join = union.
/// Elements sorted by size, then by member list; bottom is the empty ideal.
IdealLattice order_ideal_lattice(const FinitePoset& p, std::size_t max_elements = Caps{}.max_lattice_elements);

struct Decomposition {
  std::vector<FiniteLattice> factors;
  std::vector<std::vector<int>> components;  // join-irreducible lattice elements per factor
  std::vector<std::vector<int>> tuple;       // tuple[x][i] = coordinate of x in factor i
};

/// Factors J(P_c) over the connected components P_c of the join-irreducible
/// poset; the coordinate map is certified to be an order isomorphism.
Decomposition irreducible_decomposition(const FiniteLattice& l);

/// The unit vectors of the decomposition; empty for irreducible lattices.
std::vector<int> central_elements(const FiniteLattice& l, const Decomposition& d);
std::vector<int> central_elements(const FiniteLattice& l);

struct LatticeIsomorphism {
  std::optional<std::vector<int>> map;  // element of first -> element of second
  std::string witness;                  // reason when no isomorphism exists
  explicit operator bool() const { return map.has_value(); }
};

LatticeIsomorphism lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b,
                                      std::size_t max_elements = Caps{}.max_lattice_elements);

/// Componentwise product; element (x, y) gets index x * |b| + y.
FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b,
                             std::size_t max_elements = Caps{}.max_lattice_elements);

FiniteLattice chain_lattice(int n);

}  // namespace mdl
