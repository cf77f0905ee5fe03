#include <algorithm>

#include "mdl/lattice.hpp"

namespace mdl {

// Matches the join-irreducible posets, extends by joins, then checks the
// extension is an order isomorphism. Exact for distributive lattices; for
// others a failed check is reported as non-isomorphic only after the direct
// Hasse-diagram search also fails.
LatticeIsomorphism lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b, std::size_t max_elements) {
  LatticeIsomorphism out;
  if (a.size() > max_elements || b.size() > max_elements)
    fail(ErrorCode::SizeCapExceeded, "lattice exceeds " + std::to_string(max_elements) + " elements");
  if (a.size() != b.size()) {
    out.witness = "sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return out;
  }
  if (a.height() != b.height()) {
    out.witness = "heights differ: " + std::to_string(a.height()) + " vs " + std::to_string(b.height());
    return out;
  }
  const auto ia = join_irreducibles(a);
  const auto ib = join_irreducibles(b);
  if (ia.elements.size() != ib.elements.size()) {
    out.witness = "join-irreducible counts differ: " + std::to_string(ia.elements.size()) + " vs " +
                  std::to_string(ib.elements.size());
    return out;
  }

  auto certify = [&](const std::vector<int>& phi) {
    std::vector<int> seen(phi);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    const int n = static_cast<int>(a.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (a.leq(x, y) != b.leq(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)])) return false;
    return true;
  };

  if (auto irr = poset_isomorphism(ia.poset, ib.poset)) {
    std::vector<int> phi(a.size(), b.bottom());
    for (int x = 0; x < static_cast<int>(a.size()); ++x)
      for (std::size_t j = 0; j < ia.elements.size(); ++j)
        if (a.leq(ia.elements[j], x))
          phi[static_cast<std::size_t>(x)] =
              b.join(phi[static_cast<std::size_t>(x)], ib.elements[static_cast<std::size_t>((*irr)[j])]);
    if (certify(phi)) {
      out.map = std::move(phi);
      return out;
    }
  } else if (is_distributive(a).distributive && is_distributive(b).distributive) {
    out.witness = "join-irreducible posets are not isomorphic";
    return out;
  }

  if (auto direct = poset_isomorphism(a.poset(), b.poset())) {
    out.map = std::move(*direct);
    return out;
  }
  out.witness = "Hasse diagrams are not isomorphic";
  return out;
}

}  // namespace mdl
