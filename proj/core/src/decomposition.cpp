#include <algorithm>
#include <map>

#include "mdl/lattice.hpp"

namespace mdl {

Decomposition irreducible_decomposition(const FiniteLattice& l) {
  if (auto d = is_distributive(l); !d.distributive)
    fail(ErrorCode::InvalidInput, "lattice is not distributive");
  const auto irr = join_irreducibles(l);
  struct Factor {
    std::vector<int> members;  // indices into irr.poset
    IdealLattice ideals;
  };
  std::vector<Factor> parts;
  for (auto& comp : irr.poset.components())
    parts.push_back({comp, order_ideal_lattice(irr.poset.induced(comp))});
  std::sort(parts.begin(), parts.end(), [&](const Factor& x, const Factor& y) {
    if (x.ideals.lattice.size() != y.ideals.lattice.size())
      return x.ideals.lattice.size() < y.ideals.lattice.size();
    return irr.elements[static_cast<std::size_t>(x.members.front())] <
           irr.elements[static_cast<std::size_t>(y.members.front())];
  });

  Decomposition d;
  std::size_t product = 1;
  for (const auto& p : parts) {
    std::vector<int> elems;
    for (int m : p.members) elems.push_back(irr.elements[static_cast<std::size_t>(m)]);
    d.components.push_back(std::move(elems));
    product *= p.ideals.lattice.size();
  }
  if (product != l.size())
    fail(ErrorCode::ProductMismatch, "factor sizes multiply to " + std::to_string(product) + ", lattice has " +
                                         std::to_string(l.size()));

  const int n = static_cast<int>(l.size());
  std::map<std::vector<int>, int> back;
  d.tuple.resize(l.size());
  for (int x = 0; x < n; ++x) {
    auto& t = d.tuple[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Bitset ideal(parts[i].members.size());
      for (std::size_t k = 0; k < d.components[i].size(); ++k)
        if (l.leq(d.components[i][k], x)) ideal.set(k);
      t.push_back(parts[i].ideals.index_of(ideal));
    }
    if (!back.emplace(t, x).second)
      fail(ErrorCode::ProductMismatch, "coordinate map is not injective at " + l.label(x));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool prod_leq = true;
      for (std::size_t i = 0; i < parts.size() && prod_leq; ++i)
        prod_leq = parts[i].ideals.lattice.leq(d.tuple[static_cast<std::size_t>(x)][i],
                                               d.tuple[static_cast<std::size_t>(y)][i]);
      if (prod_leq != l.leq(x, y))
        fail(ErrorCode::ProductMismatch, "coordinate map breaks order on (" + l.label(x) + ", " + l.label(y) + ")");
    }
  for (auto& p : parts) d.factors.push_back(std::move(p.ideals.lattice));
  return d;
}

std::vector<int> central_elements(const FiniteLattice& l, const Decomposition& d) {
  if (d.factors.size() < 2) return {};
  std::map<std::vector<int>, int> back;
  for (std::size_t x = 0; x < d.tuple.size(); ++x) back.emplace(d.tuple[x], static_cast<int>(x));
  std::vector<int> out;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    std::vector<int> t;
    for (std::size_t j = 0; j < d.factors.size(); ++j)
      t.push_back(i == j ? d.factors[j].top() : d.factors[j].bottom());
    out.push_back(back.at(t));
  }
  (void)l;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> central_elements(const FiniteLattice& l) { return central_elements(l, irreducible_decomposition(l)); }

}  // namespace mdl
