#include "mdl/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace mdl {

namespace {

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const {
    std::vector<Bitset::block_type> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    std::size_t h = b.size();
    for (auto blk : blocks) h ^= std::hash<Bitset::block_type>{}(blk) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::vector<int> members(const Bitset& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

void FiniteLattice::finish() {
  const auto mins = poset_.minimal_elements();
  const auto maxs = poset_.maximal_elements();
  if (mins.size() != 1 || maxs.size() != 1) fail(ErrorCode::NotALattice, "no unique bottom and top");
  bottom_ = mins.front();
  top_ = maxs.front();
  rank_.assign(size(), 0);
  for (int x : poset_.linear_extension())
    for (int c : poset_.lower_covers(x))
      rank_[static_cast<std::size_t>(x)] = std::max(rank_[static_cast<std::size_t>(x)], rank_[static_cast<std::size_t>(c)] + 1);
}

FiniteLattice FiniteLattice::from_tables(FinitePoset poset, std::vector<int> meet, std::vector<int> join) {
  FiniteLattice l;
  l.poset_ = std::move(poset);
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  l.finish();
  return l;
}

FiniteLattice lattice_from_poset(FinitePoset poset) {
  const std::size_t n = poset.size();
  if (n == 0) fail(ErrorCode::NotALattice, "empty poset");
  {
    const auto mins = poset.minimal_elements();
    if (mins.size() > 1)
      fail(ErrorCode::NotALattice, "no meet for (" + poset.label(mins[0]) + ", " + poset.label(mins[1]) + ")");
    const auto maxs = poset.maximal_elements();
    if (maxs.size() > 1)
      fail(ErrorCode::NotALattice, "no join for (" + poset.label(maxs[0]) + ", " + poset.label(maxs[1]) + ")");
  }
  std::vector<std::size_t> pos(n);
  const auto& le = poset.linear_extension();
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(le[i])] = i;

  // the element of `common` latest in the linear extension is maximal in it;
  // it is the bound iff it dominates the whole set
  auto extreme = [&](const Bitset& common, bool greatest, const std::vector<Bitset>& cone) -> int {
    int best = -1;
    for (auto c = common.find_first(); c != Bitset::npos; c = common.find_next(c)) {
      if (best < 0 || (greatest ? pos[c] > pos[static_cast<std::size_t>(best)] : pos[c] < pos[static_cast<std::size_t>(best)]))
        best = static_cast<int>(c);
    }
    if (best < 0 || !common.is_subset_of(cone[static_cast<std::size_t>(best)])) return -1;
    return best;
  };
  std::vector<Bitset> downs, ups;
  for (std::size_t x = 0; x < n; ++x) {
    downs.push_back(poset.down_set(static_cast<int>(x)));
    ups.push_back(poset.up_set(static_cast<int>(x)));
  }
  std::vector<int> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const int m = extreme(downs[a] & downs[b], true, downs);
      const int j = extreme(ups[a] & ups[b], false, ups);
      if (m < 0)
        fail(ErrorCode::NotALattice, "no meet for (" + poset.label(static_cast<int>(a)) + ", " +
                                         poset.label(static_cast<int>(b)) + ")");
      if (j < 0)
        fail(ErrorCode::NotALattice, "no join for (" + poset.label(static_cast<int>(a)) + ", " +
                                         poset.label(static_cast<int>(b)) + ")");
      meet[a * n + b] = meet[b * n + a] = m;
      join[a * n + b] = join[b * n + a] = j;
    }
  return FiniteLattice::from_tables(std::move(poset), std::move(meet), std::move(join));
}

DistributivityResult is_distributive(const FiniteLattice& l) {
  const int n = static_cast<int>(l.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return {false, std::array<int, 3>{x, y, z}};
  return {};
}

std::vector<int> rank_check(const FiniteLattice& l) {
  const int n = static_cast<int>(l.size());
  std::vector<int> rho(l.size());
  for (int x = 0; x < n; ++x) rho[static_cast<std::size_t>(x)] = l.rank(x);
  if (rho[static_cast<std::size_t>(l.bottom())] != 0) fail(ErrorCode::NotGraded, "bottom has nonzero rank");
  for (auto [a, b] : l.poset().covers())
    if (rho[static_cast<std::size_t>(b)] != rho[static_cast<std::size_t>(a)] + 1)
      fail(ErrorCode::NotGraded, "cover " + l.label(a) + " < " + l.label(b) + " skips a rank");
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (rho[static_cast<std::size_t>(x)] + rho[static_cast<std::size_t>(y)] !=
          rho[static_cast<std::size_t>(l.meet(x, y))] + rho[static_cast<std::size_t>(l.join(x, y))])
        fail(ErrorCode::NotGraded, "rank is not modular on (" + l.label(x) + ", " + l.label(y) + ")");
  return rho;
}

std::vector<std::optional<int>> complements(const FiniteLattice& l) {
  const int n = static_cast<int>(l.size());
  std::vector<std::optional<int>> out(l.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (l.join(x, y) != l.top() || l.meet(x, y) != l.bottom()) continue;
      auto& slot = out[static_cast<std::size_t>(x)];
      if (slot)
        fail(ErrorCode::DuplicateComplement,
             l.label(x) + " has complements " + l.label(*slot) + " and " + l.label(y));
      slot = y;
    }
  return out;
}

std::vector<int> saturated_chain(const FiniteLattice& l, int from, int to) {
  if (!l.leq(from, to)) return {};
  std::vector<int> chain{from};
  int at = from;
  while (at != to) {
    for (int c : l.poset().upper_covers(at))
      if (l.leq(c, to)) {
        at = c;
        break;
      }
    chain.push_back(at);
  }
  return chain;
}

GridSublattice grid_sublattice(const FiniteLattice& l, int x, int y, const std::vector<int>& chain_x,
                               const std::vector<int>& chain_y) {
  if (l.join(x, y) != l.top() || l.meet(x, y) != l.bottom())
    fail(ErrorCode::NotComplementary, l.label(x) + " and " + l.label(y) + " are not complements");
  const int r = l.rank(x);
  const int s = l.rank(y);
  if (r < 1 || s < 1)
    fail(ErrorCode::InvalidInput, "both elements of the pair must have positive rank (got " + std::to_string(r) +
                                      " and " + std::to_string(s) + ")");
  auto check_chain = [&](const std::vector<int>& c, int end, int len) {
    if (static_cast<int>(c.size()) != len + 1 || c.front() != l.bottom() || c.back() != end)
      fail(ErrorCode::ChainNotSaturated, "chain must run from the bottom to " + l.label(end) + " in " +
                                             std::to_string(len) + " covers");
    for (std::size_t i = 1; i < c.size(); ++i) {
      const auto& lc = l.poset().lower_covers(c[i]);
      if (std::find(lc.begin(), lc.end(), c[i - 1]) == lc.end())
        fail(ErrorCode::ChainNotSaturated, l.label(c[i - 1]) + " is not covered by " + l.label(c[i]));
    }
  };
  check_chain(chain_x, x, r);
  check_chain(chain_y, y, s);

  GridSublattice grid;
  grid.rows = r + 1;
  grid.cols = s + 1;
  grid.element.assign(static_cast<std::size_t>(grid.rows), std::vector<int>(static_cast<std::size_t>(grid.cols)));
  std::vector<int> seen;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= s; ++j) {
      const int a = l.join(chain_x[static_cast<std::size_t>(i)], chain_y[static_cast<std::size_t>(j)]);
      grid.element[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a;
      seen.push_back(a);
    }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    fail(ErrorCode::ProductMismatch, "grid joins are not pairwise distinct");
  auto at = [&](int i, int j) { return grid.element[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= s; ++j)
      for (int i2 = 0; i2 <= r; ++i2)
        for (int j2 = 0; j2 <= s; ++j2) {
          if (l.join(at(i, j), at(i2, j2)) != at(std::max(i, i2), std::max(j, j2)) ||
              l.meet(at(i, j), at(i2, j2)) != at(std::min(i, i2), std::min(j, j2)))
            fail(ErrorCode::ProductMismatch, "grid is not closed under meet and join at (" + std::to_string(i) +
                                                 "," + std::to_string(j) + ") and (" + std::to_string(i2) + "," +
                                                 std::to_string(j2) + ")");
        }
  return grid;
}

JoinIrreducibles join_irreducibles(const FiniteLattice& l) {
  JoinIrreducibles out;
  for (int x = 0; x < static_cast<int>(l.size()); ++x)
    if (l.poset().lower_covers(x).size() == 1) out.elements.push_back(x);
  out.poset = l.poset().induced(out.elements);
  return out;
}

int IdealLattice::index_of(const Bitset& ideal) const {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal, [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return members(a) < members(b);
  });
  if (it == ideals.end() || *it != ideal) return -1;
  return static_cast<int>(it - ideals.begin());
}

IdealLattice order_ideal_lattice(const FinitePoset& p, std::size_t max_elements) {
  const std::size_t n = p.size();
  const auto& le = p.linear_extension();
  std::vector<Bitset> ideals;
  Bitset current(n);
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      ideals.push_back(current);
      if (ideals.size() > max_elements)
        fail(ErrorCode::SizeCapExceeded, "more than " + std::to_string(max_elements) + " order ideals");
      return;
    }
    const int x = le[k];
    self(self, k + 1);
    bool closed = true;
    for (int c : p.lower_covers(x)) closed = closed && current.test(static_cast<std::size_t>(c));
    if (closed) {
      current.set(static_cast<std::size_t>(x));
      self(self, k + 1);
      current.reset(static_cast<std::size_t>(x));
    }
  };
  dfs(dfs, 0);
  std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
  for (std::size_t i = 0; i < ideals.size(); ++i) keyed.emplace_back(members(ideals[i]), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });

  IdealLattice out;
  std::vector<std::string> labels;
  for (const auto& [mem, i] : keyed) {
    out.ideals.push_back(ideals[i]);
    std::string s = "{";
    for (std::size_t k = 0; k < mem.size(); ++k) s += (k ? "," : "") + p.label(mem[k]);
    labels.push_back(s + "}");
  }
  std::unordered_map<Bitset, int, BitsetHash> index;
  for (std::size_t i = 0; i < out.ideals.size(); ++i) index.emplace(out.ideals[i], static_cast<int>(i));

  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < out.ideals.size(); ++i) {
    const auto& id = out.ideals[i];
    for (std::size_t x = 0; x < n; ++x) {
      if (id.test(x)) continue;
      bool addable = true;
      for (int c : p.lower_covers(static_cast<int>(x))) addable = addable && id.test(static_cast<std::size_t>(c));
      if (!addable) continue;
      Bitset bigger = id;
      bigger.set(x);
      covers.emplace_back(static_cast<int>(i), index.at(bigger));
    }
  }
  const std::size_t m = out.ideals.size();
  std::vector<int> meet(m * m), join(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      meet[a * m + b] = meet[b * m + a] = index.at(out.ideals[a] & out.ideals[b]);
      join[a * m + b] = join[b * m + a] = index.at(out.ideals[a] | out.ideals[b]);
    }
  out.lattice = FiniteLattice::from_tables(FinitePoset(std::move(labels), std::move(covers)), std::move(meet),
                                           std::move(join));
  return out;
}

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b, std::size_t max_elements) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na * nb > max_elements)
    fail(ErrorCode::SizeCapExceeded, "product has " + std::to_string(na * nb) + " elements");
  auto id = [nb](std::size_t x, std::size_t y) { return static_cast<int>(x * nb + y); };
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      labels.push_back("(" + a.label(static_cast<int>(x)) + "," + b.label(static_cast<int>(y)) + ")");
  std::vector<std::pair<int, int>> covers;
  for (auto [lo, hi] : a.poset().covers())
    for (std::size_t y = 0; y < nb; ++y)
      covers.emplace_back(id(static_cast<std::size_t>(lo), y), id(static_cast<std::size_t>(hi), y));
  for (auto [lo, hi] : b.poset().covers())
    for (std::size_t x = 0; x < na; ++x)
      covers.emplace_back(id(x, static_cast<std::size_t>(lo)), id(x, static_cast<std::size_t>(hi)));
  const std::size_t n = na * nb;
  std::vector<int> meet(n * n), join(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const int x1 = static_cast<int>(p / nb), y1 = static_cast<int>(p % nb);
      const int x2 = static_cast<int>(q / nb), y2 = static_cast<int>(q % nb);
      meet[p * n + q] = id(static_cast<std::size_t>(a.meet(x1, x2)), static_cast<std::size_t>(b.meet(y1, y2)));
      join[p * n + q] = id(static_cast<std::size_t>(a.join(x1, x2)), static_cast<std::size_t>(b.join(y1, y2)));
    }
  return FiniteLattice::from_tables(FinitePoset(std::move(labels), std::move(covers)), std::move(meet),
                                    std::move(join));
}

FiniteLattice chain_lattice(int n) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<int> meet(nn * nn), join(nn * nn);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b)] = std::min(a, b);
      join[static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b)] = std::max(a, b);
    }
  return FiniteLattice::from_tables(FinitePoset::chain(n), std::move(meet), std::move(join));
}

}  // namespace mdl
