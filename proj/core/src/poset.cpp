#include "mdl/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "mdl/error.hpp"

namespace mdl {

namespace {

// Kahn's algorithm over (lower, upper) pairs; smallest index first among ready elements.
std::optional<std::vector<int>> topo_order(std::size_t n, const std::vector<std::pair<int, int>>& rel) {
  std::vector<std::vector<int>> up(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : rel) {
    up[static_cast<std::size_t>(a)].push_back(b);
    ++indeg[static_cast<std::size_t>(b)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(static_cast<int>(x));
  std::vector<int> order;
  while (!ready.empty()) {
    const int x = ready.top();
    ready.pop();
    order.push_back(x);
    for (int y : up[static_cast<std::size_t>(x)])
      if (--indeg[static_cast<std::size_t>(y)] == 0) ready.push(y);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

void check_range(std::size_t n, const std::vector<std::pair<int, int>>& rel) {
  for (auto [a, b] : rel) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      fail(ErrorCode::InvalidInput, "relation refers to an unknown element");
    if (a == b) fail(ErrorCode::CycleDetected, "element " + std::to_string(a) + " related to itself");
  }
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers)
    : labels_(std::move(labels)), covers_(std::move(covers)) {
  check_range(labels_.size(), covers_);
  finish();
  std::set<std::pair<int, int>> uniq(covers_.begin(), covers_.end());
  if (uniq.size() != covers_.size()) fail(ErrorCode::HasseMismatch, "repeated cover pair");
  for (auto [a, b] : covers_) {
    for (int c : lower_[static_cast<std::size_t>(b)]) {
      if (c != a && leq(a, c))
        fail(ErrorCode::HasseMismatch, "cover " + labels_[static_cast<std::size_t>(a)] + " < " +
                                           labels_[static_cast<std::size_t>(b)] + " is implied through " +
                                           labels_[static_cast<std::size_t>(c)]);
    }
  }
}

void FinitePoset::finish() {
  const std::size_t n = labels_.size();
  auto order = topo_order(n, covers_);
  if (!order) fail(ErrorCode::CycleDetected, "cover relation has a directed cycle");
  order_ = std::move(*order);
  std::sort(covers_.begin(), covers_.end());
  lower_.assign(n, {});
  upper_.assign(n, {});
  for (auto [a, b] : covers_) {
    upper_[static_cast<std::size_t>(a)].push_back(b);
    lower_[static_cast<std::size_t>(b)].push_back(a);
  }
  down_.assign(n, Bitset(n));
  up_.assign(n, Bitset(n));
  for (int x : order_) {
    auto& d = down_[static_cast<std::size_t>(x)];
    d.set(static_cast<std::size_t>(x));
    for (int c : lower_[static_cast<std::size_t>(x)]) d |= down_[static_cast<std::size_t>(c)];
  }
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = down_[x].find_first(); y != Bitset::npos; y = down_[x].find_next(y)) up_[y].set(x);
}

FinitePoset FinitePoset::from_relations(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less) {
  const std::size_t n = labels.size();
  check_range(n, less);
  auto order = topo_order(n, less);
  if (!order) fail(ErrorCode::CycleDetected, "relation has a directed cycle");
  std::vector<std::vector<int>> lower(n);
  for (auto [a, b] : less) lower[static_cast<std::size_t>(b)].push_back(a);
  std::vector<Bitset> strict(n, Bitset(n));
  for (int x : *order)
    for (int c : lower[static_cast<std::size_t>(x)]) {
      strict[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(c));
      strict[static_cast<std::size_t>(x)] |= strict[static_cast<std::size_t>(c)];
    }
  std::vector<std::pair<int, int>> covers;
  for (std::size_t b = 0; b < n; ++b) {
    Bitset implied(n);
    for (auto c = strict[b].find_first(); c != Bitset::npos; c = strict[b].find_next(c)) implied |= strict[c];
    const Bitset direct = strict[b] - implied;
    for (auto a = direct.find_first(); a != Bitset::npos; a = direct.find_next(a))
      covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  FinitePoset p;
  p.labels_ = std::move(labels);
  p.covers_ = std::move(covers);
  p.finish();
  return p;
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return FinitePoset(std::move(labels), std::move(covers));
}

FinitePoset FinitePoset::antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return FinitePoset(std::move(labels), {});
}

FinitePoset FinitePoset::grid(int m, int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      const int id = i * n + j;
      if (i > 0) covers.emplace_back(id - n, id);
      if (j > 0) covers.emplace_back(id - 1, id);
    }
  return FinitePoset(std::move(labels), std::move(covers));
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (lower_[x].empty()) out.push_back(static_cast<int>(x));
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (upper_[x].empty()) out.push_back(static_cast<int>(x));
  return out;
}

FinitePoset FinitePoset::dual() const {
  std::vector<std::pair<int, int>> flipped;
  for (auto [a, b] : covers_) flipped.emplace_back(b, a);
  return FinitePoset(labels_, std::move(flipped));
}

FinitePoset FinitePoset::induced(const std::vector<int>& elements) const {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> less;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    labels.push_back(label(elements[i]));
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (i != j && leq(elements[i], elements[j])) less.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return from_relations(std::move(labels), less);
}

std::vector<std::vector<int>> FinitePoset::components() const {
  const std::size_t n = size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (const auto* nb : {&lower_[static_cast<std::size_t>(x)], &upper_[static_cast<std::size_t>(x)]})
        for (int y : *nb)
          if (comp[static_cast<std::size_t>(y)] == -1) {
            comp[static_cast<std::size_t>(y)] = id;
            stack.push_back(y);
          }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

FinitePoset FinitePoset::disjoint_union(const FinitePoset& a, const FinitePoset& b) {
  auto labels = a.labels_;
  labels.insert(labels.end(), b.labels_.begin(), b.labels_.end());
  auto covers = a.covers_;
  const int off = static_cast<int>(a.size());
  for (auto [x, y] : b.covers_) covers.emplace_back(x + off, y + off);
  return FinitePoset(std::move(labels), std::move(covers));
}

namespace {

class DigraphMatcher {
 public:
  DigraphMatcher(std::size_t n, const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b)
      : n_(n), ma_(n * n, 0), mb_(n * n, 0), adj_a_(n), adj_b_(n) {
    for (auto [x, y] : a) {
      ++ma_[idx(x, y)];
      adj_a_[static_cast<std::size_t>(x)].push_back(y);
      adj_a_[static_cast<std::size_t>(y)].push_back(x);
    }
    for (auto [x, y] : b) {
      ++mb_[idx(x, y)];
      adj_b_[static_cast<std::size_t>(x)].push_back(y);
      adj_b_[static_cast<std::size_t>(y)].push_back(x);
    }
    refine(a, b);
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> hist_a(classes_, 0), hist_b(classes_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      ++hist_a[static_cast<std::size_t>(color_a_[x])];
      ++hist_b[static_cast<std::size_t>(color_b_[x])];
    }
    if (hist_a != hist_b) return std::nullopt;
    // visit rare colours first, then grow along adjacency
    std::vector<int> seq;
    std::vector<bool> queued(n_, false);
    std::vector<int> by_rarity(n_);
    std::iota(by_rarity.begin(), by_rarity.end(), 0);
    std::stable_sort(by_rarity.begin(), by_rarity.end(), [&](int x, int y) {
      return hist_a[static_cast<std::size_t>(color_a_[static_cast<std::size_t>(x)])] <
             hist_a[static_cast<std::size_t>(color_a_[static_cast<std::size_t>(y)])];
    });
    for (int s : by_rarity) {
      if (queued[static_cast<std::size_t>(s)]) continue;
      std::queue<int> q;
      q.push(s);
      queued[static_cast<std::size_t>(s)] = true;
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        seq.push_back(x);
        for (int y : adj_a_[static_cast<std::size_t>(x)])
          if (!queued[static_cast<std::size_t>(y)]) {
            queued[static_cast<std::size_t>(y)] = true;
            q.push(y);
          }
      }
    }
    map_.assign(n_, -1);
    used_.assign(n_, false);
    if (!extend(seq, 0)) return std::nullopt;
    return map_;
  }

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y); }

  void refine(const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b) {
    auto signature = [&](const std::vector<std::pair<int, int>>& arcs, const std::vector<int>& color) {
      std::vector<std::vector<int>> out_c(n_), in_c(n_);
      for (auto [x, y] : arcs) {
        out_c[static_cast<std::size_t>(x)].push_back(color[static_cast<std::size_t>(y)]);
        in_c[static_cast<std::size_t>(y)].push_back(color[static_cast<std::size_t>(x)]);
      }
      std::vector<std::vector<int>> sig(n_);
      for (std::size_t x = 0; x < n_; ++x) {
        std::sort(out_c[x].begin(), out_c[x].end());
        std::sort(in_c[x].begin(), in_c[x].end());
        sig[x].push_back(color[x]);
        sig[x].push_back(static_cast<int>(out_c[x].size()));
        sig[x].insert(sig[x].end(), out_c[x].begin(), out_c[x].end());
        sig[x].push_back(-1);
        sig[x].insert(sig[x].end(), in_c[x].begin(), in_c[x].end());
      }
      return sig;
    };
    color_a_.assign(n_, 0);
    color_b_.assign(n_, 0);
    classes_ = 1;
    while (true) {
      auto sa = signature(a, color_a_);
      auto sb = signature(b, color_b_);
      std::map<std::vector<int>, int> ids;
      for (const auto& s : sa) ids.emplace(s, 0);
      for (const auto& s : sb) ids.emplace(s, 0);
      int next = 0;
      for (auto& [s, id] : ids) id = next++;
      for (std::size_t x = 0; x < n_; ++x) {
        color_a_[x] = ids[sa[x]];
        color_b_[x] = ids[sb[x]];
      }
      if (next == classes_) break;
      classes_ = next;
    }
  }

  bool extend(const std::vector<int>& seq, std::size_t k) {
    if (k == seq.size()) return true;
    const int x = seq[k];
    for (std::size_t y = 0; y < n_; ++y) {
      if (used_[y] || color_b_[y] != color_a_[static_cast<std::size_t>(x)]) continue;
      if (ma_[idx(x, x)] != mb_[idx(static_cast<int>(y), static_cast<int>(y))]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const int px = seq[j];
        const int py = map_[static_cast<std::size_t>(px)];
        ok = ma_[idx(x, px)] == mb_[idx(static_cast<int>(y), py)] && ma_[idx(px, x)] == mb_[idx(py, static_cast<int>(y))];
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(x)] = static_cast<int>(y);
      used_[y] = true;
      if (extend(seq, k + 1)) return true;
      used_[y] = false;
      map_[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  }

  std::size_t n_;
  std::vector<int> ma_, mb_;
  std::vector<std::vector<int>> adj_a_, adj_b_;
  std::vector<int> color_a_, color_b_;
  int classes_ = 0;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> digraph_isomorphism(std::size_t n, const std::vector<std::pair<int, int>>& arcs_a,
                                                    const std::vector<std::pair<int, int>>& arcs_b) {
  if (arcs_a.size() != arcs_b.size()) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  return DigraphMatcher(n, arcs_a, arcs_b).run();
}

std::optional<std::vector<int>> poset_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return std::nullopt;
  return digraph_isomorphism(a.size(), a.covers(), b.covers());
}

}  // namespace mdl
