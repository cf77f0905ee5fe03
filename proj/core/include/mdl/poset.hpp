#pragma once

#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mdl {

using Bitset = boost::dynamic_bitset<>;

/// A finite poset given by its cover relation. Elements are 0..n-1 with
/// opaque string labels; covers are (lower, upper) pairs.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Throws CycleDetected for cyclic covers and HasseMismatch when a listed
  /// cover is implied by a longer chain.
  FinitePoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers);

  /// Order given by arbitrary (lower, upper) relations; covers are derived.
  static FinitePoset from_relations(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less);

  static FinitePoset chain(int n);
  static FinitePoset antichain(int n);
  /// Componentwise order on {1..m} x {1..n}; labels "(i,j)".
  static FinitePoset grid(int m, int n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& lower_covers(int x) const { return lower_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& upper_covers(int x) const { return upper_[static_cast<std::size_t>(x)]; }

  bool leq(int a, int b) const { return down_[static_cast<std::size_t>(b)].test(static_cast<std::size_t>(a)); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  const Bitset& down_set(int x) const { return down_[static_cast<std::size_t>(x)]; }
  const Bitset& up_set(int x) const { return up_[static_cast<std::size_t>(x)]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  /// Topological order, lowest elements first, ties by index.
  const std::vector<int>& linear_extension() const { return order_; }

  FinitePoset dual() const;
  /// Subposet on `elements` (in that order) with the inherited order.
  FinitePoset induced(const std::vector<int>& elements) const;
  /// Connected components of the cover graph, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> components() const;
  /// Disjoint union; labels are kept.
  static FinitePoset disjoint_union(const FinitePoset& a, const FinitePoset& b);

 private:
  void finish();

  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::vector<int> order_;
};

/// Isomorphism between two digraphs on n nodes (arcs as (from, to)), found by
/// colour refinement followed by backtracking. Returns node map a -> b.
std::optional<std::vector<int>> digraph_isomorphism(std::size_t n, const std::vector<std::pair<int, int>>& arcs_a,
                                                    const std::vector<std::pair<int, int>>& arcs_b);

/// Poset isomorphism via the Hasse diagrams.
std::optional<std::vector<int>> poset_isomorphism(const FinitePoset& a, const FinitePoset& b);

}  // namespace mdl
