#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "epg/group.hpp"
#include "epg/union_find.hpp"

namespace epg {

namespace detail {

/// Workspace for repeated <x,y>-cyclicity tests over one group. The
/// closure scan follows the definition: commuting pair, saturate, then
/// compare the largest element order against the subgroup size. A subset
/// fast path (x in <y> or y in <x> forces <x,y> cyclic) short-circuits the
/// scan; it never changes the answer, only the cost.
class CyclicPairTester {
 public:
  explicit CyclicPairTester(const GroupTable& g)
      : g_(g),
        in_set_(std::size_t(g.size()), 0),
        cyc_(std::size_t(g.size())),
        cyc_ready_(std::size_t(g.size()), 0) {
    members_.reserve(std::size_t(g.size()));
  }

  bool pair_generates_cyclic(element_t x, element_t y) {
    if (g_.mul(x, y) != g_.mul(y, x)) return false;
    if (cyclic_subgroup_of(y)[std::size_t(x)] || cyclic_subgroup_of(x)[std::size_t(y)]) return true;
    return closure_is_cyclic(x, y);
  }

  /// Verbatim "commute, then max order equals closure size" test, with no
  /// fast path in front.
  bool closure_test(element_t x, element_t y) {
    if (g_.mul(x, y) != g_.mul(y, x)) return false;
    return closure_is_cyclic(x, y);
  }

 private:
  bool closure_is_cyclic(element_t x, element_t y) {
    members_.clear();
    max_order_ = 0;
    add(x);
    add(y);
    for (std::size_t head = 0; head < members_.size(); ++head) {
      const element_t u = members_[head];
      add(g_.mul(u, x));
      add(g_.mul(u, y));
    }
    const bool cyclic = std::size_t(max_order_) == members_.size();
    for (element_t m : members_) in_set_[std::size_t(m)] = 0;
    return cyclic;
  }

  void add(element_t e) {
    if (in_set_[std::size_t(e)]) return;
    in_set_[std::size_t(e)] = 1;
    members_.push_back(e);
    max_order_ = std::max(max_order_, g_.order_of(e));
  }

  const std::vector<char>& cyclic_subgroup_of(element_t x) {
    auto& flags = cyc_[std::size_t(x)];
    if (!cyc_ready_[std::size_t(x)]) {
      flags.assign(std::size_t(g_.size()), 0);
      element_t cur = identity;
      do {
        flags[std::size_t(cur)] = 1;
        cur = g_.mul(cur, x);
      } while (cur != identity);
      cyc_ready_[std::size_t(x)] = 1;
    }
    return flags;
  }

  const GroupTable& g_;
  std::vector<char> in_set_;
  std::vector<element_t> members_;
  std::vector<std::vector<char>> cyc_;
  std::vector<char> cyc_ready_;
  element_t max_order_ = 0;
};

inline void check_vertex(const GroupTable& g, element_t x) {
  g.check_element(x);
  if (x == identity)
    throw std::invalid_argument("the identity is not a vertex of the enhanced power graph");
}

}  // namespace detail

/// Adjacency in the enhanced power graph: x ~ y iff <x,y> is cyclic,
/// decided as "commute, then the closure contains an element of full
/// order". Both arguments must be distinct nontrivial elements.
inline bool adjacent(const GroupTable& g, element_t x, element_t y) {
  detail::check_vertex(g, x);
  detail::check_vertex(g, y);
  if (x == y) throw std::invalid_argument("adjacency is defined on distinct elements");
  detail::CyclicPairTester tester(g);
  return tester.closure_test(x, y);
}

/// |I_C(x)|: the number of y ranging over all of G (identity and x
/// included) such that <x,y> is cyclic. Always >= o(x).
inline element_t neighborhood_size(const GroupTable& g, element_t x) {
  detail::check_vertex(g, x);
  detail::CyclicPairTester tester(g);
  element_t count = 2;  // the identity and x itself
  for (element_t y = 1; y < g.size(); ++y)
    if (y != x && tester.closure_test(x, y)) ++count;
  return count;
}

/// The enhanced power graph of a group: vertices are the nontrivial
/// elements, with all pairwise adjacencies, degrees and connected
/// components materialized. Holds a pointer to the group table, which must
/// outlive the graph.
class EpgGraph {
 public:
  explicit EpgGraph(const GroupTable& g) : group_(&g), n_(g.size()) {
    if (n_ < 2) throw std::invalid_argument("the enhanced power graph needs a nontrivial group");
    adj_.assign(std::size_t(n_) * std::size_t(n_), false);
    degree_.assign(std::size_t(n_), 0);
    detail::CyclicPairTester tester(g);
    UnionFind uf(n_);
    for (element_t x = 1; x < n_; ++x)
      for (element_t y = x + 1; y < n_; ++y)
        if (tester.pair_generates_cyclic(x, y)) {
          adj_[std::size_t(x) * n_ + y] = true;
          adj_[std::size_t(y) * n_ + x] = true;
          ++degree_[std::size_t(x)];
          ++degree_[std::size_t(y)];
          uf.unite(x, y);
        }
    comp_label_.assign(std::size_t(n_), -1);
    std::vector<element_t> min_of_root(std::size_t(n_), -1);
    for (element_t v = 1; v < n_; ++v) {
      const element_t r = uf.find(v);
      if (min_of_root[std::size_t(r)] < 0) min_of_root[std::size_t(r)] = v;
    }
    for (element_t v = 1; v < n_; ++v) comp_label_[std::size_t(v)] = min_of_root[std::size_t(uf.find(v))];
    for (element_t v = 1; v < n_; ++v)
      if (comp_label_[std::size_t(v)] == v) components_.emplace_back();
    std::vector<element_t> slot_of_label(std::size_t(n_), -1);
    element_t next = 0;
    for (element_t v = 1; v < n_; ++v)
      if (comp_label_[std::size_t(v)] == v) slot_of_label[std::size_t(v)] = next++;
    for (element_t v = 1; v < n_; ++v)
      components_[std::size_t(slot_of_label[std::size_t(comp_label_[std::size_t(v)])])].push_back(v);
  }

  const GroupTable& group() const { return *group_; }
  element_t vertex_count() const { return n_ - 1; }

  bool adjacent(element_t x, element_t y) const {
    detail::check_vertex(*group_, x);
    detail::check_vertex(*group_, y);
    if (x == y) throw std::invalid_argument("adjacency is defined on distinct elements");
    return adj_[std::size_t(x) * n_ + y];
  }

  element_t degree(element_t x) const {
    detail::check_vertex(*group_, x);
    return degree_[std::size_t(x)];
  }

  element_t neighborhood_size(element_t x) const { return degree(x) + 2; }

  /// n_G: the maximum closed-neighborhood size over nontrivial elements.
  element_t max_neighborhood_size() const {
    element_t best = 0;
    for (element_t v = 1; v < n_; ++v) best = std::max(best, degree_[std::size_t(v)] + 2);
    return best;
  }

  /// Vertices adjacent to every other vertex; nonempty iff n_G = |G|.
  std::vector<element_t> universal_vertices() const {
    std::vector<element_t> out;
    for (element_t v = 1; v < n_; ++v)
      if (degree_[std::size_t(v)] == n_ - 2) out.push_back(v);
    return out;
  }

  /// Connected components, each sorted ascending, ordered by their minimal
  /// vertex.
  const std::vector<std::vector<element_t>>& components() const { return components_; }

  /// Component label of a vertex: the minimal vertex index in its component.
  element_t component_label(element_t x) const {
    detail::check_vertex(*group_, x);
    return comp_label_[std::size_t(x)];
  }

  std::vector<element_t> degree_multiset() const {
    std::vector<element_t> d(degree_.begin() + 1, degree_.end());
    std::sort(d.begin(), d.end());
    return d;
  }

 private:
  const GroupTable* group_;
  element_t n_;
  std::vector<bool> adj_;
  std::vector<element_t> degree_;
  std::vector<element_t> comp_label_;
  std::vector<std::vector<element_t>> components_;
};

inline EpgGraph build_epg(const GroupTable& g) { return EpgGraph(g); }

/// n_G without materializing the whole graph.
inline element_t n_G(const GroupTable& g) {
  if (g.size() < 2) throw std::invalid_argument("n_G is defined for nontrivial groups");
  detail::CyclicPairTester tester(g);
  element_t best = 0;
  for (element_t x = 1; x < g.size(); ++x) {
    element_t count = 2;
    for (element_t y = 1; y < g.size(); ++y)
      if (y != x && tester.pair_generates_cyclic(x, y)) ++count;
    best = std::max(best, count);
  }
  return best;
}

/// Nontrivial elements adjacent to every other nontrivial element.
inline std::vector<element_t> universal_vertices(const GroupTable& g) {
  std::vector<element_t> out;
  if (g.size() < 2) return out;
  detail::CyclicPairTester tester(g);
  for (element_t x = 1; x < g.size(); ++x) {
    bool universal = true;
    for (element_t y = 1; y < g.size() && universal; ++y)
      if (y != x && !tester.pair_generates_cyclic(x, y)) universal = false;
    if (universal) out.push_back(x);
  }
  return out;
}

}  // namespace epg
