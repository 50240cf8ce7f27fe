#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "epg/graph.hpp"
#include "epg/group.hpp"

namespace epg {

/// Backtracking searches (automorphisms, isomorphism) reject groups above
/// this order.
inline constexpr element_t kMorphismOrderCap = 256;

/// Generating set picked greedily by descending element order; smaller
/// branching factor for the image searches below.
inline std::vector<element_t> greedy_generating_set(const GroupTable& g) {
  std::vector<element_t> gens;
  if (g.size() == 1) return gens;
  std::vector<element_t> by_order(std::size_t(g.size()) - 1);
  for (element_t x = 1; x < g.size(); ++x) by_order[std::size_t(x) - 1] = x;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&g](element_t a, element_t b) { return g.order_of(a) > g.order_of(b); });
  std::vector<char> reached(std::size_t(g.size()), 0);
  reached[identity] = 1;
  std::size_t reached_count = 1;
  for (element_t cand : by_order) {
    if (reached[std::size_t(cand)]) continue;
    gens.push_back(cand);
    for (element_t m : closure(g, std::span<const element_t>(gens.data(), gens.size())))
      if (!reached[std::size_t(m)]) {
        reached[std::size_t(m)] = 1;
        ++reached_count;
      }
    if (reached_count == std::size_t(g.size())) break;
  }
  return gens;
}

namespace detail {

/// Extends generator images to a map on <gens[0..count)>. Fails on any
/// multiplicative inconsistency or image collision. On success `map` holds
/// the image of every element of the partial closure and -1 elsewhere.
inline bool extend_partial_map(const GroupTable& a, const GroupTable& b,
                               const std::vector<element_t>& gens,
                               const std::vector<element_t>& images, std::size_t count,
                               std::vector<element_t>& map) {
  map.assign(std::size_t(a.size()), -1);
  std::vector<char> used(std::size_t(b.size()), 0);
  map[identity] = identity;
  used[identity] = 1;
  std::vector<element_t> worklist{identity};
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    const element_t u = worklist[head];
    for (std::size_t i = 0; i < count; ++i) {
      const element_t w = a.mul(u, gens[i]);
      const element_t img = b.mul(map[std::size_t(u)], images[i]);
      if (map[std::size_t(w)] == -1) {
        if (used[std::size_t(img)]) return false;
        map[std::size_t(w)] = img;
        used[std::size_t(img)] = 1;
        worklist.push_back(w);
      } else if (map[std::size_t(w)] != img) {
        return false;
      }
    }
  }
  return true;
}

/// Enumerates isomorphisms A -> B by assigning order-matching images to a
/// generating set of A and extending. Stops after the first hit unless
/// collect_all is set.
inline void search_isomorphisms(const GroupTable& a, const GroupTable& b, bool collect_all,
                                std::vector<std::vector<element_t>>& out) {
  if (a.size() != b.size()) return;
  if (a.size() == 1) {
    out.push_back({identity});
    return;
  }
  const std::vector<element_t> gens = greedy_generating_set(a);
  std::vector<std::vector<element_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const element_t o = a.order_of(gens[i]);
    for (element_t y = 1; y < b.size(); ++y)
      if (b.order_of(y) == o) candidates[i].push_back(y);
  }
  std::vector<element_t> images(gens.size(), -1);
  std::vector<element_t> map;
  auto search = [&](auto&& self, std::size_t level) -> bool {
    if (level == gens.size()) {
      out.push_back(map);
      return !collect_all;
    }
    for (element_t cand : candidates[level]) {
      images[level] = cand;
      if (!extend_partial_map(a, b, gens, images, level + 1, map)) continue;
      if (self(self, level + 1)) return true;
    }
    return false;
  };
  search(search, 0);
}

}  // namespace detail

/// All automorphisms of G as image vectors, sorted lexicographically.
inline std::vector<std::vector<element_t>> automorphisms(const GroupTable& g) {
  if (g.size() > kMorphismOrderCap)
    throw std::invalid_argument("automorphism enumeration is capped at order " +
                                std::to_string(kMorphismOrderCap));
  std::vector<std::vector<element_t>> out;
  detail::search_isomorphisms(g, g, /*collect_all=*/true, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Cheap invariants compared before any explicit isomorphism search.
struct GroupFingerprint {
  std::int64_t order = 0;
  std::int64_t exponent = 0;
  std::int64_t center_order = 0;
  std::int64_t derived_order = 0;
  std::vector<element_t> element_orders;        // sorted
  std::vector<element_t> abelianization_orders; // sorted element orders of G/G'
  std::vector<element_t> epg_degrees;           // sorted

  bool operator==(const GroupFingerprint&) const = default;
};

inline GroupFingerprint fingerprint(const GroupTable& g) {
  GroupFingerprint f;
  f.order = g.size();
  f.exponent = g.exponent();
  f.element_orders.reserve(std::size_t(g.size()));
  for (element_t x = 0; x < g.size(); ++x) f.element_orders.push_back(g.order_of(x));
  std::sort(f.element_orders.begin(), f.element_orders.end());
  f.center_order = std::int64_t(center(g).size());
  const std::vector<element_t> derived = derived_subgroup(g);
  f.derived_order = std::int64_t(derived.size());
  const GroupTable ab = quotient(g, std::span<const element_t>(derived.data(), derived.size()));
  for (element_t x = 0; x < ab.size(); ++x) f.abelianization_orders.push_back(ab.order_of(x));
  std::sort(f.abelianization_orders.begin(), f.abelianization_orders.end());
  if (g.size() >= 2) f.epg_degrees = EpgGraph(g).degree_multiset();
  return f;
}

/// Isomorphism test: fingerprint comparison first, generator-image
/// backtracking on a tie.
inline bool isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.size() > kMorphismOrderCap || b.size() > kMorphismOrderCap)
    throw std::invalid_argument("isomorphism testing is capped at order " +
                                std::to_string(kMorphismOrderCap));
  if (a.size() != b.size()) return false;
  if (a.size() == 1) return true;
  if (!(fingerprint(a) == fingerprint(b))) return false;
  std::vector<std::vector<element_t>> found;
  detail::search_isomorphisms(a, b, /*collect_all=*/false, found);
  return !found.empty();
}

}  // namespace epg
