#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "epg/group.hpp"
#include "epg/presentation.hpp"

namespace epg {

inline constexpr std::int32_t kDefaultMaxCosets = 1000000;

/// Completed coset table over the trivial subgroup: the regular action of
/// the presented group. Row c, column 2i is the action of generator i,
/// column 2i+1 of its inverse. Coset 0 is the trivial coset; numbering is
/// first-defined-first-numbered.
struct CosetTable {
  std::int32_t coset_count = 0;
  std::int32_t generator_count = 0;
  std::vector<std::int32_t> action;

  std::int32_t act(std::int32_t coset, std::int32_t column) const {
    return action[std::size_t(coset) * std::size_t(2 * generator_count) + std::size_t(column)];
  }
};

namespace detail {

/// HLT-style Todd-Coxeter: scan every relator at every live coset, filling
/// gaps with new cosets, deducing on gaps of one, and merging coincidences
/// immediately through a union-find with a replay queue. Entries may point
/// at dead cosets; every read resolves through find().
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::int32_t max_cosets)
      : cols_(std::int32_t(2 * p.generators.size())), max_cosets_(max_cosets) {
    if (p.generators.empty()) throw std::invalid_argument("presentation has an empty generator list");
    const std::int32_t ngens = std::int32_t(p.generators.size());
    for (const auto& relator : p.relators) {
      std::vector<std::int32_t> cols;
      cols.reserve(relator.size());
      for (std::int32_t letter : relator) {
        if (letter == 0 || letter > ngens || letter < -ngens)
          throw std::invalid_argument("relator letter out of range for the generator list");
        cols.push_back(letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1);
      }
      relators_.push_back(std::move(cols));
    }
  }

  CosetTable run() {
    new_coset();
    for (std::int32_t c = 0; c < count(); ++c) {
      if (find(c) != c) continue;
      for (const auto& rel : relators_) {
        scan_and_fill(c, rel);
        if (find(c) != c) break;  // c merged into an earlier coset
      }
      if (find(c) != c) continue;
      for (std::int32_t col = 0; col < cols_; ++col)
        if (entry(c, col) == kUndef) set_pair(c, col, new_coset());
    }
    return compress();
  }

 private:
  static constexpr std::int32_t kUndef = -1;

  std::int32_t count() const { return std::int32_t(parent_.size()); }

  std::int32_t new_coset() {
    if (count() >= max_cosets_)
      throw std::runtime_error("coset enumeration exceeded the limit of " +
                               std::to_string(max_cosets_) +
                               " cosets; the group may be infinite or too large");
    parent_.push_back(count());
    table_.resize(table_.size() + std::size_t(cols_), kUndef);
    return count() - 1;
  }

  std::int32_t& entry(std::int32_t c, std::int32_t col) {
    return table_[std::size_t(c) * std::size_t(cols_) + std::size_t(col)];
  }

  std::int32_t find(std::int32_t c) {
    while (parent_[std::size_t(c)] != c) {
      parent_[std::size_t(c)] = parent_[std::size_t(parent_[std::size_t(c)])];
      c = parent_[std::size_t(c)];
    }
    return c;
  }

  std::int32_t target(std::int32_t c, std::int32_t col) {
    const std::int32_t raw = entry(c, col);
    return raw == kUndef ? kUndef : find(raw);
  }

  /// Records c.col = d together with the mirror d.col^-1 = c, queueing a
  /// coincidence when a slot already holds something else.
  void set_pair(std::int32_t c, std::int32_t col, std::int32_t d) {
    const std::int32_t existing = target(c, col);
    if (existing == kUndef)
      entry(c, col) = d;
    else if (existing != find(d))
      return coincide(existing, d);
    const std::int32_t mirror = target(d, col ^ 1);
    if (mirror == kUndef)
      entry(d, col ^ 1) = c;
    else if (mirror != find(c))
      coincide(mirror, c);
  }

  void scan_and_fill(std::int32_t start, const std::vector<std::int32_t>& word) {
    if (word.empty()) return;
    for (;;) {
      std::int32_t c = find(start);
      std::int32_t f = c;
      std::size_t i = 0;
      while (i < word.size()) {
        const std::int32_t next = target(f, word[i]);
        if (next == kUndef) break;
        f = next;
        ++i;
      }
      if (i == word.size()) {
        if (f != c) coincide(f, c);
        return;
      }
      std::int32_t b = c;
      std::size_t j = word.size();
      while (j > i) {
        const std::int32_t prev = target(b, word[j - 1] ^ 1);
        if (prev == kUndef) break;
        b = prev;
        --j;
      }
      if (j == i) {
        // forward and backward scans both reached position i
        coincide(f, b);
        return;
      }
      if (j == i + 1) {
        set_pair(f, word[i], b);
        return;
      }
      set_pair(f, word[i], new_coset());
      // rescan: the trace must close completely before moving on
    }
  }

  void coincide(std::int32_t a, std::int32_t b) {
    std::vector<std::pair<std::int32_t, std::int32_t>> stack{{a, b}};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);  // keep the first-defined coset alive
      parent_[std::size_t(y)] = x;
      for (std::int32_t col = 0; col < cols_; ++col) {
        const std::int32_t e = entry(y, col);
        if (e == kUndef) continue;
        std::int32_t& slot = entry(x, col);
        if (slot == kUndef)
          slot = e;
        else if (find(slot) != find(e))
          stack.emplace_back(slot, e);
      }
    }
  }

  CosetTable compress() {
    std::vector<std::int32_t> renumber(parent_.size(), kUndef);
    std::int32_t live = 0;
    for (std::int32_t c = 0; c < count(); ++c)
      if (find(c) == c) renumber[std::size_t(c)] = live++;
    CosetTable out;
    out.coset_count = live;
    out.generator_count = cols_ / 2;
    out.action.assign(std::size_t(live) * std::size_t(cols_), kUndef);
    for (std::int32_t c = 0; c < count(); ++c) {
      if (find(c) != c) continue;
      for (std::int32_t col = 0; col < cols_; ++col) {
        const std::int32_t t = target(c, col);
        if (t == kUndef)
          throw std::logic_error("coset table incomplete after enumeration");
        out.action[std::size_t(renumber[std::size_t(c)]) * std::size_t(cols_) + std::size_t(col)] =
            renumber[std::size_t(t)];
      }
    }
    return out;
  }

  std::int32_t cols_;
  std::int32_t max_cosets_;
  std::vector<std::vector<std::int32_t>> relators_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> table_;
};

}  // namespace detail

/// Runs coset enumeration over the trivial subgroup. Succeeds iff the
/// presented group is finite and needs at most max_cosets cosets.
inline CosetTable enumerate_cosets(const Presentation& p, std::int32_t max_cosets = kDefaultMaxCosets) {
  return detail::CosetEnumerator(p, max_cosets).run();
}

struct RealizedGroup {
  GroupTable table;
  std::vector<element_t> generator_images;  // element realizing each generator
};

/// Converts the completed coset table (the regular action) into a full
/// multiplication table: element c times element d is read off by pushing
/// c along the definition word of d in a spanning tree of the action.
inline RealizedGroup realize_with_generators(const Presentation& p,
                                             std::int32_t max_cosets = kDefaultMaxCosets) {
  const CosetTable cosets = enumerate_cosets(p, max_cosets);
  const std::int32_t n = cosets.coset_count;
  const std::int32_t cols = 2 * cosets.generator_count;

  std::vector<std::int32_t> tree_parent(std::size_t(n), -1);
  std::vector<std::int32_t> tree_col(std::size_t(n), -1);
  std::vector<std::int32_t> bfs_order;
  bfs_order.reserve(std::size_t(n));
  std::vector<char> seen(std::size_t(n), 0);
  seen[0] = 1;
  bfs_order.push_back(0);
  for (std::size_t head = 0; head < bfs_order.size(); ++head)
    for (std::int32_t col = 0; col < cols; ++col) {
      const std::int32_t next = cosets.act(bfs_order[head], col);
      if (!seen[std::size_t(next)]) {
        seen[std::size_t(next)] = 1;
        tree_parent[std::size_t(next)] = bfs_order[head];
        tree_col[std::size_t(next)] = col;
        bfs_order.push_back(next);
      }
    }

  std::vector<element_t> mul(std::size_t(n) * std::size_t(n));
  for (std::int32_t c = 0; c < n; ++c) mul[std::size_t(c) * std::size_t(n)] = c;  // d = identity
  for (std::int32_t d : bfs_order) {
    if (d == 0) continue;
    const std::int32_t par = tree_parent[std::size_t(d)];
    const std::int32_t col = tree_col[std::size_t(d)];
    for (std::int32_t c = 0; c < n; ++c)
      mul[std::size_t(c) * std::size_t(n) + std::size_t(d)] =
          cosets.act(mul[std::size_t(c) * std::size_t(n) + std::size_t(par)], col);
  }

  std::vector<element_t> images(p.generators.size());
  for (std::size_t i = 0; i < p.generators.size(); ++i) images[i] = cosets.act(0, std::int32_t(2 * i));

  return RealizedGroup{GroupTable(render(p), element_t(n), std::move(mul)), std::move(images)};
}

/// Realizes a finite presentation as an explicit group table with the
/// identity at index 0.
inline GroupTable realize(const Presentation& p, std::int32_t max_cosets = kDefaultMaxCosets) {
  return realize_with_generators(p, max_cosets).table;
}

}  // namespace epg
