#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epg {

/// Element of a finite group, identified by its row/column index in the
/// multiplication table. Index 0 is always the identity.
using element_t = std::int32_t;

inline constexpr element_t identity = 0;

/// Hard cap on table sizes (direct products above this are rejected).
inline constexpr std::int64_t kMaxProductOrder = 65536;

/// Tables up to this order get an exhaustive associativity check; larger
/// ones are spot-checked with sampled triples.
inline constexpr element_t kExhaustiveAssocLimit = 512;
inline constexpr int kSampledAssocTriples = 100000;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t& assoc_seed_storage() {
  static std::uint64_t seed = 20240917ULL;
  return seed;
}

}  // namespace detail

/// Seed for the sampled associativity check applied to tables larger than
/// kExhaustiveAssocLimit. Only affects which triples get sampled.
inline void set_assoc_check_seed(std::uint64_t seed) { detail::assoc_seed_storage() = seed; }
inline std::uint64_t assoc_check_seed() { return detail::assoc_seed_storage(); }

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_power_of(std::int64_t n, std::int64_t p) {
  if (n < 1 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

/// If n = p^e for a prime p and e >= 1, returns {p, e}.
inline std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  int e = 0;
  std::int64_t m = n;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return std::pair<std::int64_t, int>{p, e};
}

inline std::int64_t modpow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

/// A finite group given by its full multiplication table. Immutable after
/// construction; the constructor verifies the group laws (identity,
/// two-sided inverses, associativity) and precomputes element orders,
/// inverses and the exponent.
class GroupTable {
 public:
  GroupTable(std::string label, element_t order, std::vector<element_t> mul)
      : label_(std::move(label)), n_(order), mul_(std::move(mul)) {
    check_shape();
    check_identity();
    compute_inverses();
    check_associativity();
    compute_orders();
  }

  element_t size() const { return n_; }
  const std::string& label() const { return label_; }

  element_t mul(element_t a, element_t b) const {
    return mul_[std::size_t(a) * std::size_t(n_) + std::size_t(b)];
  }
  element_t inv(element_t g) const { return inv_[std::size_t(g)]; }
  element_t order_of(element_t g) const {
    check_element(g);
    return elt_order_[std::size_t(g)];
  }
  element_t exponent() const { return exponent_; }
  bool abelian() const { return abelian_; }

  /// g^k for any integer k (negative exponents use the inverse).
  element_t power(element_t g, std::int64_t k) const {
    check_element(g);
    const element_t o = elt_order_[std::size_t(g)];
    std::int64_t e = k % o;
    if (e < 0) e += o;
    element_t acc = identity;
    element_t base = g;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  element_t conjugate(element_t x, element_t by) const {
    return mul(mul(inv(by), x), by);
  }

  /// Copy carrying a different display label; the table itself never changes.
  GroupTable with_label(std::string new_label) const {
    GroupTable copy(*this);
    copy.label_ = std::move(new_label);
    return copy;
  }

  void check_element(element_t g) const {
    if (g < 0 || g >= n_)
      throw std::invalid_argument("element index " + std::to_string(g) +
                                  " out of range for group of order " + std::to_string(n_));
  }

 private:
  void check_shape() const {
    if (n_ < 1) throw std::invalid_argument("group order must be positive");
    if (std::int64_t(n_) > kMaxProductOrder)
      throw std::invalid_argument("group order " + std::to_string(n_) +
                                  " exceeds the supported maximum " + std::to_string(kMaxProductOrder));
    if (mul_.size() != std::size_t(n_) * std::size_t(n_))
      throw std::invalid_argument("multiplication table has wrong size for order " + std::to_string(n_));
    for (element_t v : mul_)
      if (v < 0 || v >= n_) throw std::invalid_argument("multiplication table entry out of range");
  }

  void check_identity() const {
    for (element_t g = 0; g < n_; ++g)
      if (mul(identity, g) != g || mul(g, identity) != g)
        throw std::invalid_argument("identity law fails at element " + std::to_string(g));
  }

  void compute_inverses() {
    inv_.assign(std::size_t(n_), -1);
    abelian_ = true;
    for (element_t g = 0; g < n_; ++g) {
      for (element_t h = 0; h < n_; ++h) {
        if (mul(g, h) == identity) {
          inv_[std::size_t(g)] = h;
          break;
        }
      }
      if (inv_[std::size_t(g)] < 0)
        throw std::invalid_argument("element " + std::to_string(g) + " has no right inverse");
      if (mul(inv_[std::size_t(g)], g) != identity)
        throw std::invalid_argument("inverse of element " + std::to_string(g) + " is not two-sided");
    }
    for (element_t a = 0; a < n_ && abelian_; ++a)
      for (element_t b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) {
          abelian_ = false;
          break;
        }
  }

  void check_associativity() const {
    const element_t* t = mul_.data();
    const std::size_t n = std::size_t(n_);
    if (n_ <= kExhaustiveAssocLimit) {
      for (std::size_t a = 0; a < n; ++a) {
        const element_t* row_a = t + a * n;
        for (std::size_t b = 0; b < n; ++b) {
          const element_t* row_ab = t + std::size_t(row_a[b]) * n;
          const element_t* row_b = t + b * n;
          for (std::size_t c = 0; c < n; ++c)
            if (row_ab[c] != row_a[std::size_t(row_b[c])])
              throw std::invalid_argument("associativity fails at (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    } else {
      std::uint64_t state = assoc_check_seed();
      for (int i = 0; i < kSampledAssocTriples; ++i) {
        const std::size_t a = std::size_t(detail::splitmix64(state) % n);
        const std::size_t b = std::size_t(detail::splitmix64(state) % n);
        const std::size_t c = std::size_t(detail::splitmix64(state) % n);
        if (t[std::size_t(t[a * n + b]) * n + c] != t[a * n + std::size_t(t[b * n + c])])
          throw std::invalid_argument("associativity fails at sampled triple (" + std::to_string(a) +
                                      ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
      }
    }
  }

  void compute_orders() {
    elt_order_.assign(std::size_t(n_), 0);
    std::int64_t exp = 1;
    for (element_t g = 0; g < n_; ++g) {
      element_t x = g;
      element_t k = 1;
      while (x != identity) {
        x = mul(x, g);
        if (++k > n_) throw std::invalid_argument("element " + std::to_string(g) + " has no finite order");
      }
      elt_order_[std::size_t(g)] = k;
      exp = std::lcm<std::int64_t>(exp, k);
    }
    exponent_ = element_t(exp);
  }

  std::string label_;
  element_t n_;
  std::vector<element_t> mul_;
  std::vector<element_t> inv_;
  std::vector<element_t> elt_order_;
  element_t exponent_ = 1;
  bool abelian_ = true;
};

/// Cyclic group of order n, written additively and re-indexed so that 0 is
/// the identity. Element g has order n / gcd(n, g).
inline GroupTable make_cyclic(element_t n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  if (std::int64_t(n) * n > kMaxProductOrder * kMaxProductOrder || n > kMaxProductOrder)
    throw std::invalid_argument("cyclic group order too large");
  std::vector<element_t> mul(std::size_t(n) * std::size_t(n));
  for (element_t a = 0; a < n; ++a)
    for (element_t b = 0; b < n; ++b) mul[std::size_t(a) * n + b] = element_t((a + b) % n);
  return GroupTable("C(" + std::to_string(n) + ")", n, std::move(mul));
}

/// Direct product A x B with pair encoding index = a * |B| + b.
inline GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                                 std::int64_t max_order = kMaxProductOrder) {
  const std::int64_t n = std::int64_t(a.size()) * std::int64_t(b.size());
  if (n > max_order)
    throw std::invalid_argument("direct product order " + std::to_string(n) +
                                " exceeds the maximum " + std::to_string(max_order));
  const element_t nb = b.size();
  const element_t order = element_t(n);
  std::vector<element_t> mul(std::size_t(order) * std::size_t(order));
  for (element_t x1 = 0; x1 < a.size(); ++x1)
    for (element_t y1 = 0; y1 < nb; ++y1) {
      const element_t lhs = x1 * nb + y1;
      for (element_t x2 = 0; x2 < a.size(); ++x2)
        for (element_t y2 = 0; y2 < nb; ++y2)
          mul[std::size_t(lhs) * order + std::size_t(x2 * nb + y2)] =
              a.mul(x1, x2) * nb + b.mul(y1, y2);
    }
  return GroupTable(a.label() + "x" + b.label(), order, std::move(mul));
}

/// Split extension C_m x| C_k where the generator of C_k acts on C_m by
/// multiplication with t. Requires gcd(t, m) = 1 and t^k = 1 (mod m).
/// Covers the dihedral (t = m-1), semidihedral (t = 2^(a-1)-1) and modular
/// (t = p^(a-1)+1) families. Pair (a, b) is encoded as a * k + b.
inline GroupTable semidirect_cyclic(element_t m, element_t k, std::int64_t t) {
  if (m < 1 || k < 1) throw std::invalid_argument("semidirect factors must have positive order");
  const std::int64_t n = std::int64_t(m) * std::int64_t(k);
  if (n > kMaxProductOrder)
    throw std::invalid_argument("semidirect product order " + std::to_string(n) +
                                " exceeds the maximum " + std::to_string(kMaxProductOrder));
  std::int64_t tm = ((t % m) + m) % m;
  if (std::gcd(tm, std::int64_t(m)) != 1)
    throw std::invalid_argument("twist t = " + std::to_string(t) + " is not a unit modulo m = " +
                                std::to_string(m) + " (gcd = " +
                                std::to_string(std::gcd(tm, std::int64_t(m))) + ")");
  if (modpow(tm, k, m) != 1 % m)
    throw std::invalid_argument("twist t = " + std::to_string(t) + " does not satisfy t^k = 1 (mod m): t^" +
                                std::to_string(k) + " = " + std::to_string(modpow(tm, k, m)) +
                                " (mod " + std::to_string(m) + ")");
  std::vector<std::int64_t> tpow(std::size_t(k));
  tpow[0] = 1 % m;
  for (element_t i = 1; i < k; ++i) tpow[std::size_t(i)] = tpow[std::size_t(i - 1)] * tm % m;
  const element_t order = element_t(n);
  std::vector<element_t> mul(std::size_t(order) * std::size_t(order));
  for (element_t a1 = 0; a1 < m; ++a1)
    for (element_t b1 = 0; b1 < k; ++b1) {
      const element_t lhs = a1 * k + b1;
      for (element_t a2 = 0; a2 < m; ++a2)
        for (element_t b2 = 0; b2 < k; ++b2) {
          const element_t a3 = element_t((a1 + tpow[std::size_t(b1)] * a2) % m);
          const element_t b3 = element_t((b1 + b2) % k);
          mul[std::size_t(lhs) * order + std::size_t(a2 * k + b2)] = a3 * k + b3;
        }
    }
  return GroupTable("C(" + std::to_string(m) + "):C(" + std::to_string(k) + ")[" +
                        std::to_string(tm) + "]",
                    order, std::move(mul));
}

/// Generalized quaternion group of order 2^(alpha+1), built as a cocycle
/// extension on Z_{2^alpha} x Z_2:
///   (a1, b1)(a2, b2) = (a1 + (-1)^{b1} a2 + b1 b2 2^{alpha-1}, b1 xor b2).
/// Has exactly one element of order 2.
inline GroupTable generalized_quaternion(int alpha) {
  if (alpha < 2) throw std::invalid_argument("generalized quaternion requires alpha >= 2");
  if (alpha > 14) throw std::invalid_argument("generalized quaternion order too large");
  const element_t half = element_t(1) << alpha;
  const element_t quarter = half >> 1;
  const element_t order = half * 2;
  std::vector<element_t> mul(std::size_t(order) * std::size_t(order));
  for (element_t a1 = 0; a1 < half; ++a1)
    for (element_t b1 = 0; b1 < 2; ++b1) {
      const element_t lhs = a1 * 2 + b1;
      for (element_t a2 = 0; a2 < half; ++a2)
        for (element_t b2 = 0; b2 < 2; ++b2) {
          element_t a3 = b1 ? element_t((a1 + (half - a2)) % half) : element_t((a1 + a2) % half);
          if (b1 && b2) a3 = element_t((a3 + quarter) % half);
          const element_t b3 = b1 ^ b2;
          mul[std::size_t(lhs) * order + std::size_t(a2 * 2 + b2)] = a3 * 2 + b3;
        }
    }
  return GroupTable("Q(" + std::to_string(order) + ")", order, std::move(mul));
}

/// Upper unitriangular 3x3 matrices over Z_p: nonabelian of order p^3 and
/// exponent p for odd p. Triple (a, b, c) is encoded as (a*p + b)*p + c.
inline GroupTable heisenberg(element_t p) {
  if (!is_prime(p)) throw std::invalid_argument("heisenberg parameter must be prime, got " + std::to_string(p));
  if (p == 2) throw std::invalid_argument("heisenberg requires an odd prime (p = 2 has exponent 4)");
  const std::int64_t n = std::int64_t(p) * p * p;
  if (n > kMaxProductOrder) throw std::invalid_argument("heisenberg order too large");
  const element_t order = element_t(n);
  std::vector<element_t> mul(std::size_t(order) * std::size_t(order));
  auto enc = [p](element_t a, element_t b, element_t c) { return (a * p + b) * p + c; };
  for (element_t a1 = 0; a1 < p; ++a1)
    for (element_t b1 = 0; b1 < p; ++b1)
      for (element_t c1 = 0; c1 < p; ++c1) {
        const element_t lhs = enc(a1, b1, c1);
        for (element_t a2 = 0; a2 < p; ++a2)
          for (element_t b2 = 0; b2 < p; ++b2)
            for (element_t c2 = 0; c2 < p; ++c2)
              mul[std::size_t(lhs) * order +
                  std::size_t(enc(a2, b2, c2))] =
                  enc(element_t((a1 + a2) % p), element_t((b1 + b2) % p),
                      element_t((c1 + c2 + a1 * b2) % p));
      }
  return GroupTable("H(" + std::to_string(p) + ")", order, std::move(mul));
}

/// Least k >= 1 with g^k = identity, recomputed by walking powers.
inline element_t element_order(const GroupTable& g, element_t x) {
  g.check_element(x);
  element_t cur = x;
  element_t k = 1;
  while (cur != identity) {
    cur = g.mul(cur, x);
    ++k;
  }
  return k;
}

inline element_t exponent(const GroupTable& g) { return g.exponent(); }

/// Subgroup generated by gens: breadth-first saturation under right
/// multiplication by the generators. Returned sorted ascending.
inline std::vector<element_t> closure(const GroupTable& g, std::span<const element_t> gens) {
  if (gens.empty()) throw std::invalid_argument("closure requires at least one generator");
  for (element_t x : gens) g.check_element(x);
  std::vector<char> seen(std::size_t(g.size()), 0);
  std::vector<element_t> members;
  members.reserve(std::size_t(g.size()));
  for (element_t x : gens)
    if (!seen[std::size_t(x)]) {
      seen[std::size_t(x)] = 1;
      members.push_back(x);
    }
  for (std::size_t head = 0; head < members.size(); ++head)
    for (element_t x : gens) {
      const element_t w = g.mul(members[head], x);
      if (!seen[std::size_t(w)]) {
        seen[std::size_t(w)] = 1;
        members.push_back(w);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

inline std::vector<element_t> closure(const GroupTable& g, std::initializer_list<element_t> gens) {
  return closure(g, std::span<const element_t>(gens.begin(), gens.size()));
}

/// A finite group is cyclic iff it has an element of full order.
inline bool is_cyclic(const GroupTable& g) { return g.exponent() == g.size(); }

inline bool is_abelian(const GroupTable& g) { return g.abelian(); }

/// True iff G is dihedral of order 2^(alpha+1) with alpha >= 2: a cyclic
/// subgroup <x> of index 2 plus an involution y outside it inverting x.
/// C_2 and the Klein group are deliberately excluded.
inline bool is_dihedral_2group(const GroupTable& g) {
  const element_t n = g.size();
  if (n < 8 || (n & (n - 1)) != 0) return false;
  const element_t half = n / 2;
  std::vector<char> in_cyc(std::size_t(n), 0);
  for (element_t x = 1; x < n; ++x) {
    if (g.order_of(x) != half) continue;
    std::fill(in_cyc.begin(), in_cyc.end(), 0);
    element_t cur = identity;
    do {
      in_cyc[std::size_t(cur)] = 1;
      cur = g.mul(cur, x);
    } while (cur != identity);
    for (element_t y = 1; y < n; ++y) {
      if (in_cyc[std::size_t(y)]) continue;
      if (g.mul(y, y) != identity) continue;
      if (g.conjugate(x, y) == g.inv(x)) return true;
    }
  }
  return false;
}

/// Elements commuting with everything, sorted ascending.
inline std::vector<element_t> center(const GroupTable& g) {
  std::vector<element_t> z;
  for (element_t x = 0; x < g.size(); ++x) {
    bool central = true;
    for (element_t y = 0; y < g.size(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return z;
}

/// Subgroup generated by all commutators, sorted ascending.
inline std::vector<element_t> derived_subgroup(const GroupTable& g) {
  std::vector<char> seen(std::size_t(g.size()), 0);
  std::vector<element_t> gens;
  for (element_t a = 0; a < g.size(); ++a)
    for (element_t b = 0; b < g.size(); ++b) {
      const element_t c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[std::size_t(c)]) {
        seen[std::size_t(c)] = 1;
        gens.push_back(c);
      }
    }
  return closure(g, std::span<const element_t>(gens.data(), gens.size()));
}

/// Quotient by a normal subgroup. Cosets are numbered by their minimal
/// member in ascending order, so the identity coset is element 0.
inline GroupTable quotient(const GroupTable& g, std::span<const element_t> normal_subgroup) {
  if (normal_subgroup.empty()) throw std::invalid_argument("quotient requires a nonempty subgroup");
  std::vector<char> in_n(std::size_t(g.size()), 0);
  for (element_t x : normal_subgroup) {
    g.check_element(x);
    in_n[std::size_t(x)] = 1;
  }
  if (!in_n[identity]) throw std::invalid_argument("subgroup must contain the identity");
  for (element_t x : normal_subgroup)
    for (element_t y : normal_subgroup)
      if (!in_n[std::size_t(g.mul(x, y))])
        throw std::invalid_argument("subgroup is not closed under multiplication");
  for (element_t x : normal_subgroup)
    for (element_t h = 0; h < g.size(); ++h)
      if (!in_n[std::size_t(g.conjugate(x, h))])
        throw std::invalid_argument("subgroup is not normal");

  std::vector<element_t> coset_of(std::size_t(g.size()), -1);
  std::vector<element_t> reps;
  for (element_t x = 0; x < g.size(); ++x) {
    if (coset_of[std::size_t(x)] >= 0) continue;
    const element_t id = element_t(reps.size());
    reps.push_back(x);
    for (element_t h : normal_subgroup) coset_of[std::size_t(g.mul(x, h))] = id;
  }
  const element_t order = element_t(reps.size());
  std::vector<element_t> mul(std::size_t(order) * std::size_t(order));
  for (element_t i = 0; i < order; ++i)
    for (element_t j = 0; j < order; ++j)
      mul[std::size_t(i) * order + std::size_t(j)] = coset_of[std::size_t(g.mul(reps[std::size_t(i)], reps[std::size_t(j)]))];
  return GroupTable(g.label() + "/N" + std::to_string(normal_subgroup.size()), order, std::move(mul));
}

}  // namespace epg
