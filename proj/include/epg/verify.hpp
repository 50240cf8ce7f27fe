#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "epg/catalog.hpp"
#include "epg/graph.hpp"
#include "epg/group.hpp"
#include "epg/group_spec.hpp"
#include "epg/morphisms.hpp"

namespace epg {

enum class Verdict { pass, fail, not_applicable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "?";
}

/// Element index, number, or message certifying/refuting a claim.
using Witness = std::variant<std::monostate, std::int64_t, std::string>;

/// Outcome of one verification suite over one group. Failing verdicts
/// always carry a witness; not-applicable means the claim's preconditions
/// do not hold for this group.
struct VerdictReport {
  std::string label;
  std::string claim;
  Verdict status = Verdict::not_applicable;
  std::int64_t n_g = 0;
  std::int64_t exponent = 0;
  std::int64_t order = 0;
  std::int64_t p = 0;      // the prime, when |G| is a prime power
  std::int64_t alpha = 0;  // exp(G) = p^alpha, when p is set
  Witness witness{};
};

/// Everything the suites need about one group, computed once: the graph,
/// n_G, and the p-group parameters.
struct GroupAnalysis {
  const GroupTable* group;
  EpgGraph epg;
  std::int64_t n_g = 0;
  std::int64_t p = 0;
  std::int64_t alpha = 0;
  bool cyclic = false;
  bool dihedral2 = false;

  explicit GroupAnalysis(const GroupTable& g) : group(&g), epg(g) {
    n_g = epg.max_neighborhood_size();
    cyclic = is_cyclic(g);
    dihedral2 = is_dihedral_2group(g);
    if (const auto pp = prime_power(g.size())) {
      p = pp->first;
      std::int64_t e = g.exponent();
      while (e > 1) {
        e /= p;
        ++alpha;
      }
    }
  }

  GroupAnalysis(const GroupAnalysis&) = delete;
  GroupAnalysis& operator=(const GroupAnalysis&) = delete;
};

namespace detail {

inline VerdictReport base_report(const GroupAnalysis& a, std::string claim) {
  VerdictReport r;
  r.label = a.group->label();
  r.claim = std::move(claim);
  r.n_g = a.n_g;
  r.exponent = a.group->exponent();
  r.order = a.group->size();
  r.p = a.p;
  r.alpha = a.alpha;
  return r;
}

inline bool p_group_for(const GroupAnalysis& a, std::int64_t p) {
  return p >= 2 && is_power_of(a.group->size(), p);
}

inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= b;
  return r;
}

/// p^(a+1) - p^a + p^(a-1): the second-smallest value n_G can take.
inline std::int64_t second_value_bound(std::int64_t p, std::int64_t alpha) {
  return ipow(p, alpha + 1) - ipow(p, alpha) + ipow(p, alpha - 1);
}

inline void check_prime_argument(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

}  // namespace detail

/// exp(G) <= n_G <= |G|.
inline VerdictReport check_bounds(const GroupAnalysis& a) {
  VerdictReport r = detail::base_report(a, "bounds");
  const bool ok = r.exponent <= r.n_g && r.n_g <= r.order;
  r.status = ok ? Verdict::pass : Verdict::fail;
  if (!ok) r.witness = r.n_g;
  return r;
}

/// n_G = exp(G) iff G is cyclic, of exponent p, or a dihedral 2-group.
inline VerdictReport check_theorem_main(const GroupAnalysis& a, std::int64_t p) {
  detail::check_prime_argument(p);
  VerdictReport r = detail::base_report(a, "thm-main");
  if (!detail::p_group_for(a, p)) return r;  // not a p-group for this p
  const bool minimal = (r.n_g == r.exponent);
  const bool characterized = a.cyclic || r.exponent == p || a.dihedral2;
  r.status = (minimal == characterized) ? Verdict::pass : Verdict::fail;
  if (r.status == Verdict::fail) r.witness = r.n_g;
  return r;
}

/// When n_G > exp(G), n_G >= p^(a+1) - p^a + p^(a-1).
inline VerdictReport check_prop_second_value(const GroupAnalysis& a, std::int64_t p) {
  detail::check_prime_argument(p);
  VerdictReport r = detail::base_report(a, "prop-second-value");
  if (!detail::p_group_for(a, p)) return r;
  if (r.n_g == r.exponent) return r;  // gap claim does not apply
  const std::int64_t bound = detail::second_value_bound(p, r.alpha);
  r.status = (r.n_g >= bound) ? Verdict::pass : Verdict::fail;
  if (r.status == Verdict::fail) r.witness = r.n_g;
  return r;
}

/// Some element of order p attains n_G; the witness is the smallest one.
inline VerdictReport check_lemma_order_p(const GroupAnalysis& a, std::int64_t p) {
  detail::check_prime_argument(p);
  VerdictReport r = detail::base_report(a, "lemma-order-p");
  if (!detail::p_group_for(a, p)) return r;
  const GroupTable& g = *a.group;
  for (element_t z = 1; z < g.size(); ++z)
    if (g.order_of(z) == p && a.epg.neighborhood_size(z) == a.n_g) {
      r.status = Verdict::pass;
      r.witness = std::int64_t(z);
      return r;
    }
  r.status = Verdict::fail;
  r.witness = r.n_g;
  return r;
}

/// Abelian p-groups: n_G = exp(G) iff cyclic or elementary abelian.
inline VerdictReport check_abelian_characterization(const GroupAnalysis& a, std::int64_t p) {
  detail::check_prime_argument(p);
  VerdictReport r = detail::base_report(a, "abelian");
  if (!detail::p_group_for(a, p) || !a.group->abelian()) return r;
  const bool minimal = (r.n_g == r.exponent);
  const bool characterized = a.cyclic || r.exponent == p;
  r.status = (minimal == characterized) ? Verdict::pass : Verdict::fail;
  if (r.status == Verdict::fail) r.witness = r.n_g;
  return r;
}

/// Non-cyclic abelian p-groups with exp = p^a, a >= 2, satisfy the
/// second-value bound outright.
inline VerdictReport check_noncyclic_abelian_bound(const GroupAnalysis& a, std::int64_t p) {
  detail::check_prime_argument(p);
  VerdictReport r = detail::base_report(a, "noncyclic-abelian-bound");
  if (!detail::p_group_for(a, p) || !a.group->abelian() || a.cyclic || r.alpha < 2) return r;
  const std::int64_t bound = detail::second_value_bound(p, r.alpha);
  r.status = (r.n_g >= bound) ? Verdict::pass : Verdict::fail;
  if (r.status == Verdict::fail) r.witness = r.n_g;
  return r;
}

/// Groups of order p^(a+1) with a cyclic subgroup of order p^a: n_G equals
/// exp(G) iff cyclic, exponent p, or dihedral.
inline VerdictReport check_maxcyclic_prop(const GroupAnalysis& a, std::int64_t p, std::int64_t alpha) {
  detail::check_prime_argument(p);
  VerdictReport r = detail::base_report(a, "maxcyclic");
  if (!detail::p_group_for(a, p)) return r;
  if (a.group->size() != detail::ipow(p, alpha + 1)) return r;
  if (a.group->exponent() < detail::ipow(p, alpha)) return r;  // no cyclic subgroup of index p
  const bool minimal = (r.n_g == r.exponent);
  const bool characterized = a.cyclic || r.exponent == p || a.dihedral2;
  r.status = (minimal == characterized) ? Verdict::pass : Verdict::fail;
  if (r.status == Verdict::fail) r.witness = r.n_g;
  return r;
}

// GroupTable conveniences (each builds its own analysis).
inline VerdictReport check_bounds(const GroupTable& g) { return check_bounds(GroupAnalysis(g)); }
inline VerdictReport check_theorem_main(const GroupTable& g, std::int64_t p) {
  return check_theorem_main(GroupAnalysis(g), p);
}
inline VerdictReport check_prop_second_value(const GroupTable& g, std::int64_t p) {
  return check_prop_second_value(GroupAnalysis(g), p);
}
inline VerdictReport check_lemma_order_p(const GroupTable& g, std::int64_t p) {
  return check_lemma_order_p(GroupAnalysis(g), p);
}
inline VerdictReport check_abelian_characterization(const GroupTable& g, std::int64_t p) {
  return check_abelian_characterization(GroupAnalysis(g), p);
}
inline VerdictReport check_noncyclic_abelian_bound(const GroupTable& g, std::int64_t p) {
  return check_noncyclic_abelian_bound(GroupAnalysis(g), p);
}
inline VerdictReport check_maxcyclic_prop(const GroupTable& g, std::int64_t p, std::int64_t alpha) {
  return check_maxcyclic_prop(GroupAnalysis(g), p, alpha);
}

/// Runs the main theorem check over all fourteen order-16 groups. The
/// per-row nG and exp fields identify which groups satisfy n_G = exp(G).
inline std::vector<VerdictReport> census_order16() {
  std::vector<VerdictReport> out;
  for (const GroupTable& t : catalog_order16()) {
    GroupAnalysis a(t);
    out.push_back(check_theorem_main(a, 2));
  }
  return out;
}

/// Dihedral 2-groups have no automorphism of order 4 whose square inverts
/// the element of maximal order. Verified by exhausting Aut(D_{2^{a+1}}).
inline VerdictReport check_dihedral_aut_fact(int alpha) {
  if (alpha < 2 || alpha > 5)
    throw std::invalid_argument("dihedral automorphism check supports alpha in [2, 5]");
  const element_t m = element_t(1) << alpha;
  const GroupTable d =
      semidirect_cyclic(m, 2, m - 1).with_label("D(" + std::to_string(2 * m) + ")");
  GroupAnalysis a(d);
  VerdictReport r = detail::base_report(a, "dihedral-aut");

  element_t x = -1;
  for (element_t g = 1; g < d.size(); ++g)
    if (d.order_of(g) == m) {
      x = g;
      break;
    }
  const element_t x_inv = d.inv(x);

  const auto autos = automorphisms(d);
  const std::vector<element_t> identity_map = [&] {
    std::vector<element_t> id(std::size_t(d.size()));
    for (element_t i = 0; i < d.size(); ++i) id[std::size_t(i)] = i;
    return id;
  }();
  auto compose = [&](const std::vector<element_t>& f, const std::vector<element_t>& g) {
    std::vector<element_t> h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[std::size_t(f[i])];
    return h;
  };
  for (std::size_t idx = 0; idx < autos.size(); ++idx) {
    const auto sq = compose(autos[idx], autos[idx]);
    const bool order_four = sq != identity_map && compose(sq, sq) == identity_map;
    if (order_four && sq[std::size_t(x)] == x_inv) {
      r.status = Verdict::fail;
      r.witness = std::int64_t(idx);
      return r;
    }
  }
  r.status = Verdict::pass;
  r.witness = std::int64_t(autos.size());
  return r;
}

/// The per-group verification suites run_census understands.
inline const std::vector<std::string>& census_suites() {
  static const std::vector<std::string> ids = {
      "bounds",  "thm-main", "prop-second-value", "lemma-order-p",
      "abelian", "noncyclic-abelian-bound", "maxcyclic"};
  return ids;
}

struct CensusOptions {
  std::int64_t max_order = 1024;
  std::int32_t max_cosets = kDefaultMaxCosets;
};

namespace detail {

inline VerdictReport dispatch_suite(const GroupAnalysis& a, const std::string& suite) {
  if (suite == "bounds") return check_bounds(a);
  const std::int64_t p = a.p;
  if (p == 0) {
    // not a prime-power order: every p-group claim is vacuous here
    VerdictReport r = base_report(a, suite);
    r.status = Verdict::not_applicable;
    return r;
  }
  if (suite == "thm-main") return check_theorem_main(a, p);
  if (suite == "prop-second-value") return check_prop_second_value(a, p);
  if (suite == "lemma-order-p") return check_lemma_order_p(a, p);
  if (suite == "abelian") return check_abelian_characterization(a, p);
  if (suite == "noncyclic-abelian-bound") return check_noncyclic_abelian_bound(a, p);
  if (suite == "maxcyclic") {
    std::int64_t e = 0;
    for (std::int64_t n = a.group->size(); n > 1; n /= p) ++e;
    return check_maxcyclic_prop(a, p, e - 1);
  }
  throw std::invalid_argument("unknown suite id '" + suite + "'");
}

}  // namespace detail

/// Cross product of groups and suites in deterministic order. A spec whose
/// construction fails contributes a single failing "construct" row instead
/// of aborting the census.
inline std::vector<VerdictReport> run_census(const std::vector<GroupSpec>& specs,
                                             const std::vector<std::string>& suites,
                                             const CensusOptions& options = {}) {
  std::vector<std::string> expanded;
  for (const std::string& s : suites) {
    if (s == "all") {
      for (const std::string& id : census_suites()) expanded.push_back(id);
      continue;
    }
    bool known = false;
    for (const std::string& id : census_suites()) known = known || id == s;
    if (!known) {
      std::string valid;
      for (const std::string& id : census_suites()) valid += " " + id;
      throw std::invalid_argument("unknown suite id '" + s + "'; valid ids:" + valid + " all");
    }
    expanded.push_back(s);
  }

  std::vector<VerdictReport> out;
  for (const GroupSpec& spec : specs) {
    std::optional<GroupTable> table;
    try {
      table.emplace(build_group(spec, options.max_order, options.max_cosets));
    } catch (const std::exception& e) {
      VerdictReport r;
      r.label = spec.render();
      r.claim = "construct";
      r.status = Verdict::fail;
      r.witness = std::string(e.what());
      out.push_back(std::move(r));
      continue;
    }
    const GroupAnalysis analysis(*table);
    for (const std::string& suite : expanded) out.push_back(detail::dispatch_suite(analysis, suite));
  }
  return out;
}

/// The built-in census: for p in {2, 3, 5} the cyclic groups C_{p^k}
/// (k <= 6), all abelian types of order <= p^4, elementary abelian up to
/// rank 4, the D/Q/SD/M families up to order 1024, the Heisenberg groups,
/// the order-16 catalog, and the products of all of these with C_p up to
/// order 625.
inline std::vector<GroupSpec> default_census() {
  std::vector<std::string> texts;
  const auto add = [&texts](std::string t) { texts.push_back(std::move(t)); };

  for (const std::int64_t p : {2, 3, 5}) {
    std::vector<std::pair<std::string, std::int64_t>> base;
    const auto base_add = [&base](std::string t, std::int64_t order) {
      base.emplace_back(std::move(t), order);
    };
    const std::string ps = std::to_string(p);

    std::int64_t pk = p;
    for (int k = 1; k <= 6 && pk <= 1024; ++k, pk *= p)
      base_add("C(" + std::to_string(pk) + ")", pk);

    std::string elem = "C(" + ps + ")";
    std::int64_t elem_order = p;
    for (int rank = 2; rank <= 4; ++rank) {
      elem += "xC(" + ps + ")";
      elem_order *= p;
      base_add(elem, elem_order);
    }

    const std::int64_t p2 = p * p, p3 = p2 * p, p4 = p3 * p;
    base_add("C(" + std::to_string(p2) + ")xC(" + ps + ")", p3);
    base_add("C(" + std::to_string(p2) + ")xC(" + std::to_string(p2) + ")", p4);
    base_add("C(" + std::to_string(p2) + ")xC(" + ps + ")xC(" + ps + ")", p4);
    base_add("C(" + std::to_string(p3) + ")xC(" + ps + ")", p4);

    if (p == 2) {
      for (std::int64_t n = 8; n <= 1024; n *= 2) base_add("D(" + std::to_string(n) + ")", n);
      for (std::int64_t n = 8; n <= 1024; n *= 2) base_add("Q(" + std::to_string(n) + ")", n);
      for (std::int64_t n = 16; n <= 1024; n *= 2) base_add("SD(" + std::to_string(n) + ")", n);
      for (int k = 4; k <= 10; ++k) base_add("M(2," + std::to_string(k) + ")", std::int64_t(1) << k);
      base_add("D(8)xC(2)", 16);
      base_add("Q(8)xC(2)", 16);
      base_add("P\"<x,y | x^4 = 1, y^4 = 1, x^y = x^-1>\"", 16);
      base_add("P\"<a,b,c | a^4 = 1, b^2 = 1, c^2 = 1, a*b = b*a, a^c = a*b, b^c = b>\"", 16);
      base_add("P\"<a,b,c | a^4 = 1, b^2 = 1, a^b = a^-1, c^2 = a^2, a*c = c*a, b*c = c*b>\"", 16);
    } else {
      std::int64_t order = p * p * p;
      for (int k = 3; order <= 1024; ++k, order *= p)
        base_add("M(" + ps + "," + std::to_string(k) + ")", order);
      base_add("H(" + ps + ")", p * p * p);
    }

    for (const auto& [text, order] : base) add(text);
    for (const auto& [text, order] : base)
      if (order * p <= 625) add(text + "xC(" + ps + ")");
  }

  std::vector<GroupSpec> specs;
  specs.reserve(texts.size());
  for (const std::string& t : texts) specs.push_back(parse_spec(t, 1024));
  return specs;
}

}  // namespace epg
