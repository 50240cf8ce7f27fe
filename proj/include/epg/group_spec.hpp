#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "epg/coset.hpp"
#include "epg/group.hpp"
#include "epg/presentation.hpp"

namespace epg {

/// Default cap on constructed group orders (CLI --max-order overrides).
inline constexpr std::int64_t kDefaultOrderCap = 4096;

/// One construction atom of a group spec. Family atoms are named by TOTAL
/// ORDER: D(16) is the dihedral group of order 16, Q(8) the quaternion
/// group of order 8, SD(32) the semidihedral group of order 32, M(p,k) the
/// modular group of order p^k, H(p) the Heisenberg group of order p^3.
struct SpecAtom {
  enum class Kind { cyclic, dihedral, quaternion, semidihedral, modular, heisenberg, presentation };

  Kind kind = Kind::cyclic;
  std::int64_t a = 0;  // C/D/Q/SD: order; M: p; H: p
  std::int64_t b = 0;  // M: k
  std::string presentation_text;
  Presentation pres;

  /// Construction order when statically known; -1 for presentation atoms.
  std::int64_t known_order() const {
    switch (kind) {
      case Kind::cyclic:
      case Kind::dihedral:
      case Kind::quaternion:
      case Kind::semidihedral:
        return a;
      case Kind::modular: {
        std::int64_t n = 1;
        for (std::int64_t i = 0; i < b; ++i) n *= a;
        return n;
      }
      case Kind::heisenberg:
        return a * a * a;
      case Kind::presentation:
        return -1;
    }
    return -1;
  }

  std::string render() const {
    switch (kind) {
      case Kind::cyclic:
        return "C(" + std::to_string(a) + ")";
      case Kind::dihedral:
        return "D(" + std::to_string(a) + ")";
      case Kind::quaternion:
        return "Q(" + std::to_string(a) + ")";
      case Kind::semidihedral:
        return "SD(" + std::to_string(a) + ")";
      case Kind::modular:
        return "M(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case Kind::heisenberg:
        return "H(" + std::to_string(a) + ")";
      case Kind::presentation:
        return "P\"" + presentation_text + "\"";
    }
    return "";
  }

  GroupTable build(std::int32_t max_cosets) const {
    switch (kind) {
      case Kind::cyclic:
        return make_cyclic(element_t(a));
      case Kind::dihedral:
        return semidirect_cyclic(element_t(a / 2), 2, a / 2 - 1).with_label(render());
      case Kind::quaternion: {
        int alpha = 0;
        for (std::int64_t m = a; m > 2; m /= 2) ++alpha;
        return generalized_quaternion(alpha);
      }
      case Kind::semidihedral:
        return semidirect_cyclic(element_t(a / 2), 2, a / 4 - 1).with_label(render());
      case Kind::modular: {
        std::int64_t m = 1;
        for (std::int64_t i = 0; i < b - 1; ++i) m *= a;
        return semidirect_cyclic(element_t(m), element_t(a), m / a + 1).with_label(render());
      }
      case Kind::heisenberg:
        return heisenberg(element_t(a));
      case Kind::presentation:
        return realize(pres, max_cosets).with_label(render());
    }
    throw std::logic_error("unreachable atom kind");
  }
};

/// Parsed CLI group descriptor: one or more atoms chained with 'x' into a
/// direct product.
struct GroupSpec {
  std::vector<SpecAtom> atoms;

  std::string render() const {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i) out += "x";
      out += atoms[i].render();
    }
    return out;
  }
};

namespace detail {

class SpecParser {
 public:
  SpecParser(std::string_view text, std::int64_t max_order) : text_(text), max_order_(max_order) {}

  GroupSpec parse() {
    GroupSpec spec;
    spec.atoms.push_back(parse_atom());
    for (;;) {
      skip_ws();
      if (peek() == 'x') {
        ++pos_;
        spec.atoms.push_back(parse_atom());
        continue;
      }
      break;
    }
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("trailing characters in group spec", pos_);
    std::int64_t known = 1;
    for (const SpecAtom& atom : spec.atoms) {
      const std::int64_t o = atom.known_order();
      if (o > 0) known *= o;
      if (known > max_order_)
        throw parse_error("spec order " + std::to_string(known) + " exceeds the cap " +
                              std::to_string(max_order_),
                          0);
    }
    return spec;
  }

 private:
  SpecAtom parse_atom() {
    skip_ws();
    const std::size_t at = pos_;
    std::string head;
    while (pos_ < text_.size() && std::isupper(static_cast<unsigned char>(text_[pos_]))) {
      head.push_back(text_[pos_]);
      ++pos_;
    }
    if (head.empty()) throw parse_error("expected a family atom (C, D, Q, SD, M, H or P\"...\")", at);
    if (head == "P") return parse_presentation_atom(at);

    skip_ws();
    expect('(', "expected '(' after family name");
    const std::int64_t first = read_int();
    std::int64_t second = 0;
    bool has_second = false;
    skip_ws();
    if (peek() == ',') {
      ++pos_;
      second = read_int();
      has_second = true;
    }
    skip_ws();
    expect(')', "expected ')' closing the atom");

    SpecAtom atom;
    atom.a = first;
    atom.b = second;
    if (head == "C") {
      require(!has_second, at, "C takes a single argument");
      require(first >= 1, at, "C(n): n must be at least 1");
      atom.kind = SpecAtom::Kind::cyclic;
    } else if (head == "D") {
      require(!has_second, at, "D takes a single argument");
      require(is_two_power(first) && first >= 8, at,
              "D(n): dihedral order must be a power of two, at least 8");
      atom.kind = SpecAtom::Kind::dihedral;
    } else if (head == "Q") {
      require(!has_second, at, "Q takes a single argument");
      require(is_two_power(first) && first >= 8, at,
              "Q(n): quaternion order must be a power of two, at least 8");
      atom.kind = SpecAtom::Kind::quaternion;
    } else if (head == "SD") {
      require(!has_second, at, "SD takes a single argument");
      require(is_two_power(first) && first >= 16, at,
              "SD(n): semidihedral order must be a power of two, at least 16 (alpha >= 3)");
      atom.kind = SpecAtom::Kind::semidihedral;
    } else if (head == "M") {
      require(has_second, at, "M takes two arguments: M(p,k) has order p^k");
      require(is_prime(first), at, "M(p,k): p must be prime");
      require(second >= 3, at, "M(p,k): k must be at least 3 (alpha >= 2)");
      require(first != 2 || second >= 4, at,
              "M(2,k): modular 2-groups require k >= 4 (alpha >= 3)");
      atom.kind = SpecAtom::Kind::modular;
    } else if (head == "H") {
      require(!has_second, at, "H takes a single argument");
      require(is_prime(first) && first != 2, at, "H(p): p must be an odd prime");
      atom.kind = SpecAtom::Kind::heisenberg;
    } else {
      throw parse_error("unknown family atom '" + head + "'", at);
    }
    return atom;
  }

  SpecAtom parse_presentation_atom(std::size_t at) {
    skip_ws();
    if (peek() != '"') throw parse_error("P atoms take a quoted presentation: P\"<...>\"", pos_);
    ++pos_;
    const std::size_t start = pos_;
    const std::size_t end = text_.find('"', pos_);
    if (end == std::string_view::npos) throw parse_error("unterminated presentation quote", at);
    SpecAtom atom;
    atom.kind = SpecAtom::Kind::presentation;
    atom.presentation_text = std::string(text_.substr(start, end - start));
    atom.pres = parse_presentation(atom.presentation_text);
    pos_ = end + 1;
    return atom;
  }

  static bool is_two_power(std::int64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

  void require(bool ok, std::size_t at, const std::string& rule) {
    if (!ok) throw parse_error(rule, at);
  }

  std::int64_t read_int() {
    skip_ws();
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected an integer", at);
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxProductOrder * kMaxProductOrder) throw parse_error("number too large", at);
      ++pos_;
    }
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c, const char* message) {
    skip_ws();
    if (peek() != c) throw parse_error(message, pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::int64_t max_order_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a spec like "C(4)xC(2)", "D(16)" or "P\"<x | x^5 = 1>\"xC(3)".
/// Construction is deferred to build_group.
inline GroupSpec parse_spec(std::string_view text, std::int64_t max_order = kDefaultOrderCap) {
  return detail::SpecParser(text, max_order).parse();
}

/// Builds the group a spec describes, folding product chains left to right.
inline GroupTable build_group(const GroupSpec& spec, std::int64_t max_order = kDefaultOrderCap,
                              std::int32_t max_cosets = kDefaultMaxCosets) {
  if (spec.atoms.empty()) throw std::invalid_argument("empty group spec");
  GroupTable result = spec.atoms[0].build(max_cosets);
  if (result.size() > max_order)
    throw std::invalid_argument("group order " + std::to_string(result.size()) +
                                " exceeds the cap " + std::to_string(max_order));
  for (std::size_t i = 1; i < spec.atoms.size(); ++i) {
    GroupTable next = spec.atoms[i].build(max_cosets);
    result = direct_product(result, next, max_order);
  }
  return result;
}

}  // namespace epg
