#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace epg {

/// Parse failure carrying the byte offset of the offending token.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A finitely presented group. Relators are stored as flat words over
/// signed generator letters: +i means generator i-1, -i its inverse.
/// Equations u = v are folded into the single relator u v^-1, and the
/// conjugation shorthand x^y is expanded to y^-1 x y.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<std::int32_t>> relators;
};

namespace detail {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    skip_ws();
    expect('<', "expected '<' opening the presentation");
    parse_generators();
    expect('|', "expected '|' between generators and relations");
    for (;;) {
      p_.relators.push_back(parse_relation());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect('>', "expected '>' closing the presentation");
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("trailing characters after '>'", pos_);
    return std::move(p_);
  }

 private:
  void parse_generators() {
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      const std::string name = read_identifier();
      if (name.empty()) throw parse_error("expected a generator name", at);
      for (const std::string& g : p_.generators)
        if (g == name) throw parse_error("duplicate generator '" + name + "'", at);
      p_.generators.push_back(name);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
  }

  std::vector<std::int32_t> parse_relation() {
    std::vector<std::int32_t> word = parse_word();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      const std::vector<std::int32_t> rhs = parse_word();
      for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) word.push_back(-*it);
    }
    return word;
  }

  std::vector<std::int32_t> parse_word() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      skip_ws();
      const char c = peek();
      if (c != ',' && c != '=' && c != '>')
        throw parse_error("'1' must stand alone as the empty word", pos_);
      return {};
    }
    std::vector<std::int32_t> word;
    for (;;) {
      parse_term(word);
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      const char c = peek();
      if (c == ',' || c == '=' || c == '>') break;
      if (c == '\0') throw parse_error("unterminated word", pos_);
      // juxtaposed term follows
    }
    return word;
  }

  void parse_term(std::vector<std::int32_t>& word) {
    skip_ws();
    const std::size_t at = pos_;
    const std::int32_t base = match_generator();
    if (base == 0) {
      const std::string ident = read_identifier();
      if (ident.empty()) throw parse_error("expected a generator name", at);
      throw parse_error("undeclared generator '" + ident + "'", at);
    }
    skip_ws();
    if (peek() != '^') {
      word.push_back(base);
      return;
    }
    ++pos_;
    skip_ws();
    const std::size_t exp_at = pos_;
    if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::int64_t k = read_int();
      if (k == 0) throw parse_error("zero exponent", exp_at);
      const std::int32_t letter = k > 0 ? base : -base;
      for (std::int64_t i = 0; i < (k > 0 ? k : -k); ++i) word.push_back(letter);
      return;
    }
    const std::int32_t by = match_generator();
    if (by == 0) throw parse_error("expected an exponent or a generator after '^'", exp_at);
    word.push_back(-by);
    word.push_back(base);
    word.push_back(by);
  }

  /// Longest declared generator name starting at the cursor; 0 if none.
  std::int32_t match_generator() {
    std::int32_t best = 0;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < p_.generators.size(); ++i) {
      const std::string& name = p_.generators[i];
      if (name.size() > best_len && text_.compare(pos_, name.size(), name) == 0)
        if (pos_ + name.size() <= text_.size()) {
          best = std::int32_t(i) + 1;
          best_len = name.size();
        }
    }
    pos_ += best_len;
    return best;
  }

  std::string read_identifier() {
    std::size_t start = pos_;
    auto is_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_body = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos_ < text_.size() && is_start(text_[pos_])) {
      ++pos_;
      while (pos_ < text_.size() && is_body(text_[pos_])) ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t read_int() {
    const std::size_t at = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected an integer", at);
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) throw parse_error("exponent too large", at);
      ++pos_;
    }
    return negative ? -value : value;
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
  std::size_t pos_ = 0;
  Presentation p_;
};

}  // namespace detail

/// Parses "<x,y | x^8 = 1, y^2 = 1, x^y = x^-1>". Powers use '^' with a
/// signed integer; x^y is conjugation; '*' between terms is optional; "1"
/// denotes the empty word.
inline Presentation parse_presentation(std::string_view text) {
  return detail::PresentationParser(text).parse();
}

/// Canonical text form; parse_presentation(render(p)) reproduces the same
/// flattened relators.
inline std::string render(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ",";
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r) out += ", ";
    const auto& word = p.relators[r];
    if (word.empty()) {
      out += "1";
      continue;
    }
    std::size_t i = 0;
    bool first = true;
    while (i < word.size()) {
      std::size_t j = i;
      while (j < word.size() && word[j] == word[i]) ++j;
      const std::int64_t count = std::int64_t(j - i);
      const std::int32_t letter = word[i];
      if (!first) out += "*";
      first = false;
      out += p.generators[std::size_t(letter > 0 ? letter : -letter) - 1];
      if (letter < 0)
        out += "^-" + std::to_string(count);
      else if (count > 1)
        out += "^" + std::to_string(count);
      i = j;
    }
  }
  out += ">";
  return out;
}

}  // namespace epg
