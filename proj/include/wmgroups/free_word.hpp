#pragma once

#include "wmgroups/errors.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wm {

/// x_gen^exp with gen >= 1 and exp = +-1.
struct Letter {
  std::uint32_t gen = 1;
  int exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in x_1, ..., x_r. The empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;

  explicit FreeWord(const std::vector<Letter>& letters) {
    for (const Letter& l : letters) push(l);
  }

  static FreeWord generator(std::uint32_t gen, int exp = 1) {
    if (gen == 0) throw PreconditionError("generator indices start at 1");
    return FreeWord({Letter{gen, exp > 0 ? 1 : -1}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::uint32_t max_generator() const {
    std::uint32_t m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
  }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    for (const Letter& l : b.letters_) r.push(l);
    return r;
  }

  FreeWord inverse() const {
    FreeWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back({it->gen, -it->exp});
    return r;
  }

  FreeWord pow(std::int64_t n) const {
    const FreeWord base = n < 0 ? inverse() : *this;
    FreeWord r;
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) r = r * base;
    return r;
  }

  /// Sum of exponents of x_gen.
  std::int64_t exponent_sum(std::uint32_t gen) const {
    std::int64_t s = 0;
    for (const Letter& l : letters_)
      if (l.gen == gen) s += l.exp;
    return s;
  }

  /// Prints with the given generator names (index gen - 1), collecting runs
  /// into powers: "x1 x2^-1 x1^2". The identity prints as "1".
  std::string to_string(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      const std::int64_t power = static_cast<std::int64_t>(j - i) * letters_[i].exp;
      if (!s.empty()) s += ' ';
      const std::uint32_t g = letters_[i].gen;
      s += g <= names.size() ? names[g - 1] : "x" + std::to_string(g);
      if (power != 1) s += "^" + std::to_string(power);
      i = j;
    }
    return s;
  }

  std::string to_string() const { return to_string({}); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) { return a.letters_ <=> b.letters_; }

 private:
  void push(const Letter& l) {
    if (l.gen == 0) throw PreconditionError("generator indices start at 1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  std::vector<Letter> letters_;
};

inline FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return a * b * a.inverse() * b.inverse();
}

/// Default generator names x1, ..., xr.
inline std::vector<std::string> default_generator_names(std::uint32_t rank) {
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

/// Recursive-descent parser for words over named generators.
///
///   word     := factor*                  (juxtaposition, optional '*')
///   factor   := atom ('^' exponent)*
///   exponent := ['-'] digits | atom       (a^b = b^-1 a b)
///   atom     := name | '1' | '(' word ')' | '[' word ',' word ']'
///
/// Names are matched longest-first, so "ab" reads as a b when both are
/// generators. Parsing stops at ',', ')', ']', '|', '>', '=' or end of input.
class WordParser {
 public:
  /// `names[i]` denotes generator i + 1; `aliases` adds extra spellings.
  WordParser(std::string_view text, std::vector<std::string> names,
             std::vector<std::pair<std::string, std::uint32_t>> aliases = {})
      : text_(text) {
    for (std::size_t i = 0; i < names.size(); ++i)
      symbols_.emplace_back(std::move(names[i]), static_cast<std::uint32_t>(i + 1));
    for (auto& a : aliases) symbols_.push_back(std::move(a));
  }

  FreeWord parse_word() {
    FreeWord w;
    for (;;) {
      skip_space();
      if (at_end() || is_terminator(peek())) return w;
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      w = w * parse_factor();
    }
  }

  /// Parses the whole text as one word.
  FreeWord parse_all() {
    FreeWord w = parse_word();
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return w;
  }

  std::size_t position() const { return pos_; }
  void set_position(std::size_t p) { pos_ = p; }

 private:
  static bool is_terminator(char c) { return c == ',' || c == ')' || c == ']' || c == '|' || c == '>' || c == '='; }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  FreeWord parse_factor() {
    FreeWord base = parse_atom();
    for (;;) {
      skip_space();
      if (at_end() || peek() != '^') return base;
      ++pos_;
      skip_space();
      if (!at_end() && (peek() == '-' || peek() == '+' || std::isdigit(static_cast<unsigned char>(peek())))) {
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
          sign = peek() == '-' ? -1 : 1;
          ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        std::int64_t n = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          n = n * 10 + (peek() - '0');
          if (n > 1000000) fail("exponent too large");
          ++pos_;
        }
        base = base.pow(sign * n);
      } else {
        const FreeWord by = parse_atom();
        base = by.inverse() * base * by;
      }
    }
  }

  FreeWord parse_atom() {
    skip_space();
    if (at_end()) fail("unexpected end of word");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      FreeWord w = parse_word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      FreeWord a = parse_word();
      expect(',');
      FreeWord b = parse_word();
      expect(']');
      return commutator(a, b);
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    std::size_t best = 0;
    std::uint32_t gen = 0;
    for (const auto& [name, g] : symbols_) {
      if (name.size() > best && text_.substr(pos_, name.size()) == name) {
        best = name.size();
        gen = g;
      }
    }
    if (best == 0) fail("unknown generator");
    pos_ += best;
    return FreeWord::generator(gen);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, std::uint32_t>> symbols_;
};

/// Parses e.g. "x1 x2^-1 x1^2" over x1..x_rank. For rank <= 4 the letters
/// x, y, z, w are accepted as aliases of x1..x4.
inline FreeWord parse_free_word(std::string_view text, std::uint32_t rank) {
  std::vector<std::pair<std::string, std::uint32_t>> aliases;
  if (rank <= 4) {
    const char* letters[] = {"x", "y", "z", "w"};
    for (std::uint32_t i = 0; i < rank; ++i) aliases.emplace_back(letters[i], i + 1);
  }
  WordParser p(text, default_generator_names(rank), std::move(aliases));
  return p.parse_all();
}

}  // namespace wm
