#pragma once

#include "wmgroups/errors.hpp"
#include "wmgroups/free_word.hpp"
#include "wmgroups/int_matrix.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace wm {

/// Finite presentation < generators | relators >.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  std::uint32_t rank() const { return static_cast<std::uint32_t>(generators.size()); }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i];
    s += " |";
    for (std::size_t i = 0; i < relators.size(); ++i) s += (i ? ", " : " ") + relators[i].to_string(generators);
    return s + ">";
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Grammar: "< a, b | rel, rel, ... >". A relator is a word or "u = v"
/// (read as u v^-1). Words follow WordParser, so a^b = b^-1 a b.
inline Presentation parse_presentation(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };

  Presentation p;
  expect('<');
  for (;;) {
    skip();
    const std::size_t start = pos;
    if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    }
    if (start == pos) throw ParseError("expected generator name", pos);
    std::string name(text.substr(start, pos - start));
    for (const auto& g : p.generators)
      if (g == name) throw ParseError("duplicate generator '" + name + "'", start);
    p.generators.push_back(std::move(name));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect('|');

  skip();
  if (pos < text.size() && text[pos] != '>') {
    for (;;) {
      WordParser wp(text, p.generators);
      wp.set_position(pos);
      FreeWord w = wp.parse_word();
      pos = wp.position();
      skip();
      if (pos < text.size() && text[pos] == '=') {
        wp.set_position(pos + 1);
        w = w * wp.parse_word().inverse();
        pos = wp.position();
        skip();
      }
      p.relators.push_back(std::move(w));
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  expect('>');
  skip();
  if (pos != text.size()) throw ParseError("trailing characters after presentation", pos);
  return p;
}

/// Rows are relators, columns generators; entry = exponent sum.
inline IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (std::size_t j = 0; j < p.generators.size(); ++j)
      m(i, j) = p.relators[i].exponent_sum(static_cast<std::uint32_t>(j + 1));
  return m;
}

/// Invariant factors of the abelianization: torsion factors d > 1 in
/// divisibility order followed by one 0 per free summand. Empty means trivial.
inline std::vector<Integer> abelianization(const Presentation& p) {
  const auto d = smith_normal_form(exponent_matrix(p)).diagonal();
  std::vector<Integer> out;
  std::size_t nonzero = 0;
  for (const auto& x : d) {
    if (x == 0) continue;
    ++nonzero;
    if (x != 1) out.push_back(x);
  }
  for (std::size_t k = nonzero; k < p.generators.size(); ++k) out.push_back(0);
  return out;
}

}  // namespace wm
