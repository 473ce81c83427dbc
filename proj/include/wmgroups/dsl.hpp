#pragma once

// Text syntax for groups and elements.
//
// Groups:   Z | S(n) | A(n) | C(n) | altfin | lamp(G) | wr(A, B) | theta(A)
//           | tower(G) | thetalimit(A)
//
// Elements are parsed against a group:
//   expr  := term (['*'] term)*
//   term  := atom ('^' (['-'] digits | atom))*       a^b = b^-1 a b
//   atom  := '(' expr ')' | '[' expr ',' expr ']' | '1' | literal
//
// with literals per group:
//   Z                 integers, e.g. -3 (the group law is addition)
//   permutations      cycles, e.g. (1 2 3)(4 5) or (1,2); () is the identity
//   lamp(G)           sigma, fg(g), delta(g), (f ; m) with f = [v0 | c1 | v1 | ... | ck | vk]
//                     meaning v0 on n <= c1, v1 on (c1, c2], ..., vk = 1 right of ck
//   wr(A, B)          base(a), base(a, p) (value a at point p), top(b)
//   theta(A)          t, embed(a), wlevel(i, w) for w in W_i
//   tower, thetalimit at(i, x) for x in the i-th level

#include "wmgroups/group.hpp"
#include "wmgroups/verbal.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace wm {

namespace detail {

class DslCursor {
 public:
  explicit DslCursor(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  /// Consumes `word` when it appears as a whole identifier.
  bool accept_word(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) return false;
    const char next = peek_raw(word.size());
    if (std::isalnum(static_cast<unsigned char>(next)) || next == '_') return false;
    pos_ += word.size();
    return true;
  }
  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected integer");
    }
    if (pos_ - digits > 15) fail("integer too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }
  Integer big_integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected integer");
    }
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t position() const { return pos_; }
  void set_position(std::size_t p) { pos_ = p; }
  std::string_view text() const { return text_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Group parse_group_at(DslCursor& cur, const Limits& limits) {
  const std::size_t start = cur.position();
  const std::string name = cur.identifier();
  auto degree = [&] {
    cur.expect('(');
    const std::int64_t n = cur.integer();
    cur.expect(')');
    if (n < 1 || n > 64) cur.fail("degree out of range 1..64");
    return static_cast<std::uint32_t>(n);
  };
  auto one_arg = [&] {
    cur.expect('(');
    Group g = parse_group_at(cur, limits);
    cur.expect(')');
    return g;
  };
  if (name == "Z") return make_integers();
  if (name == "S") return make_symmetric(degree());
  if (name == "A") return make_alternating(degree());
  if (name == "C") return make_cyclic(degree());
  if (name == "altfin") return make_altfin();
  if (name == "lamp") return make_lamp(one_arg(), limits);
  if (name == "theta") return make_theta(one_arg(), limits);
  if (name == "tower") return make_tower(one_arg(), limits);
  if (name == "thetalimit") return make_theta_limit(one_arg(), limits);
  if (name == "wr") {
    cur.expect('(');
    Group a = parse_group_at(cur, limits);
    cur.expect(',');
    Group b = parse_group_at(cur, limits);
    cur.expect(')');
    return make_wreath(std::move(a), std::move(b), limits);
  }
  cur.set_position(start);
  cur.fail(name.empty() ? "expected group" : "unknown group constructor '" + name + "'");
}

inline void check_permutation_member(const GroupDesc& g, const Permutation& p, DslCursor& cur) {
  if (g.kind() == GroupKind::AltFin) {
    if (!p.is_even()) cur.fail("odd permutation is not in altfin");
    return;
  }
  if (p.largest_moved_point() > g.degree()) cur.fail("permutation moves points beyond degree " + std::to_string(g.degree()));
  if (g.name().rfind("S(", 0) == 0) return;
  if (g.name().rfind("A(", 0) == 0) {
    if (!p.is_even()) cur.fail("odd permutation is not in " + g.name());
    return;
  }
  const auto elems = group_closure(g.generators(), 1000000);
  if (!std::binary_search(elems.begin(), elems.end(), p)) cur.fail(p.to_string() + " is not in " + g.name());
}

Element parse_expr(const GroupDesc& g, DslCursor& cur);

inline bool is_expr_end(char c) {
  return c == '\0' || c == ',' || c == ')' || c == ']' || c == '|' || c == ';';
}

inline Element parse_lamp_literal(const GroupDesc& g, DslCursor& cur) {
  cur.expect('(');
  cur.expect('[');
  std::vector<Element> values{parse_expr(g.base(), cur)};
  std::vector<std::int64_t> breaks;
  while (cur.accept('|')) {
    breaks.push_back(cur.integer());
    cur.expect('|');
    values.push_back(parse_expr(g.base(), cur));
  }
  cur.expect(']');
  cur.expect(';');
  const std::int64_t m = cur.integer();
  cur.expect(')');
  try {
    return make_lamp_element(g, std::move(breaks), std::move(values), m);
  } catch (const PreconditionError& e) {
    cur.fail(e.what());
  }
}

inline Element parse_atom(const GroupDesc& g, DslCursor& cur) {
  const char c = cur.peek();
  if (c == '\0') cur.fail("unexpected end of expression");

  if (g.kind() == GroupKind::Integers && (c == '-' || std::isdigit(static_cast<unsigned char>(c))))
    return Element(cur.big_integer());

  if (detail::is_permutation_kind(g.kind()) && c == '(') {
    const std::size_t open = cur.position();
    cur.set_position(open + 1);
    const char next = cur.peek();
    cur.set_position(open);
    if (std::isdigit(static_cast<unsigned char>(next)) || next == ')') {
      std::size_t pos = cur.position();
      Permutation p;
      try {
        p = Permutation::parse_prefix(cur.text(), pos);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), pos);
      }
      cur.set_position(pos);
      check_permutation_member(g, p, cur);
      return Element(p);
    }
  }

  if (c == '(') {
    if (g.kind() == GroupKind::Lamp) {
      const std::size_t save = cur.position();
      cur.expect('(');
      const bool literal = cur.peek() == '[';
      cur.set_position(save);
      if (literal) {
        try {
          return parse_lamp_literal(g, cur);
        } catch (const ParseError&) {
          cur.set_position(save);
        }
      }
    }
    cur.expect('(');
    Element e = parse_expr(g, cur);
    cur.expect(')');
    return e;
  }
  if (c == '[') {
    cur.expect('[');
    Element a = parse_expr(g, cur);
    cur.expect(',');
    Element b = parse_expr(g, cur);
    cur.expect(']');
    return commutator(g, a, b);
  }
  if (c == '1') {
    cur.expect('1');
    return identity(g);
  }

  const std::size_t start = cur.position();
  const std::string word = cur.identifier();
  auto arg_open = [&] { cur.expect('('); };
  auto level_arg = [&](std::uint32_t max) {
    const std::int64_t i = cur.integer();
    if (i < 0 || static_cast<std::uint64_t>(i) > max)
      cur.fail("level " + std::to_string(i) + " outside 0.." + std::to_string(max));
    return static_cast<std::uint32_t>(i);
  };

  switch (g.kind()) {
    case GroupKind::Lamp:
      if (word == "sigma") return make_sigma(g);
      if (word == "fg" || word == "delta") {
        arg_open();
        Element v = parse_expr(g.base(), cur);
        cur.expect(')');
        return word == "fg" ? make_fg(g, v) : make_delta(g, v);
      }
      break;
    case GroupKind::RestrictedWreath:
      if (word == "base") {
        arg_open();
        Element v = parse_expr(g.base(), cur);
        Element point = identity(g.top());
        if (cur.accept(',')) point = parse_expr(g.top(), cur);
        cur.expect(')');
        return make_wreath_element(g, {{point, v}}, identity(g.top()));
      }
      if (word == "top") {
        arg_open();
        Element b = parse_expr(g.top(), cur);
        cur.expect(')');
        return rw_embed_top(g, b);
      }
      break;
    case GroupKind::Theta:
      if (word == "t") return Element(make_t(g));
      if (word == "embed") {
        arg_open();
        Element a = parse_expr(g.base(), cur);
        cur.expect(')');
        return Element(theta_embed(g, a));
      }
      if (word == "wlevel") {
        arg_open();
        const std::uint32_t i = level_arg(g.limits().wreath_level);
        cur.expect(',');
        Element w = parse_expr(g.w_level(i), cur);
        cur.expect(')');
        return Element(c_from_w(g, make_w(g, i, w)));
      }
      break;
    case GroupKind::Tower:
    case GroupKind::ThetaLimit:
      if (word == "at") {
        arg_open();
        const std::uint32_t i = level_arg(g.max_level());
        cur.expect(',');
        Element x = parse_expr(g.level(i), cur);
        cur.expect(')');
        return g.kind() == GroupKind::Tower ? tower_at(g, i, x) : limit_at(g, i, x);
      }
      break;
    default:
      break;
  }
  cur.set_position(start);
  cur.fail(word.empty() ? "unexpected character '" + std::string(1, c) + "'"
                        : "unknown name '" + word + "' for " + g.name());
}

inline Element parse_term(const GroupDesc& g, DslCursor& cur) {
  Element x = parse_atom(g, cur);
  while (cur.accept('^')) {
    const char c = cur.peek();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      x = pow(g, x, cur.integer());
    } else {
      const Element by = parse_atom(g, cur);
      x = mul(g, mul(g, inv(g, by), x), by);
    }
  }
  return x;
}

inline Element parse_expr(const GroupDesc& g, DslCursor& cur) {
  Element x = parse_term(g, cur);
  for (;;) {
    if (is_expr_end(cur.peek())) return x;
    cur.accept('*');
    x = mul(g, x, parse_term(g, cur));
  }
}

}  // namespace detail

inline Group parse_group(std::string_view text, const Limits& limits = {}) {
  detail::DslCursor cur(text);
  Group g = detail::parse_group_at(cur, limits);
  if (!cur.at_end()) cur.fail("trailing characters after group");
  return g;
}

inline Element parse_element(const GroupDesc& g, std::string_view text) {
  detail::DslCursor cur(text);
  Element x = detail::parse_expr(g, cur);
  if (!cur.at_end()) cur.fail("unexpected character '" + std::string(1, cur.peek()) + "'");
  return x;
}

/// Canonical text of an element; parse_element reads it back to an equal
/// element. Recognizable lamp elements print as sigma^k, fg(g), delta(g).
inline std::string format_element(const GroupDesc& g, const Element& a) {
  switch (g.kind()) {
    case GroupKind::Integers:
      return a.as<Integer>("Z").str();
    case GroupKind::FinitePermutation:
    case GroupKind::AltFin:
      return a.as<Permutation>(g.name().c_str()).to_string();
    case GroupKind::Lamp: {
      const auto& x = as_lamp(g, a);
      if (x.f.breaks.empty()) {
        if (x.shift == 0) return "1";
        return x.shift == 1 ? "sigma" : "sigma^" + std::to_string(x.shift);
      }
      if (auto v = lamp_delta_value(g, a)) return "delta(" + format_element(g.base(), *v) + ")";
      if (auto v = lamp_fg_value(g, a)) return "fg(" + format_element(g.base(), *v) + ")";
      std::string s = "([" + format_element(g.base(), x.f.values[0]);
      for (std::size_t i = 0; i < x.f.breaks.size(); ++i)
        s += " | " + std::to_string(x.f.breaks[i]) + " | " + format_element(g.base(), x.f.values[i + 1]);
      return s + "] ; " + std::to_string(x.shift) + ")";
    }
    case GroupKind::RestrictedWreath: {
      const auto& x = as_wreath(g, a);
      std::string s;
      for (const auto& [point, value] : x.f) {
        if (!s.empty()) s += ' ';
        s += "base(" + format_element(g.base(), value);
        if (!is_identity(g.top(), point)) s += ", " + format_element(g.top(), point);
        s += ")";
      }
      if (!is_identity(g.top(), x.top)) s += (s.empty() ? "" : " ") + ("top(" + format_element(g.top(), x.top) + ")");
      return s.empty() ? "1" : s;
    }
    case GroupKind::Theta: {
      const auto& x = as_c(g, a);
      if (auto v = theta_embed_value(g, x); v && !is_identity(g.base(), *v))
        return "embed(" + format_element(g.base(), *v) + ")";
      std::string s;
      auto add = [&](const std::string& part) { s += (s.empty() ? "" : " ") + part; };
      auto tpow = [](std::int64_t k) { return k == 1 ? std::string("t") : "t^" + std::to_string(k); };
      if (x.m != 0) add(tpow(x.m));
      if (!w_is_identity(g, x.w)) {
        const std::string w =
            "wlevel(" + std::to_string(x.w.level) + ", " + format_element(g.w_level(x.w.level), x.w.payload) + ")";
        if (x.depth > 0) {
          add(tpow(-static_cast<std::int64_t>(x.depth)));
          add(w);
          add(tpow(x.depth));
        } else {
          add(w);
        }
      }
      return s.empty() ? "1" : s;
    }
    case GroupKind::Tower: {
      const auto x = tower_canonical(g, a);
      if (x.level == 0 && is_identity(g.level(0), x.payload)) return "1";
      return "at(" + std::to_string(x.level) + ", " + format_element(g.level(x.level), x.payload) + ")";
    }
    case GroupKind::ThetaLimit: {
      const auto x = limit_canonical(g, a);
      if (x.level == 0 && is_identity(g.level(0), x.payload)) return "1";
      return "at(" + std::to_string(x.level) + ", " + format_element(g.level(x.level), x.payload) + ")";
    }
  }
  throw InvariantError("unknown group kind");
}

}  // namespace wm
