#pragma once

#include "wmgroups/errors.hpp"
#include "wmgroups/free_word.hpp"
#include "wmgroups/int_matrix.hpp"
#include "wmgroups/integer.hpp"
#include "wmgroups/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wm {

/// Homomorphism pi from the free group of rank r onto a permutation group Q,
/// given by the images of the generators.
class QuotientMap {
 public:
  enum class Kind { Finite, AltFin };

  static constexpr std::size_t default_order_cap = 100000;

  /// Q is the subgroup generated by `images`, enumerated up to `order_cap`.
  static QuotientMap finite(std::vector<Permutation> images, std::size_t order_cap = default_order_cap) {
    QuotientMap m(Kind::Finite, std::move(images));
    m.enumerate(order_cap);
    return m;
  }

  /// Q is the finitary alternating group; images must be even.
  static QuotientMap altfin(std::vector<Permutation> images) {
    for (const auto& p : images)
      if (!p.is_even()) throw PreconditionError("altfin image " + p.to_string() + " is odd");
    return QuotientMap(Kind::AltFin, std::move(images));
  }

  /// Parses "Z/2: x->s, y->s". The target before ':' is one of Z/n, S(n),
  /// A(n), perm, altfin. Images are products of cycle literals, '1' and the
  /// target's symbols: s for Z/n; s = (1 2) and c = (1 2 ... n) for S(n).
  /// Variables are x, y, z, w or x1, x2, ...
  static QuotientMap parse(std::string_view text, std::size_t order_cap = default_order_cap);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(images_.size()); }
  const std::vector<Permutation>& images() const { return images_; }
  const std::string& target() const { return target_; }

  Permutation evaluate(const FreeWord& w) const {
    Permutation p;
    for (const Letter& l : w.letters()) {
      if (l.gen > rank()) throw PreconditionError("word uses x" + std::to_string(l.gen) + " beyond rank");
      p = p * (l.exp > 0 ? images_[l.gen - 1] : inverse_images_[l.gen - 1]);
    }
    return p;
  }

  /// Elements of Q in breadth-first order from the identity, right
  /// multiplying by generator images in index order.
  const std::vector<Permutation>& elements() const {
    require_finite("element enumeration");
    return elements_;
  }

  std::size_t order() const { return elements().size(); }

  std::size_t index_of(const Permutation& q) const {
    require_finite("element indexing");
    auto it = index_.find(q);
    if (it == index_.end()) throw PreconditionError(q.to_string() + " is not in the quotient");
    return it->second;
  }

  /// Schreier transversal word of each element, aligned with elements().
  const std::vector<FreeWord>& transversal() const {
    require_finite("transversal");
    return transversal_;
  }

  /// Short display name: "1", a symbol name from parsing, or cycle notation.
  std::string element_name(const Permutation& q) const {
    if (q.is_identity()) return "1";
    for (const auto& [name, p] : symbols_)
      if (p == q) return name;
    return q.to_string();
  }

  void require_finite(const std::string& what) const {
    if (!is_finite()) throw CapabilityError(what + " needs a finite quotient");
  }

 private:
  QuotientMap(Kind kind, std::vector<Permutation> images) : kind_(kind), images_(std::move(images)) {
    for (const auto& p : images_) inverse_images_.push_back(p.inverse());
    target_ = kind == Kind::AltFin ? "altfin" : "perm";
  }

  void enumerate(std::size_t order_cap) {
    elements_ = {Permutation()};
    transversal_ = {FreeWord()};
    index_ = {{Permutation(), 0}};
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      for (std::uint32_t j = 0; j < rank(); ++j) {
        Permutation next = elements_[k] * images_[j];
        if (index_.count(next)) continue;
        if (elements_.size() >= order_cap)
          throw CapabilityError("quotient order exceeds cap " + std::to_string(order_cap));
        index_.emplace(next, elements_.size());
        transversal_.push_back(transversal_[k] * FreeWord::generator(j + 1));
        elements_.push_back(std::move(next));
      }
    }
  }

  Kind kind_;
  std::vector<Permutation> images_;
  std::vector<Permutation> inverse_images_;
  std::vector<Permutation> elements_;
  std::vector<FreeWord> transversal_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::pair<std::string, Permutation>> symbols_;
  std::string target_;
};

/// Element of the integral group ring Z[Q]; zero coefficients are never stored.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  static GroupRingElement monomial(const Permutation& q, const Integer& c = 1) {
    GroupRingElement r;
    if (c != 0) r.terms_.emplace(q, c);
    return r;
  }

  const std::map<Permutation, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Permutation& q) const {
    auto it = terms_.find(q);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Permutation& q, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(q, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [q, c] : o.terms_) add_term(q, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [q, c] : o.terms_) add_term(q, -c);
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  GroupRingElement operator-() const {
    GroupRingElement r;
    for (const auto& [q, c] : terms_) r.terms_.emplace(q, -c);
    return r;
  }

  /// q * (sum c_g g) = sum c_g (q g)
  GroupRingElement left_mul(const Permutation& q) const {
    if (q.is_identity()) return *this;
    GroupRingElement r;
    for (const auto& [g, c] : terms_) r.terms_.emplace(q * g, c);
    return r;
  }

  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [g, c] : a.terms_)
      for (const auto& [h, d] : b.terms_) r.add_term(g * h, c * d);
    return r;
  }

  /// Coefficients reduced into [0, p).
  GroupRingElement reduce_mod(const Integer& p) const {
    GroupRingElement r;
    for (const auto& [g, c] : terms_) r.add_term(g, mod_floor(c, p));
    return r;
  }

  /// "1 - s", "0", "2(1,2,3) + 1". Terms follow the quotient's element order
  /// when it is finite.
  std::string to_string(const QuotientMap& pi) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Permutation, Integer>> ordered(terms_.begin(), terms_.end());
    if (pi.is_finite())
      std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
        return pi.index_of(a.first) < pi.index_of(b.first);
      });
    std::string s;
    for (const auto& [g, c] : ordered) {
      const bool negative = c < 0;
      const Integer mag = negative ? Integer(-c) : c;
      if (s.empty())
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      const std::string name = pi.element_name(g);
      if (name == "1")
        s += mag.str();
      else
        s += (mag == 1 ? std::string() : mag.str()) + name;
    }
    return s;
  }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<Permutation, Integer> terms_;
};

/// Image (q, v) of a free word in F/N' with v in Z[Q]^r.
struct MagnusElement {
  Permutation q;
  std::vector<GroupRingElement> v;

  bool is_identity() const {
    return q.is_identity() && std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_zero(); });
  }

  std::string to_string(const QuotientMap& pi) const {
    std::string s = "(" + pi.element_name(q) + " ; (";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string(pi);
    return s + "))";
  }

  friend bool operator==(const MagnusElement&, const MagnusElement&) = default;
};

inline MagnusElement magnus_identity(std::uint32_t rank) { return {Permutation(), std::vector<GroupRingElement>(rank)}; }

/// (q, v)(q', v') = (q q', v + q v')
inline MagnusElement magnus_mul(const MagnusElement& a, const MagnusElement& b) {
  if (a.v.size() != b.v.size()) throw PreconditionError("Magnus elements of different rank");
  MagnusElement r{a.q * b.q, a.v};
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i].left_mul(a.q);
  return r;
}

/// (q, v)^-1 = (q^-1, -q^-1 v)
inline MagnusElement magnus_inv(const MagnusElement& a) {
  MagnusElement r{a.q.inverse(), {}};
  for (const auto& x : a.v) r.v.push_back(-x.left_mul(r.q));
  return r;
}

inline MagnusElement magnus_pow(const MagnusElement& a, std::int64_t n) {
  MagnusElement base = n < 0 ? magnus_inv(a) : a;
  MagnusElement r = magnus_identity(static_cast<std::uint32_t>(a.v.size()));
  for (std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n); k; k >>= 1) {
    if (k & 1) r = magnus_mul(r, base);
    base = magnus_mul(base, base);
  }
  return r;
}

/// Fox derivative of w with respect to x_i, in Z[Q].
inline GroupRingElement fox_derivative(const FreeWord& w, std::uint32_t i, const QuotientMap& pi) {
  if (i < 1 || i > pi.rank())
    throw PreconditionError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(pi.rank()));
  GroupRingElement d;
  Permutation prefix;
  for (const Letter& l : w.letters()) {
    const Permutation& img = pi.images().at(l.gen - 1);
    if (l.exp > 0) {
      if (l.gen == i) d.add_term(prefix, 1);
      prefix = prefix * img;
    } else {
      prefix = prefix * img.inverse();
      if (l.gen == i) d.add_term(prefix, -1);
    }
  }
  return d;
}

inline MagnusElement magnus_image(const FreeWord& w, const QuotientMap& pi) {
  MagnusElement m{pi.evaluate(w), {}};
  for (std::uint32_t i = 1; i <= pi.rank(); ++i) m.v.push_back(fox_derivative(w, i, pi));
  return m;
}

inline bool in_Nprime(const FreeWord& w, const QuotientMap& pi) { return magnus_image(w, pi).is_identity(); }

inline bool in_Fprime(const FreeWord& w) {
  for (std::uint32_t g = 1; g <= w.max_generator(); ++g)
    if (w.exponent_sum(g) != 0) return false;
  return true;
}

/// Words t x_j rep(t x_j)^-1 over the breadth-first transversal; trivial
/// words dropped.
inline std::vector<FreeWord> schreier_generators(const QuotientMap& pi) {
  if (pi.rank() < 2) throw PreconditionError("Schreier generators need rank at least 2");
  pi.require_finite("Schreier generators");
  const auto& elems = pi.elements();
  const auto& reps = pi.transversal();
  std::vector<FreeWord> out;
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (std::uint32_t j = 1; j <= pi.rank(); ++j) {
      const std::size_t target = pi.index_of(elems[k] * pi.images()[j - 1]);
      FreeWord s = reps[k] * FreeWord::generator(j) * reps[target].inverse();
      if (!s.empty()) out.push_back(std::move(s));
    }
  return out;
}

/// Position of (block i, element q) in Z^{|Q| r}.
inline std::vector<Integer> flatten(const std::vector<GroupRingElement>& v, const QuotientMap& pi) {
  const std::size_t n = pi.order();
  std::vector<Integer> out(n * v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& [q, c] : v[i].terms()) out[i * n + pi.index_of(q)] = c;
  return out;
}

struct FiberLattice {
  IntMatrix basis;      // one row per Schreier generator
  IntMatrix canonical;  // Hermite form, nonzero rows only
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
};

inline FiberLattice fiber_lattice(const QuotientMap& pi) {
  pi.require_finite("fiber lattice");
  const auto gens = schreier_generators(pi);
  const std::size_t width = pi.order() * pi.rank();
  std::vector<std::vector<Integer>> rows;
  for (const auto& s : gens) {
    MagnusElement m = magnus_image(s, pi);
    if (!m.q.is_identity()) throw InvariantError("Schreier generator " + s.to_string() + " not in N");
    rows.push_back(flatten(m.v, pi));
  }
  FiberLattice f;
  f.basis = IntMatrix::from_rows(rows, width);
  f.canonical = hermite_normal_form(f.basis);
  f.rank = f.canonical.rows();
  for (const auto& d : smith_normal_form(f.basis).diagonal())
    if (d != 0) f.invariant_factors.push_back(d);
  if (f.invariant_factors.size() != f.rank) throw InvariantError("Hermite and Smith ranks disagree");
  return f;
}

struct CrystallographicReport {
  std::size_t order = 0;
  std::size_t rank = 0;
  std::vector<IntMatrix> holonomy;  // one per generator image, rows = images of basis rows
  bool faithful = false;
  bool verdict = false;
  bool degenerate = false;
};

namespace detail {
/// Left multiplication by q on a flattened vector.
inline std::vector<Integer> act_flat(const std::vector<Integer>& v, const Permutation& q, const QuotientMap& pi) {
  const auto& elems = pi.elements();
  const std::size_t n = elems.size();
  std::vector<Integer> out(v.size());
  for (std::size_t b = 0; b < v.size() / n; ++b)
    for (std::size_t k = 0; k < n; ++k)
      if (v[b * n + k] != 0) out[b * n + pi.index_of(q * elems[k])] = v[b * n + k];
  return out;
}
}  // namespace detail

inline CrystallographicReport crystallographic_report(const QuotientMap& pi) {
  pi.require_finite("crystallographic report");
  if (pi.rank() < 2) throw PreconditionError("crystallographic report needs rank at least 2");
  const FiberLattice lattice = fiber_lattice(pi);
  CrystallographicReport rep;
  rep.order = pi.order();
  rep.rank = lattice.rank;
  rep.degenerate = rep.order == 1;

  for (const Permutation& g : pi.images()) {
    IntMatrix h(lattice.rank, lattice.rank);
    for (std::size_t i = 0; i < lattice.rank; ++i) {
      auto coords = solve_in_hermite_basis(lattice.canonical, detail::act_flat(lattice.canonical.row(i), g, pi));
      if (!coords) throw InvariantError("lattice is not stable under " + g.to_string());
      for (std::size_t j = 0; j < lattice.rank; ++j) h(i, j) = (*coords)[j];
    }
    rep.holonomy.push_back(std::move(h));
  }

  rep.faithful = true;
  for (const Permutation& q : pi.elements()) {
    if (q.is_identity()) continue;
    bool fixes = true;
    for (std::size_t i = 0; i < lattice.rank && fixes; ++i) {
      const auto row = lattice.canonical.row(i);
      fixes = detail::act_flat(row, q, pi) == row;
    }
    if (fixes) {
      rep.faithful = false;
      break;
    }
  }
  rep.verdict = rep.faithful;
  return rep;
}

/// True when the image of w is trivial or has no power 2..nmax that is trivial.
inline bool torsion_probe_magnus(const FreeWord& w, const QuotientMap& pi, std::uint32_t nmax) {
  if (nmax < 2) throw PreconditionError("nmax must be at least 2");
  const MagnusElement x = magnus_image(w, pi);
  if (x.is_identity()) return true;
  MagnusElement p = x;
  for (std::uint32_t n = 2; n <= nmax; ++n) {
    p = magnus_mul(p, x);
    if (p.is_identity()) return false;
  }
  return true;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// The finite group (F_p[Q])^r semidirect Q.
class ModPQuotient {
 public:
  ModPQuotient(QuotientMap pi, std::uint64_t p) : pi_(std::move(pi)), p_(p) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    pi_.require_finite("mod-p quotient");
  }

  const QuotientMap& quotient() const { return pi_; }
  std::uint64_t prime() const { return p_; }

  Integer order() const {
    Integer o = pi_.order();
    for (std::size_t k = 0; k < pi_.order() * pi_.rank(); ++k) o *= p_;
    return o;
  }

  MagnusElement reduce(const MagnusElement& m) const {
    MagnusElement r{m.q, {}};
    for (const auto& x : m.v) r.v.push_back(x.reduce_mod(p_));
    return r;
  }

  MagnusElement image(const FreeWord& w) const { return reduce(magnus_image(w, pi_)); }
  MagnusElement mul(const MagnusElement& a, const MagnusElement& b) const { return reduce(magnus_mul(a, b)); }

 private:
  QuotientMap pi_;
  std::uint64_t p_;
};

inline QuotientMap QuotientMap::parse(std::string_view text, std::size_t order_cap) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected ':' after the target", text.size());
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string target(trim(text.substr(0, colon)));

  std::vector<std::pair<std::string, Permutation>> symbols;
  std::optional<std::size_t> expected_order;
  Kind kind = Kind::Finite;
  auto parse_n = [&](std::size_t from, char close) -> std::uint32_t {
    std::size_t end = target.find(close, from);
    std::string digits = target.substr(from, end == std::string::npos ? std::string::npos : end - from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
        (close && end + 1 != target.size()))
      throw ParseError("bad quotient target '" + target + "'", 0);
    const unsigned long n = std::stoul(digits);
    if (n < 1 || n > 1000) throw ParseError("quotient degree out of range", 0);
    return static_cast<std::uint32_t>(n);
  };
  auto full_cycle = [](std::uint32_t n) {
    std::vector<Permutation::Point> pts;
    for (std::uint32_t k = 1; k <= n; ++k) pts.push_back(k);
    return n >= 2 ? Permutation::cycle(pts) : Permutation();
  };
  auto factorial = [](std::uint32_t n) {
    std::size_t f = 1;
    for (std::uint32_t k = 2; k <= n && f <= 10000000; ++k) f *= k;
    return f;
  };
  if (target.rfind("Z/", 0) == 0) {
    const std::uint32_t n = parse_n(2, '\0');
    symbols.emplace_back("s", full_cycle(n));
    expected_order = n;
  } else if (target.rfind("S(", 0) == 0) {
    const std::uint32_t n = parse_n(2, ')');
    if (n >= 2) symbols.emplace_back("s", Permutation::cycle({1, 2}));
    symbols.emplace_back("c", full_cycle(n));
    expected_order = factorial(n);
  } else if (target.rfind("A(", 0) == 0) {
    const std::uint32_t n = parse_n(2, ')');
    expected_order = n >= 2 ? factorial(n) / 2 : 1;
  } else if (target == "altfin") {
    kind = Kind::AltFin;
  } else if (target != "perm") {
    throw ParseError("unknown quotient target '" + target + "'", 0);
  }

  // Images: "x->s, y->(1,2,3) s".
  std::vector<std::optional<Permutation>> images;
  std::size_t pos = colon + 1;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const char* letters[] = {"x", "y", "z", "w"};
  for (;;) {
    skip();
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string var(text.substr(start, pos - start));
    std::uint32_t gen = 0;
    for (std::uint32_t k = 0; k < 4; ++k)
      if (var == letters[k]) gen = k + 1;
    if (gen == 0 && var.size() > 1 && var[0] == 'x' &&
        std::all_of(var.begin() + 1, var.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      gen = static_cast<std::uint32_t>(std::stoul(var.substr(1)));
    if (gen == 0 || gen > 64) throw ParseError("bad generator variable '" + var + "'", start);
    skip();
    if (text.substr(pos, 2) != "->") throw ParseError("expected '->'", pos);
    pos += 2;
    Permutation img;
    bool any = false;
    for (;;) {
      skip();
      if (pos >= text.size() || text[pos] == ',') break;
      Permutation factor;
      if (text[pos] == '*') {
        ++pos;
        continue;
      } else if (text[pos] == '(') {
        factor = Permutation::parse_prefix(text, pos);
      } else if (text[pos] == '1') {
        ++pos;
      } else {
        std::size_t s0 = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string sym(text.substr(s0, pos - s0));
        auto it = std::find_if(symbols.begin(), symbols.end(), [&](const auto& e) { return e.first == sym; });
        if (it == symbols.end()) throw ParseError("unknown symbol '" + sym + "'", s0);
        factor = it->second;
      }
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        int sign = 1;
        if (pos < text.size() && text[pos] == '-') {
          sign = -1;
          ++pos;
        }
        std::size_t d0 = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (d0 == pos || pos - d0 > 6) throw ParseError("expected exponent", d0);
        const long e = std::stol(std::string(text.substr(d0, pos - d0)));
        Permutation base = sign < 0 ? factor.inverse() : factor;
        factor = Permutation();
        for (long k = 0; k < e; ++k) factor = factor * base;
      }
      img = img * factor;
      any = true;
    }
    if (!any) throw ParseError("missing image for '" + var + "'", pos);
    if (images.size() < gen) images.resize(gen);
    if (images[gen - 1]) throw ParseError("generator '" + var + "' mapped twice", start);
    images[gen - 1] = img;
    skip();
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  if (images.empty()) throw ParseError("no generator images", text.size());
  std::vector<Permutation> imgs;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!images[k]) throw ParseError("no image for x" + std::to_string(k + 1), text.size());
    imgs.push_back(*images[k]);
  }

  QuotientMap m = kind == Kind::AltFin ? altfin(std::move(imgs)) : finite(std::move(imgs), order_cap);
  if (expected_order && m.order() != *expected_order)
    throw PreconditionError("images generate a group of order " + std::to_string(m.order()) + ", not " + target);
  m.symbols_ = std::move(symbols);
  m.target_ = target;
  return m;
}

}  // namespace wm
