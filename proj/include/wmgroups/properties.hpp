#pragma once

// Randomized property suites shared by the test binaries and the CLI
// selftest. Each suite returns sample and failure counts plus the first
// failing case.

#include "wmgroups/coset_table.hpp"
#include "wmgroups/dsl.hpp"
#include "wmgroups/group.hpp"
#include "wmgroups/int_matrix.hpp"
#include "wmgroups/magnus.hpp"
#include "wmgroups/presentation.hpp"
#include "wmgroups/sampling.hpp"
#include "wmgroups/verbal.hpp"

#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace wm::props {

struct PropertyResult {
  std::string name;
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && samples > 0; }

  void check(bool pass, const std::function<std::string()>& describe) {
    ++samples;
    if (pass) return;
    if (failures++ == 0) first_failure = describe();
  }

  /// Runs `body` once as a sample; an exception counts as a failure.
  void guarded(const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] { return std::string("exception: ") + e.what(); });
    }
  }
};

/// Limits roomy enough for products, conjugates and tenth powers of sampled
/// theta elements (each power of t^-1 w climbs one W level).
inline Limits roomy_limits() {
  Limits l;
  l.wreath_level = 16;
  l.desc_depth = 40;
  return l;
}

inline std::string show(const GroupDesc& g, const Element& x) {
  try {
    return format_element(g, x);
  } catch (const std::exception&) {
    return "<unprintable>";
  }
}

// ---------------------------------------------------------------------------
// Group constructions

/// Associativity, identity and inverses.
inline PropertyResult group_axioms(const GroupDesc& g, std::uint64_t seed, std::size_t n) {
  PropertyResult r{"group axioms in " + g.name(), 0, 0, {}};
  Rng rng(seed);
  const Element e = identity(g);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const Element x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
      r.check(eq(g, mul(g, mul(g, x, y), z), mul(g, x, mul(g, y, z))),
              [&] { return "(xy)z != x(yz) for x = " + show(g, x) + ", y = " + show(g, y) + ", z = " + show(g, z); });
      r.check(eq(g, mul(g, e, x), x) && eq(g, mul(g, x, e), x), [&] { return "identity fails on " + show(g, x); });
      r.check(is_identity(g, mul(g, x, inv(g, x))) && is_identity(g, mul(g, inv(g, x), x)),
              [&] { return "inverse fails on " + show(g, x); });
    });
  return r;
}

/// [f_g, sigma] = delta_g in lamp(G).
inline PropertyResult lamp_commutator_identity(const GroupDesc& lamp, std::uint64_t seed, std::size_t n) {
  PropertyResult r{"[f_g, sigma] = delta_g in " + lamp.name(), 0, 0, {}};
  Rng rng(seed);
  const Element sigma = make_sigma(lamp);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const Element g = random_element(lamp.base(), rng);
      r.check(eq(lamp, commutator(lamp, make_fg(lamp, g), sigma), make_delta(lamp, g)),
              [&] { return "fails for g = " + show(lamp.base(), g); });
    });
  return r;
}

/// Trichotomy and product closure of the positive cone, conjugation
/// invariance when the order is two-sided, and order extension along the
/// delta embedding for lamp groups and the A embedding for theta groups.
inline PropertyResult order_cone(const GroupDesc& g, std::uint64_t seed, std::size_t n) {
  PropertyResult r{"positive cone of " + g.name(), 0, 0, {}};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const Element x = random_element(g, rng), y = random_element(g, rng);
      const bool px = is_positive(g, x);
      const bool ex = is_identity(g, x);
      const bool nx = is_positive(g, inv(g, x));
      r.check(int(px) + int(ex) + int(nx) == 1, [&] { return "trichotomy fails for " + show(g, x); });
      if (px && is_positive(g, y))
        r.check(is_positive(g, mul(g, x, y)),
                [&] { return "product of positives " + show(g, x) + " and " + show(g, y) + " is not positive"; });
      if (g.two_sided() && px)
        r.check(is_positive(g, conj(g, x, y)),
                [&] { return "conjugate of " + show(g, x) + " by " + show(g, y) + " is not positive"; });
      if (g.kind() == GroupKind::Lamp) {
        const Element a = random_element(g.base(), rng);
        r.check(is_positive(g, make_delta(g, a)) == is_positive(g.base(), a),
                [&] { return "delta embedding changes the sign of " + show(g.base(), a); });
      }
      if (g.kind() == GroupKind::Theta) {
        const Element a = random_element(g.base(), rng);
        r.check(is_positive(g, Element(theta_embed(g, a))) == is_positive(g.base(), a),
                [&] { return "A embedding changes the sign of " + show(g.base(), a); });
      }
    });
  return r;
}

/// No sampled nontrivial element has order <= bound.
inline PropertyResult torsion_free(const GroupDesc& g, std::uint64_t seed, std::size_t n, std::uint64_t bound = 10) {
  PropertyResult r{"no torsion up to order " + std::to_string(bound) + " in " + g.name(), 0, 0, {}};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const Element x = random_nontrivial(g, rng);
      const auto o = order_of_element(g, x, bound);
      r.check(!o, [&] { return show(g, x) + " has order " + std::to_string(o.value_or(0)); });
    });
  return r;
}

/// Generators of tower levels 0..max_level: the base generators at level 0,
/// then sigma and f_g for every generator g of the previous level.
inline std::vector<Element> tower_generators(const GroupDesc& t, std::uint32_t max_level) {
  const GroupDesc& base = t.level(0);
  std::vector<Element> level_gens;
  switch (base.kind()) {
    case GroupKind::Integers: level_gens.push_back(Element(Integer(1))); break;
    case GroupKind::FinitePermutation:
      for (const auto& p : base.generators()) level_gens.push_back(Element(p));
      break;
    default: throw CapabilityError("tower generators need Z or a permutation group at the bottom");
  }
  std::vector<Element> out;
  for (const auto& x : level_gens) out.push_back(tower_at(t, 0, x));
  for (std::uint32_t i = 1; i <= max_level; ++i) {
    const GroupDesc& l = t.level(i);
    std::vector<Element> next{make_sigma(l)};
    for (const auto& x : level_gens) next.push_back(make_fg(l, x));
    for (const auto& x : next) out.push_back(tower_at(t, i, x));
    level_gens = std::move(next);
  }
  return out;
}

/// perfectness_witness(x) = (f, s) with [f, s] equal to x lifted one level.
inline PropertyResult tower_witnesses(const GroupDesc& t, std::uint32_t max_level) {
  PropertyResult r{"perfectness witnesses in " + t.name() + " up to level " + std::to_string(max_level), 0, 0, {}};
  for (const Element& x : tower_generators(t, max_level))
    r.guarded([&] {
      const auto [f, s] = perfectness_witness(t, x);
      r.check(eq(t, commutator(t, f, s), tower_lift(t, x)), [&] { return "witness fails for " + show(t, x); });
    });
  return r;
}

/// Four-conjugate expression of [x, y] in A wr B.
inline PropertyResult wreath_witness(const GroupDesc& w, std::uint64_t seed, std::size_t n) {
  PropertyResult r{"normal closure witness in " + w.name(), 0, 0, {}};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const Element x = random_element(w.base(), rng), y = random_element(w.base(), rng);
      const Element b = random_nontrivial(w.top(), rng);
      const ConjugateWord word = normal_closure_witness(w, x, y, b);
      const Element value = evaluate_conjugate_word(w, word, rw_embed_top(w, b));
      r.check(word.terms.size() == 4 && eq(w, value, commutator(w, rw_embed_base(w, x), rw_embed_base(w, y))),
              [&] { return "witness fails for x = " + show(w.base(), x) + ", y = " + show(w.base(), y); });
    });
  return r;
}

/// Two-step witness inside theta(A).
inline PropertyResult theta_witness(const GroupDesc& c, std::uint64_t seed, std::size_t n) {
  PropertyResult r{"normal closure witness in " + c.name(), 0, 0, {}};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const Element a = random_nontrivial(c.abar(), rng);
      const Element x = random_element(c.abar(), rng), y = random_element(c.abar(), rng);
      const ConjugateWord word = theta_normal_closure_witness(c, a, x, y);
      const auto embed = [&](const Element& v) { return Element(c_from_w(c, WElement{0, v})); };
      r.check(eq(c, evaluate_conjugate_word(c, word, embed(a)), commutator(c, embed(x), embed(y))),
              [&] { return "witness fails for a = " + show(c.abar(), a); });
    });
  return r;
}

/// t w t^-1 = phi(w) for w in W_0..W_max_level.
inline PropertyResult hnn_relation(const GroupDesc& c, std::uint64_t seed, std::size_t n, std::uint32_t max_level) {
  PropertyResult r{"t w t^-1 = phi(w) in " + c.name(), 0, 0, {}};
  Rng rng(seed);
  const Element t = Element(make_t(c));
  const Element ti = inv(c, t);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const auto level = static_cast<std::uint32_t>(k % (max_level + 1));
      const Element payload = random_element(c.w_level(level), rng);
      const WElement w = make_w(c, level, payload);
      const Element cw = Element(c_from_w(c, w));
      r.check(eq(c, mul(c, mul(c, t, cw), ti), Element(c_from_w(c, phi(c, w)))),
              [&] { return "relation fails for w = " + show(c.w_level(level), payload); });
    });
  return r;
}

/// Products of random words of elements agree under left, right and
/// balanced association.
inline PropertyResult association_independence(const GroupDesc& g, std::uint64_t seed, std::size_t n,
                                               std::size_t word_length = 5) {
  PropertyResult r{"association order independence in " + g.name(), 0, 0, {}};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      std::vector<Element> xs;
      for (std::size_t i = 0; i < word_length; ++i) xs.push_back(random_element(g, rng));
      Element left = identity(g);
      for (const auto& x : xs) left = mul(g, left, x);
      Element right = identity(g);
      for (auto it = xs.rbegin(); it != xs.rend(); ++it) right = mul(g, *it, right);
      std::function<Element(std::size_t, std::size_t)> balanced = [&](std::size_t lo, std::size_t hi) {
        if (hi - lo == 1) return xs[lo];
        const std::size_t mid = (lo + hi) / 2;
        return mul(g, balanced(lo, mid), balanced(mid, hi));
      };
      const Element mid = balanced(0, xs.size());
      r.check(eq(g, left, right) && eq(g, left, mid), [&] { return "products disagree: " + show(g, left) + " vs " + show(g, right); });
    });
  return r;
}

// ---------------------------------------------------------------------------
// Magnus representation

struct MagnusFixture {
  std::string name;
  QuotientMap pi;
};

/// r = 2 over Z/2, r = 2 over S3, r = 3 over Z/2.
inline std::vector<MagnusFixture> finite_magnus_fixtures() {
  return {{"r=2, Q=Z/2", QuotientMap::parse("Z/2: x->s, y->s")},
          {"r=2, Q=S3", QuotientMap::parse("S(3): x->s, y->c")},
          {"r=3, Q=Z/2", QuotientMap::parse("Z/2: x->s, y->s, z->s")}};
}

/// Rank 2 quotient onto altfin through two random even permutations of 1..7.
inline QuotientMap altfin_sample_quotient(std::uint64_t seed) {
  Rng rng(seed);
  return QuotientMap::altfin({random_even_permutation(rng, 7), random_even_permutation(rng, 7)});
}

/// magnus_image is a homomorphism, respects inverses, and satisfies the Fox
/// product rule.
inline PropertyResult magnus_homomorphism(const QuotientMap& pi, const std::string& label, std::uint64_t seed,
                                          std::size_t n, std::size_t max_length = 40) {
  PropertyResult r{"Magnus homomorphism and Fox product rule, " + label, 0, 0, {}};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const FreeWord u = random_word(rng, pi.rank(), max_length), v = random_word(rng, pi.rank(), max_length);
      const MagnusElement mu = magnus_image(u, pi), mv = magnus_image(v, pi);
      r.check(magnus_image(u * v, pi) == magnus_mul(mu, mv),
              [&] { return "image(uv) != image(u) image(v) for u = " + u.to_string() + ", v = " + v.to_string(); });
      r.check(magnus_image(u.inverse(), pi) == magnus_inv(mu), [&] { return "image(u^-1) != image(u)^-1 for u = " + u.to_string(); });
      const Permutation pu = pi.evaluate(u);
      for (std::uint32_t i = 1; i <= pi.rank(); ++i)
        r.check(fox_derivative(u * v, i, pi) == fox_derivative(u, i, pi) + fox_derivative(v, i, pi).left_mul(pu),
                [&] { return "Fox product rule fails in x" + std::to_string(i) + " for u = " + u.to_string(); });
    });
  return r;
}

/// For products n of Schreier generators: [n1, n2] lies in N', the images of
/// n1 and n2 commute, and n lies in N' exactly when its exponent vector over
/// the Schreier basis vanishes.
inline PropertyResult magnus_kernel(const QuotientMap& pi, const std::string& label, std::uint64_t seed, std::size_t n) {
  PropertyResult r{"N' membership of Schreier products, " + label, 0, 0, {}};
  Rng rng(seed);
  const auto gens = schreier_generators(pi);
  auto product = [&](std::vector<std::int64_t>& counts) {
    FreeWord w;
    const auto len = detail::uniform(rng, 1, 4);
    for (std::int64_t i = 0; i < len; ++i) {
      const auto j = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<std::int64_t>(gens.size()) - 1));
      const int e = detail::uniform(rng, 0, 1) ? 1 : -1;
      counts[j] += e;
      w = w * (e > 0 ? gens[j] : gens[j].inverse());
    }
    return w;
  };
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      std::vector<std::int64_t> c1(gens.size()), c2(gens.size());
      const FreeWord n1 = product(c1), n2 = product(c2);
      r.check(in_Nprime(commutator(n1, n2), pi), [&] { return "[n1, n2] not in N' for n1 = " + n1.to_string(); });
      const MagnusElement m1 = magnus_image(n1, pi), m2 = magnus_image(n2, pi);
      r.check(m1.q.is_identity() && magnus_mul(m1, m2) == magnus_mul(m2, m1),
              [&] { return "fiber images do not commute for n1 = " + n1.to_string(); });
      const bool zero = std::all_of(c1.begin(), c1.end(), [](std::int64_t x) { return x == 0; });
      r.check(in_Nprime(n1, pi) == zero, [&] { return "N' membership disagrees with the Schreier exponents of " + n1.to_string(); });
    });
  return r;
}

/// No sampled word with nontrivial image has order <= nmax.
inline PropertyResult magnus_torsion(const QuotientMap& pi, const std::string& label, std::uint64_t seed,
                                     std::size_t n, std::uint32_t nmax = 10) {
  PropertyResult r{"no torsion up to order " + std::to_string(nmax) + " in F/N', " + label, 0, 0, {}};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      FreeWord w;
      do w = random_word(rng, pi.rank(), 40);
      while (magnus_image(w, pi).is_identity());
      r.check(torsion_probe_magnus(w, pi, nmax), [&] { return w.to_string() + " has small order"; });
    });
  return r;
}

/// Lattice rank |Q|(r-1)+1, Q-stability of the lattice, faithful holonomy.
inline PropertyResult lattice_checks(const QuotientMap& pi, const std::string& label) {
  PropertyResult r{"fiber lattice and holonomy, " + label, 0, 0, {}};
  r.guarded([&] {
    const FiberLattice f = fiber_lattice(pi);
    const std::size_t expected = pi.order() * (pi.rank() - 1) + 1;
    r.check(f.rank == expected, [&] { return "rank " + std::to_string(f.rank) + ", expected " + std::to_string(expected); });
    for (const auto& q : pi.images())
      for (std::size_t i = 0; i < f.canonical.rows(); ++i)
        r.check(solve_in_hermite_basis(f.canonical, detail::act_flat(f.canonical.row(i), q, pi)).has_value(),
                [&] { return "lattice not stable under " + q.to_string(); });
    const auto rep = crystallographic_report(pi);
    r.check(rep.faithful && rep.verdict, [&] { return std::string("holonomy not faithful"); });
  });
  return r;
}

/// mod_p_image is a homomorphism into (F_p[Q])^r x| Q.
inline PropertyResult mod_p_homomorphism(const QuotientMap& pi, std::uint64_t p, const std::string& label,
                                         std::uint64_t seed, std::size_t n) {
  PropertyResult r{"mod-" + std::to_string(p) + " image is a homomorphism, " + label, 0, 0, {}};
  Rng rng(seed);
  const ModPQuotient quotient(pi, p);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const FreeWord u = random_word(rng, pi.rank(), 40), v = random_word(rng, pi.rank(), 40);
      r.check(quotient.image(u * v) == quotient.mul(quotient.image(u), quotient.image(v)),
              [&] { return "fails for u = " + u.to_string() + ", v = " + v.to_string(); });
    });
  return r;
}

// ---------------------------------------------------------------------------
// Presentations and integer matrices

/// gcd of all k x k minors, by cofactor expansion (small matrices only).
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t i = start; i < a.rows(); ++i) {
      rows[depth] = i;
      pick_rows(i + 1, depth + 1);
    }
  };
  pick_cols = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
      g = gcd(g, abs(determinant(m)));
      return;
    }
    for (std::size_t j = start; j < a.cols(); ++j) {
      cols[depth] = j;
      pick_cols(j + 1, depth + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

inline IntMatrix random_matrix(Rng& rng, std::size_t max_dim, std::int64_t bound) {
  const auto m = static_cast<std::size_t>(detail::uniform(rng, 1, static_cast<std::int64_t>(max_dim)));
  const auto n = static_cast<std::size_t>(detail::uniform(rng, 1, static_cast<std::int64_t>(max_dim)));
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = detail::uniform(rng, -bound, bound);
  return a;
}

/// U A V = D, U and V unimodular, D diagonal with nonnegative entries in a
/// divisibility chain; on matrices up to 3x3 the diagonal also matches the
/// quotients of determinantal divisors.
inline PropertyResult smith_invariants(std::uint64_t seed, std::size_t n, std::size_t max_dim = 6) {
  PropertyResult r{"Smith normal form invariants", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const IntMatrix a = random_matrix(rng, max_dim, 20);
      const SmithForm s = smith_normal_form(a);
      const auto describe = [&] { return "fails on " + a.to_string(); };
      r.check(s.U * a * s.V == s.D, describe);
      r.check(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, describe);
      bool diagonal = true;
      for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
          if (i != j && s.D(i, j) != 0) diagonal = false;
      const auto d = s.diagonal();
      bool chain = true;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) chain = false;
        if (i + 1 < d.size() && d[i + 1] != 0 && (d[i] == 0 || d[i + 1] % d[i] != 0)) chain = false;
        if (i + 1 < d.size() && d[i] == 0 && d[i + 1] != 0) chain = false;
      }
      r.check(diagonal && chain, describe);
      if (a.rows() <= 3 && a.cols() <= 3) {
        Integer prev = 1;
        bool match = true;
        for (std::size_t i = 0; i < d.size(); ++i) {
          const Integer dk = determinantal_divisor(a, i + 1);
          const Integer expect = prev == 0 ? Integer(0) : dk / prev;
          if (expect != d[i]) match = false;
          prev = dk;
        }
        r.check(match, [&] { return "diagonal disagrees with determinantal divisors on " + a.to_string(); });
      }
    });
  return r;
}

/// Row-space preservation and shape of the Hermite form.
inline PropertyResult hermite_invariants(std::uint64_t seed, std::size_t n, std::size_t max_dim = 6) {
  PropertyResult r{"Hermite normal form invariants", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k)
    r.guarded([&] {
      const IntMatrix a = random_matrix(rng, max_dim, 20);
      const IntMatrix h = hermite_normal_form(a);
      bool ok = h.rows() == matrix_rank(a);
      for (std::size_t i = 0; i < a.rows(); ++i) ok = ok && solve_in_hermite_basis(h, a.row(i)).has_value();
      std::size_t last = 0;
      for (std::size_t i = 0; i < h.rows() && ok; ++i) {
        std::size_t c = 0;
        while (c < h.cols() && h(i, c) == 0) ++c;
        ok = c < h.cols() && h(i, c) > 0 && (i == 0 || c > last);
        for (std::size_t j = 0; j < i && ok; ++j) ok = h(j, c) >= 0 && h(j, c) < h(i, c);
        last = c;
      }
      r.check(ok, [&] { return "fails on " + a.to_string(); });
    });
  return r;
}

struct PresentationFixture {
  std::string name;
  std::string text;
};

inline std::vector<PresentationFixture> presentation_fixtures() {
  return {{"Z", "<a |>"},
          {"Z^2", "<a, b | [a, b]>"},
          {"Z/3", "<a | a^3>"},
          {"S3", "<a, b | a^2, b^2, (a b)^3>"},
          {"A5", "<a, b | a^2, b^3, (a b)^5>"},
          {"Q8", "<i, j | i^4, i^2 j^-2, j^-1 i j i>"},
          {"PSL(2,7)", "<a, b | a^2, b^3, (a b)^7, [a, b]^4>"},
          {"Higman", "<a, b, c, d | a^b a^-2, b^c b^-2, c^d c^-2, d^a d^-2>"}};
}

/// Complete coset tables are valid, whether found by enumeration or by the
/// low-index search, and the search returns no two conjugate subgroups.
inline PropertyResult coset_table_validity(std::uint32_t max_index = 4) {
  PropertyResult r{"coset table validity on fixture presentations", 0, 0, {}};
  for (const auto& fx : presentation_fixtures())
    r.guarded([&] {
      const Presentation p = parse_presentation(fx.text);
      std::vector<std::vector<FreeWord>> subgroups{{}};
      for (std::uint32_t g = 1; g <= p.rank(); ++g) subgroups.push_back({FreeWord::generator(g)});
      for (const auto& h : subgroups) {
        const auto res = todd_coxeter(p, h, 20000);
        if (res.exhausted()) continue;
        const auto bad = coset_table_violation(*res.table, p, h);
        r.check(!bad, [&] { return fx.name + ": " + bad.value_or(""); });
      }
      const auto low = low_index_subgroups(p, max_index);
      for (std::size_t i = 0; i < low.subgroups.size(); ++i) {
        const auto& t = low.subgroups[i].table;
        const auto bad = coset_table_violation(t, p);
        r.check(!bad, [&] { return fx.name + " low index: " + bad.value_or(""); });
        for (std::size_t j = i + 1; j < low.subgroups.size(); ++j) {
          const auto& u = low.subgroups[j].table;
          if (u.index() != t.index()) continue;
          bool conjugate = false;
          for (std::uint32_t b = 0; b < u.index(); ++b) conjugate = conjugate || rebase(u, b) == t;
          r.check(!conjugate, [&] { return fx.name + ": two conjugate subgroups of index " + std::to_string(t.index()); });
        }
      }
    });
  return r;
}

/// Verbal subgroups of the commutator and square words are normal.
inline PropertyResult verbal_normality() {
  PropertyResult r{"verbal subgroups are normal", 0, 0, {}};
  const std::vector<std::pair<std::string, std::vector<Permutation>>> groups{
      {"S3", make_symmetric(3)->generators()},
      {"S4", make_symmetric(4)->generators()},
      {"A5", make_alternating(5)->generators()},
      {"D4", {Permutation::cycle({1, 2, 3, 4}), Permutation::cycle({1, 3})}}};
  const std::vector<FreeWord> words{parse_free_word("[x,y]", 2), parse_free_word("x^2", 1)};
  for (const auto& [name, gens] : groups)
    for (const auto& w : words)
      r.guarded([&] {
        const auto v = verbal_subgroup(gens, {w});
        bool normal = true;
        for (const auto& g : gens)
          for (const auto& x : v.elements)
            normal = normal && std::binary_search(v.elements.begin(), v.elements.end(), g * x * g.inverse());
        r.check(normal, [&] { return "verbal subgroup of " + w.to_string() + " in " + name + " is not normal"; });
      });
  return r;
}

// ---------------------------------------------------------------------------

/// Every suite at `n` samples per randomized property.
inline std::vector<PropertyResult> run_all(std::uint64_t seed, std::size_t n) {
  std::vector<PropertyResult> out;
  const Limits roomy = roomy_limits();
  const std::vector<Group> groups{make_integers(),
                                  make_symmetric(3),
                                  make_altfin(),
                                  make_lamp(make_integers()),
                                  make_lamp(make_symmetric(3)),
                                  make_wreath(make_integers(), make_integers()),
                                  make_wreath(make_symmetric(3), make_lamp(make_integers())),
                                  make_theta(make_integers(), roomy),
                                  make_tower(make_integers()),
                                  make_theta_limit(make_integers(), roomy)};
  std::uint64_t s = seed;
  for (const auto& g : groups) out.push_back(group_axioms(*g, ++s, n));

  for (const auto& base : {make_integers(), make_symmetric(3), make_lamp(make_integers())})
    out.push_back(lamp_commutator_identity(*make_lamp(base), ++s, n));

  for (const auto& g : {make_lamp(make_integers()), make_wreath(make_integers(), make_lamp(make_integers())),
                        make_theta(make_integers(), roomy)})
    out.push_back(order_cone(*g, ++s, n));

  for (const auto& g : {make_lamp(make_integers()), make_theta(make_integers(), roomy)})
    out.push_back(torsion_free(*g, ++s, n));

  for (const auto& base : {make_integers(), make_symmetric(3)}) out.push_back(tower_witnesses(*make_tower(base), 3));

  for (const auto& w : {make_wreath(make_integers(), make_integers()), make_wreath(make_symmetric(3), make_integers()),
                        make_wreath(make_lamp(make_integers()), make_lamp(make_integers()))})
    out.push_back(wreath_witness(*w, ++s, n));
  out.push_back(theta_witness(*make_theta(make_integers(), roomy), ++s, n));
  out.push_back(hnn_relation(*make_theta(make_integers()), ++s, n, 3));
  out.push_back(association_independence(*make_theta(make_integers(), roomy), ++s, n));

  for (const auto& fx : finite_magnus_fixtures()) {
    out.push_back(magnus_homomorphism(fx.pi, fx.name, ++s, n));
    out.push_back(magnus_kernel(fx.pi, fx.name, ++s, n));
    out.push_back(magnus_torsion(fx.pi, fx.name, ++s, n));
    out.push_back(lattice_checks(fx.pi, fx.name));
    out.push_back(mod_p_homomorphism(fx.pi, 3, fx.name, ++s, n));
  }
  out.push_back(magnus_homomorphism(altfin_sample_quotient(seed), "Q=altfin sample", ++s, n));

  out.push_back(smith_invariants(++s, n));
  out.push_back(hermite_invariants(++s, n));
  out.push_back(coset_table_validity());
  out.push_back(verbal_normality());
  return out;
}

}  // namespace wm::props
