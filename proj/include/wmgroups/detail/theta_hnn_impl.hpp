#pragma once

// Included from wmgroups/group.hpp only.
//
// W_0 = lamp(A), W_{i+1} = W_i wr lamp(A), with W_i sitting in W_{i+1} as the
// base copy at the identity point. phi relabels every lamp(A) coordinate one
// level up: phi(a) for a in W_0 is the top element a of W_1, and
// phi(f, b) = (phi o f, b) above. Its image is exactly the set of elements
// whose innermost (W_0) coordinates are all trivial.
//
// C = theta(A) is the HNN extension t w t^-1 = phi(w). Elements are
// t^m * x with x = t^-d w t^d in Wbar = union t^-d W t^d, and
// (t^m1 x1)(t^m2 x2) = t^(m1+m2) tau^(-m2)(x1) x2 where tau is conjugation
// by t: tau(d, w) = (d - 1, w) for d >= 1 and (0, phi(w)) for d = 0.

#include <optional>
#include <utility>
#include <vector>

namespace wm {

inline const CElement& as_c(const GroupDesc& c, const Element& a) {
  if (c.kind() != GroupKind::Theta) throw TypeError("expected a theta group, got " + c.name());
  return a.as<CElement>(c.name().c_str());
}

// ---------------------------------------------------------------------------
// W

inline WElement w_identity(const GroupDesc& c) { return WElement{0, lamp_identity(c.abar())}; }

inline bool w_is_identity(const GroupDesc& c, const WElement& w) {
  return is_identity(c.w_level(w.level), w.payload);
}

/// Pushes the payload down while it lies in the base copy at the identity.
inline WElement w_canonical(const GroupDesc& c, WElement w) {
  while (w.level > 0) {
    const auto& x = w.payload.as<WreathElement>("W level");
    if (!is_identity(c.abar(), x.top)) break;
    if (x.f.empty()) return w_identity(c);
    if (x.f.size() != 1 || !is_identity(c.abar(), x.f.front().first)) break;
    w = WElement{w.level - 1, x.f.front().second};
  }
  return w;
}

inline WElement make_w(const GroupDesc& c, std::uint32_t level, const Element& payload) {
  check_member(c.w_level(level), payload);
  return w_canonical(c, WElement{level, payload});
}

inline Element w_lift_payload(const GroupDesc& c, Element payload, std::uint32_t from,
                              std::uint32_t to) {
  for (std::uint32_t i = from; i < to; ++i) payload = rw_embed_base(c.w_level(i + 1), payload);
  return payload;
}

inline WElement w_mul(const GroupDesc& c, const WElement& x, const WElement& y) {
  const std::uint32_t level = std::max(x.level, y.level);
  const Element p = mul(c.w_level(level), w_lift_payload(c, x.payload, x.level, level),
                        w_lift_payload(c, y.payload, y.level, level));
  return w_canonical(c, WElement{level, p});
}

inline WElement w_inv(const GroupDesc& c, const WElement& x) {
  return WElement{x.level, inv(c.w_level(x.level), x.payload)};
}

inline bool w_is_positive(const GroupDesc& c, const WElement& x) {
  return is_positive(c.w_level(x.level), x.payload);
}

namespace detail {

inline Element phi_payload(const GroupDesc& c, std::uint32_t level, const Element& payload) {
  (void)c.w_level(level + 1);
  if (level == 0) return Element(WreathElement{{}, payload});
  const auto& x = payload.as<WreathElement>("phi");
  std::vector<std::pair<Element, Element>> f;
  f.reserve(x.f.size());
  for (const auto& [p, v] : x.f) f.emplace_back(p, phi_payload(c, level - 1, v));
  return Element(WreathElement{std::move(f), x.top});
}

inline bool in_phi_image_payload(const GroupDesc& c, std::uint32_t level, const Element& payload) {
  if (level == 0) return is_identity(c.abar(), payload);
  const auto& x = payload.as<WreathElement>("phi image");
  if (level == 1) return x.f.empty();
  for (const auto& kv : x.f)
    if (!in_phi_image_payload(c, level - 1, kv.second)) return false;
  return true;
}

inline Element phi_inverse_payload(const GroupDesc& c, std::uint32_t level, const Element& payload) {
  const auto& x = payload.as<WreathElement>("phi inverse");
  if (level == 1) return x.top;
  std::vector<std::pair<Element, Element>> f;
  f.reserve(x.f.size());
  for (const auto& [p, v] : x.f) f.emplace_back(p, phi_inverse_payload(c, level - 1, v));
  return Element(WreathElement{std::move(f), x.top});
}

}  // namespace detail

/// The endomorphism of W induced by A_i -> A_{i+1}.
inline WElement phi(const GroupDesc& c, const WElement& w) {
  if (w_is_identity(c, w)) return w_identity(c);
  if (w.level + 1 > c.limits().wreath_level)
    throw DepthError("phi would exceed wreath level bound " +
                     std::to_string(c.limits().wreath_level));
  return w_canonical(c, WElement{w.level + 1, detail::phi_payload(c, w.level, w.payload)});
}

inline bool in_phi_image(const GroupDesc& c, const WElement& w) {
  return detail::in_phi_image_payload(c, w.level, w.payload);
}

inline WElement phi_inverse(const GroupDesc& c, const WElement& w) {
  if (w_is_identity(c, w)) return w_identity(c);
  if (!in_phi_image(c, w)) throw PreconditionError("element is not in the image of phi");
  return w_canonical(c, WElement{w.level - 1, detail::phi_inverse_payload(c, w.level, w.payload)});
}

inline WElement phi_pow(const GroupDesc& c, WElement w, std::uint32_t k) {
  for (std::uint32_t i = 0; i < k; ++i) w = phi(c, w);
  return w;
}

// ---------------------------------------------------------------------------
// Wbar = union t^-d W t^d

struct WBar {
  std::uint32_t depth = 0;
  WElement w;
};

inline WBar wbar_canonical(const GroupDesc& c, std::uint32_t depth, WElement w) {
  w = w_canonical(c, std::move(w));
  if (w_is_identity(c, w)) return WBar{0, w_identity(c)};
  while (depth > 0 && in_phi_image(c, w)) {
    w = phi_inverse(c, w);
    --depth;
  }
  return WBar{depth, std::move(w)};
}

inline WBar wbar_mul(const GroupDesc& c, const WBar& x, const WBar& y) {
  const std::uint32_t depth = std::max(x.depth, y.depth);
  return wbar_canonical(c, depth,
                        w_mul(c, phi_pow(c, x.w, depth - x.depth), phi_pow(c, y.w, depth - y.depth)));
}

inline WBar tau(const GroupDesc& c, const WBar& x) {
  if (x.depth >= 1) return WBar{x.depth - 1, x.w};
  return WBar{0, phi(c, x.w)};
}

inline WBar tau_inverse(const GroupDesc& c, const WBar& x) {
  return wbar_canonical(c, x.depth + 1, x.w);
}

inline WBar tau_pow(const GroupDesc& c, WBar x, std::int64_t k) {
  for (; k > 0; --k) x = tau(c, x);
  for (; k < 0; ++k) x = tau_inverse(c, x);
  return x;
}

// ---------------------------------------------------------------------------
// C = theta(A)

inline CElement c_identity(const GroupDesc& c) { return CElement{0, 0, w_identity(c)}; }

inline CElement make_c(const GroupDesc& c, std::int64_t m, std::uint32_t depth, const WElement& w) {
  if (c.kind() != GroupKind::Theta) throw TypeError("expected a theta group, got " + c.name());
  auto x = wbar_canonical(c, depth, w);
  return CElement{m, x.depth, std::move(x.w)};
}

inline CElement make_t(const GroupDesc& c) {
  if (c.kind() != GroupKind::Theta) throw TypeError("expected a theta group, got " + c.name());
  return CElement{1, 0, w_identity(c)};
}

/// W < C as the t-free, depth-0 part.
inline CElement c_from_w(const GroupDesc& c, const WElement& w) { return make_c(c, 0, 0, w); }

inline CElement c_mul(const GroupDesc& c, const CElement& a, const CElement& b) {
  const WBar x = tau_pow(c, WBar{a.depth, a.w}, -b.m);
  const WBar r = wbar_mul(c, x, WBar{b.depth, b.w});
  return CElement{a.m + b.m, r.depth, r.w};
}

inline CElement c_inv(const GroupDesc& c, const CElement& a) {
  const WBar r = tau_pow(c, WBar{a.depth, w_inv(c, a.w)}, a.m);
  return CElement{-a.m, r.depth, r.w};
}

inline bool c_eq(const CElement& a, const CElement& b) { return a == b; }

/// t^m w > 1 iff m > 0, or m = 0 and w > 1 in W (phi is order preserving, so
/// the depth does not matter).
inline bool c_is_positive(const GroupDesc& c, const CElement& a) {
  if (!c.order_capable()) throw CapabilityError(c.name() + " carries no order");
  if (a.m != 0) return a.m > 0;
  return w_is_positive(c, a.w);
}

/// A -> lamp(A) = W_0 -> C, a -> delta_a.
inline CElement theta_embed(const GroupDesc& c, const Element& a) {
  if (c.kind() != GroupKind::Theta) throw TypeError("expected a theta group, got " + c.name());
  check_member(c.base(), a);
  return c_from_w(c, WElement{0, make_delta(c.abar(), a)});
}

/// a when x = theta_embed(a).
inline std::optional<Element> theta_embed_value(const GroupDesc& c, const CElement& x) {
  if (x.m != 0 || x.depth != 0 || x.w.level != 0) return std::nullopt;
  if (is_identity(c.abar(), x.w.payload)) return identity(c.base());
  return lamp_delta_value(c.abar(), x.w.payload);
}

// ---------------------------------------------------------------------------
// Union of theta^i(A)

inline const LimitElement& as_limit(const GroupDesc& l, const Element& a) {
  if (l.kind() != GroupKind::ThetaLimit)
    throw TypeError("expected a theta limit group, got " + l.name());
  return a.as<LimitElement>(l.name().c_str());
}

inline LimitElement limit_canonical(const GroupDesc& l, const Element& a) {
  LimitElement x = as_limit(l, a);
  if (x.level > l.max_level()) throw DepthError("theta level exceeds bound");
  while (x.level > 0) {
    const GroupDesc& c = l.level(x.level);
    auto v = theta_embed_value(c, x.payload.as<CElement>("theta limit"));
    if (!v) break;
    x = LimitElement{x.level - 1, *v};
  }
  return x;
}

inline Element limit_at(const GroupDesc& l, std::uint32_t level, const Element& payload) {
  if (l.kind() != GroupKind::ThetaLimit)
    throw TypeError("expected a theta limit group, got " + l.name());
  check_member(l.level(level), payload);
  return Element(limit_canonical(l, Element(LimitElement{level, payload})));
}

inline Element limit_lift_payload(const GroupDesc& l, Element payload, std::uint32_t from,
                                  std::uint32_t to) {
  for (std::uint32_t i = from; i < to; ++i) payload = Element(theta_embed(l.level(i + 1), payload));
  return payload;
}

/// theta^i(A) -> theta^{i+1}(A), returned at level i + 1.
inline Element theta_limit_lift(const GroupDesc& l, const Element& a) {
  const auto& x = as_limit(l, a);
  if (x.level + 1 > l.max_level()) throw DepthError("theta level exceeds bound");
  return Element(LimitElement{x.level + 1, limit_lift_payload(l, x.payload, x.level, x.level + 1)});
}

inline Element limit_mul(const GroupDesc& l, const Element& a, const Element& b) {
  const auto x = limit_canonical(l, a);
  const auto y = limit_canonical(l, b);
  const std::uint32_t level = std::max(x.level, y.level);
  const Element p = mul(l.level(level), limit_lift_payload(l, x.payload, x.level, level),
                        limit_lift_payload(l, y.payload, y.level, level));
  return Element(limit_canonical(l, Element(LimitElement{level, p})));
}

inline Element limit_inv(const GroupDesc& l, const Element& a) {
  const auto x = limit_canonical(l, a);
  return Element(LimitElement{x.level, inv(l.level(x.level), x.payload)});
}

inline bool limit_eq(const GroupDesc& l, const Element& a, const Element& b) {
  return limit_canonical(l, a) == limit_canonical(l, b);
}

// ---------------------------------------------------------------------------
// Normal closure witnesses

/// prod u_i b^eps_i u_i^-1 for a fixed b.
struct ConjugateWord {
  std::vector<std::pair<Element, int>> terms;
};

inline Element evaluate_conjugate_word(const GroupDesc& g, const ConjugateWord& word,
                                       const Element& b) {
  Element acc = identity(g);
  for (const auto& [u, eps] : word.terms)
    acc = mul(g, acc, conj(g, eps > 0 ? b : inv(g, b), u));
  return acc;
}

/// Writes [x, y] for x, y in the base copy of A wr B (at the identity
/// point) as a product of four conjugates of the top element b != 1:
/// [x, y] = (xy) b (xy)^-1 * x b^-1 x^-1 * b * y b^-1 y^-1, using that x
/// commutes with b y b^-1. Arguments are elements of A and B.
inline ConjugateWord normal_closure_witness(const GroupDesc& w, const Element& x, const Element& y,
                                            const Element& b) {
  if (w.kind() != GroupKind::RestrictedWreath)
    throw TypeError("expected a wreath product, got " + w.name());
  if (is_identity(w.top(), b)) throw PreconditionError("normal closure witness needs b != 1");
  const Element ex = rw_embed_base(w, x);
  const Element ey = rw_embed_base(w, y);
  const Element eb = rw_embed_top(w, b);
  ConjugateWord word{{{mul(w, ex, ey), 1}, {ex, -1}, {identity(w), 1}, {ey, -1}}};
  if (evaluate_conjugate_word(w, word, eb) != commutator(w, ex, ey))
    throw InvariantError("normal closure witness failed to evaluate to [x, y]");
  return word;
}

/// Two-step witness inside C = theta(A): for 1 != a and x, y in W_0 = lamp(A),
/// expresses [x, y] as a product of conjugates of a. Uses t a t^-1 = phi(a),
/// the top element a of W_1 = W_0 wr lamp(A), and the wreath witness there.
inline ConjugateWord theta_normal_closure_witness(const GroupDesc& c, const Element& a,
                                                  const Element& x, const Element& y) {
  if (c.kind() != GroupKind::Theta) throw TypeError("expected a theta group, got " + c.name());
  const GroupDesc& w1 = c.w_level(1);
  if (is_identity(c.abar(), a)) throw PreconditionError("normal closure witness needs a != 1");
  const ConjugateWord inner = normal_closure_witness(w1, x, y, a);
  const CElement t = make_t(c);
  ConjugateWord word;
  for (const auto& [u, eps] : inner.terms)
    word.terms.emplace_back(Element(c_mul(c, c_from_w(c, make_w(c, 1, u)), t)), eps);
  const Element ca = Element(c_from_w(c, WElement{0, a}));
  const Element cx = Element(c_from_w(c, WElement{0, x}));
  const Element cy = Element(c_from_w(c, WElement{0, y}));
  if (evaluate_conjugate_word(c, word, ca) != commutator(c, cx, cy))
    throw InvariantError("theta normal closure witness failed to evaluate to [x, y]");
  return word;
}

}  // namespace wm
