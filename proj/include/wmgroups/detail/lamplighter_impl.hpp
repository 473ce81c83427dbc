#pragma once

// Included from wmgroups/group.hpp only.
//
// lamp(G): eventually-right-trivial step functions Z -> G with the shift
// sigma(f)(n) = f(n + 1). It contains the subgroup generated by sigma and the
// f_g, and the positive cone rule (m > 0, or m = 0 and the last nontrivial
// value is positive) is stated on the whole group.
//
// wr(A, B): restricted wreath product, (f1, b1)(f2, b2) = (f1 * b1.f2, b1 b2)
// with (b.f)(x) = f(b^-1 x). Cone: b > 1, or b = 1 and the value at the
// largest support point is positive.
//
// tower(G): direct limit of G_{i+1} = lamp(G_i) along g -> delta_g.

#include <algorithm>
#include <optional>
#include <utility>

namespace wm {

// ---------------------------------------------------------------------------
// Step functions

inline Element step_eval(const StepFunction& f, std::int64_t n) {
  const auto it = std::lower_bound(f.breaks.begin(), f.breaks.end(), n);
  return f.values[static_cast<std::size_t>(it - f.breaks.begin())];
}

inline StepFunction step_identity(const GroupDesc& base) {
  return StepFunction{{}, {identity(base)}};
}

/// Merges equal adjacent runs. Requires strictly increasing breaks and a
/// trivial rightmost value.
inline StepFunction step_canonical(const GroupDesc& base, std::vector<std::int64_t> breaks,
                                   std::vector<Element> values) {
  if (values.size() != breaks.size() + 1)
    throw PreconditionError("step function needs one more value than breakpoints");
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (breaks[i - 1] >= breaks[i]) throw PreconditionError("breakpoints must increase");
  if (!is_identity(base, values.back()))
    throw PreconditionError("step function must be trivial to the right");
  StepFunction out;
  out.values.push_back(values[0]);
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (values[i + 1] == out.values.back()) continue;
    out.breaks.push_back(breaks[i]);
    out.values.push_back(values[i + 1]);
  }
  return out;
}

/// shift^k(f)(n) = f(n + k).
inline StepFunction step_shift(const StepFunction& f, std::int64_t k) {
  StepFunction out = f;
  for (auto& c : out.breaks) c -= k;
  return out;
}

inline StepFunction step_pointwise(const GroupDesc& base, const StepFunction& a,
                                   const StepFunction& b) {
  std::vector<std::int64_t> breaks;
  breaks.reserve(a.breaks.size() + b.breaks.size());
  std::merge(a.breaks.begin(), a.breaks.end(), b.breaks.begin(), b.breaks.end(),
             std::back_inserter(breaks));
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Element> values;
  values.reserve(breaks.size() + 1);
  for (std::size_t i = 0; i <= breaks.size(); ++i) {
    // A point inside the i-th interval.
    const std::int64_t n = i < breaks.size() ? breaks[i] : (breaks.empty() ? 0 : breaks.back() + 1);
    values.push_back(mul(base, step_eval(a, n), step_eval(b, n)));
  }
  return step_canonical(base, std::move(breaks), std::move(values));
}

inline StepFunction step_inverse(const GroupDesc& base, const StepFunction& f) {
  StepFunction out = f;
  for (auto& v : out.values) v = inv(base, v);
  return out;
}

inline bool step_is_identity(const StepFunction& f) { return f.breaks.empty(); }

/// Value on the rightmost interval carrying a nontrivial value.
inline std::optional<Element> last_nontrivial_value(const StepFunction& f) {
  if (f.breaks.empty()) return std::nullopt;
  return f.values[f.values.size() - 2];
}

// ---------------------------------------------------------------------------
// lamp(G)

inline const LampElement& as_lamp(const GroupDesc& l, const Element& a) {
  if (l.kind() != GroupKind::Lamp) throw TypeError("expected a lamp group, got " + l.name());
  return a.as<LampElement>(l.name().c_str());
}

inline Element lamp_identity(const GroupDesc& l) {
  return Element(LampElement{step_identity(l.base()), 0});
}

/// Validates and canonicalizes user-supplied data.
inline Element make_lamp_element(const GroupDesc& l, std::vector<std::int64_t> breaks,
                                 std::vector<Element> values, std::int64_t shift) {
  if (l.kind() != GroupKind::Lamp) throw TypeError("expected a lamp group, got " + l.name());
  for (const auto& v : values) check_member(l.base(), v);
  return Element(LampElement{step_canonical(l.base(), std::move(breaks), std::move(values)), shift});
}

inline Element make_sigma(const GroupDesc& l) {
  if (l.kind() != GroupKind::Lamp) throw TypeError("expected a lamp group, got " + l.name());
  return Element(LampElement{step_identity(l.base()), 1});
}

/// f_g(n) = g for n <= 0, 1 for n > 0.
inline Element make_fg(const GroupDesc& l, const Element& g) {
  return make_lamp_element(l, {0}, {g, identity(l.base())}, 0);
}

/// delta_g(0) = g, trivial elsewhere.
inline Element make_delta(const GroupDesc& l, const Element& g) {
  const Element one = identity(l.base());
  return make_lamp_element(l, {-1, 0}, {one, g, one}, 0);
}

/// g when `a` is delta_g with g nontrivial.
inline std::optional<Element> lamp_delta_value(const GroupDesc& l, const Element& a) {
  const auto& x = as_lamp(l, a);
  if (x.shift != 0 || x.f.breaks.size() != 2 || x.f.breaks[0] != -1 || x.f.breaks[1] != 0)
    return std::nullopt;
  if (!is_identity(l.base(), x.f.values[0])) return std::nullopt;
  return x.f.values[1];
}

/// g when `a` is f_g with g nontrivial.
inline std::optional<Element> lamp_fg_value(const GroupDesc& l, const Element& a) {
  const auto& x = as_lamp(l, a);
  if (x.shift != 0 || x.f.breaks.size() != 1 || x.f.breaks[0] != 0) return std::nullopt;
  return x.f.values[0];
}

inline Element lamp_mul(const GroupDesc& l, const Element& a, const Element& b) {
  const auto& x = as_lamp(l, a);
  const auto& y = as_lamp(l, b);
  return Element(LampElement{step_pointwise(l.base(), x.f, step_shift(y.f, x.shift)),
                             x.shift + y.shift});
}

inline Element lamp_inv(const GroupDesc& l, const Element& a) {
  const auto& x = as_lamp(l, a);
  return Element(LampElement{step_shift(step_inverse(l.base(), x.f), -x.shift), -x.shift});
}

inline bool lamp_is_positive(const GroupDesc& l, const Element& a) {
  if (!l.order_capable()) throw CapabilityError("base of " + l.name() + " carries no order");
  const auto& x = as_lamp(l, a);
  if (x.shift != 0) return x.shift > 0;
  const auto last = last_nontrivial_value(x.f);
  return last && is_positive(l.base(), *last);
}

// ---------------------------------------------------------------------------
// wr(A, B)

inline const WreathElement& as_wreath(const GroupDesc& w, const Element& a) {
  if (w.kind() != GroupKind::RestrictedWreath)
    throw TypeError("expected a wreath product, got " + w.name());
  return a.as<WreathElement>(w.name().c_str());
}

inline Element rw_identity(const GroupDesc& w) {
  return Element(WreathElement{{}, identity(w.top())});
}

namespace detail {
inline bool key_less(const std::pair<Element, Element>& a, const std::pair<Element, Element>& b) {
  return a.first < b.first;
}
}  // namespace detail

/// Builds a canonical element from (point, value) pairs. Repeated points
/// are multiplied together in the given order.
inline Element make_wreath_element(const GroupDesc& w,
                                   std::vector<std::pair<Element, Element>> pairs,
                                   Element top) {
  if (w.kind() != GroupKind::RestrictedWreath)
    throw TypeError("expected a wreath product, got " + w.name());
  check_member(w.top(), top);
  for (const auto& [k, v] : pairs) {
    check_member(w.top(), k);
    check_member(w.base(), v);
  }
  std::stable_sort(pairs.begin(), pairs.end(), detail::key_less);
  std::vector<std::pair<Element, Element>> f;
  for (auto& kv : pairs) {
    if (!f.empty() && f.back().first == kv.first)
      f.back().second = mul(w.base(), f.back().second, kv.second);
    else
      f.push_back(std::move(kv));
  }
  std::erase_if(f, [&](const auto& kv) { return is_identity(w.base(), kv.second); });
  return Element(WreathElement{std::move(f), std::move(top)});
}

inline Element rw_embed_base(const GroupDesc& w, const Element& a) {
  return make_wreath_element(w, {{identity(w.top()), a}}, identity(w.top()));
}

inline Element rw_embed_top(const GroupDesc& w, const Element& b) {
  return make_wreath_element(w, {}, b);
}

inline Element rw_value_at(const GroupDesc& w, const Element& a, const Element& point) {
  const auto& x = as_wreath(w, a);
  const auto it = std::lower_bound(x.f.begin(), x.f.end(), std::pair{point, point}, detail::key_less);
  if (it != x.f.end() && it->first == point) return it->second;
  return identity(w.base());
}

inline Element rw_mul(const GroupDesc& w, const Element& a, const Element& b) {
  const auto& x = as_wreath(w, a);
  const auto& y = as_wreath(w, b);
  // (x.top . y.f)(x.top * p) = y.f(p)
  std::vector<std::pair<Element, Element>> moved;
  moved.reserve(y.f.size());
  for (const auto& [p, v] : y.f) moved.emplace_back(mul(w.top(), x.top, p), v);
  std::sort(moved.begin(), moved.end(), detail::key_less);

  std::vector<std::pair<Element, Element>> f;
  f.reserve(x.f.size() + moved.size());
  auto i = x.f.begin();
  auto j = moved.begin();
  while (i != x.f.end() || j != moved.end()) {
    if (j == moved.end() || (i != x.f.end() && i->first < j->first)) {
      f.push_back(*i++);
    } else if (i == x.f.end() || j->first < i->first) {
      f.push_back(*j++);
    } else {
      Element v = mul(w.base(), i->second, j->second);
      if (!is_identity(w.base(), v)) f.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return Element(WreathElement{std::move(f), mul(w.top(), x.top, y.top)});
}

inline Element rw_inv(const GroupDesc& w, const Element& a) {
  const auto& x = as_wreath(w, a);
  const Element top_inv = inv(w.top(), x.top);
  std::vector<std::pair<Element, Element>> f;
  f.reserve(x.f.size());
  for (const auto& [p, v] : x.f) f.emplace_back(mul(w.top(), top_inv, p), inv(w.base(), v));
  std::sort(f.begin(), f.end(), detail::key_less);
  return Element(WreathElement{std::move(f), top_inv});
}

inline bool rw_is_positive(const GroupDesc& w, const Element& a) {
  if (!w.order_capable()) throw CapabilityError(w.name() + " carries no order");
  const auto& x = as_wreath(w, a);
  if (!is_identity(w.top(), x.top)) return is_positive(w.top(), x.top);
  if (x.f.empty()) return false;
  const std::pair<Element, Element>* best = &x.f.front();
  for (const auto& kv : x.f)
    if (compare(w.top(), kv.first, best->first) == Order::Greater) best = &kv;
  return is_positive(w.base(), best->second);
}

// ---------------------------------------------------------------------------
// tower(G)

inline const TowerElement& as_tower(const GroupDesc& t, const Element& a) {
  if (t.kind() != GroupKind::Tower) throw TypeError("expected a tower group, got " + t.name());
  return a.as<TowerElement>(t.name().c_str());
}

/// Pushes the payload down while it lies in the image of the delta embedding.
inline TowerElement tower_canonical(const GroupDesc& t, const Element& a) {
  TowerElement x = as_tower(t, a);
  if (x.level > t.max_level()) throw DepthError("tower level exceeds bound");
  while (x.level > 0) {
    const GroupDesc& l = t.level(x.level);
    if (is_identity(l, x.payload)) {
      x = TowerElement{0, identity(t.level(0))};
      break;
    }
    auto g = lamp_delta_value(l, x.payload);
    if (!g) break;
    x = TowerElement{x.level - 1, *g};
  }
  return x;
}

/// Element of G_level given by a payload of that level, canonicalized.
inline Element tower_at(const GroupDesc& t, std::uint32_t level, const Element& payload) {
  if (t.kind() != GroupKind::Tower) throw TypeError("expected a tower group, got " + t.name());
  check_member(t.level(level), payload);
  return Element(tower_canonical(t, Element(TowerElement{level, payload})));
}

inline Element tower_lift_payload(const GroupDesc& t, Element payload, std::uint32_t from,
                                  std::uint32_t to) {
  for (std::uint32_t i = from; i < to; ++i) payload = make_delta(t.level(i + 1), payload);
  return payload;
}

/// Image of x under G_i -> G_{i+1}, g -> delta_g, at level i + 1 (not pushed
/// back down; eq and the group law canonicalize).
inline Element tower_lift(const GroupDesc& t, const Element& a) {
  const auto& x = as_tower(t, a);
  if (x.level + 1 > t.max_level()) throw DepthError("tower level exceeds bound");
  return Element(TowerElement{x.level + 1, tower_lift_payload(t, x.payload, x.level, x.level + 1)});
}

inline Element tower_mul(const GroupDesc& t, const Element& a, const Element& b) {
  const auto x = tower_canonical(t, a);
  const auto y = tower_canonical(t, b);
  const std::uint32_t level = std::max(x.level, y.level);
  const Element p = mul(t.level(level), tower_lift_payload(t, x.payload, x.level, level),
                        tower_lift_payload(t, y.payload, y.level, level));
  return Element(tower_canonical(t, Element(TowerElement{level, p})));
}

inline Element tower_inv(const GroupDesc& t, const Element& a) {
  const auto x = tower_canonical(t, a);
  return Element(TowerElement{x.level, inv(t.level(x.level), x.payload)});
}

inline bool tower_eq(const GroupDesc& t, const Element& a, const Element& b) {
  return tower_canonical(t, a) == tower_canonical(t, b);
}

/// (f_g, sigma) one level up with [f_g, sigma] = delta_g, the image of x.
inline std::pair<Element, Element> perfectness_witness(const GroupDesc& t, const Element& a) {
  const auto x = tower_canonical(t, a);
  if (x.level == 0 && is_identity(t.level(0), x.payload)) return {identity(t), identity(t)};
  if (x.level + 1 > t.max_level()) throw DepthError("tower level exceeds bound");
  const GroupDesc& l = t.level(x.level + 1);
  Element f = Element(TowerElement{x.level + 1, make_fg(l, x.payload)});
  Element s = Element(TowerElement{x.level + 1, make_sigma(l)});
  if (!eq(t, commutator(t, f, s), a))
    throw InvariantError("perfectness witness failed to evaluate back");
  return {std::move(f), std::move(s)};
}

}  // namespace wm
