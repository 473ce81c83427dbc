#pragma once

// Generic group operations dispatched on GroupDesc::kind().
//
// The construction-specific arithmetic lives in detail/lamplighter_impl.hpp
// and detail/theta_hnn_impl.hpp; they call back into the generic operations
// declared here for their base groups.

#include "wmgroups/element.hpp"
#include "wmgroups/errors.hpp"
#include "wmgroups/group_desc.hpp"
#include "wmgroups/integer.hpp"
#include "wmgroups/permutation.hpp"

#include <compare>
#include <cstdint>
#include <optional>

namespace wm {

Element identity(const GroupDesc& g);
Element mul(const GroupDesc& g, const Element& a, const Element& b);
Element inv(const GroupDesc& g, const Element& a);
bool eq(const GroupDesc& g, const Element& a, const Element& b);
bool is_identity(const GroupDesc& g, const Element& a);

/// Throws TypeError unless the payload variant matches the group.
void check_member(const GroupDesc& g, const Element& a);

/// Membership in the positive cone. CapabilityError unless g.order_capable().
bool is_positive(const GroupDesc& g, const Element& a);

enum class Order { Less, Equal, Greater };

/// h1 > h2 iff h1 * h2^-1 is positive.
Order compare(const GroupDesc& g, const Element& a, const Element& b);

Element pow(const GroupDesc& g, const Element& a, std::int64_t n);

/// [a, b] = a b a^-1 b^-1.
Element commutator(const GroupDesc& g, const Element& a, const Element& b);

/// b a b^-1.
Element conj(const GroupDesc& g, const Element& a, const Element& by);

/// Least n <= bound with a^n = 1.
std::optional<std::uint64_t> order_of_element(const GroupDesc& g, const Element& a,
                                              std::uint64_t bound);

}  // namespace wm

#include "wmgroups/detail/lamplighter_impl.hpp"
#include "wmgroups/detail/theta_hnn_impl.hpp"

namespace wm {

namespace detail {

inline bool is_permutation_kind(GroupKind k) {
  return k == GroupKind::FinitePermutation || k == GroupKind::AltFin;
}

inline const Permutation& as_permutation(const GroupDesc& g, const Element& a) {
  const auto& p = a.as<Permutation>(g.name().c_str());
  if (g.kind() == GroupKind::AltFin && !p.is_even())
    throw TypeError("odd permutation is not in altfin");
  return p;
}

}  // namespace detail

inline void check_member(const GroupDesc& g, const Element& a) {
  const char* ctx = g.name().c_str();
  switch (g.kind()) {
    case GroupKind::Integers: (void)a.as<Integer>(ctx); return;
    case GroupKind::FinitePermutation:
    case GroupKind::AltFin: (void)detail::as_permutation(g, a); return;
    case GroupKind::Lamp: (void)a.as<LampElement>(ctx); return;
    case GroupKind::RestrictedWreath: (void)a.as<WreathElement>(ctx); return;
    case GroupKind::Theta: (void)a.as<CElement>(ctx); return;
    case GroupKind::Tower: (void)a.as<TowerElement>(ctx); return;
    case GroupKind::ThetaLimit: (void)a.as<LimitElement>(ctx); return;
  }
}

inline Element identity(const GroupDesc& g) {
  switch (g.kind()) {
    case GroupKind::Integers: return Element(Integer(0));
    case GroupKind::FinitePermutation:
    case GroupKind::AltFin: return Element(Permutation{});
    case GroupKind::Lamp: return lamp_identity(g);
    case GroupKind::RestrictedWreath: return rw_identity(g);
    case GroupKind::Theta: return Element(c_identity(g));
    case GroupKind::Tower: return Element(TowerElement{0, identity(g.base())});
    case GroupKind::ThetaLimit: return Element(LimitElement{0, identity(g.base())});
  }
  throw InvariantError("unknown group kind");
}

inline Element mul(const GroupDesc& g, const Element& a, const Element& b) {
  const char* ctx = g.name().c_str();
  switch (g.kind()) {
    case GroupKind::Integers: return Element(Integer(a.as<Integer>(ctx) + b.as<Integer>(ctx)));
    case GroupKind::FinitePermutation:
    case GroupKind::AltFin:
      return Element(detail::as_permutation(g, a) * detail::as_permutation(g, b));
    case GroupKind::Lamp: return lamp_mul(g, a, b);
    case GroupKind::RestrictedWreath: return rw_mul(g, a, b);
    case GroupKind::Theta:
      return Element(c_mul(g, a.as<CElement>(ctx), b.as<CElement>(ctx)));
    case GroupKind::Tower: return tower_mul(g, a, b);
    case GroupKind::ThetaLimit: return limit_mul(g, a, b);
  }
  throw InvariantError("unknown group kind");
}

inline Element inv(const GroupDesc& g, const Element& a) {
  const char* ctx = g.name().c_str();
  switch (g.kind()) {
    case GroupKind::Integers: return Element(Integer(-a.as<Integer>(ctx)));
    case GroupKind::FinitePermutation:
    case GroupKind::AltFin: return Element(detail::as_permutation(g, a).inverse());
    case GroupKind::Lamp: return lamp_inv(g, a);
    case GroupKind::RestrictedWreath: return rw_inv(g, a);
    case GroupKind::Theta: return Element(c_inv(g, a.as<CElement>(ctx)));
    case GroupKind::Tower: return tower_inv(g, a);
    case GroupKind::ThetaLimit: return limit_inv(g, a);
  }
  throw InvariantError("unknown group kind");
}

inline bool eq(const GroupDesc& g, const Element& a, const Element& b) {
  check_member(g, a);
  check_member(g, b);
  switch (g.kind()) {
    case GroupKind::Tower: return tower_eq(g, a, b);
    case GroupKind::ThetaLimit: return limit_eq(g, a, b);
    default: return a == b;
  }
}

inline bool is_identity(const GroupDesc& g, const Element& a) { return eq(g, a, identity(g)); }

inline bool is_positive(const GroupDesc& g, const Element& a) {
  if (!g.order_capable())
    throw CapabilityError("group " + g.name() + " carries no order");
  const char* ctx = g.name().c_str();
  switch (g.kind()) {
    case GroupKind::Integers: return a.as<Integer>(ctx) > 0;
    case GroupKind::Lamp: return lamp_is_positive(g, a);
    case GroupKind::RestrictedWreath: return rw_is_positive(g, a);
    case GroupKind::Theta: return c_is_positive(g, a.as<CElement>(ctx));
    case GroupKind::Tower: {
      const auto& t = tower_canonical(g, a);
      return is_positive(g.level(t.level), t.payload);
    }
    case GroupKind::ThetaLimit: {
      const auto& t = a.as<LimitElement>(ctx);
      return is_positive(g.level(t.level), t.payload);
    }
    default: break;
  }
  throw CapabilityError("group " + g.name() + " carries no order");
}

inline Order compare(const GroupDesc& g, const Element& a, const Element& b) {
  const Element d = mul(g, a, inv(g, b));
  if (is_positive(g, d)) return Order::Greater;
  if (is_identity(g, d)) return Order::Equal;
  return Order::Less;
}

inline Element pow(const GroupDesc& g, const Element& a, std::int64_t n) {
  Element base = n < 0 ? inv(g, a) : a;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Element result = identity(g);
  while (e) {
    if (e & 1) result = mul(g, result, base);
    e >>= 1;
    if (e) base = mul(g, base, base);
  }
  return result;
}

inline Element commutator(const GroupDesc& g, const Element& a, const Element& b) {
  return mul(g, mul(g, mul(g, a, b), inv(g, a)), inv(g, b));
}

inline Element conj(const GroupDesc& g, const Element& a, const Element& by) {
  return mul(g, mul(g, by, a), inv(g, by));
}

inline std::optional<std::uint64_t> order_of_element(const GroupDesc& g, const Element& a,
                                                     std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("order bound must be positive");
  Element x = a;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (is_identity(g, x)) return n;
    if (n < bound) x = mul(g, x, a);
  }
  return std::nullopt;
}

}  // namespace wm
