#pragma once

#include "wmgroups/errors.hpp"
#include "wmgroups/integer.hpp"
#include "wmgroups/permutation.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace wm {

struct ElementNode;

/// Immutable, shareable handle to a canonical group element.
///
/// The payload is one of the variant types below; which one is used is
/// dictated by the GroupDesc the element belongs to. Equality and ordering
/// are structural, which coincides with group equality because every
/// operation returns canonical forms.
class Element {
 public:
  template <class T>
  explicit Element(T payload);

  template <class T>
  const T* get_if() const;

  /// Payload of the requested type or TypeError.
  template <class T>
  const T& as(const char* context) const;

  std::size_t index() const;

  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  std::shared_ptr<const ElementNode> node_;
};

/// Piecewise constant function Z -> G that is trivial far to the right.
///
/// f(n) = values[0] for n <= breaks[0], values[i] on (breaks[i-1], breaks[i]],
/// values.back() for n > breaks.back(). Canonical: strictly increasing
/// breaks, adjacent values differ, values.back() is the identity.
struct StepFunction {
  std::vector<std::int64_t> breaks;
  std::vector<Element> values;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;
  friend std::strong_ordering operator<=>(const StepFunction& a, const StepFunction& b) {
    if (auto c = a.breaks <=> b.breaks; c != 0) return c;
    return a.values <=> b.values;
  }
};

/// Element (f, m) of G^Z x| Z; the shift sigma is (1, 1).
struct LampElement {
  StepFunction f;
  std::int64_t shift = 0;

  friend bool operator==(const LampElement&, const LampElement&) = default;
  friend std::strong_ordering operator<=>(const LampElement& a, const LampElement& b) {
    if (auto c = a.shift <=> b.shift; c != 0) return c;
    return a.f <=> b.f;
  }
};

/// Element (f, b) of the restricted wreath product A wr B. `f` lists the
/// support sorted by key with no identity values.
struct WreathElement {
  std::vector<std::pair<Element, Element>> f;
  Element top;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend std::strong_ordering operator<=>(const WreathElement& a, const WreathElement& b) {
    if (auto c = a.top <=> b.top; c != 0) return c;
    return a.f <=> b.f;
  }
};

/// Element of G_level in the tower G_0 < G_1 < ..., G_{i+1} = lamp(G_i).
struct TowerElement {
  std::uint32_t level = 0;
  Element payload;

  friend bool operator==(const TowerElement&, const TowerElement&) = default;
  friend std::strong_ordering operator<=>(const TowerElement& a, const TowerElement& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    return a.payload <=> b.payload;
  }
};

/// Element of W = union of W_i, W_0 = lamp(A), W_{i+1} = W_i wr lamp(A).
/// The payload is a lamp element at level 0 and a wreath element above.
struct WElement {
  std::uint32_t level = 0;
  Element payload;

  friend bool operator==(const WElement&, const WElement&) = default;
  friend std::strong_ordering operator<=>(const WElement& a, const WElement& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    return a.payload <=> b.payload;
  }
};

/// t^m * (t^-depth w t^depth) in the descending HNN extension C = theta(A).
/// Canonical: depth == 0 or w is not in the image of phi.
struct CElement {
  std::int64_t m = 0;
  std::uint32_t depth = 0;
  WElement w;

  friend bool operator==(const CElement&, const CElement&) = default;
  friend std::strong_ordering operator<=>(const CElement& a, const CElement& b) {
    if (auto c = a.m <=> b.m; c != 0) return c;
    if (auto c = a.depth <=> b.depth; c != 0) return c;
    return a.w <=> b.w;
  }
};

/// Element of theta^level(A) inside the union of the theta tower.
struct LimitElement {
  std::uint32_t level = 0;
  Element payload;

  friend bool operator==(const LimitElement&, const LimitElement&) = default;
  friend std::strong_ordering operator<=>(const LimitElement& a, const LimitElement& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    return a.payload <=> b.payload;
  }
};

namespace detail {
inline std::strong_ordering compare_integers(const Integer& a, const Integer& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}
}  // namespace detail

struct ElementNode {
  std::variant<Integer, Permutation, LampElement, WreathElement, TowerElement, CElement,
               LimitElement>
      value;
};

template <class T>
Element::Element(T payload)
    : node_(std::make_shared<const ElementNode>(ElementNode{std::move(payload)})) {}

template <class T>
const T* Element::get_if() const {
  return std::get_if<T>(&node_->value);
}

template <class T>
const T& Element::as(const char* context) const {
  if (const T* p = get_if<T>()) return *p;
  throw TypeError(std::string("element variant does not match group in ") + context);
}

inline std::size_t Element::index() const { return node_->value.index(); }

inline bool operator==(const Element& a, const Element& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->value == b.node_->value;
}

inline std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = a.node_->value;
  const auto& y = b.node_->value;
  if (x.index() != y.index()) return x.index() <=> y.index();
  if (const auto* i = std::get_if<Integer>(&x))
    return detail::compare_integers(*i, std::get<Integer>(y));
  return std::visit(
      [&y](const auto& lhs) -> std::strong_ordering {
        using T = std::decay_t<decltype(lhs)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return detail::compare_integers(lhs, std::get<Integer>(y));
        } else {
          return lhs <=> std::get<T>(y);
        }
      },
      x);
}

}  // namespace wm
