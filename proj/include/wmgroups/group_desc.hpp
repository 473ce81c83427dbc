#pragma once

#include "wmgroups/errors.hpp"
#include "wmgroups/permutation.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wm {

/// Nesting bounds for the recursive constructions.
struct Limits {
  std::uint32_t tower_depth = 6;
  std::uint32_t theta_level = 3;
  std::uint32_t wreath_level = 4;
  std::uint32_t desc_depth = 16;
};

enum class GroupKind {
  Integers,
  FinitePermutation,
  AltFin,
  Lamp,
  RestrictedWreath,
  Theta,
  Tower,
  ThetaLimit,
};

class GroupDesc;
using Group = std::shared_ptr<const GroupDesc>;

/// Immutable description of a constructed group; the type of its elements.
class GroupDesc {
 public:
  GroupKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Limits& limits() const { return limits_; }

  /// Base group of Lamp, RestrictedWreath, Theta, Tower, ThetaLimit.
  const GroupDesc& base() const { return *base_; }
  const Group& base_ptr() const { return base_; }
  /// Acting group of RestrictedWreath.
  const GroupDesc& top() const { return *top_; }

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Every group in the tree carries a positive cone.
  bool order_capable() const { return order_capable_; }
  /// The cone is conjugation invariant (bi-ordered group).
  bool two_sided() const { return two_sided_; }
  std::uint32_t depth() const { return depth_; }

  /// W_i for a Theta description (W_0 = lamp(A)).
  const GroupDesc& w_level(std::uint32_t i) const {
    if (kind_ != GroupKind::Theta) throw TypeError("w_level on non-theta group");
    if (i >= levels_.size())
      throw DepthError("wreath level " + std::to_string(i) + " exceeds bound " +
                       std::to_string(limits_.wreath_level));
    return *levels_[i];
  }
  /// lamp(A) for a Theta description.
  const GroupDesc& abar() const { return w_level(0); }

  /// G_i for a Tower description, theta^i(A) for ThetaLimit.
  const GroupDesc& level(std::uint32_t i) const {
    if (kind_ != GroupKind::Tower && kind_ != GroupKind::ThetaLimit)
      throw TypeError("level() on non-tower group");
    if (i >= levels_.size())
      throw DepthError("level " + std::to_string(i) + " exceeds bound " +
                       std::to_string(levels_.size() - 1));
    return *levels_[i];
  }
  std::uint32_t max_level() const { return static_cast<std::uint32_t>(levels_.size() - 1); }

  friend Group make_integers();
  friend Group make_permutation_group(std::uint32_t, std::vector<Permutation>, std::string);
  friend Group make_altfin();
  friend Group make_lamp(Group, Limits);
  friend Group make_wreath(Group, Group, Limits);
  friend Group make_theta(Group, Limits);
  friend Group make_tower(Group, Limits);
  friend Group make_theta_limit(Group, Limits);

 private:
  GroupDesc() = default;

  GroupKind kind_ = GroupKind::Integers;
  std::string name_;
  Limits limits_;
  Group base_;
  Group top_;
  std::uint32_t degree_ = 0;
  std::vector<Permutation> generators_;
  bool order_capable_ = false;
  bool two_sided_ = false;
  std::uint32_t depth_ = 1;
  std::vector<Group> levels_;
};

inline Group make_integers() {
  auto g = std::shared_ptr<GroupDesc>(new GroupDesc());
  g->kind_ = GroupKind::Integers;
  g->name_ = "Z";
  g->order_capable_ = true;
  g->two_sided_ = true;
  return g;
}

/// Finite permutation group on {1..degree} given by generators.
inline Group make_permutation_group(std::uint32_t degree, std::vector<Permutation> gens,
                                    std::string name) {
  for (const auto& p : gens)
    if (p.largest_moved_point() > degree)
      throw PreconditionError("generator moves a point beyond the degree");
  auto g = std::shared_ptr<GroupDesc>(new GroupDesc());
  g->kind_ = GroupKind::FinitePermutation;
  g->degree_ = degree;
  g->generators_ = std::move(gens);
  g->name_ = std::move(name);
  return g;
}

inline Group make_symmetric(std::uint32_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::cycle({1, 2}));
    std::vector<Permutation::Point> all;
    for (std::uint32_t i = 1; i <= n; ++i) all.push_back(i);
    if (n >= 3) gens.push_back(Permutation::cycle(all));
  }
  return make_permutation_group(n, std::move(gens), "S(" + std::to_string(n) + ")");
}

inline Group make_alternating(std::uint32_t n) {
  std::vector<Permutation> gens;
  for (std::uint32_t i = 3; i <= n; ++i) gens.push_back(Permutation::cycle({1, 2, i}));
  return make_permutation_group(n, std::move(gens), "A(" + std::to_string(n) + ")");
}

inline Group make_cyclic(std::uint32_t n) {
  std::vector<Permutation> gens;
  std::vector<Permutation::Point> all;
  for (std::uint32_t i = 1; i <= n; ++i) all.push_back(i);
  if (n >= 2) gens.push_back(Permutation::cycle(all));
  return make_permutation_group(n, std::move(gens), "C(" + std::to_string(n) + ")");
}

/// Finitary even permutations of the positive integers.
inline Group make_altfin() {
  auto g = std::shared_ptr<GroupDesc>(new GroupDesc());
  g->kind_ = GroupKind::AltFin;
  g->name_ = "altfin";
  return g;
}

namespace detail {
inline void check_depth(const GroupDesc& g, const Limits& limits) {
  if (g.depth() + 1 > limits.desc_depth)
    throw DepthError("group description nesting exceeds bound " +
                     std::to_string(limits.desc_depth));
}
}  // namespace detail

inline Group make_lamp(Group base, Limits limits = {}) {
  detail::check_depth(*base, limits);
  auto g = std::shared_ptr<GroupDesc>(new GroupDesc());
  g->kind_ = GroupKind::Lamp;
  g->name_ = "lamp(" + base->name() + ")";
  g->limits_ = limits;
  g->order_capable_ = base->order_capable();
  g->two_sided_ = base->two_sided();
  g->depth_ = base->depth() + 1;
  g->base_ = std::move(base);
  return g;
}

inline Group make_wreath(Group base, Group top, Limits limits = {}) {
  detail::check_depth(*base, limits);
  detail::check_depth(*top, limits);
  auto g = std::shared_ptr<GroupDesc>(new GroupDesc());
  g->kind_ = GroupKind::RestrictedWreath;
  g->name_ = "wr(" + base->name() + "," + top->name() + ")";
  g->limits_ = limits;
  g->order_capable_ = base->order_capable() && top->order_capable();
  g->two_sided_ = base->two_sided() && top->two_sided();
  g->depth_ = std::max(base->depth(), top->depth()) + 1;
  g->base_ = std::move(base);
  g->top_ = std::move(top);
  return g;
}

/// C = theta(A): descending HNN extension of W = union W_i.
inline Group make_theta(Group base, Limits limits = {}) {
  detail::check_depth(*base, limits);
  auto g = std::shared_ptr<GroupDesc>(new GroupDesc());
  g->kind_ = GroupKind::Theta;
  g->name_ = "theta(" + base->name() + ")";
  g->limits_ = limits;
  g->order_capable_ = base->order_capable();
  g->two_sided_ = base->two_sided();
  g->depth_ = base->depth() + 1;
  Group abar = make_lamp(base, limits);
  g->levels_.push_back(abar);
  for (std::uint32_t i = 1; i <= limits.wreath_level; ++i)
    g->levels_.push_back(make_wreath(g->levels_.back(), abar, limits));
  g->base_ = std::move(base);
  return g;
}

/// Direct limit of G_0 = base < G_1 < ..., G_{i+1} = lamp(G_i).
inline Group make_tower(Group base, Limits limits = {}) {
  detail::check_depth(*base, limits);
  auto g = std::shared_ptr<GroupDesc>(new GroupDesc());
  g->kind_ = GroupKind::Tower;
  g->name_ = "tower(" + base->name() + ")";
  g->limits_ = limits;
  g->order_capable_ = base->order_capable();
  g->two_sided_ = base->two_sided();
  g->depth_ = base->depth() + 1;
  g->levels_.push_back(base);
  for (std::uint32_t i = 1; i <= limits.tower_depth; ++i)
    g->levels_.push_back(make_lamp(g->levels_.back(), limits));
  g->base_ = std::move(base);
  return g;
}

/// Union of A < theta(A) < theta(theta(A)) < ...
inline Group make_theta_limit(Group base, Limits limits = {}) {
  detail::check_depth(*base, limits);
  auto g = std::shared_ptr<GroupDesc>(new GroupDesc());
  g->kind_ = GroupKind::ThetaLimit;
  g->name_ = "thetalimit(" + base->name() + ")";
  g->limits_ = limits;
  g->order_capable_ = base->order_capable();
  g->two_sided_ = base->two_sided();
  g->depth_ = base->depth() + 1;
  g->levels_.push_back(base);
  for (std::uint32_t i = 1; i <= limits.theta_level; ++i)
    g->levels_.push_back(make_theta(g->levels_.back(), limits));
  g->base_ = std::move(base);
  return g;
}

}  // namespace wm
