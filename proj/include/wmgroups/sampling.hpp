#pragma once

#include "wmgroups/free_word.hpp"
#include "wmgroups/group.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>

namespace wm {

using Rng = std::mt19937_64;

/// Size knobs for random elements. Nested constructions reuse the same
/// shape at every level, so keep these small.
struct SampleShape {
  std::int64_t int_range = 6;
  std::size_t max_breaks = 3;
  std::int64_t position_range = 4;
  std::int64_t shift_range = 2;
  std::size_t max_support = 2;
  std::int64_t max_t_power = 1;
  std::uint32_t max_depth = 1;
  std::uint32_t max_w_level = 1;
  std::uint32_t max_tower_level = 2;
  std::uint32_t max_theta_level = 1;
  std::uint32_t altfin_window = 7;
};

namespace detail {
inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}
}  // namespace detail

inline Permutation random_even_permutation(Rng& rng, std::uint32_t n);

inline Element random_element(const GroupDesc& g, Rng& rng, const SampleShape& shape = {}) {
  using detail::uniform;
  switch (g.kind()) {
    case GroupKind::Integers:
      return Element(Integer(uniform(rng, -shape.int_range, shape.int_range)));

    case GroupKind::FinitePermutation: {
      Permutation p;
      const auto& gens = g.generators();
      if (gens.empty()) return Element(p);
      const std::int64_t steps = 2 * static_cast<std::int64_t>(g.degree()) + 3;
      for (std::int64_t i = 0; i < steps; ++i)
        p = p * gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(gens.size()) - 1))];
      return Element(p);
    }

    case GroupKind::AltFin: {
      return Element(random_even_permutation(rng, shape.altfin_window));
    }

    case GroupKind::Lamp: {
      const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(shape.max_breaks)));
      std::set<std::int64_t> points;
      while (points.size() < k) points.insert(uniform(rng, -shape.position_range, shape.position_range));
      std::vector<std::int64_t> breaks(points.begin(), points.end());
      std::vector<Element> values;
      for (std::size_t i = 0; i < k; ++i) values.push_back(random_element(g.base(), rng, shape));
      values.push_back(identity(g.base()));
      return make_lamp_element(g, std::move(breaks), std::move(values),
                               uniform(rng, -shape.shift_range, shape.shift_range));
    }

    case GroupKind::RestrictedWreath: {
      const auto k = uniform(rng, 0, static_cast<std::int64_t>(shape.max_support));
      std::vector<std::pair<Element, Element>> pairs;
      for (std::int64_t i = 0; i < k; ++i)
        pairs.emplace_back(random_element(g.top(), rng, shape), random_element(g.base(), rng, shape));
      return make_wreath_element(g, std::move(pairs), random_element(g.top(), rng, shape));
    }

    case GroupKind::Theta: {
      const auto level = static_cast<std::uint32_t>(
          uniform(rng, 0, std::min(shape.max_w_level, g.limits().wreath_level)));
      const Element payload = random_element(g.w_level(level), rng, shape);
      const auto depth = static_cast<std::uint32_t>(uniform(rng, 0, shape.max_depth));
      return Element(make_c(g, uniform(rng, -shape.max_t_power, shape.max_t_power), depth,
                            WElement{level, payload}));
    }

    case GroupKind::Tower: {
      const auto level =
          static_cast<std::uint32_t>(uniform(rng, 0, std::min(shape.max_tower_level, g.max_level())));
      return tower_at(g, level, random_element(g.level(level), rng, shape));
    }

    case GroupKind::ThetaLimit: {
      const auto level =
          static_cast<std::uint32_t>(uniform(rng, 0, std::min(shape.max_theta_level, g.max_level())));
      return limit_at(g, level, random_element(g.level(level), rng, shape));
    }
  }
  throw InvariantError("unknown group kind");
}

inline Element random_nontrivial(const GroupDesc& g, Rng& rng, const SampleShape& shape = {}) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Element x = random_element(g, rng, shape);
    if (!is_identity(g, x)) return x;
  }
  throw PreconditionError("could not sample a nontrivial element of " + g.name());
}

/// Freely reduced word of length at most `max_length` in x_1..x_rank.
inline FreeWord random_word(Rng& rng, std::uint32_t rank, std::size_t max_length) {
  const auto n = detail::uniform(rng, 0, static_cast<std::int64_t>(max_length));
  std::vector<Letter> letters;
  for (std::int64_t i = 0; i < n; ++i)
    letters.push_back({static_cast<std::uint32_t>(detail::uniform(rng, 1, rank)),
                       detail::uniform(rng, 0, 1) ? 1 : -1});
  return FreeWord(letters);
}

/// Uniformly shuffled even permutation of 1..n.
inline Permutation random_even_permutation(Rng& rng, std::uint32_t n) {
  std::vector<Permutation::Point> images(n);
  std::iota(images.begin(), images.end(), 1u);
  for (std::uint32_t i = n; i > 1; --i)
    std::swap(images[i - 1], images[static_cast<std::size_t>(detail::uniform(rng, 0, i - 1))]);
  Permutation p = Permutation::from_images(images);
  return p.is_even() ? p : Permutation::cycle({1, 2}) * p;
}

}  // namespace wm
