#pragma once

#include "wmgroups/errors.hpp"
#include "wmgroups/free_word.hpp"
#include "wmgroups/permutation.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace wm {

inline constexpr std::size_t default_verbal_order_cap = 10000;

/// All elements of the group generated by `gens`, sorted.
inline std::vector<Permutation> group_closure(const std::vector<Permutation>& gens,
                                              std::size_t order_cap = default_verbal_order_cap) {
  std::set<Permutation> seen{Permutation()};
  std::vector<Permutation> queue{Permutation()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      Permutation next = queue[k] * g;
      if (seen.insert(next).second) {
        if (seen.size() > order_cap)
          throw CapabilityError("group order exceeds cap " + std::to_string(order_cap));
        queue.push_back(std::move(next));
      }
    }
  return {seen.begin(), seen.end()};
}

struct VerbalSubgroup {
  std::vector<Permutation> elements;  // sorted
  std::size_t order() const { return elements.size(); }
};

inline Permutation evaluate_word(const FreeWord& w, const std::vector<Permutation>& values) {
  Permutation p;
  for (const Letter& l : w.letters()) p = p * (l.exp > 0 ? values[l.gen - 1] : values[l.gen - 1].inverse());
  return p;
}

/// Subgroup of G = <gens> generated by all values of the words under all
/// substitutions of G-elements for their variables.
inline VerbalSubgroup verbal_subgroup(const std::vector<Permutation>& gens, const std::vector<FreeWord>& words,
                                      std::size_t order_cap = default_verbal_order_cap) {
  const auto group = group_closure(gens, order_cap);
  std::set<Permutation> values;
  for (const auto& w : words) {
    const std::uint32_t vars = w.max_generator();
    double count = 1;
    for (std::uint32_t k = 0; k < vars; ++k) count *= static_cast<double>(group.size());
    if (count > 5e7) throw CapabilityError("too many substitutions for " + w.to_string());
    std::vector<std::size_t> choice(vars, 0);
    std::vector<Permutation> assignment(vars);
    for (;;) {
      for (std::uint32_t k = 0; k < vars; ++k) assignment[k] = group[choice[k]];
      values.insert(evaluate_word(w, assignment));
      std::uint32_t k = 0;
      while (k < vars && ++choice[k] == group.size()) choice[k++] = 0;
      if (k == vars) break;
    }
  }
  return {group_closure({values.begin(), values.end()}, order_cap)};
}

}  // namespace wm
