#pragma once

#include "wmgroups/coset_table.hpp"
#include "wmgroups/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wm {

enum class WmVerdict { ConsistentUpTo, NotWm, Inconclusive };

struct WmReport {
  std::uint32_t max_index = 0;
  std::vector<Integer> abelianization;
  bool abelianization_trivial = false;
  bool no_low_index_subgroups = false;
  bool search_partial = false;
  std::size_t subgroups_found = 0;
  WmVerdict verdict = WmVerdict::Inconclusive;
  std::string witness;
  std::optional<LowIndexSubgroup> witness_subgroup;

  std::string verdict_text() const {
    switch (verdict) {
      case WmVerdict::ConsistentUpTo:
        return "consistent-with-WM up to " + std::to_string(max_index);
      case WmVerdict::NotWm:
        return "NOT WM";
      case WmVerdict::Inconclusive:
        break;
    }
    return "inconclusive (index search hit its node budget)";
  }

  /// 0 consistent, 2 not WM, 1 inconclusive.
  int exit_code() const {
    return verdict == WmVerdict::ConsistentUpTo ? 0 : verdict == WmVerdict::NotWm ? 2 : 1;
  }
};

inline const char* wm_report_disclaimer =
    "Bounded necessary-condition check only: a nontrivial abelian or finite quotient rules out WM, "
    "but their absence up to the searched index does not prove WM. Amenability and the absence of "
    "free subgroups cannot be checked here.";

inline std::string invariant_factors_string(const std::vector<Integer>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].str();
  return s + ")";
}

/// An infinite abelianization is reported directly; otherwise a finite-index
/// subgroup (a finite quotient through the coset action) is preferred, with
/// a finite abelianization as the fallback witness.
inline WmReport wm_necessary_report(const Presentation& p, std::uint32_t k,
                                    std::uint64_t node_budget = default_low_index_budget) {
  if (k < 2) throw PreconditionError("maximal index must be at least 2");
  WmReport r;
  r.max_index = k;
  r.abelianization = abelianization(p);
  r.abelianization_trivial = r.abelianization.empty();
  const auto low = low_index_subgroups(p, k, node_budget);
  r.search_partial = low.partial;
  r.subgroups_found = low.subgroups.size();
  r.no_low_index_subgroups = low.subgroups.empty() && !low.partial;

  const bool free_part = std::find(r.abelianization.begin(), r.abelianization.end(), Integer(0)) !=
                         r.abelianization.end();
  if (free_part) {
    r.verdict = WmVerdict::NotWm;
    r.witness = "abelianization " + invariant_factors_string(r.abelianization);
  } else if (!low.subgroups.empty()) {
    r.verdict = WmVerdict::NotWm;
    r.witness_subgroup = low.subgroups.front();
    r.witness = "subgroup of index " + std::to_string(r.witness_subgroup->table.index());
  } else if (!r.abelianization_trivial) {
    r.verdict = WmVerdict::NotWm;
    r.witness = "abelianization " + invariant_factors_string(r.abelianization);
  } else if (low.partial) {
    r.verdict = WmVerdict::Inconclusive;
  } else {
    r.verdict = WmVerdict::ConsistentUpTo;
  }
  return r;
}

}  // namespace wm
