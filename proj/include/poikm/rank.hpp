#ifndef POIKM_RANK_HPP_
#define POIKM_RANK_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "enumeration.hpp"

namespace poikm {

struct GeneratingSetSearch {
  bool found = false;
  std::size_t size = 0;                  // valid when found
  std::vector<std::uint32_t> witness;    // element indices; valid when found
};

namespace detail {

//! Closure of a candidate set inside the table, by right multiplication.
//! Monoid closure, so the identity (index 0) is always included.
inline std::size_t closure_size(MonoidTable const& table,
                                std::span<std::uint32_t const> candidate) {
  std::vector<bool> in(table.size(), false);
  std::vector<std::uint32_t> todo;
  in[0] = true;
  todo.push_back(0);
  for (auto c : candidate) {
    if (!in[c]) {
      in[c] = true;
      todo.push_back(c);
    }
  }
  std::size_t count = todo.size();
  while (!todo.empty()) {
    auto e = todo.back();
    todo.pop_back();
    for (auto c : candidate) {
      auto p = table.index_of(compose(table.elements[e], table.elements[c]));
      if (!in[*p]) {
        in[*p] = true;
        todo.push_back(*p);
        ++count;
      }
    }
  }
  return count;
}

}  // namespace detail

//! Smallest s <= search_cap such that some s-subset of the table's
//! elements generates the whole table, found by exhaustive subset search
//! in lexicographic order. Refuses up front (budget_error) when the
//! total number of subsets to try exceeds the budget. The optional
//! requirement is a proved-necessary condition used to skip subsets; it
//! must never reject a generating set.
inline GeneratingSetSearch minimal_generating_size(
    MonoidTable const& table, std::size_t search_cap,
    std::uint64_t budget = 20'000'000,
    std::function<bool(std::span<std::uint32_t const>)> requirement = {}) {
  auto const n = table.size();
  long double subsets = 0;
  {
    long double c = 1;
    for (std::size_t s = 0; s <= search_cap && s <= n; ++s) {
      subsets += c;
      c = c * static_cast<long double>(n - s) / static_cast<long double>(s + 1);
      if (subsets > static_cast<long double>(budget)) {
        throw budget_error("minimal_generating_size: subset count exceeds "
                           "budget; use rank_lower_bound_check instead");
      }
    }
  }
  for (std::size_t s = 0; s <= std::min<std::size_t>(search_cap, n); ++s) {
    std::vector<std::uint32_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) {
      pick[i] = static_cast<std::uint32_t>(i);
    }
    while (true) {
      if ((!requirement || requirement(pick))
          && detail::closure_size(table, pick) == n) {
        return {true, s, pick};
      }
      // next lexicographic s-combination of 0 .. n-1
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == n - s + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++pick[i - 1];
      for (auto j = i; j < s; ++j) {
        pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return {};
}

//! The two necessary conditions any generating set of the block monoid
//! must meet: (i) for each block j it contains an element whose image is
//! exactly the complement of I_j, and (ii) its units generate the whole
//! unit group. A candidate of size 2k passing both, and generating, is
//! of minimum possible size.
struct RankConditionReport {
  bool image_deficient_ok = false;
  std::vector<point_type> missing_blocks;  // js with no matching image
  bool units_generate_ok = false;
  std::size_t units_in_candidate = 0;
  std::size_t units_generated = 0;
  std::size_t units_total = 0;
  std::size_t candidate_size = 0;

  bool pass() const { return image_deficient_ok && units_generate_ok; }
};

inline RankConditionReport rank_lower_bound_check(
    BlockSpec const& spec, MonoidTable const& table,
    std::vector<std::uint32_t> const& candidate) {
  auto const k = spec.num_blocks;
  auto const n = spec.degree();
  RankConditionReport report;
  report.candidate_size = candidate.size();

  // (i) one element with image exactly the complement of each block.
  for (point_type j = 1; j <= k; ++j) {
    std::vector<point_type> want;
    for (point_type x = 1; x <= n; ++x) {
      if (spec.block_of(x) != j) {
        want.push_back(x);
      }
    }
    bool found = false;
    for (auto c : candidate) {
      if (table.elements[c].image() == want) {
        found = true;
        break;
      }
    }
    if (!found) {
      report.missing_blocks.push_back(j);
    }
  }
  report.image_deficient_ok = report.missing_blocks.empty();

  // (ii) the candidate's units must generate the whole unit group.
  std::vector<std::uint32_t> unit_candidates;
  for (auto c : candidate) {
    if (table.elements[c].image_size() == n) {
      unit_candidates.push_back(c);
    }
  }
  report.units_in_candidate = unit_candidates.size();
  for (auto const& e : table.elements) {
    if (e.image_size() == n) {
      ++report.units_total;
    }
  }
  report.units_generated = detail::closure_size(table, unit_candidates);
  report.units_generate_ok = report.units_generated == report.units_total;
  return report;
}

//! Requirement functor for minimal_generating_size over a full block
//! monoid table: condition (i) above, which every generating set must
//! satisfy, so skipping subsets that fail it is sound.
inline std::function<bool(std::span<std::uint32_t const>)>
image_deficient_requirement(BlockSpec spec, MonoidTable const& table) {
  std::vector<std::vector<point_type>> complements;
  for (point_type j = 1; j <= spec.num_blocks; ++j) {
    std::vector<point_type> want;
    for (point_type x = 1; x <= spec.degree(); ++x) {
      if (spec.block_of(x) != j) {
        want.push_back(x);
      }
    }
    complements.push_back(std::move(want));
  }
  return [&table, complements](std::span<std::uint32_t const> pick) {
    for (auto const& want : complements) {
      bool found = false;
      for (auto c : pick) {
        if (table.elements[c].image() == want) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  };
}

}  // namespace poikm

#endif  // POIKM_RANK_HPP_
