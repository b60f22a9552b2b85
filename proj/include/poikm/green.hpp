#ifndef POIKM_GREEN_HPP_
#define POIKM_GREEN_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "enumeration.hpp"

namespace poikm {

struct GreenJClassStats {
  unsigned t = 0;                 // image size is t * m
  BigCount expected_size = 0;     // C(k,t)^2 (m!)^t
  std::size_t actual_size = 0;
  std::size_t r_classes = 0;      // distinct domains, expected C(k,t)
  std::size_t l_classes = 0;      // distinct images, expected C(k,t)
  bool size_ok = false;
  bool class_counts_ok = false;
};

//! Green's structure of a fully enumerated block monoid: the chain of
//! J-classes indexed by image size, with per-class statistics, and the
//! fingerprint characterizations (R = equal domain, L = equal image,
//! J = equal image size) optionally cross-checked against the
//! definitional orbit computation on the Cayley graphs.
struct GreenSummary {
  std::vector<GreenJClassStats> classes;
  bool chain_ok = false;       // image sizes are exactly {0, m, ..., km}
  bool sizes_ok = false;       // every |J_t| matches the closed form
  bool class_counts_ok = false;
  std::size_t unit_h_class_size = 0;
  bool units_ok = false;       // identity's H-class has (m!)^k elements
  bool orbit_checked = false;
  bool r_matches_domain = false;
  bool l_matches_image = false;
  bool j_matches_image_size = false;
  bool j_order_ok = false;     // J_u <= J_v iff |Im u| <= |Im v|

  bool pass() const {
    bool base = chain_ok && sizes_ok && class_counts_ok && units_ok;
    if (!orbit_checked) {
      return base;
    }
    return base && r_matches_domain && l_matches_image
           && j_matches_image_size && j_order_ok;
  }
};

namespace detail {

//! Strongly connected components of a functional multigraph given by
//! successor lists; returns a component id per node. Tarjan, iterative.
inline std::vector<std::uint32_t> scc_ids(
    std::vector<std::vector<std::uint32_t>> const& succ) {
  auto const n = succ.size();
  std::vector<std::uint32_t> ids(n, 0), low(n), num(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 1, comp = 0;
  struct Frame {
    std::uint32_t node;
    std::size_t edge;
  };
  for (std::uint32_t start = 0; start < n; ++start) {
    if (num[start] != 0) {
      continue;
    }
    std::vector<Frame> frames{{start, 0}};
    num[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < succ[v].size()) {
        auto w = succ[v][edge++];
        if (num[w] == 0) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          ++comp;
          while (true) {
            auto w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            ids[w] = comp;
            if (w == v) {
              break;
            }
          }
        }
        auto done = v;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().node] =
              std::min(low[frames.back().node], low[done]);
        }
      }
    }
  }
  return ids;
}

inline bool same_partition(std::vector<std::uint32_t> const& a,
                           std::vector<std::uint32_t> const& b) {
  std::map<std::uint32_t, std::uint32_t> fwd, bwd;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it1, in1] = fwd.emplace(a[i], b[i]);
    auto [it2, in2] = bwd.emplace(b[i], a[i]);
    if (it1->second != b[i] || it2->second != a[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline GreenSummary green_summary(BlockSpec const& spec,
                                  MonoidTable const& table,
                                  bool verify_orbits = false) {
  auto const k = spec.num_blocks;
  auto const m = spec.block_size;
  if (table.degree != spec.degree()) {
    throw parameter_error("green_summary: table degree does not match spec");
  }
  if (BigCount(table.size()) != size_formula(k, m)) {
    throw parameter_error(
        "green_summary: table does not enumerate the whole monoid");
  }
  for (auto const& e : table.elements) {
    if (!is_member(spec, e)) {
      throw parameter_error("green_summary: table contains a non-member");
    }
  }

  auto const n = table.size();
  GreenSummary out;

  // Fingerprints.
  std::vector<std::uint32_t> dom_id(n), im_id(n), rank_id(n);
  {
    std::map<std::vector<point_type>, std::uint32_t> doms, ims;
    for (std::size_t e = 0; e < n; ++e) {
      dom_id[e] = doms.emplace(table.elements[e].domain(),
                               static_cast<std::uint32_t>(doms.size()))
                      .first->second;
      im_id[e] = ims.emplace(table.elements[e].image(),
                             static_cast<std::uint32_t>(ims.size()))
                     .first->second;
      rank_id[e] =
          static_cast<std::uint32_t>(table.elements[e].image_size());
    }
  }

  // Per-J-class statistics, indexed by image size t*m.
  std::set<std::uint32_t> sizes_present(rank_id.begin(), rank_id.end());
  out.chain_ok = sizes_present.size() == k + 1;
  for (unsigned t = 0; t <= k; ++t) {
    out.chain_ok = out.chain_ok && sizes_present.count(t * m) == 1;
  }
  out.sizes_ok = true;
  out.class_counts_ok = true;
  for (unsigned t = 0; t <= k; ++t) {
    GreenJClassStats stats;
    stats.t = t;
    stats.expected_size = j_class_size(k, m, t);
    std::set<std::uint32_t> doms, ims;
    for (std::size_t e = 0; e < n; ++e) {
      if (rank_id[e] == t * m) {
        ++stats.actual_size;
        doms.insert(dom_id[e]);
        ims.insert(im_id[e]);
      }
    }
    stats.r_classes = doms.size();
    stats.l_classes = ims.size();
    stats.size_ok = BigCount(stats.actual_size) == stats.expected_size;
    auto expected_classes = big_binomial(k, t);
    stats.class_counts_ok = BigCount(stats.r_classes) == expected_classes
                            && BigCount(stats.l_classes) == expected_classes;
    out.sizes_ok = out.sizes_ok && stats.size_ok;
    out.class_counts_ok = out.class_counts_ok && stats.class_counts_ok;
    out.classes.push_back(stats);
  }

  // Identity's H-class: equal domain and image as the identity.
  for (std::size_t e = 0; e < n; ++e) {
    if (dom_id[e] == dom_id[0] && im_id[e] == im_id[0]) {
      ++out.unit_h_class_size;
    }
  }
  out.units_ok = BigCount(out.unit_h_class_size)
                 == boost::multiprecision::pow(big_factorial(m), k);

  if (verify_orbits) {
    out.orbit_checked = true;
    // Right and left Cayley graphs over the table's generators.
    std::vector<std::vector<std::uint32_t>> right_succ(n), left_succ(n),
        both_succ(n);
    for (std::size_t e = 0; e < n; ++e) {
      for (std::size_t g = 0; g < table.generators.size(); ++g) {
        auto r = table.right[e][g];
        auto l = table.index_of(
            compose(table.generators[g], table.elements[e]));
        right_succ[e].push_back(r);
        left_succ[e].push_back(*l);
        both_succ[e].push_back(r);
        both_succ[e].push_back(*l);
      }
    }
    auto r_orbit = detail::scc_ids(right_succ);
    auto l_orbit = detail::scc_ids(left_succ);
    auto j_orbit = detail::scc_ids(both_succ);
    out.r_matches_domain = detail::same_partition(r_orbit, dom_id);
    out.l_matches_image = detail::same_partition(l_orbit, im_id);
    out.j_matches_image_size = detail::same_partition(j_orbit, rank_id);

    // J-order: u lies in the two-sided ideal of v iff rank(u) <= rank(v).
    out.j_order_ok = true;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::uint32_t> todo{static_cast<std::uint32_t>(v)};
      reach[v][v] = true;
      while (!todo.empty()) {
        auto u = todo.back();
        todo.pop_back();
        for (auto w : both_succ[u]) {
          if (!reach[v][w]) {
            reach[v][w] = true;
            todo.push_back(w);
          }
        }
      }
    }
    for (std::size_t u = 0; u < n && out.j_order_ok; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (reach[v][u] != (rank_id[u] <= rank_id[v])) {
          out.j_order_ok = false;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace poikm

#endif  // POIKM_GREEN_HPP_
