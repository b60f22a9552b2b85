#ifndef POIKM_SELFTEST_HPP_
#define POIKM_SELFTEST_HPP_

#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "block_monoid.hpp"
#include "congruence.hpp"
#include "enumeration.hpp"
#include "green.hpp"
#include "presentations.hpp"
#include "rank.hpp"
#include "verify.hpp"

namespace poikm {

struct CriterionResult {
  int number;
  std::string name;
  bool pass;
  std::string detail;
};

namespace selftest_detail {

inline constexpr std::uint64_t kSeed = 0x9e3779b97f4a7c15ULL;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, std::string const& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

struct SizedSpec {
  unsigned k;
  unsigned m;
  std::uint64_t size;
};

//! The desk-scale instances with their orders, frozen from the closed
//! form and double-checked by the definition-filter oracle at n <= 6.
inline std::vector<SizedSpec> const& desk_specs() {
  static std::vector<SizedSpec> const specs = {
      {2, 2, 13}, {3, 2, 63}, {2, 3, 61}, {4, 2, 321}, {2, 4, 673},
      {3, 3, 595}};
  return specs;
}

inline std::vector<PartialPerm> dx_generators(BlockSpec const& spec) {
  auto d = d_generators(spec);
  auto x = x_generators(spec);
  auto gens = d.members;
  gens.insert(gens.end(), x.members.begin(), x.members.end());
  return gens;
}

inline std::vector<PartialPerm> abx_generators(BlockSpec const& spec) {
  auto abc = abc_generators(spec);
  auto x = x_generators(spec);
  auto gens = abc.a.members;
  gens.insert(gens.end(), abc.b.members.begin(), abc.b.members.end());
  gens.insert(gens.end(), x.members.begin(), x.members.end());
  return gens;
}

inline std::vector<PartialPerm> bcx_generators(BlockSpec const& spec) {
  auto abc = abc_generators(spec);
  auto x = x_generators(spec);
  auto gens = abc.b.members;
  gens.insert(gens.end(), abc.c.members.begin(), abc.c.members.end());
  gens.insert(gens.end(), x.members.begin(), x.members.end());
  return gens;
}

inline std::set<PartialPerm> element_set(MonoidTable const& table) {
  return {table.elements.begin(), table.elements.end()};
}

// --- criterion 1: size formula, three independent routes ---
inline CriterionResult criterion_sizes() {
  Check c;
  std::string sizes;
  for (auto const& [k, m, expected] : desk_specs()) {
    BlockSpec spec(k, m);
    c.require(size_formula(k, m) == BigCount(expected),
              spec.to_string() + ": closed form disagrees with "
                  + std::to_string(expected));
    auto table = enumerate(spec.degree(), dx_generators(spec));
    c.require(table.size() == expected,
              spec.to_string() + ": closure gave "
                  + std::to_string(table.size()) + ", expected "
                  + std::to_string(expected));
    if (spec.degree() <= 6) {
      auto filtered = members_by_filter(spec);
      c.require(std::set<PartialPerm>(filtered.begin(), filtered.end())
                    == element_set(table),
                spec.to_string()
                    + ": definition filter disagrees with closure");
    }
    sizes += " " + spec.to_string() + "=" + std::to_string(table.size());
  }
  return {1, "size formula",
          c.ok, c.ok ? "formula == closure == filter oracle;" + sizes
                     : c.detail};
}

// --- criterion 2: the three generating sets have equal closures ---
inline CriterionResult criterion_generating_sets() {
  Check c;
  for (auto const& [k, m, expected] : desk_specs()) {
    BlockSpec spec(k, m);
    auto dx = element_set(enumerate(spec.degree(), dx_generators(spec)));
    auto abx = element_set(enumerate(spec.degree(), abx_generators(spec)));
    auto bcx = element_set(enumerate(spec.degree(), bcx_generators(spec)));
    c.require(dx == abx && abx == bcx,
              spec.to_string() + ": generating set closures differ");
    c.require(dx.size() == expected,
              spec.to_string() + ": unexpected closure size");
  }
  return {2, "generating sets coincide", c.ok,
          c.ok ? "abx == bcx == dx closures at all six instances"
               : c.detail};
}

// --- criterion 3: J-class ladder and fingerprint characterizations ---
inline CriterionResult criterion_green() {
  Check c;
  for (auto const& [k, m, expected] : std::vector<SizedSpec>{
           {2, 2, 13}, {3, 2, 63}, {2, 3, 61}}) {
    BlockSpec spec(k, m);
    auto table = enumerate(spec.degree(), dx_generators(spec));
    bool orbits = (k == 2 && m == 2);
    auto summary = green_summary(spec, table, orbits);
    c.require(summary.classes.size() == k + 1,
              spec.to_string() + ": wrong number of J-classes");
    c.require(summary.pass(), spec.to_string() + ": green summary failed");
    if (orbits) {
      c.require(summary.r_matches_domain && summary.l_matches_image
                    && summary.j_matches_image_size && summary.j_order_ok,
                "orbit computation disagrees with fingerprints at 2x2");
    }
  }
  return {3, "Green's relations", c.ok,
          c.ok ? "J-ladder sizes exact; orbit cross-check at 2x2" : c.detail};
}

// --- criterion 4: rank is 2k ---
inline CriterionResult criterion_rank() {
  Check c;
  // Exhaustive certification at 2x2.
  {
    BlockSpec spec(2, 2);
    auto table = enumerate(spec.degree(), dx_generators(spec));
    auto result = minimal_generating_size(
        table, 4, 20'000'000, image_deficient_requirement(spec, table));
    c.require(result.found && result.size == 4,
              "2x2: exhaustive search did not certify rank 4");
  }
  // Unit group ranks by exhaustive search.
  for (auto const& [k, m, unit_rank] :
       std::vector<SizedSpec>{{3, 2, 3}, {2, 3, 2}}) {
    BlockSpec spec(k, m);
    auto units = enumerate(spec.degree(), d_generators(spec).members);
    c.require(BigCount(units.size())
                  == boost::multiprecision::pow(big_factorial(m), k),
              spec.to_string() + ": unit group has wrong order");
    auto result = minimal_generating_size(units, unit_rank);
    c.require(result.found && result.size == unit_rank,
              spec.to_string() + ": unit group rank is not "
                  + std::to_string(unit_rank));
    if (result.found && result.size > 0) {
      auto smaller = minimal_generating_size(units, unit_rank - 1);
      c.require(!smaller.found,
                spec.to_string() + ": unit group rank smaller than expected");
    }
  }
  // Lower-bound certificate for the 2k-element generating set.
  for (auto const& [k, m, expected] : std::vector<SizedSpec>{
           {2, 2, 13}, {3, 2, 63}, {2, 3, 61}}) {
    BlockSpec spec(k, m);
    auto gens = dx_generators(spec);
    auto table = enumerate(spec.degree(), gens);
    c.require(table.size() == expected,
              spec.to_string() + ": dx does not generate");
    std::vector<std::uint32_t> candidate;
    for (auto const& g : gens) {
      candidate.push_back(*table.index_of(g));
    }
    auto report = rank_lower_bound_check(spec, table, candidate);
    c.require(report.pass() && candidate.size() == 2 * k,
              spec.to_string() + ": lower-bound conditions failed");
  }
  return {4, "rank 2k", c.ok,
          c.ok ? "exhaustive at 2x2; unit ranks 3 and 2; certificates pass"
               : c.detail};
}

// --- criterion 5: relation satisfaction across 2 <= k, m <= 4 ---
inline CriterionResult criterion_relations_hold() {
  Check c;
  std::size_t total = 0;
  for (unsigned k = 2; k <= 4; ++k) {
    for (unsigned m = 2; m <= 4; ++m) {
      for (auto preset : {Preset::ABX, Preset::BCX, Preset::DX}) {
        auto bundle = build_preset(k, m, preset);
        auto report =
            check_relations(bundle.presentation, bundle.interpretation);
        total += report.checked;
        c.require(report.pass(),
                  BlockSpec(k, m).to_string() + " " + preset_name(preset)
                      + ": " + std::to_string(report.failures.size())
                      + " relation(s) fail");
      }
    }
  }
  return {5, "relation satisfaction", c.ok,
          c.ok ? std::to_string(total) + " relations hold across 27 instances"
               : c.detail};
}

// --- criterion 6: literal relation counts match the closed forms ---
inline CriterionResult criterion_relation_counts() {
  Check c;
  auto count = [](unsigned k, unsigned m, RelationFamily f) {
    return build_family(k, m, f).size();
  };
  for (unsigned k = 2; k <= 6; ++k) {
    for (unsigned m = 3; m <= 6; ++m) {
      auto id = BlockSpec(k, m).to_string();
      c.require(count(k, m, RelationFamily::R) == 2 * k * k + (m - 1) * k,
                id + ": |R| off");
      c.require(count(k, m, RelationFamily::U) == 2 * k * k + (m - 1) * k,
                id + ": |U| off");
      c.require(count(k, m, RelationFamily::V) == 2 * k * k + (m - 2) * k,
                id + ": |V| off");
      for (auto f :
           {RelationFamily::Rp, RelationFamily::Up, RelationFamily::Vp}) {
        c.require(count(k, m, f) == 2 * k * k + 2 * k, id + ": primed off");
      }
      c.require(count(k, m, RelationFamily::W) == (k * k + 5 * k - 4) / 2,
                id + ": |W| off");
      auto abx = build_preset(k, m, Preset::ABX).presentation;
      auto bcx = build_preset(k, m, Preset::BCX).presentation;
      auto dx = build_preset(k, m, Preset::DX).presentation;
      c.require(abx.relations.size() == (9 * k * k + (2 * m + 7) * k - 4) / 2,
                id + ": abx total off");
      c.require(bcx.relations.size() == abx.relations.size(),
                id + ": bcx total off");
      c.require(dx.relations.size() == (9 * k * k + (2 * m + 5) * k - 4) / 2,
                id + ": dx total off");
      c.require(abx.alphabet.size() == 3 * k && dx.alphabet.size() == 2 * k,
                id + ": alphabet size off");
    }
    // m = 2: the literal lists exceed the closed forms by exactly k.
    auto id = BlockSpec(k, 2).to_string();
    c.require(count(k, 2, RelationFamily::R) == 2 * k * k + k + k,
              id + ": |R| deviation off");
    c.require(count(k, 2, RelationFamily::V) == 2 * k * k + k,
              id + ": |V| deviation off");
    auto abx = build_preset(k, 2, Preset::ABX).presentation;
    auto dx = build_preset(k, 2, Preset::DX).presentation;
    c.require(abx.relations.size()
                  == (9 * k * k + 11 * k - 4) / 2 + k,
              id + ": abx deviation off");
    c.require(dx.relations.size() == (9 * k * k + 9 * k - 4) / 2 + k,
              id + ": dx deviation off");
  }
  return {6, "relation counts", c.ok,
          c.ok ? "closed forms exact for m >= 3; +k deviation at m = 2"
               : c.detail};
}

// --- criterion 7: the presentations define the monoid ---
inline CriterionResult criterion_presentations_define() {
  Check c;
  std::string lines;
  for (auto const& [k, m, expected] : std::vector<SizedSpec>{
           {2, 2, 13}, {3, 2, 63}, {2, 3, 61}}) {
    for (auto preset : {Preset::ABX, Preset::BCX, Preset::DX}) {
      auto verdict =
          verify_presentation(BlockSpec(k, m), preset, 10 * expected);
      c.require(verdict.pass() && verdict.quotient_classes == expected,
                verdict.summary_line());
    }
    lines += " " + std::to_string(expected);
  }
  return {7, "presentations define the monoid", c.ok,
          c.ok ? "all presets; quotients" + lines : c.detail};
}

// --- criterion 8: symmetric group presentation sanity ---
inline CriterionResult criterion_sm_sanity() {
  Check c;
  for (unsigned m = 2; m <= 4; ++m) {
    auto target = static_cast<std::size_t>(big_factorial(m));
    for (auto variant : {SmVariant::ab, SmVariant::bc}) {
      auto q = quotient_enumerate(sm_presentation(m, variant), 10 * target);
      c.require(q.size() == target,
                "degree " + std::to_string(m) + " quotient has "
                    + std::to_string(q.size()) + " classes");
    }
  }
  for (unsigned m = 2; m <= 3; ++m) {
    auto p = sm_presentation(m, SmVariant::ab);
    auto target = static_cast<std::size_t>(big_factorial(m));
    auto q = quotient_enumerate(product_presentation(p, p),
                                10 * target * target);
    c.require(q.size() == target * target,
              "squared degree-" + std::to_string(m) + " quotient has "
                  + std::to_string(q.size()) + " classes");
  }
  return {8, "symmetric group presentations", c.ok,
          c.ok ? "ab and bc give m!; products give (m!)^2" : c.detail};
}

// --- criterion 9: the member = (embedded block map) * (unit) splitting ---
inline CriterionResult criterion_decompose() {
  Check c;
  std::size_t total = 0;
  for (auto const& [k, m, expected] :
       std::vector<SizedSpec>{{2, 2, 13}, {3, 2, 63}}) {
    BlockSpec spec(k, m);
    auto table = enumerate(spec.degree(), dx_generators(spec));
    for (auto const& alpha : table.elements) {
      auto const [theta, gamma] = decompose(spec, alpha);
      auto embedded = psi_embed(spec, theta);
      c.require(compose(embedded, gamma) == alpha,
                spec.to_string() + ": round trip fails at "
                    + alpha.to_string());
      c.require(gamma.is_permutation() && is_member(spec, gamma),
                spec.to_string() + ": gamma is not a unit");
      auto image = embedded.image();
      for (point_type x = 1; x <= spec.degree(); ++x) {
        if (!std::binary_search(image.begin(), image.end(), x)) {
          c.require(gamma[x] == x,
                    spec.to_string() + ": gamma moves a point outside "
                        + alpha.to_string());
        }
      }
      ++total;
    }
  }
  return {9, "decomposition", c.ok,
          c.ok ? std::to_string(total) + " members split and recombine"
               : c.detail};
}

// --- criterion 10: property suites ---
inline CriterionResult criterion_properties() {
  Check c;
  std::mt19937_64 rng(kSeed);

  for (auto const& [k, m, expected] : desk_specs()) {
    BlockSpec spec(k, m);
    auto const n = spec.degree();
    auto table = enumerate(n, dx_generators(spec));
    bool exhaustive = (k == 2 && m == 2);
    auto random_member = [&]() -> PartialPerm const& {
      return table.elements[rng() % table.size()];
    };

    // Inverse monoid axioms and membership closure.
    auto check_pair = [&](PartialPerm const& a, PartialPerm const& b) {
      c.require(compose(a, compose(a.inverse(), a)) == a,
                spec.to_string() + ": a a^-1 a != a");
      c.require(a.inverse().inverse() == a,
                spec.to_string() + ": double inverse");
      c.require(is_member(spec, compose(a, b)),
                spec.to_string() + ": product left the monoid");
      c.require(is_member(spec, a.inverse()),
                spec.to_string() + ": inverse left the monoid");
      c.require(compose(a, b).image_size()
                    <= std::min(a.image_size(), b.image_size()),
                spec.to_string() + ": image size grew under composition");
    };
    if (exhaustive) {
      for (auto const& a : table.elements) {
        for (auto const& b : table.elements) {
          check_pair(a, b);
        }
      }
      // Idempotents are the restrictions of the identity and commute.
      std::vector<PartialPerm> idempotents;
      for (auto const& a : table.elements) {
        if (is_idempotent(a)) {
          idempotents.push_back(a);
          for (point_type x = 1; x <= n; ++x) {
            c.require(a[x] == UNDEF || a[x] == x,
                      "idempotent is not an identity restriction");
          }
        }
      }
      for (auto const& e : idempotents) {
        for (auto const& f : idempotents) {
          c.require(compose(e, f) == compose(f, e),
                    "idempotents do not commute");
        }
      }
    } else {
      for (int trial = 0; trial < 1000; ++trial) {
        check_pair(random_member(), random_member());
      }
    }

    // Unit count and the d-to-b/c recovery identities.
    std::size_t units = 0;
    for (auto const& e : table.elements) {
      if (e.image_size() == n) {
        ++units;
      }
    }
    c.require(BigCount(units) == boost::multiprecision::pow(big_factorial(m), k),
              spec.to_string() + ": wrong number of units");
    auto abc = abc_generators(spec);
    auto d = d_generators(spec);
    for (unsigned i = 1; i <= k; ++i) {
      auto next = (i == k) ? 1 : i + 1;
      c.require(pow(d.members[i - 1], m) == abc.c.members[next - 1],
                spec.to_string() + ": d^m recovery fails");
      c.require(pow(d.members[i - 1], (m - 1) * (m - 1))
                    == abc.b.members[i - 1],
                spec.to_string() + ": d^{(m-1)^2} recovery fails");
      c.require(pow(abc.b.members[i - 1], m - 1)
                    == pow(d.members[i - 1], m - 1),
                spec.to_string() + ": b^{m-1} = d^{m-1} fails");
      c.require(pow(d.members[i - 1], m * (m - 1)).is_identity(),
                spec.to_string() + ": d^{m(m-1)} != 1");
    }
  }

  // Composition is associative (random triples, degree <= 8).
  {
    auto everything = all_partial_perms(4);
    for (int trial = 0; trial < 1000; ++trial) {
      auto const& a = everything[rng() % everything.size()];
      auto const& b = everything[rng() % everything.size()];
      auto const& cc = everything[rng() % everything.size()];
      c.require(compose(compose(a, b), cc) == compose(a, compose(b, cc)),
                "composition is not associative");
    }
  }

  // The order-preserving embedding is an injective homomorphism whose
  // image is exactly the order-preserving members; exhaustive at k <= 3.
  for (unsigned k = 2; k <= 3; ++k) {
    BlockSpec spec(k, 2);
    std::vector<PartialPerm> poi_k;
    for (auto const& t : all_partial_perms(k)) {
      if (is_order_preserving(t)) {
        poi_k.push_back(t);
      }
    }
    std::set<PartialPerm> images;
    for (auto const& t1 : poi_k) {
      images.insert(psi_embed(spec, t1));
      for (auto const& t2 : poi_k) {
        c.require(psi_embed(spec, compose(t1, t2))
                      == compose(psi_embed(spec, t1), psi_embed(spec, t2)),
                  "block embedding is not a homomorphism");
      }
    }
    c.require(images.size() == poi_k.size(),
              "block embedding is not injective");
    if (k == 2) {
      std::set<PartialPerm> order_preserving_members;
      for (auto const& p : members_by_filter(spec)) {
        if (is_order_preserving(p)) {
          order_preserving_members.insert(p);
        }
      }
      c.require(images == order_preserving_members,
                "embedding image is not the order-preserving members");
    }
  }

  // The block-diagonal unit embedding is an injective homomorphism.
  {
    BlockSpec spec(2, 2);
    std::vector<PartialPerm> s2 = {PartialPerm::identity(2),
                                   PartialPerm::parse("2;1>2,2>1")};
    std::set<PartialPerm> seen;
    for (auto const& z1 : s2) {
      for (auto const& z2 : s2) {
        seen.insert(bar_embed(spec, {z1, z2}));
        for (auto const& w1 : s2) {
          for (auto const& w2 : s2) {
            c.require(bar_embed(spec, {compose(z1, w1), compose(z2, w2)})
                          == compose(bar_embed(spec, {z1, z2}),
                                     bar_embed(spec, {w1, w2})),
                      "unit embedding is not a homomorphism");
          }
        }
      }
    }
    c.require(seen.size() == 4, "unit embedding is not injective");
  }

  // Rebasing: conjugation carries an arbitrary ordered partition's
  // monoid isomorphically onto the interval-partition monoid.
  {
    OrderedPartition source({{1, 3}, {2, 4}});
    auto sigma = canonical_rebase_map(source);
    c.require(sigma == PartialPerm::parse("4;1>1,2>3,3>2,4>4"),
              "canonical rebase map is wrong");
    BlockSpec target(2, 2);
    std::vector<PartialPerm> source_members;
    for (auto const& p : all_partial_perms(4)) {
      if (is_member(source, p)) {
        source_members.push_back(p);
      }
    }
    auto table = enumerate(4, dx_generators(target));
    std::set<PartialPerm> rebased;
    for (auto const& a : source_members) {
      auto image = rebase(source.class_sizes(), sigma, a);
      c.require(is_member(target, image),
                "rebased element is not a member");
      rebased.insert(image);
      c.require(rebase(source.class_sizes(), PartialPerm::identity(4), a)
                    == a,
                "identity rebase is not the identity map");
      for (auto const& b : source_members) {
        c.require(rebase(source.class_sizes(), sigma, compose(a, b))
                      == compose(rebase(source.class_sizes(), sigma, a),
                                 rebase(source.class_sizes(), sigma, b)),
                  "rebase is not a homomorphism");
      }
    }
    c.require(rebased == element_set(table),
              "rebase is not onto the interval monoid");
    c.require(rebase(source.class_sizes(), sigma,
                     PartialPerm::parse("4;1>2,3>4"))
                  == PartialPerm::parse("4;1>3,2>4"),
              "worked rebase example is wrong");
  }

  return {10, "property suites", c.ok,
          c.ok ? "axioms, closure, embeddings, recovery, rebase all hold"
               : c.detail};
}

}  // namespace selftest_detail

inline std::vector<CriterionResult> run_acceptance() {
  using namespace selftest_detail;
  return {criterion_sizes(),
          criterion_generating_sets(),
          criterion_green(),
          criterion_rank(),
          criterion_relations_hold(),
          criterion_relation_counts(),
          criterion_presentations_define(),
          criterion_sm_sanity(),
          criterion_decompose(),
          criterion_properties()};
}

//! Runs every acceptance criterion, printing one PASS/FAIL line each.
//! Returns true when everything passed.
inline bool run_acceptance(std::ostream& os) {
  bool all = true;
  for (auto const& result : run_acceptance()) {
    os << (result.pass ? "PASS" : "FAIL") << " " << result.number << " "
       << result.name << ": " << result.detail << "\n";
    all = all && result.pass;
  }
  os << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
  return all;
}

}  // namespace poikm

#endif  // POIKM_SELFTEST_HPP_
