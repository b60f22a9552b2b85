#include <catch2/catch_amalgamated.hpp>

#include <poikm/green.hpp>
#include <poikm/rank.hpp>
#include <poikm/selftest.hpp>

using namespace poikm;
using poikm::selftest_detail::dx_generators;

TEST_CASE("Green structure at 2x2 with orbit cross-check", "[green]") {
  BlockSpec spec(2, 2);
  auto table = enumerate(4, dx_generators(spec));
  auto summary = green_summary(spec, table, true);

  REQUIRE(summary.classes.size() == 3);
  REQUIRE(summary.classes[0].actual_size == 1);
  REQUIRE(summary.classes[1].actual_size == 8);
  REQUIRE(summary.classes[2].actual_size == 4);
  REQUIRE(summary.chain_ok);
  REQUIRE(summary.sizes_ok);
  // C(k, t) R-classes and L-classes per layer.
  REQUIRE(summary.classes[1].r_classes == 2);
  REQUIRE(summary.classes[1].l_classes == 2);
  REQUIRE(summary.class_counts_ok);
  // The identity's H-class is the unit group.
  REQUIRE(summary.unit_h_class_size == 4);
  REQUIRE(summary.units_ok);
  // Orbit computations agree with the fingerprints.
  REQUIRE(summary.orbit_checked);
  REQUIRE(summary.r_matches_domain);
  REQUIRE(summary.l_matches_image);
  REQUIRE(summary.j_matches_image_size);
  REQUIRE(summary.j_order_ok);
  REQUIRE(summary.pass());
}

TEST_CASE("Green structure at 3x2 and 2x3", "[green]") {
  for (auto const& spec : {BlockSpec(3, 2), BlockSpec(2, 3)}) {
    auto table = enumerate(spec.degree(), dx_generators(spec));
    auto summary = green_summary(spec, table, false);
    REQUIRE(summary.classes.size() == spec.num_blocks + 1);
    REQUIRE(summary.pass());
    for (auto const& cls : summary.classes) {
      REQUIRE(BigCount(cls.actual_size)
              == j_class_size(spec.num_blocks, spec.block_size, cls.t));
      REQUIRE(BigCount(cls.r_classes)
              == big_binomial(spec.num_blocks, cls.t));
    }
  }
}

TEST_CASE("green_summary validates its input", "[green]") {
  BlockSpec spec(2, 2);
  auto partial = enumerate(4, x_generators(spec).members);
  REQUIRE_THROWS_AS(green_summary(spec, partial, false), parameter_error);
  auto wrong_degree = enumerate(6, dx_generators(BlockSpec(3, 2)));
  REQUIRE_THROWS_AS(green_summary(spec, wrong_degree, false),
                    parameter_error);
}

TEST_CASE("minimal generating set search", "[rank]") {
  SECTION("the full 2x2 monoid needs 4 generators") {
    BlockSpec spec(2, 2);
    auto table = enumerate(4, dx_generators(spec));
    auto result = minimal_generating_size(table, 4);
    REQUIRE(result.found);
    REQUIRE(result.size == 4);
    REQUIRE(!minimal_generating_size(table, 3).found);
    auto pruned = minimal_generating_size(
        table, 4, 20'000'000, image_deficient_requirement(spec, table));
    REQUIRE(pruned.found);
    REQUIRE(pruned.size == 4);
  }
  SECTION("the 2x2 unit group is a Klein four-group of rank 2") {
    auto units = enumerate(4, d_generators(BlockSpec(2, 2)).members);
    REQUIRE(units.size() == 4);
    auto result = minimal_generating_size(units, 3);
    REQUIRE(result.found);
    REQUIRE(result.size == 2);
  }
  SECTION("the trivial monoid is generated by the empty set") {
    auto trivial = enumerate(3, {});
    auto result = minimal_generating_size(trivial, 2);
    REQUIRE(result.found);
    REQUIRE(result.size == 0);
  }
  SECTION("budget refusal") {
    BlockSpec spec(3, 2);
    auto table = enumerate(6, dx_generators(spec));
    REQUIRE_THROWS_AS(minimal_generating_size(table, 30, 1000),
                      budget_error);
  }
  SECTION("witness generates") {
    BlockSpec spec(2, 2);
    auto table = enumerate(4, dx_generators(spec));
    auto result = minimal_generating_size(table, 4);
    auto closure = enumerate(
        4, {table.elements[result.witness[0]],
            table.elements[result.witness[1]],
            table.elements[result.witness[2]],
            table.elements[result.witness[3]]});
    REQUIRE(closure.size() == table.size());
  }
}

TEST_CASE("rank lower bound conditions", "[rank]") {
  BlockSpec spec(2, 2);
  auto gens = dx_generators(spec);
  auto table = enumerate(4, gens);

  SECTION("the 2k-element generating set passes both conditions") {
    std::vector<std::uint32_t> candidate;
    for (auto const& g : gens) {
      candidate.push_back(*table.index_of(g));
    }
    auto report = rank_lower_bound_check(spec, table, candidate);
    REQUIRE(report.image_deficient_ok);
    REQUIRE(report.units_generate_ok);
    REQUIRE(report.candidate_size == 4);
    REQUIRE(report.pass());
  }
  SECTION("the image-deficient family alone has no units") {
    std::vector<std::uint32_t> candidate;
    for (auto const& g : x_generators(spec).members) {
      candidate.push_back(*table.index_of(g));
    }
    auto report = rank_lower_bound_check(spec, table, candidate);
    REQUIRE(report.image_deficient_ok);
    REQUIRE(!report.units_generate_ok);
    REQUIRE(report.units_generated == 1);  // the identity only
  }
  SECTION("units alone have full image everywhere") {
    std::vector<std::uint32_t> candidate;
    for (auto const& g : d_generators(spec).members) {
      candidate.push_back(*table.index_of(g));
    }
    auto report = rank_lower_bound_check(spec, table, candidate);
    REQUIRE(!report.image_deficient_ok);
    REQUIRE(report.missing_blocks == std::vector<point_type>{1, 2});
    REQUIRE(report.units_generate_ok);
  }
}

TEST_CASE("unit group ranks at 3x2 and 2x3", "[rank]") {
  {
    auto units = enumerate(6, d_generators(BlockSpec(3, 2)).members);
    REQUIRE(units.size() == 8);
    auto result = minimal_generating_size(units, 3);
    REQUIRE((result.found && result.size == 3));
  }
  {
    auto units = enumerate(6, d_generators(BlockSpec(2, 3)).members);
    REQUIRE(units.size() == 36);
    auto result = minimal_generating_size(units, 2);
    REQUIRE((result.found && result.size == 2));
  }
}
