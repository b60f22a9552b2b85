#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include <poikm/block_monoid.hpp>
#include <poikm/enumeration.hpp>
#include <poikm/selftest.hpp>

using namespace poikm;
using poikm::selftest_detail::dx_generators;

TEST_CASE("counting formulas", "[count]") {
  REQUIRE(size_formula(2, 2) == 13);
  REQUIRE(size_formula(3, 1) == 20);  // C(6, 3)
  REQUIRE(size_formula(2, 3) == 61);  // 1 + 4*6 + 36
  REQUIRE(size_formula(3, 2) == 63);
  REQUIRE(size_formula(4, 2) == 321);
  REQUIRE(size_formula(2, 4) == 673);
  REQUIRE(size_formula(3, 3) == 595);
  // Far beyond 64 bits once m! gets going.
  REQUIRE(size_formula(10, 10)
          == BigCount("39595177725215453063919743946536987522008117804411"
                      "3596220778880001"));
  REQUIRE_THROWS_AS(size_formula(0, 2), parameter_error);

  REQUIRE(j_class_size(2, 2, 1) == 8);
  REQUIRE(j_class_size(2, 2, 0) == 1);
  REQUIRE(j_class_size(3, 4, 3) == BigCount(24 * 24 * 24));
  REQUIRE_THROWS_AS(j_class_size(2, 2, 3), range_error);

  SECTION("class sizes sum to the order for k, m <= 6") {
    for (unsigned k = 1; k <= 6; ++k) {
      for (unsigned m = 1; m <= 6; ++m) {
        BigCount sum = 0;
        for (unsigned t = 0; t <= k; ++t) {
          sum += j_class_size(k, m, t);
        }
        REQUIRE(sum == size_formula(k, m));
      }
    }
  }

  SECTION("unit group order is the top class") {
    for (unsigned k = 2; k <= 4; ++k) {
      for (unsigned m = 2; m <= 4; ++m) {
        REQUIRE(j_class_size(k, m, k)
                == boost::multiprecision::pow(big_factorial(m), k));
      }
    }
  }
}

TEST_CASE("closure of the 2k-element generating set", "[enumerate]") {
  BlockSpec spec(2, 2);
  auto table = enumerate(4, dx_generators(spec));
  REQUIRE(table.size() == 13);
  REQUIRE(table.elements[0] == PartialPerm::identity(4));

  SECTION("closure agrees with the definition filter") {
    auto filtered = members_by_filter(spec);
    REQUIRE(std::set<PartialPerm>(filtered.begin(), filtered.end())
            == std::set<PartialPerm>(table.elements.begin(),
                                     table.elements.end()));
  }

  SECTION("words evaluate to their elements") {
    for (std::size_t e = 0; e < table.size(); ++e) {
      auto value = PartialPerm::identity(4);
      for (auto g : table.words[e]) {
        value = compose(value, table.generators[g]);
      }
      REQUIRE(value == table.elements[e]);
    }
  }

  SECTION("words are shortest, breadth-first order") {
    for (std::size_t e = 1; e < table.size(); ++e) {
      REQUIRE(table.words[e - 1].size() <= table.words[e].size());
    }
  }

  SECTION("right table is closed and consistent") {
    for (std::size_t e = 0; e < table.size(); ++e) {
      for (std::size_t g = 0; g < table.generators.size(); ++g) {
        auto product = compose(table.elements[e], table.generators[g]);
        REQUIRE(table.elements[table.right[e][g]] == product);
      }
    }
  }
}

TEST_CASE("enumerating with no generators", "[enumerate]") {
  auto table = enumerate(3, {});
  REQUIRE(table.size() == 1);
  REQUIRE(table.elements[0] == PartialPerm::identity(3));
}

TEST_CASE("membership filter oracle at degree 6", "[enumerate][oracle]") {
  BlockSpec spec(2, 3);
  auto table = enumerate(6, dx_generators(spec));
  REQUIRE(table.size() == 61);
  auto filtered = members_by_filter(spec);
  REQUIRE(filtered.size() == 61);
  REQUIRE(std::set<PartialPerm>(filtered.begin(), filtered.end())
          == std::set<PartialPerm>(table.elements.begin(),
                                   table.elements.end()));
}

TEST_CASE("enumerate is deterministic", "[enumerate]") {
  BlockSpec spec(3, 2);
  std::ostringstream first, second;
  write_table(first, enumerate(6, dx_generators(spec)));
  write_table(second, enumerate(6, dx_generators(spec)));
  REQUIRE(first.str() == second.str());
}

TEST_CASE("enumerate overflow", "[enumerate]") {
  BlockSpec spec(2, 2);
  REQUIRE_THROWS_AS(enumerate(4, dx_generators(spec), 10), overflow_error);
  REQUIRE_THROWS_AS(enumerate(4, {PartialPerm::identity(3)}), degree_error);
}

TEST_CASE("degenerate block sizes", "[enumerate]") {
  // Interval blocks of size one give the order-preserving injections,
  // empty map included on both sides of the comparison.
  for (point_type k = 2; k <= 4; ++k) {
    BlockSpec spec(k, 1);
    auto members = members_by_filter(spec);
    std::vector<PartialPerm> order_preserving;
    for (auto const& p : all_partial_perms(k)) {
      if (is_order_preserving(p)) {
        order_preserving.push_back(p);
      }
    }
    REQUIRE(members == order_preserving);
    REQUIRE(BigCount(members.size()) == size_formula(k, 1));
    REQUIRE(size_formula(k, 1) == big_binomial(2 * k, k));
  }
  // The universal partition gives the symmetric group plus the empty map.
  {
    BlockSpec spec(1, 3);
    auto members = members_by_filter(spec);
    REQUIRE(members.size() == 7);  // 3! + empty
    REQUIRE(BigCount(members.size()) == size_formula(1, 3));
  }
}

TEST_CASE("table export round trip", "[enumerate][io]") {
  BlockSpec spec(2, 2);
  auto table = enumerate(4, dx_generators(spec));
  std::ostringstream os;
  write_table(os, table);

  auto text = os.str();
  REQUIRE(text.rfind("degree=4 size=13 gens=4", 0) == 0);

  std::istringstream is(text);
  auto back = read_table(is);
  REQUIRE(back.degree == table.degree);
  REQUIRE(back.elements == table.elements);
  REQUIRE(back.words == table.words);
  REQUIRE(back.right == table.right);
  REQUIRE(back.generators == table.generators);

  SECTION("malformed input") {
    std::istringstream bad("degree=4 size=2 gens=1\n0 1 4;\n");
    REQUIRE_THROWS_AS(read_table(bad), parse_error);
  }
}
