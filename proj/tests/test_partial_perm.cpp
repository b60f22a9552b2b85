#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include <poikm/enumeration.hpp>
#include <poikm/partial_perm.hpp>

using namespace poikm;

TEST_CASE("construction from pairs", "[pperm]") {
  auto p = PartialPerm::make(4, {{1, 3}, {2, 4}});
  REQUIRE(p.degree() == 4);
  REQUIRE(p.domain() == std::vector<point_type>{1, 2});
  REQUIRE(p.image() == std::vector<point_type>{3, 4});
  REQUIRE(p[1] == 3);
  REQUIRE(p[2] == 4);
  REQUIRE(p[3] == UNDEF);

  REQUIRE_THROWS_AS(PartialPerm::make(4, {{1, 3}, {2, 3}}),
                    injectivity_error);
  REQUIRE_THROWS_AS(PartialPerm::make(4, {{1, 3}, {1, 4}}),
                    injectivity_error);
  REQUIRE_THROWS_AS(PartialPerm::make(4, {{1, 5}}), range_error);
  REQUIRE_THROWS_AS(PartialPerm::make(4, {{0, 1}}), range_error);
  REQUIRE_THROWS_AS(PartialPerm::make(0, {}), parameter_error);
}

TEST_CASE("identity and empty", "[pperm]") {
  auto id = PartialPerm::identity(3);
  REQUIRE(id[1] == 1);
  REQUIRE(id[2] == 2);
  REQUIRE(id[3] == 3);
  REQUIRE(id.is_identity());
  auto none = PartialPerm::empty(3);
  REQUIRE(none.domain().empty());
  REQUIRE(none.is_empty());
  REQUIRE(none.image_size() == 0);
}

TEST_CASE("composition is left to right", "[pperm]") {
  // (1 2) then (1 2 3) is the permutation 1->3, 2->2, 3->1.
  auto a = PartialPerm::make(3, {{1, 2}, {2, 1}, {3, 3}});
  auto b = PartialPerm::make(3, {{1, 2}, {2, 3}, {3, 1}});
  auto c = compose(a, b);
  REQUIRE(c == PartialPerm::make(3, {{1, 3}, {2, 2}, {3, 1}}));

  REQUIRE(compose(a, PartialPerm::empty(3)) == PartialPerm::empty(3));
  REQUIRE(compose(PartialPerm::make(2, {{1, 2}}),
                  PartialPerm::make(2, {{2, 1}}))
          == PartialPerm::make(2, {{1, 1}}));
  REQUIRE_THROWS_AS(compose(a, PartialPerm::identity(4)), degree_error);
}

TEST_CASE("inverse", "[pperm]") {
  auto p = PartialPerm::make(4, {{1, 3}, {2, 4}});
  REQUIRE(p.inverse() == PartialPerm::make(4, {{3, 1}, {4, 2}}));
  REQUIRE(PartialPerm::empty(5).inverse() == PartialPerm::empty(5));
  REQUIRE(compose(p, compose(p.inverse(), p)) == p);
}

TEST_CASE("image size", "[pperm]") {
  REQUIRE(PartialPerm::identity(4).image_size() == 4);
  REQUIRE(PartialPerm::empty(4).image_size() == 0);
  REQUIRE(PartialPerm::make(4, {{1, 3}, {2, 4}}).image_size() == 2);
}

TEST_CASE("canonical ordering", "[pperm]") {
  // Lexicographic on image sequences, undefined below every point.
  REQUIRE(PartialPerm::empty(2) < PartialPerm::make(2, {{2, 1}}));
  REQUIRE(PartialPerm::make(2, {{2, 1}}) < PartialPerm::identity(2));
  REQUIRE(PartialPerm::identity(2) != PartialPerm::identity(3));
}

TEST_CASE("text form round trip", "[pperm]") {
  auto p = PartialPerm::make(4, {{2, 4}, {1, 3}});
  REQUIRE(p.to_string() == "4;1>3,2>4");
  REQUIRE(PartialPerm::parse("4;1>3,2>4") == p);
  REQUIRE(PartialPerm::parse("4;") == PartialPerm::empty(4));
  REQUIRE(PartialPerm::empty(4).to_string() == "4;");
  REQUIRE(PartialPerm::parse("4;id") == PartialPerm::identity(4));
  REQUIRE_THROWS_AS(PartialPerm::parse("4"), parse_error);
  REQUIRE_THROWS_AS(PartialPerm::parse("4;1-3"), parse_error);
  REQUIRE_THROWS_AS(PartialPerm::parse("x;1>2"), parse_error);
  REQUIRE_THROWS_AS(PartialPerm::parse("4;1>9"), range_error);
}

TEST_CASE("inverse semigroup properties", "[pperm][property]") {
  auto everything = all_partial_perms(4);
  REQUIRE(everything.size() == 209);

  for (auto const& a : everything) {
    REQUIRE(compose(a, compose(a.inverse(), a)) == a);
    REQUIRE(a.inverse().inverse() == a);
  }

  SECTION("idempotents are identity restrictions and commute") {
    std::vector<PartialPerm> idempotents;
    for (auto const& a : everything) {
      if (is_idempotent(a)) {
        idempotents.push_back(a);
        for (point_type x = 1; x <= 4; ++x) {
          REQUIRE((a[x] == UNDEF || a[x] == x));
        }
      }
    }
    REQUIRE(idempotents.size() == 16);  // one per subset of {1,2,3,4}
    for (auto const& e : idempotents) {
      for (auto const& f : idempotents) {
        REQUIRE(compose(e, f) == compose(f, e));
      }
    }
  }

  SECTION("associativity and rank monotonicity on random triples") {
    std::mt19937_64 rng(42);
    auto big = all_partial_perms(5);
    for (int trial = 0; trial < 2000; ++trial) {
      auto const& a = big[rng() % big.size()];
      auto const& b = big[rng() % big.size()];
      auto const& c = big[rng() % big.size()];
      REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
      REQUIRE(compose(a, b).image_size()
              <= std::min(a.image_size(), b.image_size()));
    }
  }
}

TEST_CASE("order preserving predicate", "[pperm]") {
  REQUIRE(is_order_preserving(PartialPerm::identity(4)));
  REQUIRE(is_order_preserving(PartialPerm::empty(4)));
  REQUIRE(is_order_preserving(PartialPerm::make(4, {{1, 2}, {3, 4}})));
  REQUIRE(!is_order_preserving(PartialPerm::make(4, {{1, 4}, {2, 3}})));
}

TEST_CASE("power", "[pperm]") {
  auto b = PartialPerm::make(3, {{1, 2}, {2, 3}, {3, 1}});
  REQUIRE(pow(b, 0) == PartialPerm::identity(3));
  REQUIRE(pow(b, 3) == PartialPerm::identity(3));
  REQUIRE(pow(b, 1) == b);
}
