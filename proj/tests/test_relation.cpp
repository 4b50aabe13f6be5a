#include <doctest.h>

#include "gamecat/error.hpp"
#include "gamecat/rational.hpp"
#include "gamecat/relation.hpp"

using namespace gamecat;

TEST_CASE("relation keeps set semantics in lexicographic order") {
  Relation r{{"b", "a"}, {"a", "b"}, {"b", "a"}};
  CHECK(r.size() == 2);
  CHECK(r.pairs().front() == Relation::Pair{"a", "b"});
  CHECK(r.pairs().back() == Relation::Pair{"b", "a"});
  r.insert("a", "b");
  CHECK(r.size() == 2);
  CHECK(r.contains("b", "a"));
  CHECK(!r.contains("a", "a"));
}

TEST_CASE("access closure adds loops and symmetric pairs") {
  const std::vector<std::string> ab{"a", "b"};

  SUBCASE("empty relation becomes the identity") {
    Relation got = closure_access(Relation{}, ab);
    CHECK(got == Relation{{"a", "a"}, {"b", "b"}});
  }
  SUBCASE("single pair closes to four") {
    Relation got = closure_access(Relation{{"a", "b"}}, ab);
    CHECK(got == Relation{{"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}});
  }
  SUBCASE("closed input is unchanged") {
    Relation closed{{"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}};
    CHECK(closure_access(closed, ab) == closed);
  }
  SUBCASE("unknown identifier is rejected by name") {
    CHECK_THROWS_WITH_AS(closure_access(Relation{{"a", "z"}}, ab),
                         "relation: unknown identifier 'z'", validation_error);
  }
}

TEST_CASE("preference closure saturates transitively") {
  const std::vector<std::string> abc{"a", "b", "c"};

  SUBCASE("chain gains loops and the transitive pair") {
    Relation got = closure_pref(Relation{{"a", "b"}, {"b", "c"}}, abc);
    CHECK(got == Relation{{"a", "a"},
                          {"a", "b"},
                          {"a", "c"},
                          {"b", "b"},
                          {"b", "c"},
                          {"c", "c"}});
  }
  SUBCASE("singleton carrier") {
    CHECK(closure_pref(Relation{}, {"a"}) == Relation{{"a", "a"}});
  }
  SUBCASE("idempotent on closed input") {
    Relation once = closure_pref(Relation{{"a", "b"}, {"c", "a"}}, abc);
    CHECK(closure_pref(once, abc) == once);
  }
}

TEST_CASE("rationals compare exactly") {
  CHECK(Rational(1, 2) == Rational(2, 4));
  CHECK(Rational(-1, 2) == Rational(1, -2));
  CHECK(Rational(-3) < Rational(-2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 3) <= Rational(2, 3));
  CHECK(!(Rational(1, 2) < Rational(1, 2)));
  CHECK_THROWS_AS(Rational(1, 0), validation_error);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("3/4").str() == "3/4");
  CHECK(parse_rational("-2").str() == "-2");
  CHECK_THROWS_AS(parse_rational("x"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), parse_error);
}
