#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/json_io.hpp"

using namespace twistlab;

TEST_CASE("two is certified") {
  Algebra const A = fixtures::two();
  CHECK(A.size() == 2);
  CHECK(A.unit() == 1);
  CHECK(A.prod(1, 1) == 1);
  CHECK(A.prod(0, 1) == 0);
  CHECK(A.ldiv(1, 0) == 0);
  CHECK(A.ldiv(0, 0) == 1);
  CHECK(validate(A.to_raw()).holds());
}

TEST_CASE("residuation violation is located") {
  RawAlgebra r = fixtures::two().to_raw();
  r.prod[1][1] = 0;
  r.unit.reset();
  r.invol.reset();
  r.bottom.reset();
  ValidationReport const v = validate(r);
  REQUIRE(v.failed("residuation"));
  bool found = false;
  for (auto const& w : v.witnesses) {
    found = found || (w.axiom == "residuation" && w.elements == std::vector<Elem>{1, 1, 0});
  }
  CHECK(found);
  CHECK_THROWS_AS(Algebra::certify(r), ValidationError);
}

TEST_CASE("L3 tables") {
  Algebra const A = fixtures::l3();
  for (Elem x = 0; x < 3; ++x) {
    for (Elem y = 0; y < 3; ++y) {
      CHECK(A.prod(x, y) == (x + y >= 2 ? x + y - 2 : 0));
      CHECK(A.ldiv(x, y) == std::min<Elem>(2, 2 - x + y));
    }
  }
  CHECK(oplus(A, 1, 1) == 2);
}

TEST_CASE("residuals from product") {
  SUBCASE("G3 implication") {
    RawAlgebra r  = chain("G3", 3, [](Elem x, Elem y) { return std::min(x, y); });
    auto       rs = std::get<Residuals>(residuals_from_product(3, r.join, r.meet, r.prod));
    for (Elem x = 0; x < 3; ++x) {
      for (Elem z = 0; z < 3; ++z) {
        CHECK(rs.ldiv[x][z] == (x <= z ? 2 : z));
      }
    }
  }
  SUBCASE("constant zero on two elements leaves no unit") {
    RawAlgebra r  = chain("z", 2, [](Elem, Elem) { return Elem{0}; });
    auto       rs = residuals_from_product(2, r.join, r.meet, r.prod);
    REQUIRE(std::holds_alternative<Residuals>(rs));
    r.unit = 1;
    CHECK(validate(r).failed("unit-left"));
  }
  SUBCASE("no residual") {
    // {y : xy <= 0} is empty
    RawAlgebra r = chain("bad", 3, [](Elem, Elem) { return Elem{2}; });
    auto rs = residuals_from_product(3, r.join, r.meet, r.prod);
    CHECK(std::holds_alternative<NoResidual>(rs));
    CHECK_FALSE(validate(r).holds());
  }
}

TEST_CASE("profiles") {
  auto has = [](Algebra const& A, std::string const& f) {
    auto const fl = structural_profile(A).flags();
    return std::find(fl.begin(), fl.end(), f) != fl.end();
  };
  Algebra const G3 = fixtures::g3();
  Profile const g  = structural_profile(G3);
  CHECK(g.commutative);
  CHECK(g.integral);
  CHECK(g.distributive);
  CHECK(g.bounded);
  CHECK(g.brouwerian);
  CHECK_FALSE(g.involutive);

  Profile const s = structural_profile(fixtures::s3());
  CHECK(s.commutative);
  CHECK(s.distributive);
  CHECK(s.odd);
  CHECK(s.involutive);
  CHECK_FALSE(s.integral);
  CHECK_FALSE(s.bounded);

  Profile const l = structural_profile(fixtures::l3());
  CHECK(l.commutative);
  CHECK(l.integral);
  CHECK(l.bounded);
  CHECK_FALSE(l.idempotent);
  CHECK_FALSE(l.brouwerian);
  CHECK(has(fixtures::l3(), "integral"));
}

TEST_CASE("S3 table from residuation") {
  Algebra const S = fixtures::s3();
  Elem const    bot = 0, e = 1, top = 2;
  CHECK(S.unit() == e);
  CHECK(S.neg(e) == e);
  CHECK(S.neg(bot) == top);
  CHECK(S.prod(bot, bot) == bot);
  CHECK(S.prod(top, top) == top);
  CHECK(S.prod(bot, top) == bot);
  CHECK(S.prod(top, bot) == bot);
  CHECK(oplus(S, e, e) == e);
}

TEST_CASE("oplus on integral algebras with the bottom") {
  for (auto const& A : {fixtures::two(), fixtures::l3()}) {
    for (Elem x = 0; x < A.size(); ++x) {
      CHECK(oplus(A, A.neg(A.unit()), x) == x);
    }
  }
  CHECK_THROWS_AS(oplus(fixtures::g3(), 0, 0), PreconditionError);
}

TEST_CASE("top designation") {
  CHECK(fixtures::l3().top() == 2);
  CHECK(fixtures::s3().top() == 2);
  Algebra const T = fixture("tw_two_0");
  CHECK(T.element_name(T.top()) == "(1,0)");
  CHECK(T.element_name(T.bottom()) == "(0,1)");
}

TEST_CASE("malformed input") {
  RawAlgebra r = fixtures::two().to_raw();
  SUBCASE("short row") {
    r.meet[1].pop_back();
    CHECK_THROWS_AS(validate(r), MalformedInput);
  }
  SUBCASE("entry out of range") {
    r.join[0][0] = 7;
    CHECK_THROWS_AS(Algebra::certify(r), MalformedInput);
  }
  SUBCASE("bad json") {
    CHECK_THROWS_AS(raw_from_json(json{{"size", 2}}), MalformedInput);
    CHECK_THROWS_AS(raw_from_json(json::array()), MalformedInput);
  }
}

TEST_CASE("json round trip of every fixture") {
  for (auto const& f : fixtures::corpus()) {
    CAPTURE(f.name);
    json const    j = to_json(f.algebra);
    Algebra const B = algebra_from_json(json::parse(pretty(j)));
    CHECK(B.same_tables(f.algebra));
    CHECK(B.names() == f.algebra.names());
    CHECK(to_json(B) == j);
  }
}

TEST_CASE("divisions may be omitted") {
  json j = to_json(fixtures::l3());
  j.erase("ldiv");
  j.erase("rdiv");
  CHECK(algebra_from_json(j).same_tables(fixtures::l3()));
}

TEST_CASE("identities on every certified algebra") {
  for (auto const& f : fixtures::corpus()) {
    CAPTURE(f.name);
    Algebra const& A = f.algebra;
    std::size_t    n = A.size();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          REQUIRE(A.prod(x, A.join(y, z)) == A.join(A.prod(x, y), A.prod(x, z)));
          REQUIRE(A.prod(A.join(y, z), x) == A.join(A.prod(y, x), A.prod(z, x)));
        }
        if (A.involutive()) {
          REQUIRE(A.ldiv(x, y) == A.neg(A.prod(A.neg(y), x)));
          REQUIRE(A.rdiv(y, x) == A.neg(A.prod(x, A.neg(y))));
          REQUIRE(A.prod(x, y) == A.neg(A.ldiv(y, A.neg(x))));
          REQUIRE(A.neg(A.join(x, y)) == A.meet(A.neg(x), A.neg(y)));
        }
      }
    }
  }
}
