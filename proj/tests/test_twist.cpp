#include <doctest.h>

#include <set>

#include "support.hpp"
#include "twistlab/conuclei.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/twist.hpp"
#include "twistlab/varieties.hpp"

using namespace twistlab;

namespace {

  std::set<std::string> names_of(Algebra const& A) {
    return {A.names().begin(), A.names().end()};
  }

  std::set<std::string> names_in(Algebra const& A, Subset const& S) {
    std::set<std::string> out;
    for (Elem x : S.elements()) {
      out.insert(A.element_name(x));
    }
    return out;
  }

  std::size_t covers(Algebra const& A) {
    std::size_t c = 0;
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        if (!A.lt(x, y)) {
          continue;
        }
        bool direct = true;
        for (Elem z = 0; z < A.size(); ++z) {
          direct = direct && !(A.lt(x, z) && A.lt(z, y));
        }
        c += direct;
      }
    }
    return c;
  }

}  // namespace

TEST_CASE("full twists") {
  TwistAlgebra const F2 = full_twist(fixtures::two());
  CHECK(F2.algebra().size() == 4);
  CHECK(F2.pair(F2.algebra().unit()) == Pair{1, 1});
  for (Elem x = 0; x < 4; ++x) {
    CHECK(F2.algebra().neg(F2.algebra().neg(x)) == x);
    auto const [a, b] = F2.pair(x);
    CHECK(F2.pair(F2.algebra().neg(x)) == Pair{b, a});
  }
  TwistAlgebra const F3 = full_twist(fixtures::l3());
  CHECK(F3.algebra().size() == 9);
  CHECK(F3.pair(F3.algebra().unit()) == Pair{2, 2});
}

TEST_CASE("twist operations follow the pair formulas") {
  for (auto const& L : fixtures::bases()) {
    TwistAlgebra const F = full_twist(L);
    Algebra const&     A = F.algebra();
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        auto const [a, b] = F.pair(x);
        auto const [c, d] = F.pair(y);
        CHECK(F.pair(A.prod(x, y)) == Pair{L.prod(a, c), L.meet(L.rdiv(d, a), L.ldiv(c, b))});
        CHECK(F.pair(A.ldiv(x, y)) == Pair{L.meet(L.ldiv(a, c), L.rdiv(b, d)), L.prod(d, a)});
        CHECK(F.pair(A.rdiv(y, x)) == Pair{L.meet(L.rdiv(c, a), L.ldiv(d, b)), L.prod(a, d)});
        CHECK(F.pair(A.join(x, y)) == Pair{L.join(a, c), L.meet(b, d)});
      }
    }
  }
}

TEST_CASE("twists over 2 and L3") {
  Algebra const t20 = twist(fixtures::two(), 0).algebra();
  CHECK(names_of(t20) == std::set<std::string>{"(0,0)", "(0,1)", "(1,0)"});
  CHECK(t20.element_name(t20.unit()) == "(1,0)");

  Algebra const t21 = twist(fixtures::two(), 1).algebra();
  CHECK(t21.size() == 4);
  CHECK(t21.element_name(t21.unit()) == "(1,1)");

  Algebra const t30 = twist(fixtures::l3(), 0).algebra();
  CHECK(t30.size() == 6);
  CHECK(t30.element_name(t30.unit()) == "(1,0)");
  // hexagon: six covers, two incomparable middle pairs
  CHECK(covers(t30) == 6);
  CHECK(t30.element_name(t30.least()) == "(0,1)");
  CHECK(t30.element_name(t30.greatest()) == "(1,0)");
  CHECK_FALSE(t30.leq(by_name(t30, "(0,0)"), by_name(t30, "(a,a)")));
  CHECK_FALSE(t30.leq(by_name(t30, "(a,a)"), by_name(t30, "(0,0)")));
}

TEST_CASE("twist sizes at the top") {
  for (auto const& L : fixtures::bases()) {
    CAPTURE(L.name());
    CHECK(twist(L, L.greatest()).algebra().size() == L.size() * L.size());
  }
}

TEST_CASE("twist is the double division image") {
  for (auto const& L : fixtures::bases()) {
    TwistAlgebra const F = full_twist(L);
    for (Elem i = 0; i < L.size(); ++i) {
      UnaryMap const        d = double_division_map(F.algebra(), F.at({L.unit(), i}));
      std::set<std::string> fixed;
      for (Elem x = 0; x < F.algebra().size(); ++x) {
        if (d(x) == x) {
          fixed.insert(F.algebra().element_name(x));
        }
      }
      TwistAlgebra const T = twist(L, i);
      CHECK(fixed == names_of(T.algebra()));
      CHECK(validate(T.algebra().to_raw()).holds());
      // membership rule
      for (Elem a = 0; a < L.size(); ++a) {
        for (Elem b = 0; b < L.size(); ++b) {
          CHECK(T.contains({a, b}) == L.leq(L.join(L.prod(a, b), L.prod(b, a)), i));
        }
      }
    }
  }
}

TEST_CASE("maximal sets") {
  auto M = [](Algebra const& L, Elem i) {
    return names_in(twist(L, i).algebra(), maximal_set(L, i));
  };
  CHECK(M(fixtures::two(), 0) == std::set<std::string>{"(0,1)", "(1,0)"});
  CHECK(M(fixtures::two(), 1) == std::set<std::string>{"(1,1)"});
  CHECK(M(fixtures::l3(), 0) == std::set<std::string>{"(0,1)", "(a,a)", "(1,0)"});
  for (auto const& L : fixtures::bases()) {
    for (Elem i = 0; i < L.size(); ++i) {
      CHECK(check_downset(L, i).holds());
    }
  }
}

TEST_CASE("tau_Tw") {
  TwistAlgebra const T = twist(fixtures::l3(), 0);
  UnaryMap const     t = tau_tw(T);
  CHECK(T.pair(t(T.at({1, 0}))) == Pair{1, 1});
  for (auto const& L : fixtures::bases()) {
    for (Elem i = 0; i < L.size(); ++i) {
      TwistAlgebra const Ti = twist(L, i);
      UnaryMap const     ti = tau_tw(Ti);
      Elem const         e  = Ti.algebra().unit();
      CHECK(ti(e) == e);
      CHECK(is_nelson_conucleus(Ti.algebra(), ti).holds());
      CHECK(is_twist_product(Ti).holds());
    }
  }
  TwistAlgebra const T21 = twist(fixtures::two(), 1);
  CHECK(tau_tw(T21)(T21.at({0, 1})) == T21.at({0, 1}));
  CHECK_THROWS_AS(tau_tw(full_twist(fixtures::two())), PreconditionError);
}

TEST_CASE("Boolean-filtered twists") {
  Algebra const G = fixtures::g3();
  CHECK(names_in(G, dense_elements(G)) == std::set<std::string>{"a", "1"});
  for (auto const& F : boolean_filters(G)) {
    for (Elem i = 0; i < 3; ++i) {
      TwistAlgebra const T = sendlewski_twist(G, i, F);
      CHECK(is_twist_product(T).holds());
      for (Elem x = 0; x < T.algebra().size(); ++x) {
        CHECK(twist(G, i).contains(T.pair(x)));
      }
    }
  }
  Algebra const B   = fixtures::two();
  Subset const  top = Subset::of("2", 2, {1});
  CHECK(names_of(sendlewski_twist(B, 0, top).algebra()) ==
        std::set<std::string>{"(0,1)", "(1,0)"});
  for (auto const& H : {B, G}) {
    for (Elem i = 0; i < H.size(); ++i) {
      CHECK(sendlewski_twist(H, i, Subset::full(H.name(), H.size())).algebra().size() ==
            twist(H, i).algebra().size());
    }
  }
  CHECK_THROWS_AS(sendlewski_twist(G, 1, Subset::of("G3", 3, {2})), PreconditionError);
  CHECK_THROWS_AS(sendlewski_twist(fixtures::l3(), 0, Subset::full("L3", 3)), PreconditionError);
}

TEST_CASE("involutive filtered twists") {
  Algebra const L = fixtures::l3();
  TwistAlgebra const T = inca_twist(L, 0, Subset::of("L3", 3, {2}));
  CHECK(names_of(T.algebra()) == std::set<std::string>{"(0,1)", "(a,a)", "(1,0)"});
  CHECK(is_twist_product(T).holds());
  CHECK(inca_twist(L, 0, Subset::full("L3", 3)).algebra().size() == 6);

  for (auto const& B : {fixtures::two(), fixtures::l3()}) {
    for (Elem i = 0; i < B.size(); ++i) {
      for (auto const& F : lattice_filters(B)) {
        if (!F.contains(oplus(B, B.unit(), i))) {
          CHECK_THROWS_AS(inca_twist(B, i, F), PreconditionError);
          continue;
        }
        TwistAlgebra const Ti = inca_twist(B, i, F);
        for (Elem c = 0; c < B.size(); ++c) {
          bool hit = false;
          for (auto const& [a, b] : Ti.pairs()) {
            hit = hit || oplus(B, a, b) == c;
          }
          CHECK(hit == F.contains(c));
        }
      }
    }
  }
}
