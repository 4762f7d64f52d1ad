#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracle.hpp"
#include "support.hpp"
#include "twistlab/conuclei.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/search.hpp"

using namespace twistlab;

namespace {

  SearchSpec spec_of(std::size_t n, unsigned bits) {
    SearchSpec s;
    s.size         = n;
    s.commutative  = bits & 1;
    s.integral     = bits & 2;
    s.involutive   = bits & 4;
    s.distributive = bits & 8;
    s.bounded      = bits & 16;
    s.idempotent   = bits & 32;
    s.odd          = bits & 64;
    return s;
  }

  oracle::Flags flags_of(unsigned bits) {
    oracle::Flags f;
    f.commutative  = bits & 1;
    f.integral     = bits & 2;
    f.involutive   = (bits & 4) || (bits & 64);
    f.distributive = bits & 8;
    f.bounded      = bits & 16;
    f.idempotent   = bits & 32;
    f.odd          = bits & 64;
    return f;
  }

  std::vector<Elem> random_perm(std::size_t n, std::mt19937& rng) {
    std::vector<Elem> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

}  // namespace

TEST_CASE("lattice counts") {
  std::vector<std::size_t> const expected = {1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    CAPTURE(n);
    CHECK(enumerate_lattices(n).size() == expected[n - 1]);
  }
  // independent count for small n
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<int>> seen;
    for (auto const& r : oracle::lattice_orders(n)) {
      std::vector<int> best;
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      do {
        std::vector<int> k;
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            k.push_back(r[p[a] * n + p[b]]);
          }
        }
        if (best.empty() || k < best) {
          best = k;
        }
      } while (std::next_permutation(p.begin(), p.end()));
      seen.insert(best);
    }
    CHECK(enumerate_lattices(n).size() == seen.size());
  }
  CHECK_THROWS_AS(enumerate_lattices(0), PreconditionError);
}

TEST_CASE("oracle agreement for n <= 3 over every flag combination") {
  for (int n = 1; n <= 3; ++n) {
    auto const models = oracle::all_models(n);
    for (unsigned bits = 0; bits < 128; ++bits) {
      CAPTURE(n);
      CAPTURE(bits);
      CHECK(enumerate_all(spec_of(n, bits)).size() == oracle::count(models, flags_of(bits)));
    }
  }
}

TEST_CASE("known small counts") {
  std::vector<std::size_t> const all  = {1, 1, 3, 20, 149};
  std::vector<std::size_t> const comm = {1, 1, 3, 16, 100};
  std::vector<std::size_t> const intg = {1, 1, 2, 9, 49};
  for (std::size_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(enumerate_all(spec_of(n, 0)).size() == all[n - 1]);
    CHECK(enumerate_all(spec_of(n, 1)).size() == comm[n - 1]);
    CHECK(enumerate_all(spec_of(n, 2)).size() == intg[n - 1]);
  }
  CHECK(enumerate_all(spec_of(1, 0)).size() == 1);
  CHECK(enumerate_all(spec_of(2, 0)).front().prod(1, 1) == 1);
}

TEST_CASE("the three element commutative classes include L3, G3 and S3") {
  auto const found = enumerate_all(spec_of(3, 1));
  for (auto const& B : {fixtures::l3(), fixtures::g3(), fixtures::s3()}) {
    bool hit = false;
    for (auto const& A : found) {
      hit = hit || !find_homomorphisms(A, B, Signature::residuated_lattice(), MorphismKind::iso, 1)
                        .empty();
    }
    CHECK(hit);
  }
}

TEST_CASE("enumeration soundness") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned bits : {0u, 1u, 2u, 3u, 4u, 5u, 9u, 17u, 33u, 65u, 127u}) {
      SearchSpec const s = spec_of(n, bits);
      for (auto const& A : enumerate_all(s)) {
        REQUIRE(validate(A.to_raw()).holds());
        Profile const p = structural_profile(A);
        CHECK((!s.commutative || p.commutative));
        CHECK((!s.integral || p.integral));
        CHECK((!s.involutive || p.involutive));
        CHECK((!s.distributive || p.distributive));
        CHECK((!s.bounded || p.bounded));
        CHECK((!s.idempotent || p.idempotent));
        CHECK((!s.odd || p.odd));
      }
    }
  }
}

TEST_CASE("streaming, skip, limit and threads") {
  SearchSpec s         = spec_of(5, 0);
  auto const full      = enumerate_all(s);
  SearchSpec t         = s;
  t.skip               = 40;
  t.limit              = 30;
  auto const part      = enumerate_all(t);
  REQUIRE(part.size() == 30);
  for (std::size_t i = 0; i < part.size(); ++i) {
    CHECK(part[i].same_tables(full[i + 40]));
  }
  std::size_t seen = 0;
  enumerate_residuated_lattices(s, [&](Algebra const&) { return ++seen < 7; });
  CHECK(seen == 7);

  SearchSpec th = s;
  th.threads    = 4;
  auto const par = enumerate_all(th);
  REQUIRE(par.size() == full.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].same_tables(full[i]));
  }

  SearchSpec big = spec_of(7, 0);
  CHECK_THROWS_AS(enumerate_all(big), PreconditionError);
  CHECK_THROWS_AS(enumerate_all(spec_of(0, 0)), PreconditionError);
}

TEST_CASE("homomorphisms") {
  Algebra const B = fixtures::two();
  // without the bottom, the constant map onto the subalgebra {1} also counts
  auto const rl = find_homomorphisms(B, B, Signature::residuated_lattice());
  REQUIRE(rl.size() == 2);
  CHECK(rl[0].table == std::vector<Elem>{0, 1});
  CHECK(rl[1].table == std::vector<Elem>{1, 1});
  auto const all = find_homomorphisms(B, B, Signature::everything());
  REQUIRE(all.size() == 1);
  CHECK(all[0].table == std::vector<Elem>{0, 1});

  // brute force over all maps G3 -> 2
  Algebra const         G = fixtures::g3();
  std::vector<Morphism> brute;
  for (Elem a = 0; a < 2; ++a) {
    for (Elem b = 0; b < 2; ++b) {
      for (Elem c = 0; c < 2; ++c) {
        Morphism f{G.name(), B.name(), {a, b, c}, Signature::brouwerian()};
        if (check_morphism(G, B, f).holds()) {
          brute.push_back(f);
        }
      }
    }
  }
  CHECK(find_homomorphisms(G, B, Signature::brouwerian()) == brute);
  CHECK(brute.size() == 2);

  Algebra const S5 = fixtures::five_chain();
  Algebra const T  = fixture("tw_l3_0");
  auto const    em = find_homomorphisms(S5, T, Signature::involutive_rl(), MorphismKind::embed);
  bool          inclusion = false;
  for (auto const& f : em) {
    bool ok = true;
    for (Elem x = 0; x < S5.size(); ++x) {
      ok = ok && T.element_name(f(x)) == S5.element_name(x);
    }
    inclusion = inclusion || ok;
  }
  CHECK(inclusion);
}

TEST_CASE("isomorphisms") {
  CHECK_FALSE(find_isomorphism(fixtures::l3(), fixtures::g3()));
  ImageAlgebra const img = conucleus_image(fixture("tw_l3_0"), tau_tw(twist(fixtures::l3(), 0)));
  CHECK_FALSE(find_homomorphisms(img.algebra, fixtures::l3(), Signature::residuated_lattice(),
                                 MorphismKind::iso)
                  .empty());
  std::mt19937 rng(7);
  for (auto const& f : fixtures::corpus()) {
    auto const    p = random_perm(f.algebra.size(), rng);
    Algebra const R = relabel(f.algebra, p);
    auto const    m = find_isomorphism(f.algebra, R);
    REQUIRE(m);
    CHECK(check_morphism(f.algebra, R, *m).holds());
  }
}

TEST_CASE("canonical form") {
  std::mt19937         rng(11);
  std::vector<Algebra> pool;
  for (auto const& f : fixtures::corpus()) {
    pool.push_back(f.algebra);
  }
  for (auto const& A : enumerate_all(spec_of(4, 0))) {
    pool.push_back(A);
  }
  for (auto const& A : pool) {
    Algebra const c = canonical_form(A);
    CHECK(canonical_form(c).same_tables(c));
    for (int k = 0; k < 3; ++k) {
      CHECK(canonical_form(relabel(A, random_perm(A.size(), rng))).same_tables(c));
    }
  }
  // cross-validation on random pairs
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 200; ++k) {
    Algebra const& A = pool[pick(rng)];
    Algebra const& C = k % 2 ? A : pool[pick(rng)];
    Algebra const  B = relabel(C, random_perm(C.size(), rng));
    if (A.size() != B.size()) {
      CHECK_FALSE(find_isomorphism(A, B));
      continue;
    }
    bool const same = canonical_form(A).same_tables(canonical_form(B));
    CHECK(same == find_isomorphism(A, B).has_value());
  }
}

TEST_CASE("subalgebras") {
  Algebra const T  = fixture("tw_l3_0");
  Signature     sig;
  sig.join = sig.meet = sig.prod = sig.invol = sig.unit = true;
  auto const subs = subalgebras(T, sig);
  Subset     chain(T.name(), T.size());
  for (Elem x = 0; x < T.size(); ++x) {
    if (T.element_name(x) != "(a,a)") {
      chain.insert(x);
    }
  }
  CHECK(std::find(subs.begin(), subs.end(), chain) != subs.end());

  Algebra const G    = fixture("tw_g3_0");
  auto const    gsub = subalgebras(G, Signature::involutive_rl());
  Subset        S    = Subset::full(G.name(), G.size());
  S.erase(by_name(G, "(0,0)"));
  CHECK(std::find(gsub.begin(), gsub.end(), S) != gsub.end());

  for (auto const& f : fixtures::corpus()) {
    auto const all = subalgebras(f.algebra, Signature::residuated_lattice());
    CHECK(std::find(all.begin(), all.end(), Subset::full(f.algebra.name(), f.algebra.size())) !=
          all.end());
  }
  CHECK_THROWS_AS(subalgebra(T, Subset::of(T.name(), T.size(), {0}), "x"), PreconditionError);
}
