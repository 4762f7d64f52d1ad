// Acceptance run: one PASS/FAIL line per criterion with its runtime against
// a pinned limit. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "oracle.hpp"
#include "support.hpp"
#include "twistlab/conuclei.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/representation.hpp"
#include "twistlab/search.hpp"
#include "twistlab/twist.hpp"
#include "twistlab/varieties.hpp"

using namespace twistlab;

namespace {

  // Empty string on success, otherwise the first discrepancy.
  using Check = std::function<std::string()>;

  std::string why(Verdict const& v) {
    if (v.holds()) {
      return "";
    }
    auto const& w = v.witnesses.front();
    return v.name + " fails " + w.axiom;
  }

  std::string tw_label(Algebra const& L, Elem i) {
    return "Tw(" + L.name() + "," + L.element_name(i) + ")";
  }

  // Every twist with tau_Tw, S with the restricted tau_Tw, and every
  // enumerated Nelson conucleus on the involutive fixtures of size <= 8.
  std::vector<std::pair<std::string, NCAPair>> fixture_pairs() {
    std::vector<std::pair<std::string, NCAPair>> out;
    for (auto const& L : fixtures::bases()) {
      for (Elem i = 0; i < L.size(); ++i) {
        TwistAlgebra const T = twist(L, i);
        out.emplace_back(tw_label(L, i), NCAPair::make(T.algebra(), tau_tw(T)));
      }
    }
    out.emplace_back("S", NCAPair::make(fixtures::g3_twist_without_00(),
                                        fixtures::g3_twist_without_00_tau()));
    for (auto const& f : fixtures::corpus()) {
      if (!f.algebra.involutive() || f.algebra.size() > 8) {
        continue;
      }
      auto const all = enumerate_nelson_conuclei(f.algebra, 8);
      for (std::size_t k = 0; k < all.size(); ++k) {
        out.emplace_back(f.name + " #" + std::to_string(k), NCAPair::make(f.algebra, all[k]));
      }
    }
    return out;
  }

  std::string check_phi(std::string const& label, NCAPair const& P) {
    Phi const f = phi(P);
    if (!f.map.injective()) {
      return label + ": phi not injective";
    }
    if (std::string w = why(check_morphism(P.algebra(), f.target.algebra(), f.map)); !w.empty()) {
      return label + ": " + w;
    }
    for (Elem x = 0; x < P.algebra().size(); ++x) {
      if (f.map(P.tau()(x)) != f.target_tau(f.map(x))) {
        return label + ": phi does not commute with the conuclei at " +
               P.algebra().element_name(x);
      }
    }
    return "";
  }

  std::string c1() {
    for (auto const& L : fixtures::bases()) {
      if (std::string w = why(validate(L.to_raw())); !w.empty()) {
        return L.name() + ": " + w;
      }
    }
    Algebra const S3 = fixtures::s3();
    Profile const p  = structural_profile(S3);
    if (!S3.involutive() || !p.involutive || !p.odd) {
      return "S3 is not odd and involutive";
    }
    if (std::string w = why(is_brouwerian(fixtures::g3())); !w.empty()) {
      return "G3: " + w;
    }
    return "";
  }

  std::string c2() {
    Algebra const B = fixtures::two();
    if (twist(B, 0).algebra().size() != 3 || twist(B, 1).algebra().size() != 4) {
      return "Tw(2,0), Tw(2,1) sizes";
    }
    if (twist(fixtures::l3(), 0).algebra().size() != 6) {
      return "Tw(L3,0) size";
    }
    for (auto const& L : fixtures::bases()) {
      Elem const top     = L.greatest();
      bool       absorbs = true;
      for (Elem x = 0; x < L.size(); ++x) {
        absorbs = absorbs && (x == L.least() || (L.prod(top, x) == top && L.prod(x, top) == top));
      }
      if (absorbs && twist(L, top).algebra().size() != L.size() * L.size()) {
        return tw_label(L, top) + " has " + std::to_string(twist(L, top).algebra().size());
      }
    }
    return "";
  }

  std::string c3() {
    for (auto const& L : fixtures::bases()) {
      TwistAlgebra const F = full_twist(L);
      Algebra const&     FA = F.algebra();
      for (Elem i = 0; i < L.size(); ++i) {
        std::string const  label = tw_label(L, i);
        TwistAlgebra const T     = twist(L, i);
        Algebra const&     A     = T.algebra();
        if (std::string w = why(validate(A.to_raw())); !w.empty()) {
          return label + ": " + w;
        }
        if (!A.involutive()) {
          return label + ": no involution";
        }
        // the image of x -> p\x/p is {x : xp = x = px} with the inherited operations and unit p
        Elem const     p = F.at({L.unit(), i});
        UnaryMap const d = double_division_map(FA, p);
        std::set<Elem> fixed, members;
        for (Elem x = 0; x < FA.size(); ++x) {
          if (d(x) == x) {
            fixed.insert(x);
          }
        }
        for (Elem x = 0; x < A.size(); ++x) {
          members.insert(F.at(T.pair(x)));
          if (FA.element_name(F.at(T.pair(x))) != A.element_name(x)) {
            return label + ": names differ";
          }
        }
        if (fixed != members) {
          return label + ": fixed points differ from the twist";
        }
        if (F.at(T.pair(A.unit())) != p) {
          return label + ": unit is not (e,i)";
        }
        auto up = [&](Elem x) { return F.at(T.pair(x)); };
        for (Elem x = 0; x < A.size(); ++x) {
          if (up(A.neg(x)) != FA.neg(up(x))) {
            return label + ": ~ differs at " + A.element_name(x);
          }
          for (Elem y = 0; y < A.size(); ++y) {
            if (up(A.join(x, y)) != FA.join(up(x), up(y)) ||
                up(A.meet(x, y)) != FA.meet(up(x), up(y)) ||
                up(A.prod(x, y)) != FA.prod(up(x), up(y)) ||
                up(A.ldiv(x, y)) != FA.ldiv(up(x), up(y)) ||
                up(A.rdiv(x, y)) != FA.rdiv(up(x), up(y))) {
              return label + ": operations differ at " + A.element_name(x) + ", " +
                     A.element_name(y);
            }
          }
        }
      }
    }
    return "";
  }

  std::string c4() {
    for (auto const& L : fixtures::bases()) {
      for (Elem i = 0; i < L.size(); ++i) {
        for (Elem x = 0; x < L.size(); ++x) {
          if (L.ldiv(x, i) != L.rdiv(i, x)) {
            return L.element_name(i) + " is not cyclic in " + L.name();
          }
        }
        TwistAlgebra const T = twist(L, i);
        if (std::string w = why(is_nelson_conucleus(T.algebra(), tau_tw(T))); !w.empty()) {
          return tw_label(L, i) + ": " + w;
        }
      }
    }
    return "";
  }

  std::string c5() {
    for (auto const& L : fixtures::bases()) {
      for (Elem i = 0; i < L.size(); ++i) {
        Psi const p = psi(L, i);
        if (!p.map.injective() || !p.map.surjective(p.image.algebra.size())) {
          return tw_label(L, i) + ": psi not a bijection";
        }
        if (std::string w = why(check_morphism(L, p.image.algebra, p.map)); !w.empty()) {
          return tw_label(L, i) + ": " + w;
        }
        Elem const ne = p.twist.at({i, L.unit()});
        if (p.map(i) != p.image.of(p.tau(ne))) {
          return tw_label(L, i) + ": iota not sent to tau(~e)";
        }
      }
    }
    return "";
  }

  std::string c6(std::size_t& count) {
    auto pairs = fixture_pairs();
    for (std::size_t n = 1; n <= 6; ++n) {
      SearchSpec s;
      s.size       = n;
      s.involutive = true;
      auto const all = enumerate_all(s);
      for (std::size_t k = 0; k < all.size(); ++k) {
        auto const taus = enumerate_nelson_conuclei(all[k], 8);
        for (std::size_t j = 0; j < taus.size(); ++j) {
          pairs.emplace_back("involutive n=" + std::to_string(n) + " #" + std::to_string(k) +
                                 " tau #" + std::to_string(j),
                             NCAPair::make(all[k], taus[j]));
        }
      }
    }
    for (auto const& [label, P] : pairs) {
      if (std::string w = check_phi(label, P); !w.empty()) {
        return w;
      }
    }
    count = pairs.size();
    return "";
  }

  std::string c7() {
    Algebra const                   S5    = fixtures::five_chain();
    std::vector<std::string> const  order = {"(0,1)", "(0,a)", "(0,0)", "(a,0)", "(1,0)"};
    std::vector<std::vector<std::string>> const table = {
        {"(0,1)", "(0,1)", "(0,1)", "(0,1)", "(0,1)"},
        {"(0,1)", "(0,1)", "(0,1)", "(0,1)", "(0,a)"},
        {"(0,1)", "(0,1)", "(0,1)", "(0,a)", "(0,0)"},
        {"(0,1)", "(0,1)", "(0,a)", "(0,a)", "(a,0)"},
        {"(0,1)", "(0,a)", "(0,0)", "(a,0)", "(1,0)"}};
    if (S5.size() != 5) {
      return "S5 size";
    }
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        Elem const x = by_name(S5, order[r]), y = by_name(S5, order[c]);
        if (S5.element_name(S5.prod(x, y)) != table[r][c]) {
          return "product " + order[r] + order[c];
        }
      }
    }
    TwistAlgebra const T = twist(fixtures::l3(), 0);
    Algebra const&     A = T.algebra();
    Subset             S5u(A.name(), A.size());
    for (auto const& n : order) {
      S5u.insert(by_name(A, n));
    }
    for (Elem x : S5u.elements()) {
      if (!S5u.contains(A.neg(x))) {
        return "S5 not closed under ~";
      }
      for (Elem y : S5u.elements()) {
        for (Elem z : {A.join(x, y), A.meet(x, y), A.prod(x, y), A.ldiv(x, y), A.rdiv(x, y)}) {
          if (!S5u.contains(z)) {
            return "S5 not closed at " + A.element_name(x) + ", " + A.element_name(y);
          }
        }
      }
    }
    Elem const img = tau_tw(T)(by_name(A, "(a,0)"));
    if (A.element_name(img) != "(a,a)" || S5u.contains(img)) {
      return "tau_Tw(a,0) = " + A.element_name(img);
    }

    Algebra const G = fixture("tw_g3_0");
    Subset        S = Subset::full(G.name(), G.size());
    S.erase(by_name(G, "(0,0)"));
    auto const subs = subalgebras(G, Signature::involutive_rl());
    if (std::find(subs.begin(), subs.end(), S) == subs.end()) {
      return "Tw(G3,0) minus (0,0) is not a subalgebra";
    }
    NCAPair const P =
        NCAPair::make(fixtures::g3_twist_without_00(), fixtures::g3_twist_without_00_tau());
    if (std::string w = check_phi("S", P); !w.empty()) {
      return w;
    }
    Phi const f = phi(P);
    if (f.surjective || f.map.surjective(f.target.algebra().size())) {
      return "phi on S is onto";
    }
    return "";
  }

  std::string c8() {
    for (auto const& n : {"tw_two_1", "tw_g3_1"}) {
      Verdict const v = is_kalman(fixture(n));
      if (!v.holds()) {
        return std::string(n) + ": " + why(v);
      }
    }
    ExperimentReport const r = check_k5_redundancy(5);
    if (!r.counterexamples.empty()) {
      return std::to_string(r.counterexamples.size()) + " violations of K5";
    }
    if (r.satisfying_k1k4 == 0) {
      return "no algebra satisfies K1-K4";
    }
    return "";
  }

  std::string c9() {
    Algebra const A = fixture("tw_g3_a");
    if (std::string w = why(is_nt(A)); !w.empty()) {
      return w;
    }
    Profile const p = structural_profile(A);
    if (p.integral || p.odd) {
      return "Tw(G3,a) is integral or odd";
    }
    Elem const e = A.unit();
    if (A.element_name(e) != "(1,a)" || A.element_name(A.neg(e)) != "(a,1)") {
      return "e = " + A.element_name(e) + ", ~e = " + A.element_name(A.neg(e));
    }
    Verdict const n = is_npc(A);
    auto const*   w = n.first("odd");
    if (!w || w->elements != std::vector<Elem>{e, A.neg(e)}) {
      return "no odd witness (e, ~e)";
    }
    return "";
  }

  std::string c10() {
    for (auto const& name : {"tw_two_0", "tw_g3_1", "tw_g3_a", "tw_g3_0"}) {
      Algebra const      A = fixture(name);
      UnaryMap const     t = nelson_term_tau(A);
      ImageAlgebra const H = conucleus_image(A, t);
      Subset             F1(H.algebra.name(), H.algebra.size()), F2 = F1, F3 = F1;
      for (Elem x = 0; x < A.size(); ++x) {
        F1.insert(H.of(t(A.join(x, A.neg(x)))));
        if (A.leq(A.neg(x), x)) {
          F2.insert(H.of(t(x)));
        }
        if (A.leq(t(A.neg(x)), t(x))) {
          F3.insert(H.of(t(x)));
        }
      }
      if (!(F1 == F2) || !(F2 == F3)) {
        return std::string(name) + ": the three sets differ";
      }
      Sendlewski const s = sendlewski_isomorphism(A);
      if (!(s.filter == F1)) {
        return std::string(name) + ": F_A differs from the defining sets";
      }
      if (!is_boolean_filter(s.pair.image().algebra, s.filter)) {
        return std::string(name) + ": F_A is not a Boolean filter";
      }
      if (!s.map.injective() || !s.map.surjective(s.target.algebra().size())) {
        return std::string(name) + ": phi not a bijection";
      }
      if (std::string w = why(check_morphism(A, s.target.algebra(), s.map)); !w.empty()) {
        return std::string(name) + ": " + w;
      }
    }
    return "";
  }

  std::string c11() {
    TwistAlgebra const T = twist(fixtures::l3(), 0);
    Algebra const&     A = T.algebra();
    if (A.element_name(A.bottom()) != "(0,1)") {
      return "bottom is " + A.element_name(A.bottom());
    }
    NCAPair const P = NCAPair::make(A, tau_tw(T));
    if (std::string w = why(inca_check(P)); !w.empty()) {
      return w;
    }
    Inca const c = inca_isomorphism(P);
    auto const& t = P.tau();
    Elem const  zero = P.image().of(t(A.bottom()));
    Subset      G(c.base.name(), c.base.size());
    for (Elem z = 0; z < A.size(); ++z) {
      if (P.image().of(t(z)) == zero) {
        G.insert(P.image().of(t(A.neg(z))));
      }
    }
    if (!(G == c.filter)) {
      return "F_A differs from {tau(~z) : tau(z) = 0}";
    }
    if (!c.map.injective() || !c.map.surjective(c.target.algebra().size())) {
      return "phi not a bijection";
    }
    if (std::string w = why(check_morphism(A, c.target.algebra(), c.map)); !w.empty()) {
      return w;
    }
    TwistAlgebra const U = twist(fixtures::g3(), 0);
    Verdict const      v = inca_check(NCAPair::make(U.algebra(), tau_tw(U)));
    auto const*        w = v.first("IT1");
    if (!w) {
      return "Tw(G3,0) passes IT1";
    }
    if (U.algebra().element_name(w->elements.at(0)) != "(a,0)") {
      return "IT1 witness " + U.algebra().element_name(w->elements.at(0));
    }
    return "";
  }

  std::string c12() {
    for (auto const& [label, P] : fixture_pairs()) {
      RasiowaStructure const R = rasiowa_structure(P);
      if (std::string w = why(check_rasiowa(R)); !w.empty()) {
        return label + ": " + w;
      }
      RasiowaRecovery const r = rasiowa_to_nca(R);
      if (find_homomorphisms(r.quotient.algebra, P.image().algebra,
                             Signature::residuated_lattice(), MorphismKind::iso, 1)
              .empty()) {
        return label + ": quotient not isomorphic to A_tau";
      }
      Algebra const& A = P.algebra();
      Algebra const& B = r.pair.algebra();
      if (B.size() != A.size() || B.unit() != A.unit() || r.pair.tau().table != P.tau().table) {
        return label + ": round trip changes the unit or tau";
      }
      for (Elem x = 0; x < A.size(); ++x) {
        if (B.neg(x) != A.neg(x)) {
          return label + ": round trip changes ~";
        }
        for (Elem y = 0; y < A.size(); ++y) {
          if (B.join(x, y) != A.join(x, y) || B.meet(x, y) != A.meet(x, y) ||
              B.prod(x, y) != A.prod(x, y) || B.ldiv(x, y) != A.ldiv(x, y) ||
              B.rdiv(x, y) != A.rdiv(x, y)) {
            return label + ": round trip changes the tables";
          }
        }
      }
      if (!r.round_trip) {
        return label + ": round_trip flag unset";
      }
    }
    return "";
  }

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

  std::string c13() {
    for (int n = 1; n <= 3; ++n) {
      auto const models = oracle::all_models(n);
      for (unsigned bits = 0; bits < 128; ++bits) {
        oracle::Flags f;
        f.commutative  = bits & 1;
        f.integral     = bits & 2;
        f.involutive   = (bits & 4) || (bits & 64);
        f.distributive = bits & 8;
        f.bounded      = bits & 16;
        f.idempotent   = bits & 32;
        f.odd          = bits & 64;
        std::size_t const got  = enumerate_all(spec_of(n, bits)).size();
        std::size_t const want = oracle::count(models, f);
        if (got != want) {
          return "n=" + std::to_string(n) + " flags " + std::to_string(bits) + ": " +
                 std::to_string(got) + " vs oracle " + std::to_string(want);
        }
      }
    }
    std::vector<Algebra> pool;
    for (auto const& f : fixtures::corpus()) {
      pool.push_back(f.algebra);
    }
    for (auto const& A : enumerate_all(spec_of(4, 0))) {
      pool.push_back(A);
    }
    std::mt19937                               rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < 200; ++k) {
      Algebra const&    A = pool[pick(rng)];
      Algebra const&    C = k % 2 ? A : pool[pick(rng)];
      std::vector<Elem> p(C.size());
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      Algebra const B    = relabel(C, p);
      bool const    iso  = find_isomorphism(A, B).has_value();
      bool const    same = A.size() == B.size() && canonical_form(A).same_tables(canonical_form(B));
      if (iso != same) {
        return "pair " + std::to_string(k) + ": canonical form and isomorphism disagree";
      }
    }
    return "";
  }

}  // namespace

int main() {
  struct Criterion {
    int         id;
    std::string name;
    double      limit_s;
    Check       run;
  };
  std::size_t                  phi_pairs = 0;
  std::vector<Criterion> const criteria  = {
      {1, "fixture validation", 1, c1},
      {2, "twist cardinalities", 5, c2},
      {3, "twist equals the double-division image", 5, c3},
      {4, "tau_Tw is a Nelson conucleus", 5, c4},
      {5, "psi isomorphism", 5, c5},
      {6, "phi embedding", 60, [&] { return c6(phi_pairs); }},
      {7, "five element chain and S", 5, c7},
      {8, "Kalman and K5 redundancy", 600, c8},
      {9, "NT separation", 5, c9},
      {10, "Sendlewski isomorphism", 5, c10},
      {11, "INCA", 5, c11},
      {12, "Rasiowa round trip", 30, c12},
      {13, "enumeration cross-validation", 120, c13},
  };

  int failed = 0;
  for (auto const& c : criteria) {
    auto const  start = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = c.run();
    } catch (std::exception const& e) {
      err = std::string("exception: ") + e.what();
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (err.empty() && secs > c.limit_s) {
      err = "over time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s (limit %g s)", secs, c.limit_s);
    std::cout << "[" << (c.id < 10 ? " " : "") << c.id << "] " << (err.empty() ? "PASS" : "FAIL")
              << "  " << c.name << "  " << timing << "  tol exact";
    if (c.id == 6 && err.empty()) {
      std::cout << "  " << phi_pairs << " pairs";
    }
    if (!err.empty()) {
      std::cout << "  " << err;
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << (failed ? "FAIL " : "PASS ") << criteria.size() - failed << "/" << criteria.size()
            << "\n";
  return failed ? 1 : 0;
}
