#include <chrono>
#include <functional>
#include <sstream>

#include "twistlab/cli.hpp"
#include "twistlab/conuclei.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/fixtures.hpp"
#include "twistlab/representation.hpp"
#include "twistlab/search.hpp"
#include "twistlab/twist.hpp"
#include "twistlab/varieties.hpp"

namespace twistlab::cli {

  namespace {

    struct Labelled {
      std::string label;
      NCAPair     pair;
    };

    // Every twist with tau_Tw, S with the restricted tau_Tw, and every
    // enumerated Nelson conucleus on the involutive fixtures.
    std::vector<Labelled> suite_pairs() {
      std::vector<Labelled> out;
      for (auto const& L : fixtures::bases()) {
        for (Elem i = 0; i < L.size(); ++i) {
          TwistAlgebra const T = twist(L, i);
          out.push_back({T.algebra().name() + " tau_Tw", NCAPair::make(T.algebra(), tau_tw(T))});
        }
      }
      Algebra const S = fixtures::g3_twist_without_00();
      out.push_back({"S tau_Tw", NCAPair::make(S, fixtures::g3_twist_without_00_tau())});
      for (auto const& f : fixtures::corpus()) {
        if (!f.algebra.involutive() || !f.algebra.has_unit() || f.algebra.size() > 9) {
          continue;
        }
        auto const all = enumerate_nelson_conuclei(f.algebra, 9);
        for (std::size_t k = 0; k < all.size(); ++k) {
          out.push_back({f.name + " #" + std::to_string(k), NCAPair::make(f.algebra, all[k])});
        }
      }
      return out;
    }

    // Runs `body` over `items`; the first failure is recorded in the detail.
    template <class T>
    SuiteLine over(std::string key,
                   std::vector<T> const& items,
                   std::function<std::string(T const&)> label,
                   std::function<std::string(T const&)> body) {
      SuiteLine line{std::move(key), true, ""};
      std::size_t n = 0;
      for (auto const& it : items) {
        std::string why;
        try {
          why = body(it);
        } catch (std::exception const& e) {
          why = e.what();
        }
        ++n;
        if (!why.empty()) {
          line.pass   = false;
          line.detail = label(it) + ": " + why;
          return line;
        }
      }
      line.detail = std::to_string(n) + " instances";
      return line;
    }

    SuiteLine single(std::string key, std::function<std::string()> body) {
      SuiteLine line{std::move(key), true, ""};
      try {
        line.detail = body();
      } catch (std::exception const& e) {
        line.pass   = false;
        line.detail = e.what();
        return line;
      }
      if (line.detail.rfind("FAIL ", 0) == 0) {
        line.pass   = false;
        line.detail = line.detail.substr(5);
      }
      return line;
    }

    std::string why(Verdict const& v) {
      if (v.holds()) {
        return "";
      }
      return v.name + " fails " + v.witnesses.front().axiom;
    }

    Algebra fixture(std::string const& name) {
      auto A = fixtures::find(name);
      if (!A) {
        throw InternalError("missing fixture " + name);
      }
      return *A;
    }

    struct BaseIota {
      Algebra L;
      Elem    iota;
    };

    std::vector<BaseIota> base_iotas() {
      std::vector<BaseIota> out;
      for (auto const& L : fixtures::bases()) {
        for (Elem i = 0; i < L.size(); ++i) {
          out.push_back({L, i});
        }
      }
      return out;
    }

    std::string bi_label(BaseIota const& b) {
      return "Tw(" + b.L.name() + "," + b.L.element_name(b.iota) + ")";
    }

    std::string lp_label(Labelled const& p) {
      return p.label;
    }

    std::string fx_label(fixtures::Fixture const& f) {
      return f.name;
    }

    bool is_nt_fixture(Algebra const& A) {
      return A.involutive() && is_nt(A).holds();
    }

  }  // namespace

  std::vector<SuiteLine> paper_suite() {
    std::vector<SuiteLine>        out;
    auto const                    corpus = fixtures::corpus();
    std::vector<fixtures::Fixture> involutive;
    std::vector<fixtures::Fixture> nt;
    for (auto const& f : corpus) {
      if (f.algebra.involutive()) {
        involutive.push_back(f);
      }
      if (is_nt_fixture(f.algebra)) {
        nt.push_back(f);
      }
    }
    auto const pairs = suite_pairs();
    auto const bis   = base_iotas();

    out.push_back(over<fixtures::Fixture>("def:residuated-lattice", corpus, fx_label,
                                          [](fixtures::Fixture const& f) {
                                            return why(validate(f.algebra.to_raw()));
                                          }));

    out.push_back(over<fixtures::Fixture>(
        "lem:involution-identities", involutive, fx_label, [](fixtures::Fixture const& f) {
          Algebra const& A = f.algebra;
          for (Elem x = 0; x < A.size(); ++x) {
            if (A.neg(A.neg(x)) != x) {
              return std::string("~~x = x");
            }
            for (Elem y = 0; y < A.size(); ++y) {
              if (A.ldiv(x, A.neg(y)) != A.rdiv(A.neg(x), y)) {
                return std::string("x\\~y = ~x/y");
              }
              if (A.neg(A.ldiv(x, y)) != A.prod(x, A.neg(y)) ||
                  A.neg(A.rdiv(y, x)) != A.prod(A.neg(y), x)) {
                return std::string("~(x\\y) = x~y");
              }
              if (A.neg(A.join(x, y)) != A.meet(A.neg(x), A.neg(y))) {
                return std::string("De Morgan");
              }
            }
          }
          return std::string();
        }));

    out.push_back(over<BaseIota>("thm:twist", bis, bi_label, [](BaseIota const& b) {
      TwistAlgebra const T = twist(b.L, b.iota);
      return why(validate(T.algebra().to_raw()));
    }));

    out.push_back(over<BaseIota>("lem:positive-idempotent", bis, bi_label, [](BaseIota const& b) {
      TwistAlgebra const F = full_twist(b.L);
      Elem const         p = F.at({b.L.unit(), b.iota});
      std::string        w = why(is_positive_idempotent(F.algebra(), p));
      if (w.empty()) {
        double_division_map(F.algebra(), p);
      }
      return w;
    }));

    out.push_back(over<BaseIota>("lem:downset", bis, bi_label,
                                 [](BaseIota const& b) { return why(check_downset(b.L, b.iota)); }));

    out.push_back(over<BaseIota>("lem:tau-tw", bis, bi_label, [](BaseIota const& b) {
      TwistAlgebra const T = twist(b.L, b.iota);
      return why(is_nelson_conucleus(T.algebra(), tau_tw(T)));
    }));

    out.push_back(over<Labelled>("lem:quasiequation", pairs, lp_label, [](Labelled const& l) {
      Algebra const& A = l.pair.algebra();
      auto const&    t = l.pair.tau();
      for (Elem x = 0; x < A.size(); ++x) {
        for (Elem y = x + 1; y < A.size(); ++y) {
          if (t(x) == t(y) && t(A.neg(x)) == t(A.neg(y))) {
            return A.element_name(x) + " and " + A.element_name(y) + " agree";
          }
        }
      }
      return std::string();
    }));

    out.push_back(over<Labelled>("lem:tau-bounds", pairs, lp_label, [](Labelled const& l) {
      Algebra const& A = l.pair.algebra();
      auto const&    t = l.pair.tau();
      Elem const     e = A.unit();
      bool           below_e = true;
      for (Elem x = 0; x < A.size(); ++x) {
        below_e = below_e && A.leq(t(x), e);
      }
      for (Elem x = 0; x < A.size(); ++x) {
        Elem const xe = A.meet(x, e);
        if (!A.leq(A.prod(xe, xe), t(x))) {
          return "(x /\\ e)^2 <= tau(x) at " + A.element_name(x);
        }
        if (below_e && !A.leq(t(x), xe)) {
          return "tau(x) <= x /\\ e at " + A.element_name(x);
        }
      }
      Elem const ne = A.neg(e);
      if (below_e && A.leq(e, ne) && (e != ne || t.table != kalman_term_tau(A).table)) {
        return std::string("e <= ~e forces tau(x) = x /\\ e");
      }
      return std::string();
    }));

    out.push_back(over<BaseIota>("thm:psi", bis, bi_label, [](BaseIota const& b) {
      Psi const p = psi(b.L, b.iota);
      if (!p.map.injective() || !p.map.surjective(p.image.algebra.size())) {
        return std::string("not a bijection");
      }
      if (p.map(b.iota) != p.image.of(tau_tw(p.twist)(p.twist.at({b.iota, b.L.unit()})))) {
        return std::string("iota not sent to tau(~e)");
      }
      return why(check_morphism(b.L, p.image.algebra, p.map));
    }));

    out.push_back(over<Labelled>("thm:representation", pairs, lp_label, [](Labelled const& l) {
      Phi const f = phi(l.pair);
      if (!f.map.injective()) {
        return std::string("phi not injective");
      }
      Verdict v = check_morphism(l.pair.algebra(), f.target.algebra(), f.map);
      for (Elem x = 0; x < l.pair.algebra().size(); ++x) {
        if (f.map(l.pair.tau()(x)) != f.target_tau(f.map(x))) {
          return std::string("phi does not commute with the conuclei");
        }
      }
      return why(v);
    }));

    out.push_back(single("ex:non-surjective", [] {
      NCAPair const P = NCAPair::make(fixtures::g3_twist_without_00(),
                                      fixtures::g3_twist_without_00_tau());
      Phi const     f = phi(P);
      if (!f.map.injective() || f.surjective) {
        return std::string("FAIL phi on S should be injective and not onto");
      }
      return "S has " + std::to_string(P.algebra().size()) + " elements, phi lands in " +
             std::to_string(f.target.algebra().size());
    }));

    out.push_back(over<Labelled>("thm:adjunction", pairs, lp_label, [](Labelled const& l) {
      return why(adjunction_identities(l.pair));
    }));
    out.push_back(over<BaseIota>("thm:adjunction-base", bis, bi_label, [](BaseIota const& b) {
      return why(adjunction_identities(b.L, b.iota));
    }));

    out.push_back(over<Labelled>("thm:rasiowa-structure", pairs, lp_label, [](Labelled const& l) {
      return why(check_rasiowa(rasiowa_structure(l.pair)));
    }));

    out.push_back(over<Labelled>("thm:rasiowa-converse", pairs, lp_label, [](Labelled const& l) {
      RasiowaRecovery const r = rasiowa_to_nca(rasiowa_structure(l.pair));
      if (!r.round_trip) {
        return std::string("round trip differs");
      }
      if (find_homomorphisms(r.quotient.algebra, l.pair.image().algebra,
                             Signature::residuated_lattice(), MorphismKind::iso, 1)
              .empty()) {
        return std::string("quotient not isomorphic to the image");
      }
      return std::string();
    }));

    out.push_back(single("ex:five-chain", [] {
      Algebra const S5 = fixtures::five_chain();
      // upper triangle of the product table in the order (0,1) (0,a) (0,0) (a,0) (1,0)
      std::vector<std::string> const order = {"(0,1)", "(0,a)", "(0,0)", "(a,0)", "(1,0)"};
      std::vector<std::vector<std::string>> const table = {
          {"(0,1)", "(0,1)", "(0,1)", "(0,1)", "(0,1)"},
          {"", "(0,1)", "(0,1)", "(0,1)", "(0,a)"},
          {"", "", "(0,1)", "(0,a)", "(0,0)"},
          {"", "", "", "(0,a)", "(a,0)"},
          {"", "", "", "", "(1,0)"}};
      auto idx = [&](std::string const& n) -> Elem {
        for (Elem x = 0; x < S5.size(); ++x) {
          if (S5.element_name(x) == n) {
            return x;
          }
        }
        throw InternalError("no element " + n + " in S5");
      };
      for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = r; c < 5; ++c) {
          Elem const x = idx(order[r]), y = idx(order[c]);
          if (S5.element_name(S5.prod(x, y)) != table[r][c] ||
              S5.element_name(S5.prod(y, x)) != table[r][c]) {
            return "FAIL product " + order[r] + order[c];
          }
        }
      }
      Algebra const      L3 = fixtures::l3();
      TwistAlgebra const T  = twist(L3, 0);
      Pair const         img = T.pair(tau_tw(T)(T.at({1, 0})));
      if (img != Pair{1, 1}) {
        return std::string("FAIL tau_Tw(a,0) != (a,a)");
      }
      auto const subs = subalgebras(T.algebra(), Signature::involutive_rl());
      bool       found = false;
      for (auto const& s : subs) {
        found = found || (s.count() == 5 && !s.contains(T.at({1, 1})));
      }
      if (!found) {
        return std::string("FAIL S5 is not a subuniverse");
      }
      return std::string("table matches, tau_Tw(a,0) = (a,a) outside S5");
    }));

    out.push_back(single("ex:kalman", [] {
      for (auto const& n : {"tw_two_1", "tw_g3_1"}) {
        Verdict const v = is_kalman(fixture(n));
        if (!v.holds()) {
          return "FAIL " + std::string(n) + ": " + why(v);
        }
      }
      return std::string("Tw(2,1), Tw(G3,1)");
    }));

    out.push_back(single("ex:nelson-rl", [] {
      for (auto const& n : {"tw_two_0", "tw_g3_0"}) {
        Verdict const v = is_nelson_rl(fixture(n));
        if (!v.holds()) {
          return "FAIL " + std::string(n) + ": " + why(v);
        }
      }
      return std::string("Tw(2,0), Tw(G3,0)");
    }));

    out.push_back(single("ex:npc", [] {
      for (auto const& n : {"tw_two_1", "tw_g3_1"}) {
        Verdict const v = is_npc(fixture(n));
        if (!v.holds()) {
          return "FAIL " + std::string(n) + ": " + why(v);
        }
      }
      return std::string("Tw(2,1), Tw(G3,1)");
    }));

    out.push_back(over<fixtures::Fixture>(
        "lem:kalman-term", corpus, fx_label, [](fixtures::Fixture const& f) {
          Algebra const& A = f.algebra;
          if (!A.involutive() || !structural_profile(A).commutative || !is_kalman(A).holds()) {
            return std::string();
          }
          return why(is_nelson_conucleus(A, kalman_term_tau(A)));
        }));

    out.push_back(over<Labelled>("thm:nelson-term", pairs, lp_label, [](Labelled const& l) {
      Algebra const& A = l.pair.algebra();
      auto const&    t = l.pair.tau();
      bool           hyp = structural_profile(A).commutative;
      for (Elem x = 0; x < A.size() && hyp; ++x) {
        hyp = A.leq(t(x), A.unit()) && A.prod(t(x), t(x)) == t(x);
      }
      if (hyp) {
        if (t.table != nelson_term_tau(A).table) {
          return std::string("tau is not (x /\\ e)^2");
        }
        if (!is_nt(A).holds()) {
          return std::string("not NT");
        }
      }
      if (is_nt(A).holds()) {
        return why(is_nelson_conucleus(A, nelson_term_tau(A)));
      }
      return std::string();
    }));

    out.push_back(over<fixtures::Fixture>(
        "lem:nt-subvarieties", nt, fx_label, [](fixtures::Fixture const& f) {
          Algebra const& A = f.algebra;
          Profile const  p = structural_profile(A);
          if (p.integral && A.has_bottom() && !is_nelson_rl(A).holds()) {
            return std::string("integral NT but not a Nelson residuated lattice");
          }
          if (p.odd && !is_npc(A).holds()) {
            return std::string("odd NT but not NPc");
          }
          return std::string();
        }));

    out.push_back(single("ex:nt-separation", [] {
      Algebra const A = fixture("tw_g3_a");
      Profile const p = structural_profile(A);
      if (!is_nt(A).holds()) {
        return std::string("FAIL Tw(G3,a) is not NT");
      }
      if (p.integral || p.odd) {
        return std::string("FAIL Tw(G3,a) is integral or odd");
      }
      Verdict const n = is_npc(A);
      if (n.holds()) {
        return std::string("FAIL Tw(G3,a) passes NPc");
      }
      Elem const e = A.unit();
      return "e = " + A.element_name(e) + " != " + A.element_name(A.neg(e)) + " = ~e";
    }));

    out.push_back(over<fixtures::Fixture>(
        "lem:filter", nt, fx_label, [](fixtures::Fixture const& f) {
          Sendlewski const s = sendlewski_isomorphism(f.algebra);
          if (!is_boolean_filter(s.pair.image().algebra, s.filter)) {
            return std::string("F_A is not a Boolean filter");
          }
          return std::string();
        }));

    {
      struct Triple {
        Algebra H;
        Elem    iota;
        Subset  F;
      };
      std::vector<Triple> triples;
      for (auto const& H : fixtures::bases()) {
        if (!is_brouwerian(H).holds()) {
          continue;
        }
        for (Elem i = 0; i < H.size(); ++i) {
          for (auto const& F : boolean_filters(H)) {
            triples.push_back({H, i, F});
          }
        }
      }
      out.push_back(over<Triple>(
          "lem:sendlewski-twist", triples,
          [](Triple const& t) { return "Tw(" + t.H.name() + "," + t.H.element_name(t.iota) + ",F)"; },
          [](Triple const& t) {
            return why(is_twist_product(sendlewski_twist(t.H, t.iota, t.F)));
          }));

      out.push_back(over<fixtures::Fixture>(
          "thm:sendlewski", nt, fx_label, [](fixtures::Fixture const& f) {
            Sendlewski const s = sendlewski_isomorphism(f.algebra);
            if (!s.map.injective() || !s.map.surjective(s.target.algebra().size())) {
              return std::string("not a bijection");
            }
            return why(check_morphism(f.algebra, s.target.algebra(), s.map));
          }));

      // Brouwerian morphisms H1 -> H2 lifted to twist-products, with F2 = H2
      struct Lift {
        Triple   from;
        Algebra  H2;
        Morphism f;
      };
      std::vector<Lift> lifts;
      for (auto const& t : triples) {
        for (auto const& H2 : fixtures::bases()) {
          if (!is_brouwerian(H2).holds()) {
            continue;
          }
          for (auto const& f : find_homomorphisms(t.H, H2, Signature::brouwerian())) {
            lifts.push_back({t, H2, f});
          }
        }
      }
      out.push_back(over<Lift>(
          "lem:transport", lifts,
          [](Lift const& l) { return l.f.source + " -> " + l.f.target; },
          [](Lift const& l) {
            Triple const& t = l.from;
            Lifted const  r = transport_morphism(
                {t.H, t.iota, t.F},
                {l.H2, l.f(t.iota), Subset::full(l.H2.name(), l.H2.size())}, l.f);
            return why(check_morphism(r.source.algebra(), r.target.algebra(), r.map));
          }));
    }

    {
      std::vector<std::pair<fixtures::Fixture, fixtures::Fixture>> nt_pairs;
      for (auto const& a : nt) {
        for (auto const& b : nt) {
          nt_pairs.push_back({a, b});
        }
      }
      std::size_t restricted = 0;
      out.push_back(over<std::pair<fixtures::Fixture, fixtures::Fixture>>(
          "lem:restriction", nt_pairs,
          [](auto const& p) { return p.first.name + " -> " + p.second.name; },
          [&restricted](auto const& p) {
            for (auto const& g : find_homomorphisms(p.first.algebra, p.second.algebra,
                                                    Signature::involutive_rl())) {
              restrict_morphism(p.first.algebra, p.second.algebra, g);
              ++restricted;
            }
            return std::string();
          }));
      out.back().detail += ", " + std::to_string(restricted) + " morphisms";
    }

    {
      struct Triple {
        Algebra L;
        Elem    iota;
        Subset  F;
      };
      std::vector<Triple> triples;
      for (auto const& L : fixtures::bases()) {
        Profile const p = structural_profile(L);
        if (!p.commutative || !L.involutive()) {
          continue;
        }
        for (Elem i = 0; i < L.size(); ++i) {
          Elem const ei = oplus(L, L.unit(), i);
          for (auto const& F : lattice_filters(L)) {
            if (F.contains(ei)) {
              triples.push_back({L, i, F});
            }
          }
        }
      }
      auto label = [](Triple const& t) {
        return "Tw(" + t.L.name() + "," + t.L.element_name(t.iota) + ",F)";
      };
      out.push_back(over<Triple>("lem:inca-twist", triples, label, [](Triple const& t) {
        return why(is_twist_product(inca_twist(t.L, t.iota, t.F)));
      }));
      out.push_back(over<Triple>("lem:filter-oplus", triples, label, [](Triple const& t) {
        if (!structural_profile(t.L).integral) {
          return std::string();
        }
        TwistAlgebra const T = inca_twist(t.L, t.iota, t.F);
        for (Elem c = 0; c < t.L.size(); ++c) {
          bool hit = false;
          for (auto const& [a, b] : T.pairs()) {
            hit = hit || oplus(t.L, a, b) == c;
          }
          if (hit != t.F.contains(c)) {
            return "membership of " + t.L.element_name(c);
          }
        }
        return std::string();
      }));
    }

    std::vector<Labelled> inca_pairs;
    for (auto const& l : pairs) {
      Algebra const& A = l.pair.algebra();
      if (A.has_bottom() && structural_profile(A).commutative && inca_check(l.pair).holds()) {
        inca_pairs.push_back(l);
      }
    }
    for (auto const& L : fixtures::bases()) {
      if (L.involutive() && L.has_bottom() && structural_profile(L).commutative) {
        NCAPair P = NCAPair::make(L, identity_map(L));
        if (inca_check(P).holds()) {
          inca_pairs.push_back({L.name() + " identity", std::move(P)});
        }
      }
    }
    out.push_back(over<Labelled>("lem:filterform", inca_pairs, lp_label, [](Labelled const& l) {
      Inca const     c = inca_isomorphism(l.pair);
      Algebra const& A = l.pair.algebra();
      auto const&    t = l.pair.tau();
      Elem const     zero = l.pair.image().of(t(A.bottom()));
      Subset         G(c.base.name(), c.base.size());
      for (Elem z = 0; z < A.size(); ++z) {
        if (l.pair.image().of(t(z)) == zero) {
          G.insert(l.pair.image().of(t(A.neg(z))));
        }
      }
      return G == c.filter ? std::string() : std::string("F_A differs from {tau(~z) : tau(z) = 0}");
    }));
    out.push_back(over<Labelled>("thm:inca", inca_pairs, lp_label, [](Labelled const& l) {
      Inca const c = inca_isomorphism(l.pair);
      if (!is_lattice_filter(c.base, c.filter)) {
        return std::string("F_A is not a lattice filter");
      }
      if (!c.map.injective() || !c.map.surjective(c.target.algebra().size())) {
        return std::string("not a bijection");
      }
      return why(check_morphism(l.pair.algebra(), c.target.algebra(), c.map));
    }));

    out.push_back(single("ex:inca-failure", [] {
      TwistAlgebra const T = twist(fixtures::g3(), 0);
      Verdict const      v = inca_check(NCAPair::make(T.algebra(), tau_tw(T)));
      if (v.holds()) {
        return std::string("FAIL Tw(G3,0) passes IT1");
      }
      std::string const w = T.algebra().element_name(v.first("IT1")->elements.at(0));
      if (w != "(a,0)") {
        return "FAIL witness " + w;
      }
      return "IT1 fails at " + w;
    }));

    out.push_back(single("exp:k5-redundancy", [] {
      ExperimentReport const r = check_k5_redundancy(5);
      std::string const d = std::to_string(r.examined) + " examined, " +
                            std::to_string(r.satisfying_k1k4) + " satisfy K1-K4, " +
                            std::to_string(r.counterexamples.size()) + " violate K5";
      return r.counterexamples.empty() ? d : "FAIL " + d;
    }));

    return out;
  }

}  // namespace twistlab::cli
