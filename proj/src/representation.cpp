#include "twistlab/representation.hpp"

#include <algorithm>
#include <set>

#include "twistlab/errors.hpp"
#include "twistlab/varieties.hpp"

namespace twistlab {

  namespace {

    std::string first_axiom(Verdict const& v) {
      return v.witnesses.empty() ? std::string("?") : v.witnesses.front().axiom;
    }

    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw InternalError(what);
      }
    }

    void require_morphism(Algebra const& A, Algebra const& B, Morphism const& m,
                          std::string const& what) {
      Verdict const v = check_morphism(A, B, m);
      require(v.holds(), what + " is not a homomorphism (" + first_axiom(v) + ")");
    }

    NCAPair pair_or_internal(Algebra const& A, UnaryMap const& t, std::string const& what) {
      try {
        return NCAPair::make(A, t);
      } catch (PreconditionError const& e) {
        throw InternalError(what + ": " + e.what());
      }
    }

    Elem cyc(Algebra const& L, Elem iota, Elem a) {
      return L.meet(L.rdiv(iota, a), L.ldiv(a, iota));
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // psi, phi
  ////////////////////////////////////////////////////////////////////////

  Psi psi(Algebra const& L, Elem iota) {
    if (!L.has_unit()) {
      throw PreconditionError(L.name() + " has no unit");
    }
    if (!is_cyclic_element(L, iota)) {
      throw PreconditionError(L.element_name(iota) + " is not cyclic in " + L.name());
    }
    TwistAlgebra T   = twist(L, iota);
    UnaryMap     t   = tau_tw(T);
    ImageAlgebra img = conucleus_image(T.algebra(), t);
    Morphism     m{L.name(), img.algebra.name(), {}, Signature::residuated_lattice()};
    for (Elem a = 0; a < L.size(); ++a) {
      m.table.push_back(img.of(T.at({a, L.ldiv(a, iota)})));
    }
    require_morphism(L, img.algebra, m, "psi");
    require(m.injective() && m.surjective(img.algebra.size()), "psi is not a bijection");
    Algebra const& A = T.algebra();
    require(img.of(t(A.neg(A.unit()))) == m(iota), "psi does not match the cyclic constants");
    return Psi{std::move(T), std::move(t), std::move(img), std::move(m)};
  }

  Phi phi(NCAPair const& P) {
    Algebra const&      A    = P.algebra();
    ImageAlgebra const& img  = P.image();
    Elem const          iota = img.of(P.iota());
    TwistAlgebra        T    = twist(img.algebra, iota);
    UnaryMap            tt   = tau_tw(T);
    UnaryMap const&     t    = P.tau();
    Morphism m{A.name(), T.algebra().name(), {}, Signature::involutive_rl()};
    for (Elem x = 0; x < A.size(); ++x) {
      auto k = T.find({img.of(t(x)), img.of(t(A.neg(x)))});
      require(k.has_value(), "phi leaves Tw(A_tau, i) at " + A.element_name(x));
      m.table.push_back(*k);
    }
    require_morphism(A, T.algebra(), m, "phi");
    require(m.injective(), "phi is not injective on " + A.name());
    for (Elem x = 0; x < A.size(); ++x) {
      require(m(t(x)) == tt(m(x)), "phi does not commute with the conuclei at "
                                       + A.element_name(x));
    }
    bool const onto = m.surjective(T.algebra().size());
    return Phi{std::move(T), std::move(tt), std::move(m), onto};
  }

  Verdict adjunction_identities(NCAPair const& P) {
    Verdict             v{"adjunction", {}};
    Phi const           f   = phi(P);
    ImageAlgebra const& img = P.image();
    Algebra const&      H   = img.algebra;
    Elem const          iota = img.of(P.iota());
    for (Elem a = 0; a < H.size(); ++a) {
      Pair const p = f.target.pair(f.map(img.embedding[a]));
      // psi^-1 is defined on pairs (c, c\i)
      if (p.second != cyc(H, iota, p.first) || p.first != a) {
        v.fail("triangle-image", {a});
      }
    }
    return v;
  }

  Verdict adjunction_identities(Algebra const& L, Elem iota) {
    Verdict            v{"adjunction", {}};
    Psi const          s = psi(L, iota);
    NCAPair const      P = pair_or_internal(s.twist.algebra(), s.tau, "tau_Tw");
    Phi const          f = phi(P);
    std::vector<int>   inverse(s.image.algebra.size(), -1);
    for (Elem a = 0; a < L.size(); ++a) {
      inverse[s.map(a)] = static_cast<int>(a);
    }
    for (Elem x = 0; x < s.twist.algebra().size(); ++x) {
      Pair const p = f.target.pair(f.map(x));
      Pair const back{static_cast<Elem>(inverse[p.first]), static_cast<Elem>(inverse[p.second])};
      if (back != s.twist.pair(x)) {
        v.fail("triangle-twist", {x});
      }
    }
    auto const w = adjunction_identities(P);
    v.absorb(w, "");
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rasiowa-type algebras
  ////////////////////////////////////////////////////////////////////////

  bool RasiowaStructure::preceq(Elem x, Elem y) const {
    Elem const s = supset[x][y];
    return leq(supset[s][s], s);
  }

  bool RasiowaStructure::operator==(RasiowaStructure const& o) const {
    return size == o.size && join == o.join && meet == o.meet && prod == o.prod
           && supset == o.supset && subset == o.subset && invol == o.invol && unit == o.unit;
  }

  RasiowaStructure rasiowa_structure(NCAPair const& P) {
    Algebra const&    A = P.algebra();
    std::size_t const n = A.size();
    RasiowaStructure  R;
    R.name  = A.name();
    R.size  = n;
    R.join  = A.join_table().to_matrix();
    R.meet  = A.meet_table().to_matrix();
    R.prod  = A.prod_table().to_matrix();
    R.invol = A.involution();
    R.unit  = A.unit();
    R.names = A.names();
    R.supset.assign(n, std::vector<Elem>(n));
    R.subset = R.supset;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        R.supset[x][y] = P.supset(x, y);
        R.subset[y][x] = P.subset(y, x);
      }
    }
    Verdict const v = check_rasiowa(R);
    require(v.holds(), "the Rasiowa structure of " + A.name() + " fails " + first_axiom(v));
    return R;
  }

  namespace {

    void check_dims(RasiowaStructure const& R) {
      std::size_t const n  = R.size;
      auto              ok = [&](Matrix const& m) {
        if (m.size() != n) {
          return false;
        }
        for (auto const& row : m) {
          if (row.size() != n) {
            return false;
          }
          for (Elem v : row) {
            if (v >= n) {
              return false;
            }
          }
        }
        return true;
      };
      bool good = n > 0 && ok(R.join) && ok(R.meet) && ok(R.prod) && ok(R.supset)
                  && ok(R.subset) && R.invol.size() == n && R.unit < n;
      for (Elem v : R.invol) {
        good = good && v < n;
      }
      if (!good) {
        throw MalformedInput("Rasiowa structure has inconsistent dimensions");
      }
    }

    // theta as a class index per element, classes ordered by least member.
    std::vector<Elem> theta_classes(RasiowaStructure const& R, std::size_t& count) {
      std::size_t const n = R.size;
      std::vector<int>  cls(n, -1);
      count = 0;
      for (Elem x = 0; x < n; ++x) {
        if (cls[x] >= 0) {
          continue;
        }
        for (Elem y = x; y < n; ++y) {
          if (cls[y] < 0 && R.preceq(x, y) && R.preceq(y, x)) {
            cls[y] = static_cast<int>(count);
          }
        }
        ++count;
      }
      return {cls.begin(), cls.end()};
    }

    RawAlgebra quotient_raw(RasiowaStructure const& R, std::vector<Elem> const& cls,
                            std::size_t m) {
      std::vector<Elem> rep(m, 0);
      std::vector<bool> seen(m, false);
      for (Elem x = 0; x < R.size; ++x) {
        if (!seen[cls[x]]) {
          seen[cls[x]] = true;
          rep[cls[x]]  = x;
        }
      }
      RawAlgebra q;
      q.name = R.name + "/theta";
      q.size = m;
      q.join.assign(m, std::vector<Elem>(m));
      q.meet = q.prod = q.join;
      q.ldiv = q.join;
      q.rdiv = q.join;
      for (Elem i = 0; i < m; ++i) {
        q.names.push_back("[" + (R.names.size() == R.size ? R.names[rep[i]] : std::to_string(rep[i]))
                          + "]");
        for (Elem j = 0; j < m; ++j) {
          Elem const x = rep[i], y = rep[j];
          q.join[i][j]    = cls[R.join[x][y]];
          q.meet[i][j]    = cls[R.meet[x][y]];
          q.prod[i][j]    = cls[R.prod[x][y]];
          (*q.ldiv)[i][j] = cls[R.supset[x][y]];
          (*q.rdiv)[i][j] = cls[R.subset[x][y]];
        }
      }
      q.unit = cls[R.unit];
      return q;
    }

  }  // namespace

  Verdict check_rasiowa(RasiowaStructure const& R) {
    check_dims(R);
    Verdict           v{"rasiowa", {}};
    std::size_t const n   = R.size;
    auto const&       neg = R.invol;

    // R1
    for (Elem x = 0; x < n; ++x) {
      if (neg[neg[x]] != x) {
        v.fail("R1", {x});
      }
      for (Elem y = 0; y < n; ++y) {
        bool lattice = R.join[x][y] == R.join[y][x] && R.meet[x][y] == R.meet[y][x]
                       && R.join[x][R.meet[x][y]] == x && R.meet[x][R.join[x][y]] == x;
        for (Elem z = 0; z < n && lattice; ++z) {
          lattice = R.join[R.join[x][y]][z] == R.join[x][R.join[y][z]]
                    && R.meet[R.meet[x][y]][z] == R.meet[x][R.meet[y][z]];
        }
        if (!lattice) {
          v.fail("R1-lattice", {x, y});
        }
        if (neg[R.join[x][y]] != R.meet[neg[x]][neg[y]]) {
          v.fail("R1", {x, y});
        }
      }
    }
    // R2
    auto sub_preceq = [&](Elem x, Elem y) {
      Elem const s = R.subset[y][x];
      return R.leq(R.subset[s][s], s);
    };
    for (Elem x = 0; x < n; ++x) {
      if (!R.preceq(x, x)) {
        v.fail("R2-reflexive", {x});
      }
      for (Elem y = 0; y < n; ++y) {
        if (R.preceq(x, y) != sub_preceq(x, y)) {
          v.fail("R2-forms", {x, y});
        }
        if (!R.preceq(x, y)) {
          continue;
        }
        for (Elem z = 0; z < n; ++z) {
          if (R.preceq(y, z) && !R.preceq(x, z)) {
            v.fail("R2-transitive", {x, y, z});
          }
        }
      }
    }
    auto theta = [&](Elem x, Elem y) { return R.preceq(x, y) && R.preceq(y, x); };
    // R3
    bool congruence = true;
    for (Elem x = 0; x < n; ++x) {
      for (Elem x2 = 0; x2 < n; ++x2) {
        if (x == x2 || !theta(x, x2)) {
          continue;
        }
        for (Elem y = 0; y < n; ++y) {
          for (Matrix const* op : {&R.join, &R.meet, &R.prod, &R.supset, &R.subset}) {
            auto const& m = *op;
            if (!theta(m[x][y], m[x2][y]) || !theta(m[y][x], m[y][x2])) {
              v.fail("R3-congruence", {x, x2, y});
              congruence = false;
            }
          }
        }
      }
    }
    if (congruence && v.holds()) {
      std::size_t m   = 0;
      auto const  cls = theta_classes(R, m);
      try {
        Algebra::certify(quotient_raw(R, cls, m));
      } catch (ValidationError const& e) {
        for (auto const& w : e.report().witnesses) {
          v.fail("R3-quotient:" + w.axiom, w.elements);
        }
      }
    }
    // R4
    Elem const ne = neg[R.unit];
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (!theta(neg[R.supset[x][y]], R.prod[neg[y]][x])) {
          v.fail("R4-supset", {x, y});
        }
        if (!theta(neg[R.subset[y][x]], R.prod[x][neg[y]])) {
          v.fail("R4-subset", {x, y});
        }
        if (!theta(neg[R.prod[x][y]], R.meet[R.supset[y][neg[x]]][R.subset[neg[y]][x]])) {
          v.fail("R4-prod", {x, y});
        }
        // R5
        bool const both = R.preceq(x, y) && R.preceq(neg[y], neg[x]);
        if (R.leq(x, y) != both) {
          v.fail("R5", {x, y});
        }
      }
      // R6
      if (R.supset[x][ne] != R.subset[ne][x]) {
        v.fail("R6", {x});
      }
    }
    return v;
  }

  RasiowaQuotient rasiowa_quotient(RasiowaStructure const& R) {
    Verdict const v = check_rasiowa(R);
    for (auto const& w : v.witnesses) {
      if (w.axiom.rfind("R3", 0) == 0 || w.axiom.rfind("R2", 0) == 0) {
        throw PreconditionError("theta does not give a residuated lattice quotient (" + w.axiom
                                + ")");
      }
    }
    std::size_t m   = 0;
    auto const  cls = theta_classes(R, m);
    std::vector<std::vector<Elem>> classes(m);
    for (Elem x = 0; x < R.size; ++x) {
      classes[cls[x]].push_back(x);
    }
    return RasiowaQuotient{Algebra::certify(quotient_raw(R, cls, m)), cls, std::move(classes)};
  }

  RasiowaRecovery rasiowa_to_nca(RasiowaStructure const& R) {
    Verdict const v = check_rasiowa(R);
    if (!v.holds()) {
      throw PreconditionError("not a Rasiowa-type algebra (" + first_axiom(v) + ")");
    }
    std::size_t const n   = R.size;
    auto const&       neg = R.invol;
    RawAlgebra        raw;
    raw.name = R.name;
    raw.size = n;
    raw.join = R.join;
    raw.meet = R.meet;
    raw.prod = R.prod;
    raw.ldiv.emplace(n, std::vector<Elem>(n));
    raw.rdiv.emplace(n, std::vector<Elem>(n));
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        (*raw.ldiv)[x][y] = neg[R.prod[neg[y]][x]];
        (*raw.rdiv)[y][x] = neg[R.prod[x][neg[y]]];
      }
    }
    raw.unit  = R.unit;
    raw.invol = neg;
    raw.names = R.names;
    Algebra A = [&] {
      try {
        return Algebra::certify(std::move(raw));
      } catch (ValidationError const& e) {
        throw InternalError(std::string("recovered algebra is not an involutive residuated lattice: ")
                            + e.what());
      }
    }();
    Elem const ne = neg[R.unit];
    UnaryMap   t{A.name(), {}};
    for (Elem x = 0; x < n; ++x) {
      t.table.push_back(neg[R.supset[x][ne]]);
    }
    NCAPair         P = pair_or_internal(A, t, "recovered conucleus");
    RasiowaQuotient Q = rasiowa_quotient(R);
    TwistAlgebra    T = twist(Q.algebra, Q.class_of[ne]);
    Morphism        h{A.name(), T.algebra().name(), {}, Signature::involutive_rl()};
    for (Elem x = 0; x < n; ++x) {
      auto k = T.find({Q.class_of[x], Q.class_of[neg[x]]});
      require(k.has_value(), "h leaves the twist at " + A.element_name(x));
      h.table.push_back(*k);
    }
    require_morphism(A, T.algebra(), h, "h");
    require(h.injective(), "h is not injective");
    bool const round = rasiowa_structure(P) == R;
    return RasiowaRecovery{std::move(P), std::move(Q), std::move(T), std::move(h), round};
  }

  ////////////////////////////////////////////////////////////////////////
  // Sendlewski
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct NtCore {
      NCAPair pair;
      Subset  filter;
    };

    NtCore nt_core(Algebra const& A) {
      Verdict const v = is_nt(A);
      if (!v.holds()) {
        throw PreconditionError(A.name() + " is not a Nelson-type algebra (" + first_axiom(v)
                                + ")");
      }
      NCAPair             P   = pair_or_internal(A, nelson_term_tau(A), "(x /\\ e)^2");
      ImageAlgebra const& img = P.image();
      UnaryMap const&     t   = P.tau();
      Algebra const&      H   = img.algebra;
      Subset              F1(H.name(), H.size()), F2 = F1, F3 = F1;
      for (Elem x = 0; x < A.size(); ++x) {
        F1.insert(img.of(t(A.join(x, A.neg(x)))));
        if (A.leq(A.neg(x), x)) {
          F2.insert(img.of(t(x)));
        }
        if (A.leq(t(A.neg(x)), t(x))) {
          F3.insert(img.of(t(x)));
        }
      }
      require(F1 == F2 && F2 == F3, "the three descriptions of F_A differ on " + A.name());
      require(is_brouwerian(H).holds(), "H_A is not Brouwerian for " + A.name());
      require(is_boolean_filter(H, F1), "F_A is not a Boolean filter for " + A.name());
      return NtCore{std::move(P), std::move(F1)};
    }

  }  // namespace

  Subset sendlewski_filter(Algebra const& A) {
    return nt_core(A).filter;
  }

  Sendlewski sendlewski_isomorphism(Algebra const& A) {
    NtCore              core = nt_core(A);
    NCAPair const&      P    = core.pair;
    ImageAlgebra const& img  = P.image();
    Algebra const&      H    = img.algebra;
    UnaryMap const&     t    = P.tau();
    Elem const          iota = img.of(P.iota());
    TwistAlgebra        T    = [&] {
      try {
        return sendlewski_twist(H, iota, core.filter);
      } catch (PreconditionError const& e) {
        throw InternalError(e.what());
      }
    }();
    Phi const f = phi(P);
    Morphism  m{A.name(), T.algebra().name(), {}, Signature::involutive_rl()};
    for (Elem x = 0; x < A.size(); ++x) {
      auto k = T.find(f.target.pair(f.map(x)));
      require(k.has_value(), "phi(" + A.element_name(x) + ") is outside Tw(H_A, i, F_A)");
      m.table.push_back(*k);
    }
    require_morphism(A, T.algebra(), m, "phi onto Tw(H_A, i, F_A)");
    require(m.injective() && m.surjective(T.algebra().size()),
            "phi is not a bijection onto Tw(H_A, i, F_A)");

    std::vector<SurjectivityWitness> wit;
    auto imp = [&](Elem x, Elem y) { return P.supset(x, y); };
    for (Pair p : T.pairs()) {
      Elem const x    = img.embedding[p.first];
      Elem const y    = img.embedding[p.second];
      Elem const goal = A.join(x, y);
      std::optional<Elem> w;
      for (Elem c = 0; c < A.size() && !w; ++c) {
        if (t(A.join(c, A.neg(c))) == goal) {
          w = c;
        }
      }
      require(w.has_value(), "no w with tau(w v ~w) = tau(x) v tau(y)");
      Elem const inner = A.join(A.join(A.meet(*w, A.neg(*w)), A.neg(imp(x, t(y)))),
                                A.neg(imp(y, t(x))));
      Elem const z     = A.meet(inner, imp(y, t(x)));
      require(t(z) == x && t(A.neg(z)) == y,
              "the preimage formula misses " + pair_name(H, p) + " on " + A.name());
      wit.push_back({p.first, p.second, *w, z});
    }
    return Sendlewski{std::move(core.pair), iota,          std::move(core.filter),
                      std::move(T),         std::move(m), std::move(wit)};
  }

  ////////////////////////////////////////////////////////////////////////
  // INCA
  ////////////////////////////////////////////////////////////////////////

  Verdict inca_check(NCAPair const& P) {
    Algebra const& A = P.algebra();
    if (!A.has_bottom()) {
      throw PreconditionError(A.name() + " has no designated bottom");
    }
    if (!structural_profile(A).commutative) {
      throw PreconditionError(A.name() + " is not commutative");
    }
    Verdict         v{"inca", {}};
    UnaryMap const& t   = P.tau();
    Elem const      bot = A.bottom();
    for (Elem x = 0; x < A.size(); ++x) {
      if (t(A.ldiv(t(A.ldiv(t(x), bot)), bot)) != t(x)) {
        v.fail("IT1", {x});
      }
    }
    return v;
  }

  Inca inca_isomorphism(NCAPair const& P) {
    Verdict const v = inca_check(P);
    if (!v.holds()) {
      throw PreconditionError("IT1 fails at " + P.algebra().element_name(v.first("IT1")->elements.at(0)));
    }
    Algebra const&      A   = P.algebra();
    ImageAlgebra const& img = P.image();
    UnaryMap const&     t   = P.tau();
    Elem const          bot = A.bottom();
    Algebra const&      H   = img.algebra;
    auto notau = [&](Elem x) { return t(A.ldiv(t(x), bot)); };  // in A
    std::vector<Elem> neg(H.size());
    for (Elem a = 0; a < H.size(); ++a) {
      neg[a] = img.of(notau(img.embedding[a]));
    }
    Algebra L = [&] {
      try {
        return H.with_involution(neg).with_bottom(img.of(t(bot)));
      } catch (ValidationError const& e) {
        throw InternalError(std::string("L_A is not involutive: ") + e.what());
      }
    }();
    Elem const iota = img.of(P.iota());
    Elem const zero = img.of(t(bot));
    Subset     F1(L.name(), L.size()), F2 = F1, F3 = F1;
    for (Elem x = 0; x < A.size(); ++x) {
      F1.insert(oplus(L, img.of(t(x)), img.of(t(A.neg(x)))));
      if (img.of(t(x)) == zero) {
        F2.insert(img.of(t(A.neg(x))));
      }
      F3.insert(img.of(t(A.ldiv(notau(x), A.neg(x)))));
    }
    require(F1 == F2 && F1 == F3, "the descriptions of F_A differ on " + A.name());
    require(is_lattice_filter(L, F1), "F_A is not a lattice filter of L_A");
    require(F1.contains(oplus(L, L.unit(), iota)), "F_A does not contain 1 (+) i");
    TwistAlgebra T = [&] {
      try {
        return inca_twist(L, iota, F1);
      } catch (PreconditionError const& e) {
        throw InternalError(e.what());
      }
    }();
    Phi const f = phi(P);
    Morphism  m{A.name(), T.algebra().name(), {}, Signature::involutive_rl()};
    for (Elem x = 0; x < A.size(); ++x) {
      auto k = T.find(f.target.pair(f.map(x)));
      require(k.has_value(), "phi(" + A.element_name(x) + ") is outside Tw(L_A, i, F_A)");
      m.table.push_back(*k);
    }
    require_morphism(A, T.algebra(), m, "phi onto Tw(L_A, i, F_A)");
    require(m.injective() && m.surjective(T.algebra().size()),
            "phi is not a bijection onto Tw(L_A, i, F_A)");

    std::vector<SurjectivityWitness> wit;
    for (Pair p : T.pairs()) {
      Elem const x    = img.embedding[p.first];
      Elem const y    = img.embedding[p.second];
      Elem const goal = img.embedding[oplus(L, p.first, p.second)];
      std::optional<Elem> w;
      for (Elem c = 0; c < A.size() && !w; ++c) {
        if (img.of(t(c)) == zero && t(A.neg(c)) == goal) {
          w = c;
        }
      }
      require(w.has_value(), "no w with tau(w) = 0 and tau(~w) = tau(x) (+) tau(y)");
      Elem const z = A.meet(A.ldiv(notau(x), *w), A.neg(t(y)));
      require(t(z) == x && t(A.neg(z)) == y,
              "the preimage formula misses " + pair_name(L, p) + " on " + A.name());
      wit.push_back({p.first, p.second, *w, z});
    }
    return Inca{std::move(L), iota, std::move(F1), std::move(T), std::move(m), std::move(wit)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  Lifted transport_morphism(BaseTriple const& from, BaseTriple const& to, Morphism const& f) {
    Morphism base = f;
    base.signature = Signature::brouwerian();
    Verdict const v = check_morphism(from.H, to.H, base);
    if (!v.holds()) {
      throw PreconditionError("not a Brouwerian morphism (" + first_axiom(v) + ")");
    }
    if (f(from.iota) != to.iota) {
      throw PreconditionError("the morphism does not send iota to iota");
    }
    for (Elem a : from.filter.elements()) {
      if (!to.filter.contains(f(a))) {
        throw PreconditionError("the morphism sends " + from.H.element_name(a)
                                + " outside the target filter");
      }
    }
    TwistAlgebra S = sendlewski_twist(from.H, from.iota, from.filter);
    TwistAlgebra T = sendlewski_twist(to.H, to.iota, to.filter);
    Morphism     m{S.algebra().name(), T.algebra().name(), {}, Signature::involutive_rl()};
    for (Pair p : S.pairs()) {
      auto k = T.find({f(p.first), f(p.second)});
      require(k.has_value(), "the lifted map leaves the target twist");
      m.table.push_back(*k);
    }
    require_morphism(S.algebra(), T.algebra(), m, "the lifted map");
    return Lifted{std::move(S), std::move(T), std::move(m)};
  }

  Morphism restrict_morphism(Algebra const& A1, Algebra const& A2, Morphism const& g) {
    Morphism full  = g;
    full.signature = Signature::involutive_rl();
    Verdict const v = check_morphism(A1, A2, full);
    if (!v.holds()) {
      throw PreconditionError("not a morphism of involutive residuated lattices ("
                              + first_axiom(v) + ")");
    }
    NtCore const        c1 = nt_core(A1);
    NtCore const        c2 = nt_core(A2);
    ImageAlgebra const& i1 = c1.pair.image();
    ImageAlgebra const& i2 = c2.pair.image();
    Morphism f{i1.algebra.name(), i2.algebra.name(), {}, Signature::brouwerian()};
    for (Elem a = 0; a < i1.algebra.size(); ++a) {
      Elem const y = g(i1.embedding[a]);
      require(i2.index.at(y) >= 0, "the morphism leaves H_A");
      f.table.push_back(i2.of(y));
    }
    require_morphism(i1.algebra, i2.algebra, f, "the restriction");
    require(f(i1.of(c1.pair.iota())) == i2.of(c2.pair.iota()),
            "the restriction does not preserve iota");
    for (Elem a : c1.filter.elements()) {
      require(c2.filter.contains(f(a)), "the restriction does not preserve the filter");
    }
    return f;
  }

}  // namespace twistlab
