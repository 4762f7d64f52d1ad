#include "twistlab/varieties.hpp"

#include "twistlab/errors.hpp"
#include "twistlab/search.hpp"

namespace twistlab {

  namespace {

    bool commutative(Algebra const& A) {
      for (Elem x = 0; x < A.size(); ++x) {
        for (Elem y = 0; y < x; ++y) {
          if (A.prod(x, y) != A.prod(y, x)) {
            return false;
          }
        }
      }
      return true;
    }

    void require_commutative(Algebra const& A, Verdict& v) {
      for (Elem x = 0; x < A.size(); ++x) {
        for (Elem y = 0; y < x; ++y) {
          if (A.prod(x, y) != A.prod(y, x)) {
            v.fail("commutative", {x, y});
            return;
          }
        }
      }
    }

    void require_distributive(Algebra const& A, Verdict& v) {
      for (Elem x = 0; x < A.size(); ++x) {
        for (Elem y = 0; y < A.size(); ++y) {
          for (Elem z = 0; z < A.size(); ++z) {
            if (A.meet(x, A.join(y, z)) != A.join(A.meet(x, y), A.meet(x, z))) {
              v.fail("distributive", {x, y, z});
              return;
            }
          }
        }
      }
    }

    Elem sq(Algebra const& A, Elem x) {
      return A.prod(x, x);
    }

    // (x /\ e)^2
    Elem tn(Algebra const& A, Elem x) {
      return sq(A, A.meet(x, A.unit()));
    }

  }  // namespace

  Verdict is_kalman(Algebra const& A) {
    if (!commutative(A)) {
      throw PreconditionError("Kalman residuated lattices are commutative; " + A.name()
                              + " is not");
    }
    Verdict     v{"kalman", {}};
    Elem const  e   = A.unit();
    auto        imp = [&](Elem x, Elem y) { return A.ldiv(x, y); };
    auto        neg = [&](Elem x) { return imp(x, e); };
    std::size_t n   = A.size();
    for (Elem x = 0; x < n; ++x) {
      if (neg(neg(x)) != x) {
        v.fail("K1", {x});
      }
    }
    bool const k1 = v.holds();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (A.meet(A.prod(x, y), e) != A.prod(A.meet(x, e), A.meet(y, e))) {
          v.fail("K2", {x, y});
        }
        Elem const lhs_a = A.meet(imp(A.meet(x, e), y), imp(x, A.join(y, e)));
        Elem const lhs_b = A.meet(imp(A.meet(x, e), y), imp(A.meet(neg(y), e), neg(x)));
        if (lhs_a != imp(x, y)) {
          v.fail("K3", {x, y});
        }
        if (lhs_b != imp(x, y)) {
          v.fail("K3'", {x, y});
        }
        if (k1 && lhs_a != lhs_b) {
          throw InternalError("the two forms of K3 disagree on " + A.name()
                              + " although K1 holds");
        }
        if (A.meet(e, A.join(x, y)) != A.join(A.meet(e, x), A.meet(e, y))) {
          v.fail("K4", {x, y});
        }
        if (A.meet(x, A.join(y, e)) != A.join(A.meet(x, y), A.meet(x, e))) {
          v.fail("K5", {x, y});
        }
      }
    }
    return v;
  }

  Verdict is_nelson_rl(Algebra const& A) {
    if (!A.has_bottom()) {
      throw PreconditionError("Nelson residuated lattices need a designated bottom; "
                              + A.name() + " has none");
    }
    Verdict v{"nelson", {}};
    require_commutative(A, v);
    if (A.unit() != A.greatest()) {
      v.fail("integral", {A.unit()});
    }
    Elem const bot = A.bottom();
    auto       imp = [&](Elem x, Elem y) { return A.ldiv(x, y); };
    auto       neg = [&](Elem x) { return imp(x, bot); };
    for (Elem x = 0; x < A.size(); ++x) {
      if (neg(neg(x)) != x) {
        v.fail("NRL1", {x});
      }
      for (Elem y = 0; y < A.size(); ++y) {
        Elem const lhs = A.meet(imp(sq(A, x), y), imp(sq(A, neg(y)), neg(x)));
        if (lhs != imp(x, y)) {
          v.fail("NRL2", {x, y});
        }
      }
    }
    return v;
  }

  Verdict is_npc(Algebra const& A) {
    Verdict v{"npc", {}};
    require_commutative(A, v);
    require_distributive(A, v);
    Elem const e   = A.unit();
    auto       imp = [&](Elem x, Elem y) { return A.ldiv(x, y); };
    auto       neg = [&](Elem x) { return imp(x, e); };
    Elem const ne  = A.involutive() ? A.neg(e) : neg(e);
    if (ne != e) {
      v.fail("odd", {e, ne});
    }
    for (Elem x = 0; x < A.size(); ++x) {
      if (neg(neg(x)) != x) {
        v.fail("NPc1", {x});
      }
      Elem const xe = A.meet(x, e);
      if (sq(A, xe) != xe) {
        v.fail("NPc3", {x});
      }
      for (Elem y = 0; y < A.size(); ++y) {
        if (A.meet(A.prod(x, y), e) != A.prod(xe, A.meet(y, e))) {
          v.fail("NPc2", {x, y});
        }
        Elem const lhs = A.meet(imp(xe, y), imp(x, A.join(y, e)));
        if (lhs != imp(x, y)) {
          v.fail("NPc4", {x, y});
        }
        Elem const lhs_b = A.meet(imp(xe, y), imp(A.meet(neg(y), e), neg(x)));
        if (lhs_b != imp(x, y)) {
          v.fail("NPc4'", {x, y});
        }
      }
    }
    return v;
  }

  Verdict is_nt(Algebra const& A) {
    Verdict v{"nt", {}};
    require_commutative(A, v);
    require_distributive(A, v);
    if (!A.involutive()) {
      v.fail("involutive", {});
    }
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        Elem const xy = A.prod(x, y);
        if (xy != A.join(A.prod(tn(A, x), y), A.prod(x, tn(A, y)))) {
          v.fail("N1", {x, y});
        }
        if (tn(A, xy) != A.prod(tn(A, x), tn(A, y))) {
          v.fail("N2", {x, y});
        }
      }
    }
    return v;
  }

  Verdict is_nt0(Algebra const& A) {
    Verdict v = is_nt(A);
    v.name    = "nt0";
    if (!A.involutive()) {
      return v;
    }
    Elem const e  = A.unit();
    Elem const ne = A.neg(e);
    for (Elem x = 0; x < A.size(); ++x) {
      if (!A.leq(e, A.join(ne, A.ldiv(ne, x)))) {
        v.fail("N3", {x});
      }
    }
    return v;
  }

  Verdict is_brouwerian(Algebra const& A) {
    Verdict v{"brouwerian", {}};
    if (!A.has_unit() || A.unit() != A.greatest()) {
      v.fail("integral", {});
    }
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        if (A.prod(x, y) != A.meet(x, y)) {
          v.fail("prod-is-meet", {x, y});
        }
      }
    }
    return v;
  }

  std::vector<std::string> variety_names() {
    return {"kalman", "nelson", "npc", "nt", "nt0", "brouwerian"};
  }

  Verdict check_variety(Algebra const& A, std::string const& variety) {
    if (variety == "kalman") {
      return is_kalman(A);
    }
    if (variety == "nelson") {
      return is_nelson_rl(A);
    }
    if (variety == "npc") {
      return is_npc(A);
    }
    if (variety == "nt") {
      return is_nt(A);
    }
    if (variety == "nt0") {
      return is_nt0(A);
    }
    if (variety == "brouwerian") {
      return is_brouwerian(A);
    }
    throw PreconditionError("unknown variety: " + variety);
  }

  ////////////////////////////////////////////////////////////////////////
  // Filters
  ////////////////////////////////////////////////////////////////////////

  bool is_lattice_filter(Algebra const& H, Subset const& F) {
    if (F.universe_size() != H.size() || F.count() == 0) {
      return false;
    }
    for (Elem x : F.elements()) {
      for (Elem y = 0; y < H.size(); ++y) {
        if (H.leq(x, y) && !F.contains(y)) {
          return false;
        }
        if (F.contains(y) && !F.contains(H.meet(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  Subset dense_elements(Algebra const& H) {
    if (!is_brouwerian(H).holds()) {
      throw PreconditionError(H.name() + " is not a Brouwerian algebra");
    }
    Subset D(H.name(), H.size());
    for (Elem x = 0; x < H.size(); ++x) {
      for (Elem y = 0; y < H.size(); ++y) {
        D.insert(H.join(x, H.ldiv(x, y)));
      }
    }
    return D;
  }

  bool is_boolean_filter(Algebra const& H, Subset const& F) {
    return is_lattice_filter(H, F) && dense_elements(H).subset_of(F);
  }

  Subset principal_filter(Algebra const& H, Elem a) {
    Subset F(H.name(), H.size());
    for (Elem y = 0; y < H.size(); ++y) {
      if (H.leq(a, y)) {
        F.insert(y);
      }
    }
    return F;
  }

  std::vector<Subset> lattice_filters(Algebra const& H) {
    std::vector<Subset> out;
    for (Elem a = 0; a < H.size(); ++a) {
      out.push_back(principal_filter(H, a));
    }
    return out;
  }

  std::vector<Subset> boolean_filters(Algebra const& H) {
    Subset const        D = dense_elements(H);
    std::vector<Subset> out;
    for (auto& F : lattice_filters(H)) {
      if (D.subset_of(F)) {
        out.push_back(std::move(F));
      }
    }
    return out;
  }

  ExperimentReport check_k5_redundancy(std::size_t size_bound) {
    ExperimentReport r;
    r.size_bound = size_bound;
    for (std::size_t n = 1; n <= size_bound; ++n) {
      SearchSpec spec;
      spec.size        = n;
      spec.commutative = true;
      spec.odd         = true;
      spec.bound       = std::max<std::size_t>(spec.bound, size_bound);
      enumerate_residuated_lattices(spec, [&](Algebra const& A) {
        ++r.examined;
        Verdict const v = is_kalman(A);
        bool const    k1k4 = !v.failed("K1") && !v.failed("K2") && !v.failed("K3")
                          && !v.failed("K3'") && !v.failed("K4");
        if (k1k4) {
          ++r.satisfying_k1k4;
          if (v.failed("K5")) {
            r.counterexamples.push_back(A);
          }
        }
        return true;
      });
    }
    return r;
  }

}  // namespace twistlab
