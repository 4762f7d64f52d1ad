#include "twistlab/conuclei.hpp"

#include <algorithm>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

  namespace {

    void check_map(Algebra const& A, UnaryMap const& d) {
      if (d.table.size() != A.size()) {
        throw MalformedInput("unary map has " + std::to_string(d.table.size())
                             + " entries, algebra has " + std::to_string(A.size()));
      }
      for (Elem v : d.table) {
        if (v >= A.size()) {
          throw MalformedInput("unary map entry out of range");
        }
      }
    }

    // C6 and C7 on a map already known to satisfy C1-C4.
    void verify_derived(Algebra const& A, UnaryMap const& d) {
      for (Elem x = 0; x < A.size(); ++x) {
        for (Elem y = 0; y < A.size(); ++y) {
          bool ok = d(A.meet(x, y)) == d(A.meet(d(x), d(y)))
                    && d(A.ldiv(d(x), y)) == d(A.ldiv(d(x), d(y)))
                    && d(A.rdiv(y, d(x))) == d(A.rdiv(d(y), d(x)));
          if (!ok) {
            std::ostringstream os;
            os << "weak conucleus on '" << A.name() << "' violates a derived identity at (" << x
               << ", " << y << ")";
            throw InternalError(os.str());
          }
        }
      }
    }

  }  // namespace

  UnaryMap identity_map(Algebra const& A) {
    UnaryMap d{A.name(), {}};
    for (Elem x = 0; x < A.size(); ++x) {
      d.table.push_back(x);
    }
    return d;
  }

  Verdict is_weak_conucleus(Algebra const& A, UnaryMap const& d) {
    check_map(A, d);
    Verdict v{"weak-conucleus", {}};
    std::size_t const n = A.size();
    for (Elem x = 0; x < n; ++x) {
      if (!A.leq(d(x), x)) {
        v.fail("C1", {x});
      }
      if (d(d(x)) != d(x)) {
        v.fail("C2", {x});
      }
      for (Elem y = 0; y < n; ++y) {
        if (A.leq(x, y) && !A.leq(d(x), d(y))) {
          v.fail("C3", {x, y});
        }
        if (!A.leq(A.prod(d(x), d(y)), d(A.prod(x, y)))) {
          v.fail("C4", {x, y});
        }
      }
    }
    if (v.holds()) {
      verify_derived(A, d);
    }
    return v;
  }

  Verdict is_conucleus(Algebra const& A, UnaryMap const& d) {
    Verdict v = is_weak_conucleus(A, d);
    v.name    = "conucleus";
    Elem const de = d(A.unit());
    for (Elem x = 0; x < A.size(); ++x) {
      if (A.prod(de, d(x)) != d(x) || A.prod(d(x), de) != d(x)) {
        v.fail("C5", {x});
      }
    }
    return v;
  }

  Verdict is_nelson_conucleus(Algebra const& A, UnaryMap const& t) {
    Verdict v = is_conucleus(A, t);
    v.name    = "nelson-conucleus";
    bool const conucleus = v.holds();
    std::size_t const n = A.size();
    bool t4 = true;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (t(A.join(x, y)) != A.join(t(x), t(y))) {
          v.fail("T1", {x, y});
        }
        if (t(A.prod(x, y)) != A.prod(t(x), t(y))) {
          v.fail("T2", {x, y});
        }
        Elem const rhs = A.join(A.prod(t(x), y), A.prod(x, t(y)));
        if (!A.leq(A.prod(x, y), rhs)) {
          v.fail("T3", {x, y});
        }
        t4 = t4 && A.prod(x, y) == rhs;
      }
    }
    if (!conucleus) {
      return v;
    }
    bool const t1t2 = !v.failed("T1") && !v.failed("T2");
    if (t1t2 && t4 != !v.failed("T3")) {
      throw InternalError("T3 and its equality form disagree on '" + A.name() + "'");
    }
    if (A.involutive()) {
      // the division identities are equivalent to T4 for any conucleus
      bool t5 = true;
      for (Elem x = 0; x < n && t5; ++x) {
        for (Elem y = 0; y < n && t5; ++y) {
          Elem const nx = A.neg(x), ny = A.neg(y);
          t5 = A.ldiv(x, y) == A.meet(A.ldiv(t(x), y), A.rdiv(nx, t(ny)))
               && A.ldiv(x, y) == A.meet(A.ldiv(t(x), y), A.ldiv(x, A.neg(t(ny))))
               && A.rdiv(y, x) == A.meet(A.rdiv(y, t(x)), A.ldiv(t(ny), nx))
               && A.rdiv(y, x) == A.meet(A.rdiv(y, t(x)), A.rdiv(A.neg(t(ny)), x));
        }
      }
      if (t5 != t4) {
        throw InternalError("division identities and T4 disagree on '" + A.name() + "'");
      }
    }
    if (!v.holds()) {
      return v;
    }
    if (t(A.unit()) != A.unit()) {
      throw InternalError("Nelson conucleus does not fix the unit on '" + A.name() + "'");
    }
    if (A.involutive()) {
      Elem const i = t(A.neg(A.unit()));
      for (Elem x = 0; x < n; ++x) {
        if (t(x) == x && t(A.ldiv(x, i)) != t(A.rdiv(i, x))) {
          throw InternalError("tau(~e) is not cyclic in the image on '" + A.name() + "'");
        }
      }
    }
    return v;
  }

  Elem ImageAlgebra::of(Elem parent_elem) const {
    int const i = index.at(parent_elem);
    if (i < 0) {
      throw PreconditionError("element is not in the conucleus image");
    }
    return static_cast<Elem>(i);
  }

  ImageAlgebra conucleus_image(Algebra const& A, UnaryMap const& d) {
    Verdict const v = is_conucleus(A, d);
    if (!v.holds()) {
      throw PreconditionError("map is not a conucleus on '" + A.name() + "' ("
                              + v.witnesses.front().axiom + ")");
    }
    std::vector<Elem> emb;
    std::vector<int>  idx(A.size(), -1);
    for (Elem x = 0; x < A.size(); ++x) {
      if (d(x) == x) {
        idx[x] = static_cast<int>(emb.size());
        emb.push_back(x);
      }
    }
    std::size_t const m = emb.size();
    RawAlgebra        raw;
    raw.name = A.name() + "_img";
    raw.size = m;
    raw.join.assign(m, std::vector<Elem>(m));
    raw.meet = raw.prod = raw.join;
    raw.ldiv = raw.join;
    raw.rdiv = raw.join;
    auto at = [&](Elem parent, char const* what) -> Elem {
      if (idx[parent] < 0) {
        throw InternalError(std::string("conucleus image is not closed under ") + what);
      }
      return static_cast<Elem>(idx[parent]);
    };
    for (Elem i = 0; i < m; ++i) {
      for (Elem j = 0; j < m; ++j) {
        Elem const x = emb[i], y = emb[j];
        raw.join[i][j]    = at(A.join(x, y), "join");
        raw.prod[i][j]    = at(A.prod(x, y), "product");
        raw.meet[i][j]    = at(d(A.meet(x, y)), "meet");
        (*raw.ldiv)[i][j] = at(d(A.ldiv(x, y)), "left division");
        (*raw.rdiv)[i][j] = at(d(A.rdiv(x, y)), "right division");
      }
    }
    raw.unit = at(d(A.unit()), "unit");
    if (A.has_bottom()) {
      raw.bottom = at(d(A.bottom()), "bottom");
    }
    for (Elem x : emb) {
      raw.names.push_back(A.element_name(x));
    }
    try {
      return ImageAlgebra{Algebra::certify(std::move(raw)), std::move(emb), std::move(idx)};
    } catch (ValidationError const& e) {
      throw InternalError(std::string("conucleus image is not a residuated lattice: ") + e.what());
    }
  }

  Verdict is_positive_idempotent(Algebra const& A, Elem p) {
    Verdict v{"positive-idempotent", {}};
    if (A.prod(p, p) != p) {
      v.fail("idempotent", {p});
    }
    for (Elem x = 0; x < A.size(); ++x) {
      if (!A.leq(A.ldiv(p, x), x)) {
        v.fail("ldiv-decreasing", {x});
      }
      if (!A.leq(A.rdiv(x, p), x)) {
        v.fail("rdiv-decreasing", {x});
      }
      if (!A.leq(x, A.prod(p, x))) {
        v.fail("left-increasing", {x});
      }
      if (!A.leq(x, A.prod(x, p))) {
        v.fail("right-increasing", {x});
      }
    }
    return v;
  }

  UnaryMap double_division_map(Algebra const& A, Elem p) {
    if (p >= A.size()) {
      throw MalformedInput("element out of range");
    }
    Verdict const v = is_positive_idempotent(A, p);
    if (!v.holds()) {
      throw PreconditionError("element " + A.element_name(p) + " is not a positive idempotent ("
                              + v.witnesses.front().axiom + ")");
    }
    UnaryMap d{A.name(), {}};
    for (Elem x = 0; x < A.size(); ++x) {
      d.table.push_back(A.ldiv(p, A.rdiv(x, p)));
    }
    for (Elem x = 0; x < A.size(); ++x) {
      bool const fixed = d(x) == x;
      bool const local = A.prod(x, p) == x && A.prod(p, x) == x;
      if (fixed != local) {
        throw InternalError("fixed points of p\\x/p differ from {a : ap = a = pa} at "
                            + A.element_name(x));
      }
    }
    return d;
  }

  UnaryMap nelson_term_tau(Algebra const& A) {
    UnaryMap t{A.name(), {}};
    for (Elem x = 0; x < A.size(); ++x) {
      Elem const xe = A.meet(x, A.unit());
      t.table.push_back(A.prod(xe, xe));
    }
    return t;
  }

  UnaryMap kalman_term_tau(Algebra const& A) {
    UnaryMap t{A.name(), {}};
    for (Elem x = 0; x < A.size(); ++x) {
      t.table.push_back(A.meet(x, A.unit()));
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration of Nelson conuclei
  ////////////////////////////////////////////////////////////////////////

  namespace {

    constexpr Elem UNSET = static_cast<Elem>(-1);

    class NelsonSearch {
     public:
      explicit NelsonSearch(Algebra const& A) : _A(A), _n(A.size()) {}

      std::vector<UnaryMap> run() {
        std::vector<Elem> t(_n, UNSET);
        if (assign(t, _A.unit(), _A.unit())) {
          branch(t);
        }
        std::sort(_out.begin(), _out.end());
        return std::move(_out);
      }

     private:
      // Sets t[x] = v and propagates. Returns false on contradiction.
      bool assign(std::vector<Elem>& t, Elem x, Elem v) {
        std::vector<std::pair<Elem, Elem>> queue{{x, v}};
        while (!queue.empty()) {
          auto [a, b] = queue.back();
          queue.pop_back();
          if (t[a] != UNSET) {
            if (t[a] != b) {
              return false;
            }
            continue;
          }
          if (!_A.leq(b, a)) {
            return false;
          }
          t[a] = b;
          queue.emplace_back(b, b);
          for (Elem y = 0; y < _n; ++y) {
            if (t[y] == UNSET) {
              continue;
            }
            if ((_A.leq(a, y) && !_A.leq(t[a], t[y])) || (_A.leq(y, a) && !_A.leq(t[y], t[a]))) {
              return false;
            }
            queue.emplace_back(_A.join(a, y), _A.join(t[a], t[y]));
            queue.emplace_back(_A.prod(a, y), _A.prod(t[a], t[y]));
            queue.emplace_back(_A.prod(y, a), _A.prod(t[y], t[a]));
            if (!t3(t, a, y) || !t3(t, y, a)) {
              return false;
            }
          }
        }
        return true;
      }

      bool t3(std::vector<Elem> const& t, Elem x, Elem y) const {
        return _A.leq(_A.prod(x, y), _A.join(_A.prod(t[x], y), _A.prod(x, t[y])));
      }

      void branch(std::vector<Elem> const& t) {
        Elem        best = UNSET;
        std::size_t best_count = _n + 1;
        for (Elem x = 0; x < _n; ++x) {
          if (t[x] != UNSET) {
            continue;
          }
          std::size_t c = 0;
          for (Elem v = 0; v < _n; ++v) {
            c += _A.leq(v, x) ? 1 : 0;
          }
          if (c < best_count) {
            best       = x;
            best_count = c;
          }
        }
        if (best == UNSET) {
          UnaryMap m{_A.name(), t};
          if (!is_nelson_conucleus(_A, m).holds()) {
            throw InternalError("conucleus search produced an invalid map on '" + _A.name() + "'");
          }
          _out.push_back(std::move(m));
          return;
        }
        for (Elem v = 0; v < _n; ++v) {
          if (!_A.leq(v, best)) {
            continue;
          }
          std::vector<Elem> next = t;
          if (assign(next, best, v)) {
            branch(next);
          }
        }
      }

      Algebra const&        _A;
      std::size_t           _n;
      std::vector<UnaryMap> _out;
    };

  }  // namespace

  std::vector<UnaryMap> enumerate_nelson_conuclei(Algebra const& A, std::size_t bound) {
    if (!A.involutive() || !A.has_unit()) {
      throw PreconditionError("Nelson conucleus enumeration needs an involutive residuated lattice");
    }
    if (A.size() > bound) {
      throw PreconditionError("algebra has " + std::to_string(A.size())
                              + " elements, above the enumeration bound "
                              + std::to_string(bound));
    }
    return NelsonSearch(A).run();
  }

  NCAPair NCAPair::make(Algebra A, UnaryMap tau) {
    if (!A.involutive() || !A.has_unit()) {
      throw PreconditionError("a Nelson conucleus algebra needs an involutive residuated lattice");
    }
    Verdict const v = is_nelson_conucleus(A, tau);
    if (!v.holds()) {
      auto const& w = v.witnesses.front();
      throw PreconditionError("map is not a Nelson conucleus on '" + A.name() + "' (" + w.axiom
                              + ")");
    }
    tau.parent       = A.name();
    ImageAlgebra img = conucleus_image(A, tau);
    return NCAPair(std::move(A), std::move(tau), std::move(img));
  }

}  // namespace twistlab
