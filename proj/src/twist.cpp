#include "twistlab/twist.hpp"

#include <algorithm>

#include "twistlab/errors.hpp"
#include "twistlab/varieties.hpp"

namespace twistlab {

  std::string pair_name(Algebra const& L, Pair p) {
    return "(" + L.element_name(p.first) + "," + L.element_name(p.second) + ")";
  }

  namespace {

    // The twist operations on L x L.
    struct PairOps {
      Algebra const& L;

      Pair join(Pair x, Pair y) const {
        return {L.join(x.first, y.first), L.meet(x.second, y.second)};
      }
      Pair meet(Pair x, Pair y) const {
        return {L.meet(x.first, y.first), L.join(x.second, y.second)};
      }
      // (a,b)(c,d) = (ac, d/a /\ c\b)
      Pair prod(Pair x, Pair y) const {
        auto [a, b] = x;
        auto [c, d] = y;
        return {L.prod(a, c), L.meet(L.rdiv(d, a), L.ldiv(c, b))};
      }
      // (a,b)\(c,d) = (a\c /\ b/d, da)
      Pair ldiv(Pair x, Pair y) const {
        auto [a, b] = x;
        auto [c, d] = y;
        return {L.meet(L.ldiv(a, c), L.rdiv(b, d)), L.prod(d, a)};
      }
      // (c,d)/(a,b) = (c/a /\ d\b, ad)
      Pair rdiv(Pair y, Pair x) const {
        auto [a, b] = x;
        auto [c, d] = y;
        return {L.meet(L.rdiv(c, a), L.ldiv(d, b)), L.prod(a, d)};
      }
      Pair neg(Pair x) const {
        return {x.second, x.first};
      }
    };

    bool in_tw(Algebra const& L, Elem iota, Elem a, Elem b) {
      return L.leq(L.join(L.prod(a, b), L.prod(b, a)), iota);
    }

    Elem cyc(Algebra const& L, Elem iota, Elem a) {
      return L.meet(L.rdiv(iota, a), L.ldiv(a, iota));
    }

  }  // namespace

  TwistAlgebra::TwistAlgebra(Algebra alg, Algebra base, std::optional<Elem> iota,
                             std::vector<Pair> pairs)
      : _algebra(std::move(alg)),
        _base(std::move(base)),
        _iota(iota),
        _pairs(std::move(pairs)),
        _index(_base.size() * _base.size(), -1) {
    for (std::size_t k = 0; k < _pairs.size(); ++k) {
      _index[_pairs[k].first * _base.size() + _pairs[k].second] = static_cast<int>(k);
    }
  }

  std::optional<Elem> TwistAlgebra::find(Pair p) const {
    std::size_t const n = _base.size();
    if (p.first >= n || p.second >= n) {
      return std::nullopt;
    }
    int const k = _index[p.first * n + p.second];
    if (k < 0) {
      return std::nullopt;
    }
    return static_cast<Elem>(k);
  }

  Elem TwistAlgebra::at(Pair p) const {
    auto k = find(p);
    if (!k) {
      throw PreconditionError("pair " + pair_name(_base, p) + " is not in " + _algebra.name());
    }
    return *k;
  }

  TwistAlgebra make_twist_algebra(Algebra const&      L,
                                  std::optional<Elem> iota,
                                  std::vector<Pair>   pairs,
                                  std::optional<Pair> unit,
                                  std::string         name) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    if (pairs.empty()) {
      throw PreconditionError("a twist algebra needs at least one pair");
    }
    std::size_t const n = L.size();
    std::size_t const m = pairs.size();
    std::vector<int>  index(n * n, -1);
    for (std::size_t k = 0; k < m; ++k) {
      index[pairs[k].first * n + pairs[k].second] = static_cast<int>(k);
    }
    auto at = [&](Pair p, char const* what) -> Elem {
      int const k = index[p.first * n + p.second];
      if (k < 0) {
        throw PreconditionError(std::string("pair set of ") + name + " is not closed under "
                                + what + ": " + pair_name(L, p) + " is missing");
      }
      return static_cast<Elem>(k);
    };
    PairOps    ops{L};
    RawAlgebra raw;
    raw.name = std::move(name);
    raw.size = m;
    raw.join.assign(m, std::vector<Elem>(m));
    raw.meet = raw.prod = raw.join;
    raw.ldiv = raw.join;
    raw.rdiv = raw.join;
    raw.invol.emplace(m);
    for (Elem i = 0; i < m; ++i) {
      (*raw.invol)[i] = at(ops.neg(pairs[i]), "~");
      for (Elem j = 0; j < m; ++j) {
        raw.join[i][j]    = at(ops.join(pairs[i], pairs[j]), "join");
        raw.meet[i][j]    = at(ops.meet(pairs[i], pairs[j]), "meet");
        raw.prod[i][j]    = at(ops.prod(pairs[i], pairs[j]), "product");
        (*raw.ldiv)[i][j] = at(ops.ldiv(pairs[i], pairs[j]), "left division");
        (*raw.rdiv)[i][j] = at(ops.rdiv(pairs[i], pairs[j]), "right division");
      }
    }
    if (unit) {
      raw.unit = at(*unit, "the unit");
    }
    if (L.has_bottom()) {
      int const k = index[L.bottom() * n + L.greatest()];
      if (k >= 0) {
        raw.bottom = static_cast<Elem>(k);
      }
    }
    for (auto const& p : pairs) {
      raw.names.push_back(pair_name(L, p));
    }
    try {
      return TwistAlgebra(Algebra::certify(std::move(raw)), L, iota, std::move(pairs));
    } catch (ValidationError const& e) {
      throw InternalError(std::string("twist operations fail an axiom: ") + e.what());
    }
  }

  TwistAlgebra full_twist(Algebra const& L) {
    std::vector<Pair> pairs;
    for (Elem a = 0; a < L.size(); ++a) {
      for (Elem b = 0; b < L.size(); ++b) {
        pairs.emplace_back(a, b);
      }
    }
    std::optional<Pair> unit;
    if (L.has_unit()) {
      unit = Pair{L.unit(), L.greatest()};
    }
    return make_twist_algebra(L, std::nullopt, std::move(pairs), unit, "Tw(" + L.name() + ")");
  }

  TwistAlgebra twist(Algebra const& L, Elem iota) {
    if (iota >= L.size()) {
      throw MalformedInput("iota out of range");
    }
    std::vector<Pair> pairs;
    for (Elem a = 0; a < L.size(); ++a) {
      for (Elem b = 0; b < L.size(); ++b) {
        if (in_tw(L, iota, a, b)) {
          pairs.emplace_back(a, b);
        }
      }
    }
    TwistAlgebra T = make_twist_algebra(
        L, iota, pairs, Pair{L.unit(), iota},
        "Tw(" + L.name() + "," + L.element_name(iota) + ")");

    // The same algebra as the double division image of the full twist.
    TwistAlgebra const full = full_twist(L);
    Algebra const&     F    = full.algebra();
    UnaryMap const     d    = double_division_map(F, full.at({L.unit(), iota}));
    for (Elem x = 0; x < F.size(); ++x) {
      if ((d(x) == x) != T.contains(full.pair(x))) {
        throw InternalError("Tw(L,i) differs from the double division image at "
                            + pair_name(L, full.pair(x)));
      }
    }
    Algebra const& A = T.algebra();
    auto           up = [&](Elem k) { return full.at(T.pair(k)); };
    for (Elem x = 0; x < A.size(); ++x) {
      if (up(A.neg(x)) != F.neg(up(x))) {
        throw InternalError("Tw(L,i) involution differs from the full twist");
      }
      for (Elem y = 0; y < A.size(); ++y) {
        bool const same = up(A.join(x, y)) == F.join(up(x), up(y))
                          && up(A.meet(x, y)) == F.meet(up(x), up(y))
                          && up(A.prod(x, y)) == F.prod(up(x), up(y))
                          && up(A.ldiv(x, y)) == F.ldiv(up(x), up(y))
                          && up(A.rdiv(x, y)) == F.rdiv(up(x), up(y));
        if (!same) {
          throw InternalError("Tw(L,i) operations differ from the full twist");
        }
      }
    }
    return T;
  }

  Subset maximal_set(Algebra const& L, Elem iota) {
    TwistAlgebra const T = twist(L, iota);
    Subset             M(T.algebra().name(), T.algebra().size());
    for (Elem a = 0; a < L.size(); ++a) {
      for (Elem b = 0; b < L.size(); ++b) {
        if (a == cyc(L, iota, b) && b == cyc(L, iota, a)) {
          M.insert(T.at({a, b}));
        }
      }
    }
    return M;
  }

  Verdict check_downset(Algebra const& L, Elem iota) {
    Verdict            v{"downset", {}};
    TwistAlgebra const T = twist(L, iota);
    Subset const       M = maximal_set(L, iota);
    std::size_t const  n = L.size();
    auto below = [&](Pair p, Pair q) { return L.leq(p.first, q.first) && L.leq(p.second, q.second); };
    for (Pair p : T.pairs()) {
      for (Elem c = 0; c < n; ++c) {
        for (Elem d = 0; d < n; ++d) {
          if (below({c, d}, p) && !T.contains({c, d})) {
            v.fail("downset", {p.first, p.second, c, d});
          }
        }
      }
    }
    for (Elem m : M.elements()) {
      Pair const p = T.pair(m);
      for (Pair q : T.pairs()) {
        if (q != p && below(p, q)) {
          v.fail("maximal", {p.first, p.second, q.first, q.second});
        }
      }
    }
    if (is_cyclic_element(L, iota)) {
      for (Pair p : T.pairs()) {
        bool covered = false;
        for (Elem m : M.elements()) {
          covered = covered || below(p, T.pair(m));
        }
        if (!covered) {
          v.fail("generated-by-maximal", {p.first, p.second});
        }
      }
    }
    return v;
  }

  UnaryMap tau_tw(TwistAlgebra const& T) {
    if (!T.iota()) {
      throw PreconditionError("tau_Tw is defined on Tw(L,i), not on the full twist");
    }
    Algebra const& L    = T.base();
    Elem const     iota = *T.iota();
    if (!is_cyclic_element(L, iota)) {
      throw PreconditionError("tau_Tw needs a cyclic element; " + L.element_name(iota)
                              + " is not cyclic in " + L.name());
    }
    Algebra const& A = T.algebra();
    UnaryMap       t{A.name(), {}};
    for (Pair p : T.pairs()) {
      auto k = T.find({p.first, cyc(L, iota, p.first)});
      if (!k) {
        throw PreconditionError(A.name() + " does not contain the tau_Tw image of "
                                + pair_name(L, p));
      }
      t.table.push_back(*k);
    }
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        bool const ok = t(A.prod(x, y)) == A.prod(t(x), t(y))
                        && t(A.join(x, y)) == A.join(t(x), t(y))
                        && A.join(A.prod(t(x), y), A.prod(x, t(y))) == A.prod(x, y);
        if (!ok) {
          throw InternalError("tau_Tw fails a defining identity on " + A.name());
        }
      }
    }
    if (!is_nelson_conucleus(A, t).holds()) {
      throw InternalError("tau_Tw is not a Nelson conucleus on " + A.name());
    }
    return t;
  }

  Verdict is_twist_product(TwistAlgebra const& T) {
    Verdict v{"twist-product", {}};
    if (!T.iota()) {
      v.fail("iota-missing", {});
      return v;
    }
    Algebra const& L    = T.base();
    Elem const     iota = *T.iota();
    for (Pair p : T.pairs()) {
      if (!in_tw(L, iota, p.first, p.second)) {
        v.fail("outside-Tw", {p.first, p.second});
      }
    }
    for (Elem a = 0; a < L.size(); ++a) {
      if (!T.contains({a, cyc(L, iota, a)})) {
        v.fail("missing-tau-image", {a});
      }
    }
    if (!T.algebra().has_unit() || T.pair(T.algebra().unit()) != Pair{L.unit(), iota}) {
      v.fail("unit", {});
    }
    return v;
  }

  namespace {

    TwistAlgebra checked_subtwist(Algebra const&    L,
                                  Elem              iota,
                                  std::vector<Pair> pairs,
                                  std::string       name) {
    TwistAlgebra T = [&] {
      try {
        return make_twist_algebra(L, iota, std::move(pairs), Pair{L.unit(), iota}, name);
      } catch (PreconditionError const& e) {
        throw InternalError(e.what());
      }
    }();
    Verdict const v = is_twist_product(T);
    if (!v.holds()) {
      throw InternalError(name + " is not a twist-product (" + v.witnesses.front().axiom + ")");
    }
    return T;
  }

  }  // namespace

  TwistAlgebra sendlewski_twist(Algebra const& H, Elem iota, Subset const& F) {
    if (!is_brouwerian(H).holds()) {
      throw PreconditionError(H.name() + " is not a Brouwerian algebra");
    }
    if (F.universe_size() != H.size() || !is_boolean_filter(H, F)) {
      throw PreconditionError("the given subset is not a Boolean filter of " + H.name());
    }
    std::vector<Pair> pairs;
    for (Elem a = 0; a < H.size(); ++a) {
      for (Elem b = 0; b < H.size(); ++b) {
        if (H.leq(H.meet(a, b), iota) && F.contains(H.join(a, b))) {
          pairs.emplace_back(a, b);
        }
      }
    }
    return checked_subtwist(H, iota, std::move(pairs),
                            "Tw(" + H.name() + "," + H.element_name(iota) + ",F)");
  }

  TwistAlgebra inca_twist(Algebra const& L, Elem iota, Subset const& F) {
    if (!L.involutive() || !structural_profile(L).commutative) {
      throw PreconditionError(L.name() + " is not a commutative involutive residuated lattice");
    }
    if (F.universe_size() != L.size() || !is_lattice_filter(L, F)) {
      throw PreconditionError("the given subset is not a lattice filter of " + L.name());
    }
    if (!F.contains(oplus(L, L.unit(), iota))) {
      throw PreconditionError("the filter does not contain e (+) iota");
    }
    std::vector<Pair> pairs;
    for (Elem a = 0; a < L.size(); ++a) {
      for (Elem b = 0; b < L.size(); ++b) {
        if (L.leq(L.prod(a, b), iota) && F.contains(oplus(L, a, b))) {
          pairs.emplace_back(a, b);
        }
      }
    }
    return checked_subtwist(L, iota, std::move(pairs),
                            "Tw(" + L.name() + "," + L.element_name(iota) + ",F)");
  }

}  // namespace twistlab
