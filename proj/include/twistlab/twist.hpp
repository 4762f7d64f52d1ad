#pragma once

// Twist structures over a residuated lattice L: the full twist on L x L,
// Tw(L, i), and the filtered subalgebras used for Brouwerian and
// involutive bases.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/conuclei.hpp"

namespace twistlab {

  using Pair = std::pair<Elem, Elem>;

  // A set of pairs over a base algebra, closed under the twist operations,
  // together with the algebra it carries. Pairs are listed in lexicographic
  // order and element k of `algebra()` is `pairs()[k]`.
  class TwistAlgebra {
   public:
    Algebra const& algebra() const noexcept {
      return _algebra;
    }
    Algebra const& base() const noexcept {
      return _base;
    }
    // nullopt for the full twist
    std::optional<Elem> iota() const noexcept {
      return _iota;
    }
    std::vector<Pair> const& pairs() const noexcept {
      return _pairs;
    }
    Pair pair(Elem x) const {
      return _pairs.at(x);
    }
    std::optional<Elem> find(Pair p) const;
    Elem                at(Pair p) const;  // throws PreconditionError if absent
    bool                contains(Pair p) const {
      return find(p).has_value();
    }

   private:
    friend TwistAlgebra make_twist_algebra(Algebra const&,
                                           std::optional<Elem>,
                                           std::vector<Pair>,
                                           std::optional<Pair>,
                                           std::string);
    TwistAlgebra(Algebra alg, Algebra base, std::optional<Elem> iota, std::vector<Pair> pairs);

    Algebra             _algebra;
    Algebra             _base;
    std::optional<Elem> _iota;
    std::vector<Pair>   _pairs;
    std::vector<int>    _index;  // a * |L| + b -> element, or -1
  };

  // Builds the algebra on `pairs` (any order; sorted on return) with the
  // twist operations. Throws PreconditionError if the set is not closed.
  // The unit is the pair `unit` if given; the involution is always present;
  // the bottom is (bottom_L, top_L) when L has a bottom and that pair is in
  // the set.
  TwistAlgebra make_twist_algebra(Algebra const&      L,
                                  std::optional<Elem> iota,
                                  std::vector<Pair>   pairs,
                                  std::optional<Pair> unit,
                                  std::string         name);

  // L x L with unit (e, top).
  TwistAlgebra full_twist(Algebra const& L);

  // Tw(L, i) = {(a,b) : ab v ba <= i}, unit (e, i). Throws InternalError if it
  // disagrees with the double division image of the full twist at (e, i).
  TwistAlgebra twist(Algebra const& L, Elem iota);

  // M_i = {(a,b) : a = i/b /\ b\i and b = i/a /\ a\i}, as a subset of
  // twist(L, i).
  Subset maximal_set(Algebra const& L, Elem iota);

  // Tw(L, i) is a downset of L x L (componentwise), M_i consists of maximal
  // elements, and for cyclic i Tw(L, i) is the downset of M_i.
  Verdict check_downset(Algebra const& L, Elem iota);

  // (a,b) -> (a, i/a /\ a\i) on a twist algebra with a cyclic i. Throws
  // PreconditionError for the full twist or a non-cyclic i, and
  // InternalError if the map fails to be multiplicative, join preserving,
  // to satisfy tau(x)y v x tau(y) = xy, or to be a Nelson conucleus.
  UnaryMap tau_tw(TwistAlgebra const& T);

  // Subalgebra of Tw(L, i) containing every (a, a\i /\ i/a).
  Verdict is_twist_product(TwistAlgebra const& T);

  // {(a,b) in Tw(H, i) : a /\ b <= i, a v b in F} for Brouwerian H and a
  // Boolean filter F. Throws PreconditionError when either fails and
  // InternalError when the result is not a twist-product.
  TwistAlgebra sendlewski_twist(Algebra const& H, Elem iota, Subset const& F);

  // {(a,b) : ab <= i, a (+) b in F} for commutative involutive L and a lattice
  // filter F containing e (+) i.
  TwistAlgebra inca_twist(Algebra const& L, Elem iota, Subset const& F);

  std::string pair_name(Algebra const& L, Pair p);

}  // namespace twistlab
