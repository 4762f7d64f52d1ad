#pragma once

// Representation of Nelson conucleus algebras by twist-products, the
// Rasiowa-style presentation, and the Brouwerian and involutive base
// isomorphisms. Every constructor verifies its own output and throws
// InternalError when a verification that must succeed fails.

#include <cstddef>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/conuclei.hpp"
#include "twistlab/morphism.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

  // a -> (a, a\i) from L onto the tau_Tw image of Tw(L, i).
  struct Psi {
    TwistAlgebra twist;
    UnaryMap     tau;
    ImageAlgebra image;
    Morphism     map;  // L -> image.algebra
  };

  // Throws PreconditionError unless i is cyclic.
  Psi psi(Algebra const& L, Elem iota);

  // x -> (tau x, tau ~x) into Tw(A_tau, tau(~e)).
  struct Phi {
    TwistAlgebra target;
    UnaryMap     target_tau;
    Morphism     map;  // A -> target.algebra()
    bool         surjective = false;
  };

  Phi phi(NCAPair const& P);

  // Both triangle identities: on A_tau (psi^-1 after the restriction of phi)
  // and on Tw(L, i) (psi^-1 applied coordinatewise after phi).
  Verdict adjunction_identities(NCAPair const& P);
  Verdict adjunction_identities(Algebra const& L, Elem iota);

  ////////////////////////////////////////////////////////////////////////
  // Rasiowa-type algebras
  ////////////////////////////////////////////////////////////////////////

  struct RasiowaStructure {
    std::string              name;
    std::size_t              size = 0;
    Matrix                   join;
    Matrix                   meet;
    Matrix                   prod;
    Matrix                   supset;  // supset[x][y] = x => y
    Matrix                   subset;  // subset[y][x] = y <= x
    std::vector<Elem>        invol;
    Elem                     unit = 0;
    std::vector<std::string> names;

    bool leq(Elem x, Elem y) const {
      return meet[x][y] == x;
    }
    // (x => y) => (x => y) <= x => y
    bool preceq(Elem x, Elem y) const;
    bool operator==(RasiowaStructure const& other) const;
  };

  // x => y = tau(x)\y and y <= x = y/tau(x). Throws InternalError if the
  // result fails R1-R6.
  RasiowaStructure rasiowa_structure(NCAPair const& P);

  // R1-R6 with witnesses. Throws MalformedInput on inconsistent dimensions.
  Verdict check_rasiowa(RasiowaStructure const& R);

  struct RasiowaQuotient {
    Algebra                        algebra;
    std::vector<Elem>              class_of;  // element -> class
    std::vector<std::vector<Elem>> classes;   // ordered by least member
  };

  // The quotient by theta with divisions [x]\[y] = [x => y] and
  // [y]/[x] = [y <= x]. Throws PreconditionError if theta is not a
  // congruence or the quotient is not a residuated lattice.
  RasiowaQuotient rasiowa_quotient(RasiowaStructure const& R);

  struct RasiowaRecovery {
    NCAPair         pair;
    RasiowaQuotient quotient;
    TwistAlgebra    target;     // Tw(A/theta, [~e])
    Morphism        embedding;  // x -> ([x], [~x])
    bool            round_trip = false;
  };

  // x\y = ~(~y x), y/x = ~(x ~y), tau(x) = ~(x => ~e). Throws
  // PreconditionError if R fails R1-R6.
  RasiowaRecovery rasiowa_to_nca(RasiowaStructure const& R);

  ////////////////////////////////////////////////////////////////////////
  // Filtered twists
  ////////////////////////////////////////////////////////////////////////

  // One preimage found from the explicit formula: (a, b) = phi(z).
  struct SurjectivityWitness {
    Elem a = 0;  // elements of the base (image) algebra
    Elem b = 0;
    Elem w = 0;  // elements of A
    Elem z = 0;
  };

  struct Sendlewski {
    NCAPair                          pair;  // (A, (x /\ e)^2)
    Elem                             iota;  // in H_A
    Subset                           filter;
    TwistAlgebra                     target;  // Tw(H_A, i, F_A)
    Morphism                         map;
    std::vector<SurjectivityWitness> witnesses;
  };

  // F_A on H_A, from {tau(x v ~x)}, {tau(w) : ~w <= w} and
  // {tau(z) : tau(~z) <= tau(z)}. Throws PreconditionError if A is not NT.
  Subset sendlewski_filter(Algebra const& A);

  // Throws PreconditionError if A is not NT.
  Sendlewski sendlewski_isomorphism(Algebra const& A);

  // IT1: tau(tau(tau(x)->bottom)->bottom) = tau(x). Throws PreconditionError
  // unless A is commutative with a bottom.
  Verdict inca_check(NCAPair const& P);

  struct Inca {
    Algebra                          base;  // L_A: A_tau with ~a = tau(a -> bottom)
    Elem                             iota;
    Subset                           filter;
    TwistAlgebra                     target;  // Tw(L_A, i, F_A)
    Morphism                         map;
    std::vector<SurjectivityWitness> witnesses;
  };

  // Throws PreconditionError if IT1 fails.
  Inca inca_isomorphism(NCAPair const& P);

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  struct BaseTriple {
    Algebra H;
    Elem    iota;
    Subset  filter;
  };

  struct Lifted {
    TwistAlgebra source;
    TwistAlgebra target;
    Morphism     map;
  };

  // (a,b) -> (f a, f b) between Tw(H1, i1, F1) and Tw(H2, i2, F2). Throws
  // PreconditionError if f is not a Brouwerian morphism, f(i1) != i2, or
  // f(F1) is not inside F2.
  Lifted transport_morphism(BaseTriple const& from, BaseTriple const& to, Morphism const& f);

  // Restriction of a morphism of NT algebras to H_A1 -> H_A2, verified to be
  // a Brouwerian morphism preserving iota and mapping F_A1 into F_A2.
  Morphism restrict_morphism(Algebra const& A1, Algebra const& A2, Morphism const& g);

}  // namespace twistlab
