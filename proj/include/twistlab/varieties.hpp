#pragma once

// Membership in the varieties of commutative residuated lattices that admit
// twist representations, and filters of Brouwerian algebras.

#include <cstddef>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

  // K1-K5 with ~x = x->e. Both forms of K3 are checked; if they disagree
  // while K1 holds, InternalError is thrown. Throws PreconditionError on
  // non-commutative input.
  Verdict is_kalman(Algebra const& A);

  // NRL1-NRL2 with !x = x->bottom. Throws PreconditionError if no bottom is
  // designated; non-commutativity and non-integrality are reported as
  // witnesses.
  Verdict is_nelson_rl(Algebra const& A);

  // NPc1-NPc4 with ~x = x->e. Failing preconditions (commutative, odd,
  // distributive) are reported as witnesses.
  Verdict is_npc(Algebra const& A);

  // N1-N2 on a commutative distributive involutive algebra; NT0 adds N3.
  // Failing preconditions are reported as witnesses.
  Verdict is_nt(Algebra const& A);
  Verdict is_nt0(Algebra const& A);

  // prod = meet and e is the top
  Verdict is_brouwerian(Algebra const& A);

  // Dispatches on "kalman", "nelson", "npc", "nt", "nt0", "brouwerian".
  Verdict check_variety(Algebra const& A, std::string const& variety);
  std::vector<std::string> variety_names();

  // Nonempty, upward closed and meet closed.
  bool is_lattice_filter(Algebra const& H, Subset const& F);

  // {x v (x->y)}; throws PreconditionError unless H is Brouwerian.
  Subset dense_elements(Algebra const& H);

  // Lattice filter containing every dense element.
  bool is_boolean_filter(Algebra const& H, Subset const& F);

  // All lattice filters, ordered by their least element's index. In a finite
  // lattice these are the principal upsets.
  std::vector<Subset> lattice_filters(Algebra const& H);
  std::vector<Subset> boolean_filters(Algebra const& H);

  Subset principal_filter(Algebra const& H, Elem a);

  struct ExperimentReport {
    std::size_t          size_bound      = 0;
    std::size_t          examined        = 0;  // commutative RLs with e dualizing
    std::size_t          satisfying_k1k4 = 0;
    std::vector<Algebra> counterexamples;      // K1-K4 hold, K5 fails
  };

  // Searches every commutative residuated lattice with at most `size_bound`
  // elements for one satisfying K1-K4 but not K5. K1 says e is dualizing, so
  // only those algebras are examined.
  ExperimentReport check_k5_redundancy(std::size_t size_bound);

}  // namespace twistlab
