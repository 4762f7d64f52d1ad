#pragma once

// Small-model search: residuated lattices up to isomorphism, morphisms,
// canonical forms and subuniverses.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/morphism.hpp"

namespace twistlab {

  struct SearchSpec {
    std::size_t size         = 1;
    bool        commutative  = false;
    bool        integral     = false;
    bool        involutive   = false;
    bool        distributive = false;
    bool        bounded      = false;  // designate the least element as bottom
    bool        idempotent   = false;
    bool        odd          = false;  // implies involutive with ~e = e

    std::optional<std::size_t> limit;  // stop after this many results
    std::size_t                skip = 0;  // drop this many results first
    // false: emit every completion, including isomorphic copies on the same
    // lattice representative
    bool        canonical_only = true;
    std::size_t bound          = 6;
    unsigned    threads        = 1;
  };

  // Streams one algebra per isomorphism class to `sink`, which returns false
  // to stop early. Returns the number of algebras passed to `sink`. Throws
  // PreconditionError if spec.size exceeds spec.bound or is zero.
  //
  // With an involution the involution is part of the signature, so one
  // residuated lattice with two dualizing elements yields two results.
  std::size_t enumerate_residuated_lattices(SearchSpec const&                    spec,
                                            std::function<bool(Algebra const&)> sink);

  std::vector<Algebra> enumerate_all(SearchSpec const& spec);

  // Lattices on n elements up to isomorphism, as meet tables with 0 least
  // and n-1 greatest. Throws PreconditionError for n = 0.
  std::vector<Matrix> enumerate_lattices(std::size_t n);

  enum class MorphismKind { hom, embed, iso };

  // Every map A -> B preserving `sig` (and injective/bijective for embed/iso),
  // sorted by table.
  std::vector<Morphism> find_homomorphisms(Algebra const& A,
                                           Algebra const& B,
                                           Signature      sig,
                                           MorphismKind   kind  = MorphismKind::hom,
                                           std::size_t    limit = 0);

  // An isomorphism of the full signature (lattice, product, divisions, and
  // every constant present), if one exists.
  std::optional<Morphism> find_isomorphism(Algebra const& A, Algebra const& B);

  // Relabelling of A that depends only on its isomorphism type; names are
  // reset to indices.
  Algebra canonical_form(Algebra const& A);

  // A relabelled by `perm` (old element x becomes perm[x]).
  Algebra relabel(Algebra const& A, std::vector<Elem> const& perm);

  // Nonempty subuniverses closed under `sig` and containing its constants,
  // sorted. Throws PreconditionError above 64 elements.
  std::vector<Subset> subalgebras(Algebra const& A, Signature sig);

  // Subalgebra on a closed subset; throws PreconditionError if not closed.
  Algebra subalgebra(Algebra const& A, Subset const& S, std::string name);

}  // namespace twistlab
