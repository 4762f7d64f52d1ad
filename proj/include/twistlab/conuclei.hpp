#pragma once

// Interior operators on residuated lattices: weak conuclei, conuclei and
// Nelson conuclei, their image algebras, and the canonical examples.

#include <optional>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

  struct UnaryMap {
    std::string       parent;
    std::vector<Elem> table;

    Elem operator()(Elem x) const {
      return table[x];
    }
    bool operator==(UnaryMap const&) const = default;
    bool operator<(UnaryMap const& other) const {
      return table < other.table;
    }
  };

  UnaryMap identity_map(Algebra const& A);

  // C1-C4. Throws InternalError if C1-C4 hold but a derived identity fails.
  Verdict is_weak_conucleus(Algebra const& A, UnaryMap const& d);
  // Weak conucleus plus C5. Requires a unit.
  Verdict is_conucleus(Algebra const& A, UnaryMap const& d);
  // Conucleus plus T1-T3. Cross-checks the equality form of T3, d(e) = e,
  // and on involutive algebras the division identities and the cyclicity
  // of d(~e) in the image; a mismatch there throws InternalError.
  Verdict is_nelson_conucleus(Algebra const& A, UnaryMap const& t);

  // The algebra on the fixed points of a conucleus. Elements are renumbered
  // in increasing order of their index in the parent; `embedding[i]` is the
  // parent element of image element i.
  struct ImageAlgebra {
    Algebra           algebra;
    std::vector<Elem> embedding;
    std::vector<int>  index;  // parent element -> image element, or -1

    Elem of(Elem parent_elem) const;
  };

  // Throws PreconditionError if d is not a conucleus and InternalError if the
  // image turns out not to be a residuated lattice. The image carries
  // bottom d(bottom) when the parent has a bottom.
  ImageAlgebra conucleus_image(Algebra const& A, UnaryMap const& d);

  // p is a positive idempotent: pp = p and p\x, x/p <= x <= px, xp.
  Verdict is_positive_idempotent(Algebra const& A, Elem p);

  // x -> p\(x/p). Throws PreconditionError unless p is a positive idempotent;
  // throws InternalError if the image is not {a : ap = a = pa} or p fails to
  // act as a unit on it.
  UnaryMap double_division_map(Algebra const& A, Elem p);

  // x -> (x /\ e)^2
  UnaryMap nelson_term_tau(Algebra const& A);
  // x -> x /\ e
  UnaryMap kalman_term_tau(Algebra const& A);

  // Every Nelson conucleus on A, sorted by table. Throws PreconditionError if
  // A is not involutive or has more than `bound` elements.
  std::vector<UnaryMap> enumerate_nelson_conuclei(Algebra const& A, std::size_t bound = 12);

  // A pair (A, tau) with tau a verified Nelson conucleus on an involutive A.
  class NCAPair {
   public:
    // Throws PreconditionError if A is not involutive or tau is not a
    // Nelson conucleus.
    static NCAPair make(Algebra A, UnaryMap tau);

    Algebra const& algebra() const noexcept {
      return _A;
    }
    UnaryMap const& tau() const noexcept {
      return _tau;
    }
    ImageAlgebra const& image() const noexcept {
      return *_image;
    }
    // x => y = tau(x)\y
    Elem supset(Elem x, Elem y) const {
      return _A.ldiv(_tau(x), y);
    }
    // y <= x = y/tau(x)
    Elem subset(Elem y, Elem x) const {
      return _A.rdiv(y, _tau(x));
    }
    // tau(~e) as an element of A
    Elem iota() const {
      return _tau(_A.neg(_A.unit()));
    }

   private:
    NCAPair(Algebra A, UnaryMap tau, ImageAlgebra img)
        : _A(std::move(A)), _tau(std::move(tau)), _image(std::move(img)) {}

    Algebra                     _A;
    UnaryMap                    _tau;
    std::optional<ImageAlgebra> _image;
  };

}  // namespace twistlab
