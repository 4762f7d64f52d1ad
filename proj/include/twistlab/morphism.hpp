#pragma once

#include <string>
#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

  // Which operations and constants a map is required to preserve.
  struct Signature {
    bool join   = false;
    bool meet   = false;
    bool prod   = false;
    bool ldiv   = false;
    bool rdiv   = false;
    bool unit   = false;
    bool invol  = false;
    bool bottom = false;

    static Signature lattice() {
      return {true, true, false, false, false, false, false, false};
    }
    // join, meet, product, both divisions and the unit
    static Signature residuated_lattice() {
      return {true, true, true, true, true, true, false, false};
    }
    static Signature involutive_rl() {
      return {true, true, true, true, true, true, true, false};
    }
    // join, meet, implication and top; products are meets.
    static Signature brouwerian() {
      return {true, true, false, true, false, true, false, false};
    }
    static Signature everything() {
      return {true, true, true, true, true, true, true, true};
    }

    // Parses a comma separated list such as "join,meet,prod,unit" or one of
    // the presets "lattice", "rl", "irl", "brouwerian", "all".
    static Signature parse(std::string const& spec);

    std::vector<std::string> names() const;

    bool operator==(Signature const&) const = default;
  };

  struct Morphism {
    std::string       source;
    std::string       target;
    std::vector<Elem> table;
    Signature         signature;

    Elem operator()(Elem x) const {
      return table.at(x);
    }
    bool injective() const;
    bool surjective(std::size_t target_size) const;

    bool operator==(Morphism const&) const = default;
  };

  // Checks that `f` maps A into B preserving everything in f.signature.
  // Constants missing from either side are reported as failures.
  Verdict check_morphism(Algebra const& A, Algebra const& B, Morphism const& f);

  Morphism compose(Morphism const& g, Morphism const& f);  // g after f
  Morphism identity_morphism(Algebra const& A, Signature sig);

}  // namespace twistlab
