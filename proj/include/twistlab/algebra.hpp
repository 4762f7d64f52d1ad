#pragma once

// Finite (involutive, pointed, bounded) residuated lattices and
// residuated lattice-ordered semigroups stored as operation tables.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "twistlab/verdict.hpp"

namespace twistlab {

  using Matrix = std::vector<std::vector<Elem>>;

  // Unvalidated input, exactly as read from JSON. ldiv/rdiv may be absent,
  // in which case they are computed from the product. Entry [x][y] of a
  // matrix is op(x, y); in particular rdiv[x][y] is x/y.
  struct RawAlgebra {
    std::string                      name;
    std::size_t                      size = 0;
    Matrix                           join;
    Matrix                           meet;
    Matrix                           prod;
    std::optional<Matrix>            ldiv;
    std::optional<Matrix>            rdiv;
    std::optional<Elem>              unit;
    std::optional<std::vector<Elem>> invol;
    std::optional<Elem>              bottom;
    std::vector<std::string>         names;
  };

  // Square table of a binary operation, stored row-major.
  class OpTable {
   public:
    OpTable() = default;
    explicit OpTable(std::size_t n, Elem fill = 0) : _n(n), _data(n * n, fill) {}

    Elem operator()(Elem x, Elem y) const noexcept {
      return _data[x * _n + y];
    }
    Elem& at(Elem x, Elem y) noexcept {
      return _data[x * _n + y];
    }
    std::size_t size() const noexcept {
      return _n;
    }
    std::vector<Elem> const& data() const noexcept {
      return _data;
    }

    Matrix to_matrix() const;
    static OpTable from_matrix(Matrix const& m);

    bool operator==(OpTable const&) const = default;

   private:
    std::size_t       _n = 0;
    std::vector<Elem> _data;
  };

  class Algebra;

  class ValidationError : public std::runtime_error {
   public:
    explicit ValidationError(ValidationReport report);
    ValidationReport const& report() const noexcept {
      return _report;
    }

   private:
    ValidationReport _report;
  };

  // Certified algebra: every axiom of a residuated lattice-ordered semigroup
  // holds, plus the unit, involution and bottom laws for whichever of those
  // constants are present. Immutable after construction.
  class Algebra {
   public:
    // Throws MalformedInput on structural problems and ValidationError when
    // an axiom fails.
    static Algebra certify(RawAlgebra raw);

    std::size_t size() const noexcept {
      return _n;
    }
    std::string const& name() const noexcept {
      return _name;
    }
    std::string const& element_name(Elem x) const {
      return _names[x];
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    Elem join(Elem x, Elem y) const noexcept {
      return _join(x, y);
    }
    Elem meet(Elem x, Elem y) const noexcept {
      return _meet(x, y);
    }
    Elem prod(Elem x, Elem y) const noexcept {
      return _prod(x, y);
    }
    // x\y
    Elem ldiv(Elem x, Elem y) const noexcept {
      return _ldiv(x, y);
    }
    // y/x
    Elem rdiv(Elem y, Elem x) const noexcept {
      return _rdiv(y, x);
    }
    bool leq(Elem x, Elem y) const noexcept {
      return _leq[x * _n + y] != 0;
    }
    bool lt(Elem x, Elem y) const noexcept {
      return x != y && leq(x, y);
    }

    bool has_unit() const noexcept {
      return _unit.has_value();
    }
    Elem unit() const;
    bool involutive() const noexcept {
      return !_invol.empty();
    }
    Elem neg(Elem x) const;
    std::vector<Elem> const& involution() const noexcept {
      return _invol;
    }
    bool has_bottom() const noexcept {
      return _bottom.has_value();
    }
    Elem bottom() const;
    std::optional<Elem> bottom_opt() const noexcept {
      return _bottom;
    }
    std::optional<Elem> unit_opt() const noexcept {
      return _unit;
    }

    // Least and greatest elements of the lattice (always exist, n finite).
    Elem least() const noexcept {
      return _least;
    }
    Elem greatest() const noexcept {
      return _greatest;
    }
    // ~bottom when both are present, otherwise the lattice maximum.
    Elem top() const;

    OpTable const& join_table() const noexcept {
      return _join;
    }
    OpTable const& meet_table() const noexcept {
      return _meet;
    }
    OpTable const& prod_table() const noexcept {
      return _prod;
    }
    OpTable const& ldiv_table() const noexcept {
      return _ldiv;
    }
    OpTable const& rdiv_table() const noexcept {
      return _rdiv;
    }

    RawAlgebra to_raw() const;

    Algebra with_name(std::string name) const;
    Algebra with_names(std::vector<std::string> names) const;
    Algebra with_bottom(std::optional<Elem> b) const;
    Algebra with_involution(std::optional<std::vector<Elem>> inv) const;
    Algebra without_unit() const;

    // Tablewise equality of every operation and constant; names ignored.
    bool same_tables(Algebra const& other) const noexcept;

   private:
    Algebra() = default;

    std::string              _name;
    std::size_t              _n = 0;
    OpTable                  _join, _meet, _prod, _ldiv, _rdiv;
    std::vector<char>        _leq;
    std::optional<Elem>      _unit;
    std::vector<Elem>        _invol;
    std::optional<Elem>      _bottom;
    std::vector<std::string> _names;
    Elem                     _least    = 0;
    Elem                     _greatest = 0;
  };

  // Checks every axiom and reports each violation with a witness tuple.
  // Missing divisions are computed first. Throws MalformedInput for
  // dimension mismatches and out-of-range entries.
  ValidationReport validate(RawAlgebra const& raw);

  inline bool leq(Algebra const& a, Elem x, Elem y) {
    return a.leq(x, y);
  }

  struct Residuals {
    Matrix ldiv;
    Matrix rdiv;
  };

  // (x, z) such that {y : x*y <= z} (side "left") or {y : y*x <= z}
  // (side "right") has no maximum.
  struct NoResidual {
    Elem        x    = 0;
    Elem        z    = 0;
    std::string side = "left";
  };

  // ldiv(x,z) = max{y : x*y <= z}, rdiv(z,y) = max{x : x*y <= z}, with the
  // order read off `meet`.
  std::variant<Residuals, NoResidual> residuals_from_product(std::size_t   n,
                                                            Matrix const& join,
                                                            Matrix const& meet,
                                                            Matrix const& prod);

  struct Profile {
    bool commutative  = false;
    bool integral     = false;
    bool distributive = false;
    bool bounded      = false;  // bottom designated in the signature
    bool topped       = false;
    bool brouwerian   = false;
    bool involutive   = false;
    bool odd          = false;
    bool idempotent   = false;
    bool three_potent = false;

    std::vector<std::string> flags() const;
  };

  Profile structural_profile(Algebra const& a);

  // x\i == i/x for every x.
  bool is_cyclic_element(Algebra const& a, Elem i);

  // a (+) b = ~((~b)(~a)). Throws PreconditionError without an involution.
  Elem oplus(Algebra const& a, Elem x, Elem y);

  // A subset of the universe of a named parent algebra.
  class Subset {
   public:
    Subset() = default;
    Subset(std::string parent, std::size_t n) : _parent(std::move(parent)), _member(n, false) {}
    static Subset of(std::string parent, std::size_t n, std::vector<Elem> const& elems);
    static Subset full(std::string parent, std::size_t n);

    std::string const& parent() const noexcept {
      return _parent;
    }
    std::size_t universe_size() const noexcept {
      return _member.size();
    }
    bool contains(Elem x) const {
      return _member.at(x);
    }
    void insert(Elem x) {
      _member.at(x) = true;
    }
    void erase(Elem x) {
      _member.at(x) = false;
    }
    std::vector<bool> const& member() const noexcept {
      return _member;
    }
    std::vector<Elem> elements() const;
    std::size_t       count() const;
    bool              subset_of(Subset const& other) const;

    bool operator==(Subset const& other) const noexcept {
      return _member == other._member;
    }
    bool operator<(Subset const& other) const noexcept {
      return _member < other._member;
    }

   private:
    std::string       _parent;
    std::vector<bool> _member;
  };

  // Names elements by index: "0", "1", ...
  std::vector<std::string> default_names(std::size_t n);

}  // namespace twistlab
