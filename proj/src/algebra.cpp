#include "twistlab/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

  namespace {

    void check_matrix(Matrix const& m, std::size_t n, char const* what) {
      if (m.size() != n) {
        std::ostringstream os;
        os << what << ": expected " << n << " rows, got " << m.size();
        throw MalformedInput(os.str());
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (m[x].size() != n) {
          std::ostringstream os;
          os << what << ": row " << x << " has " << m[x].size() << " entries, expected " << n;
          throw MalformedInput(os.str());
        }
        for (std::size_t y = 0; y < n; ++y) {
          if (m[x][y] >= n) {
            std::ostringstream os;
            os << what << "[" << x << "][" << y << "] = " << m[x][y] << " is out of range";
            throw MalformedInput(os.str());
          }
        }
      }
    }

    void check_structure(RawAlgebra const& raw) {
      std::size_t const n = raw.size;
      if (n == 0) {
        throw MalformedInput("size must be positive");
      }
      check_matrix(raw.join, n, "join");
      check_matrix(raw.meet, n, "meet");
      check_matrix(raw.prod, n, "prod");
      if (raw.ldiv) {
        check_matrix(*raw.ldiv, n, "ldiv");
      }
      if (raw.rdiv) {
        check_matrix(*raw.rdiv, n, "rdiv");
      }
      if (raw.unit && *raw.unit >= n) {
        throw MalformedInput("unit is out of range");
      }
      if (raw.bottom && *raw.bottom >= n) {
        throw MalformedInput("bottom is out of range");
      }
      if (raw.invol) {
        if (raw.invol->size() != n) {
          throw MalformedInput("invol must have one entry per element");
        }
        for (Elem v : *raw.invol) {
          if (v >= n) {
            throw MalformedInput("invol entry is out of range");
          }
        }
      }
      if (!raw.names.empty() && raw.names.size() != n) {
        throw MalformedInput("names must have one entry per element");
      }
    }

    // Fills in missing divisions. Returns false if the product has no
    // residuals, recording the offending pair in `report`.
    bool complete_divisions(RawAlgebra& raw, ValidationReport* report) {
      if (raw.ldiv && raw.rdiv) {
        return true;
      }
      auto res = residuals_from_product(raw.size, raw.join, raw.meet, raw.prod);
      if (auto const* bad = std::get_if<NoResidual>(&res)) {
        if (report != nullptr) {
          report->fail("residual-exists-" + bad->side, {bad->x, bad->z});
        }
        return false;
      }
      auto& r = std::get<Residuals>(res);
      if (!raw.ldiv) {
        raw.ldiv = std::move(r.ldiv);
      }
      if (!raw.rdiv) {
        raw.rdiv = std::move(r.rdiv);
      }
      return true;
    }

    void check_axioms(RawAlgebra const& raw, ValidationReport& report) {
      std::size_t const n = raw.size;
      auto const&       J = raw.join;
      auto const&       M = raw.meet;
      auto const&       P = raw.prod;
      auto              le = [&](Elem x, Elem y) { return M[x][y] == x; };

      for (Elem x = 0; x < n; ++x) {
        if (J[x][x] != x) {
          report.fail("join-idempotent", {x});
        }
        if (M[x][x] != x) {
          report.fail("meet-idempotent", {x});
        }
        for (Elem y = 0; y < n; ++y) {
          if (J[x][y] != J[y][x]) {
            report.fail("join-commutative", {x, y});
          }
          if (M[x][y] != M[y][x]) {
            report.fail("meet-commutative", {x, y});
          }
          if (J[x][M[x][y]] != x || M[x][J[x][y]] != x) {
            report.fail("absorption", {x, y});
          }
          if ((M[x][y] == x) != (J[x][y] == y)) {
            report.fail("order-consistency", {x, y});
          }
          for (Elem z = 0; z < n; ++z) {
            if (J[J[x][y]][z] != J[x][J[y][z]]) {
              report.fail("join-associative", {x, y, z});
            }
            if (M[M[x][y]][z] != M[x][M[y][z]]) {
              report.fail("meet-associative", {x, y, z});
            }
            if (P[P[x][y]][z] != P[x][P[y][z]]) {
              report.fail("prod-associative", {x, y, z});
            }
          }
        }
      }

      if (raw.unit) {
        Elem const e = *raw.unit;
        for (Elem x = 0; x < n; ++x) {
          if (P[e][x] != x) {
            report.fail("unit-left", {x});
          }
          if (P[x][e] != x) {
            report.fail("unit-right", {x});
          }
        }
      }

      if (raw.ldiv && raw.rdiv) {
        auto const& L = *raw.ldiv;
        auto const& R = *raw.rdiv;
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            for (Elem z = 0; z < n; ++z) {
              bool const a = le(P[x][y], z);
              bool const b = le(y, L[x][z]);
              bool const c = le(x, R[z][y]);
              if (a != b || a != c) {
                report.fail("residuation", {x, y, z});
              }
            }
          }
        }
      }

      if (raw.invol) {
        auto const& N = *raw.invol;
        for (Elem x = 0; x < n; ++x) {
          if (N[N[x]] != x) {
            report.fail("double-negation", {x});
          }
        }
        if (raw.ldiv && raw.rdiv) {
          for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) {
              if ((*raw.ldiv)[x][N[y]] != (*raw.rdiv)[N[x]][y]) {
                report.fail("contraposition", {x, y});
              }
            }
          }
        }
      }

      if (raw.bottom) {
        for (Elem x = 0; x < n; ++x) {
          if (!le(*raw.bottom, x)) {
            report.fail("bottom-least", {x});
          }
        }
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Verdict
  ////////////////////////////////////////////////////////////////////////

  bool Verdict::failed(std::string_view axiom) const noexcept {
    return first(axiom) != nullptr;
  }

  Witness const* Verdict::first(std::string_view axiom) const noexcept {
    for (auto const& w : witnesses) {
      if (w.axiom == axiom) {
        return &w;
      }
    }
    return nullptr;
  }

  void Verdict::absorb(Verdict const& other, std::string_view prefix) {
    for (auto const& w : other.witnesses) {
      witnesses.push_back({std::string(prefix) + w.axiom, w.elements});
    }
  }

  std::ostream& operator<<(std::ostream& os, Verdict const& v) {
    os << v.name << ": " << (v.holds() ? "holds" : "fails");
    for (auto const& w : v.witnesses) {
      os << "\n  " << w.axiom << " at (";
      for (std::size_t i = 0; i < w.elements.size(); ++i) {
        os << (i == 0 ? "" : ", ") << w.elements[i];
      }
      os << ")";
    }
    return os;
  }

  ////////////////////////////////////////////////////////////////////////
  // OpTable
  ////////////////////////////////////////////////////////////////////////

  Matrix OpTable::to_matrix() const {
    Matrix m(_n, std::vector<Elem>(_n));
    for (std::size_t x = 0; x < _n; ++x) {
      for (std::size_t y = 0; y < _n; ++y) {
        m[x][y] = _data[x * _n + y];
      }
    }
    return m;
  }

  OpTable OpTable::from_matrix(Matrix const& m) {
    OpTable t(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t y = 0; y < m.size(); ++y) {
        t._data[x * t._n + y] = m[x][y];
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  ValidationError::ValidationError(ValidationReport report)
      : std::runtime_error([&] {
          std::ostringstream os;
          os << "algebra '" << report.name << "' is not certified: " << report.witnesses.size()
             << " violation(s)";
          if (!report.witnesses.empty()) {
            os << ", first: " << report.witnesses.front().axiom;
          }
          return os.str();
        }()),
        _report(std::move(report)) {}

  ValidationReport validate(RawAlgebra const& input) {
    check_structure(input);
    ValidationReport report{input.name.empty() ? "algebra" : input.name, {}};
    RawAlgebra       raw = input;
    complete_divisions(raw, &report);
    check_axioms(raw, report);
    return report;
  }

  std::variant<Residuals, NoResidual> residuals_from_product(std::size_t   n,
                                                            Matrix const& join,
                                                            Matrix const& meet,
                                                            Matrix const& prod) {
    auto      le = [&](Elem x, Elem y) { return meet[x][y] == x; };
    Residuals r{Matrix(n, std::vector<Elem>(n)), Matrix(n, std::vector<Elem>(n))};
    for (Elem x = 0; x < n; ++x) {
      for (Elem z = 0; z < n; ++z) {
        // left: max{y : x*y <= z}
        std::optional<Elem> acc;
        for (Elem y = 0; y < n; ++y) {
          if (le(prod[x][y], z)) {
            acc = acc ? join[*acc][y] : y;
          }
        }
        if (!acc || !le(prod[x][*acc], z)) {
          return NoResidual{x, z, "left"};
        }
        r.ldiv[x][z] = *acc;
        // right: max{y : y*x <= z}, stored as rdiv[z][x] = z/x
        acc.reset();
        for (Elem y = 0; y < n; ++y) {
          if (le(prod[y][x], z)) {
            acc = acc ? join[*acc][y] : y;
          }
        }
        if (!acc || !le(prod[*acc][x], z)) {
          return NoResidual{x, z, "right"};
        }
        r.rdiv[z][x] = *acc;
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Algebra
  ////////////////////////////////////////////////////////////////////////

  Algebra Algebra::certify(RawAlgebra raw) {
    check_structure(raw);
    ValidationReport report{raw.name.empty() ? "algebra" : raw.name, {}};
    complete_divisions(raw, &report);
    check_axioms(raw, report);
    if (!report.holds()) {
      throw ValidationError(std::move(report));
    }

    Algebra a;
    a._name  = raw.name;
    a._n     = raw.size;
    a._join  = OpTable::from_matrix(raw.join);
    a._meet  = OpTable::from_matrix(raw.meet);
    a._prod  = OpTable::from_matrix(raw.prod);
    a._ldiv  = OpTable::from_matrix(*raw.ldiv);
    a._rdiv  = OpTable::from_matrix(*raw.rdiv);
    a._unit  = raw.unit;
    a._invol = raw.invol.value_or(std::vector<Elem>{});
    a._bottom = raw.bottom;
    a._names  = raw.names.empty() ? default_names(raw.size) : std::move(raw.names);
    a._leq.assign(a._n * a._n, 0);
    for (Elem x = 0; x < a._n; ++x) {
      for (Elem y = 0; y < a._n; ++y) {
        a._leq[x * a._n + y] = a._meet(x, y) == x ? 1 : 0;
      }
    }
    Elem lo = 0, hi = 0;
    for (Elem x = 1; x < a._n; ++x) {
      lo = a._meet(lo, x);
      hi = a._join(hi, x);
    }
    a._least    = lo;
    a._greatest = hi;
    return a;
  }

  Elem Algebra::unit() const {
    if (!_unit) {
      throw PreconditionError("algebra '" + _name + "' has no unit");
    }
    return *_unit;
  }

  Elem Algebra::neg(Elem x) const {
    if (_invol.empty()) {
      throw PreconditionError("algebra '" + _name + "' has no involution");
    }
    return _invol[x];
  }

  Elem Algebra::bottom() const {
    if (!_bottom) {
      throw PreconditionError("algebra '" + _name + "' has no designated bottom");
    }
    return *_bottom;
  }

  Elem Algebra::top() const {
    if (_bottom && !_invol.empty()) {
      return _invol[*_bottom];
    }
    return _greatest;
  }

  RawAlgebra Algebra::to_raw() const {
    RawAlgebra r;
    r.name   = _name;
    r.size   = _n;
    r.join   = _join.to_matrix();
    r.meet   = _meet.to_matrix();
    r.prod   = _prod.to_matrix();
    r.ldiv   = _ldiv.to_matrix();
    r.rdiv   = _rdiv.to_matrix();
    r.unit   = _unit;
    r.bottom = _bottom;
    if (!_invol.empty()) {
      r.invol = _invol;
    }
    r.names = _names;
    return r;
  }

  Algebra Algebra::with_name(std::string name) const {
    Algebra a = *this;
    a._name   = std::move(name);
    return a;
  }

  Algebra Algebra::with_names(std::vector<std::string> names) const {
    if (names.size() != _n) {
      throw MalformedInput("names must have one entry per element");
    }
    Algebra a = *this;
    a._names  = std::move(names);
    return a;
  }

  Algebra Algebra::with_bottom(std::optional<Elem> b) const {
    RawAlgebra r = to_raw();
    r.bottom     = b;
    return certify(std::move(r));
  }

  Algebra Algebra::with_involution(std::optional<std::vector<Elem>> inv) const {
    RawAlgebra r = to_raw();
    r.invol      = std::move(inv);
    return certify(std::move(r));
  }

  Algebra Algebra::without_unit() const {
    Algebra a = *this;
    a._unit.reset();
    return a;
  }

  bool Algebra::same_tables(Algebra const& o) const noexcept {
    return _n == o._n && _join == o._join && _meet == o._meet && _prod == o._prod
           && _ldiv == o._ldiv && _rdiv == o._rdiv && _unit == o._unit && _invol == o._invol
           && _bottom == o._bottom;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural predicates
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> Profile::flags() const {
    std::vector<std::string> out;
    auto                     add = [&](bool b, char const* s) {
      if (b) {
        out.emplace_back(s);
      }
    };
    add(commutative, "commutative");
    add(integral, "integral");
    add(distributive, "distributive");
    add(bounded, "bounded");
    add(topped, "topped");
    add(brouwerian, "brouwerian");
    add(involutive, "involutive");
    add(odd, "odd");
    add(idempotent, "idempotent");
    add(three_potent, "3-potent");
    return out;
  }

  Profile structural_profile(Algebra const& a) {
    std::size_t const n = a.size();
    Profile           p;
    p.commutative  = true;
    p.distributive = true;
    p.idempotent   = true;
    p.three_potent = true;
    p.brouwerian   = a.has_unit();
    for (Elem x = 0; x < n; ++x) {
      Elem const xx = a.prod(x, x);
      p.idempotent &= xx == x;
      p.three_potent &= a.prod(xx, x) == xx;
      for (Elem y = 0; y < n; ++y) {
        p.commutative &= a.prod(x, y) == a.prod(y, x);
        p.brouwerian &= a.prod(x, y) == a.meet(x, y);
        for (Elem z = 0; z < n && p.distributive; ++z) {
          p.distributive &= a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z));
        }
      }
    }
    p.integral   = a.has_unit() && a.unit() == a.greatest();
    p.brouwerian = p.brouwerian && p.integral;
    p.bounded    = a.has_bottom();
    p.topped     = true;
    p.involutive = a.involutive();
    p.odd        = a.involutive() && a.has_unit() && a.neg(a.unit()) == a.unit();
    return p;
  }

  bool is_cyclic_element(Algebra const& a, Elem i) {
    for (Elem x = 0; x < a.size(); ++x) {
      if (a.ldiv(x, i) != a.rdiv(i, x)) {
        return false;
      }
    }
    return true;
  }

  Elem oplus(Algebra const& a, Elem x, Elem y) {
    if (!a.involutive()) {
      throw PreconditionError("oplus needs an involution");
    }
    return a.neg(a.prod(a.neg(y), a.neg(x)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  Subset Subset::of(std::string parent, std::size_t n, std::vector<Elem> const& elems) {
    Subset s(std::move(parent), n);
    for (Elem x : elems) {
      if (x >= n) {
        throw MalformedInput("subset element out of range");
      }
      s._member[x] = true;
    }
    return s;
  }

  Subset Subset::full(std::string parent, std::size_t n) {
    Subset s(std::move(parent), n);
    s._member.assign(n, true);
    return s;
  }

  std::vector<Elem> Subset::elements() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < _member.size(); ++x) {
      if (_member[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::size_t Subset::count() const {
    return static_cast<std::size_t>(std::count(_member.begin(), _member.end(), true));
  }

  bool Subset::subset_of(Subset const& other) const {
    for (std::size_t x = 0; x < _member.size(); ++x) {
      if (_member[x] && !other._member.at(x)) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(std::to_string(i));
    }
    return out;
  }

}  // namespace twistlab
