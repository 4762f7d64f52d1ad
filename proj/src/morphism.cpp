#include "twistlab/morphism.hpp"

#include <algorithm>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

  Signature Signature::parse(std::string const& spec) {
    if (spec == "lattice") {
      return lattice();
    }
    if (spec == "rl") {
      return residuated_lattice();
    }
    if (spec == "irl") {
      return involutive_rl();
    }
    if (spec == "brouwerian") {
      return brouwerian();
    }
    if (spec == "all") {
      return everything();
    }
    Signature         s;
    std::stringstream ss(spec);
    std::string       tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "join") {
        s.join = true;
      } else if (tok == "meet") {
        s.meet = true;
      } else if (tok == "prod") {
        s.prod = true;
      } else if (tok == "ldiv") {
        s.ldiv = true;
      } else if (tok == "rdiv") {
        s.rdiv = true;
      } else if (tok == "unit") {
        s.unit = true;
      } else if (tok == "invol") {
        s.invol = true;
      } else if (tok == "bottom") {
        s.bottom = true;
      } else if (!tok.empty()) {
        throw MalformedInput("unknown operation in signature: " + tok);
      }
    }
    return s;
  }

  std::vector<std::string> Signature::names() const {
    std::vector<std::string> out;
    auto                     add = [&](bool b, char const* s) {
      if (b) {
        out.emplace_back(s);
      }
    };
    add(join, "join");
    add(meet, "meet");
    add(prod, "prod");
    add(ldiv, "ldiv");
    add(rdiv, "rdiv");
    add(unit, "unit");
    add(invol, "invol");
    add(bottom, "bottom");
    return out;
  }

  bool Morphism::injective() const {
    auto t = table;
    std::sort(t.begin(), t.end());
    return std::adjacent_find(t.begin(), t.end()) == t.end();
  }

  bool Morphism::surjective(std::size_t target_size) const {
    std::vector<bool> hit(target_size, false);
    for (Elem y : table) {
      hit.at(y) = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  Verdict check_morphism(Algebra const& A, Algebra const& B, Morphism const& f) {
    Verdict v{"morphism " + f.source + " -> " + f.target, {}};
    if (f.table.size() != A.size()) {
      throw MalformedInput("morphism table has wrong length");
    }
    for (Elem y : f.table) {
      if (y >= B.size()) {
        throw MalformedInput("morphism value out of range");
      }
    }
    auto const& s = f.signature;
    auto        binary = [&](bool on, char const* name, auto opA, auto opB) {
      if (!on) {
        return;
      }
      for (Elem x = 0; x < A.size(); ++x) {
        for (Elem y = 0; y < A.size(); ++y) {
          if (f(opA(x, y)) != opB(f(x), f(y))) {
            v.fail(name, {x, y});
          }
        }
      }
    };
    binary(
        s.join, "join", [&](Elem x, Elem y) { return A.join(x, y); },
        [&](Elem x, Elem y) { return B.join(x, y); });
    binary(
        s.meet, "meet", [&](Elem x, Elem y) { return A.meet(x, y); },
        [&](Elem x, Elem y) { return B.meet(x, y); });
    binary(
        s.prod, "prod", [&](Elem x, Elem y) { return A.prod(x, y); },
        [&](Elem x, Elem y) { return B.prod(x, y); });
    binary(
        s.ldiv, "ldiv", [&](Elem x, Elem y) { return A.ldiv(x, y); },
        [&](Elem x, Elem y) { return B.ldiv(x, y); });
    binary(
        s.rdiv, "rdiv", [&](Elem x, Elem y) { return A.rdiv(x, y); },
        [&](Elem x, Elem y) { return B.rdiv(x, y); });
    if (s.unit) {
      if (!A.has_unit() || !B.has_unit()) {
        v.fail("unit-missing", {});
      } else if (f(A.unit()) != B.unit()) {
        v.fail("unit", {A.unit()});
      }
    }
    if (s.bottom) {
      if (!A.has_bottom() || !B.has_bottom()) {
        v.fail("bottom-missing", {});
      } else if (f(A.bottom()) != B.bottom()) {
        v.fail("bottom", {A.bottom()});
      }
    }
    if (s.invol) {
      if (!A.involutive() || !B.involutive()) {
        v.fail("invol-missing", {});
      } else {
        for (Elem x = 0; x < A.size(); ++x) {
          if (f(A.neg(x)) != B.neg(f(x))) {
            v.fail("invol", {x});
          }
        }
      }
    }
    return v;
  }

  Morphism compose(Morphism const& g, Morphism const& f) {
    Morphism h{f.source, g.target, {}, f.signature};
    h.table.reserve(f.table.size());
    for (Elem y : f.table) {
      h.table.push_back(g(y));
    }
    return h;
  }

  Morphism identity_morphism(Algebra const& A, Signature sig) {
    Morphism f{A.name(), A.name(), {}, sig};
    for (Elem x = 0; x < A.size(); ++x) {
      f.table.push_back(x);
    }
    return f;
  }

}  // namespace twistlab
