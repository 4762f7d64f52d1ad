#pragma once

// The small algebras used throughout: the bases 2, L3, G3, S3, their twists,
// and the two non-term subalgebras.

#include <optional>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/conuclei.hpp"

namespace twistlab::fixtures {

  // 0 < 1, prod = meet, e = 1, ~x = 1 - x, bottom 0
  Algebra two();
  // 0 < a < 1, xy = max(0, x + y - 2) on indices, e = 1, ~x = 2 - x, bottom 0
  Algebra l3();
  // 0 < a < 1, prod = meet, e = 1, bottom 0
  Algebra g3();
  // bot < e < top, ~x = 2 - x, bot absorbing against top; no bottom designated
  Algebra s3();

  std::vector<Algebra> bases();

  // Tw(L3, 0) minus (a,a): the five element chain
  Algebra five_chain();
  // Tw(G3, 0) minus (0,0)
  Algebra g3_twist_without_00();

  // t on `parent` restricted to `sub`, matching elements by name. Throws
  // PreconditionError if a name is missing or sub is not closed under t.
  UnaryMap restrict_by_names(Algebra const& sub, Algebra const& parent, UnaryMap const& t);

  // tau_Tw of Tw(G3, 0) restricted to g3_twist_without_00()
  UnaryMap g3_twist_without_00_tau();

  struct Fixture {
    std::string name;  // file stem, e.g. "tw_g3_a"
    Algebra     algebra;
    std::string note;
  };

  // Every fixture, in a fixed order.
  std::vector<Fixture> corpus();
  std::optional<Algebra> find(std::string const& name);

  // "two", "l3", "g3", "s3"
  std::string stem(Algebra const& base);

}  // namespace twistlab::fixtures
