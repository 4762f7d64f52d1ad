#pragma once

// JSON interchange: {"size", "join", "meet", "prod", "ldiv"?, "rdiv"?,
// "unit"?, "invol"?, "bottom"?, "names"?}, plus maps, subsets, morphisms
// and verdicts.

#include <string>

#include "json.hpp"
#include "twistlab/algebra.hpp"
#include "twistlab/conuclei.hpp"
#include "twistlab/morphism.hpp"

namespace twistlab {

  using json = nlohmann::json;

  // Throws MalformedInput on missing or ill-typed fields.
  RawAlgebra raw_from_json(json const& j);
  Algebra    algebra_from_json(json const& j);
  json       to_json(Algebra const& A);

  UnaryMap map_from_json(json const& j, Algebra const& parent);
  json     to_json(UnaryMap const& m);

  // {"parent": name, "members": [...]}; a bare array of members is accepted.
  Subset subset_from_json(json const& j, Algebra const& parent);
  json   to_json(Subset const& s);

  json to_json(Morphism const& m);
  json to_json(Verdict const& v);

  // One key per line, values compact; matrices one row per line.
  std::string pretty(json const& j);

  json read_json_file(std::string const& path);
  void write_text_file(std::string const& path, std::string const& text);

}  // namespace twistlab
