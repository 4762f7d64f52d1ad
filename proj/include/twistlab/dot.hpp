#pragma once

// Hasse diagrams in Graphviz DOT. Gray diamonds mark a maximal set, gray
// fill marks a conucleus image, and the unit is drawn as a square.

#include <optional>
#include <string>

#include "twistlab/algebra.hpp"

namespace twistlab {

  struct DotStyle {
    std::optional<Subset> maximal;
    std::optional<Subset> image;
  };

  std::string hasse_dot(Algebra const& A, DotStyle const& style = {});

}  // namespace twistlab
