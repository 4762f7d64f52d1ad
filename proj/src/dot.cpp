#include "twistlab/dot.hpp"

#include <sstream>

namespace twistlab {

  namespace {

    std::string quote(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }

  }  // namespace

  std::string hasse_dot(Algebra const& A, DotStyle const& style) {
    std::ostringstream os;
    os << "digraph " << quote(A.name()) << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle, style=solid];\n";
    for (Elem x = 0; x < A.size(); ++x) {
      std::string shape = "circle";
      std::string fill;
      if (style.maximal && style.maximal->contains(x)) {
        shape = "diamond";
        fill  = "gray80";
      }
      if (style.image && style.image->contains(x)) {
        fill = "gray60";
      }
      if (A.has_unit() && A.unit() == x) {
        shape = "square";
      }
      os << "  n" << x << " [label=" << quote(A.element_name(x)) << ", shape=" << shape;
      if (!fill.empty()) {
        os << ", style=filled, fillcolor=" << fill;
      }
      os << "];\n";
    }
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        if (!A.lt(x, y)) {
          continue;
        }
        bool cover = true;
        for (Elem z = 0; z < A.size() && cover; ++z) {
          cover = !(A.lt(x, z) && A.lt(z, y));
        }
        if (cover) {
          os << "  n" << x << " -> n" << y << " [arrowhead=none];\n";
        }
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace twistlab
