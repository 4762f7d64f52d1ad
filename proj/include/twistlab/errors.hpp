#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

  // Input that is structurally broken: wrong dimensions, out-of-range
  // entries, unparsable JSON. Never used for axiom failures.
  class MalformedInput : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A caller-side precondition does not hold (missing involution, non-cyclic
  // element, size bound exceeded, ...).
  class PreconditionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A consequence that must hold whenever the inputs satisfy their
  // preconditions failed. This means the checker itself is wrong.
  class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace twistlab
