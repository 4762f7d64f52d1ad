#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace twistlab {

  // Elements of a finite algebra are the indices 0..n-1.
  using Elem = std::uint32_t;

  struct Witness {
    std::string       axiom;
    std::vector<Elem> elements;

    bool operator==(Witness const&) const = default;
  };

  // Outcome of checking a list of axioms pointwise. `holds()` iff no
  // witnesses were recorded.
  struct Verdict {
    std::string          name;
    std::vector<Witness> witnesses;

    bool holds() const noexcept {
      return witnesses.empty();
    }

    void fail(std::string axiom, std::vector<Elem> elements) {
      witnesses.push_back({std::move(axiom), std::move(elements)});
    }

    // true iff some witness was recorded for `axiom`
    bool failed(std::string_view axiom) const noexcept;

    // first witness for `axiom`, or nullptr
    Witness const* first(std::string_view axiom) const noexcept;

    // Append the witnesses of `other`, prefixing their axiom names.
    void absorb(Verdict const& other, std::string_view prefix = {});
  };

  using ValidationReport = Verdict;

  std::ostream& operator<<(std::ostream& os, Verdict const& v);

}  // namespace twistlab
