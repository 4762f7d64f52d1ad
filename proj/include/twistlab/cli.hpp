#pragma once

// The twistlab command line. `run` is the whole program minus process
// setup: exit codes are 0 for PASS, 1 for FAIL and 2 for usage errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace twistlab::cli {

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  struct SuiteLine {
    std::string key;  // e.g. "thm:representation"
    bool        pass = false;
    std::string detail;
  };

  // Every verifier over the fixture corpus, one line per claim.
  std::vector<SuiteLine> paper_suite();

}  // namespace twistlab::cli
