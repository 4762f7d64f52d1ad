#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "twistlab/algebra.hpp"
#include "twistlab/fixtures.hpp"
#include "twistlab/twist.hpp"

namespace tl = twistlab;

inline tl::Elem by_name(tl::Algebra const& A, std::string const& n) {
  for (tl::Elem x = 0; x < A.size(); ++x) {
    if (A.element_name(x) == n) {
      return x;
    }
  }
  throw std::out_of_range("no element " + n + " in " + A.name());
}

inline tl::Algebra fixture(std::string const& name) {
  auto A = tl::fixtures::find(name);
  if (!A) {
    throw std::out_of_range("no fixture " + name);
  }
  return *A;
}

inline tl::Matrix table(std::size_t n, std::function<tl::Elem(tl::Elem, tl::Elem)> f) {
  tl::Matrix m(n, std::vector<tl::Elem>(n));
  for (tl::Elem x = 0; x < n; ++x) {
    for (tl::Elem y = 0; y < n; ++y) {
      m[x][y] = f(x, y);
    }
  }
  return m;
}

// An n-chain 0 < 1 < ... < n-1 with the given product and no constants.
inline tl::RawAlgebra chain(std::string name,
                            std::size_t n,
                            std::function<tl::Elem(tl::Elem, tl::Elem)> prod) {
  tl::RawAlgebra r;
  r.name = std::move(name);
  r.size = n;
  r.join = table(n, [](tl::Elem x, tl::Elem y) { return std::max(x, y); });
  r.meet = table(n, [](tl::Elem x, tl::Elem y) { return std::min(x, y); });
  r.prod = table(n, prod);
  r.names = tl::default_names(n);
  return r;
}
