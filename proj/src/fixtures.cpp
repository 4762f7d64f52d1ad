#include "twistlab/fixtures.hpp"

#include <algorithm>
#include <cctype>

#include "twistlab/errors.hpp"
#include "twistlab/search.hpp"
#include "twistlab/twist.hpp"

namespace twistlab::fixtures {

  namespace {

    RawAlgebra chain(std::string name, std::size_t n) {
      RawAlgebra r;
      r.name = std::move(name);
      r.size = n;
      r.join.assign(n, std::vector<Elem>(n));
      r.meet = r.prod = r.join;
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          r.join[x][y] = std::max(x, y);
          r.meet[x][y] = std::min(x, y);
        }
      }
      return r;
    }

  }  // namespace

  Algebra two() {
    RawAlgebra r = chain("2", 2);
    r.prod       = r.meet;
    r.unit       = 1;
    r.invol      = std::vector<Elem>{1, 0};
    r.bottom     = 0;
    r.names      = {"0", "1"};
    return Algebra::certify(std::move(r));
  }

  Algebra l3() {
    RawAlgebra r = chain("L3", 3);
    for (Elem x = 0; x < 3; ++x) {
      for (Elem y = 0; y < 3; ++y) {
        r.prod[x][y] = x + y >= 2 ? x + y - 2 : 0;
      }
    }
    r.unit   = 2;
    r.invol  = std::vector<Elem>{2, 1, 0};
    r.bottom = 0;
    r.names  = {"0", "a", "1"};
    return Algebra::certify(std::move(r));
  }

  Algebra g3() {
    RawAlgebra r = chain("G3", 3);
    r.prod       = r.meet;
    r.unit       = 2;
    r.bottom     = 0;
    r.names      = {"0", "a", "1"};
    return Algebra::certify(std::move(r));
  }

  Algebra s3() {
    RawAlgebra r = chain("S3", 3);
    r.prod       = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    r.unit       = 1;
    r.invol      = std::vector<Elem>{2, 1, 0};
    r.names      = {"bot", "e", "top"};
    return Algebra::certify(std::move(r));
  }

  std::vector<Algebra> bases() {
    return {two(), l3(), g3(), s3()};
  }

  namespace {

    Algebra drop_pair(Algebra const& L, Elem iota, Pair gone, std::string name) {
      TwistAlgebra const T = twist(L, iota);
      Subset             S = Subset::full(T.algebra().name(), T.algebra().size());
      S.erase(T.at(gone));
      return subalgebra(T.algebra(), S, std::move(name));
    }

  }  // namespace

  Algebra five_chain() {
    return drop_pair(l3(), 0, {1, 1}, "S5");
  }

  Algebra g3_twist_without_00() {
    return drop_pair(g3(), 0, {0, 0}, "S");
  }

  UnaryMap restrict_by_names(Algebra const& sub, Algebra const& parent, UnaryMap const& t) {
    auto index_in = [](Algebra const& A, std::string const& name) -> Elem {
      for (Elem x = 0; x < A.size(); ++x) {
        if (A.element_name(x) == name) {
          return x;
        }
      }
      throw PreconditionError("no element named " + name + " in " + A.name());
    };
    UnaryMap r{sub.name(), {}};
    for (Elem x = 0; x < sub.size(); ++x) {
      Elem const y = t(index_in(parent, sub.element_name(x)));
      r.table.push_back(index_in(sub, parent.element_name(y)));
    }
    return r;
  }

  UnaryMap g3_twist_without_00_tau() {
    TwistAlgebra const T = twist(g3(), 0);
    return restrict_by_names(g3_twist_without_00(), T.algebra(), tau_tw(T));
  }

  std::string stem(Algebra const& base) {
    if (base.name() == "2") {
      return "two";
    }
    std::string s = base.name();
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
  }

  std::vector<Fixture> corpus() {
    std::vector<Fixture> out;
    for (auto const& L : bases()) {
      out.push_back({stem(L), L, "base"});
    }
    for (auto const& L : bases()) {
      out.push_back({"tw_" + stem(L) + "_full", full_twist(L).algebra(), "full twist"});
    }
    for (auto const& L : bases()) {
      for (Elem i = 0; i < L.size(); ++i) {
        out.push_back({"tw_" + stem(L) + "_" + L.element_name(i), twist(L, i).algebra(),
                       "twist"});
      }
    }
    out.push_back({"five_chain", five_chain(), "subalgebra of Tw(L3,0) without (a,a)"});
    out.push_back({"tw_g3_0_minus_00", g3_twist_without_00(),
                   "subalgebra of Tw(G3,0) without (0,0)"});
    return out;
  }

  std::optional<Algebra> find(std::string const& name) {
    for (auto& f : corpus()) {
      if (f.name == name) {
        return std::move(f.algebra);
      }
    }
    return std::nullopt;
  }

}  // namespace twistlab::fixtures
