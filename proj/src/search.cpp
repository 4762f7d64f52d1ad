#include "twistlab/search.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <set>

#include "twistlab/errors.hpp"

namespace twistlab {

  namespace {

    using Mask = std::uint32_t;

    int popcount(Mask m) {
      return __builtin_popcount(m);
    }

    int lowest(Mask m) {
      return __builtin_ctz(m);
    }

    ////////////////////////////////////////////////////////////////////////
    // Lattices
    ////////////////////////////////////////////////////////////////////////

    struct Lattice {
      std::size_t       n = 0;
      std::vector<Mask> down;  // down[x] = {y : y <= x}
      Matrix            meet;
      Matrix            join;
      std::vector<std::vector<Elem>> automorphisms;

      bool leq(Elem x, Elem y) const {
        return (down[y] >> x) & 1U;
      }
    };

    // Meet and join tables of the poset given by `down`, or false if some pair
    // lacks a meet.
    bool lattice_tables(std::size_t n, std::vector<Mask> const& down, Matrix& meet, Matrix& join) {
      meet.assign(n, std::vector<Elem>(n));
      join.assign(n, std::vector<Elem>(n));
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          Mask const lower = down[x] & down[y];
          // the meet is the element of `lower` whose down-set is all of it
          bool found = false;
          for (Mask m = lower; m != 0; m &= m - 1) {
            Elem const z = static_cast<Elem>(lowest(m));
            if ((down[z] & lower) == lower) {
              meet[x][y] = z;
              found      = true;
              break;
            }
          }
          if (!found) {
            return false;
          }
          Mask upper = 0;
          for (Elem z = 0; z < n; ++z) {
            if (((down[z] >> x) & 1U) && ((down[z] >> y) & 1U)) {
              upper |= Mask(1) << z;
            }
          }
          found = false;
          for (Mask m = upper; m != 0; m &= m - 1) {
            Elem const z = static_cast<Elem>(lowest(m));
            bool       least = true;
            for (Mask k = upper; k != 0 && least; k &= k - 1) {
              least = (down[lowest(k)] >> z) & 1U;
            }
            if (least) {
              join[x][y] = z;
              found      = true;
              break;
            }
          }
          if (!found) {
            return false;
          }
        }
      }
      return true;
    }

    std::vector<Mask> permuted_down(std::vector<Mask> const& down, std::vector<Elem> const& p) {
      std::vector<Mask> out(down.size(), 0);
      for (Elem x = 0; x < down.size(); ++x) {
        for (Mask m = down[x]; m != 0; m &= m - 1) {
          out[p[x]] |= Mask(1) << p[lowest(m)];
        }
      }
      return out;
    }

    // Minimal encoding of the order over relabellings that fix 0 and n-1,
    // together with the relabellings that preserve the order.
    std::vector<Mask> order_key(std::vector<Mask> const&        down,
                                std::vector<std::vector<Elem>>* autos) {
      std::size_t const n = down.size();
      std::vector<Elem> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::vector<Mask> best = down;
      if (n <= 2) {
        if (autos != nullptr) {
          autos->push_back(p);
        }
        return best;
      }
      do {
        auto const q = permuted_down(down, p);
        if (q < best) {
          best = q;
        }
        if (autos != nullptr && q == down) {
          autos->push_back(p);
        }
      } while (std::next_permutation(p.begin() + 1, p.end() - 1));
      return best;
    }

    void grow(std::size_t                    n,
              std::vector<Mask>&             down,
              std::size_t                    k,
              std::set<std::vector<Mask>>&   seen,
              std::vector<std::vector<Mask>>& out) {
      if (k == n - 1) {
        down[k] = (Mask(1) << n) - 1;
        Matrix meet, join;
        if (lattice_tables(n, down, meet, join)) {
          auto key = order_key(down, nullptr);
          if (seen.insert(key).second) {
            out.push_back(key);
          }
        }
        return;
      }
      // strict down-set of k: 0 plus an order ideal of {1..k-1}
      Mask const span = k > 1 ? ((Mask(1) << (k - 1)) - 1) : 0;
      for (Mask s = 0; s <= span; ++s) {
        Mask const ideal = s << 1;
        bool       ok    = true;
        for (Mask m = ideal; m != 0 && ok; m &= m - 1) {
          ok = (down[lowest(m)] & ~(ideal | 1U)) == 0;
        }
        if (!ok) {
          continue;
        }
        down[k] = ideal | 1U | (Mask(1) << k);
        grow(n, down, k + 1, seen, out);
        if (span == 0) {
          break;
        }
      }
    }

    std::vector<Lattice> lattices(std::size_t n) {
      std::vector<Lattice> out;
      if (n == 1) {
        Lattice L;
        L.n    = 1;
        L.down = {1U};
        L.meet = L.join = {{0}};
        L.automorphisms = {{0}};
        out.push_back(L);
        return out;
      }
      std::vector<Mask> down(n, 0);
      down[0] = 1U;
      std::set<std::vector<Mask>>    seen;
      std::vector<std::vector<Mask>> keys;
      grow(n, down, 1, seen, keys);
      std::sort(keys.begin(), keys.end());
      for (auto const& key : keys) {
        Lattice L;
        L.n    = n;
        L.down = key;
        lattice_tables(n, key, L.meet, L.join);
        order_key(key, &L.automorphisms);
        out.push_back(std::move(L));
      }
      return out;
    }

    bool distributive(Lattice const& L) {
      for (Elem x = 0; x < L.n; ++x) {
        for (Elem y = 0; y < L.n; ++y) {
          for (Elem z = 0; z < L.n; ++z) {
            if (L.meet[x][L.join[y][z]] != L.join[L.meet[x][y]][L.meet[x][z]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    ////////////////////////////////////////////////////////////////////////
    // Product tables
    ////////////////////////////////////////////////////////////////////////

    struct Candidate {
      std::vector<std::uint8_t> key;
      RawAlgebra                raw;
    };

    class ProductSearch {
     public:
      ProductSearch(Lattice const& L, Elem e, SearchSpec const& spec,
                    std::function<void(Candidate&&)> emit)
          : _L(L), _n(L.n), _e(e), _spec(spec), _emit(std::move(emit)) {
        _up.assign(_n, 0);
        for (Elem x = 0; x < _n; ++x) {
          for (Elem y = 0; y < _n; ++y) {
            if (_L.leq(x, y)) {
              _up[x] |= Mask(1) << y;
            }
          }
        }
      }

      void run() {
        Mask const        full = (Mask(1) << _n) - 1;
        std::vector<Mask> dom(_n * _n, full);
        Elem const        bot = 0;
        for (Elem x = 0; x < _n; ++x) {
          cell(dom, _e, x) &= Mask(1) << x;
          cell(dom, x, _e) &= Mask(1) << x;
          cell(dom, bot, x) &= Mask(1) << bot;
          cell(dom, x, bot) &= Mask(1) << bot;
          if (_spec.idempotent) {
            cell(dom, x, x) &= Mask(1) << x;
          }
          if (_spec.integral) {
            for (Elem y = 0; y < _n; ++y) {
              cell(dom, x, y) &= _L.down[_L.meet[x][y]];
            }
          }
        }
        if (propagate(dom)) {
          branch(dom);
        }
      }

     private:
      Mask& cell(std::vector<Mask>& d, Elem x, Elem y) const {
        return d[x * _n + y];
      }

      bool single(Mask m) const {
        return m != 0 && (m & (m - 1)) == 0;
      }

      // Restricts d[i] to `allowed`; returns false on wipe-out.
      bool restrict(std::vector<Mask>& d, std::size_t i, Mask allowed, bool& changed) const {
        Mask const next = d[i] & allowed;
        if (next != d[i]) {
          d[i]    = next;
          changed = true;
        }
        return next != 0;
      }

      bool propagate(std::vector<Mask>& d) const {
        std::size_t const n = _n;
        bool              changed = true;
        while (changed) {
          changed = false;
          for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) {
              std::size_t const i = x * n + y;
              if (d[i] == 0) {
                return false;
              }
              if (_spec.commutative) {
                if (!restrict(d, i, d[y * n + x], changed)
                    || !restrict(d, y * n + x, d[i], changed)) {
                  return false;
                }
              }
              if (!single(d[i])) {
                continue;
              }
              Elem const v = static_cast<Elem>(lowest(d[i]));
              // monotone in both arguments
              for (Elem z = 0; z < n; ++z) {
                if (_L.leq(y, z) && !restrict(d, x * n + z, _up[v], changed)) {
                  return false;
                }
                if (_L.leq(z, y) && !restrict(d, x * n + z, _L.down[v], changed)) {
                  return false;
                }
                if (_L.leq(x, z) && !restrict(d, z * n + y, _up[v], changed)) {
                  return false;
                }
                if (_L.leq(z, x) && !restrict(d, z * n + y, _L.down[v], changed)) {
                  return false;
                }
              }
              for (Elem z = 0; z < n; ++z) {
                // x(y v z) = xy v xz and (y v z)x = yx v zx
                if (single(d[x * n + z])) {
                  Elem const w = static_cast<Elem>(lowest(d[x * n + z]));
                  if (!restrict(d, x * n + _L.join[y][z], Mask(1) << _L.join[v][w], changed)) {
                    return false;
                  }
                }
                if (single(d[z * n + y])) {
                  Elem const w = static_cast<Elem>(lowest(d[z * n + y]));
                  if (!restrict(d, _L.join[x][z] * n + y, Mask(1) << _L.join[v][w], changed)) {
                    return false;
                  }
                }
                // (xy)z = x(yz)
                if (single(d[y * n + z])) {
                  Elem const w = static_cast<Elem>(lowest(d[y * n + z]));
                  std::size_t const outer = v * n + z, inner = x * n + w;
                  if (!restrict(d, outer, d[inner], changed)
                      || !restrict(d, inner, d[outer], changed)) {
                    return false;
                  }
                }
              }
            }
          }
        }
        return true;
      }

      void branch(std::vector<Mask> const& d) {
        std::size_t best = d.size();
        int         best_count = 64;
        for (std::size_t i = 0; i < d.size(); ++i) {
          int const c = popcount(d[i]);
          if (c > 1 && c < best_count) {
            best       = i;
            best_count = c;
          }
        }
        if (best == d.size()) {
          leaf(d);
          return;
        }
        for (Mask m = d[best]; m != 0; m &= m - 1) {
          std::vector<Mask> next = d;
          next[best]             = Mask(1) << lowest(m);
          if (propagate(next)) {
            branch(next);
          }
        }
      }

      void leaf(std::vector<Mask> const& d) {
        std::size_t const n = _n;
        Matrix            prod(n, std::vector<Elem>(n));
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            prod[x][y] = static_cast<Elem>(lowest(d[x * n + y]));
          }
        }
        auto res = residuals_from_product(n, _L.join, _L.meet, prod);
        if (!std::holds_alternative<Residuals>(res)) {
          throw InternalError("product search produced a non-residuated table");
        }
        auto& r = std::get<Residuals>(res);
        RawAlgebra raw;
        raw.size = n;
        raw.join = _L.join;
        raw.meet = _L.meet;
        raw.prod = prod;
        raw.ldiv = r.ldiv;
        raw.rdiv = r.rdiv;
        raw.unit = _e;
        if (_spec.bounded) {
          raw.bottom = 0;
        }
        bool const want_invol = _spec.involutive || _spec.odd;
        if (!want_invol) {
          offer(raw, std::nullopt, prod);
          return;
        }
        for (Elem f = 0; f < n; ++f) {
          if (_spec.odd && f != _e) {
            continue;
          }
          bool ok = true;
          for (Elem x = 0; x < n && ok; ++x) {
            ok = r.ldiv[x][f] == r.rdiv[f][x] && r.ldiv[r.ldiv[x][f]][f] == x;
          }
          if (!ok) {
            continue;
          }
          RawAlgebra with = raw;
          with.invol.emplace(n);
          for (Elem x = 0; x < n; ++x) {
            (*with.invol)[x] = r.ldiv[x][f];
          }
          offer(std::move(with), f, prod);
        }
      }

      void offer(RawAlgebra raw, std::optional<Elem> f, Matrix const& prod) {
        std::vector<std::uint8_t> best;
        std::vector<std::uint8_t> key;
        for (auto const& s : _L.automorphisms) {
          key.assign(2 + _n * _n, 0);
          key[0] = static_cast<std::uint8_t>(s[_e]);
          key[1] = static_cast<std::uint8_t>(f ? s[*f] : _n);
          for (Elem x = 0; x < _n; ++x) {
            for (Elem y = 0; y < _n; ++y) {
              key[2 + s[x] * _n + s[y]] = static_cast<std::uint8_t>(s[prod[x][y]]);
            }
          }
          if (best.empty() || key < best) {
            best = key;
          }
        }
        _emit(Candidate{std::move(best), std::move(raw)});
      }

      Lattice const&                   _L;
      std::size_t                      _n;
      Elem                             _e;
      SearchSpec const&                _spec;
      std::function<void(Candidate&&)> _emit;
      std::vector<Mask>                _up;
    };

  }  // namespace

  std::vector<Matrix> enumerate_lattices(std::size_t n) {
    if (n == 0) {
      throw PreconditionError("lattices need at least one element");
    }
    if (n > 16) {
      throw PreconditionError("lattice enumeration is limited to 16 elements");
    }
    std::vector<Matrix> out;
    for (auto& L : lattices(n)) {
      out.push_back(std::move(L.meet));
    }
    return out;
  }

  std::size_t enumerate_residuated_lattices(SearchSpec const&                    spec,
                                            std::function<bool(Algebra const&)> sink) {
    if (spec.size == 0) {
      throw PreconditionError("size must be at least 1");
    }
    if (spec.size > spec.bound) {
      throw PreconditionError("size " + std::to_string(spec.size) + " exceeds the bound "
                              + std::to_string(spec.bound));
    }
    if (spec.size > 16) {
      throw PreconditionError("enumeration is limited to 16 elements");
    }
    std::size_t const n       = spec.size;
    std::size_t       seen    = 0;
    std::size_t       emitted = 0;
    bool              stop    = false;

    auto deliver = [&](std::set<std::vector<std::uint8_t>>& keys, Candidate&& c) {
      if (stop) {
        return;
      }
      if (spec.canonical_only && !keys.insert(c.key).second) {
        return;
      }
      if (seen++ < spec.skip) {
        return;
      }
      c.raw.name = "RL" + std::to_string(n) + "." + std::to_string(seen - 1);
      Algebra A  = [&] {
        try {
          return Algebra::certify(std::move(c.raw));
        } catch (ValidationError const& e) {
          throw InternalError(std::string("enumerated table fails validation: ") + e.what());
        }
      }();
      ++emitted;
      if (!sink(A) || (spec.limit && emitted >= *spec.limit)) {
        stop = true;
      }
    };

    for (auto const& L : lattices(n)) {
      if (stop) {
        break;
      }
      if (spec.distributive && !distributive(L)) {
        continue;
      }
      std::vector<Elem> units;
      for (Elem e = 0; e < n; ++e) {
        if (!spec.integral || e == n - 1) {
          units.push_back(e);
        }
      }
      std::set<std::vector<std::uint8_t>> keys;
      if (spec.threads <= 1) {
        for (Elem e : units) {
          if (stop) {
            break;
          }
          ProductSearch(L, e, spec, [&](Candidate&& c) { deliver(keys, std::move(c)); }).run();
        }
        continue;
      }
      std::vector<std::future<std::vector<Candidate>>> jobs;
      for (Elem e : units) {
        jobs.push_back(std::async(std::launch::async, [&L, e, &spec] {
          std::vector<Candidate> found;
          ProductSearch(L, e, spec, [&](Candidate&& c) { found.push_back(std::move(c)); }).run();
          return found;
        }));
      }
      for (auto& j : jobs) {
        for (auto& c : j.get()) {
          deliver(keys, std::move(c));
        }
      }
    }
    return emitted;
  }

  std::vector<Algebra> enumerate_all(SearchSpec const& spec) {
    std::vector<Algebra> out;
    enumerate_residuated_lattices(spec, [&](Algebra const& A) {
      out.push_back(A);
      return true;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  namespace {

    constexpr Elem UNSET = static_cast<Elem>(-1);

    class HomSearch {
     public:
      HomSearch(Algebra const& A, Algebra const& B, Signature sig, MorphismKind kind,
                std::size_t limit)
          : _A(A), _B(B), _sig(sig), _kind(kind), _limit(limit) {}

      std::vector<Morphism> run() {
        std::vector<Elem> h(_A.size(), UNSET);
        if (_kind == MorphismKind::iso && _A.size() != _B.size()) {
          return {};
        }
        if (_kind != MorphismKind::hom && _A.size() > _B.size()) {
          return {};
        }
        if (_sig.unit && !seed(h, _A.unit_opt(), _B.unit_opt())) {
          return {};
        }
        if (_sig.bottom && !seed(h, _A.bottom_opt(), _B.bottom_opt())) {
          return {};
        }
        if ((_sig.invol) && (!_A.involutive() || !_B.involutive())) {
          return {};
        }
        branch(h);
        std::sort(_out.begin(), _out.end(),
                  [](Morphism const& a, Morphism const& b) { return a.table < b.table; });
        return std::move(_out);
      }

     private:
      bool seed(std::vector<Elem>& h, std::optional<Elem> a, std::optional<Elem> b) {
        if (!a || !b) {
          return false;
        }
        return assign(h, *a, *b);
      }

      bool assign(std::vector<Elem>& h, Elem x, Elem v) {
        std::vector<std::pair<Elem, Elem>> queue{{x, v}};
        while (!queue.empty()) {
          auto [a, b] = queue.back();
          queue.pop_back();
          if (h[a] != UNSET) {
            if (h[a] != b) {
              return false;
            }
            continue;
          }
          if (_kind != MorphismKind::hom) {
            for (Elem y = 0; y < h.size(); ++y) {
              if (h[y] == b) {
                return false;
              }
            }
          }
          h[a] = b;
          if (_sig.invol) {
            queue.emplace_back(_A.neg(a), _B.neg(b));
          }
          for (Elem y = 0; y < h.size(); ++y) {
            if (h[y] == UNSET) {
              continue;
            }
            Elem const c = h[y];
            auto both = [&](bool on, auto opA, auto opB) {
              if (on) {
                queue.emplace_back(opA(a, y), opB(b, c));
                queue.emplace_back(opA(y, a), opB(c, b));
              }
            };
            both(
                _sig.join, [&](Elem p, Elem q) { return _A.join(p, q); },
                [&](Elem p, Elem q) { return _B.join(p, q); });
            both(
                _sig.meet, [&](Elem p, Elem q) { return _A.meet(p, q); },
                [&](Elem p, Elem q) { return _B.meet(p, q); });
            both(
                _sig.prod, [&](Elem p, Elem q) { return _A.prod(p, q); },
                [&](Elem p, Elem q) { return _B.prod(p, q); });
            both(
                _sig.ldiv, [&](Elem p, Elem q) { return _A.ldiv(p, q); },
                [&](Elem p, Elem q) { return _B.ldiv(p, q); });
            both(
                _sig.rdiv, [&](Elem p, Elem q) { return _A.rdiv(p, q); },
                [&](Elem p, Elem q) { return _B.rdiv(p, q); });
            if ((_sig.join || _sig.meet) && (_A.leq(a, y) && !_B.leq(b, c))) {
              return false;
            }
            if ((_sig.join || _sig.meet) && (_A.leq(y, a) && !_B.leq(c, b))) {
              return false;
            }
          }
        }
        return true;
      }

      void branch(std::vector<Elem> const& h) {
        if (_limit != 0 && _out.size() >= _limit) {
          return;
        }
        auto it = std::find(h.begin(), h.end(), UNSET);
        if (it == h.end()) {
          Morphism f{_A.name(), _B.name(), h, _sig};
          if (_kind == MorphismKind::iso && !f.surjective(_B.size())) {
            return;
          }
          _out.push_back(std::move(f));
          return;
        }
        Elem const x = static_cast<Elem>(it - h.begin());
        for (Elem v = 0; v < _B.size(); ++v) {
          std::vector<Elem> next = h;
          if (assign(next, x, v)) {
            branch(next);
          }
        }
      }

      Algebra const&        _A;
      Algebra const&        _B;
      Signature             _sig;
      MorphismKind          _kind;
      std::size_t           _limit;
      std::vector<Morphism> _out;
    };

  }  // namespace

  std::vector<Morphism> find_homomorphisms(Algebra const& A,
                                           Algebra const& B,
                                           Signature      sig,
                                           MorphismKind   kind,
                                           std::size_t    limit) {
    return HomSearch(A, B, sig, kind, limit).run();
  }

  std::optional<Morphism> find_isomorphism(Algebra const& A, Algebra const& B) {
    if (A.size() != B.size() || A.has_unit() != B.has_unit()
        || A.involutive() != B.involutive() || A.has_bottom() != B.has_bottom()) {
      return std::nullopt;
    }
    Signature sig = Signature::residuated_lattice();
    sig.unit      = A.has_unit();
    sig.invol     = A.involutive();
    sig.bottom    = A.has_bottom();
    auto found    = find_homomorphisms(A, B, sig, MorphismKind::iso, 1);
    if (found.empty()) {
      return std::nullopt;
    }
    return found.front();
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical form
  ////////////////////////////////////////////////////////////////////////

  Algebra relabel(Algebra const& A, std::vector<Elem> const& perm) {
    std::size_t const n = A.size();
    if (perm.size() != n) {
      throw PreconditionError("permutation has the wrong length");
    }
    RawAlgebra r;
    r.name = A.name();
    r.size = n;
    r.join.assign(n, std::vector<Elem>(n));
    r.meet = r.prod = r.join;
    r.ldiv = r.join;
    r.rdiv = r.join;
    r.names.assign(n, "");
    for (Elem x = 0; x < n; ++x) {
      r.names[perm[x]] = A.element_name(x);
      for (Elem y = 0; y < n; ++y) {
        r.join[perm[x]][perm[y]]    = perm[A.join(x, y)];
        r.meet[perm[x]][perm[y]]    = perm[A.meet(x, y)];
        r.prod[perm[x]][perm[y]]    = perm[A.prod(x, y)];
        (*r.ldiv)[perm[x]][perm[y]] = perm[A.ldiv(x, y)];
        (*r.rdiv)[perm[x]][perm[y]] = perm[A.rdiv(x, y)];
      }
    }
    if (A.has_unit()) {
      r.unit = perm[A.unit()];
    }
    if (A.has_bottom()) {
      r.bottom = perm[A.bottom()];
    }
    if (A.involutive()) {
      r.invol.emplace(n);
      for (Elem x = 0; x < n; ++x) {
        (*r.invol)[perm[x]] = perm[A.neg(x)];
      }
    }
    return Algebra::certify(std::move(r));
  }

  namespace {

    class Canonizer {
     public:
      explicit Canonizer(Algebra const& A) : _A(A), _n(A.size()) {}

      std::vector<Elem> run() {
        std::vector<int> colour(_n, 0);
        for (Elem x = 0; x < _n; ++x) {
          int c = 0;
          if (_A.has_unit() && _A.unit() == x) {
            c |= 1;
          }
          if (_A.has_bottom() && _A.bottom() == x) {
            c |= 2;
          }
          colour[x] = c;
        }
        refine(colour);
        search(colour);
        return _best_perm;
      }

     private:
      void refine(std::vector<int>& colour) const {
        std::size_t classes = count(colour);
        while (true) {
          std::vector<std::vector<std::int64_t>> sig(_n);
          for (Elem x = 0; x < _n; ++x) {
            auto& s = sig[x];
            s.push_back(colour[x]);
            s.push_back(_A.involutive() ? colour[_A.neg(x)] : -1);
            std::vector<std::int64_t> rel;
            for (Elem y = 0; y < _n; ++y) {
              std::int64_t t = colour[y];
              t              = t * 64 + colour[_A.prod(x, y)];
              t              = t * 64 + colour[_A.prod(y, x)];
              t              = t * 64 + colour[_A.meet(x, y)];
              t              = t * 64 + colour[_A.join(x, y)];
              t              = t * 4 + (_A.leq(x, y) ? 2 : 0) + (_A.leq(y, x) ? 1 : 0);
              rel.push_back(t);
            }
            std::sort(rel.begin(), rel.end());
            s.insert(s.end(), rel.begin(), rel.end());
          }
          auto sorted = sig;
          std::sort(sorted.begin(), sorted.end());
          sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
          for (Elem x = 0; x < _n; ++x) {
            colour[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[x])
                                         - sorted.begin());
          }
          std::size_t const now = sorted.size();
          if (now == classes) {
            return;
          }
          classes = now;
        }
      }

      static std::size_t count(std::vector<int> const& colour) {
        std::set<int> s(colour.begin(), colour.end());
        return s.size();
      }

      void search(std::vector<int> const& colour) {
        if (count(colour) == _n) {
          std::vector<Elem> perm(_n);
          for (Elem x = 0; x < _n; ++x) {
            perm[x] = static_cast<Elem>(colour[x]);
          }
          auto key = encode(perm);
          if (_best_key.empty() || key < _best_key) {
            _best_key  = std::move(key);
            _best_perm = std::move(perm);
          }
          return;
        }
        // first non-singleton cell, by colour
        std::map<int, std::vector<Elem>> cells;
        for (Elem x = 0; x < _n; ++x) {
          cells[colour[x]].push_back(x);
        }
        std::vector<Elem> const* target = nullptr;
        for (auto const& [c, members] : cells) {
          if (members.size() > 1) {
            target = &members;
            break;
          }
        }
        for (Elem v : *target) {
          std::vector<int> next(_n);
          for (Elem x = 0; x < _n; ++x) {
            next[x] = 2 * colour[x] + (x == v ? 0 : 1);
          }
          refine(next);
          search(next);
        }
      }

      std::vector<Elem> encode(std::vector<Elem> const& perm) const {
        std::vector<Elem> key(2 * _n * _n + 3 + _n, 0);
        std::size_t const base = 2 * _n * _n;
        for (Elem x = 0; x < _n; ++x) {
          for (Elem y = 0; y < _n; ++y) {
            key[perm[x] * _n + perm[y]]           = perm[_A.meet(x, y)];
            key[_n * _n + perm[x] * _n + perm[y]] = perm[_A.prod(x, y)];
          }
          key[base + 3 + perm[x]] = _A.involutive() ? perm[_A.neg(x)] : _n;
        }
        key[base]     = _A.has_unit() ? perm[_A.unit()] : _n;
        key[base + 1] = _A.has_bottom() ? perm[_A.bottom()] : _n;
        key[base + 2] = _A.involutive() ? 1 : 0;
        return key;
      }

      Algebra const&    _A;
      std::size_t       _n;
      std::vector<Elem> _best_key;
      std::vector<Elem> _best_perm;
    };

  }  // namespace

  Algebra canonical_form(Algebra const& A) {
    auto const perm = Canonizer(A).run();
    Algebra    C    = relabel(A, perm);
    return C.with_names(default_names(A.size()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subalgebras
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::uint64_t closure(Algebra const& A, Signature const& sig, std::uint64_t s) {
      std::size_t const n = A.size();
      while (true) {
        std::uint64_t next = s;
        for (Elem x = 0; x < n; ++x) {
          if (!((s >> x) & 1U)) {
            continue;
          }
          if (sig.invol && A.involutive()) {
            next |= std::uint64_t(1) << A.neg(x);
          }
          for (Elem y = 0; y < n; ++y) {
            if (!((s >> y) & 1U)) {
              continue;
            }
            auto add = [&](bool on, Elem r) {
              if (on) {
                next |= std::uint64_t(1) << r;
              }
            };
            add(sig.join, A.join(x, y));
            add(sig.meet, A.meet(x, y));
            add(sig.prod, A.prod(x, y));
            add(sig.ldiv, A.ldiv(x, y));
            add(sig.rdiv, A.rdiv(x, y));
          }
        }
        if (next == s) {
          return s;
        }
        s = next;
      }
    }

  }  // namespace

  std::vector<Subset> subalgebras(Algebra const& A, Signature sig) {
    std::size_t const n = A.size();
    if (n > 64) {
      throw PreconditionError("subalgebra search is limited to 64 elements");
    }
    std::uint64_t seed = 0;
    if (sig.unit && A.has_unit()) {
      seed |= std::uint64_t(1) << A.unit();
    }
    if (sig.bottom && A.has_bottom()) {
      seed |= std::uint64_t(1) << A.bottom();
    }
    std::set<std::uint64_t>    found;
    std::vector<std::uint64_t> queue;
    auto                       push = [&](std::uint64_t s) {
      if (s != 0 && found.insert(s).second) {
        queue.push_back(s);
      }
    };
    if (seed != 0) {
      push(closure(A, sig, seed));
    } else {
      for (Elem x = 0; x < n; ++x) {
        push(closure(A, sig, std::uint64_t(1) << x));
      }
    }
    while (!queue.empty()) {
      std::uint64_t const s = queue.back();
      queue.pop_back();
      for (Elem x = 0; x < n; ++x) {
        if (!((s >> x) & 1U)) {
          push(closure(A, sig, s | (std::uint64_t(1) << x)));
        }
      }
    }
    std::vector<Subset> out;
    for (std::uint64_t s : found) {
      Subset S(A.name(), n);
      for (Elem x = 0; x < n; ++x) {
        if ((s >> x) & 1U) {
          S.insert(x);
        }
      }
      out.push_back(std::move(S));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Algebra subalgebra(Algebra const& A, Subset const& S, std::string name) {
    auto const        elems = S.elements();
    std::size_t const m     = elems.size();
    if (m == 0) {
      throw PreconditionError("empty subset");
    }
    std::vector<int> idx(A.size(), -1);
    for (std::size_t i = 0; i < m; ++i) {
      idx[elems[i]] = static_cast<int>(i);
    }
    auto at = [&](Elem x) -> Elem {
      if (idx[x] < 0) {
        throw PreconditionError("subset is not closed: " + A.element_name(x) + " is missing");
      }
      return static_cast<Elem>(idx[x]);
    };
    RawAlgebra r;
    r.name = std::move(name);
    r.size = m;
    r.join.assign(m, std::vector<Elem>(m));
    r.meet = r.prod = r.join;
    r.ldiv = r.join;
    r.rdiv = r.join;
    for (Elem i = 0; i < m; ++i) {
      r.names.push_back(A.element_name(elems[i]));
      for (Elem j = 0; j < m; ++j) {
        Elem const x = elems[i], y = elems[j];
        r.join[i][j]    = at(A.join(x, y));
        r.meet[i][j]    = at(A.meet(x, y));
        r.prod[i][j]    = at(A.prod(x, y));
        (*r.ldiv)[i][j] = at(A.ldiv(x, y));
        (*r.rdiv)[i][j] = at(A.rdiv(x, y));
      }
    }
    if (A.has_unit()) {
      r.unit = at(A.unit());
    }
    if (A.has_bottom() && idx[A.bottom()] >= 0) {
      r.bottom = at(A.bottom());
    }
    if (A.involutive()) {
      r.invol.emplace(m);
      for (Elem i = 0; i < m; ++i) {
        (*r.invol)[i] = at(A.neg(elems[i]));
      }
    }
    return Algebra::certify(std::move(r));
  }

}  // namespace twistlab
