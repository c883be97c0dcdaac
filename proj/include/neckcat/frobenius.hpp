#pragma once

// Set-level Frobenius templicial objects: levelwise quiver sets with inner
// faces, degeneracies, comultiplications, counit, and an associative
// multiplication Z compatible with the comultiplications.  Two concrete
// models: the nerve of a finite category with concatenation, and the free
// Frobenius object on the circle (interval maps out of the ordinals).

#include "fincat.hpp"

namespace neckcat {

// strings of composable arrows
struct CatNerveFrob {
  FinCategory C;
  bool sabotage = false;  // deliberately wrong multiplication, for witnesses

  struct E {
    int start = 0;  // source object; redundant when arrows are present
    std::vector<int> arrows;
    auto operator<=>(const E&) const = default;
  };
  int vertex(const E& x, int k) const {
    return k == 0 ? src(x) : C.arrows[size_t(x.arrows[size_t(k - 1)])].dst;
  }
  int src(const E& x) const {
    return x.arrows.empty() ? x.start : C.arrows[size_t(x.arrows.front())].src;
  }
  int dst(const E& x) const {
    return x.arrows.empty() ? x.start : C.arrows[size_t(x.arrows.back())].dst;
  }
  std::vector<E> level(int n) const {
    std::vector<E> out;
    if (n == 0) {
      for (int i = 0; i < C.nobj; ++i) out.push_back(E{i, {}});
      return out;
    }
    E cur;
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        cur.start = src(cur);
        out.push_back(cur);
        return;
      }
      for (size_t a = 0; a < C.arrows.size(); ++a) {
        if (!cur.arrows.empty() && C.arrows[size_t(cur.arrows.back())].dst != C.arrows[a].src)
          continue;
        cur.arrows.push_back(int(a));
        rec(i + 1);
        cur.arrows.pop_back();
      }
    };
    rec(0);
    return out;
  }
  // contravariant action of f: [m] -> [n] in fint
  E act(const IntervalMap& f, const E& x) const {
    E out;
    if (f.dst_rank != int(x.arrows.size())) throw invalid_input("level mismatch");
    out.start = src(x);
    for (int i = 1; i <= f.src_rank; ++i) {
      int lo = f(i - 1), hi = f(i);
      if (lo == hi) {
        out.arrows.push_back(C.id_of[size_t(vertex(x, lo))]);
      } else {
        int acc = x.arrows[size_t(lo)];
        for (int k = lo + 1; k < hi; ++k) acc = C.compose(acc, x.arrows[size_t(k)]);
        out.arrows.push_back(acc);
      }
    }
    return out;
  }
  std::pair<E, E> split(int k, const E& x) const {
    E a, b;
    a.arrows.assign(x.arrows.begin(), x.arrows.begin() + k);
    b.arrows.assign(x.arrows.begin() + k, x.arrows.end());
    a.start = src(x);
    b.start = vertex(x, k);
    return {a, b};
  }
  E concat(const E& x, const E& y) const {
    if (dst(x) != src(y)) throw invalid_input("non-composable concatenation");
    E out = x;
    out.start = src(x);
    for (int a : y.arrows) out.arrows.push_back(a);
    if (sabotage && x.arrows.size() == 1 && y.arrows.size() == 1) {
      // endpoint-correct but violates the comultiplication law
      E bad;
      bad.start = src(x);
      bad.arrows = {C.compose(x.arrows[0], y.arrows[0]), C.id_of[size_t(dst(y))]};
      return bad;
    }
    return out;
  }
  E unit_at(int v) const { return E{v, {}}; }
};

// the free Frobenius object on the circle: X_n = fint([n], [p]) for p <= cap
struct CircleFrob {
  int pcap = 8;

  struct E {
    IntervalMap f;  // [n] -> [p]
    auto operator<=>(const E&) const = default;
  };
  int src(const E&) const { return 0; }
  int dst(const E&) const { return 0; }
  std::vector<E> level(int n) const {
    std::vector<E> out;
    for (int p = 0; p <= pcap; ++p)
      for (auto& f : enumerate_interval_maps(n, p)) out.push_back(E{f});
    return out;
  }
  E act(const IntervalMap& g, const E& x) const { return E{compose_interval(g, x.f)}; }
  std::pair<E, E> split(int k, const E& x) const {
    int c = x.f(k);
    std::vector<int> v1(x.f.values.begin(), x.f.values.begin() + k + 1);
    std::vector<int> v2;
    for (int i = k; i <= x.f.src_rank; ++i) v2.push_back(x.f(i) - c);
    return {E{IntervalMap(k, c, std::move(v1))},
            E{IntervalMap(x.f.src_rank - k, x.f.dst_rank - c, std::move(v2))}};
  }
  E concat(const E& x, const E& y) const { return E{x.f.wedge(y.f)}; }
  E unit_at(int) const { return E{IntervalMap::identity(0)}; }
};

struct FrobeniusReport {
  bool natural = true, unital = true, associative = true, frobenius = true, mu_z_identity = true;
  std::string witness;
  long checks = 0;
  bool ok() const { return natural && unital && associative && frobenius && mu_z_identity; }
};

template <class M>
FrobeniusReport frobenius_check(const M& model, int nmax) {
  FrobeniusReport rep;
  auto fail = [&](const std::string& what) {
    if (rep.witness.empty()) rep.witness = what;
  };
  std::vector<std::vector<typename M::E>> X;
  for (int n = 0; n <= nmax; ++n) X.push_back(model.level(n));

  // inner coface and codegeneracy generators of fint at each level
  auto fint_gens = [&](int n) {
    std::vector<IntervalMap> out;
    for (int j = 1; j < n; ++j) out.push_back(IntervalMap::coface(n, j));
    for (int i = 0; i <= n; ++i) out.push_back(IntervalMap::codegeneracy(n, i));
    return out;
  };

  for (int p = 0; p <= nmax; ++p)
    for (int q = 0; p + q <= nmax; ++q)
      for (auto& x : X[size_t(p)])
        for (auto& y : X[size_t(q)]) {
          if (model.dst(x) != model.src(y)) continue;
          auto z = model.concat(x, y);
          ++rep.checks;
          // unit law
          if (p == 0 && !(z == y)) {
            rep.unital = false;
            fail("unit law Z(e, y) != y");
          }
          if (q == 0 && !(z == x)) {
            rep.unital = false;
            fail("unit law Z(x, e) != x");
          }
          // naturality in both fint slots
          for (auto& g : fint_gens(p)) {
            if (g.src_rank + q > nmax) continue;
            auto lhs = model.act(g.wedge(IntervalMap::identity(q)), z);
            auto rhs = model.concat(model.act(g, x), y);
            if (!(lhs == rhs)) {
              rep.natural = false;
              fail("Z not natural in the first slot");
            }
          }
          for (auto& g : fint_gens(q)) {
            if (p + g.src_rank > nmax) continue;
            auto lhs = model.act(IntervalMap::identity(p).wedge(g), z);
            auto rhs = model.concat(x, model.act(g, y));
            if (!(lhs == rhs)) {
              rep.natural = false;
              fail("Z not natural in the second slot");
            }
          }
          // associativity
          for (int r = 0; p + q + r <= nmax; ++r)
            for (auto& w : X[size_t(r)]) {
              if (model.dst(y) != model.src(w)) continue;
              if (!(model.concat(model.concat(x, y), w) ==
                    model.concat(x, model.concat(y, w)))) {
                rep.associative = false;
                fail("Z not associative");
              }
            }
          // Frobenius identities
          int n = p + q;
          for (int k = 0; k <= n; ++k) {
            int l = n - k;
            auto [zl, zr] = model.split(k, z);
            if (p <= k) {
              auto [y1, y2] = model.split(k - p, y);
              auto el = model.concat(x, y1);
              if (!(zl == el && zr == y2)) {
                rep.frobenius = false;
                fail("Frobenius identity (p <= k) fails");
              }
            }
            if (p >= k) {
              auto [x1, x2] = model.split(k, x);
              auto er = model.concat(x2, y);
              if (!(zl == x1 && zr == er)) {
                rep.frobenius = false;
                fail("Frobenius identity (p >= k) fails");
              }
            }
            if (k == p && !(zl == x && zr == y)) {
              rep.mu_z_identity = false;
              fail("mu . Z is not the identity");
            }
          }
        }
  return rep;
}

}  // namespace neckcat
