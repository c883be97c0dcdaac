#pragma once

// The generating diagrams assembled into enriched categories: the
// cosimplicial objects Phi(D)^n for D in {const, Duskin, hc, dg, cub},
// their validators, and the characterizing properties of diagrams that
// arise this way.

#include "cubcat.hpp"
#include "dgcat.hpp"
#include "twocat.hpp"

namespace neckcat {

// linear poset [n] as mask-tuples 0 <= {0} <= {0,1} <= ...
inline Pos chain_poset(int n) {
  Pos p;
  for (int i = 0; i <= n; ++i) p.elems.push_back({mask_range(0, i - 1)});
  return p;
}

inline FinCategory phi_const(int n) { return FinCategory::from_poset(chain_poset(n)); }

// ---------------------------------------------------------------------------
// Simplicial categories with poset-nerve homs.  A level-r simplex of the
// hom from i to j is a monotone chain of r+1 elements of the cube poset;
// composition is the pointwise union with shift.

struct PhiHc {
  int n = 0, cap = 0;
  std::vector<Pos> pos;  // index i*(n+1)+j for i <= j

  const Pos& pos_at(int i, int j) const { return pos[size_t(i * (n + 1) + j)]; }

  using Chain = std::vector<int>;  // element indices, monotone, length r+1

  std::vector<Chain> simplices(int i, int j, int r) const {
    const Pos& p = pos_at(i, j);
    std::vector<Chain> out;
    Chain cur;
    std::function<void()> rec = [&]() {
      if (int(cur.size()) == r + 1) {
        out.push_back(cur);
        return;
      }
      for (size_t e = 0; e < p.elems.size(); ++e)
        if (cur.empty() || Pos::leq(p.elems[size_t(cur.back())], p.elems[e])) {
          cur.push_back(int(e));
          rec();
          cur.pop_back();
        }
    };
    rec();
    return out;
  }

  Chain compose(int i, int j, int k, const Chain& x, const Chain& y) const {
    const Pos &p1 = pos_at(i, j), &p2 = pos_at(j, k), &p3 = pos_at(i, k);
    Chain out;
    for (size_t r = 0; r < x.size(); ++r) {
      Mask u = p1.elems[size_t(x[r])][0] | (p2.elems[size_t(y[r])][0] << (j - i));
      out.push_back(p3.index_of({u}));
    }
    return out;
  }

  static Chain reindex(const Chain& x, const MonoMap& alpha) {
    Chain out;
    for (int v : alpha.values) out.push_back(x[size_t(v)]);
    return out;
  }

  // composition is a simplicial map and is associative and unital
  void validate() const {
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int k = j; k <= n; ++k)
          for (int r = 0; r <= cap; ++r) {
            auto xs = simplices(i, j, r);
            auto ys = simplices(j, k, r);
            for (auto& x : xs)
              for (auto& y : ys) {
                Chain c = compose(i, j, k, x, y);
                for (auto& alpha : enumerate_mono_maps(std::max(r - 1, 0), r)) {
                  Chain lhs = reindex(c, alpha);
                  Chain rhs = compose(i, j, k, reindex(x, alpha), reindex(y, alpha));
                  if (lhs != rhs) throw invalid_input("hc composition is not simplicial");
                }
                for (int l = k; l <= n; ++l)
                  for (auto& z : simplices(k, l, r))
                    if (compose(i, k, l, c, z) !=
                        compose(i, j, l, x, compose(j, k, l, y, z)))
                      throw invalid_input("hc composition associativity");
              }
            // units: the constant chain at the unique element of pos(i,i)
            for (auto& x : xs) {
              Chain u(size_t(r) + 1, 0);
              if (compose(i, i, j, u, x) != x || compose(i, j, j, x, u) != x)
                throw invalid_input("hc unit law");
            }
          }
  }
};

inline PhiHc phi_hc(int n, int cap) {
  PhiHc out;
  out.n = n;
  out.cap = cap;
  out.pos.resize(size_t((n + 1) * (n + 1)));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      out.pos[size_t(i * (n + 1) + j)] = Pos::cube(Necklace::simplex(j - i));
  return out;
}

// ---------------------------------------------------------------------------
// Cosimplicial structure: a map f: [m] -> [n] induces on components the
// necklace maps f_{i,j}: Delta^{j-i} -> Delta^{f(j)-f(i)}, k -> f(k+i)-f(i).

inline NecklaceMap phi_component_map(const MonoMap& f, int i, int j) {
  std::vector<int> v;
  for (int k = i; k <= j; ++k) v.push_back(f.values[size_t(k)] - f.values[size_t(i)]);
  int q = f.values[size_t(j)] - f.values[size_t(i)];
  return NecklaceMap(Necklace::simplex(j - i), Necklace::simplex(q),
                     IntervalMap(j - i, q, std::move(v)));
}

// f_{i,j} is functorial: (fg)_{i,j} = g_{f(i),f(j)} . f_{i,j}
inline bool phi_components_functorial(const MonoMap& f, const MonoMap& g) {
  MonoMap fg = compose(f, g);
  for (int i = 0; i <= f.src_rank(); ++i)
    for (int j = i; j <= f.src_rank(); ++j) {
      NecklaceMap lhs = phi_component_map(fg, i, j);
      NecklaceMap rhs = compose(phi_component_map(f, i, j),
                                phi_component_map(g, f.values[size_t(i)], f.values[size_t(j)]));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// The four characterizing properties of cosimplicial categories generated
// by a monoidal necklace diagram, checked on a constructed Phi(D):
//   1. objects are the ordinals,
//   2. homs below the diagonal are initial,
//   3. the unit at n = 0 is an isomorphism,
//   4. inert simplex maps induce isomorphisms on the long hom.
struct PhiProperties {
  bool objects_ok = true, initial_ok = true, unit_ok = true, inert_ok = true;
  bool all() const { return objects_ok && initial_ok && unit_ok && inert_ok; }
};

template <class K>
PhiProperties phi_properties_dg(int nmax, const FieldOf<K>& f) {
  PhiProperties out;
  for (int n = 0; n <= nmax; ++n) {
    PhiDg<K> phi = phi_dg(n, f);
    out.objects_ok = out.objects_ok && (phi.cat.nobj == n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j < i; ++j)
        out.initial_ok = out.initial_ok && phi.cat.at(i, j).total_dim() == 0;
    if (n == 0) out.unit_ok = out.unit_ok && phi.cat.at(0, 0).total_dim() == 1;
  }
  // inert maps [m] -> [n], i -> i + d: the induced map on the long hom is
  // dg of the identity-shaped necklace map, an isomorphism
  for (int m = 0; m <= nmax; ++m)
    for (int n = m; n <= nmax; ++n)
      for (int d = 0; d + m <= n; ++d) {
        MonoMap delta;
        delta.dst_rank = n;
        for (int i = 0; i <= m; ++i) delta.values.push_back(i + d);
        NecklaceMap comp = phi_component_map(delta, 0, m);
        auto src = dg_complex(comp.src, f);
        auto dst = dg_complex(comp.dst, f);
        ChainMap<K> cm = dg_on_map(comp, src, dst);
        for (int deg = 0; deg <= comp.src.dim(); ++deg) {
          Mat<K> mm = cm.at(deg);
          if (mm.rows != mm.cols || rank(mm, f) != mm.rows) out.inert_ok = false;
        }
      }
  return out;
}

// ---------------------------------------------------------------------------
// Validation reports

struct ValidationReport {
  bool valid = true;
  std::string witness;
};

template <class C>
ValidationReport validate_report(const C& cat) {
  ValidationReport r;
  try {
    cat.validate();
  } catch (const std::exception& e) {
    r.valid = false;
    r.witness = e.what();
  }
  return r;
}

}  // namespace neckcat
