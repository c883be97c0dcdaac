#pragma once

// Small dg-categories: hom chain complexes, bilinear degree-zero chain-map
// compositions, and unit cycles.  Composition is written left to right:
// m_{A,B,C}: C(A,B) (x) C(B,C) -> C(A,C).

#include "dgdiagram.hpp"

namespace neckcat {

// Associator permutation between the two iterated tensor layouts.
template <class K>
ChainMap<K> tensor_associator(const ChainComplex<K>& A, const ChainComplex<K>& B,
                              const ChainComplex<K>& C) {
  const FieldOf<K>& f = A.field;
  ChainComplex<K> AB = tensor(A, B), BC = tensor(B, C);
  ChainComplex<K> src = tensor(AB, C), dst = tensor(A, BC);
  std::vector<Mat<K>> comps;
  for (int n = src.lo; n <= src.hi(); ++n) comps.push_back(Mat<K>(dst.dim_at(n), src.dim_at(n), f));
  for (int i = A.lo; i <= A.hi(); ++i)
    for (int j = B.lo; j <= B.hi(); ++j)
      for (int k = C.lo; k <= C.hi(); ++k) {
        int n = i + j + k;
        for (int xi = 0; xi < A.dim_at(i); ++xi)
          for (int yi = 0; yi < B.dim_at(j); ++yi)
            for (int zi = 0; zi < C.dim_at(k); ++zi) {
              int col = tensor_index(AB, C, n, i + j, tensor_index(A, B, i + j, i, xi, yi), zi);
              int row = tensor_index(A, BC, n, i, xi, tensor_index(B, C, j + k, j, yi, zi));
              comps[size_t(n - src.lo)].at(row, col) = f.one();
            }
      }
  return ChainMap<K>(src, dst, std::move(comps));
}

template <class K>
struct DgCategory {
  FieldOf<K> field;
  int nobj = 0;
  std::vector<ChainComplex<K>> hom;                       // i*nobj + j
  std::map<std::pair<int, int>, ChainMap<K>> comp;        // (i,j) then (j,k): key (i*nobj+j, j*nobj+k)
  std::vector<std::vector<K>> unit;                       // cycle in hom(i,i) degree 0

  const ChainComplex<K>& at(int i, int j) const { return hom[size_t(i * nobj + j)]; }
  const ChainMap<K>& comp_at(int i, int j, int k) const {
    return comp.at({i * nobj + j, j * nobj + k});
  }

  void validate() const {
    for (auto& h : hom) h.validate();
    // units are degree-zero cycles
    for (int i = 0; i < nobj; ++i) {
      const ChainComplex<K>& h = at(i, i);
      if (int(unit[size_t(i)].size()) != h.dim_at(0)) throw invalid_input("unit size");
      auto du = h.diff(0).apply(unit[size_t(i)], field);
      for (auto& x : du)
        if (!x.is_zero()) throw invalid_input("unit is not a cycle");
    }
    // unit laws
    for (int i = 0; i < nobj; ++i)
      for (int j = 0; j < nobj; ++j) {
        const ChainComplex<K>& h = at(i, j);
        if (h.total_dim() == 0) continue;
        {
          const ChainMap<K>& m = comp_at(i, i, j);
          ChainComplex<K> t = tensor(at(i, i), h);
          for (int n = h.lo; n <= h.hi(); ++n)
            for (int x = 0; x < h.dim_at(n); ++x) {
              std::vector<K> v(size_t(t.dim_at(n)), field.zero());
              for (int r = 0; r < at(i, i).dim_at(0); ++r) {
                if (unit[size_t(i)][size_t(r)].is_zero()) continue;
                v[size_t(tensor_index(at(i, i), h, n, 0, r, x))] = unit[size_t(i)][size_t(r)];
              }
              auto img = m.at(n).apply(v, field);
              for (int r = 0; r < h.dim_at(n); ++r)
                if (!(img[size_t(r)] == (r == x ? field.one() : field.zero())))
                  throw invalid_input("left unit law fails");
            }
        }
        {
          const ChainMap<K>& m = comp_at(i, j, j);
          ChainComplex<K> t = tensor(h, at(j, j));
          for (int n = h.lo; n <= h.hi(); ++n)
            for (int x = 0; x < h.dim_at(n); ++x) {
              std::vector<K> v(size_t(t.dim_at(n)), field.zero());
              for (int r = 0; r < at(j, j).dim_at(0); ++r) {
                if (unit[size_t(j)][size_t(r)].is_zero()) continue;
                v[size_t(tensor_index(h, at(j, j), n, n, x, r))] = unit[size_t(j)][size_t(r)];
              }
              auto img = m.at(n).apply(v, field);
              for (int r = 0; r < h.dim_at(n); ++r)
                if (!(img[size_t(r)] == (r == x ? field.one() : field.zero())))
                  throw invalid_input("right unit law fails");
            }
        }
      }
    // associativity
    for (int i = 0; i < nobj; ++i)
      for (int j = 0; j < nobj; ++j)
        for (int k = 0; k < nobj; ++k)
          for (int l = 0; l < nobj; ++l) {
            ChainMap<K> lhs = chain_compose(
                tensor_chain_map(comp_at(i, j, k), ChainMap<K>::identity(at(k, l))),
                comp_at(i, k, l));
            ChainMap<K> assoc = tensor_associator(at(i, j), at(j, k), at(k, l));
            ChainMap<K> rhs = chain_compose(
                assoc, chain_compose(
                           tensor_chain_map(ChainMap<K>::identity(at(i, j)), comp_at(j, k, l)),
                           comp_at(i, j, l)));
            if (!(lhs == rhs)) throw invalid_input("associativity fails");
          }
  }

  static DgCategory one_object(const FieldOf<K>& f, const ChainComplex<K>& h,
                               const ChainMap<K>& mult, const std::vector<K>& u) {
    DgCategory c;
    c.field = f;
    c.nobj = 1;
    c.hom = {h};
    c.comp[{0, 0}] = mult;
    c.unit = {u};
    return c;
  }
};

// k in degree zero with multiplication.
template <class K>
DgCategory<K> dg_point(const FieldOf<K>& f) {
  ChainComplex<K> h = ChainComplex<K>::concentrated(f, 0, 1);
  ChainComplex<K> t = tensor(h, h);
  Mat<K> m(1, 1, f);
  m.at(0, 0) = f.one();
  ChainMap<K> mult(t, h, {m});
  return DgCategory<K>::one_object(f, h, mult, {f.one()});
}

// k[eps]/(eps^2) with eps in degree 1 and zero differential.
template <class K>
DgCategory<K> dg_dual_numbers(const FieldOf<K>& f) {
  ChainComplex<K> h(f, 0, {1, 1}, {Mat<K>(1, 1, f)});
  ChainComplex<K> t = tensor(h, h);
  // t dims: deg0 1 (1x1), deg1 2 (1xe, ex1), deg2 1 (exe)
  std::vector<Mat<K>> comps;
  {
    Mat<K> m0(1, 1, f);
    m0.at(0, 0) = f.one();
    Mat<K> m1(1, 2, f);
    m1.at(0, 0) = f.one();
    m1.at(0, 1) = f.one();
    Mat<K> m2(0, 1, f);  // eps . eps = 0, and the hom vanishes in degree 2
    comps = {m0, m1, m2};
  }
  ChainMap<K> mult(t, h, comps);
  return DgCategory<K>::one_object(f, h, mult, {f.one()});
}

// The acyclic interval k --id--> k in degrees 1, 0 with truncated
// polynomial multiplication (x . x = 0).
template <class K>
DgCategory<K> dg_acyclic_interval(const FieldOf<K>& f) {
  Mat<K> d(1, 1, f);
  d.at(0, 0) = f.one();
  ChainComplex<K> h(f, 0, {1, 1}, {d});
  ChainComplex<K> t = tensor(h, h);
  std::vector<Mat<K>> comps;
  {
    Mat<K> m0(1, 1, f);
    m0.at(0, 0) = f.one();
    Mat<K> m1(1, 2, f);
    m1.at(0, 0) = f.one();
    m1.at(0, 1) = f.one();
    Mat<K> m2(0, 1, f);
    comps = {m0, m1, m2};
  }
  ChainMap<K> mult(t, h, comps);
  return DgCategory<K>::one_object(f, h, mult, {f.one()});
}

// Two objects with hom(A,B) an extra one-dimensional piece in the given
// degree; all compositions through it are by scalar multiplication.
template <class K>
DgCategory<K> dg_two_objects(const FieldOf<K>& f, int deg) {
  DgCategory<K> c;
  c.field = f;
  c.nobj = 2;
  ChainComplex<K> unit_h = ChainComplex<K>::concentrated(f, 0, 1);
  ChainComplex<K> arrow_h = ChainComplex<K>::concentrated(f, deg, 1);
  ChainComplex<K> zero_h = ChainComplex<K>::zero(f);
  c.hom = {unit_h, arrow_h, zero_h, unit_h};
  auto scalar_mult = [&](const ChainComplex<K>& a, const ChainComplex<K>& b,
                         const ChainComplex<K>& target) {
    ChainComplex<K> t = tensor(a, b);
    std::vector<Mat<K>> comps;
    for (int n = t.lo; n <= t.hi(); ++n) {
      Mat<K> m(target.dim_at(n), t.dim_at(n), f);
      if (target.dim_at(n) == 1 && t.dim_at(n) == 1) m.at(0, 0) = f.one();
      comps.push_back(std::move(m));
    }
    return ChainMap<K>(t, target, std::move(comps));
  };
  c.comp[{0 * 2 + 0, 0 * 2 + 0}] = scalar_mult(unit_h, unit_h, unit_h);
  c.comp[{0 * 2 + 0, 0 * 2 + 1}] = scalar_mult(unit_h, arrow_h, arrow_h);
  c.comp[{0 * 2 + 1, 1 * 2 + 1}] = scalar_mult(arrow_h, unit_h, arrow_h);
  c.comp[{0 * 2 + 1, 1 * 2 + 0}] = scalar_mult(arrow_h, zero_h, unit_h);
  c.comp[{1 * 2 + 0, 0 * 2 + 0}] = scalar_mult(zero_h, unit_h, zero_h);
  c.comp[{1 * 2 + 0, 0 * 2 + 1}] = scalar_mult(zero_h, arrow_h, unit_h);
  c.comp[{1 * 2 + 1, 1 * 2 + 1}] = scalar_mult(unit_h, unit_h, unit_h);
  c.comp[{1 * 2 + 1, 1 * 2 + 0}] = scalar_mult(unit_h, zero_h, zero_h);
  c.unit = {{f.one()}, {f.one()}};
  return c;
}

// All-zero homs (the empty dg-category on one object).
template <class K>
DgCategory<K> dg_zero_homs(const FieldOf<K>& f) {
  ChainComplex<K> z = ChainComplex<K>::zero(f);
  ChainComplex<K> t = tensor(z, z);
  ChainMap<K> mult = ChainMap<K>::zero_map(t, z);
  return DgCategory<K>::one_object(f, z, mult, {});
}

// The cosimplicial dg-category of the dg diagram.
template <class K>
struct PhiDg {
  int n = 0;
  std::vector<DgObject<K>> dgobj;  // dg(Delta^{j-i}) for i <= j at i*(n+1)+j
  DgCategory<K> cat;
};

template <class K>
PhiDg<K> phi_dg(int n, const FieldOf<K>& f) {
  PhiDg<K> out;
  out.n = n;
  out.dgobj.resize(size_t((n + 1) * (n + 1)));
  DgCategory<K>& c = out.cat;
  c.field = f;
  c.nobj = n + 1;
  c.hom.resize(size_t((n + 1) * (n + 1)), ChainComplex<K>::zero(f));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      out.dgobj[size_t(i * (n + 1) + j)] = dg_complex(Necklace::simplex(j - i), f);
      c.hom[size_t(i * (n + 1) + j)] = out.dgobj[size_t(i * (n + 1) + j)].complex;
    }
  for (int i = 0; i <= n; ++i) c.unit.push_back({f.one()});
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) {
        const DgObject<K>& a = out.dgobj[size_t(i * (n + 1) + j)];
        const DgObject<K>& b = out.dgobj[size_t(j * (n + 1) + k)];
        DgObject<K> ab = dg_complex(Necklace::simplex(j - i).wedge(Necklace::simplex(k - j)), f);
        const DgObject<K>& target = out.dgobj[size_t(i * (n + 1) + k)];
        ChainMap<K> iso = dg_monoidal_iso(a, b, ab);
        NecklaceMap nu(ab.t, target.t, IntervalMap::identity(k - i));
        ChainMap<K> dnu = dg_on_map(nu, ab, target);
        c.comp[{i * (n + 1) + j, j * (n + 1) + k}] = chain_compose(iso, dnu);
      }
  // compositions through zero homs (i > j) are zero maps
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        if (i <= j && j <= k) continue;
        ChainComplex<K> t = tensor(c.at(i, j), c.at(j, k));
        c.comp[{i * (n + 1) + j, j * (n + 1) + k}] = ChainMap<K>::zero_map(t, c.at(i, k));
      }
  return out;
}

// All chain maps C -> D over a prime field: every combination of the basis.
template <class K>
std::vector<ChainMap<K>> all_chain_maps(const ChainComplex<K>& C, const ChainComplex<K>& D,
                                        const FieldOf<K>& f, long cap = 500000) {
  static_assert(K::is_prime_field);
  auto basis = hom_chain_maps(C, D);
  long total = 1;
  for (size_t i = 0; i < basis.size(); ++i) {
    total *= f.characteristic();
    if (total > cap) throw size_cap_exceeded("hom space too large to enumerate");
  }
  std::vector<ChainMap<K>> out;
  std::vector<int> coeff(basis.size(), 0);
  for (long v = 0; v < total; ++v) {
    long rest = v;
    for (size_t i = 0; i < basis.size(); ++i) {
      coeff[i] = int(rest % f.characteristic());
      rest /= f.characteristic();
    }
    ChainMap<K> m = ChainMap<K>::zero_map(C, D);
    for (size_t i = 0; i < basis.size(); ++i) {
      if (coeff[i] == 0) continue;
      K scale = f.of_int(coeff[i]);
      for (size_t d = 0; d < m.comps.size(); ++d)
        for (size_t e = 0; e < m.comps[d].a.size(); ++e)
          m.comps[d].a[e] = m.comps[d].a[e] + scale * basis[i].comps[d].a[e];
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Enriched functors between dg-categories over a prime field.
template <class K>
struct DgFunctor {
  std::vector<int> obj;
  std::map<std::pair<int, int>, ChainMap<K>> comps;
};

template <class K>
std::vector<DgFunctor<K>> enumerate_dg_functors(const DgCategory<K>& C, const DgCategory<K>& D) {
  static_assert(K::is_prime_field);
  const FieldOf<K>& f = C.field;
  std::vector<DgFunctor<K>> out;
  std::vector<int> obj(size_t(C.nobj), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i < C.nobj) {
      for (int y = 0; y < D.nobj; ++y) {
        obj[size_t(i)] = y;
        rec(i + 1);
      }
      return;
    }
    // pairs ordered by width so composition constraints prune early
    std::vector<std::pair<int, int>> pairs;
    for (int w = 0; w < C.nobj; ++w)
      for (int a = 0; a < C.nobj; ++a)
        for (int b = 0; b < C.nobj; ++b)
          if (std::abs(a - b) == w) pairs.push_back({a, b});
    std::map<std::pair<int, int>, std::vector<ChainMap<K>>> choices;
    for (auto& [a, b] : pairs)
      choices[{a, b}] = all_chain_maps(C.at(a, b), D.at(obj[size_t(a)], obj[size_t(b)]), f);
    DgFunctor<K> F;
    F.obj = obj;
    auto unit_ok = [&](int a) {
      auto img = F.comps.at({a, a}).at(0).apply(C.unit[size_t(a)], f);
      return img == D.unit[size_t(obj[size_t(a)])];
    };
    auto comp_ok = [&](int a, int b, int c) {
      // F . m_C = m_D . (F (x) F)
      ChainMap<K> lhs = chain_compose(C.comp_at(a, b, c), F.comps.at({a, c}));
      ChainMap<K> rhs = chain_compose(
          tensor_chain_map(F.comps.at({a, b}), F.comps.at({b, c})),
          D.comp_at(obj[size_t(a)], obj[size_t(b)], obj[size_t(c)]));
      return lhs == rhs;
    };
    auto partial_ok = [&](const std::pair<int, int>& last) {
      if (last.first == last.second && !unit_ok(last.first)) return false;
      for (int a = 0; a < C.nobj; ++a)
        for (int b = 0; b < C.nobj; ++b)
          for (int c = 0; c < C.nobj; ++c) {
            bool involves = (std::pair(a, b) == last || std::pair(b, c) == last ||
                             std::pair(a, c) == last);
            if (!involves) continue;
            if (!F.comps.count({a, b}) || !F.comps.count({b, c}) || !F.comps.count({a, c}))
              continue;
            if (!comp_ok(a, b, c)) return false;
          }
      return true;
    };
    std::function<void(size_t)> rec2 = [&](size_t k) {
      if (k == pairs.size()) {
        out.push_back(F);
        return;
      }
      for (auto& m : choices[pairs[k]]) {
        F.comps[pairs[k]] = m;
        if (partial_ok(pairs[k])) rec2(k + 1);
      }
      F.comps.erase(pairs[k]);
    };
    rec2(0);
  };
  rec(0);
  return out;
}

}  // namespace neckcat
