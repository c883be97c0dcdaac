#pragma once

// Nerves of enriched categories via the simplex description: an n-simplex
// is a tuple of objects together with component morphisms out of the
// generating diagram's simplex values, compatible with composition along
// every inner splitting.  Simplicial operators act by the component maps
// of the cosimplicial structure.

#include "enriched.hpp"

namespace neckcat {

// ---------------------------------------------------------------------------
// The ordinary nerve (constant diagram): simplices are composable strings.

struct ConstNerveModel {
  FinCategory C;
  struct S {
    std::vector<int> obj;
    std::map<std::pair<int, int>, int> arr;
    auto operator<=>(const S&) const = default;
  };
  std::vector<S> level(int n) const {
    std::vector<S> out;
    S cur;
    std::function<void(int)> rec = [&](int i) {
      if (i > n) {
        out.push_back(cur);
        return;
      }
      // extend by one object and one arrow from the previous
      for (int y = 0; y < C.nobj; ++y) {
        if (i == 0) {
          cur.obj.push_back(y);
          rec(i + 1);
          cur.obj.pop_back();
          continue;
        }
        for (int a : C.homset(cur.obj.back(), y)) {
          cur.obj.push_back(y);
          cur.arr[{i - 1, i}] = a;
          rec(i + 1);
          cur.arr.erase({i - 1, i});
          cur.obj.pop_back();
        }
      }
    };
    rec(0);
    // fill in all composites
    for (auto& s : out)
      for (int w = 2; w <= n; ++w)
        for (int i = 0; i + w <= n; ++i)
          s.arr[{i, i + w}] = C.compose(s.arr.at({i, i + w - 1}), s.arr.at({i + w - 1, i + w}));
    return out;
  }
  S act(const MonoMap& f, const S& x) const {
    S out;
    for (int i = 0; i <= f.src_rank(); ++i) out.obj.push_back(x.obj[size_t(f(i))]);
    for (int i = 0; i <= f.src_rank(); ++i)
      for (int j = i + 1; j <= f.src_rank(); ++j) {
        int fi = f(i), fj = f(j);
        out.arr[{i, j}] = (fi == fj) ? C.id_of[size_t(x.obj[size_t(fi)])] : x.arr.at({fi, fj});
      }
    return out;
  }
  std::string key(const S& x) const {
    std::string s;
    for (int o : x.obj) s += std::to_string(o) + ".";
    for (auto& [p, a] : x.arr) s += std::to_string(a) + ",";
    return s;
  }
};

// ---------------------------------------------------------------------------
// The Duskin nerve of a strict 2-category.

struct DuskNerveModel {
  TwoCategory C;
  std::vector<Pos> cube_pos;  // cube posets of the simplices, by width

  explicit DuskNerveModel(TwoCategory c, int nmax) : C(std::move(c)) {
    for (int w = 0; w <= nmax; ++w) cube_pos.push_back(Pos::cube(Necklace::simplex(w)));
  }

  struct S {
    std::vector<int> obj;
    std::map<std::pair<int, int>, PosetFunctor> alpha;
    auto operator<=>(const S&) const = default;
  };

  bool compatible(const S& s, int i, int k, int j) const {
    // m(alpha_{i,k}, alpha_{k,j}) = alpha_{i,j} restricted along the union
    const Pos &p1 = cube_pos[size_t(k - i)], &p2 = cube_pos[size_t(j - k)],
              &p3 = cube_pos[size_t(j - i)];
    const PosetFunctor &a1 = s.alpha.at({i, k}), &a2 = s.alpha.at({k, j}),
                       &a3 = s.alpha.at({i, j});
    int A = s.obj[size_t(i)], B = s.obj[size_t(k)], D = s.obj[size_t(j)];
    const FinCategory& target = C.at(A, D);
    for (size_t x = 0; x < p1.elems.size(); ++x)
      for (size_t y = 0; y < p2.elems.size(); ++y) {
        Mask u = p1.elems[x][0] | (p2.elems[y][0] << (k - i));
        int e3 = p3.index_of({u});
        int lhs_obj = C.compose_obj(A, B, D, a1.obj[x], a2.obj[y]);
        if (lhs_obj != a3.obj[size_t(e3)]) return false;
        for (size_t x2 = 0; x2 < p1.elems.size(); ++x2)
          for (size_t y2 = 0; y2 < p2.elems.size(); ++y2) {
            if (!Pos::leq(p1.elems[x], p1.elems[x2]) || !Pos::leq(p2.elems[y], p2.elems[y2]))
              continue;
            Mask u2 = p1.elems[x2][0] | (p2.elems[y2][0] << (k - i));
            int e32 = p3.index_of({u2});
            auto arrow_of = [&](const PosetFunctor& F, const FinCategory& cat, int a, int b) {
              return a == b ? cat.id_of[size_t(F.obj[size_t(a)])] : F.arr.at({a, b});
            };
            int la = arrow_of(a1, C.at(A, B), int(x), int(x2));
            int lb = arrow_of(a2, C.at(B, D), int(y), int(y2));
            int lhs = C.compose_arr(A, B, D, la, lb);
            int rhs = arrow_of(a3, target, e3, e32);
            if (lhs != rhs) return false;
          }
      }
    return true;
  }

  std::vector<S> level(int n) const {
    std::vector<S> out;
    std::vector<int> obj(size_t(n) + 1, 0);
    std::function<void(int)> rec_obj = [&](int o) {
      if (o <= n) {
        for (int y = 0; y < C.nobj; ++y) {
          obj[size_t(o)] = y;
          rec_obj(o + 1);
        }
        return;
      }
      S s;
      s.obj = obj;
      std::vector<std::pair<int, int>> pairs;
      for (int w = 1; w <= n; ++w)
        for (int i = 0; i + w <= n; ++i) pairs.push_back({i, i + w});
      std::map<std::pair<int, int>, std::vector<PosetFunctor>> choices;
      for (auto& [i, j] : pairs) {
        std::pair<int, int> tgt{j - i, obj[size_t(i)] * C.nobj + obj[size_t(j)]};
        choices[{i, j}] =
            enumerate_poset_functors(cube_pos[size_t(j - i)], C.at(obj[size_t(i)], obj[size_t(j)]));
        (void)tgt;
      }
      std::function<void(size_t)> rec = [&](size_t kq) {
        if (kq == pairs.size()) {
          out.push_back(s);
          return;
        }
        auto [i, j] = pairs[kq];
        for (auto& F : choices.at({i, j})) {
          s.alpha[{i, j}] = F;
          bool ok = true;
          for (int k = i + 1; k < j && ok; ++k)
            if (s.alpha.count({i, k}) && s.alpha.count({k, j})) ok = compatible(s, i, k, j);
          if (ok) rec(kq + 1);
        }
        s.alpha.erase({i, j});
      };
      rec(0);
    };
    rec_obj(0);
    return out;
  }

  S act(const MonoMap& f, const S& x) const {
    S out;
    int m = f.src_rank();
    for (int i = 0; i <= m; ++i) out.obj.push_back(x.obj[size_t(f(i))]);
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        int fi = f(i), fj = f(j);
        const Pos& src = cube_pos[size_t(j - i)];
        if (fi == fj) {
          // constant functor at the unit 1-cell
          PosetFunctor F;
          int A = x.obj[size_t(fi)];
          for (size_t e = 0; e < src.elems.size(); ++e)
            F.obj.push_back(C.unit_cell[size_t(A)]);
          for (size_t a = 0; a < src.elems.size(); ++a)
            for (size_t b = 0; b < src.elems.size(); ++b)
              if (a != b && Pos::leq(src.elems[a], src.elems[b]))
                F.arr[{int(a), int(b)}] =
                    C.at(A, A).id_of[size_t(C.unit_cell[size_t(A)])];
          out.alpha[{i, j}] = F;
          continue;
        }
        NecklaceMap comp = phi_component_map(f, i, j);
        const Pos& dst = cube_pos[size_t(fj - fi)];
        out.alpha[{i, j}] = precompose_poset_functor(
            src, dst, hc_poset_map(ExtNecklaceMap(comp)), x.alpha.at({fi, fj}),
            C.at(x.obj[size_t(fi)], x.obj[size_t(fj)]));
      }
    return out;
  }

  std::string key(const S& x) const {
    std::string s;
    for (int o : x.obj) s += std::to_string(o) + ".";
    for (auto& [p, F] : x.alpha) {
      for (int o : F.obj) s += std::to_string(o) + ",";
      for (auto& [pr, a] : F.arr) s += std::to_string(a) + ";";
      s += "|";
    }
    return s;
  }
};

// ---------------------------------------------------------------------------
// The dg-nerve over a prime field.

template <class K>
struct DgNerveModel {
  DgCategory<K> C;
  FieldOf<K> field;
  std::map<int, DgObject<K>> dgq;                       // dg(Delta^w) by width
  std::map<std::pair<int, int>, ChainMap<K>> wedgecomp;  // iso then dg(nu), by widths

  DgNerveModel(DgCategory<K> c, int nmax) : C(std::move(c)), field(C.field) {
    for (int w = 0; w <= nmax; ++w) dgq.emplace(w, dg_complex(Necklace::simplex(w), field));
    for (int w1 = 1; w1 <= nmax; ++w1)
      for (int w2 = 1; w1 + w2 <= nmax; ++w2) {
        DgObject<K> dw = dg_complex(Necklace::simplex(w1).wedge(Necklace::simplex(w2)), field);
        ChainMap<K> iso = dg_monoidal_iso(dgq.at(w1), dgq.at(w2), dw);
        NecklaceMap nu(dw.t, Necklace::simplex(w1 + w2), IntervalMap::identity(w1 + w2));
        wedgecomp.emplace(std::pair(w1, w2),
                          chain_compose(iso, dg_on_map(nu, dw, dgq.at(w1 + w2))));
      }
  }

  struct S {
    std::vector<int> obj;
    std::map<std::pair<int, int>, ChainMap<K>> alpha;
  };

  bool compatible(const S& s, int i, int k, int j) const {
    // m . (alpha_{i,k} (x) alpha_{k,j}) = alpha_{i,j} . dg(nu)
    ChainMap<K> lhs = chain_compose(
        tensor_chain_map(s.alpha.at({i, k}), s.alpha.at({k, j})),
        C.comp_at(s.obj[size_t(i)], s.obj[size_t(k)], s.obj[size_t(j)]));
    ChainMap<K> rhs = chain_compose(wedgecomp.at({k - i, j - k}), s.alpha.at({i, j}));
    return lhs == rhs;
  }

  std::vector<S> level(int n) const {
    std::vector<S> out;
    std::vector<int> obj(size_t(n) + 1, 0);
    std::function<void(int)> rec_obj = [&](int o) {
      if (o <= n) {
        for (int y = 0; y < C.nobj; ++y) {
          obj[size_t(o)] = y;
          rec_obj(o + 1);
        }
        return;
      }
      S s;
      s.obj = obj;
      std::vector<std::pair<int, int>> pairs;
      for (int w = 1; w <= n; ++w)
        for (int i = 0; i + w <= n; ++i) pairs.push_back({i, i + w});
      std::function<void(size_t)> rec = [&](size_t kq) {
        if (kq == pairs.size()) {
          out.push_back(s);
          return;
        }
        auto [i, j] = pairs[kq];
        for (auto& m : all_chain_maps(dgq.at(j - i).complex,
                                      C.at(obj[size_t(i)], obj[size_t(j)]), field)) {
          s.alpha[{i, j}] = m;
          bool ok = true;
          for (int k = i + 1; k < j && ok; ++k)
            if (s.alpha.count({i, k}) && s.alpha.count({k, j})) ok = compatible(s, i, k, j);
          if (ok) rec(kq + 1);
        }
        s.alpha.erase({i, j});
      };
      rec(0);
    };
    rec_obj(0);
    return out;
  }

  S act(const MonoMap& f, const S& x) const {
    S out;
    int m = f.src_rank();
    for (int i = 0; i <= m; ++i) out.obj.push_back(x.obj[size_t(f(i))]);
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        int fi = f(i), fj = f(j);
        if (fi == fj) {
          // unit-induced: dg(Delta^{j-i}) -> k -> hom(A,A)
          int A = x.obj[size_t(fi)];
          const ChainComplex<K>& h = C.at(A, A);
          const ChainComplex<K>& src = dgq.at(j - i).complex;
          std::vector<Mat<K>> comps;
          for (int deg = src.lo; deg <= src.hi(); ++deg)
            comps.push_back(Mat<K>(h.dim_at(deg), src.dim_at(deg), field));
          // degree-zero part: every spine basis element hits the unit;
          // spines are exactly the maps to the point simplex... here the
          // augmentation sends each degree-0 generator to the unit cycle
          for (int c = 0; c < src.dim_at(0); ++c)
            for (int r = 0; r < h.dim_at(0); ++r) comps[0].at(r, c) = C.unit[size_t(A)][size_t(r)];
          out.alpha[{i, j}] = ChainMap<K>(src, h, std::move(comps));
          continue;
        }
        NecklaceMap comp = phi_component_map(f, i, j);
        ChainMap<K> dmap = dg_on_map(comp, dgq.at(j - i), dgq.at(fj - fi));
        out.alpha[{i, j}] = chain_compose(dmap, x.alpha.at({fi, fj}));
      }
    return out;
  }

  std::string key(const S& x) const {
    std::string s;
    for (int o : x.obj) s += std::to_string(o) + ".";
    for (auto& [p, m] : x.alpha) {
      for (auto& c : m.comps)
        for (auto& v : c.a) s += v.str() + ",";
      s += "|";
    }
    return s;
  }
};

// ---------------------------------------------------------------------------
// The cubical nerve.

struct CubNerveModel {
  CubicalCategory C;

  struct S {
    std::vector<int> obj;
    std::map<std::pair<int, int>, int> cell;  // level j-i-1 cell of hom(A_i,A_j)
    auto operator<=>(const S&) const = default;
  };

  bool compatible(const S& s, int i, int k, int j) const {
    int A = s.obj[size_t(i)], B = s.obj[size_t(k)], D = s.obj[size_t(j)];
    int lhs = C.pair(A, B, D, k - i - 1, s.cell.at({i, k}), j - k - 1, s.cell.at({k, j}));
    CubeGen g{'d', k - i, 1, j - i - 2};
    int rhs = C.at(A, D).act(g, s.cell.at({i, j}));
    return lhs == rhs;
  }

  std::vector<S> level(int n) const {
    std::vector<S> out;
    std::vector<int> obj(size_t(n) + 1, 0);
    std::function<void(int)> rec_obj = [&](int o) {
      if (o <= n) {
        for (int y = 0; y < C.nobj; ++y) {
          obj[size_t(o)] = y;
          rec_obj(o + 1);
        }
        return;
      }
      S s;
      s.obj = obj;
      std::vector<std::pair<int, int>> pairs;
      for (int w = 1; w <= n; ++w)
        for (int i = 0; i + w <= n; ++i) pairs.push_back({i, i + w});
      std::function<void(size_t)> rec = [&](size_t kq) {
        if (kq == pairs.size()) {
          out.push_back(s);
          return;
        }
        auto [i, j] = pairs[kq];
        int count = C.at(obj[size_t(i)], obj[size_t(j)]).size(j - i - 1);
        for (int y = 0; y < count; ++y) {
          s.cell[{i, j}] = y;
          bool ok = true;
          for (int k = i + 1; k < j && ok; ++k)
            if (s.cell.count({i, k}) && s.cell.count({k, j})) ok = compatible(s, i, k, j);
          if (ok) rec(kq + 1);
        }
        s.cell.erase({i, j});
      };
      rec(0);
    };
    rec_obj(0);
    return out;
  }

  S act(const MonoMap& f, const S& x) const {
    S out;
    int m = f.src_rank();
    for (int i = 0; i <= m; ++i) out.obj.push_back(x.obj[size_t(f(i))]);
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        int fi = f(i), fj = f(j);
        int A = x.obj[size_t(fi)];
        if (fi == fj) {
          // unit cell degenerated up to level j-i-1
          CubeMap w = cube_hom(j - i - 1, 0)[0];
          out.cell[{i, j}] = C.at(A, A).act_map(w, C.unit_cell[size_t(A)]);
          continue;
        }
        NecklaceMap comp = phi_component_map(f, i, j);
        CubeMap dm = dim_on_map(comp);
        out.cell[{i, j}] =
            C.at(A, x.obj[size_t(fj)]).act_map(dm, x.cell.at({fi, fj}));
      }
    return out;
  }

  std::string key(const S& x) const {
    std::string s;
    for (int o : x.obj) s += std::to_string(o) + ".";
    for (auto& [p, c] : x.cell) s += std::to_string(c) + ",";
    return s;
  }
};

// ---------------------------------------------------------------------------
// Truncated simplicial sets assembled from a nerve model.

struct TruncatedSSet {
  int nmax = 0;
  std::vector<std::vector<std::string>> keys;
  std::vector<std::map<std::string, int>> index;
  std::vector<std::vector<std::vector<int>>> faces;   // faces[n][i][x], n >= 1
  std::vector<std::vector<std::vector<int>>> degens;  // degens[n][i][x], n <= nmax-1

  int size(int n) const { return n <= nmax && n >= 0 ? int(keys[size_t(n)].size()) : 0; }

  void validate() const {
    for (int n = 2; n <= nmax; ++n)
      for (int x = 0; x < size(n); ++x)
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j <= n; ++j)
            if (faces[size_t(n - 1)][size_t(i)][size_t(faces[size_t(n)][size_t(j)][size_t(x)])] !=
                faces[size_t(n - 1)][size_t(j - 1)][size_t(faces[size_t(n)][size_t(i)][size_t(x)])])
              throw invalid_input("face identity fails");
    for (int n = 0; n + 1 <= nmax; ++n)
      for (int x = 0; x < size(n); ++x)
        for (int i = 0; i <= n; ++i) {
          int sx = degens[size_t(n)][size_t(i)][size_t(x)];
          for (int j = 0; j <= n + 1; ++j) {
            int df = faces[size_t(n + 1)][size_t(j)][size_t(sx)];
            int expect;
            if (j < i)
              expect = n >= 1 ? degens[size_t(n - 1)][size_t(i - 1)]
                                      [size_t(faces[size_t(n)][size_t(j)][size_t(x)])]
                              : -1;
            else if (j > i + 1)
              expect = n >= 1 ? degens[size_t(n - 1)][size_t(i)]
                                      [size_t(faces[size_t(n)][size_t(j - 1)][size_t(x)])]
                              : -1;
            else
              expect = x;
            if (expect >= 0 && df != expect) throw invalid_input("degeneracy identity fails");
          }
        }
  }
};

template <class Model>
TruncatedSSet assemble_nerve(const Model& model, int nmax) {
  TruncatedSSet out;
  out.nmax = nmax;
  std::vector<std::vector<typename Model::S>> levels;
  for (int n = 0; n <= nmax; ++n) {
    levels.push_back(model.level(n));
    std::vector<std::string> keys;
    std::map<std::string, int> idx;
    for (auto& s : levels.back()) {
      keys.push_back(model.key(s));
      idx[keys.back()] = int(keys.size()) - 1;
    }
    out.keys.push_back(std::move(keys));
    out.index.push_back(std::move(idx));
  }
  out.faces.resize(size_t(nmax) + 1);
  out.degens.resize(size_t(nmax) + 1);
  for (int n = 1; n <= nmax; ++n) {
    out.faces[size_t(n)].resize(size_t(n) + 1);
    for (int i = 0; i <= n; ++i)
      for (auto& s : levels[size_t(n)]) {
        auto y = model.act(MonoMap::coface(n, i), s);
        out.faces[size_t(n)][size_t(i)].push_back(out.index[size_t(n - 1)].at(model.key(y)));
      }
  }
  for (int n = 0; n + 1 <= nmax; ++n) {
    out.degens[size_t(n)].resize(size_t(n) + 1);
    for (int i = 0; i <= n; ++i)
      for (auto& s : levels[size_t(n)]) {
        auto y = model.act(MonoMap::codegeneracy(n, i), s);
        out.degens[size_t(n)][size_t(i)].push_back(out.index[size_t(n + 1)].at(model.key(y)));
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Inner horn filling on a truncated simplicial set.

struct HornReport {
  int nmax = 0;
  long horns = 0, filled = 0, unique_fills = 0;
  bool all_filled = true;
  std::string first_failure;
  std::vector<std::tuple<int, int, long, long>> per_horn;  // (n, j, count, unfilled)
};

inline HornReport quasicat_check(const TruncatedSSet& X, int nmax) {
  if (nmax > X.nmax) throw invalid_input("truncation too low for the requested check");
  HornReport rep;
  rep.nmax = nmax;
  for (int n = 2; n <= nmax; ++n)
    for (int j = 1; j < n; ++j) {
      long count = 0, unfilled = 0;
      // enumerate horn data: faces y_i for i != j with d_i y_k = d_{k-1} y_i
      std::vector<int> ys(size_t(n) + 1, -1);
      std::function<void(int)> rec = [&](int i) {
        if (i == j) {
          rec(i + 1);
          return;
        }
        if (i > n) {
          ++count;
          long fills = 0;
          for (int x = 0; x < X.size(n); ++x) {
            bool ok = true;
            for (int k = 0; k <= n && ok; ++k) {
              if (k == j) continue;
              if (X.faces[size_t(n)][size_t(k)][size_t(x)] != ys[size_t(k)]) ok = false;
            }
            if (ok) ++fills;
          }
          if (fills == 0) {
            ++unfilled;
            if (rep.first_failure.empty()) {
              rep.first_failure = "horn (" + std::to_string(n) + "," + std::to_string(j) +
                                  ") with faces ";
              for (int k = 0; k <= n; ++k)
                if (k != j) rep.first_failure += std::to_string(ys[size_t(k)]) + " ";
            }
          } else {
            ++rep.filled;
            if (fills == 1) ++rep.unique_fills;
          }
          return;
        }
        for (int y = 0; y < X.size(n - 1); ++y) {
          // compatibility with previously chosen faces
          bool ok = true;
          for (int k = 0; k < i && ok; ++k) {
            if (k == j) continue;
            // d_k (y_i) = d_{i-1} (y_k)
            if (X.faces[size_t(n - 1)][size_t(k)][size_t(y)] !=
                X.faces[size_t(n - 1)][size_t(i - 1)][size_t(ys[size_t(k)])])
              ok = false;
          }
          if (!ok) continue;
          ys[size_t(i)] = y;
          rec(i + 1);
          ys[size_t(i)] = -1;
        }
      };
      rec(0);
      rep.horns += count;
      if (unfilled > 0) rep.all_filled = false;
      rep.per_horn.push_back({n, j, count, unfilled});
    }
  return rep;
}

}  // namespace neckcat
