#pragma once

// Strict 2-categories: hom-categories with a strictly associative and
// unital horizontal composition functor.  The Duskin generating diagram
// assigns the joint-refinement poset to each necklace; its cosimplicial
// categories have cube posets as homs and union as composition.

#include "fincat.hpp"

namespace neckcat {

struct TwoCategory {
  int nobj = 0;
  std::vector<FinCategory> hom;  // index i*nobj + j
  // horizontal composition hom(i,j) x hom(j,k) -> hom(i,k)
  std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> hobj;
  std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> harr;
  std::vector<int> unit_cell;  // identity 1-cell per object

  const FinCategory& at(int i, int j) const { return hom[size_t(i * nobj + j)]; }
  FinCategory& at(int i, int j) { return hom[size_t(i * nobj + j)]; }

  int compose_obj(int i, int j, int k, int x, int y) const {
    return hobj.at({i, j, k})[size_t(x)][size_t(y)];
  }
  int compose_arr(int i, int j, int k, int a, int b) const {
    return harr.at({i, j, k})[size_t(a)][size_t(b)];
  }

  bool all_2_invertible() const {
    for (auto& h : hom)
      if (!h.all_isomorphisms()) return false;
    return true;
  }

  void validate() const {
    for (auto& h : hom) h.validate();
    for (int i = 0; i < nobj; ++i)
      if (at(i, i).arrows.empty() || unit_cell[size_t(i)] >= at(i, i).nobj)
        throw invalid_input("missing unit 1-cell");
    // horizontal composition is a functor
    for (int i = 0; i < nobj; ++i)
      for (int j = 0; j < nobj; ++j)
        for (int k = 0; k < nobj; ++k) {
          const FinCategory &ab = at(i, j), &bc = at(j, k), &ac = at(i, k);
          if (!hobj.count({i, j, k})) {
            if (ab.nobj > 0 && bc.nobj > 0 && ac.nobj >= 0 && ab.nobj * bc.nobj > 0)
              throw invalid_input("missing composition table");
            continue;
          }
          for (size_t a = 0; a < ab.arrows.size(); ++a)
            for (size_t b = 0; b < bc.arrows.size(); ++b) {
              int im = compose_arr(i, j, k, int(a), int(b));
              if (ac.arrows[size_t(im)].src !=
                      compose_obj(i, j, k, ab.arrows[a].src, bc.arrows[b].src) ||
                  ac.arrows[size_t(im)].dst !=
                      compose_obj(i, j, k, ab.arrows[a].dst, bc.arrows[b].dst))
                throw invalid_input("horizontal composition endpoints");
              for (size_t a2 = 0; a2 < ab.arrows.size(); ++a2)
                for (size_t b2 = 0; b2 < bc.arrows.size(); ++b2) {
                  if (ab.arrows[a].dst != ab.arrows[a2].src ||
                      bc.arrows[b].dst != bc.arrows[b2].src)
                    continue;
                  int lhs = compose_arr(i, j, k, ab.compose(int(a), int(a2)),
                                        bc.compose(int(b), int(b2)));
                  int rhs = ac.compose(compose_arr(i, j, k, int(a), int(b)),
                                       compose_arr(i, j, k, int(a2), int(b2)));
                  if (lhs != rhs) throw invalid_input("interchange fails");
                }
            }
          for (int x = 0; x < ab.nobj; ++x)
            for (int y = 0; y < bc.nobj; ++y)
              if (compose_arr(i, j, k, ab.id_of[size_t(x)], bc.id_of[size_t(y)]) !=
                  ac.id_of[size_t(compose_obj(i, j, k, x, y))])
                throw invalid_input("horizontal composition of identity 2-cells");
        }
    // strict associativity and units on 1-cells and 2-cells
    for (int i = 0; i < nobj; ++i)
      for (int j = 0; j < nobj; ++j)
        for (int k = 0; k < nobj; ++k)
          for (int l = 0; l < nobj; ++l) {
            if (!hobj.count({i, j, k}) || !hobj.count({i, k, l}) || !hobj.count({j, k, l}) ||
                !hobj.count({i, j, l}))
              continue;
            for (int x = 0; x < at(i, j).nobj; ++x)
              for (int y = 0; y < at(j, k).nobj; ++y)
                for (int z = 0; z < at(k, l).nobj; ++z)
                  if (compose_obj(i, k, l, compose_obj(i, j, k, x, y), z) !=
                      compose_obj(i, j, l, x, compose_obj(j, k, l, y, z)))
                    throw invalid_input("associativity of 1-cell composition");
            for (size_t a = 0; a < at(i, j).arrows.size(); ++a)
              for (size_t b = 0; b < at(j, k).arrows.size(); ++b)
                for (size_t c = 0; c < at(k, l).arrows.size(); ++c)
                  if (compose_arr(i, k, l, compose_arr(i, j, k, int(a), int(b)), int(c)) !=
                      compose_arr(i, j, l, int(a), compose_arr(j, k, l, int(b), int(c))))
                    throw invalid_input("associativity of 2-cell composition");
          }
    for (int i = 0; i < nobj; ++i)
      for (int j = 0; j < nobj; ++j) {
        if (at(i, j).nobj == 0) continue;
        for (int x = 0; x < at(i, j).nobj; ++x) {
          if (compose_obj(i, i, j, unit_cell[size_t(i)], x) != x)
            throw invalid_input("left unit 1-cell law");
          if (compose_obj(i, j, j, x, unit_cell[size_t(j)]) != x)
            throw invalid_input("right unit 1-cell law");
        }
        for (size_t a = 0; a < at(i, j).arrows.size(); ++a) {
          if (compose_arr(i, i, j, at(i, i).id_of[size_t(unit_cell[size_t(i)])], int(a)) != int(a))
            throw invalid_input("left unit 2-cell law");
          if (compose_arr(i, j, j, int(a), at(j, j).id_of[size_t(unit_cell[size_t(j)])]) != int(a))
            throw invalid_input("right unit 2-cell law");
        }
      }
  }

  // locally discrete 2-category on a finite category
  static TwoCategory locally_discrete(const FinCategory& c) {
    TwoCategory t;
    t.nobj = c.nobj;
    t.hom.resize(size_t(c.nobj * c.nobj));
    std::vector<std::vector<std::vector<int>>> cell_of(size_t(c.nobj),
                                                       std::vector<std::vector<int>>(size_t(c.nobj)));
    for (int i = 0; i < c.nobj; ++i)
      for (int j = 0; j < c.nobj; ++j) {
        auto hs = c.homset(i, j);
        t.at(i, j) = FinCategory::discrete(int(hs.size()));
        cell_of[size_t(i)][size_t(j)] = hs;
      }
    auto cell_index = [&](int i, int j, int arrow) {
      auto& hs = cell_of[size_t(i)][size_t(j)];
      for (size_t k = 0; k < hs.size(); ++k)
        if (hs[k] == arrow) return int(k);
      throw std::logic_error("arrow not found");
    };
    for (int i = 0; i < c.nobj; ++i) t.unit_cell.push_back(cell_index(i, i, c.id_of[size_t(i)]));
    for (int i = 0; i < c.nobj; ++i)
      for (int j = 0; j < c.nobj; ++j)
        for (int k = 0; k < c.nobj; ++k) {
          auto &hs1 = cell_of[size_t(i)][size_t(j)], &hs2 = cell_of[size_t(j)][size_t(k)];
          std::vector<std::vector<int>> tbl(hs1.size(), std::vector<int>(hs2.size()));
          for (size_t x = 0; x < hs1.size(); ++x)
            for (size_t y = 0; y < hs2.size(); ++y)
              tbl[x][y] = cell_index(i, k, c.compose(hs1[x], hs2[y]));
          t.hobj[{i, j, k}] = tbl;
          t.harr[{i, j, k}] = tbl;  // discrete homs: 2-cells are the 1-cells
        }
    return t;
  }

  // one object, one 1-cell, 2-cells a finite abelian group given by its
  // multiplication table (horizontal and vertical composition agree)
  static TwoCategory one_object_group(const std::vector<std::vector<int>>& mult, int unit) {
    TwoCategory t;
    t.nobj = 1;
    t.hom.resize(1);
    FinCategory h;
    h.nobj = 1;
    for (size_t i = 0; i < mult.size(); ++i) h.arrows.push_back({0, 0, "g" + std::to_string(i)});
    h.id_of = {unit};
    h.comp.assign(mult.size(), std::vector<int>(mult.size(), -1));
    for (size_t a = 0; a < mult.size(); ++a)
      for (size_t b = 0; b < mult.size(); ++b) h.comp[a][b] = mult[a][b];
    t.hom[0] = h;
    t.unit_cell = {0};
    std::vector<std::vector<int>> ob{{0}};
    t.hobj[{0, 0, 0}] = ob;
    std::vector<std::vector<int>> ar(mult.size(), std::vector<int>(mult.size()));
    for (size_t a = 0; a < mult.size(); ++a)
      for (size_t b = 0; b < mult.size(); ++b) ar[a][b] = mult[a][b];
    t.harr[{0, 0, 0}] = ar;
    return t;
  }

  // one object, 1-cells a finite commutative idempotent monoid (join
  // semilattice), one non-identity 2-cell x => y whenever x <= y in the
  // natural order; not a 2-groupoid
  static TwoCategory one_object_poset_monoid() {
    // 1-cells {x, y} with x the unit and y v y = y; hom category the poset x < y
    TwoCategory t;
    t.nobj = 1;
    t.hom.resize(1);
    FinCategory h;
    h.nobj = 2;
    h.arrows = {{0, 0, "idx"}, {1, 1, "idy"}, {0, 1, "x<y"}};
    h.id_of = {0, 1};
    h.comp.assign(3, std::vector<int>(3, -1));
    h.comp[0][0] = 0;
    h.comp[1][1] = 1;
    h.comp[0][2] = 2;
    h.comp[2][1] = 2;
    t.hom[0] = h;
    t.unit_cell = {0};
    std::vector<std::vector<int>> ob{{0, 1}, {1, 1}};
    t.hobj[{0, 0, 0}] = ob;
    // 2-cells compose by join on endpoints: the arrow table on the poset
    std::vector<std::vector<int>> ar(3, std::vector<int>(3));
    auto arrow_between = [&](int x, int y) { return x == y ? h.id_of[size_t(x)] : 2; };
    auto src_of = [&](int a) { return h.arrows[size_t(a)].src; };
    auto dst_of = [&](int a) { return h.arrows[size_t(a)].dst; };
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        ar[size_t(a)][size_t(b)] =
            arrow_between(std::max(src_of(a), src_of(b)), std::max(dst_of(a), dst_of(b)));
    t.harr[{0, 0, 0}] = ar;
    return t;
  }
};

// The cosimplicial 2-category of the Duskin diagram: homs are cube posets,
// composition is union of joint sets.
struct PhiDusk {
  int n = 0;
  std::vector<Pos> pos;  // pos of hom(i,j) for i <= j, index i*(n+1)+j
  TwoCategory cat;

  const Pos& pos_at(int i, int j) const { return pos[size_t(i * (n + 1) + j)]; }
};

inline PhiDusk phi_duskin(int n) {
  PhiDusk out;
  out.n = n;
  out.pos.resize(size_t((n + 1) * (n + 1)));
  TwoCategory& t = out.cat;
  t.nobj = n + 1;
  t.hom.resize(size_t((n + 1) * (n + 1)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i > j) {
        t.at(i, j) = FinCategory::discrete(0);
        continue;
      }
      Pos p = Pos::cube(Necklace::simplex(j - i));
      out.pos[size_t(i * (n + 1) + j)] = p;
      t.at(i, j) = FinCategory::from_poset(p);
    }
  for (int i = 0; i <= n; ++i) t.unit_cell.push_back(0);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) {
        const Pos &p1 = out.pos_at(i, j), &p2 = out.pos_at(j, k), &p3 = out.pos_at(i, k);
        std::vector<std::vector<int>> ob(p1.elems.size(), std::vector<int>(p2.elems.size()));
        for (size_t x = 0; x < p1.elems.size(); ++x)
          for (size_t y = 0; y < p2.elems.size(); ++y) {
            Mask u = p1.elems[x][0] | (p2.elems[y][0] << (j - i));
            ob[x][y] = p3.index_of({u});
          }
        t.hobj[{i, j, k}] = ob;
        // arrows of a poset category are determined by endpoints
        const FinCategory &c1 = t.at(i, j), &c2 = t.at(j, k), &c3 = t.at(i, k);
        std::vector<std::vector<int>> ar(c1.arrows.size(), std::vector<int>(c2.arrows.size()));
        auto arrow_of = [&](const FinCategory& c, int x, int y) {
          for (size_t a = 0; a < c.arrows.size(); ++a)
            if (c.arrows[a].src == x && c.arrows[a].dst == y) return int(a);
          return -1;
        };
        for (size_t a = 0; a < c1.arrows.size(); ++a)
          for (size_t b = 0; b < c2.arrows.size(); ++b)
            ar[a][b] = arrow_of(c3, ob[size_t(c1.arrows[a].src)][size_t(c2.arrows[b].src)],
                                ob[size_t(c1.arrows[a].dst)][size_t(c2.arrows[b].dst)]);
        t.harr[{i, j, k}] = ar;
      }
  return out;
}

// Enriched functors between 2-categories.
struct TwoFunctor {
  std::vector<int> obj;
  std::map<std::pair<int, int>, FinFunctor> comps;
  auto operator<=>(const TwoFunctor&) const = default;
};

inline bool two_functor_compatible(const TwoCategory& C, const TwoCategory& D,
                                   const TwoFunctor& F) {
  for (int i = 0; i < C.nobj; ++i) {
    // unit 1-cell preserved
    auto it = F.comps.find({i, i});
    if (it == F.comps.end()) return false;
    if (it->second.obj[size_t(C.unit_cell[size_t(i)])] !=
        D.unit_cell[size_t(F.obj[size_t(i)])])
      return false;
  }
  for (int i = 0; i < C.nobj; ++i)
    for (int j = 0; j < C.nobj; ++j)
      for (int k = 0; k < C.nobj; ++k) {
        if (!C.hobj.count({i, j, k})) continue;
        if (C.at(i, j).nobj == 0 || C.at(j, k).nobj == 0) continue;
        const FinFunctor &fij = F.comps.at({i, j}), &fjk = F.comps.at({j, k}),
                         &fik = F.comps.at({i, k});
        int di = F.obj[size_t(i)], dj = F.obj[size_t(j)], dk = F.obj[size_t(k)];
        for (int x = 0; x < C.at(i, j).nobj; ++x)
          for (int y = 0; y < C.at(j, k).nobj; ++y)
            if (fik.obj[size_t(C.compose_obj(i, j, k, x, y))] !=
                D.compose_obj(di, dj, dk, fij.obj[size_t(x)], fjk.obj[size_t(y)]))
              return false;
        for (size_t a = 0; a < C.at(i, j).arrows.size(); ++a)
          for (size_t b = 0; b < C.at(j, k).arrows.size(); ++b)
            if (fik.arr[size_t(C.compose_arr(i, j, k, int(a), int(b)))] !=
                D.compose_arr(di, dj, dk, fij.arr[a], fjk.arr[b]))
              return false;
      }
  return true;
}

inline std::vector<TwoFunctor> enumerate_two_functors(const TwoCategory& C, const TwoCategory& D) {
  std::vector<TwoFunctor> out;
  std::vector<int> obj(size_t(C.nobj), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == C.nobj) {
      std::vector<std::pair<int, int>> pairs;
      for (int w = 0; w < C.nobj; ++w)
        for (int a = 0; a < C.nobj; ++a)
          for (int b = 0; b < C.nobj; ++b)
            if (std::abs(a - b) == w && C.at(a, b).nobj > 0) pairs.push_back({a, b});
      std::map<std::pair<int, int>, std::vector<FinFunctor>> choices;
      for (auto& [a, b] : pairs) {
        choices[{a, b}] = enumerate_functors(C.at(a, b), D.at(obj[size_t(a)], obj[size_t(b)]));
        if (choices[{a, b}].empty()) return;
      }
      TwoFunctor F;
      F.obj = obj;
      // check only the triples whose three pairs are all assigned
      auto partial_ok = [&](size_t upto) {
        for (int a = 0; a < C.nobj; ++a) {
          if (!F.comps.count({a, a})) continue;
          if (F.comps.at({a, a}).obj[size_t(C.unit_cell[size_t(a)])] !=
              D.unit_cell[size_t(obj[size_t(a)])])
            return false;
        }
        auto& last = pairs[upto];
        for (int a = 0; a < C.nobj; ++a)
          for (int b = 0; b < C.nobj; ++b)
            for (int c = 0; c < C.nobj; ++c) {
              if (!C.hobj.count({a, b, c})) continue;
              bool involves_last = (std::pair(a, b) == last || std::pair(b, c) == last ||
                                    std::pair(a, c) == last);
              if (!involves_last) continue;
              if (!F.comps.count({a, b}) || !F.comps.count({b, c}) || !F.comps.count({a, c}))
                continue;
              const FinFunctor &fab = F.comps.at({a, b}), &fbc = F.comps.at({b, c}),
                               &fac = F.comps.at({a, c});
              int da = obj[size_t(a)], db = obj[size_t(b)], dc = obj[size_t(c)];
              for (int x = 0; x < C.at(a, b).nobj; ++x)
                for (int y = 0; y < C.at(b, c).nobj; ++y)
                  if (fac.obj[size_t(C.compose_obj(a, b, c, x, y))] !=
                      D.compose_obj(da, db, dc, fab.obj[size_t(x)], fbc.obj[size_t(y)]))
                    return false;
              for (size_t x = 0; x < C.at(a, b).arrows.size(); ++x)
                for (size_t y = 0; y < C.at(b, c).arrows.size(); ++y)
                  if (fac.arr[size_t(C.compose_arr(a, b, c, int(x), int(y)))] !=
                      D.compose_arr(da, db, dc, fab.arr[x], fbc.arr[y]))
                    return false;
            }
        return true;
      };
      std::function<void(size_t)> rec2 = [&](size_t k) {
        if (k == pairs.size()) {
          if (two_functor_compatible(C, D, F)) out.push_back(F);
          return;
        }
        for (auto& f : choices[pairs[k]]) {
          F.comps[pairs[k]] = f;
          if (partial_ok(k)) rec2(k + 1);
        }
        F.comps.erase(pairs[k]);
      };
      rec2(0);
      return;
    }
    for (int y = 0; y < D.nobj; ++y) {
      obj[size_t(i)] = y;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace neckcat
