#pragma once

// Finite categories with explicit composition tables, functor enumeration,
// and functors out of finite posets (with commutation checking).  These
// serve as hom-categories of strict 2-categories and as the shape of the
// Duskin generating diagram.

#include "posetnerve.hpp"

namespace neckcat {

struct FinCategory {
  int nobj = 0;
  struct Arrow {
    int src = 0, dst = 0;
    std::string name;
  };
  std::vector<Arrow> arrows;           // identities included
  std::vector<int> id_of;              // identity arrow per object
  std::vector<std::vector<int>> comp;  // comp[a][b] = "a then b", -1 if not composable

  int compose(int a, int b) const {  // a then b
    if (arrows[size_t(a)].dst != arrows[size_t(b)].src) return -1;
    return comp[size_t(a)][size_t(b)];
  }
  void validate() const {
    if (int(id_of.size()) != nobj) throw invalid_input("identity table size");
    for (int x = 0; x < nobj; ++x) {
      int e = id_of[size_t(x)];
      if (arrows[size_t(e)].src != x || arrows[size_t(e)].dst != x)
        throw invalid_input("identity endpoints");
    }
    for (size_t a = 0; a < arrows.size(); ++a) {
      if (compose(id_of[size_t(arrows[a].src)], int(a)) != int(a) ||
          compose(int(a), id_of[size_t(arrows[a].dst)]) != int(a))
        throw invalid_input("identity law fails");
      for (size_t b = 0; b < arrows.size(); ++b) {
        if (arrows[a].dst != arrows[b].src) continue;
        int ab = compose(int(a), int(b));
        if (ab < 0 || arrows[size_t(ab)].src != arrows[a].src ||
            arrows[size_t(ab)].dst != arrows[b].dst)
          throw invalid_input("composition table malformed");
        for (size_t c = 0; c < arrows.size(); ++c) {
          if (arrows[b].dst != arrows[c].src) continue;
          if (compose(ab, int(c)) != compose(int(a), compose(int(b), int(c))))
            throw invalid_input("associativity fails");
        }
      }
    }
  }
  bool all_isomorphisms() const {
    for (size_t a = 0; a < arrows.size(); ++a) {
      bool has_inverse = false;
      for (size_t b = 0; b < arrows.size(); ++b)
        if (arrows[a].dst == arrows[b].src && arrows[b].dst == arrows[a].src &&
            compose(int(a), int(b)) == id_of[size_t(arrows[a].src)] &&
            compose(int(b), int(a)) == id_of[size_t(arrows[a].dst)])
          has_inverse = true;
      if (!has_inverse) return false;
    }
    return true;
  }
  std::vector<int> homset(int x, int y) const {
    std::vector<int> out;
    for (size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a].src == x && arrows[a].dst == y) out.push_back(int(a));
    return out;
  }

  static FinCategory discrete(int n) {
    FinCategory c;
    c.nobj = n;
    for (int i = 0; i < n; ++i) {
      c.id_of.push_back(int(c.arrows.size()));
      c.arrows.push_back({i, i, "id" + std::to_string(i)});
    }
    c.comp.assign(c.arrows.size(), std::vector<int>(c.arrows.size(), -1));
    for (size_t a = 0; a < c.arrows.size(); ++a) c.comp[a][a] = int(a);
    return c;
  }

  // the poset category of a Pos (at most one arrow between objects)
  static FinCategory from_poset(const Pos& p) {
    FinCategory c;
    c.nobj = int(p.elems.size());
    std::vector<std::vector<int>> arrow_of(p.elems.size(),
                                           std::vector<int>(p.elems.size(), -1));
    for (int x = 0; x < c.nobj; ++x)
      for (int y = 0; y < c.nobj; ++y)
        if (Pos::leq(p.elems[size_t(x)], p.elems[size_t(y)])) {
          arrow_of[size_t(x)][size_t(y)] = int(c.arrows.size());
          c.arrows.push_back({x, y, std::to_string(x) + "->" + std::to_string(y)});
        }
    for (int x = 0; x < c.nobj; ++x) c.id_of.push_back(arrow_of[size_t(x)][size_t(x)]);
    c.comp.assign(c.arrows.size(), std::vector<int>(c.arrows.size(), -1));
    for (size_t a = 0; a < c.arrows.size(); ++a)
      for (size_t b = 0; b < c.arrows.size(); ++b)
        if (c.arrows[a].dst == c.arrows[b].src)
          c.comp[a][b] = arrow_of[size_t(c.arrows[a].src)][size_t(c.arrows[b].dst)];
    return c;
  }

  // one object, arrows a finite monoid given by its multiplication table
  static FinCategory from_monoid(const std::vector<std::vector<int>>& mult, int unit) {
    FinCategory c;
    c.nobj = 1;
    for (size_t i = 0; i < mult.size(); ++i) c.arrows.push_back({0, 0, "m" + std::to_string(i)});
    c.id_of = {unit};
    c.comp.assign(mult.size(), std::vector<int>(mult.size(), -1));
    for (size_t a = 0; a < mult.size(); ++a)
      for (size_t b = 0; b < mult.size(); ++b) c.comp[a][b] = mult[b][a];  // "a then b" = b . a
    return c;
  }
};

struct FinFunctor {
  std::vector<int> obj;
  std::vector<int> arr;
  auto operator<=>(const FinFunctor&) const = default;
};

inline bool is_functor(const FinCategory& C, const FinCategory& D, const FinFunctor& F) {
  for (size_t a = 0; a < C.arrows.size(); ++a) {
    if (D.arrows[size_t(F.arr[a])].src != F.obj[size_t(C.arrows[a].src)]) return false;
    if (D.arrows[size_t(F.arr[a])].dst != F.obj[size_t(C.arrows[a].dst)]) return false;
  }
  for (int x = 0; x < C.nobj; ++x)
    if (F.arr[size_t(C.id_of[size_t(x)])] != D.id_of[size_t(F.obj[size_t(x)])]) return false;
  for (size_t a = 0; a < C.arrows.size(); ++a)
    for (size_t b = 0; b < C.arrows.size(); ++b) {
      if (C.arrows[a].dst != C.arrows[b].src) continue;
      if (F.arr[size_t(C.compose(int(a), int(b)))] !=
          D.compose(F.arr[a], F.arr[b]))
        return false;
    }
  return true;
}

inline std::vector<FinFunctor> enumerate_functors(const FinCategory& C, const FinCategory& D) {
  std::vector<FinFunctor> out;
  std::vector<int> obj(size_t(C.nobj), 0);
  std::function<void(int)> rec_obj = [&](int i) {
    if (i == C.nobj) {
      // assign arrows by backtracking
      std::vector<int> arr(C.arrows.size(), -1);
      for (int x = 0; x < C.nobj; ++x)
        arr[size_t(C.id_of[size_t(x)])] = D.id_of[size_t(obj[size_t(x)])];
      std::vector<int> free_arrows;
      for (size_t a = 0; a < C.arrows.size(); ++a)
        if (arr[a] < 0) free_arrows.push_back(int(a));
      std::function<void(size_t)> rec_arr = [&](size_t k) {
        if (k == free_arrows.size()) {
          FinFunctor F{obj, arr};
          if (is_functor(C, D, F)) out.push_back(F);
          return;
        }
        int a = free_arrows[k];
        for (int da : D.homset(obj[size_t(C.arrows[size_t(a)].src)],
                               obj[size_t(C.arrows[size_t(a)].dst)])) {
          arr[size_t(a)] = da;
          rec_arr(k + 1);
        }
        arr[size_t(a)] = -1;
      };
      rec_arr(0);
      return;
    }
    for (int y = 0; y < D.nobj; ++y) {
      obj[size_t(i)] = y;
      rec_obj(i + 1);
    }
  };
  if (C.nobj == 0)
    out.push_back(FinFunctor{});
  else
    rec_obj(0);
  return out;
}

// Functors out of a poset into a finite category: an object per element and
// an arrow per comparable pair, composed consistently.  Determined by the
// values on covers; enumerated by backtracking with commutativity checks.
struct PosetFunctor {
  std::vector<int> obj;                 // per poset element
  std::map<std::pair<int, int>, int> arr;  // per strictly comparable pair
  auto operator<=>(const PosetFunctor&) const = default;
};

inline std::vector<std::pair<int, int>> poset_covers(const Pos& p) {
  std::vector<std::pair<int, int>> covers;
  for (size_t x = 0; x < p.elems.size(); ++x)
    for (size_t y = 0; y < p.elems.size(); ++y) {
      if (x == y || !Pos::leq(p.elems[x], p.elems[y])) continue;
      bool direct = true;
      for (size_t z = 0; z < p.elems.size(); ++z)
        if (z != x && z != y && Pos::leq(p.elems[x], p.elems[z]) &&
            Pos::leq(p.elems[z], p.elems[y]))
          direct = false;
      if (direct) covers.push_back({int(x), int(y)});
    }
  return covers;
}

inline std::vector<PosetFunctor> enumerate_poset_functors(const Pos& p, const FinCategory& D) {
  auto covers = poset_covers(p);
  std::vector<PosetFunctor> out;
  std::vector<int> obj(p.elems.size(), 0);
  std::function<void(size_t)> rec_obj = [&](size_t i) {
    if (i == p.elems.size()) {
      std::map<std::pair<int, int>, int> cover_arr;
      std::function<void(size_t)> rec_cov = [&](size_t k) {
        if (k == covers.size()) {
          // derive all comparable pairs and check path independence
          PosetFunctor F;
          F.obj = obj;
          bool ok = true;
          std::function<int(int, int)> derive = [&](int x, int y) -> int {
            if (x == y) return D.id_of[size_t(obj[size_t(x)])];
            auto it = F.arr.find({x, y});
            if (it != F.arr.end()) return it->second;
            int result = -2;
            for (auto& [cx, cm] : covers) {
              if (cx != x || !Pos::leq(p.elems[size_t(cm)], p.elems[size_t(y)])) continue;
              int rest = derive(cm, y);
              if (rest < 0) return -1;
              int total = D.compose(cover_arr.at({cx, cm}), rest);
              if (result == -2)
                result = total;
              else if (result != total)
                return -1;
            }
            if (result < 0) return -1;
            F.arr[{x, y}] = result;
            return result;
          };
          for (size_t x = 0; x < p.elems.size() && ok; ++x)
            for (size_t y = 0; y < p.elems.size() && ok; ++y) {
              if (x == y || !Pos::leq(p.elems[x], p.elems[y])) continue;
              if (derive(int(x), int(y)) < 0) ok = false;
            }
          if (ok) out.push_back(std::move(F));
          return;
        }
        auto [x, y] = covers[k];
        for (int da : D.homset(obj[size_t(x)], obj[size_t(y)])) {
          cover_arr[{x, y}] = da;
          rec_cov(k + 1);
        }
        cover_arr.erase({x, y});
      };
      rec_cov(0);
      return;
    }
    for (int o = 0; o < D.nobj; ++o) {
      obj[i] = o;
      rec_obj(i + 1);
    }
  };
  rec_obj(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Compose a poset functor with a poset map (precomposition) or a functor
// (postcomposition).
inline PosetFunctor precompose_poset_functor(const Pos& src, const Pos& dst,
                                             const std::function<PosElem(const PosElem&)>& f,
                                             const PosetFunctor& F, const FinCategory& D) {
  PosetFunctor out;
  for (auto& e : src.elems) out.obj.push_back(F.obj[size_t(dst.index_of(f(e)))]);
  for (size_t x = 0; x < src.elems.size(); ++x)
    for (size_t y = 0; y < src.elems.size(); ++y) {
      if (x == y || !Pos::leq(src.elems[x], src.elems[y])) continue;
      int fx = dst.index_of(f(src.elems[x])), fy = dst.index_of(f(src.elems[y]));
      int a = (fx == fy) ? D.id_of[size_t(F.obj[size_t(fx)])] : F.arr.at({fx, fy});
      out.arr[{int(x), int(y)}] = a;
    }
  return out;
}

}  // namespace neckcat
