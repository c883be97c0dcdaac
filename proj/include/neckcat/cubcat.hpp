#pragma once

// Truncated cubical sets (with connections) presented by generator-action
// tables, cubical categories with the Day pairing on cells, and the
// cosimplicial cubical categories with representable homs.

#include "cube.hpp"

namespace neckcat {

struct TruncCubSet {
  int cap = 0;
  std::vector<std::vector<std::string>> cells;  // names per level 0..cap
  // action of a single generator letter g with source dimension n on cells
  // of level n: act[n][letter index][cell] -> cell of the letter's target
  std::function<int(const CubeGen&, int cell)> act;

  int size(int n) const { return n <= cap && n >= 0 ? int(cells[size_t(n)].size()) : 0; }

  // contravariant action of an arbitrary cube map via its generator word
  int act_map(const CubeMap& g, int cell) const {
    // g: [1]^m -> [1]^n acts X_n -> X_m; apply letters right to left
    int cur = cell;
    for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) cur = act(*it, cur);
    return cur;
  }
};

inline TruncCubSet representable_cubset(int k, int cap) {
  TruncCubSet x;
  x.cap = cap;
  for (int n = 0; n <= cap; ++n) {
    std::vector<std::string> names;
    for (auto& c : cube_hom(n, k)) names.push_back(c.table_string());
    x.cells.push_back(std::move(names));
  }
  x.act = [k, cap](const CubeGen& g, int cell) {
    CubeMap letter = gen_to_map(g);
    auto src_cells = cube_hom(letter.n, k);  // letter: [1]^{letter.m} -> [1]^{letter.n}
    CubeMap img = cube_compose(letter, src_cells[size_t(cell)]);
    auto dst_cells = cube_hom(letter.m, k);
    for (size_t i = 0; i < dst_cells.size(); ++i)
      if (dst_cells[i].table_equal(img)) return int(i);
    throw std::logic_error("representable action left the cell set");
  };
  return x;
}

inline TruncCubSet empty_cubset(int cap) {
  TruncCubSet x;
  x.cap = cap;
  x.cells.resize(size_t(cap) + 1);
  x.act = [](const CubeGen&, int) -> int { throw std::logic_error("empty cubical set"); };
  return x;
}

struct CubicalCategory {
  int nobj = 0, cap = 0;
  std::vector<TruncCubSet> hom;  // i*nobj + j
  std::vector<int> unit_cell;    // 0-cell of hom(i,i)
  // Day pairing on cells: hom(i,j)_a x hom(j,k)_b -> hom(i,k)_{a+b}
  std::function<int(int i, int j, int k, int a, int xa, int b, int xb)> pair;

  const TruncCubSet& at(int i, int j) const { return hom[size_t(i * nobj + j)]; }

  void validate() const {
    // pairing associativity on cells within the truncation
    for (int i = 0; i < nobj; ++i)
      for (int j = 0; j < nobj; ++j)
        for (int k = 0; k < nobj; ++k)
          for (int l = 0; l < nobj; ++l)
            for (int a = 0; a <= cap; ++a)
              for (int b = 0; a + b <= cap; ++b)
                for (int c = 0; a + b + c <= cap; ++c)
                  for (int xa = 0; xa < at(i, j).size(a); ++xa)
                    for (int xb = 0; xb < at(j, k).size(b); ++xb)
                      for (int xc = 0; xc < at(k, l).size(c); ++xc) {
                        int lhs = pair(i, k, l, a + b, pair(i, j, k, a, xa, b, xb), c, xc);
                        int rhs = pair(i, j, l, a, xa, b + c, pair(j, k, l, b, xb, c, xc));
                        if (lhs != rhs) throw invalid_input("cubical pairing associativity");
                      }
    // naturality of the pairing in generator actions on the left slot
    for (int i = 0; i < nobj; ++i)
      for (int j = 0; j < nobj; ++j)
        for (int k = 0; k < nobj; ++k)
          for (int a = 1; a <= cap; ++a)
            for (int b = 0; a + b <= cap; ++b)
              for (int xa = 0; xa < at(i, j).size(a); ++xa)
                for (int xb = 0; xb < at(j, k).size(b); ++xb)
                  for (int pos = 1; pos <= a; ++pos)
                    for (int eps = 0; eps <= 1; ++eps) {
                      CubeGen g{'d', pos, eps, a - 1};
                      int lhs = pair(i, j, k, a - 1, at(i, j).act(g, xa), b, xb);
                      CubeGen gg{'d', pos, eps, a + b - 1};
                      int rhs = at(i, k).act(gg, pair(i, j, k, a, xa, b, xb));
                      if (lhs != rhs) throw invalid_input("cubical pairing naturality");
                    }
  }
};

// The cosimplicial cubical category with representable homs.  The pairing
// tensors cells and postcomposes the middle-joint face.
struct PhiCub {
  int n = 0, cap = 0;
  CubicalCategory cat;
};

inline PhiCub phi_cub(int n, int cap) {
  PhiCub out;
  out.n = n;
  out.cap = cap;
  CubicalCategory& c = out.cat;
  c.nobj = n + 1;
  c.cap = cap;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i > j)
        c.hom.push_back(empty_cubset(cap));
      else
        c.hom.push_back(representable_cubset(i == j ? 0 : j - i - 1, cap));
    }
  for (int i = 0; i <= n; ++i) c.unit_cell.push_back(0);
  c.pair = [n, cap](int i, int j, int k, int a, int xa, int b, int xb) -> int {
    if (!(i <= j && j <= k)) throw invalid_input("pairing outside the order");
    if (i == j) {
      // unit pairing: hom(i,i) = square-0; the cell is a degeneracy word,
      // acting trivially
      if (j == k) return 0;
      // tensor with the unique a-cell of square-0 then no face is needed:
      // the composite is the degeneracy-extended cell
      CubeMap x = cube_hom(a, 0)[size_t(xa)];
      CubeMap y = cube_hom(b, k - j - 1)[size_t(xb)];
      CubeMap t = cube_tensor(x, y);
      auto cells = cube_hom(a + b, k - i - 1);
      for (size_t q = 0; q < cells.size(); ++q)
        if (cells[q].table_equal(t)) return int(q);
      throw std::logic_error("unit pairing left the cell set");
    }
    if (j == k) {
      CubeMap x = cube_hom(a, j - i - 1)[size_t(xa)];
      CubeMap y = cube_hom(b, 0)[size_t(xb)];
      CubeMap t = cube_tensor(x, y);
      auto cells = cube_hom(a + b, k - i - 1);
      for (size_t q = 0; q < cells.size(); ++q)
        if (cells[q].table_equal(t)) return int(q);
      throw std::logic_error("unit pairing left the cell set");
    }
    CubeMap x = cube_hom(a, j - i - 1)[size_t(xa)];
    CubeMap y = cube_hom(b, k - j - 1)[size_t(xb)];
    CubeMap t = cube_compose(cube_tensor(x, y), cube_face(k - i - 1, j - i, 1));
    auto cells = cube_hom(a + b, k - i - 1);
    for (size_t q = 0; q < cells.size(); ++q)
      if (cells[q].table_equal(t)) return int(q);
    throw std::logic_error("pairing left the cell set");
  };
  return out;
}

// Cubical functors out of a cosimplicial cubical category, enumerated via
// the Yoneda description of the representable homs: a map out of the
// standard m-cube is a choice of m-cell, with all lower cells derived by
// the generator actions; composition preservation is checked on all cell
// pairs within the truncation.
struct CubFunctor {
  std::vector<int> obj;
  std::map<std::pair<int, int>, int> top_cell;  // image of the universal cell, i < j
  auto operator<=>(const CubFunctor&) const = default;
};

inline std::vector<CubFunctor> enumerate_cub_functors(const PhiCub& Phi, const CubicalCategory& D) {
  const CubicalCategory& C = Phi.cat;
  int n = Phi.n;
  std::vector<CubFunctor> out;
  std::vector<int> obj(size_t(n + 1), 0);
  // derived level maps: a cell c of square^m at level r maps to the action
  // of c on the chosen top cell
  auto cell_image = [&](int i, int j, const CubFunctor& F, int r, int cell) -> int {
    int m = j - i - 1;
    CubeMap c = cube_hom(r, m)[size_t(cell)];
    return D.at(F.obj[size_t(i)], F.obj[size_t(j)]).act_map(c, F.top_cell.at({i, j}));
  };
  std::function<void(int)> rec = [&](int i) {
    if (i <= n) {
      for (int y = 0; y < D.nobj; ++y) {
        obj[size_t(i)] = y;
        rec(i + 1);
      }
      return;
    }
    // unit 0-cells must exist at the diagonal images
    CubFunctor F;
    F.obj = obj;
    std::vector<std::pair<int, int>> pairs;
    for (int w = 1; w <= n; ++w)
      for (int a = 0; a + w <= n; ++a) pairs.push_back({a, a + w});
    auto partial_ok = [&](const std::pair<int, int>& last) {
      for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          for (int c = b + 1; c <= n; ++c) {
            if (!(std::pair(a, b) == last || std::pair(b, c) == last ||
                  std::pair(a, c) == last))
              continue;
            if (!F.top_cell.count({a, b}) || !F.top_cell.count({b, c}) ||
                !F.top_cell.count({a, c}))
              continue;
            // preservation of the pairing on all cell pairs within cap
            for (int la = 0; la <= b - a - 1 && la + (c - b - 1) <= C.cap; ++la)
              for (int lb = 0; lb <= c - b - 1; ++lb) {
                if (la + lb > C.cap) continue;
                for (int xa = 0; xa < C.at(a, b).size(la); ++xa)
                  for (int xb = 0; xb < C.at(b, c).size(lb); ++xb) {
                    int lhs = cell_image(a, c, F, la + lb, C.pair(a, b, c, la, xa, lb, xb));
                    int rhs = D.pair(obj[size_t(a)], obj[size_t(b)], obj[size_t(c)], la,
                                     cell_image(a, b, F, la, xa), lb, cell_image(b, c, F, lb, xb));
                    if (lhs != rhs) return false;
                  }
              }
          }
      return true;
    };
    std::function<void(size_t)> rec2 = [&](size_t k) {
      if (k == pairs.size()) {
        out.push_back(F);
        return;
      }
      auto [a, b] = pairs[k];
      int m = b - a - 1;
      if (m > D.cap) throw size_cap_exceeded("functor enumeration beyond truncation");
      int count = D.at(obj[size_t(a)], obj[size_t(b)]).size(m);
      for (int y = 0; y < count; ++y) {
        F.top_cell[{a, b}] = y;
        if (partial_ok(pairs[k])) rec2(k + 1);
      }
      F.top_cell.erase({a, b});
    };
    rec2(0);
  };
  rec(0);
  return out;
}

}  // namespace neckcat
