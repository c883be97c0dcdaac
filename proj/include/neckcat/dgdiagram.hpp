#pragma once

// The strong monoidal diagram dg on necklaces, valued in chain complexes.
// dg(T) has basis the injective necklace maps g: U >-> T graded by dim(U),
// with differential
//   d(g) = sum_{j=1}^{n} (-1)^{j-1} (g . delta_{i_j}  -  g . nu_{i_j, q-i_j})
// over the complement U^c = {i_1 < ... < i_n}.  A map f: T -> T' (extended
// maps allowed) acts on a basis element g by factoring f.g through the
// (barminus, injective) system and keeping the injective part when the
// dimension is preserved.

#include <unordered_map>

#include "chain.hpp"
#include "cube.hpp"

namespace neckcat {

struct DgBasis {
  std::vector<NecklaceMap> maps;                       // all injective maps into T
  std::vector<std::vector<int>> by_degree;             // indices per degree 0..dim(T)
  std::unordered_map<std::string, int> index;          // key -> position in `maps`

  static std::string key(const NecklaceMap& g) {
    std::string s = mask_to_string(g.src.joints) + "|";
    for (int v : g.f.values) s += std::to_string(v) + ",";
    return s;
  }
  int find(const NecklaceMap& g) const {
    auto it = index.find(key(g));
    return it == index.end() ? -1 : it->second;
  }
  // position of g within its degree block
  std::pair<int, int> degree_pos(int idx) const {
    int deg = maps[size_t(idx)].src.dim();
    const auto& blk = by_degree[size_t(deg)];
    for (size_t i = 0; i < blk.size(); ++i)
      if (blk[i] == idx) return {deg, int(i)};
    throw std::logic_error("basis index not in degree block");
  }
};

inline DgBasis dg_basis(const Necklace& t) {
  DgBasis b;
  b.maps = enumerate_injective_into(t);
  b.by_degree.resize(size_t(t.dim()) + 1);
  for (size_t i = 0; i < b.maps.size(); ++i) {
    b.by_degree[size_t(b.maps[i].src.dim())].push_back(int(i));
    b.index[DgBasis::key(b.maps[i])] = int(i);
  }
  return b;
}

template <class K>
struct DgObject {
  Necklace t;
  DgBasis basis;
  ChainComplex<K> complex;
};

template <class K>
DgObject<K> dg_complex(const Necklace& t, const FieldOf<K>& f, int dim_cap = 8) {
  if (t.dim() > dim_cap) throw size_cap_exceeded("dg dimension cap exceeded");
  DgObject<K> out;
  out.t = t;
  out.basis = dg_basis(t);
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  for (int n = 0; n <= t.dim(); ++n) {
    dims.push_back(int(out.basis.by_degree[size_t(n)].size()));
    std::vector<std::string> lab;
    for (int i : out.basis.by_degree[size_t(n)]) lab.push_back(out.basis.maps[size_t(i)].to_string());
    labels.push_back(std::move(lab));
  }
  std::vector<Mat<K>> diffs;
  for (int n = 1; n <= t.dim(); ++n) {
    Mat<K> m(dims[size_t(n - 1)], dims[size_t(n)], f);
    const auto& blk = out.basis.by_degree[size_t(n)];
    for (size_t c = 0; c < blk.size(); ++c) {
      const NecklaceMap& g = out.basis.maps[size_t(blk[c])];
      auto comp = mask_to_list(g.src.complement());
      for (size_t j = 0; j < comp.size(); ++j) {
        K sign = (j % 2 == 0) ? f.one() : -f.one();
        NecklaceMap gd = compose(necklace_delta(g.src, comp[j]), g);
        NecklaceMap gn = compose(necklace_nu(g.src, comp[j]), g);
        auto add = [&](const NecklaceMap& h, K coeff) {
          int idx = out.basis.find(h);
          if (idx < 0) throw std::logic_error("differential left the basis");
          auto [deg, pos] = out.basis.degree_pos(idx);
          if (deg != n - 1) throw std::logic_error("differential degree mismatch");
          m.at(pos, int(c)) = m.at(pos, int(c)) + coeff;
        };
        add(gd, sign);
        add(gn, -sign);
      }
    }
    diffs.push_back(std::move(m));
  }
  out.complex = ChainComplex<K>(f, 0, std::move(dims), std::move(diffs), std::move(labels));
  return out;
}

// Basis action of an extended map: factor f.g, keep the injective part when
// the dimension is preserved.
inline std::optional<NecklaceMap> dg_basis_action(const ExtNecklaceMap& f, const NecklaceMap& g) {
  ExtNecklaceMap fg = ext_compose(ExtNecklaceMap(g), f);
  auto [minus, plus] = ext_factor(fg);
  if (minus.src.dim() != minus.dst.dim()) return std::nullopt;
  return plus;
}

template <class K>
ChainMap<K> dg_on_map(const ExtNecklaceMap& f, const DgObject<K>& src, const DgObject<K>& dst) {
  if (!(src.t == f.src) || !(dst.t == f.dst)) throw invalid_input("dg_on_map endpoint mismatch");
  const FieldOf<K>& fl = src.complex.field;
  std::vector<Mat<K>> comps;
  for (int n = 0; n <= src.t.dim(); ++n)
    comps.push_back(Mat<K>(dst.complex.dim_at(n), src.complex.dim_at(n), fl));
  for (size_t i = 0; i < src.basis.maps.size(); ++i) {
    const NecklaceMap& g = src.basis.maps[i];
    auto [deg, pos] = src.basis.degree_pos(int(i));
    auto img = dg_basis_action(f, g);
    if (!img) continue;
    int idx = dst.basis.find(*img);
    if (idx < 0) throw std::logic_error("action left the target basis");
    auto [deg2, pos2] = dst.basis.degree_pos(idx);
    if (deg2 != deg) throw std::logic_error("action changed the degree");
    comps[size_t(deg)].at(pos2, pos) = fl.one();
  }
  return ChainMap<K>(src.complex, dst.complex, std::move(comps));
}

template <class K>
ChainMap<K> dg_on_map(const NecklaceMap& f, const DgObject<K>& src, const DgObject<K>& dst) {
  return dg_on_map(ExtNecklaceMap(f), src, dst);
}

// The strong monoidal structure: basis bijection dg(T) (x) dg(U) = dg(TvU)
// by g1 (x) g2 -> g1 v g2, which is a chain isomorphism without extra signs.
template <class K>
ChainMap<K> dg_monoidal_iso(const DgObject<K>& a, const DgObject<K>& b, const DgObject<K>& ab) {
  const FieldOf<K>& fl = a.complex.field;
  ChainComplex<K> tens = tensor(a.complex, b.complex);
  std::vector<Mat<K>> comps;
  for (int n = tens.lo; n <= tens.hi(); ++n) comps.push_back(Mat<K>(ab.complex.dim_at(n), tens.dim_at(n), fl));
  for (int i = a.complex.lo; i <= a.complex.hi(); ++i)
    for (int xi = 0; xi < a.complex.dim_at(i); ++xi)
      for (int j = b.complex.lo; j <= b.complex.hi(); ++j)
        for (int yi = 0; yi < b.complex.dim_at(j); ++yi) {
          const NecklaceMap& g1 = a.basis.maps[size_t(a.basis.by_degree[size_t(i)][size_t(xi)])];
          const NecklaceMap& g2 = b.basis.maps[size_t(b.basis.by_degree[size_t(j)][size_t(yi)])];
          NecklaceMap w = g1.wedge(g2);
          int idx = ab.basis.find(w);
          if (idx < 0) throw std::logic_error("wedge left the basis");
          auto [deg, pos] = ab.basis.degree_pos(idx);
          if (deg != i + j) throw std::logic_error("wedge degree mismatch");
          int col = tensor_index(a.complex, b.complex, i + j, i, xi, yi);
          comps[size_t(i + j - tens.lo)].at(pos, col) = fl.one();
        }
  return ChainMap<K>(tens, ab.complex, std::move(comps));
}

template <class K>
bool dg_monoidality_check(const Necklace& t, const Necklace& u, const FieldOf<K>& f) {
  DgObject<K> a = dg_complex(t, f), b = dg_complex(u, f), ab = dg_complex(t.wedge(u), f);
  ChainMap<K> iso = dg_monoidal_iso(a, b, ab);  // the constructor validates the chain-map law
  // bijectivity: square components of full rank in every degree
  for (int n = iso.src.lo; n <= iso.src.hi(); ++n) {
    Mat<K> m = iso.at(n);
    if (m.rows != m.cols || rank(m, f) != m.rows) return false;
  }
  return true;
}

}  // namespace neckcat
