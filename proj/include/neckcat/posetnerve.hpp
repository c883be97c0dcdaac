#pragma once

// Nerves of the joint-refinement posets P_T = { V | T <= V <= [p] } and
// their normalized chains; fundamental chains, the comparison map z from
// the dg diagram, and Alexander-Whitney comultiplication on products.
//
// Poset elements are tuples of masks ordered componentwise by containment,
// so that binary products are concatenation.

#include <map>

#include "dgdiagram.hpp"
#include "simpset.hpp"

namespace neckcat {

using PosElem = std::vector<Mask>;

struct Pos {
  std::vector<PosElem> elems;

  static bool leq(const PosElem& x, const PosElem& y) {
    for (size_t i = 0; i < x.size(); ++i)
      if (x[i] & ~y[i]) return false;
    return true;
  }
  int index_of(const PosElem& e) const {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == e) return int(i);
    return -1;
  }
  static Pos cube(const Necklace& t) {
    Pos p;
    auto free_bits = mask_to_list(t.complement());
    for (Mask s = 0;; ++s) {
      Mask v = t.joints;
      for (size_t i = 0; i < free_bits.size(); ++i)
        if (mask_contains(s, int(i))) v |= (1u << free_bits[i]);
      p.elems.push_back({v});
      if (s + 1 >= (1u << free_bits.size())) break;
    }
    std::sort(p.elems.begin(), p.elems.end(), [](const PosElem& a, const PosElem& b) {
      if (popcount(a[0]) != popcount(b[0])) return popcount(a[0]) < popcount(b[0]);
      return a[0] < b[0];
    });
    return p;
  }
  static Pos product(const Pos& a, const Pos& b) {
    Pos p;
    for (auto& x : a.elems)
      for (auto& y : b.elems) {
        PosElem e = x;
        e.insert(e.end(), y.begin(), y.end());
        p.elems.push_back(e);
      }
    return p;
  }
};

// Strict chains in a poset, as the basis of normalized nerve chains.
template <class K>
struct PosetChains {
  Pos poset;
  std::vector<std::vector<std::vector<int>>> chains;  // per degree, chain = elem indices
  std::map<std::vector<int>, std::pair<int, int>> index;
  ChainComplex<K> complex;

  std::pair<int, int> find(const std::vector<int>& c) const {
    auto it = index.find(c);
    if (it == index.end()) throw invalid_input("chain not in basis");
    return it->second;
  }
};

template <class K>
PosetChains<K> poset_chains(const Pos& p, const FieldOf<K>& f) {
  PosetChains<K> out;
  out.poset = p;
  std::vector<std::vector<int>> cur;
  for (size_t i = 0; i < p.elems.size(); ++i) cur.push_back({int(i)});
  int deg = 0;
  while (!cur.empty()) {
    out.chains.push_back(cur);
    std::vector<std::vector<int>> nxt;
    for (auto& c : cur)
      for (size_t j = 0; j < p.elems.size(); ++j) {
        if (int(j) == c.back()) continue;
        if (Pos::leq(p.elems[size_t(c.back())], p.elems[j])) {
          auto c2 = c;
          c2.push_back(int(j));
          nxt.push_back(std::move(c2));
        }
      }
    cur = std::move(nxt);
    ++deg;
  }
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  for (size_t n = 0; n < out.chains.size(); ++n) {
    std::sort(out.chains[n].begin(), out.chains[n].end());
    dims.push_back(int(out.chains[n].size()));
    std::vector<std::string> lab;
    for (size_t i = 0; i < out.chains[n].size(); ++i) {
      out.index[out.chains[n][i]] = {int(n), int(i)};
      std::string s;
      for (int e : out.chains[n][i]) {
        for (Mask m : p.elems[size_t(e)]) s += mask_to_string(m);
        s += "<";
      }
      lab.push_back(s);
    }
    labels.push_back(std::move(lab));
  }
  std::vector<Mat<K>> diffs;
  for (size_t n = 1; n < out.chains.size(); ++n) {
    Mat<K> m(dims[n - 1], dims[n], f);
    for (size_t c = 0; c < out.chains[n].size(); ++c) {
      const auto& ch = out.chains[n][c];
      for (size_t i = 0; i < ch.size(); ++i) {
        std::vector<int> face;
        for (size_t k = 0; k < ch.size(); ++k)
          if (k != i) face.push_back(ch[k]);
        auto [fd, fp] = out.find(face);
        K sign = (i % 2 == 0) ? f.one() : -f.one();
        m.at(fp, int(c)) = m.at(fp, int(c)) + sign;
      }
    }
    diffs.push_back(std::move(m));
  }
  out.complex = ChainComplex<K>(f, 0, std::move(dims), std::move(diffs), std::move(labels));
  return out;
}

template <class K>
PosetChains<K> nerve_chains(const Necklace& t, const FieldOf<K>& f) {
  return poset_chains<K>(Pos::cube(t), f);
}

// Chain map induced on normalized nerve chains by a monotone map of posets;
// image chains with a repetition are degenerate and die.
template <class K>
ChainMap<K> nerve_chain_map(const PosetChains<K>& src, const PosetChains<K>& dst,
                            const std::function<PosElem(const PosElem&)>& fmap) {
  const FieldOf<K>& f = src.complex.field;
  std::vector<Mat<K>> comps;
  for (int n = src.complex.lo; n <= src.complex.hi(); ++n)
    comps.push_back(Mat<K>(dst.complex.dim_at(n), src.complex.dim_at(n), f));
  for (size_t n = 0; n < src.chains.size(); ++n)
    for (size_t c = 0; c < src.chains[n].size(); ++c) {
      std::vector<int> img;
      bool degenerate = false;
      for (int e : src.chains[n][c]) {
        int i = dst.poset.index_of(fmap(src.poset.elems[size_t(e)]));
        if (i < 0) throw invalid_input("poset map leaves the target");
        if (!img.empty() && img.back() == i) {
          degenerate = true;
          break;
        }
        img.push_back(i);
      }
      if (degenerate) continue;
      auto [d2, p2] = dst.find(img);
      if (d2 != int(n)) throw std::logic_error("nerve map degree mismatch");
      comps[n].at(p2, int(c)) = f.one();
    }
  return ChainMap<K>(src.complex, dst.complex, std::move(comps));
}

// Poset map of an extended necklace map: V -> f(V) u U'.
inline std::function<PosElem(const PosElem&)> hc_poset_map(const ExtNecklaceMap& m) {
  return [m](const PosElem& v) -> PosElem { return {m.f.apply(v[0]) | m.marker}; };
}

template <class K>
ChainMap<K> nerve_on_map(const ExtNecklaceMap& m, const PosetChains<K>& src,
                         const PosetChains<K>& dst) {
  return nerve_chain_map(src, dst, hc_poset_map(m));
}

// The nerve of P_T as a finite simplicial set (non-degenerate simplices are
// the strict chains).
inline FinSimplicialSet poset_nerve_sset(const Pos& p) {
  FinSimplicialSet K;
  std::map<std::vector<int>, int> id_of;
  std::vector<std::vector<int>> cur;
  for (size_t i = 0; i < p.elems.size(); ++i) cur.push_back({int(i)});
  while (!cur.empty()) {
    std::sort(cur.begin(), cur.end());
    std::vector<std::vector<int>> nxt;
    for (auto& c : cur) {
      std::vector<SimplexRef> faces;
      if (c.size() > 1)
        for (size_t i = 0; i < c.size(); ++i) {
          std::vector<int> face;
          for (size_t k = 0; k < c.size(); ++k)
            if (k != i) face.push_back(c[k]);
          faces.push_back(SimplexRef{id_of.at(face), MonoMap::identity(int(c.size()) - 2)});
        }
      std::string nm;
      for (int e : c) nm += std::to_string(e) + "<";
      id_of[c] = K.add_nd(int(c.size()) - 1, nm, std::move(faces));
      for (size_t j = 0; j < p.elems.size(); ++j) {
        if (int(j) == c.back()) continue;
        if (Pos::leq(p.elems[size_t(c.back())], p.elems[j])) {
          auto c2 = c;
          c2.push_back(int(j));
          nxt.push_back(std::move(c2));
        }
      }
    }
    cur = std::move(nxt);
  }
  return K;
}

// ---------------------------------------------------------------------------
// Fundamental chains and the comparison map

// Permutations of the complement of T.  Identity first.
inline std::vector<std::vector<int>> permutations_of(const std::vector<int>& xs) {
  std::vector<int> cur = xs;
  std::vector<std::vector<int>> out;
  std::sort(cur.begin(), cur.end());
  do out.push_back(cur);
  while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

inline int permutation_sign(const std::vector<int>& perm) {
  int sgn = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sgn = -sgn;
  return sgn;
}

// The flag T < T u {tau(i_1)} < ... < [p] as a chain of poset indices.
inline std::vector<int> flag_of_permutation(const Pos& p, const Necklace& t,
                                            const std::vector<int>& tau) {
  std::vector<int> chain;
  Mask v = t.joints;
  chain.push_back(p.index_of({v}));
  for (int x : tau) {
    v |= (1u << x);
    chain.push_back(p.index_of({v}));
  }
  return chain;
}

// (-1)^n sum_tau sgn(tau) tau-flag, in degree n = dim T.
template <class K>
std::vector<K> fundamental_chain(const Necklace& t, const PosetChains<K>& nerv) {
  const FieldOf<K>& f = nerv.complex.field;
  int n = t.dim();
  std::vector<K> out(size_t(nerv.complex.dim_at(n)), f.zero());
  auto comp = mask_to_list(t.complement());
  K outer = (n % 2 == 0) ? f.one() : -f.one();
  for (auto& tau : permutations_of(comp)) {
    auto chain = flag_of_permutation(nerv.poset, t, tau);
    auto [deg, pos] = nerv.find(chain);
    if (deg != n) throw std::logic_error("fundamental flag degree mismatch");
    K sgn = permutation_sign(tau) > 0 ? f.one() : -f.one();
    out[size_t(pos)] = out[size_t(pos)] + outer * sgn;
  }
  return out;
}

// z_T: dg(T) -> N(P_T) sends a basis map g: U >-> T to the pushforward of
// the fundamental chain of U along hc(g).
template <class K>
ChainMap<K> z_map(const Necklace& t, const DgObject<K>& dg, const PosetChains<K>& nerv) {
  const FieldOf<K>& f = dg.complex.field;
  std::vector<Mat<K>> comps;
  for (int n = 0; n <= t.dim(); ++n)
    comps.push_back(Mat<K>(nerv.complex.dim_at(n), dg.complex.dim_at(n), f));
  for (size_t i = 0; i < dg.basis.maps.size(); ++i) {
    const NecklaceMap& g = dg.basis.maps[i];
    auto [deg, pos] = dg.basis.degree_pos(int(i));
    PosetChains<K> nu = nerve_chains(g.src, f);
    std::vector<K> fc = fundamental_chain(g.src, nu);
    ChainMap<K> push = nerve_on_map(ExtNecklaceMap(g), nu, nerv);
    std::vector<K> img = push.at(deg).apply(fc, f);
    for (size_t r = 0; r < img.size(); ++r) comps[size_t(deg)].at(int(r), pos) = img[r];
  }
  return ChainMap<K>(dg.complex, nerv.complex, std::move(comps));
}

// ---------------------------------------------------------------------------
// Alexander-Whitney on nerves of product posets:
//   AW(c) = sum_k front_k(pr1 c) (x) back_{n-k}(pr2 c)
// with degenerate pieces dropped.

template <class K>
ChainMap<K> alexander_whitney(const PosetChains<K>& prod, const PosetChains<K>& a,
                              const PosetChains<K>& b, size_t arity_a) {
  const FieldOf<K>& f = prod.complex.field;
  ChainComplex<K> tens = tensor(a.complex, b.complex);
  std::vector<Mat<K>> comps;
  for (int n = prod.complex.lo; n <= prod.complex.hi(); ++n)
    comps.push_back(Mat<K>(tens.dim_at(n), prod.complex.dim_at(n), f));
  for (size_t n = 0; n < prod.chains.size(); ++n)
    for (size_t c = 0; c < prod.chains[n].size(); ++c) {
      const auto& ch = prod.chains[n][c];
      for (size_t k = 0; k < ch.size(); ++k) {
        // front in the first factor: elements 0..k, back: k..n
        std::vector<int> front, back;
        bool dead = false;
        for (size_t i = 0; i <= k && !dead; ++i) {
          const PosElem& e = prod.poset.elems[size_t(ch[i])];
          PosElem x(e.begin(), e.begin() + long(arity_a));
          int idx = a.poset.index_of(x);
          if (idx < 0) throw invalid_input("projection leaves factor poset");
          if (!front.empty() && front.back() == idx) dead = true;
          front.push_back(idx);
        }
        for (size_t i = k; i < ch.size() && !dead; ++i) {
          const PosElem& e = prod.poset.elems[size_t(ch[i])];
          PosElem y(e.begin() + long(arity_a), e.end());
          int idx = b.poset.index_of(y);
          if (idx < 0) throw invalid_input("projection leaves factor poset");
          if (!back.empty() && back.back() == idx) dead = true;
          back.push_back(idx);
        }
        if (dead) continue;
        auto [df, pf] = a.find(front);
        auto [db, pb] = b.find(back);
        if (df + db != int(n)) throw std::logic_error("AW bidegree mismatch");
        int row = tensor_index(a.complex, b.complex, int(n), df, pf, pb);
        comps[n].at(row, int(c)) = comps[n].at(row, int(c)) + f.one();
      }
    }
  return ChainMap<K>(prod.complex, tens, std::move(comps));
}

}  // namespace neckcat
