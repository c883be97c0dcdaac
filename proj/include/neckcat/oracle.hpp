#pragma once

// Truncated weighted colimits, realized as coequalizers.  For a diagram D
// on necklaces valued in chain complexes and a weight X = K_bullet(a,b),
// the colimit restricted to necklaces of rank <= P is the cokernel of
//   (+)_{f: T -> U} X_U . D(T)  =>  (+)_T X_T . D(T)
// It suffices to impose the relations of the elementary maps (codegeneracy,
// inner coface, joint drop), since every map in the truncated diagram is a
// composite of those without leaving the rank cap.
//
// For the diagrams used here each relation row has at most two nonzero
// entries, so the coequalizer reduces by a coefficient-tracking union-find.

#include "posetnerve.hpp"

namespace neckcat {

template <class K>
struct DiagramOps {
  std::function<ChainComplex<K>(const Necklace&)> complex_of;
  std::function<ChainMap<K>(const NecklaceMap&)> map_of;
};

template <class K>
DiagramOps<K> dg_diagram_ops(const FieldOf<K>& f) {
  auto cache = std::make_shared<std::map<Necklace, DgObject<K>>>();
  auto get = [cache, f](const Necklace& t) -> const DgObject<K>& {
    auto it = cache->find(t);
    if (it == cache->end()) it = cache->emplace(t, dg_complex(t, f)).first;
    return it->second;
  };
  DiagramOps<K> ops;
  ops.complex_of = [get](const Necklace& t) { return get(t).complex; };
  ops.map_of = [get](const NecklaceMap& m) { return dg_on_map(m, get(m.src), get(m.dst)); };
  return ops;
}

template <class K>
DiagramOps<K> hc_chains_diagram_ops(const FieldOf<K>& f) {
  auto cache = std::make_shared<std::map<Necklace, PosetChains<K>>>();
  auto get = [cache, f](const Necklace& t) -> const PosetChains<K>& {
    auto it = cache->find(t);
    if (it == cache->end()) it = cache->emplace(t, nerve_chains(t, f)).first;
    return it->second;
  };
  DiagramOps<K> ops;
  ops.complex_of = [get](const Necklace& t) { return get(t).complex; };
  ops.map_of = [get](const NecklaceMap& m) {
    return nerve_on_map(ExtNecklaceMap(m), get(m.src), get(m.dst));
  };
  return ops;
}

// All elementary maps out of t whose target rank stays <= pcap.
inline std::vector<NecklaceMap> elementary_maps_from(const Necklace& t, int pcap) {
  std::vector<NecklaceMap> out;
  for (int i = 0; i + 1 <= t.p; ++i) {
    IntervalMap e = IntervalMap::codegeneracy(t.p - 1, i);
    out.push_back(NecklaceMap(t, Necklace(t.p - 1, e.apply(t.joints)), e));
  }
  if (t.p + 1 <= pcap)
    for (int j = 1; j <= t.p; ++j) {
      IntervalMap e = IntervalMap::coface(t.p + 1, j);
      out.push_back(NecklaceMap(t, Necklace(t.p + 1, e.apply(t.joints)), e));
    }
  for (int j : mask_to_list(t.joints & mask_range(1, t.p - 1)))
    out.push_back(NecklaceMap(t, Necklace(t.p, t.joints & ~(1u << j)), IntervalMap::identity(t.p)));
  return out;
}

template <class K>
struct SignedUF {
  FieldOf<K> field;
  std::vector<int> parent;
  std::vector<K> coeff;  // x_i = coeff_i * x_{parent_i}
  std::vector<char> zero;

  explicit SignedUF(int n, const FieldOf<K>& f) : field(f), parent(size_t(n)), coeff(size_t(n), f.one()), zero(size_t(n), 0) {
    for (int i = 0; i < n; ++i) parent[size_t(i)] = i;
  }
  std::pair<int, K> find(int i) {
    // iterative path compression
    std::vector<int> path;
    int r = i;
    while (parent[size_t(r)] != r) {
      path.push_back(r);
      r = parent[size_t(r)];
    }
    K acc = field.one();
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      acc = coeff[size_t(*it)] * acc;
      parent[size_t(*it)] = r;
      coeff[size_t(*it)] = acc;
    }
    return {r, i == r ? field.one() : coeff[size_t(i)]};
  }
  bool is_zero(int i) {
    auto [r, c] = find(i);
    (void)c;
    return zero[size_t(r)];
  }
  // impose a x_i = b x_j
  void relate(int i, const K& a, int j, const K& b) {
    auto [ri, ci] = find(i);
    auto [rj, cj] = find(j);
    if (ri == rj) {
      K d = a * ci - b * cj;
      if (!d.is_zero()) zero[size_t(ri)] = 1;
      return;
    }
    // a ci x_ri = b cj x_rj  ->  x_ri = (b cj / (a ci)) x_rj
    parent[size_t(ri)] = rj;
    coeff[size_t(ri)] = (b * cj) / (a * ci);
    if (zero[size_t(ri)]) zero[size_t(rj)] = 1;
  }
  void kill(int i) {
    auto [r, c] = find(i);
    (void)c;
    zero[size_t(r)] = 1;
  }
};

template <class K>
struct TruncatedColimit {
  int pcap = 0;
  std::vector<Necklace> necklaces;
  std::map<Necklace, int> neck_index;
  std::map<Necklace, std::vector<Instance>> instances;
  std::map<Necklace, ChainComplex<K>> dvals;

  struct Gen {
    int neck, inst, degree, pos;
  };
  std::vector<Gen> gens;
  std::map<std::tuple<int, int, int, int>, int> gen_index;
  std::shared_ptr<SignedUF<K>> uf;
  std::vector<int> class_of_gen;        // -1 when zero
  std::vector<K> coeff_of_gen;          // gen = coeff * class representative
  std::vector<int> class_degree;
  std::vector<int> class_root_gen;
  std::map<int, int> dims;              // degree -> class count

  int gid(int nk, int inst, int deg, int pos) const {
    auto it = gen_index.find({nk, inst, deg, pos});
    if (it == gen_index.end()) throw std::logic_error("unknown colimit generator");
    return it->second;
  }
};

template <class K>
TruncatedColimit<K> truncated_colimit(const BipointedSSet& Kab, const DiagramOps<K>& D,
                                      const FieldOf<K>& f, int pcap) {
  TruncatedColimit<K> col;
  col.pcap = pcap;
  for (auto& t : enumerate_necklaces_up_to(pcap)) {
    auto xs = necklace_instances(Kab, t);
    if (xs.empty()) continue;
    col.neck_index[t] = int(col.necklaces.size());
    col.necklaces.push_back(t);
    col.instances[t] = std::move(xs);
    col.dvals.emplace(t, D.complex_of(t));
  }
  // generators
  for (size_t nk = 0; nk < col.necklaces.size(); ++nk) {
    const Necklace& t = col.necklaces[nk];
    const ChainComplex<K>& c = col.dvals.at(t);
    int ninst = int(col.instances.at(t).size());
    for (int x = 0; x < ninst; ++x)
      for (int deg = c.lo; deg <= c.hi(); ++deg)
        for (int pos = 0; pos < c.dim_at(deg); ++pos) {
          col.gen_index[{int(nk), x, deg, pos}] = int(col.gens.size());
          col.gens.push_back({int(nk), x, deg, pos});
        }
  }
  col.uf = std::make_shared<SignedUF<K>>(int(col.gens.size()), f);
  auto inst_index = [&](const Necklace& t, const Instance& x) {
    const auto& xs = col.instances.at(t);
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.end() || !(*it == x)) throw std::logic_error("instance not in table");
    return int(it - xs.begin());
  };
  // relations from elementary maps e: T -> U (contravariant on instances)
  for (size_t nk = 0; nk < col.necklaces.size(); ++nk) {
    const Necklace& t = col.necklaces[nk];
    for (auto& e : elementary_maps_from(t, pcap)) {
      auto itU = col.neck_index.find(e.dst);
      if (itU == col.neck_index.end()) continue;  // no instances over the target
      int nu = itU->second;
      ChainMap<K> de = D.map_of(e);
      const auto& xsU = col.instances.at(e.dst);
      // memoized instance action X(e): X_U -> X_T
      std::vector<int> act_map;
      act_map.reserve(xsU.size());
      for (auto& x : xsU) act_map.push_back(inst_index(t, act(Kab, e, x)));
      const ChainComplex<K>& dt = col.dvals.at(t);
      for (int deg = dt.lo; deg <= dt.hi(); ++deg) {
        Mat<K> m = de.at(deg);
        for (int pos = 0; pos < dt.dim_at(deg); ++pos) {
          // column pos of D(e) has at most one entry
          int hit = -1;
          K hv = f.zero();
          for (int r = 0; r < m.rows; ++r)
            if (!m.at(r, pos).is_zero()) {
              if (hit >= 0) throw size_cap_exceeded("relation with more than two terms");
              hit = r;
              hv = m.at(r, pos);
            }
          for (size_t xi = 0; xi < xsU.size(); ++xi) {
            int left = col.gid(int(nk), act_map[xi], deg, pos);
            if (hit < 0) {
              col.uf->kill(left);
            } else {
              int right = col.gid(nu, int(xi), deg, hit);
              // x_left = hv * x_right
              col.uf->relate(left, f.one(), right, hv);
            }
          }
        }
      }
    }
  }
  // collect classes
  col.class_of_gen.assign(col.gens.size(), -1);
  col.coeff_of_gen.assign(col.gens.size(), f.one());
  std::map<int, int> root_class;
  for (size_t g = 0; g < col.gens.size(); ++g) {
    auto [r, c] = col.uf->find(int(g));
    if (col.uf->zero[size_t(r)]) continue;
    auto it = root_class.find(r);
    int cls;
    if (it == root_class.end()) {
      cls = int(col.class_degree.size());
      root_class[r] = cls;
      col.class_degree.push_back(col.gens[size_t(r)].degree);
      col.class_root_gen.push_back(r);
      col.dims[col.gens[size_t(r)].degree]++;
    } else
      cls = it->second;
    col.class_of_gen[g] = cls;
    col.coeff_of_gen[g] = c;
  }
  return col;
}

// The quotient as an actual chain complex, with generator inclusion data.
template <class K>
ChainComplex<K> colimit_complex(const TruncatedColimit<K>& col, const FieldOf<K>& f) {
  if (col.class_degree.empty()) return ChainComplex<K>::zero(f);
  int lo = col.class_degree[0], hi = col.class_degree[0];
  for (int d : col.class_degree) {
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  std::vector<int> dims(size_t(hi - lo + 1), 0);
  std::vector<std::vector<int>> by_degree(size_t(hi - lo + 1));
  std::vector<int> pos_of_class(col.class_degree.size());
  for (size_t c = 0; c < col.class_degree.size(); ++c) {
    int d = col.class_degree[c] - lo;
    pos_of_class[c] = int(by_degree[size_t(d)].size());
    by_degree[size_t(d)].push_back(int(c));
    dims[size_t(d)]++;
  }
  std::vector<Mat<K>> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Mat<K> m(dims[size_t(n - 1 - lo)], dims[size_t(n - lo)], f);
    for (int cls : by_degree[size_t(n - lo)]) {
      int root = col.class_root_gen[size_t(cls)];
      auto gen = col.gens[size_t(root)];
      const Necklace& t = col.necklaces[size_t(gen.neck)];
      const ChainComplex<K>& dt = col.dvals.at(t);
      Mat<K> dn = dt.diff(gen.degree);
      for (int r = 0; r < dn.rows; ++r) {
        if (dn.at(r, gen.pos).is_zero()) continue;
        int g2 = col.gid(gen.neck, gen.inst, gen.degree - 1, r);
        int cls2 = col.class_of_gen[size_t(g2)];
        if (cls2 < 0) continue;
        m.at(pos_of_class[size_t(cls2)], pos_of_class[size_t(cls)]) =
            m.at(pos_of_class[size_t(cls2)], pos_of_class[size_t(cls)]) +
            dn.at(r, gen.pos) * col.coeff_of_gen[size_t(g2)];
      }
    }
    diffs.push_back(std::move(m));
  }
  return ChainComplex<K>(f, lo, std::move(dims), std::move(diffs));
}

// Canonical map from the colimit to a cocone target: cocone(T, x) is a
// chain map D(T) -> W, consistency across all generators is verified.
template <class K>
ChainMap<K> colimit_cocone_map(
    const TruncatedColimit<K>& col, const ChainComplex<K>& colimit, const ChainComplex<K>& W,
    const std::function<ChainMap<K>(const Necklace&, const Instance&)>& cocone,
    const FieldOf<K>& f) {
  int lo = colimit.lo;
  // column of each class = image of its root generator
  std::vector<int> pos_of_class(col.class_degree.size());
  {
    std::vector<int> counters(colimit.dims.size() + 8, 0);
    for (size_t c = 0; c < col.class_degree.size(); ++c) {
      int d = col.class_degree[c] - lo;
      pos_of_class[c] = counters[size_t(d)]++;
    }
  }
  std::vector<Mat<K>> comps;
  for (int n = colimit.lo; n <= colimit.hi(); ++n) comps.push_back(Mat<K>(W.dim_at(n), colimit.dim_at(n), f));
  std::map<std::pair<int, int>, ChainMap<K>> cocone_cache;
  auto get_cocone = [&](int nk, int inst) -> const ChainMap<K>& {
    auto key = std::pair(nk, inst);
    auto it = cocone_cache.find(key);
    if (it == cocone_cache.end())
      it = cocone_cache
               .emplace(key, cocone(col.necklaces[size_t(nk)],
                                    col.instances.at(col.necklaces[size_t(nk)])[size_t(inst)]))
               .first;
    return it->second;
  };
  for (size_t c = 0; c < col.class_degree.size(); ++c) {
    int root = col.class_root_gen[c];
    auto gen = col.gens[size_t(root)];
    const ChainMap<K>& cm = get_cocone(gen.neck, gen.inst);
    Mat<K> m = cm.at(gen.degree);
    for (int r = 0; r < m.rows; ++r)
      comps[size_t(gen.degree - lo)].at(r, pos_of_class[c]) = m.at(r, gen.pos);
  }
  // consistency: every generator maps to coeff * image(root)
  for (size_t g = 0; g < col.gens.size(); ++g) {
    auto gen = col.gens[g];
    const ChainMap<K>& cm = get_cocone(gen.neck, gen.inst);
    Mat<K> m = cm.at(gen.degree);
    for (int r = 0; r < m.rows; ++r) {
      K expect = f.zero();
      if (col.class_of_gen[g] >= 0)
        expect = col.coeff_of_gen[g] *
                 comps[size_t(gen.degree - lo)].at(r, pos_of_class[size_t(col.class_of_gen[g])]);
      if (!(m.at(r, gen.pos) == expect)) throw std::logic_error("cocone inconsistent with colimit");
    }
  }
  return ChainMap<K>(colimit, W, std::move(comps));
}

}  // namespace neckcat
