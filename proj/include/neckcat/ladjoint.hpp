#pragma once

// Closed-form left adjoints over a bipointed simplicial set, with the
// truncated coequalizer as an independent oracle.  Gradings are indexed by
// pairs (necklace, totally non-degenerate instance).

#include "oracle.hpp"

namespace neckcat {

struct GradedBasisElement {
  Necklace t;
  Instance instance;
};

struct GradedDims {
  std::map<int, std::vector<GradedBasisElement>> basis;  // degree -> elements
  std::map<int, int> dims() const {
    std::map<int, int> out;
    for (auto& [d, v] : basis) out[d] = int(v.size());
    return out;
  }
};

// Necklaces carrying at least one totally non-degenerate instance have
// bead dimensions bounded by the top non-degenerate dimension of K, but
// spines can be arbitrarily long; pcap truncates those.
inline std::vector<Necklace> necklaces_with_nd_instances(const BipointedSSet& K, int pcap) {
  std::vector<Necklace> out;
  for (auto& t : enumerate_necklaces_up_to(pcap))
    if (!totally_nondeg_instances(K, t).empty()) out.push_back(t);
  return out;
}

// L^dg(K)(a,b) in closed form: degree n has one generator per pair
// (T, totally non-degenerate instance) with dim T = n.
inline GradedDims closed_form_dg(const BipointedSSet& K, int pcap) {
  GradedDims out;
  for (auto& t : enumerate_necklaces_up_to(pcap))
    for (auto& x : totally_nondeg_instances(K, t)) out.basis[t.dim()].push_back({t, x});
  return out;
}

template <class K>
struct OracleResult {
  int truncation = 0;
  std::map<int, int> dims;
  bool stabilized = false;
};

template <class K>
OracleResult<K> oracle_dg(const BipointedSSet& Kab, const FieldOf<K>& f, int pcap) {
  DiagramOps<K> ops = dg_diagram_ops<K>(f);
  auto col = truncated_colimit(Kab, ops, f, pcap);
  auto col2 = truncated_colimit(Kab, ops, f, pcap + 1);
  OracleResult<K> out;
  out.truncation = pcap;
  out.dims = col.dims;
  out.stabilized = (col.dims == col2.dims);
  return out;
}

// Underlying necklace map of an instance over a sub-simplicial-set of a
// standard simplex whose vertex ids are 0..n.
inline NecklaceMap instance_underlying_map(const BipointedSSet& Kab, const Necklace& t,
                                           const Instance& x, int n) {
  std::vector<int> values;
  auto js = t.joint_list();
  values.push_back(Kab.K.vertex(x.beads.empty() ? SimplexRef{Kab.a, MonoMap::identity(0)}
                                                : x.beads[0],
                                0));
  for (size_t i = 0; i < x.beads.size(); ++i) {
    int len = js[i + 1] - js[i];
    for (int k = 1; k <= len; ++k) values.push_back(Kab.K.vertex(x.beads[i], k));
  }
  if (t.p == 0) values = {0};
  return NecklaceMap(t, Necklace::simplex(n), IntervalMap(t.p, n, values));
}

// ---------------------------------------------------------------------------
// Set-level closed forms

// Cubical: level-n cells of L^cub(K)(a,b).
inline long closed_form_cubical(const BipointedSSet& K, int n, int pcap) {
  long total = 0;
  for (auto& t : enumerate_necklaces_up_to(pcap)) {
    auto nd = totally_nondeg_instances(K, t);
    if (nd.empty()) continue;
    total += long(cube_hom_surjective(n, t.dim()).size()) * long(nd.size());
  }
  return total;
}

// Duskin: objects of the hom-category of L^Dusk(K)(a,b).
inline long closed_form_duskin_objects(const BipointedSSet& K, int pcap) {
  long total = 0;
  for (auto& t : enumerate_necklaces_up_to(pcap))
    if (t.dim() == 0) total += long(totally_nondeg_instances(K, t).size());
  return total;
}

// Homotopy coherent: n-simplices of the mapping space, counted by flanked
// flags of length n (arrival functions T^c -> {1..n}).
inline long flanked_flag_count(const Necklace& t, int n) {
  if (n == 0) return t.dim() == 0 ? 1 : 0;
  long total = 1;
  for (int i = 0; i < t.dim(); ++i) total *= n;
  return total;
}

inline long closed_form_hc(const BipointedSSet& K, int n, int pcap) {
  long total = 0;
  for (auto& t : enumerate_necklaces_up_to(pcap))
    total += flanked_flag_count(t, n) * long(totally_nondeg_instances(K, t).size());
  return total;
}

// Free Frobenius object: n-simplices are pairs of a barminus map
// Delta^n -> T and a totally non-degenerate instance over T.
inline std::vector<ExtNecklaceMap> barminus_maps_from_simplex(int n, const Necklace& t) {
  std::vector<ExtNecklaceMap> out;
  for (auto& f : enumerate_interval_maps(n, t.p)) {
    if ((t.joints | f.image()) != mask_range(0, t.p)) continue;
    out.push_back(ExtNecklaceMap(Necklace::simplex(n), t, f, t.joints));
  }
  return out;
}

inline long free_frobenius_count(const BipointedSSet& K, int n, int pcap) {
  long total = 0;
  for (auto& t : enumerate_necklaces_up_to(pcap)) {
    auto nd = totally_nondeg_instances(K, t);
    if (nd.empty()) continue;
    total += long(barminus_maps_from_simplex(n, t).size()) * long(nd.size());
  }
  return total;
}

// ---------------------------------------------------------------------------
// Set-valued truncated colimit (connected components of the element graph),
// used as an independent oracle for the set-level closed forms.

struct SetDiagramOps {
  std::function<long(const Necklace&)> size_of;  // |D(T)|
  std::function<std::vector<long>(const NecklaceMap&)> map_of;  // index table D(src) -> D(dst)
};

inline std::map<std::string, long> set_truncated_colimit_classes(const BipointedSSet& Kab,
                                                                 const SetDiagramOps& D, int pcap) {
  // returns representative -> class id is not needed; only a count, but we
  // keep representatives for debugging
  std::vector<Necklace> necklaces;
  std::map<Necklace, int> neck_index;
  std::map<Necklace, std::vector<Instance>> instances;
  std::map<Necklace, long> sizes;
  for (auto& t : enumerate_necklaces_up_to(pcap)) {
    auto xs = necklace_instances(Kab, t);
    if (xs.empty()) continue;
    neck_index[t] = int(necklaces.size());
    necklaces.push_back(t);
    instances[t] = std::move(xs);
    sizes[t] = D.size_of(t);
  }
  std::vector<long> offset;
  long total = 0;
  for (auto& t : necklaces) {
    offset.push_back(total);
    total += long(instances[t].size()) * sizes[t];
  }
  std::vector<long> parent(static_cast<size_t>(total), 0);
  for (long i = 0; i < total; ++i) parent[size_t(i)] = i;
  std::function<long(long)> find = [&](long i) {
    while (parent[size_t(i)] != i) {
      parent[size_t(i)] = parent[size_t(parent[size_t(i)])];
      i = parent[size_t(i)];
    }
    return i;
  };
  auto unite = [&](long a, long b) { parent[size_t(find(a))] = find(b); };
  auto inst_index = [&](const Necklace& t, const Instance& x) {
    const auto& xs = instances.at(t);
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    return long(it - xs.begin());
  };
  auto gid = [&](int nk, long inst, long d) {
    return offset[size_t(nk)] + inst * sizes[necklaces[size_t(nk)]] + d;
  };
  for (size_t nk = 0; nk < necklaces.size(); ++nk) {
    const Necklace& t = necklaces[nk];
    for (auto& e : elementary_maps_from(t, pcap)) {
      auto itU = neck_index.find(e.dst);
      if (itU == neck_index.end()) continue;
      auto de = D.map_of(e);
      const auto& xsU = instances.at(e.dst);
      for (size_t xi = 0; xi < xsU.size(); ++xi) {
        long tx = inst_index(t, act(Kab, e, xsU[xi]));
        for (long dd = 0; dd < sizes[t]; ++dd)
          unite(gid(int(nk), tx, dd), gid(itU->second, long(xi), de[size_t(dd)]));
      }
    }
  }
  std::map<std::string, long> classes;
  for (long i = 0; i < total; ++i)
    if (find(i) == i) classes["c" + std::to_string(i)] = i;
  return classes;
}

}  // namespace neckcat
