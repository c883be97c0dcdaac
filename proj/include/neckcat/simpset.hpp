#pragma once

// Finite simplicial sets in Eilenberg-Zilber normal form.  A simplex is a
// pair (non-degenerate id, surjective degeneracy word); the face table of
// each non-degenerate simplex is stored, and arbitrary simplicial operators
// are applied by the usual epi-mono normalization.

#include <map>

#include "necklace.hpp"

namespace neckcat {

struct SimplexRef {
  int nd = -1;     // id of a non-degenerate simplex
  MonoMap degen;   // surjection [n] ->> [dim nd]
  int dim() const { return degen.src_rank(); }
  bool nondegenerate() const { return degen.is_identity(); }
  auto operator<=>(const SimplexRef&) const = default;
};

class FinSimplicialSet {
 public:
  struct NdInfo {
    int dim = 0;
    std::string name;
    std::vector<SimplexRef> faces;  // size dim+1 (empty when dim = 0)
  };

  int dmax = 0;
  std::vector<NdInfo> nds;
  std::vector<std::vector<int>> nd_by_dim;

  int add_nd(int dim, std::string name, std::vector<SimplexRef> faces = {}) {
    NdInfo info{dim, std::move(name), std::move(faces)};
    int id = int(nds.size());
    nds.push_back(std::move(info));
    if (int(nd_by_dim.size()) <= dim) nd_by_dim.resize(size_t(dim) + 1);
    nd_by_dim[size_t(dim)].push_back(id);
    dmax = std::max(dmax, dim);
    return id;
  }

  SimplexRef nd_ref(int id) const {
    return SimplexRef{id, MonoMap::identity(nds[size_t(id)].dim)};
  }

  // x . alpha for an arbitrary monotone alpha: [k] -> [dim x].
  SimplexRef apply(const SimplexRef& x, const MonoMap& alpha) const {
    if (alpha.dst_rank != x.dim()) throw invalid_input("operator rank mismatch");
    MonoMap comp = compose(alpha, x.degen);  // [k] -> [dim nd]
    auto [surj, inj] = epi_mono(comp);
    SimplexRef y = face_word(x.nd, inj);
    // y is (nd', word); postcompose the degeneracy word
    return SimplexRef{y.nd, compose(surj, y.degen)};
  }

  int dim_of_nd(int id) const { return nds[size_t(id)].dim; }

  // Iterated face of a non-degenerate simplex along injective inj.
  SimplexRef face_word(int nd, const MonoMap& inj) const {
    SimplexRef cur = nd_ref(nd);
    // peel off one skipped vertex at a time, highest first
    MonoMap rem = inj;
    while (rem.src_rank() < rem.dst_rank) {
      Mask img = rem.image();
      int skip = -1;
      for (int i = rem.dst_rank; i >= 0; --i)
        if (!mask_contains(img, i)) {
          skip = i;
          break;
        }
      cur = face(cur, skip);
      // rem loses the target slot `skip`
      MonoMap nxt;
      nxt.dst_rank = rem.dst_rank - 1;
      for (int v : rem.values) nxt.values.push_back(v < skip ? v : v - 1);
      rem = nxt;
    }
    return cur;
  }

  SimplexRef face(const SimplexRef& x, int i) const {
    MonoMap di = compose(MonoMap::coface(x.dim(), i), x.degen);
    if (di.surjective()) return SimplexRef{x.nd, di};
    auto [surj, inj] = epi_mono(di);
    // inj skips exactly one vertex j of the nd simplex
    Mask img = inj.image();
    int j = -1;
    for (int k = 0; k <= inj.dst_rank; ++k)
      if (!mask_contains(img, k)) j = k;
    const SimplexRef& fj = nds[size_t(x.nd)].faces[size_t(j)];
    return SimplexRef{fj.nd, compose(surj, fj.degen)};
  }

  SimplexRef degeneracy(const SimplexRef& x, int i) const {
    return SimplexRef{x.nd, compose(MonoMap::codegeneracy(x.dim(), i), x.degen)};
  }

  int vertex(const SimplexRef& x, int i) const {
    MonoMap pt;
    pt.dst_rank = x.dim();
    pt.values = {i};
    return apply(x, pt).nd;
  }

  // All simplices of dimension n, degenerate ones included.
  std::vector<SimplexRef> simplices(int n) const {
    std::vector<SimplexRef> out;
    for (int m = 0; m <= std::min(n, dmax); ++m)
      for (int id : (m < int(nd_by_dim.size()) ? nd_by_dim[size_t(m)] : std::vector<int>{}))
        for (auto& s : enumerate_surjections(n, m)) out.push_back(SimplexRef{id, s});
    return out;
  }

  void validate() const {
    for (auto& info : nds) {
      if (info.dim > 0 && int(info.faces.size()) != info.dim + 1)
        throw invalid_input("face table size mismatch");
      for (auto& f : info.faces)
        if (f.dim() != info.dim - 1) throw invalid_input("face dimension mismatch");
    }
    // simplicial identities on all simplices up to dmax+1
    for (int n = 1; n <= dmax + 1; ++n)
      for (auto& x : simplices(n)) {
        if (n >= 2)
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
              if (!(face(face(x, j), i) == face(face(x, i), j - 1)))
                throw invalid_input("d_i d_j identity fails");
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j < n; ++j) {
            SimplexRef sd = face(degeneracy(x, j), i);
            SimplexRef expect = (i < j)    ? degeneracy(face(x, i), j - 1)
                                : (i > j + 1) ? degeneracy(face(x, i - 1), j)
                                              : x;
            if (!(sd == expect)) throw invalid_input("d_i s_j identity fails");
          }
      }
  }
};

struct BipointedSSet {
  FinSimplicialSet K;
  int a = 0, b = 0;  // vertex nd ids
  std::string name;
};

// ---------------------------------------------------------------------------
// Standard bipointed simplicial sets

namespace detail {
// Build a simplicial set whose nd simplices are a downward-closed family of
// vertex subsets of [n] (each of size >= 1), with subset faces.
inline FinSimplicialSet from_subsets(int n, const std::vector<Mask>& subsets) {
  FinSimplicialSet K;
  std::map<Mask, int> id_of;
  std::vector<Mask> sorted = subsets;
  std::sort(sorted.begin(), sorted.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  for (Mask s : sorted) {
    int dim = popcount(s) - 1;
    std::vector<SimplexRef> faces;
    if (dim > 0) {
      auto verts = mask_to_list(s);
      for (int i = 0; i <= dim; ++i) {
        Mask t = s & ~(1u << verts[size_t(i)]);
        faces.push_back(SimplexRef{id_of.at(t), MonoMap::identity(dim - 1)});
      }
    }
    id_of[s] = K.add_nd(dim, mask_to_string(s), std::move(faces));
  }
  return K;
}
}  // namespace detail

inline BipointedSSet std_simplex(int n) {
  std::vector<Mask> subsets;
  for (Mask s = 1; s < (1u << (n + 1)); ++s) subsets.push_back(s);
  BipointedSSet out{detail::from_subsets(n, subsets), 0, 0, "Delta" + std::to_string(n)};
  // vertices were added first, in ascending mask order: vertex i has id i
  out.a = 0;
  out.b = n;
  return out;
}

inline BipointedSSet boundary(int n) {
  if (n < 1) throw invalid_input("boundary needs n >= 1");
  std::vector<Mask> subsets;
  Mask full = mask_range(0, n);
  for (Mask s = 1; s < (1u << (n + 1)); ++s)
    if (s != full) subsets.push_back(s);
  return {detail::from_subsets(n, subsets), 0, n, "dDelta" + std::to_string(n)};
}

inline BipointedSSet horn(int n, int j) {
  if (j < 0 || j > n) throw invalid_input("horn index out of range");
  std::vector<Mask> subsets;
  Mask full = mask_range(0, n);
  Mask missing = full & ~(1u << j);
  for (Mask s = 1; s < (1u << (n + 1)); ++s)
    if (s != full && s != missing) subsets.push_back(s);
  return {detail::from_subsets(n, subsets), 0, n,
          "Horn" + std::to_string(n) + "_" + std::to_string(j)};
}

inline BipointedSSet circle() {
  FinSimplicialSet K;
  int v = K.add_nd(0, "*");
  SimplexRef vr = K.nd_ref(v);
  K.add_nd(1, "e", {vr, vr});
  return {K, v, v, "S1"};
}

// ---------------------------------------------------------------------------
// Necklace instances: maps T -> K_{a,b} as bead tuples

struct Instance {
  std::vector<SimplexRef> beads;
  bool totally_nondegenerate() const {
    for (auto& b : beads)
      if (!b.nondegenerate()) return false;
    return true;
  }
  auto operator<=>(const Instance&) const = default;
};

inline std::vector<Instance> necklace_instances(const BipointedSSet& Kab, const Necklace& t) {
  const FinSimplicialSet& K = Kab.K;
  auto lens = t.bead_lengths();
  std::vector<Instance> out;
  if (lens.empty()) {
    if (Kab.a == Kab.b) out.push_back(Instance{});
    return out;
  }
  // per (dim, start-vertex) candidate lists
  std::function<void(size_t, int, Instance&)> rec = [&](size_t i, int start, Instance& cur) {
    if (i == lens.size()) {
      if (start == Kab.b) out.push_back(cur);
      return;
    }
    for (auto& s : K.simplices(lens[i])) {
      if (K.vertex(s, 0) != start) continue;
      cur.beads.push_back(s);
      rec(i + 1, K.vertex(s, lens[i]), cur);
      cur.beads.pop_back();
    }
  };
  Instance cur;
  rec(0, Kab.a, cur);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Instance> totally_nondeg_instances(const BipointedSSet& Kab, const Necklace& t) {
  std::vector<Instance> out;
  for (auto& x : necklace_instances(Kab, t))
    if (x.totally_nondegenerate()) out.push_back(x);
  return out;
}

// Contravariant action: a necklace map g: U -> T sends instances over T to
// instances over U, via the elementary decomposition of g.
inline Instance act(const BipointedSSet& Kab, const NecklaceMap& g, const Instance& x) {
  const FinSimplicialSet& K = Kab.K;
  if (int(x.beads.size()) != g.dst.bead_count()) throw invalid_input("instance shape mismatch");
  auto steps = elementary_decomposition(ExtNecklaceMap(g));
  Instance cur = x;
  // apply contravariantly: last step first
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const ElementaryStep& st = *it;
    const Necklace& src = st.map.src;  // smaller side of the step depends on kind
    switch (st.kind) {
      case StepKind::InertDrop: {
        // split the bead of dst containing j into front/back
        const Necklace& dn = st.map.dst;
        int j = st.j;
        auto js = dn.joint_list();
        int bead = 0, ta = 0, tb = dn.p;
        for (size_t k = 1; k < js.size(); ++k)
          if (js[k - 1] < j && j < js[k]) {
            bead = int(k) - 1;
            ta = js[k - 1];
            tb = js[k];
          }
        SimplexRef z = cur.beads[size_t(bead)];
        MonoMap front, back;
        front.dst_rank = tb - ta;
        for (int i = 0; i <= j - ta; ++i) front.values.push_back(i);
        back.dst_rank = tb - ta;
        for (int i = j - ta; i <= tb - ta; ++i) back.values.push_back(i);
        SimplexRef zf = K.apply(z, front), zb = K.apply(z, back);
        Instance nxt;
        for (int i = 0; i < bead; ++i) nxt.beads.push_back(cur.beads[size_t(i)]);
        nxt.beads.push_back(zf);
        nxt.beads.push_back(zb);
        for (size_t i = size_t(bead) + 1; i < cur.beads.size(); ++i) nxt.beads.push_back(cur.beads[i]);
        cur = nxt;
        break;
      }
      case StepKind::ActiveCoface: {
        // target bead containing the inserted value gets a face
        const Necklace& dn = st.map.dst;
        // inserted value: the unique element outside the image of f
        int ins = -1;
        Mask img = st.map.f.image();
        for (int v = 0; v <= dn.p; ++v)
          if (!mask_contains(img, v)) ins = v;
        auto js = dn.joint_list();
        int bead = 0, ta = 0;
        for (size_t k = 1; k < js.size(); ++k)
          if (js[k - 1] < ins && ins < js[k]) {
            bead = int(k) - 1;
            ta = js[k - 1];
          }
        cur.beads[size_t(bead)] = K.face(cur.beads[size_t(bead)], ins - ta);
        break;
      }
      case StepKind::ActiveCodegen: {
        int i = st.j;
        if (mask_contains(src.joints, i) && mask_contains(src.joints, i + 1)) {
          // a length-1 bead of the source collapses: insert the identity
          // edge at the meeting vertex
          auto js = src.joint_list();
          int bead = 0;
          for (size_t k = 1; k < js.size(); ++k)
            if (js[k - 1] == i) bead = int(k) - 1;
          int v;
          if (cur.beads.empty())
            v = Kab.a;
          else if (bead < int(cur.beads.size()))
            v = K.vertex(cur.beads[size_t(bead)], 0);
          else
            v = K.vertex(cur.beads[size_t(bead) - 1],
                         cur.beads[size_t(bead) - 1].dim());
          SimplexRef pt{v, MonoMap::identity(0)};
          SimplexRef edge = K.degeneracy(pt, 0);
          cur.beads.insert(cur.beads.begin() + bead, edge);
        } else {
          // degeneracy inside a bead of the target
          const Necklace& dn = st.map.dst;
          auto js = src.joint_list();
          int bead = 0, ta = 0;
          for (size_t k = 1; k < js.size(); ++k)
            if (js[k - 1] <= i && i + 1 <= js[k]) {
              bead = int(k) - 1;
              ta = js[k - 1];
            }
          (void)dn;
          cur.beads[size_t(bead)] = K.degeneracy(cur.beads[size_t(bead)], i - ta);
        }
        break;
      }
      case StepKind::CoinertAdd:
        throw invalid_input("coinert step in a plain necklace action");
    }
  }
  return cur;
}

}  // namespace neckcat
