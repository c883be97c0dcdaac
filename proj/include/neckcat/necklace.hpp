#pragma once

// Necklaces in the (T,p) presentation: p >= 0 and {0,p} <= T <= [p].
// Morphisms (T,p) -> (U,q) are interval maps f with U <= f(T); extended
// morphisms carry a marker set U' with f(T) u U <= U' <= [q].  Composition
// of extended maps (f,U') then (g,V') is (gf, V' u g(U')).

#include <optional>

#include "fint.hpp"

namespace neckcat {

struct Necklace {
  int p = 0;
  Mask joints = 1;  // subset of {0..p}

  Necklace() = default;
  Necklace(int p_, Mask joints_) : p(p_), joints(joints_) {
    if (!valid()) throw invalid_input("bad necklace (" + mask_to_string(joints_) + "," + std::to_string(p_) + ")");
  }

  bool valid() const {
    if (p < 0 || p > kMaxRank) return false;
    if (!mask_contains(joints, 0) || !mask_contains(joints, p)) return false;
    if (joints & ~mask_range(0, p)) return false;
    return true;
  }

  Mask complement() const { return mask_range(0, p) & ~joints; }
  int dim() const { return p + 1 - popcount(joints); }
  int bead_count() const { return popcount(joints) - 1; }
  std::vector<int> joint_list() const { return mask_to_list(joints); }
  std::vector<int> bead_lengths() const {
    auto js = joint_list();
    std::vector<int> out;
    for (size_t i = 1; i < js.size(); ++i) out.push_back(js[i] - js[i - 1]);
    return out;
  }
  bool is_simplex() const { return bead_count() <= 1; }
  bool is_spine() const { return joints == mask_range(0, p); }

  static Necklace simplex(int n) { return Necklace(n, (1u) | (1u << n)); }
  static Necklace spine(int n) { return Necklace(n, mask_range(0, n)); }
  static Necklace point() { return Necklace(0, 1); }
  static Necklace from_beads(const std::vector<int>& lens) {
    Mask m = 1;
    int p = 0;
    for (int l : lens) {
      if (l < 1) throw invalid_input("bead length must be >= 1");
      p += l;
      m |= (1u << p);
    }
    return Necklace(p, m);
  }
  Necklace wedge(const Necklace& u) const {
    return Necklace(p + u.p, joints | (u.joints << p));
  }
  std::string to_string() const {
    std::string s;
    for (int l : bead_lengths()) {
      if (!s.empty()) s += "v";
      s += "D" + std::to_string(l);
    }
    return s.empty() ? "D0" : s;
  }
  auto operator<=>(const Necklace&) const = default;
};

// All necklaces on [p], ordered by the subset of inner joints ascending as
// bitmask (so the single-bead simplex comes first).
inline std::vector<Necklace> enumerate_necklaces(int p) {
  if (p < 0) throw invalid_input("p must be >= 0");
  if (p == 0) return {Necklace::point()};
  std::vector<Necklace> out;
  int inner = p - 1;
  for (Mask s = 0; s < (1u << inner); ++s)
    out.push_back(Necklace(p, 1u | (1u << p) | (s << 1)));
  return out;
}

inline std::vector<Necklace> enumerate_necklaces_up_to(int pmax) {
  std::vector<Necklace> out;
  for (int p = 0; p <= pmax; ++p)
    for (auto& t : enumerate_necklaces(p)) out.push_back(t);
  return out;
}

struct NecklaceMap {
  Necklace src, dst;
  IntervalMap f;

  NecklaceMap() = default;
  NecklaceMap(Necklace s, Necklace d, IntervalMap m) : src(s), dst(d), f(std::move(m)) {
    if (!valid()) throw invalid_input("bad necklace map");
  }
  bool valid() const {
    if (f.src_rank != src.p || f.dst_rank != dst.p) return false;
    Mask ft = f.apply(src.joints);
    return (dst.joints & ~ft) == 0;  // dst.joints <= f(T)
  }
  bool active() const { return f.apply(src.joints) == dst.joints; }
  bool inert() const { return f.is_identity(); }
  bool injective() const { return f.injective(); }
  bool surjective() const { return f.surjective(); }
  // Wedge of identities and Delta^1 ->> Delta^0: active, and every
  // non-increasing step collapses a length-1 bead.
  bool spine_collapsing() const {
    if (!active() || !surjective()) return false;
    for (int i = 0; i < src.p; ++i) {
      if (f(i + 1) == f(i)) {
        if (!mask_contains(src.joints, i) || !mask_contains(src.joints, i + 1)) return false;
      }
    }
    return true;
  }
  static NecklaceMap identity(const Necklace& t) {
    return NecklaceMap(t, t, IntervalMap::identity(t.p));
  }
  NecklaceMap wedge(const NecklaceMap& g) const {
    return NecklaceMap(src.wedge(g.src), dst.wedge(g.dst), f.wedge(g.f));
  }
  std::string to_string() const;
  auto operator<=>(const NecklaceMap&) const = default;
};

inline NecklaceMap compose(const NecklaceMap& a, const NecklaceMap& b) {  // b after a
  if (a.dst != b.src) throw invalid_input("endpoint mismatch");
  return NecklaceMap(a.src, b.dst, compose_interval(a.f, b.f));
}

struct MapFlags {
  bool active = false, inert = false, injective = false, surjective = false, spine_collapsing = false;
};

inline MapFlags classify_map(const NecklaceMap& m) {
  MapFlags fl;
  fl.active = m.active();
  fl.inert = m.inert();
  fl.injective = m.injective();
  fl.surjective = m.surjective();
  fl.spine_collapsing = m.spine_collapsing();
  // Three-way equivalence for active surjective maps: spine collapsing
  // <=> dim-preserving <=> bijective on complements.
  if (fl.active && fl.surjective) {
    bool dim_pres = m.src.dim() == m.dst.dim();
    Mask img = m.f.apply(m.src.complement());
    bool compl_bij = (img == m.dst.complement()) && popcount(m.src.complement()) == popcount(img);
    if (fl.spine_collapsing != dim_pres || dim_pres != compl_bij)
      throw std::logic_error("spine-collapsing equivalence violated");
  }
  return fl;
}

// Generators.  delta_j: (delta_j^{-1}(T), p-1) >-> (T,p) for j in [p] \ T,
// nu_j: (T u {j}, p) >-> (T,p) the unique inert map adding joint j.
inline NecklaceMap necklace_delta(const Necklace& t, int j) {
  if (mask_contains(t.joints, j)) throw invalid_input("delta index must avoid joints");
  IntervalMap d = IntervalMap::coface(t.p, j);
  Necklace src(t.p - 1, d.preimage(t.joints));
  return NecklaceMap(src, t, d);
}
inline NecklaceMap necklace_nu(const Necklace& t, int j) {
  if (mask_contains(t.joints, j)) throw invalid_input("nu index must avoid joints");
  Necklace src(t.p, t.joints | (1u << j));
  return NecklaceMap(src, t, IntervalMap::identity(t.p));
}
// Active surjective sigma_i on the single bead Delta^{p+1} -> Delta^p.
inline NecklaceMap necklace_sigma(int p, int i) {
  return NecklaceMap(Necklace::simplex(p + 1), Necklace::simplex(p),
                     IntervalMap::codegeneracy(p, i));
}

inline std::string NecklaceMap::to_string() const {
  std::string s = src.to_string() + "->" + dst.to_string() + "[";
  for (size_t i = 0; i < f.values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f.values[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Extended necklace maps

struct ExtNecklaceMap {
  Necklace src, dst;
  IntervalMap f;
  Mask marker = 0;  // U' with f(T) u U <= U' <= [q]

  ExtNecklaceMap() = default;
  ExtNecklaceMap(Necklace s, Necklace d, IntervalMap m, Mask u)
      : src(s), dst(d), f(std::move(m)), marker(u) {
    if (!valid()) throw invalid_input("bad extended necklace map");
  }
  explicit ExtNecklaceMap(const NecklaceMap& m)
      : src(m.src), dst(m.dst), f(m.f), marker(m.f.apply(m.src.joints)) {}

  bool valid() const {
    if (f.src_rank != src.p || f.dst_rank != dst.p) return false;
    Mask need = f.apply(src.joints) | dst.joints;
    if (need & ~marker) return false;
    if (marker & ~mask_range(0, dst.p)) return false;
    return true;
  }
  bool in_nec() const { return marker == f.apply(src.joints); }
  // marker = U and U u f([p]) = [q]
  bool in_barminus() const {
    return marker == dst.joints && (dst.joints | f.image()) == mask_range(0, dst.p);
  }
  bool in_barplus() const { return f.injective() && in_nec(); }
  bool is_coinert() const { return f.is_identity() && marker == dst.joints; }

  NecklaceMap as_necklace_map() const {
    if (!in_nec()) throw invalid_input("not a necklace map");
    return NecklaceMap(src, dst, f);
  }
  static ExtNecklaceMap identity(const Necklace& t) {
    return ExtNecklaceMap(t, t, IntervalMap::identity(t.p), t.joints);
  }
  ExtNecklaceMap wedge(const ExtNecklaceMap& g) const {
    return ExtNecklaceMap(src.wedge(g.src), dst.wedge(g.dst), f.wedge(g.f),
                          marker | (g.marker << dst.p));
  }
  std::string to_string() const {
    return src.to_string() + "->" + dst.to_string() + "(f=" + mask_to_string(f.image()) +
           ",U'=" + mask_to_string(marker) + ")";
  }
  auto operator<=>(const ExtNecklaceMap&) const = default;
};

inline ExtNecklaceMap ext_compose(const ExtNecklaceMap& a, const ExtNecklaceMap& b) {  // b after a
  if (a.dst != b.src) throw invalid_input("endpoint mismatch");
  return ExtNecklaceMap(a.src, b.dst, compose_interval(a.f, b.f),
                        b.marker | b.f.apply(a.marker));
}

// Coinert map (id,[T u {j}]) : T -> T u {j} going opposite to nu_j.
inline ExtNecklaceMap necklace_nu_co(const Necklace& t, int j) {
  if (mask_contains(t.joints, j)) throw invalid_input("nu_co index must avoid joints");
  Necklace dst(t.p, t.joints | (1u << j));
  return ExtNecklaceMap(t, dst, IntervalMap::identity(t.p), dst.joints);
}

// nu^co_{a,b} . delta_a : Delta^{a+b-1} -> Delta^a v Delta^b.
inline ExtNecklaceMap barminus_split_generator(int a, int b) {
  if (a < 1 || b < 1) throw invalid_input("bad split generator");
  Necklace src = Necklace::simplex(a + b - 1);
  Necklace dst = Necklace::simplex(a).wedge(Necklace::simplex(b));
  std::vector<int> v;
  for (int i = 0; i < a + b; ++i) v.push_back(i < a ? i : i + 1);
  return ExtNecklaceMap(src, dst, IntervalMap(a + b - 1, a + b, std::move(v)), dst.joints);
}

// ---------------------------------------------------------------------------
// Factorizations

// m = inert . active; the active part targets (f(T), q).
inline std::pair<NecklaceMap, NecklaceMap> factor_active_inert(const NecklaceMap& m) {
  Necklace mid(m.dst.p, m.f.apply(m.src.joints));
  NecklaceMap act(m.src, mid, m.f);
  NecklaceMap in(mid, m.dst, IntervalMap::identity(m.dst.p));
  return {act, in};
}

// m = inj . surj with surj active surjective.
inline std::pair<NecklaceMap, NecklaceMap> factor_minus_plus(const NecklaceMap& m) {
  auto [s, d] = epi_mono_interval(m.f);
  Necklace mid(s.dst_rank, s.apply(m.src.joints));
  NecklaceMap surj(m.src, mid, s);
  NecklaceMap inj(mid, m.dst, d);
  return {surj, inj};
}

// m = plus . minus with minus in barminus and plus an injective necklace
// map.  The middle necklace lives on [r] with r = |f([p]) u U'| - 1.
inline std::pair<ExtNecklaceMap, NecklaceMap> ext_factor(const ExtNecklaceMap& m) {
  Mask himg = m.f.image() | m.marker;
  std::vector<int> hv = mask_to_list(himg);
  int r = int(hv.size()) - 1;
  IntervalMap h(r, m.dst.p, hv);
  Mask mid_joints = h.preimage(m.marker);
  Necklace mid(r, mid_joints);
  // g with f = h g: g(i) = position of f(i) in the image list
  std::vector<int> gv;
  for (int x : m.f.values)
    gv.push_back(mask_index_of(himg, x));
  ExtNecklaceMap minus(m.src, mid, IntervalMap(m.src.p, r, std::move(gv)), mid_joints);
  NecklaceMap plus(mid, m.dst, h);
  return {minus, plus};
}

// Unique decomposition active . coinert . inert of an extended map.
struct ExtDecomposition {
  NecklaceMap active;     // T -> (f(T),q)
  ExtNecklaceMap coinert; // (f(T),q) -> (U',q)
  NecklaceMap inert;      // (U',q) -> (U,q)
};
inline ExtDecomposition ext_decompose(const ExtNecklaceMap& m) {
  Necklace a(m.dst.p, m.f.apply(m.src.joints));
  Necklace b(m.dst.p, m.marker);
  ExtDecomposition d;
  d.active = NecklaceMap(m.src, a, m.f);
  d.coinert = ExtNecklaceMap(a, b, IntervalMap::identity(m.dst.p), m.marker);
  d.inert = NecklaceMap(b, m.dst, IntervalMap::identity(m.dst.p));
  return d;
}

// Split a map out of a wedge: f: T1 v T2 -> U equals nu . (f1 v f2) with
// U1 v U2 = U u {c}, c the image of the wedge joint.  `joint` is the
// position of the wedge point in the source (must be a joint).
struct WedgeSplit {
  ExtNecklaceMap left, right;
  NecklaceMap nu;  // inert (U u {c}, q) -> (U, q), identity if c already a joint
};
inline WedgeSplit ext_split_wedge(const ExtNecklaceMap& m, int joint) {
  if (joint <= 0 || joint >= m.src.p || !mask_contains(m.src.joints, joint))
    throw invalid_input("chosen position is not an inner joint of the source");
  int k = joint, l = m.src.p - joint;
  int c = m.f(k), q = m.dst.p;
  Mask uj = m.dst.joints | (1u << c);
  Mask mj = m.marker | (1u << c);
  Necklace u1(c, uj & mask_range(0, c));
  Necklace u2(q - c, (uj >> c) & mask_range(0, q - c));
  Necklace t1(k, m.src.joints & mask_range(0, k));
  Necklace t2(l, (m.src.joints >> k) & mask_range(0, l));
  std::vector<int> v1(m.f.values.begin(), m.f.values.begin() + k + 1);
  std::vector<int> v2;
  for (int i = k; i <= m.src.p; ++i) v2.push_back(m.f(i) - c);
  WedgeSplit out{
      ExtNecklaceMap(t1, u1, IntervalMap(k, c, std::move(v1)), mj & mask_range(0, c)),
      ExtNecklaceMap(t2, u2, IntervalMap(l, q - c, std::move(v2)),
                     (mj >> c) & mask_range(0, q - c)),
      NecklaceMap(Necklace(q, uj), m.dst, IntervalMap::identity(q))};
  return out;
}

// Split an injective necklace map into a wedge T1 v T2 at the given joint
// of the target; unique by the splitting lemma.
inline std::pair<NecklaceMap, NecklaceMap> split_injective_over_wedge(const NecklaceMap& g,
                                                                      int dst_joint) {
  if (!g.injective()) throw invalid_input("map must be injective");
  if (!mask_contains(g.dst.joints, dst_joint)) throw invalid_input("not a joint of target");
  // dst_joint has a (unique) preimage under g since dst.joints <= g(src.joints)
  int pre = -1;
  for (int i = 0; i <= g.src.p; ++i)
    if (g.f(i) == dst_joint && mask_contains(g.src.joints, i)) pre = i;
  if (pre < 0) throw invalid_input("joint not hit by a source joint");
  Necklace t1(pre, g.src.joints & mask_range(0, pre));
  Necklace t2(g.src.p - pre, (g.src.joints >> pre) & mask_range(0, g.src.p - pre));
  Necklace u1(dst_joint, g.dst.joints & mask_range(0, dst_joint));
  Necklace u2(g.dst.p - dst_joint,
              (g.dst.joints >> dst_joint) & mask_range(0, g.dst.p - dst_joint));
  std::vector<int> v1(g.f.values.begin(), g.f.values.begin() + pre + 1);
  std::vector<int> v2;
  for (int i = pre; i <= g.src.p; ++i) v2.push_back(g.f(i) - dst_joint);
  return {NecklaceMap(t1, u1, IntervalMap(pre, dst_joint, std::move(v1))),
          NecklaceMap(t2, u2, IntervalMap(g.src.p - pre, g.dst.p - dst_joint, std::move(v2)))};
}

// ---------------------------------------------------------------------------
// Elementary decomposition.  Every extended map is a composite of steps
// whose underlying interval map is elementary (a single coface or
// codegeneracy) or whose underlying map is the identity and which adds or
// removes a single joint.  Used for the dim functor and simplicial actions.

enum class StepKind { ActiveCodegen, ActiveCoface, CoinertAdd, InertDrop };

struct ElementaryStep {
  StepKind kind;
  int j;  // codegen repeat / coface skip / joint added / joint removed
  ExtNecklaceMap map;
};

inline std::vector<ElementaryStep> elementary_decomposition(const ExtNecklaceMap& m) {
  std::vector<ElementaryStep> steps;
  Necklace cur = m.src;
  // surjective part of f: collapse duplicated values left to right
  IntervalMap g = m.f;
  while (!g.injective()) {
    int i = 0;
    while (g(i + 1) != g(i)) ++i;
    IntervalMap e = IntervalMap::codegeneracy(g.src_rank - 1, i);
    Necklace nxt(cur.p - 1, e.apply(cur.joints));
    steps.push_back({StepKind::ActiveCodegen, i, ExtNecklaceMap(NecklaceMap(cur, nxt, e))});
    cur = nxt;
    // g = g' with g'(x) = g(x <= i ? x : x+1)
    std::vector<int> v;
    for (int x = 0; x <= g.src_rank; ++x)
      if (x != i) v.push_back(g(x));
    g = IntervalMap(g.src_rank - 1, g.dst_rank, std::move(v));
  }
  // injective part: insert missing values ascending
  {
    Mask img = g.image();
    for (int val = 1; val < m.dst.p; ++val) {
      if (mask_contains(img, val)) continue;
      int pos = mask_index_of(img, val);  // insertion index in current interval
      IntervalMap e = IntervalMap::coface(cur.p + 1, pos);
      Necklace nxt(cur.p + 1, e.apply(cur.joints));
      steps.push_back({StepKind::ActiveCoface, pos, ExtNecklaceMap(NecklaceMap(cur, nxt, e))});
      cur = nxt;
      img |= (1u << val);
    }
  }
  // coinert part: add marker joints ascending
  Mask ft = m.f.apply(m.src.joints);
  for (int j : mask_to_list(m.marker & ~ft)) {
    ExtNecklaceMap e = necklace_nu_co(cur, j);
    steps.push_back({StepKind::CoinertAdd, j, e});
    cur = e.dst;
  }
  // inert part: drop joints not in U ascending
  for (int j : mask_to_list(m.marker & ~m.dst.joints)) {
    NecklaceMap e(cur, Necklace(cur.p, cur.joints & ~(1u << j)), IntervalMap::identity(cur.p));
    steps.push_back({StepKind::InertDrop, j, ExtNecklaceMap(e)});
    cur = e.dst;
  }
  return steps;
}

inline ExtNecklaceMap compose_steps(const Necklace& src, const std::vector<ElementaryStep>& steps) {
  ExtNecklaceMap acc = ExtNecklaceMap::identity(src);
  for (auto& s : steps) acc = ext_compose(acc, s.map);
  return acc;
}

// ---------------------------------------------------------------------------
// Hom-set enumeration

inline std::vector<NecklaceMap> enumerate_necklace_maps(const Necklace& t, const Necklace& u) {
  std::vector<NecklaceMap> out;
  for (auto& f : enumerate_interval_maps(t.p, u.p)) {
    Mask ft = f.apply(t.joints);
    if ((u.joints & ~ft) == 0) out.push_back(NecklaceMap(t, u, f));
  }
  return out;
}

inline std::vector<ExtNecklaceMap> enumerate_ext_maps(const Necklace& t, const Necklace& u) {
  std::vector<ExtNecklaceMap> out;
  for (auto& f : enumerate_interval_maps(t.p, u.p)) {
    Mask base = f.apply(t.joints) | u.joints;
    Mask inner = mask_range(0, u.p) & ~base;
    // all supersets of base inside [q]
    std::vector<int> bits = mask_to_list(inner);
    for (Mask s = 0;; ++s) {
      Mask add = 0;
      for (size_t i = 0; i < bits.size(); ++i)
        if (mask_contains(s, int(i))) add |= (1u << bits[size_t(i)]);
      out.push_back(ExtNecklaceMap(t, u, f, base | add));
      if (s + 1 >= (1u << bits.size())) break;
    }
  }
  return out;
}

// Injective necklace maps into T, graded by the dimension of the source:
// the basis of the dg diagram.  Ordered by (dim, image mask, source joints).
inline std::vector<NecklaceMap> enumerate_injective_into(const Necklace& t) {
  std::vector<NecklaceMap> out;
  // image must contain T; the source joints contain the preimage of T
  Mask required = t.joints;
  std::vector<int> free_bits = mask_to_list(mask_range(0, t.p) & ~required);
  for (Mask s = 0;; ++s) {
    Mask img = required;
    for (size_t i = 0; i < free_bits.size(); ++i)
      if (mask_contains(s, int(i))) img |= (1u << free_bits[size_t(i)]);
    std::vector<int> iv = mask_to_list(img);
    int q = int(iv.size()) - 1;
    IntervalMap f(q, t.p, iv);
    Mask base = f.preimage(t.joints);
    std::vector<int> ufree = mask_to_list(mask_range(0, q) & ~base);
    for (Mask s2 = 0;; ++s2) {
      Mask uj = base;
      for (size_t i = 0; i < ufree.size(); ++i)
        if (mask_contains(s2, int(i))) uj |= (1u << ufree[size_t(i)]);
      out.push_back(NecklaceMap(Necklace(q, uj), t, f));
      if (s2 + 1 >= (1u << ufree.size())) break;
    }
    if (s + 1 >= (1u << free_bits.size())) break;
  }
  std::sort(out.begin(), out.end(), [](const NecklaceMap& a, const NecklaceMap& b) {
    int da = a.src.dim(), db = b.src.dim();
    if (da != db) return da < db;
    if (a.f.image() != b.f.image()) return a.f.image() < b.f.image();
    return a.src.joints < b.src.joints;
  });
  return out;
}

}  // namespace neckcat
