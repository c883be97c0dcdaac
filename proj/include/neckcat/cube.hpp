#pragma once

// The category of cubes with connections.  Objects are the posets [1]^n;
// morphisms are stored as total vertex tables together with a witnessing
// word in the generators d^e_i (faces), s_i (degeneracies) and g_i
// (connections).  Equality is by vertex table; membership is by
// construction only.
//
// Vertex convention: a vertex of [1]^n is an n-bit mask whose bit k-1 is
// the k-th coordinate (coordinates are 1-indexed as usual).

#include <map>
#include <mutex>

#include "necklace.hpp"

namespace neckcat {

struct CubeGen {
  char kind;  // 'd' = face, 's' = degeneracy, 'g' = connection
  int i;      // 1-indexed position
  int eps;    // face direction, used when kind == 'd'
  int src;    // source dimension of this letter
  auto operator<=>(const CubeGen&) const = default;
};

struct CubeMap {
  int m = 0, n = 0;                 // [1]^m -> [1]^n
  std::vector<std::uint32_t> table; // size 2^m
  std::vector<CubeGen> word;        // applied left to right

  bool injective() const {
    std::vector<std::uint32_t> seen(table);
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  }
  bool surjective() const {
    std::vector<bool> hit(size_t(1) << n, false);
    for (auto v : table) hit[v] = true;
    for (bool b : hit)
      if (!b) return false;
    return true;
  }
  bool monotone() const {
    for (std::uint32_t x = 0; x < table.size(); ++x)
      for (int k = 0; k < m; ++k) {
        std::uint32_t y = x | (1u << k);
        if (y != x && (table[x] & ~table[y]) != 0) return false;
      }
    return true;
  }
  bool table_equal(const CubeMap& o) const { return m == o.m && n == o.n && table == o.table; }
  bool is_identity_table() const {
    if (m != n) return false;
    for (std::uint32_t x = 0; x < table.size(); ++x)
      if (table[x] != x) return false;
    return true;
  }
  std::string table_string() const {
    std::string s;
    for (auto v : table) s += std::to_string(v) + ";";
    return s;
  }
};

inline CubeMap cube_identity(int n) {
  CubeMap c;
  c.m = c.n = n;
  c.table.resize(size_t(1) << n);
  for (std::uint32_t x = 0; x < c.table.size(); ++x) c.table[x] = x;
  return c;
}

// d^eps_i: [1]^{n-1} -> [1]^n inserting eps at coordinate i (1 <= i <= n).
inline CubeMap cube_face(int n, int i, int eps) {
  if (i < 1 || i > n) throw invalid_input("cube face index");
  CubeMap c;
  c.m = n - 1;
  c.n = n;
  c.table.resize(size_t(1) << (n - 1));
  Mask low = (i == 1) ? 0u : ((1u << (i - 1)) - 1u);
  for (std::uint32_t x = 0; x < c.table.size(); ++x)
    c.table[x] = (x & low) | (std::uint32_t(eps) << (i - 1)) | ((x & ~low) << 1);
  c.word = {{'d', i, eps, n - 1}};
  return c;
}

// s_i: [1]^{n+1} -> [1]^n deleting coordinate i (1 <= i <= n+1).
inline CubeMap cube_degeneracy(int n, int i) {
  if (i < 1 || i > n + 1) throw invalid_input("cube degeneracy index");
  CubeMap c;
  c.m = n + 1;
  c.n = n;
  c.table.resize(size_t(1) << (n + 1));
  Mask low = (i == 1) ? 0u : ((1u << (i - 1)) - 1u);
  for (std::uint32_t x = 0; x < c.table.size(); ++x)
    c.table[x] = (x & low) | ((x >> 1) & ~low);
  c.word = {{'s', i, 0, n + 1}};
  return c;
}

// g_i: [1]^{n+1} -> [1]^n merging coordinates i, i+1 by max (1 <= i <= n).
inline CubeMap cube_connection(int n, int i) {
  if (i < 1 || i > n) throw invalid_input("cube connection index");
  CubeMap c;
  c.m = n + 1;
  c.n = n;
  c.table.resize(size_t(1) << (n + 1));
  for (std::uint32_t x = 0; x < c.table.size(); ++x) {
    std::uint32_t out = 0;
    for (int k = 1; k <= n; ++k) {
      std::uint32_t bit;
      if (k < i) bit = (x >> (k - 1)) & 1u;
      else if (k == i) bit = ((x >> (i - 1)) & 1u) | ((x >> i) & 1u);
      else bit = (x >> k) & 1u;
      out |= bit << (k - 1);
    }
    c.table[x] = out;
  }
  c.word = {{'g', i, 0, n + 1}};
  return c;
}

inline CubeMap cube_compose(const CubeMap& f, const CubeMap& g) {  // g after f
  if (f.n != g.m) throw invalid_input("cube rank mismatch");
  CubeMap h;
  h.m = f.m;
  h.n = g.n;
  h.table.resize(f.table.size());
  for (std::uint32_t x = 0; x < f.table.size(); ++x) h.table[x] = g.table[f.table[x]];
  h.word = f.word;
  h.word.insert(h.word.end(), g.word.begin(), g.word.end());
  return h;
}

inline CubeMap cube_tensor(const CubeMap& f, const CubeMap& g) {
  CubeMap h;
  h.m = f.m + g.m;
  h.n = f.n + g.n;
  h.table.resize(size_t(1) << h.m);
  for (std::uint32_t x = 0; x < h.table.size(); ++x) {
    std::uint32_t xf = x & ((f.m == 0) ? 0u : ((1u << f.m) - 1u));
    std::uint32_t xg = x >> f.m;
    h.table[x] = f.table[xf] | (g.table[xg] << f.n);
  }
  // witness: (f tensor id) then (id tensor g) expanded is not tracked per
  // letter; record letters with shifted indices instead
  for (auto w : f.word) h.word.push_back(w);
  for (auto w : g.word) {
    CubeGen s = w;
    s.i += f.n;  // letters of g act on the upper block throughout
    h.word.push_back(s);
  }
  return h;
}

// Hom-sets by generator closure.  Every map factors as a surjective
// {s,g}-word followed by an injective {d}-word through some [1]^r.
class CubeHomTable {
 public:
  static CubeHomTable& instance() {
    static CubeHomTable t;
    return t;
  }

  // all maps [1]^m -> [1]^n; deterministic order (sorted by table)
  std::vector<CubeMap> hom(int m, int n) {
    check_cap(m, n);
    std::scoped_lock lk(mu_);
    auto key = std::pair(m, n);
    if (auto it = hom_.find(key); it != hom_.end()) return it->second;
    std::map<std::vector<std::uint32_t>, CubeMap> acc;
    for (int r = 0; r <= std::min(m, n); ++r)
      for (auto& s : surj_locked(m, r))
        for (auto& d : inj_locked(r, n)) {
          CubeMap c = cube_compose(s, d);
          acc.emplace(c.table, c);
        }
    std::vector<CubeMap> out;
    for (auto& [t, c] : acc) out.push_back(c);
    hom_[key] = out;
    return out;
  }

  std::vector<CubeMap> surjections(int m, int n) {
    check_cap(m, n);
    std::scoped_lock lk(mu_);
    return surj_locked(m, n);
  }
  std::vector<CubeMap> injections(int m, int n) {
    check_cap(m, n);
    std::scoped_lock lk(mu_);
    return inj_locked(m, n);
  }

 private:
  void check_cap(int m, int n) const {
    if (m < 0 || n < 0 || m > 6 || n > 6) throw size_cap_exceeded("cube hom cap exceeded");
  }
  std::vector<CubeMap> surj_locked(int m, int n) {
    auto key = std::pair(m, n);
    if (auto it = surj_.find(key); it != surj_.end()) return it->second;
    std::map<std::vector<std::uint32_t>, CubeMap> acc;
    if (m == n) {
      acc.emplace(cube_identity(m).table, cube_identity(m));
    } else if (m > n) {
      for (auto& f : surj_locked(m, n + 1)) {
        for (int i = 1; i <= n + 1; ++i) {
          CubeMap c = cube_compose(f, cube_degeneracy(n, i));
          acc.emplace(c.table, c);
        }
        for (int i = 1; i <= n; ++i) {
          CubeMap c = cube_compose(f, cube_connection(n, i));
          acc.emplace(c.table, c);
        }
      }
    }
    std::vector<CubeMap> out;
    for (auto& [t, c] : acc) out.push_back(c);
    surj_[key] = out;
    return out;
  }
  std::vector<CubeMap> inj_locked(int m, int n) {
    auto key = std::pair(m, n);
    if (auto it = inj_.find(key); it != inj_.end()) return it->second;
    std::map<std::vector<std::uint32_t>, CubeMap> acc;
    if (m == n) {
      acc.emplace(cube_identity(m).table, cube_identity(m));
    } else if (m < n) {
      for (auto& f : inj_locked(m, n - 1))
        for (int i = 1; i <= n; ++i)
          for (int eps = 0; eps <= 1; ++eps) {
            CubeMap c = cube_compose(f, cube_face(n, i, eps));
            acc.emplace(c.table, c);
          }
    }
    std::vector<CubeMap> out;
    for (auto& [t, c] : acc) out.push_back(c);
    inj_[key] = out;
    return out;
  }

  std::mutex mu_;
  std::map<std::pair<int, int>, std::vector<CubeMap>> hom_, surj_, inj_;
};

inline std::vector<CubeMap> cube_hom(int m, int n) { return CubeHomTable::instance().hom(m, n); }
inline std::vector<CubeMap> cube_hom_surjective(int m, int n) {
  return CubeHomTable::instance().surjections(m, n);
}
inline std::vector<CubeMap> cube_hom_injective(int m, int n) {
  return CubeHomTable::instance().injections(m, n);
}

// ---------------------------------------------------------------------------
// The dim functor.  dim(T) = [1]^{|T^c|}; on an extended map (f,U') the
// induced poset map sends V >= T to f(V) u U'.  Coordinates of the source
// cube are indexed by T^c ascending.

inline std::uint32_t subset_to_vertex(Mask v, Mask complement) {
  std::uint32_t out = 0;
  int k = 0;
  for (int i : mask_to_list(complement)) {
    if (mask_contains(v, i)) out |= (1u << k);
    ++k;
  }
  return out;
}
inline Mask vertex_to_subset(std::uint32_t x, Mask complement) {
  Mask out = 0;
  int k = 0;
  for (int i : mask_to_list(complement)) {
    if ((x >> k) & 1u) out |= (1u << i);
    ++k;
  }
  return out;
}

// Vertex table of dim(m), no generator word.
inline CubeMap dim_table(const ExtNecklaceMap& m) {
  CubeMap c;
  Mask sc = m.src.complement(), dc = m.dst.complement();
  c.m = m.src.dim();
  c.n = m.dst.dim();
  c.table.resize(size_t(1) << c.m);
  for (std::uint32_t x = 0; x < c.table.size(); ++x) {
    Mask v = m.src.joints | vertex_to_subset(x, sc);
    Mask w = m.f.apply(v) | m.marker;
    c.table[x] = subset_to_vertex(w, dc);
  }
  return c;
}

// Generator image of one elementary step.  Identity steps return nullopt.
inline std::optional<CubeGen> dim_generator(const ElementaryStep& s) {
  const ExtNecklaceMap& e = s.map;
  switch (s.kind) {
    case StepKind::ActiveCodegen: {
      int i = s.j;
      // collapse of a length-1 bead is dimension preserving: identity
      if (mask_contains(e.src.joints, i) && mask_contains(e.src.joints, i + 1)) return std::nullopt;
      auto js = e.src.joint_list();
      int ta = 0, tb = e.src.p;
      for (size_t k = 1; k < js.size(); ++k)
        if (js[k - 1] <= i && i + 1 <= js[k]) { ta = js[k - 1]; tb = js[k]; break; }
      int len = tb - ta, klocal = i - ta;
      int offset = popcount(e.src.complement() & mask_range(0, ta));
      int dimdst = e.dst.dim();
      if (klocal == 0) return CubeGen{'s', offset + 1, 0, dimdst + 1};
      if (klocal == len - 1) return CubeGen{'s', offset + len - 1, 0, dimdst + 1};
      return CubeGen{'g', offset + klocal, 0, dimdst + 1};
    }
    case StepKind::ActiveCoface: {
      // inserted value j is interior to a bead of the target
      int j = s.j;
      int pos = mask_index_of(e.dst.complement(), j) + 1;
      return CubeGen{'d', pos, 0, e.src.dim()};
    }
    case StepKind::InertDrop: {
      int j = s.j;
      int pos = mask_index_of(e.dst.complement(), j) + 1;
      return CubeGen{'d', pos, 1, e.src.dim()};
    }
    case StepKind::CoinertAdd: {
      int j = s.j;
      int pos = mask_index_of(e.src.complement(), j) + 1;
      return CubeGen{'s', pos, 0, e.src.dim()};
    }
  }
  throw std::logic_error("unreachable");
}

inline CubeMap gen_to_map(const CubeGen& g) {
  switch (g.kind) {
    case 'd': return cube_face(g.src + 1, g.i, g.eps);
    case 's': return cube_degeneracy(g.src - 1, g.i);
    case 'g': return cube_connection(g.src - 1, g.i);
  }
  throw invalid_input("bad cube generator");
}

// dim on an extended (or plain) necklace map: vertex table computed
// directly, generator word built from the elementary decomposition.  The
// two routes are required to agree.
inline CubeMap dim_on_map(const ExtNecklaceMap& m) {
  CubeMap direct = dim_table(m);
  CubeMap acc = cube_identity(m.src.dim());
  for (auto& s : elementary_decomposition(m)) {
    if (auto g = dim_generator(s)) acc = cube_compose(acc, gen_to_map(*g));
  }
  if (!acc.table_equal(direct)) throw std::logic_error("dim word does not match table");
  direct.word = acc.word;
  return direct;
}
inline CubeMap dim_on_map(const NecklaceMap& m) { return dim_on_map(ExtNecklaceMap(m)); }

// Discrete fibration: the unique injective necklace map f: U >-> T with
// dim(f) = g, for g: [1]^n >-> [1]^{dim T} injective.
inline NecklaceMap dim_lift(const Necklace& t, const CubeMap& g) {
  if (g.n != t.dim()) throw invalid_input("cube rank must equal dim of the necklace");
  if (!g.injective()) throw invalid_input("cube map must be injective");
  Mask tc = t.complement();
  std::uint32_t bottom = g.table[0];
  std::uint32_t top = g.table[g.table.size() - 1];
  // coordinates constant 1 come from added joints, constant 0 from skipped
  // vertices; the rest are copied
  Mask added = vertex_to_subset(bottom, tc);                  // eps = 1 insertions
  Mask skipped = vertex_to_subset(~top & ((g.n == 0) ? 0u : ((1u << g.n) - 1u)), tc);
  Mask img = mask_range(0, t.p) & ~skipped;
  std::vector<int> iv = mask_to_list(img);
  IntervalMap f(int(iv.size()) - 1, t.p, iv);
  Necklace u(f.src_rank, f.preimage(t.joints | added));
  NecklaceMap lift(u, t, f);
  if (!dim_table(ExtNecklaceMap(lift)).table_equal(CubeMap{g.m, g.n, g.table, {}}))
    throw invalid_input("cube map is not in the image of dim");
  return lift;
}

}  // namespace neckcat
