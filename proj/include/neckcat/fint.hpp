#pragma once

// Finite intervals: monotone maps f: [p] -> [q] with f(0) = 0 and f(p) = q,
// plus general monotone maps of finite ordinals (used for simplicial
// operators).  Composition is written in diagrammatic order throughout:
// compose(f, g) applies f first.

#include <algorithm>
#include <cassert>
#include <functional>

#include "common.hpp"

namespace neckcat {

// A monotone map [n] -> [m], not necessarily endpoint-preserving.
struct MonoMap {
  int dst_rank = 0;
  std::vector<int> values;  // size n+1

  int src_rank() const { return int(values.size()) - 1; }
  int operator()(int i) const { return values[size_t(i)]; }

  bool valid() const {
    if (values.empty() || dst_rank < 0) return false;
    int prev = values[0];
    if (prev < 0 || prev > dst_rank) return false;
    for (size_t i = 1; i < values.size(); ++i) {
      if (values[i] < prev || values[i] > dst_rank) return false;
      prev = values[i];
    }
    return true;
  }
  bool injective() const {
    for (size_t i = 1; i < values.size(); ++i)
      if (values[i] == values[i - 1]) return false;
    return true;
  }
  bool surjective() const {
    if (values[0] != 0 || values.back() != dst_rank) return false;
    for (size_t i = 1; i < values.size(); ++i)
      if (values[i] - values[i - 1] > 1) return false;
    return true;
  }
  bool is_identity() const {
    if (dst_rank != src_rank()) return false;
    for (int i = 0; i <= dst_rank; ++i)
      if (values[size_t(i)] != i) return false;
    return true;
  }
  Mask image() const {
    Mask m = 0;
    for (int v : values) m |= (1u << v);
    return m;
  }
  static MonoMap identity(int n) {
    MonoMap f;
    f.dst_rank = n;
    f.values.resize(size_t(n) + 1);
    for (int i = 0; i <= n; ++i) f.values[size_t(i)] = i;
    return f;
  }
  // coface [n-1] -> [n] skipping j
  static MonoMap coface(int n, int j) {
    if (n < 1 || j < 0 || j > n) throw invalid_input("bad coface");
    MonoMap f;
    f.dst_rank = n;
    for (int i = 0; i < n; ++i) f.values.push_back(i < j ? i : i + 1);
    return f;
  }
  // codegeneracy [n+1] -> [n] repeating i
  static MonoMap codegeneracy(int n, int i) {
    MonoMap f;
    f.dst_rank = n;
    for (int k = 0; k <= n + 1; ++k) f.values.push_back(k <= i ? k : k - 1);
    return f;
  }
  auto operator<=>(const MonoMap&) const = default;
};

inline MonoMap compose(const MonoMap& f, const MonoMap& g) {  // g after f
  if (f.dst_rank != g.src_rank()) throw invalid_input("rank mismatch in compose");
  MonoMap h;
  h.dst_rank = g.dst_rank;
  h.values.reserve(f.values.size());
  for (int v : f.values) h.values.push_back(g.values[size_t(v)]);
  return h;
}

// Epi-mono factorization f = inj . surj (unique in the simplex category).
inline std::pair<MonoMap, MonoMap> epi_mono(const MonoMap& f) {
  std::vector<int> img = mask_to_list(f.image());
  MonoMap inj;
  inj.dst_rank = f.dst_rank;
  inj.values = img;
  MonoMap surj;
  surj.dst_rank = int(img.size()) - 1;
  for (int v : f.values)
    surj.values.push_back(int(std::lower_bound(img.begin(), img.end(), v) - img.begin()));
  return {surj, inj};
}

// Endpoint-preserving monotone maps.  values[0] = 0, values[p] = q.
struct IntervalMap {
  int src_rank = 0;  // p
  int dst_rank = 0;  // q
  std::vector<int> values;

  IntervalMap() : values{0} {}
  IntervalMap(int p, int q, std::vector<int> v) : src_rank(p), dst_rank(q), values(std::move(v)) {
    if (!valid()) throw invalid_input("bad interval map");
  }

  bool valid() const {
    if (src_rank < 0 || dst_rank < 0 || dst_rank > kMaxRank) return false;
    if (int(values.size()) != src_rank + 1) return false;
    if (values[0] != 0 || values.back() != dst_rank) return false;
    for (size_t i = 1; i < values.size(); ++i)
      if (values[i] < values[i - 1]) return false;
    return true;
  }
  int operator()(int i) const { return values[size_t(i)]; }
  bool injective() const {
    for (size_t i = 1; i < values.size(); ++i)
      if (values[i] == values[i - 1]) return false;
    return true;
  }
  bool surjective() const {
    for (size_t i = 1; i < values.size(); ++i)
      if (values[i] - values[i - 1] > 1) return false;
    return true;
  }
  bool is_identity() const { return src_rank == dst_rank && injective() && surjective(); }
  Mask image() const {
    Mask m = 0;
    for (int v : values) m |= (1u << v);
    return m;
  }
  Mask apply(Mask s) const {
    Mask out = 0;
    for (int i = 0; i <= src_rank; ++i)
      if (mask_contains(s, i)) out |= (1u << values[size_t(i)]);
    return out;
  }
  Mask preimage(Mask s) const {
    Mask out = 0;
    for (int i = 0; i <= src_rank; ++i)
      if (mask_contains(s, values[size_t(i)])) out |= (1u << i);
    return out;
  }
  MonoMap as_mono() const {
    MonoMap f;
    f.dst_rank = dst_rank;
    f.values = values;
    return f;
  }

  static IntervalMap identity(int p) {
    std::vector<int> v(size_t(p) + 1);
    for (int i = 0; i <= p; ++i) v[size_t(i)] = i;
    return IntervalMap(p, p, std::move(v));
  }
  // delta_j: [p-1] -> [p], 0 < j < p
  static IntervalMap coface(int p, int j) {
    if (!(0 < j && j < p)) throw invalid_input("coface index must be inner");
    std::vector<int> v;
    for (int i = 0; i < p; ++i) v.push_back(i < j ? i : i + 1);
    return IntervalMap(p - 1, p, std::move(v));
  }
  // sigma_i: [p+1] -> [p], 0 <= i <= p
  static IntervalMap codegeneracy(int p, int i) {
    if (!(0 <= i && i <= p)) throw invalid_input("codegeneracy index out of range");
    std::vector<int> v;
    for (int k = 0; k <= p + 1; ++k) v.push_back(k <= i ? k : k - 1);
    return IntervalMap(p + 1, p, std::move(v));
  }
  // [m] + [n] = [m+n]
  IntervalMap wedge(const IntervalMap& g) const {
    std::vector<int> v = values;
    for (size_t i = 1; i < g.values.size(); ++i) v.push_back(dst_rank + g.values[i]);
    return IntervalMap(src_rank + g.src_rank, dst_rank + g.dst_rank, std::move(v));
  }
  auto operator<=>(const IntervalMap&) const = default;
};

// Diagrammatic order: apply f then g.
inline IntervalMap compose_interval(const IntervalMap& f, const IntervalMap& g) {
  if (f.dst_rank != g.src_rank) throw invalid_input("rank mismatch in compose_interval");
  std::vector<int> v;
  v.reserve(f.values.size());
  for (int x : f.values) v.push_back(g.values[size_t(x)]);
  return IntervalMap(f.src_rank, g.dst_rank, std::move(v));
}

inline std::pair<IntervalMap, IntervalMap> epi_mono_interval(const IntervalMap& f) {
  std::vector<int> img = mask_to_list(f.image());
  IntervalMap inj(int(img.size()) - 1, f.dst_rank, img);
  std::vector<int> sv;
  for (int v : f.values)
    sv.push_back(int(std::lower_bound(img.begin(), img.end(), v) - img.begin()));
  IntervalMap surj(f.src_rank, int(img.size()) - 1, std::move(sv));
  return {surj, inj};
}

// All interval maps [p] -> [q], lexicographic in the value vector.
inline std::vector<IntervalMap> enumerate_interval_maps(int p, int q) {
  std::vector<IntervalMap> out;
  std::vector<int> v(size_t(p) + 1, 0);
  v.back() = q;
  std::function<void(int)> rec = [&](int i) {
    if (i == p) {
      if (p == 0) {
        if (q == 0) out.push_back(IntervalMap(0, 0, {0}));
        return;
      }
      out.push_back(IntervalMap(p, q, v));
      return;
    }
    int lo = (i == 0) ? 0 : v[size_t(i - 1)];
    if (i == 0) {
      v[0] = 0;
      rec(1);
      return;
    }
    for (int x = lo; x <= q; ++x) {
      v[size_t(i)] = x;
      rec(i + 1);
    }
  };
  if (p == 0) {
    if (q == 0) out.push_back(IntervalMap(0, 0, {0}));
  } else {
    rec(0);
  }
  return out;
}

inline std::vector<MonoMap> enumerate_mono_maps(int n, int m) {
  std::vector<MonoMap> out;
  std::vector<int> v(size_t(n) + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n + 1) {
      MonoMap f;
      f.dst_rank = m;
      f.values = v;
      out.push_back(std::move(f));
      return;
    }
    int lo = (i == 0) ? 0 : v[size_t(i - 1)];
    for (int x = lo; x <= m; ++x) {
      v[size_t(i)] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline std::vector<MonoMap> enumerate_surjections(int n, int m) {
  std::vector<MonoMap> out;
  for (auto& f : enumerate_mono_maps(n, m))
    if (f.surjective()) out.push_back(f);
  return out;
}

}  // namespace neckcat
