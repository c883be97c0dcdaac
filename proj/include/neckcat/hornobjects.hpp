#pragma once

// Weighted-colimit objects of horns and boundaries under the dg diagram.
// Both are computed in closed form as the subcomplex of dg(Delta^n) spanned
// by the basis maps all of whose beads land in the subcomplex of the
// simplex; the truncated coequalizer oracle cross-checks this.

#include "dgdiagram.hpp"

namespace neckcat {

// vertex set of each bead of g inside Delta^n
inline bool beads_inside(const NecklaceMap& g, const std::function<bool(Mask)>& allowed) {
  auto js = g.src.joint_list();
  for (size_t i = 1; i < js.size(); ++i) {
    Mask s = 0;
    for (int k = js[i - 1]; k <= js[i]; ++k) s |= (1u << g.f(k));
    if (!allowed(s)) return false;
  }
  return true;
}

template <class K>
std::pair<ChainComplex<K>, ChainMap<K>> horn_object_dg(const DgObject<K>& dgn, int n, int j) {
  if (!(0 < j && j < n)) throw invalid_input("inner horn required");
  Mask full = mask_range(0, n);
  Mask missing = full & ~(1u << j);
  auto allowed = [&](Mask s) { return s != full && s != missing; };
  std::vector<std::vector<int>> keep(size_t(dgn.complex.dims.size()));
  for (size_t i = 0; i < dgn.basis.maps.size(); ++i) {
    auto [deg, pos] = dgn.basis.degree_pos(int(i));
    (void)pos;
    if (beads_inside(dgn.basis.maps[i], allowed)) keep[size_t(deg)].push_back(int(i));
  }
  // reindex keep by position within degree blocks
  std::vector<std::vector<int>> keep_pos(keep.size());
  for (size_t d = 0; d < keep.size(); ++d)
    for (int idx : keep[d]) keep_pos[d].push_back(dgn.basis.degree_pos(idx).second);
  return subcomplex_spanned(dgn.complex, keep_pos);
}

template <class K>
std::pair<ChainComplex<K>, ChainMap<K>> boundary_object_dg(const DgObject<K>& dgn, int n) {
  Mask full = mask_range(0, n);
  auto allowed = [&](Mask s) { return s != full; };
  std::vector<std::vector<int>> keep(size_t(dgn.complex.dims.size()));
  for (size_t i = 0; i < dgn.basis.maps.size(); ++i) {
    auto [deg, pos] = dgn.basis.degree_pos(int(i));
    (void)pos;
    if (beads_inside(dgn.basis.maps[i], allowed)) keep[size_t(deg)].push_back(int(i));
  }
  std::vector<std::vector<int>> keep_pos(keep.size());
  for (size_t d = 0; d < keep.size(); ++d)
    for (int idx : keep[d]) keep_pos[d].push_back(dgn.basis.degree_pos(idx).second);
  return subcomplex_spanned(dgn.complex, keep_pos);
}

}  // namespace neckcat
