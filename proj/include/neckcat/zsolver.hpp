#pragma once

// Recovers the comparison-map coefficients lambda^T_tau by solving the
// defining equations directly: the unit seed, naturality along spine
// collapses, and the chain-map identity on the top generator of each dg(T),
// processed by ascending dimension.  Monoidality is then checked on wedges.
// The unique solution must be (-1)^{dim T} sgn(tau).

#include "posetnerve.hpp"

namespace neckcat {

struct ZCoefficientKey {
  Necklace t;
  std::vector<int> tau;  // permutation of the complement, as the image list
  auto operator<=>(const ZCoefficientKey&) const = default;
};

template <class K>
struct ZSolution {
  std::map<ZCoefficientKey, K> lambda;
  bool unique = true;
  bool natural_ok = true;
  bool monoidal_ok = true;
};

template <class K>
std::vector<K> z_top_chain(const Necklace& t, const PosetChains<K>& nerv,
                           const std::map<ZCoefficientKey, K>& lambda, const FieldOf<K>& f) {
  std::vector<K> out(size_t(nerv.complex.dim_at(t.dim())), f.zero());
  for (auto& tau : permutations_of(mask_to_list(t.complement()))) {
    auto it = lambda.find({t, tau});
    if (it == lambda.end()) throw std::logic_error("missing coefficient");
    auto [deg, pos] = nerv.find(flag_of_permutation(nerv.poset, t, tau));
    (void)deg;
    out[size_t(pos)] = out[size_t(pos)] + it->second;
  }
  return out;
}

template <class K>
ZSolution<K> solve_z_coefficients(int dim_cap, int pcap, const FieldOf<K>& f) {
  ZSolution<K> sol;
  std::vector<Necklace> all;
  for (auto& t : enumerate_necklaces_up_to(pcap))
    if (t.dim() <= dim_cap) all.push_back(t);
  std::sort(all.begin(), all.end(), [](const Necklace& a, const Necklace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.p != b.p) return a.p < b.p;
    return a.joints < b.joints;
  });
  std::map<Necklace, PosetChains<K>> nervs;
  for (auto& t : all) nervs.emplace(t, nerve_chains(t, f));

  for (auto& t : all) {
    auto comp = mask_to_list(t.complement());
    auto perms = permutations_of(comp);
    if (t.dim() == 0) {
      // all dimension-zero coefficients equal the unit coefficient: the
      // spine collapses sigma: spine_k -> spine_{k-1} act as identities on
      // both sides of the naturality square
      sol.lambda[{t, {}}] = f.one();
      continue;
    }
    // chain-map identity on id_T:  d(z(id_T)) = z(d id_T)
    const PosetChains<K>& nerv = nervs.at(t);
    int n = t.dim();
    // rhs: sum_j (-1)^{j-1} ( push along delta_{i_j} - push along nu_{i_j} )
    std::vector<K> rhs(size_t(nerv.complex.dim_at(n - 1)), f.zero());
    for (size_t j = 0; j < comp.size(); ++j) {
      K sign = (j % 2 == 0) ? f.one() : -f.one();
      NecklaceMap gd = necklace_delta(t, comp[j]);
      NecklaceMap gn = necklace_nu(t, comp[j]);
      for (auto [g, sgn] : {std::pair(gd, sign), std::pair(gn, -sign)}) {
        const PosetChains<K>& nu = nervs.at(g.src);
        std::vector<K> top = z_top_chain(g.src, nu, sol.lambda, f);
        ChainMap<K> push = nerve_on_map(ExtNecklaceMap(g), nu, nerv);
        std::vector<K> img = push.at(n - 1).apply(top, f);
        for (size_t r = 0; r < img.size(); ++r) rhs[r] = rhs[r] + sgn * img[r];
      }
    }
    // lhs: boundary matrix applied to the unknown combination of top flags
    Mat<K> M(nerv.complex.dim_at(n - 1), int(perms.size()), f);
    Mat<K> dn = nerv.complex.diff(n);
    for (size_t c = 0; c < perms.size(); ++c) {
      auto [deg, pos] = nerv.find(flag_of_permutation(nerv.poset, t, perms[c]));
      (void)deg;
      for (int r = 0; r < dn.rows; ++r) M.at(r, int(c)) = dn.at(r, pos);
    }
    auto x = solve(M, rhs, f);
    if (!x) throw std::logic_error("comparison equations inconsistent");
    if (nullspace(M, f).cols != 0) sol.unique = false;
    for (size_t c = 0; c < perms.size(); ++c) sol.lambda[{t, perms[c]}] = (*x)[c];
  }

  // naturality along spine-collapsing maps between equal dimensions
  for (auto& t : all)
    for (auto& u : all) {
      if (t.dim() != u.dim() || u.p != t.p - 1) continue;
      for (auto& m : enumerate_necklace_maps(t, u)) {
        if (!classify_map(m).spine_collapsing) continue;
        for (auto& tau : permutations_of(mask_to_list(t.complement()))) {
          // conjugate permutation on the complement of u
          std::vector<int> img;
          for (int x : tau) img.push_back(m.f(x));
          if (!(sol.lambda[{t, tau}] == sol.lambda[{u, img}])) sol.natural_ok = false;
        }
      }
    }

  // monoidality on wedges
  for (auto& t : all)
    for (auto& u : all) {
      Necklace w = t.wedge(u);
      if (w.p > pcap || w.dim() > dim_cap) continue;
      for (auto& tau : permutations_of(mask_to_list(t.complement())))
        for (auto& rho : permutations_of(mask_to_list(u.complement()))) {
          std::vector<int> prod = tau;
          for (int x : rho) prod.push_back(x + t.p);
          if (!(sol.lambda[{w, prod}] == sol.lambda[{t, tau}] * sol.lambda[{u, rho}]))
            sol.monoidal_ok = false;
        }
    }
  return sol;
}

// The closed form the solution must match.
template <class K>
K z_coefficient_closed_form(const Necklace& t, const std::vector<int>& tau, const FieldOf<K>& f) {
  K s = (t.dim() % 2 == 0) ? f.one() : -f.one();
  return permutation_sign(tau) > 0 ? s : -s;
}

}  // namespace neckcat
