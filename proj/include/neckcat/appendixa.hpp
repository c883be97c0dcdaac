#pragma once

// Instance-level verification of the correspondence between collections
// beta_n: X_n -> C_{n-1} and collections H_g indexed by injective necklace
// maps, for X the free module on the nerve of an ordinal poset and C a
// small one-object dg-algebra over F_2.  All linear algebra is mod 2 with
// bitmask vectors; every structural index (actions, factorizations,
// composites) is precomputed so that scanning all beta families is cheap.

#include "necklace.hpp"

namespace neckcat {

// A one-object dg-algebra over F_2 with small total dimension.
struct F2Algebra {
  std::vector<int> degree;                       // degree per basis element
  std::vector<std::vector<std::uint32_t>> mult;  // mult[a][b] = bitmask of a.b
  std::vector<std::uint32_t> diff;               // differential per basis element
  int unit = 0;                                  // basis index of 1, degree 0

  int dim() const { return int(degree.size()); }
  std::uint32_t mult_masks(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    for (int i = 0; i < dim(); ++i) {
      if (!((a >> i) & 1u)) continue;
      for (int j = 0; j < dim(); ++j)
        if ((b >> j) & 1u) out ^= mult[size_t(i)][size_t(j)];
    }
    return out;
  }
  std::uint32_t diff_mask(std::uint32_t a) const {
    std::uint32_t out = 0;
    for (int i = 0; i < dim(); ++i)
      if ((a >> i) & 1u) out ^= diff[size_t(i)];
    return out;
  }

  static F2Algebra ground_field() {
    F2Algebra c;
    c.degree = {0};
    c.mult = {{1u}};
    c.diff = {0u};
    return c;
  }
  // F_2[eps]/(eps^2) with eps in degree 1, d eps = 0
  static F2Algebra dual_numbers() {
    F2Algebra c;
    c.degree = {0, 1};
    c.mult = {{1u, 2u}, {2u, 0u}};
    c.diff = {0u, 0u};
    return c;
  }
};

// X = free module on the nerve of the poset [N]: a basis element over the
// necklace (T,p) is a monotone map [p] -> [N]; extended necklace maps act
// by precomposition.
struct PathSpace {
  int N = 2;
  int pcap = 3;
  std::vector<std::vector<MonoMap>> paths;
  std::vector<std::map<std::vector<int>, int>> index;

  PathSpace(int N_, int pcap_) : N(N_), pcap(pcap_) {
    for (int p = 0; p <= pcap; ++p) {
      paths.push_back(enumerate_mono_maps(p, N));
      std::map<std::vector<int>, int> idx;
      for (size_t i = 0; i < paths.back().size(); ++i) idx[paths.back()[i].values] = int(i);
      index.push_back(std::move(idx));
    }
  }
  int size(int p) const { return int(paths[size_t(p)].size()); }
  int act(const IntervalMap& f, int x) const {
    const MonoMap& m = paths[size_t(f.dst_rank)][size_t(x)];
    std::vector<int> v;
    for (int i = 0; i <= f.src_rank; ++i) v.push_back(m.values[size_t(f(i))]);
    return index[size_t(f.src_rank)].at(v);
  }
};

struct BetaFamily {
  std::vector<std::vector<std::uint32_t>> beta;  // beta[n][x], n >= 1
};

class AppendixContext {
 public:
  PathSpace X;
  F2Algebra C;
  int nmax = 3;
  std::vector<Necklace> necklaces;
  std::vector<std::vector<NecklaceMap>> inj_into;

  AppendixContext(int N, int pcap, const F2Algebra& c, int nmax_)
      : X(N, pcap), C(c), nmax(nmax_) {
    for (auto& t : enumerate_necklaces_up_to(pcap)) {
      necklaces.push_back(t);
      inj_into.push_back(enumerate_injective_into(t));
    }
    precompute();
  }

  // evaluation plan of one H value: the bead levels and path indices to
  // multiply, per basis path of the ambient necklace
  using Plan = std::vector<std::vector<std::pair<int, int>>>;

  std::uint32_t eval(const BetaFamily& b, const Plan& plan, int x) const {
    std::uint32_t acc = 1u << C.unit;
    for (auto& [len, idx] : plan[size_t(x)]) acc = C.mult_masks(acc, b.beta[size_t(len)][size_t(idx)]);
    return acc;
  }

  bool diff_condition_beta(const BetaFamily& b) const {
    for (int n = 1; n <= nmax; ++n)
      for (int x = 0; x < X.size(n); ++x) {
        std::uint32_t lhs = C.diff_mask(b.beta[size_t(n)][size_t(x)]);
        std::uint32_t rhs = 0;
        for (auto& [fx, j, x1, x2] : beta_diff_terms_[size_t(n)][size_t(x)]) {
          (void)j;
          if (fx >= 0)
            rhs ^= b.beta[size_t(n - 1)][size_t(fx)];
          else
            rhs ^= C.mult_masks(b.beta[size_t(x1 >> 16)][size_t(x1 & 0xffff)],
                                b.beta[size_t(x2 >> 16)][size_t(x2 & 0xffff)]);
        }
        if (lhs != rhs) return false;
      }
    return true;
  }

  bool diff_condition_H(const BetaFamily& b) const {
    for (auto& rec : diff_records_) {
      for (int x = 0; x < X.size(rec.trank); ++x) {
        std::uint32_t lhs = C.diff_mask(eval(b, plans_[size_t(rec.self)], x));
        std::uint32_t rhs = 0;
        for (int term : rec.terms) rhs ^= eval(b, plans_[size_t(term)], x);
        if (lhs != rhs) return false;
      }
    }
    return true;
  }

  bool degen_condition_beta(const BetaFamily& b) const {
    for (auto& [n, sx] : degen_zero_)
      if (b.beta[size_t(n)][size_t(sx)] != 0) return false;
    for (auto& [n, sx] : degen_unit_)
      if (b.beta[size_t(n)][size_t(sx)] != (1u << C.unit)) return false;
    for (auto& rec : degen_z_) {
      if (b.beta[size_t(rec.zn)][size_t(rec.z)] != 0) return false;
      std::uint32_t lhs = b.beta[size_t(rec.zn - 1)][size_t(rec.dz)];
      std::uint32_t rhs = C.mult_masks(b.beta[size_t(rec.p)][size_t(rec.x1)],
                                       b.beta[size_t(rec.q)][size_t(rec.x2)]);
      if (lhs != rhs) return false;
    }
    return true;
  }

  bool degen_condition_H(const BetaFamily& b) const {
    for (auto& rec : barminus_records_) {
      for (int x = 0; x < X.size(rec.dst_rank); ++x) {
        std::uint32_t lhs = eval(b, plans_[size_t(rec.composite_plan)], x);
        std::uint32_t rhs = rec.keep ? eval(b, plans_[size_t(rec.plus_plan)], x) : 0u;
        if (lhs != rhs) return false;
      }
    }
    return true;
  }

  bool structure_conditions(const BetaFamily& b) const {
    for (auto& rec : wedge_records_) {
      for (int x = 0; x < X.size(rec.wrank); ++x) {
        std::uint32_t lhs = eval(b, plans_[size_t(rec.whole)], x);
        std::uint32_t rhs = C.mult_masks(eval(b, plans_[size_t(rec.left)], rec.split1[size_t(x)]),
                                         eval(b, plans_[size_t(rec.right)], rec.split2[size_t(x)]));
        if (lhs != rhs) return false;
      }
    }
    for (int x = 0; x < X.size(0); ++x)
      if (eval(b, plans_[size_t(unit_plan_)], x) != (1u << C.unit)) return false;
    for (auto& rec : restriction_records_) {
      for (int x = 0; x < X.size(rec.trank); ++x)
        if (eval(b, plans_[size_t(rec.inner)], rec.outer_act[size_t(x)]) !=
            eval(b, plans_[size_t(rec.composite)], x))
          return false;
    }
    return true;
  }

  bool round_trip(const BetaFamily& b) const {
    for (int n = 1; n <= nmax; ++n)
      for (int x = 0; x < X.size(n); ++x)
        if (eval(b, plans_[size_t(id_plan_[size_t(n)])], x) != b.beta[size_t(n)][size_t(x)])
          return false;
    return true;
  }

 private:
  std::vector<Plan> plans_;
  std::map<std::pair<int, std::string>, int> plan_index_;  // (necklace idx, map key)
  std::vector<int> id_plan_;
  int unit_plan_ = -1;

  struct DiffRecord {
    int self, trank;
    std::vector<int> terms;
  };
  std::vector<DiffRecord> diff_records_;

  struct WedgeRecord {
    int whole, left, right, wrank;
    std::vector<int> split1, split2;
  };
  std::vector<WedgeRecord> wedge_records_;

  struct RestrictionRecord {
    int inner, composite, trank;
    std::vector<int> outer_act;
  };
  std::vector<RestrictionRecord> restriction_records_;

  struct BarminusRecord {
    int composite_plan, plus_plan, dst_rank;
    bool keep;
  };
  std::vector<BarminusRecord> barminus_records_;

  std::vector<std::pair<int, int>> degen_zero_, degen_unit_;
  struct ZRecord {
    int zn, z, dz, p, x1, q, x2;
  };
  std::vector<ZRecord> degen_z_;
  // beta-side differential terms: (face index or -1, j, packed pair, packed pair)
  std::vector<std::vector<std::vector<std::tuple<int, int, int, int>>>> beta_diff_terms_;

  int neck_index(const Necklace& t) const {
    for (size_t i = 0; i < necklaces.size(); ++i)
      if (necklaces[i] == t) return int(i);
    throw std::logic_error("necklace outside the cap");
  }

  // build (or fetch) the evaluation plan of H_g for g: U >-> T
  int plan_of(const NecklaceMap& g) {
    int ti = neck_index(g.dst);
    std::string key = DgBasis::key(g);
    auto it = plan_index_.find({ti, key});
    if (it != plan_index_.end()) return it->second;
    Plan plan;
    auto js = g.src.joint_list();
    for (int x = 0; x < X.size(g.dst.p); ++x) {
      int xg = X.act(g.f, x);
      const MonoMap& m = X.paths[size_t(g.src.p)][size_t(xg)];
      std::vector<std::pair<int, int>> beads;
      for (size_t bploc = 1; bploc < js.size(); ++bploc) {
        int len = js[bploc] - js[bploc - 1];
        std::vector<int> v(m.values.begin() + js[bploc - 1], m.values.begin() + js[bploc] + 1);
        beads.push_back({len, X.index[size_t(len)].at(v)});
      }
      plan.push_back(std::move(beads));
    }
    plans_.push_back(std::move(plan));
    plan_index_[{ti, key}] = int(plans_.size()) - 1;
    return int(plans_.size()) - 1;
  }

  void precompute() {
    // identity plans and the unit plan
    id_plan_.assign(size_t(nmax) + 1, -1);
    for (int n = 1; n <= nmax; ++n)
      id_plan_[size_t(n)] = plan_of(NecklaceMap::identity(Necklace::simplex(n)));
    unit_plan_ = plan_of(NecklaceMap::identity(Necklace::point()));

    // differential records for every injective map
    for (size_t ti = 0; ti < necklaces.size(); ++ti)
      for (auto& g : inj_into[ti]) {
        DiffRecord rec;
        rec.self = plan_of(g);
        rec.trank = necklaces[ti].p;
        for (int j : mask_to_list(g.src.complement())) {
          rec.terms.push_back(plan_of(compose(necklace_delta(g.src, j), g)));
          rec.terms.push_back(plan_of(compose(necklace_nu(g.src, j), g)));
        }
        diff_records_.push_back(std::move(rec));
      }

    // wedge multiplicativity records
    for (size_t ti = 0; ti < necklaces.size(); ++ti)
      for (size_t ui = 0; ui < necklaces.size(); ++ui) {
        Necklace w = necklaces[ti].wedge(necklaces[ui]);
        if (w.p > X.pcap) continue;
        int p1 = necklaces[ti].p;
        std::vector<int> s1, s2;
        for (int x = 0; x < X.size(w.p); ++x) {
          const MonoMap& m = X.paths[size_t(w.p)][size_t(x)];
          std::vector<int> v1(m.values.begin(), m.values.begin() + p1 + 1);
          std::vector<int> v2(m.values.begin() + p1, m.values.end());
          s1.push_back(X.index[size_t(p1)].at(v1));
          s2.push_back(X.index[size_t(w.p - p1)].at(v2));
        }
        for (auto& g1 : inj_into[ti])
          for (auto& g2 : inj_into[ui]) {
            WedgeRecord rec;
            rec.whole = plan_of(g1.wedge(g2));
            rec.left = plan_of(g1);
            rec.right = plan_of(g2);
            rec.wrank = w.p;
            rec.split1 = s1;
            rec.split2 = s2;
            wedge_records_.push_back(std::move(rec));
          }
      }

    // restriction records: H_g X(f) = H_{fg} for injective f
    for (size_t ti = 0; ti < necklaces.size(); ++ti)
      for (auto& f : inj_into[ti]) {
        std::vector<int> ftab;
        for (int x = 0; x < X.size(necklaces[ti].p); ++x) ftab.push_back(X.act(f.f, x));
        int ui = neck_index(f.src);
        for (auto& g : inj_into[size_t(ui)]) {
          RestrictionRecord rec;
          rec.inner = plan_of(g);
          rec.composite = plan_of(compose(g, f));
          rec.trank = necklaces[ti].p;
          rec.outer_act = ftab;
          restriction_records_.push_back(std::move(rec));
        }
      }

    // barminus records: factor f.g for every barminus f and injective g
    for (auto& t : necklaces)
      for (auto& tp : necklaces)
        for (auto& f : enumerate_ext_maps(t, tp)) {
          if (!f.in_barminus()) continue;
          int ti = neck_index(t);
          for (auto& g : inj_into[size_t(ti)]) {
            auto [minus, plus] = ext_factor(ext_compose(ExtNecklaceMap(g), f));
            BarminusRecord rec;
            rec.keep = minus.src.dim() == minus.dst.dim();
            rec.plus_plan = rec.keep ? plan_of(plus) : 0;
            // the composite H_g . X(f) evaluates like a plan over X_{tp}:
            // beads of (x . f) . g split at the joints of g.src; the
            // underlying composite need not be a necklace map
            rec.composite_plan = plan_of_general(g.src, tp.p, compose_interval(g.f, f.f));
            rec.dst_rank = tp.p;
            barminus_records_.push_back(std::move(rec));
          }
        }

    // beta-side degeneracy and multiplication constraints
    for (int n = 0; n + 1 <= nmax; ++n)
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < X.size(n); ++x) {
          int sx = X.act(IntervalMap::codegeneracy(n, i), x);
          if (n == 0 && i == 0)
            degen_unit_.push_back({n + 1, sx});
          else
            degen_zero_.push_back({n + 1, sx});
        }
    for (int p = 1; p + 1 <= nmax; ++p)
      for (int q = 1; p + q <= nmax; ++q)
        for (int x1 = 0; x1 < X.size(p); ++x1)
          for (int x2 = 0; x2 < X.size(q); ++x2) {
            const MonoMap &m1 = X.paths[size_t(p)][size_t(x1)],
                          &m2 = X.paths[size_t(q)][size_t(x2)];
            if (m1.values.back() != m2.values.front()) continue;
            std::vector<int> v = m1.values;
            for (size_t k = 1; k < m2.values.size(); ++k) v.push_back(m2.values[k]);
            int z = X.index[size_t(p + q)].at(v);
            int dz = X.act(IntervalMap::coface(p + q, p), z);
            degen_z_.push_back({p + q, z, dz, p, x1, q, x2});
          }

    // beta-side differential terms
    beta_diff_terms_.resize(size_t(nmax) + 1);
    for (int n = 1; n <= nmax; ++n) {
      beta_diff_terms_[size_t(n)].resize(size_t(X.size(n)));
      for (int x = 0; x < X.size(n); ++x)
        for (int j = 1; j < n; ++j) {
          beta_diff_terms_[size_t(n)][size_t(x)].push_back(
              {X.act(IntervalMap::coface(n, j), x), j, 0, 0});
          const MonoMap& m = X.paths[size_t(n)][size_t(x)];
          std::vector<int> v1(m.values.begin(), m.values.begin() + j + 1);
          std::vector<int> v2(m.values.begin() + j, m.values.end());
          int x1 = X.index[size_t(j)].at(v1), x2 = X.index[size_t(n - j)].at(v2);
          beta_diff_terms_[size_t(n)][size_t(x)].push_back(
              {-1, j, (j << 16) | x1, ((n - j) << 16) | x2});
        }
    }
  }

  // plan for an arbitrary interval map out of a necklace (used for the
  // composite evaluations H_g . X(f))
  int plan_of_general(const Necklace& src, int dst_rank, const IntervalMap& f) {
    Plan plan;
    auto js = src.joint_list();
    for (int x = 0; x < X.size(dst_rank); ++x) {
      int xg = X.act(f, x);
      const MonoMap& m = X.paths[size_t(src.p)][size_t(xg)];
      std::vector<std::pair<int, int>> beads;
      for (size_t bploc = 1; bploc < js.size(); ++bploc) {
        int len = js[bploc] - js[bploc - 1];
        std::vector<int> v(m.values.begin() + js[bploc - 1], m.values.begin() + js[bploc] + 1);
        beads.push_back({len, X.index[size_t(len)].at(v)});
      }
      plan.push_back(std::move(beads));
    }
    plans_.push_back(std::move(plan));
    return int(plans_.size()) - 1;
  }
};

struct AppendixReport {
  long instances = 0;
  long diff_cond_holds = 0;
  long degen_cond_holds = 0;
  long both_hold = 0;
  bool structure_ok = true;
  bool round_trip_ok = true;
  bool diff_equiv_ok = true;
  bool degen_equiv_ok = true;
  bool ok() const { return structure_ok && round_trip_ok && diff_equiv_ok && degen_equiv_ok; }
};

inline AppendixReport appendix_bijection_check(AppendixContext& ctx, long instance_cap = 200000) {
  AppendixReport rep;
  std::vector<std::vector<int>> cbasis_by_degree(8);
  for (int i = 0; i < ctx.C.dim(); ++i)
    cbasis_by_degree[size_t(ctx.C.degree[size_t(i)])].push_back(i);
  std::vector<std::vector<int>> target_basis(size_t(ctx.nmax) + 1);
  for (int n = 1; n <= ctx.nmax; ++n) target_basis[size_t(n)] = cbasis_by_degree[size_t(n - 1)];
  long bits = 0;
  for (int n = 1; n <= ctx.nmax; ++n)
    bits += long(ctx.X.size(n)) * long(target_basis[size_t(n)].size());
  if (bits > 22) throw size_cap_exceeded("beta enumeration too large");
  long total = 1L << bits;
  if (total > instance_cap) throw size_cap_exceeded("beta enumeration exceeds the cap");
  for (long v = 0; v < total; ++v) {
    BetaFamily b;
    b.beta.resize(size_t(ctx.nmax) + 1);
    long rest = v;
    for (int n = 1; n <= ctx.nmax; ++n) {
      b.beta[size_t(n)].assign(size_t(ctx.X.size(n)), 0u);
      for (int x = 0; x < ctx.X.size(n); ++x)
        for (int cb : target_basis[size_t(n)]) {
          if (rest & 1) b.beta[size_t(n)][size_t(x)] |= (1u << cb);
          rest >>= 1;
        }
    }
    ++rep.instances;
    if (!ctx.structure_conditions(b)) rep.structure_ok = false;
    if (!ctx.round_trip(b)) rep.round_trip_ok = false;
    bool d_beta = ctx.diff_condition_beta(b);
    bool d_H = ctx.diff_condition_H(b);
    if (d_beta != d_H) rep.diff_equiv_ok = false;
    if (d_beta) ++rep.diff_cond_holds;
    bool s_beta = ctx.degen_condition_beta(b);
    bool s_H = ctx.degen_condition_H(b);
    if (s_beta != s_H) rep.degen_equiv_ok = false;
    if (s_beta) ++rep.degen_cond_holds;
    if (d_beta && s_beta) ++rep.both_hold;
  }
  return rep;
}

}  // namespace neckcat
