#include <catch2/catch_amalgamated.hpp>

#include "neckcat/appendixa.hpp"
#include "neckcat/frobenius.hpp"
#include "neckcat/nervechecks.hpp"

using namespace neckcat;

static FieldOf<Rat> Q;
static FieldOf<Fp> F2{2};

TEST_CASE("validators accept the good and reject the broken") {
  CHECK(validate_report(dg_point(Q)).valid);
  CHECK(validate_report(dg_dual_numbers(F2)).valid);
  CHECK(validate_report(dg_acyclic_interval(Q)).valid);
  CHECK(validate_report(dg_two_objects(Q, 1)).valid);
  CHECK(validate_report(dg_zero_homs(Q)).valid);

  // a non-chain-map composition violates the Leibniz rule
  auto broken = dg_dual_numbers(F2);
  broken.hom[0].d[0].at(0, 0) = F2.one();  // d eps = 1 makes mult fail Leibniz
  auto rep = validate_report(broken);
  CHECK_FALSE(rep.valid);

  // locally discrete 2-category on the square poset
  Pos sq = Pos::product(chain_poset(1), chain_poset(1));
  TwoCategory t = TwoCategory::locally_discrete(FinCategory::from_poset(sq));
  CHECK(validate_report(t).valid);
  CHECK(t.all_2_invertible());

  TwoCategory grp = TwoCategory::one_object_group({{0, 1}, {1, 0}}, 0);
  CHECK(validate_report(grp).valid);
  CHECK(grp.all_2_invertible());

  TwoCategory mono = TwoCategory::one_object_poset_monoid();
  CHECK(validate_report(mono).valid);
  CHECK_FALSE(mono.all_2_invertible());
}

TEST_CASE("phi of the generating diagrams") {
  // dg: hom(0,2) = dg(Delta^2), composition sends the generator pair to nu
  auto phi2 = phi_dg(2, Q);
  CHECK(validate_report(phi2.cat).valid);
  CHECK(phi2.cat.at(0, 2).dims == std::vector<int>{2, 1});
  const ChainMap<Rat>& m = phi2.cat.comp_at(0, 1, 2);
  // the generator pair spans the 1-dim degree-0 tensor; its image is nu
  const DgObject<Rat>& d2 = phi2.dgobj[size_t(0 * 3 + 2)];
  int i_nu = d2.basis.degree_pos(d2.basis.find(necklace_nu(Necklace::simplex(2), 1))).second;
  int i_dl = d2.basis.degree_pos(d2.basis.find(necklace_delta(Necklace::simplex(2), 1))).second;
  CHECK(m.at(0).at(i_nu, 0) == Rat(1));
  CHECK(m.at(0).at(i_dl, 0) == Rat(0));

  // Duskin: hom(0,2) is the two-object poset category
  PhiDusk pd = phi_duskin(2);
  CHECK(validate_report(pd.cat).valid);
  CHECK(pd.cat.at(0, 2).nobj == 2);

  // cubical: matches the cube-enriched cosimplicial categories
  PhiCub pc = phi_cub(3, 3);
  CHECK_NOTHROW(pc.cat.validate());
  for (int i = 0; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      for (int r = 0; r <= 2; ++r)
        CHECK(pc.cat.at(i, j).size(r) == int(cube_hom(r, j - i - 1).size()));

  // hc: poset-nerve homs with union composition
  PhiHc ph = phi_hc(3, 2);
  CHECK_NOTHROW(ph.validate());

  // cosimplicial component bookkeeping is functorial
  for (auto& f : enumerate_mono_maps(2, 3))
    for (auto& g : enumerate_mono_maps(3, 2)) CHECK(phi_components_functorial(f, g));

  // characterizing properties of the dg diagrams
  auto props = phi_properties_dg(3, Q);
  CHECK(props.all());
}

TEST_CASE("ordinary nerve counts and identities") {
  // free category on one arrow: the nerve of [1]
  FinCategory c1 = phi_const(1);
  ConstNerveModel model{c1};
  for (int n = 0; n <= 4; ++n) CHECK(int(model.level(n).size()) == n + 2);
  TruncatedSSet X = assemble_nerve(model, 4);
  CHECK_NOTHROW(X.validate());
  auto rep = quasicat_check(X, 3);
  CHECK(rep.all_filled);
}

TEST_CASE("Duskin nerve of a locally discrete 2-category is the ordinary nerve") {
  FinCategory c2 = phi_const(2);  // the poset [2]
  DuskNerveModel dusk(TwoCategory::locally_discrete(c2), 3);
  ConstNerveModel ord{c2};
  for (int n = 0; n <= 3; ++n)
    CHECK(dusk.level(n).size() == ord.level(n).size());
  CHECK(dusk.level(2).size() == 10);
  TruncatedSSet X = assemble_nerve(dusk, 3);
  CHECK_NOTHROW(X.validate());
  auto rep = quasicat_check(X, 3);
  CHECK(rep.all_filled);
  CHECK(rep.filled == rep.unique_fills);
}

TEST_CASE("dg nerve of the one-object point") {
  // 1-simplices are all degree-zero cycles, including zero, so the level
  // counts are 2^n over F_2; wide components are forced by the short ones
  DgNerveModel<Fp> model(dg_point(F2), 3);
  for (int n = 0; n <= 3; ++n) CHECK(model.level(n).size() == (size_t(1) << n));
  TruncatedSSet X = assemble_nerve(model, 3);
  CHECK_NOTHROW(X.validate());
}

TEST_CASE("cubical nerve assembles") {
  CubNerveModel model{phi_cub(2, 3).cat};
  TruncatedSSet X = assemble_nerve(model, 3);
  CHECK_NOTHROW(X.validate());
  CHECK(X.size(0) == 3);
}

TEST_CASE("nerve simplices biject with enriched functors") {
  // const: maps [n] -> C against nerve levels
  FinCategory c2 = phi_const(2);
  ConstNerveModel ord{c2};
  for (int n = 0; n <= 3; ++n)
    CHECK(ord.level(n).size() == enumerate_functors(phi_const(n), c2).size());

  // Duskin against 2-functors
  TwoCategory ld = TwoCategory::locally_discrete(phi_const(2));
  DuskNerveModel dusk(ld, 3);
  for (int n = 0; n <= 2; ++n)
    CHECK(dusk.level(n).size() == enumerate_two_functors(phi_duskin(n).cat, ld).size());
  TwoCategory grp = TwoCategory::one_object_group({{0, 1}, {1, 0}}, 0);
  DuskNerveModel duskg(grp, 3);
  for (int n = 0; n <= 3; ++n)
    CHECK(duskg.level(n).size() == enumerate_two_functors(phi_duskin(n).cat, grp).size());

  // dg over F_2 against dg-functors
  DgCategory<Fp> cd = dg_dual_numbers(F2);
  DgNerveModel<Fp> dgm(cd, 3);
  for (int n = 0; n <= 3; ++n) {
    auto functors = enumerate_dg_functors(phi_dg(n, F2).cat, cd);
    CHECK(dgm.level(n).size() == functors.size());
  }

  // cubical against cubical functors
  PhiCub target = phi_cub(2, 3);
  CubNerveModel cub{target.cat};
  for (int n = 0; n <= 3; ++n) {
    auto functors = enumerate_cub_functors(phi_cub(n, 3), target.cat);
    CHECK(cub.level(n).size() == functors.size());
  }
}

TEST_CASE("horn failures are witnessed") {
  // the horn itself, as a truncated complex: build from the nerve of [2]
  // and delete the top filler by hand is awkward; instead check the
  // poset-monoid 2-category, which is not a 2-groupoid
  TwoCategory mono = TwoCategory::one_object_poset_monoid();
  DuskNerveModel dusk(mono, 3);
  TruncatedSSet X = assemble_nerve(dusk, 3);
  CHECK_NOTHROW(X.validate());
  auto rep = quasicat_check(X, 3);
  CHECK_FALSE(rep.all_filled);
  CHECK_FALSE(rep.first_failure.empty());
}

TEST_CASE("Duskin nerve of a 2-groupoid fills inner horns") {
  TwoCategory grp = TwoCategory::one_object_group({{0, 1}, {1, 0}}, 0);
  DuskNerveModel dusk(grp, 4);
  TruncatedSSet X = assemble_nerve(dusk, 4);
  CHECK_NOTHROW(X.validate());
  auto rep = quasicat_check(X, 4);
  CHECK(rep.all_filled);
  // unique from dimension 3 upward
  for (auto& [n, j, count, unfilled] : rep.per_horn) {
    CHECK(unfilled == 0);
    (void)j;
    (void)count;
  }
  long n3 = 0, u3 = 0;
  for (auto& [n, j, count, unfilled] : rep.per_horn)
    if (n >= 3) {
      n3 += count;
      (void)j;
      (void)unfilled;
    }
  (void)u3;
  CHECK(rep.unique_fills >= n3);
}

TEST_CASE("dg horn lifting") {
  for (auto cat : {dg_point(Q), dg_acyclic_interval(Q), dg_two_objects(Q, 1), dg_zero_homs(Q)})
    for (int n = 2; n <= 3; ++n)
      for (int j = 1; j < n; ++j) CHECK(dg_horn_lift_check(cat, n, j));
  for (int n = 2; n <= 3; ++n)
    for (int j = 1; j < n; ++j) {
      CHECK(dg_horn_lift_check(dg_dual_numbers(F2), n, j));
      auto rep = dg_horn_lift_check_one(dg_dual_numbers(F2).at(0, 0), n, j, F2);
      CHECK(rep.quotient_acyclic);
    }
}

TEST_CASE("retraction probe") {
  auto p21 = dg_retraction_probe(2, 1, Q);
  CHECK(p21.solver_found);
  CHECK(p21.solver_unique);
  // the printed formula has an empty sum at n = 2 and misses nu_{1,1}
  CHECK_FALSE(p21.printed_formula_is_chain_map);
  CHECK(p21.corrected_formula_is_chain_map);

  for (int n = 3; n <= 5; ++n)
    for (int j = 1; j < n; ++j) {
      auto p = dg_retraction_probe(n, j, Q);
      CHECK(p.solver_found);
    }
}

TEST_CASE("module-valued nerve in low degrees") {
  auto pt = module_nerve_low(dg_point(Q), 0, 0);
  CHECK(pt.n1 == 1);
  CHECK(pt.n2 == 1);

  auto ac = module_nerve_low(dg_acyclic_interval(Q), 0, 0);
  CHECK(ac.n1 == 1);  // cycles in degree zero

  auto z = module_nerve_low(dg_zero_homs(Q), 0, 0);
  CHECK(z.n1 == 0);
  CHECK(z.n2 == 0);
}

TEST_CASE("comparison splitting") {
  for (int n = 1; n <= 3; ++n) {
    auto rep = comparison_splitting_check(n, Q);
    CHECK(rep.injective);
    CHECK(rep.quotient_acyclic);
  }
}

TEST_CASE("Frobenius checks") {
  CatNerveFrob nerve{phi_const(2)};
  auto rep = frobenius_check(nerve, 4);
  CHECK(rep.ok());

  CircleFrob s1{8};
  auto rep2 = frobenius_check(s1, 3);
  CHECK(rep2.ok());

  CatNerveFrob bad{phi_const(2), true};
  auto rep3 = frobenius_check(bad, 3);
  CHECK_FALSE(rep3.ok());
  CHECK_FALSE(rep3.witness.empty());
}

TEST_CASE("appendix correspondence on the capped corpus") {
  {
    AppendixContext ctx(1, 3, F2Algebra::ground_field(), 3);
    auto rep = appendix_bijection_check(ctx);
    CHECK(rep.ok());
    CHECK(rep.instances >= 1);
  }
  {
    AppendixContext ctx(2, 3, F2Algebra::dual_numbers(), 3);
    auto rep = appendix_bijection_check(ctx);
    CHECK(rep.ok());
    CHECK(rep.instances == 65536);
    CHECK(rep.both_hold >= 1);
  }
}
