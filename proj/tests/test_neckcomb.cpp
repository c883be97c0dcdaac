#include <catch2/catch_amalgamated.hpp>

#include "neckcat/barminus.hpp"
#include "neckcat/cube.hpp"
#include "neckcat/necklace.hpp"

using namespace neckcat;

TEST_CASE("interval map composition") {
  IntervalMap d1(1, 2, {0, 2});
  IntervalMap s1 = IntervalMap::codegeneracy(1, 1);
  CHECK(compose_interval(d1, s1) == IntervalMap::identity(1));
  CHECK(compose_interval(IntervalMap::identity(3), IntervalMap::identity(3)) ==
        IntervalMap::identity(3));
  IntervalMap s0 = IntervalMap::codegeneracy(0, 0);
  CHECK(compose_interval(s0, IntervalMap::identity(0)) == s0);
  CHECK_THROWS_AS(compose_interval(d1, d1), invalid_input);
}

TEST_CASE("necklace enumeration") {
  auto n0 = enumerate_necklaces(0);
  REQUIRE(n0.size() == 1);
  CHECK(n0[0] == Necklace::point());

  auto n3 = enumerate_necklaces(3);
  REQUIRE(n3.size() == 4);
  CHECK(n3[0] == Necklace::simplex(3));
  CHECK(n3[1] == Necklace::from_beads({1, 2}));
  CHECK(n3[2] == Necklace::from_beads({2, 1}));
  CHECK(n3[3] == Necklace::spine(3));

  CHECK(enumerate_necklaces(5).size() == 16);
}

TEST_CASE("necklace invariants") {
  Necklace t = Necklace::from_beads({2, 1, 3});
  CHECK(t.p == 6);
  CHECK(t.dim() == 3);
  CHECK(t.bead_lengths() == std::vector<int>{2, 1, 3});
  CHECK(Necklace::simplex(4).dim() == 3);
  CHECK(Necklace::spine(4).dim() == 0);
  CHECK_THROWS_AS(Necklace(2, 0b001), invalid_input);  // missing endpoint joint
}

TEST_CASE("classification of generators") {
  NecklaceMap sigma0 = necklace_sigma(0, 0);  // Delta^1 ->> Delta^0
  auto fl = classify_map(sigma0);
  CHECK(fl.active);
  CHECK(fl.surjective);
  CHECK(fl.spine_collapsing);
  CHECK_FALSE(fl.injective);

  NecklaceMap nu11 = necklace_nu(Necklace::simplex(2), 1);
  fl = classify_map(nu11);
  CHECK(fl.inert);
  CHECK(fl.injective);
  CHECK_FALSE(fl.active);

  NecklaceMap d1 = necklace_delta(Necklace::simplex(2), 1);  // Delta^1 >-> Delta^2
  fl = classify_map(d1);
  CHECK(fl.active);
  CHECK(fl.injective);
  CHECK_FALSE(fl.inert);
}

static NecklaceMap canonical_composite() {
  // nu_{1,1} . (sigma_0 v id): Delta^2 v Delta^1 -> Delta^2
  NecklaceMap s0vid = necklace_sigma(1, 0).wedge(NecklaceMap::identity(Necklace::simplex(1)));
  NecklaceMap nu11 = necklace_nu(Necklace::simplex(2), 1);
  return compose(s0vid, nu11);
}

TEST_CASE("active-inert factorization") {
  // active maps factor as (m, id)
  NecklaceMap d1 = necklace_delta(Necklace::simplex(3), 2);
  auto [a, i] = factor_active_inert(d1);
  CHECK(a == d1);
  CHECK(i.inert());
  CHECK(i.src == i.dst);

  NecklaceMap m = canonical_composite();
  auto [act, in] = factor_active_inert(m);
  CHECK(act.src == Necklace::from_beads({2, 1}));
  CHECK(act.dst == Necklace::spine(2));
  CHECK(act.active());
  CHECK(in == necklace_nu(Necklace::simplex(2), 1));
  CHECK(compose(act, in) == m);
}

TEST_CASE("surjective-injective factorization") {
  NecklaceMap inj = necklace_delta(Necklace::simplex(3), 1);
  auto [s, d] = factor_minus_plus(inj);
  CHECK(s == NecklaceMap::identity(inj.src));
  CHECK(d == inj);

  NecklaceMap s0 = necklace_sigma(0, 0);
  auto [s2, d2] = factor_minus_plus(s0);
  CHECK(s2 == s0);
  CHECK(d2 == NecklaceMap::identity(Necklace::point()));

  NecklaceMap m = canonical_composite();
  auto [s3, d3] = factor_minus_plus(m);
  CHECK(s3.surjective());
  CHECK(s3.active());
  CHECK(d3 == necklace_nu(Necklace::simplex(2), 1));
  CHECK(compose(s3, d3) == m);
}

TEST_CASE("factorizations exist uniquely on all maps p,q <= 4") {
  auto necklaces = enumerate_necklaces_up_to(4);
  for (auto& t : necklaces)
    for (auto& u : necklaces)
      for (auto& m : enumerate_necklace_maps(t, u)) {
        auto [a, i] = factor_active_inert(m);
        CHECK(a.active());
        CHECK(i.inert());
        CHECK(compose(a, i) == m);
        // uniqueness: any factorization with active then inert equals this one
        int count = 0;
        for (auto& mid : enumerate_necklaces(u.p)) {
          // candidate active part has underlying f and target mid
          if (m.f.apply(t.joints) != mid.joints) continue;
          if ((u.joints & ~mid.joints) != 0) continue;
          ++count;
        }
        CHECK(count == 1);

        auto [s, d] = factor_minus_plus(m);
        CHECK(s.active());
        CHECK(s.surjective());
        CHECK(d.injective());
        CHECK(compose(s, d) == m);
      }
}

TEST_CASE("spine collapsing three-way equivalence, p <= 4") {
  // classify_map throws if the equivalence fails on an active surjection
  auto necklaces = enumerate_necklaces_up_to(4);
  int checked = 0;
  for (auto& t : necklaces)
    for (auto& u : necklaces)
      for (auto& m : enumerate_necklace_maps(t, u)) {
        auto fl = classify_map(m);
        if (fl.active && fl.surjective) ++checked;
      }
  CHECK(checked > 100);
}

TEST_CASE("extended composition") {
  ExtNecklaceMap d1(necklace_delta(Necklace::simplex(2), 1));
  ExtNecklaceMap nuco = necklace_nu_co(Necklace::simplex(2), 1);
  ExtNecklaceMap c = ext_compose(d1, nuco);
  CHECK(c.src == Necklace::simplex(1));
  CHECK(c.dst == Necklace::spine(2));
  CHECK(c.marker == list_to_mask({0, 1, 2}));
  CHECK(c.in_barminus());

  CHECK(ext_compose(ExtNecklaceMap::identity(Necklace::simplex(2)), nuco) == nuco);
  CHECK(ext_compose(nuco, ExtNecklaceMap::identity(Necklace::spine(2))) == nuco);
}

TEST_CASE("extended composition is associative, small exhaustive") {
  auto necklaces = enumerate_necklaces_up_to(2);
  for (auto& t : necklaces)
    for (auto& u : necklaces)
      for (auto& v : necklaces) {
        auto tu = enumerate_ext_maps(t, u);
        auto uv = enumerate_ext_maps(u, v);
        for (auto& a : tu)
          for (auto& b : uv) {
            ExtNecklaceMap ab = ext_compose(a, b);
            for (auto& w : enumerate_necklaces(1)) {
              for (auto& c : enumerate_ext_maps(v, w)) {
                CHECK(ext_compose(ab, c) == ext_compose(a, ext_compose(b, c)));
              }
            }
          }
      }
}

TEST_CASE("barminus-plus factorization") {
  // trivial cases
  ExtNecklaceMap m1 = necklace_nu_co(Necklace::simplex(2), 1);
  auto [mn, pl] = ext_factor(m1);
  CHECK(mn == m1);
  CHECK(pl == NecklaceMap::identity(Necklace::spine(2)));

  NecklaceMap inj = necklace_delta(Necklace::simplex(3), 2);
  auto [mn2, pl2] = ext_factor(ExtNecklaceMap(inj));
  CHECK(mn2 == ExtNecklaceMap::identity(inj.src));
  CHECK(pl2 == inj);

  // the worked example: (delta with f(1)=3, marker {0,2,3})
  Necklace dst(3, list_to_mask({0, 2, 3}));
  ExtNecklaceMap m(Necklace::simplex(1), dst, IntervalMap(1, 3, {0, 3}), list_to_mask({0, 2, 3}));
  auto [mn3, pl3] = ext_factor(m);
  CHECK(mn3.dst.p == 2);
  CHECK(mn3.dst == Necklace::spine(2));
  CHECK(mn3.in_barminus());
  CHECK(pl3.injective());
  CHECK(ext_compose(mn3, ExtNecklaceMap(pl3)) == m);
}

TEST_CASE("barminus-plus factorization unique on all extended maps p,q <= 3") {
  auto necklaces = enumerate_necklaces_up_to(3);
  for (auto& t : necklaces)
    for (auto& u : necklaces)
      for (auto& m : enumerate_ext_maps(t, u)) {
        auto [mn, pl] = ext_factor(m);
        CHECK(mn.in_barminus());
        CHECK(pl.injective());
        CHECK(ext_compose(mn, ExtNecklaceMap(pl)) == m);
        // uniqueness by exhaustive search over middles
        int count = 0;
        for (int r = 0; r <= u.p; ++r)
          for (auto& mid : enumerate_necklaces(r)) {
            for (auto& g : enumerate_ext_maps(t, mid)) {
              if (!g.in_barminus()) continue;
              for (auto& h : enumerate_necklace_maps(mid, u)) {
                if (!h.injective()) continue;
                if (ext_compose(g, ExtNecklaceMap(h)) == m) ++count;
              }
            }
          }
        CHECK(count == 1);

        // unique active . coinert . inert decomposition
        auto d = ext_decompose(m);
        CHECK(d.active.active());
        CHECK(d.coinert.is_coinert());
        CHECK(d.inert.inert());
        CHECK(ext_compose(ext_compose(ExtNecklaceMap(d.active), d.coinert),
                          ExtNecklaceMap(d.inert)) == m);
      }
}

TEST_CASE("wedge splitting") {
  // already a wedge
  ExtNecklaceMap nu11(necklace_nu(Necklace::simplex(2), 1));
  auto sp = ext_split_wedge(nu11, 1);
  CHECK(sp.left == ExtNecklaceMap::identity(Necklace::simplex(1)));
  CHECK(sp.right == ExtNecklaceMap::identity(Necklace::simplex(1)));
  CHECK(sp.nu == necklace_nu(Necklace::simplex(2), 1));

  // error case: source is not a wedge
  ExtNecklaceMap nuco = necklace_nu_co(Necklace::simplex(2), 1);
  CHECK_THROWS_AS(ext_split_wedge(nuco, 1), invalid_input);
}

TEST_CASE("wedge splitting reassembles, exhaustive p <= 3") {
  auto necklaces = enumerate_necklaces_up_to(3);
  for (auto& t : necklaces) {
    auto joints = t.joint_list();
    for (auto& u : necklaces)
      for (auto& m : enumerate_ext_maps(t, u))
        for (size_t k = 1; k + 1 < joints.size(); ++k) {
          auto sp = ext_split_wedge(m, joints[k]);
          ExtNecklaceMap re =
              ext_compose(sp.left.wedge(sp.right), ExtNecklaceMap(sp.nu));
          CHECK(re == m);
          if (m.in_nec()) {
            CHECK(sp.left.in_nec());
            CHECK(sp.right.in_nec());
          }
        }
  }
}

TEST_CASE("dim generator images") {
  CubeMap d = dim_on_map(necklace_delta(Necklace::simplex(2), 1));
  CHECK(d.table_equal(cube_face(1, 1, 0)));

  CubeMap n = dim_on_map(necklace_nu(Necklace::simplex(2), 1));
  CHECK(n.table_equal(cube_face(1, 1, 1)));

  CubeMap c = dim_on_map(necklace_nu_co(Necklace::simplex(2), 1));
  CHECK(c.table_equal(cube_degeneracy(0, 1)));

  // sigma_k on a bead: sigma_1 / gamma_k / sigma_n by position
  CHECK(dim_on_map(necklace_sigma(2, 0)).table_equal(cube_degeneracy(1, 1)));
  CHECK(dim_on_map(necklace_sigma(2, 1)).table_equal(cube_connection(1, 1)));
  CHECK(dim_on_map(necklace_sigma(2, 2)).table_equal(cube_degeneracy(1, 2)));
  CHECK(dim_on_map(necklace_sigma(0, 0)).table_equal(cube_identity(0)));

  // generic delta_k / nu_k on a larger simplex
  CHECK(dim_on_map(necklace_delta(Necklace::simplex(4), 3)).table_equal(cube_face(3, 3, 0)));
  CHECK(dim_on_map(necklace_nu(Necklace::simplex(4), 2)).table_equal(cube_face(3, 2, 1)));
}

TEST_CASE("dim functoriality and monoidality, p <= 3") {
  auto necklaces = enumerate_necklaces_up_to(3);
  for (auto& t : necklaces)
    for (auto& u : necklaces) {
      auto tu = enumerate_ext_maps(t, u);
      for (auto& a : tu) {
        CubeMap da = dim_on_map(a);  // internally cross-checks word against table
        CHECK(da.monotone());
        for (auto& v : enumerate_necklaces_up_to(2))
          for (auto& b : enumerate_ext_maps(u, v)) {
            CubeMap lhs = dim_table(ext_compose(a, b));
            CubeMap rhs = cube_compose(dim_table(a), dim_table(b));
            CHECK(lhs.table_equal(rhs));
          }
      }
    }
  // strong monoidality on a sample of wedges
  for (auto& t : enumerate_necklaces_up_to(2))
    for (auto& u : enumerate_necklaces_up_to(2))
      for (auto& a : enumerate_ext_maps(t, u))
        for (auto& t2 : enumerate_necklaces_up_to(2))
          for (auto& u2 : enumerate_necklaces_up_to(2))
            for (auto& b : enumerate_ext_maps(t2, u2)) {
              CHECK(dim_table(a.wedge(b))
                        .table_equal(cube_tensor(dim_table(a), dim_table(b))));
            }
}

TEST_CASE("cube hom counts") {
  CHECK(cube_hom(0, 0).size() == 1);
  CHECK(cube_hom(0, 1).size() == 2);
  CHECK(cube_hom(1, 1).size() == 3);
  for (auto& c : cube_hom(2, 2)) {
    CHECK(c.monotone());
    CubeMap direct = c;
    CubeMap prod = cube_identity(2);
    for (auto& g : c.word) prod = cube_compose(prod, gen_to_map(g));
    CHECK(prod.table_equal(direct));
  }
}

TEST_CASE("discrete fibration lifts") {
  Necklace t2 = Necklace::simplex(2);
  CHECK(dim_lift(t2, cube_face(1, 1, 0)) == necklace_delta(t2, 1));
  CHECK(dim_lift(t2, cube_face(1, 1, 1)) == necklace_nu(t2, 1));
  CHECK(dim_lift(t2, cube_identity(1)) == NecklaceMap::identity(t2));
  CHECK_THROWS_AS(dim_lift(t2, cube_degeneracy(0, 1)), invalid_input);

  // uniqueness by exhaustive search, dim T <= 3
  for (auto& t : enumerate_necklaces_up_to(4)) {
    if (t.dim() > 3) continue;
    for (int n = 0; n <= t.dim(); ++n)
      for (auto& g : cube_hom_injective(n, t.dim())) {
        NecklaceMap lift = dim_lift(t, g);
        CHECK(dim_table(ExtNecklaceMap(lift)).table_equal(g));
        int count = 0;
        for (auto& cand : enumerate_injective_into(t))
          if (cand.src.dim() == n && dim_table(ExtNecklaceMap(cand)).table_equal(g)) ++count;
        CHECK(count == 1);
      }
  }
}

TEST_CASE("elementary decomposition recomposes, p <= 3") {
  auto necklaces = enumerate_necklaces_up_to(3);
  for (auto& t : necklaces)
    for (auto& u : necklaces)
      for (auto& m : enumerate_ext_maps(t, u)) {
        auto steps = elementary_decomposition(m);
        CHECK(compose_steps(m.src, steps) == m);
      }
}

TEST_CASE("barminus generator words, q <= 3") {
  auto necklaces = enumerate_necklaces_up_to(3);
  for (auto& t : necklaces)
    for (auto& u : necklaces)
      for (auto& m : enumerate_ext_maps(t, u)) {
        if (!m.in_barminus()) continue;
        auto res = barminus_generator_word(m);
        REQUIRE(res.found);
        ExtNecklaceMap acc = ExtNecklaceMap::identity(m.src);
        for (auto& w : res.word) acc = ext_compose(acc, w);
        CHECK(acc == m);
      }
}

TEST_CASE("injective maps into a necklace, graded") {
  auto basis = enumerate_injective_into(Necklace::simplex(2));
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].src.dim() == 0);
  CHECK(basis[1].src.dim() == 0);
  CHECK(basis[2].src.dim() == 1);
  // |basis| = 3^{p-1} for a simplex
  CHECK(enumerate_injective_into(Necklace::simplex(4)).size() == 27);
}
