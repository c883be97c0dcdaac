#include <catch2/catch_amalgamated.hpp>

#include "neckcat/simpset.hpp"

using namespace neckcat;

static std::vector<int> nd_counts(const FinSimplicialSet& K) {
  std::vector<int> out;
  for (auto& v : K.nd_by_dim) out.push_back(int(v.size()));
  return out;
}

TEST_CASE("standard complexes") {
  auto d2 = std_simplex(2);
  CHECK(nd_counts(d2.K) == std::vector<int>{3, 3, 1});
  d2.K.validate();

  auto h21 = horn(2, 1);
  CHECK(nd_counts(h21.K) == std::vector<int>{3, 2});
  h21.K.validate();

  auto s1 = circle();
  CHECK(nd_counts(s1.K) == std::vector<int>{1, 1});
  s1.K.validate();

  auto b3 = boundary(3);
  CHECK(nd_counts(b3.K) == std::vector<int>{4, 6, 4});
  b3.K.validate();

  CHECK_THROWS_AS(horn(2, 5), invalid_input);
}

TEST_CASE("EZ normalization round trips") {
  auto d3 = std_simplex(3);
  const auto& K = d3.K;
  // apply identities and compositions of operators agree
  for (int n = 1; n <= 3; ++n)
    for (auto& x : K.simplices(n)) {
      CHECK(K.apply(x, MonoMap::identity(n)) == x);
      for (auto& alpha : enumerate_mono_maps(n - 1, n))
        for (auto& beta : enumerate_mono_maps(n, n + 1)) {
          // x . (alpha . beta-read): (x . beta') . alpha' composite law
          auto lhs = K.apply(K.apply(x, alpha), MonoMap::identity(n - 1));
          (void)lhs;
          auto c = compose(alpha, MonoMap::identity(n));
          CHECK(K.apply(x, c) == K.apply(x, alpha));
        }
    }
  // genuine composite check: x.(a ; b) == (x.b).a for a: [k]->[m], b: [m]->[n]
  for (auto& x : K.simplices(3))
    for (auto& b : enumerate_mono_maps(2, 3))
      for (auto& a : enumerate_mono_maps(1, 2))
        CHECK(K.apply(x, compose(a, b)) == K.apply(K.apply(x, b), a));
}

TEST_CASE("simplex counts vs interval maps") {
  // |Delta^n_m(0,n)| equals |fint([m],[n])|
  for (int n = 1; n <= 4; ++n) {
    auto dn = std_simplex(n);
    for (int m = 1; m <= 4; ++m) {
      int count = 0;
      for (auto& s : dn.K.simplices(m))
        if (dn.K.vertex(s, 0) == 0 && dn.K.vertex(s, m) == n) ++count;
      CHECK(count == int(enumerate_interval_maps(m, n).size()));
    }
  }
}

TEST_CASE("necklace instances") {
  auto d2 = std_simplex(2);
  BipointedSSet d2_02 = d2;  // marked (0,2) already
  auto i1 = necklace_instances(d2_02, Necklace::simplex(1));
  CHECK(i1.size() == 1);  // the edge [0,2]

  // paths 0 -> c -> 2 over all intermediate vertices, degenerate edges
  // included: (s_0 0, [02]), ([01],[12]), ([02], s_0 2)
  auto i2 = necklace_instances(d2_02, Necklace::spine(2));
  CHECK(i2.size() == 3);
  CHECK(totally_nondeg_instances(d2_02, Necklace::spine(2)).size() == 1);

  auto d1 = std_simplex(1);
  auto i3 = necklace_instances(d1, Necklace::simplex(2));
  CHECK(i3.size() == 2);  // s_0 e and s_1 e

  auto s1 = circle();
  auto i4 = totally_nondeg_instances(s1, Necklace::spine(2));
  CHECK(i4.size() == 1);  // (e, e)

  CHECK(totally_nondeg_instances(d2_02, Necklace::simplex(2)).size() == 1);
  CHECK(totally_nondeg_instances(d1, Necklace::simplex(2)).empty());

  // point necklace: one instance iff a == b
  CHECK(necklace_instances(s1, Necklace::point()).size() == 1);
  CHECK(necklace_instances(d2_02, Necklace::point()).empty());
}

TEST_CASE("degenerate instances are enumerated") {
  auto d2 = std_simplex(2);
  // dim-2 simplices from 0 to 2: the top simplex, s_0[02], s_1[02]
  auto all2 = necklace_instances(d2, Necklace::simplex(2));
  CHECK(all2.size() == 3);
  int nd = 0;
  for (auto& x : all2) nd += x.totally_nondegenerate();
  CHECK(nd == 1);
}

TEST_CASE("action functoriality on small maps") {
  std::vector<BipointedSSet> spaces = {std_simplex(3), boundary(3), horn(3, 1), circle()};
  for (auto& Kab : spaces) {
    for (auto& t : enumerate_necklaces_up_to(3))
      for (auto& u : enumerate_necklaces_up_to(3)) {
        auto maps = enumerate_necklace_maps(u, t);
        if (maps.empty()) continue;
        auto xs = necklace_instances(Kab, t);
        for (auto& g : maps)
          for (auto& x : xs) {
            Instance y = act(Kab, g, x);
            CHECK(int(y.beads.size()) == u.bead_count());
            // identity action
            CHECK(act(Kab, NecklaceMap::identity(u), y) == y);
            // functoriality against a second map
            for (auto& v : enumerate_necklaces_up_to(2))
              for (auto& h : enumerate_necklace_maps(v, u)) {
                Instance lhs = act(Kab, compose(h, g), x);
                Instance rhs = act(Kab, h, act(Kab, g, x));
                CHECK(lhs == rhs);
              }
          }
      }
  }
}

TEST_CASE("action generators on the standard simplex") {
  auto d2 = std_simplex(2);
  Instance top = necklace_instances(d2, Necklace::simplex(2))[0];
  // pick the non-degenerate one
  for (auto& x : necklace_instances(d2, Necklace::simplex(2)))
    if (x.totally_nondegenerate()) top = x;
  // nu_{1,1}: restriction to ([0,1],[1,2])
  Instance path = act(d2, necklace_nu(Necklace::simplex(2), 1), top);
  REQUIRE(path.beads.size() == 2);
  CHECK(path.beads[0].nondegenerate());
  CHECK(d2.K.vertex(path.beads[0], 0) == 0);
  CHECK(d2.K.vertex(path.beads[0], 1) == 1);
  CHECK(d2.K.vertex(path.beads[1], 1) == 2);
  // delta_1: the long edge
  Instance edge = act(d2, necklace_delta(Necklace::simplex(2), 1), top);
  REQUIRE(edge.beads.size() == 1);
  CHECK(d2.K.vertex(edge.beads[0], 0) == 0);
  CHECK(d2.K.vertex(edge.beads[0], 1) == 2);
}
