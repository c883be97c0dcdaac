#include <catch2/catch_amalgamated.hpp>

#include "neckcat/chain.hpp"

using namespace neckcat;

using CQ = ChainComplex<Rat>;
using MQ = Mat<Rat>;

static FieldOf<Rat> Q;

// k in degree 0
static CQ point_complex() { return CQ::concentrated(Q, 0, 1); }

// k -> k (iso) in degrees 1, 0
static CQ acyclic_interval() {
  MQ d(1, 1, Q);
  d.at(0, 0) = Rat(1);
  return CQ(Q, 0, {1, 1}, {d});
}

TEST_CASE("complex validation") {
  CHECK_NOTHROW(point_complex());
  CHECK_NOTHROW(acyclic_interval());
  MQ bad(1, 1, Q);
  bad.at(0, 0) = Rat(1);
  CHECK_THROWS_AS(CQ(Q, 0, {1, 1, 1}, {bad, bad}), invalid_input);  // d.d != 0
}

TEST_CASE("tensor products") {
  CQ pt = point_complex();
  CQ a = acyclic_interval();
  CQ t = tensor(pt, a);
  CHECK(t.dims == a.dims);
  CHECK(t.diff(1) == a.diff(1));

  CQ aa = tensor(a, a);
  CHECK(aa.dims == std::vector<int>{1, 2, 1});
  CHECK(is_acyclic(aa));

  // associativity up to dims and differentials under canonical ordering
  CQ l = tensor(tensor(a, a), a);
  CQ r = tensor(a, tensor(a, a));
  CHECK(l.dims == r.dims);
  for (int n = l.lo + 1; n <= l.hi(); ++n) CHECK(l.diff(n) == r.diff(n));
}

TEST_CASE("hom spaces of chain maps") {
  CHECK(hom_chain_maps(point_complex(), point_complex()).size() == 1);
  // maps out of an acyclic interval into a point: phi_0 unconstrained? no:
  // phi_0 . d_1 = 0 forces phi_0 = 0 on the image, which is everything
  CHECK(hom_chain_maps(acyclic_interval(), point_complex()).empty());
  // rank-nullity on a random-ish matrix
  MQ m(2, 3, Q);
  m.at(0, 0) = Rat(1);
  m.at(0, 1) = Rat(2);
  m.at(1, 2) = Rat(-1);
  CHECK(rank(m, Q) + nullspace(m, Q).cols == m.cols);
}

TEST_CASE("lifting problems") {
  CQ a = acyclic_interval();
  ChainMap<Rat> id = ChainMap<Rat>::identity(a);
  auto g = solve_lift(id, id);
  REQUIRE(g.has_value());
  CHECK(*g == id);

  // lift along zero source: returns the zero map
  CQ z = CQ::zero(Q);
  ChainMap<Rat> from_zero = ChainMap<Rat>::zero_map(z, a);
  ChainMap<Rat> f0 = ChainMap<Rat>::zero_map(z, point_complex());
  auto g2 = solve_lift(from_zero, f0);
  REQUIRE(g2.has_value());

  // no lift: identity of the point along the inclusion of the point into an
  // acyclic interval in degree 0 has a lift (retraction exists), but the
  // inclusion k[1] -> (k -> k) as the degree-1 part admits no retraction:
  CQ k1 = CQ::concentrated(Q, 1, 1);
  std::vector<MQ> comps;
  comps.push_back(MQ(1, 1, Q));
  comps.back().at(0, 0) = Rat(1);
  // k1 -> a in degree 1 is NOT a chain map (d . i != i . d), so use degree 0
  CQ k0 = point_complex();
  std::vector<MQ> comps0{MQ(1, 1, Q)};
  comps0[0].at(0, 0) = Rat(1);
  ChainMap<Rat> incl(k0, a, comps0);
  auto r = solve_lift(incl, ChainMap<Rat>::identity(k0));
  // a retraction a -> k0 exists iff phi_0(d x) = 0 can hold with phi_0(e)=1;
  // here d is an iso so phi_0 must kill e: contradiction
  CHECK_FALSE(r.has_value());
}

TEST_CASE("homology, kernel, cokernel") {
  auto h = homology_dims(acyclic_interval());
  for (auto [n, d] : h) CHECK(d == 0);

  auto hp = homology_dims(point_complex());
  CHECK(hp == std::vector<std::pair<int, int>>{{0, 1}});

  // the degree-0 inclusion k0 -> (k -> k) is a chain map; its kernel is 0
  // and its cokernel is k in degree 1 with zero differential
  CQ a = acyclic_interval();
  CQ k0 = point_complex();
  std::vector<MQ> comps{MQ(1, 1, Q)};
  comps[0].at(0, 0) = Rat(1);
  ChainMap<Rat> incl0(k0, a, comps);
  auto [ker, incl] = kernel(incl0);
  CHECK(ker.dim_at(0) == 0);
  auto [cok, q] = cokernel(incl0);
  CHECK(cok.dim_at(0) == 0);
  CHECK(cok.dim_at(1) == 1);
  auto hq = homology_dims(cok);
  CHECK(hq == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});

  // cokernel of zero map is the identity target
  ChainMap<Rat> zmap = ChainMap<Rat>::zero_map(k0, a);
  auto [cok2, q2] = cokernel(zmap);
  CHECK(cok2.dim_at(0) == 1);
  CHECK(cok2.dim_at(1) == 1);
}

TEST_CASE("pullback and pushout") {
  CQ k0 = point_complex();
  ChainMap<Rat> id = ChainMap<Rat>::identity(k0);
  auto pb = pullback(id, id);
  CHECK(pb.P.dim_at(0) == 1);
  // universal square commutes
  CHECK(chain_compose(pb.p1, id) == chain_compose(pb.p2, id));

  auto po = pushout(id, id);
  CHECK(po.P.dim_at(0) == 1);
  CHECK(chain_compose(id, po.i1) == chain_compose(id, po.i2));
}

TEST_CASE("prime field arithmetic") {
  FieldOf<Fp> F2{2};
  Mat<Fp> m(2, 2, F2);
  m.at(0, 0) = F2.one();
  m.at(0, 1) = F2.one();
  m.at(1, 0) = F2.one();
  m.at(1, 1) = F2.one();
  CHECK(rank(m, F2) == 1);
  FieldOf<Fp> F5{5};
  Fp x(5, 3);
  CHECK((x * x.inv()) == F5.one());
  CHECK_THROWS_AS((Fp(5, 1) + Fp(3, 1)), invalid_input);
}
