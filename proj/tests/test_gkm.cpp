#include <random>

#include "doctest.h"
#include "eqk/errors.hpp"
#include "eqk/gkm.hpp"
#include "fan_fixtures.hpp"
#include "gkm_oracles.hpp"

using namespace eqk;

namespace {

Fan fixture(const std::string& name) {
  for (const auto& f : fixtures::toric_fans())
    if (f.name == name) return Fan::from_maximal(f.n, f.cones);
  throw std::logic_error("no fixture " + name);
}

LaurentPoly mono(std::initializer_list<Int> e) { return LaurentPoly::monomial(IntVec(e)); }
LaurentPoly one(int r) { return LaurentPoly::constant(r, 1); }

}  // namespace

TEST_CASE("toric GKM graphs") {
  GKMGraph p1 = toric_gkm_graph(fixture("P1"));
  CHECK(p1.vertex_count() == 2);
  REQUIRE(p1.edges.size() == 1);
  CHECK(std::abs(p1.edges[0].chi[0]) == 1);
  GKMGraph p2 = toric_gkm_graph(fixture("P2"));
  CHECK(p2.vertex_count() == 3);
  CHECK(p2.edges.size() == 3);
  GKMGraph single = toric_gkm_graph(Fan::from_maximal(2, {{{1, 0}, {0, 1}}}));
  CHECK(single.vertex_count() == 1);
  CHECK(single.edges.empty());
  for (const auto& f : fixtures::toric_fans()) {
    Fan fan = Fan::from_maximal(f.n, f.cones);
    GKMGraph g = toric_gkm_graph(fan);
    CHECK(g.edges.size() == fan.walls().size());
    // each character is nonnegative on the cone it points away from
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      for (int x : {g.edges[e].i, g.edges[e].j})
        for (const auto& ray : fan.maximal()[x].rays()) CHECK(dot(g.character_at(e, x), ray) >= 0);
  }
}

TEST_CASE("graph validation") {
  GKMGraph g{{"a", "b", "c"}, {{0, 1, {1, 0}}, {0, 2, {2, 0}}}, 2};
  CHECK_THROWS_AS(validate(g), InvalidGraph);
  g.edges[1].chi = {0, 0};
  CHECK_THROWS_AS(validate(g), InvalidGraph);
  g.edges[1] = {1, 0, {0, 1}};
  CHECK_THROWS_AS(validate(g), InvalidGraph);
  g.edges[1] = {1, 2, {1, 1}};
  CHECK_NOTHROW(validate(g));
}

TEST_CASE("membership examples") {
  GKMGraph p1 = toric_gkm_graph(fixture("P1"));
  const IntVec chi = p1.edges[0].chi;
  CHECK(is_gkm_class(p1, {mono({3}), mono({3})}).ok);
  CHECK(is_gkm_class(p1, {one(1), LaurentPoly::monomial(chi)}).ok);
  Membership m = is_gkm_class(p1, {LaurentPoly(1), one(1)});
  CHECK_FALSE(m.ok);
  REQUIRE(m.edge);
  CHECK(*m.edge == 0);
  CHECK_FALSE(m.residue.is_zero());
  CHECK(augmentation(m.residue) == -1);
}

TEST_CASE("random congruence classes against the division oracle") {
  std::mt19937 rng(21);
  for (const auto& f : fixtures::toric_fans()) {
    CAPTURE(f.name);
    GKMGraph g = toric_gkm_graph(Fan::from_maximal(f.n, f.cones));
    for (int trial = 0; trial < 20; ++trial) {
      GKMClass a = oracle::random_gkm_class(rng, g), b = oracle::random_gkm_class(rng, g);
      CHECK(is_gkm_class(g, a).ok);
      GKMClass sum = a, prod = a;
      for (std::size_t x = 0; x < a.size(); ++x) sum[x] += b[x], prod[x] *= b[x];
      CHECK(is_gkm_class(g, sum).ok);
      CHECK(is_gkm_class(g, prod).ok);
      GKMClass bad = a;
      bad[rng() % bad.size()] += oracle::random_poly(rng, g.torus_rank, 2, 2, 3);
      const bool expect = oracle::congruent_by_division(g, bad);
      CHECK(is_gkm_class(g, bad).ok == expect);
      CHECK(is_gkm_class(g, bad, Exec::Serial).ok == expect);
      GKMGraph flipped = g;
      for (auto& e : flipped.edges)
        if (rng() % 2)
          for (auto& c : e.chi) c = -c;
      CHECK(is_gkm_class(flipped, bad).ok == expect);
      if (!expect) CHECK(is_gkm_class(g, bad).edge == is_gkm_class(g, bad, Exec::Serial).edge);
    }
  }
}

TEST_CASE("orientation and Euler classes") {
  GKMGraph p1 = toric_gkm_graph(fixture("P1"));
  auto src = orientation(p1, {1});
  const int source = src[0];
  const int sink = 1 - source;
  CHECK(euler_class(p1, sink, src) == one(1));
  CHECK(euler_class(p1, source, src) == LaurentPoly::one_minus_exp(p1.character_at(0, source)));
  CHECK_THROWS_AS(orientation(p1, {0}), NonGeneric);

  GKMGraph p2 = toric_gkm_graph(fixture("P2"));
  auto o = orientation(p2, {1, 2});
  std::vector<int> out_degree(3, 0);
  for (int s : o) ++out_degree[s];
  std::sort(out_degree.begin(), out_degree.end());
  CHECK(out_degree == std::vector<int>{0, 1, 2});
  for (int x = 0; x < 3; ++x) {
    LaurentPoly expect = one(2);
    for (std::size_t e = 0; e < p2.edges.size(); ++e)
      if (o[e] == x) {
        CHECK(dot(p2.character_at(e, x), IntVec{1, 2}) < 0);
        expect *= LaurentPoly::one_minus_exp(p2.character_at(e, x));
      }
    CHECK(euler_class(p2, x, o) == expect);
  }
}

TEST_CASE("piecewise Laurent polynomial functions") {
  Fan p1 = fixture("P1");
  CHECK(is_plp({p1, {mono({2}), mono({2})}}));
  CHECK(is_plp({p1, {one(1), mono({1})}}));
  CHECK_FALSE(is_plp({p1, {LaurentPoly(1), one(1)}}));
  CHECK(plp_face_value({p1, {one(1), mono({1})}}, Cone::from_generators(1, {})) == LaurentPoly::constant(0, 1));

  std::mt19937 rng(33);
  for (const auto& f : fixtures::toric_fans()) {
    CAPTURE(f.name);
    Fan fan = Fan::from_maximal(f.n, f.cones);
    GKMGraph g = toric_gkm_graph(fan);
    for (int trial = 0; trial < 20; ++trial) {
      GKMClass a = oracle::random_gkm_class(rng, g), b = oracle::random_gkm_class(rng, g);
      PLPFunction p = plp_from_gkm(fan, a), q = plp_from_gkm(fan, b);
      CHECK(is_plp(p));
      CHECK(gkm_from_plp(p) == a);
      PLPFunction pq{fan, p.values};
      for (std::size_t k = 0; k < pq.values.size(); ++k) pq.values[k] *= q.values[k];
      GKMClass ab = a;
      for (std::size_t k = 0; k < ab.size(); ++k) ab[k] *= b[k];
      CHECK(gkm_from_plp(pq) == ab);
      GKMClass bad = a;
      bad[rng() % bad.size()] += oracle::random_poly(rng, f.n, 2, 2, 3);
      CHECK(is_plp({fan, bad}) == is_gkm_class(g, bad).ok);
      if (!is_gkm_class(g, bad).ok) CHECK_THROWS_AS(plp_from_gkm(fan, bad), ConsistencyError);
    }
  }
}

TEST_CASE("line bundle classes") {
  Fan p2 = fixture("P2");
  CHECK(line_bundle_class(p2, {{{0, 0}, {0, 0}, {0, 0}}}).values == std::vector<LaurentPoly>(3, one(2)));
  CHECK(line_bundle_class(p2, {{{1, -2}, {1, -2}, {1, -2}}}).values == std::vector<LaurentPoly>(3, mono({1, -2})));
  // O(1): h = 0 on <e1,e2>, and -x-y style on the others
  PLPFunction o1 = line_bundle_class(p2, {{{0, 0}, {-1, 0}, {0, -1}}});
  CHECK(is_gkm_class(toric_gkm_graph(p2), o1.values).ok);
  CHECK_THROWS(line_bundle_class(p2, {{{0, 0}, {1, 1}, {0, 0}}}));
  Fan a1 = Fan::from_maximal(1, {{{1}}});
  CHECK(line_bundle_class(a1, {{{1}}}).values == std::vector<LaurentPoly>{mono({1})});
}

TEST_CASE("symmetrization and the dot action") {
  auto A1 = std::make_shared<const WeylGroup>(build_root_datum("A1"));
  Symmetrized s = symmetrize(*A1, Fan::from_maximal(1, {{{1}}}), {mono({1})});
  REQUIRE(s.values.size() == 2);
  CHECK(s.values[0] == mono({1}));
  CHECK(s.values[1] == mono({-1}));
  CHECK(s.orbit.origin[1].first == 1);

  auto A2 = std::make_shared<const WeylGroup>(build_root_datum("A2"));
  Fan split = Fan::from_maximal(2, {{{2, 1}, {1, 1}}, {{1, 1}, {1, 2}}});
  GKMGraph plus = toric_gkm_graph(split);
  std::mt19937 rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    GKMClass a = oracle::random_gkm_class(rng, plus);
    Symmetrized sym = symmetrize(*A2, split, a);
    CHECK(is_gkm_class(sym.graph, sym.values).ok);
    for (std::size_t k = 0; k < sym.orbit.origin.size(); ++k)
      if (sym.orbit.origin[k].first == 0) CHECK(sym.values[k] == a[sym.orbit.origin[k].second]);
    auto action = orbit_vertex_action(*A2, sym.orbit.fan);
    for (int w = 0; w < 6; ++w) CHECK(dot_act(*A2, w, sym.values, action) == sym.values);

    GKMClass b = oracle::random_gkm_class(rng, sym.graph);
    CHECK(dot_act(*A2, 0, b, action) == b);
    for (int w1 = 0; w1 < 6; ++w1) {
      GKMClass wb = dot_act(*A2, w1, b, action);
      CHECK(is_gkm_class(sym.graph, wb).ok);
      for (int w2 = 0; w2 < 6; ++w2)
        CHECK(dot_act(*A2, A2->multiply(w1, w2), b, action) == dot_act(*A2, w1, dot_act(*A2, w2, b, action), action));
    }
  }
  CHECK_THROWS(symmetrize(*A2, split, {LaurentPoly(2), one(2)}));
}
