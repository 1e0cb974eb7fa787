#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "eqk/errors.hpp"
#include "eqk/gkm.hpp"
#include "eqk/toroidal.hpp"
#include "fan_fixtures.hpp"
#include "fan_oracle.hpp"
#include "gkm_oracles.hpp"

using namespace eqk;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

ToroidalInstance wonderful(const std::string& type) { return wonderful_ring(build_root_datum(type)); }

ToroidalInstance a1xa1_split() {
  return make_instance(build_root_datum("A1xA1"), Fan::from_maximal(2, {{{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}}));
}

Fan a2_split_plus() { return Fan::from_maximal(2, {{{2, 1}, {1, 1}}, {{1, 1}, {1, 2}}}); }

LaurentPoly orbit_sum(const WeylGroup& W, const IntVec& lambda) {
  std::set<IntVec> orbit;
  for (std::size_t w = 0; w < W.size(); ++w) orbit.insert(W.act_m(int(w), lambda));
  LaurentPoly p(int(lambda.size()));
  for (const auto& x : orbit) p += LaurentPoly::monomial(x);
  return p;
}

std::vector<std::vector<LaurentPoly>> random_coefficients(std::mt19937& rng, const ToroidalInstance& X) {
  const int l = X.rank(), n = int(X.W->size()), m = int(X.cone_count());
  std::uniform_int_distribution<int> e(-1, 1);
  std::vector<std::vector<LaurentPoly>> c(n, std::vector<LaurentPoly>(m, LaurentPoly(2 * l)));
  for (int v = 0; v < n; ++v) {
    GKMClass p = oracle::random_gkm_class(rng, X.plus_graph);
    IntVec lambda(l);
    for (auto& x : lambda) x = e(rng);
    const LaurentPoly inv = embed(orbit_sum(*X.W, lambda), 2 * l, l);
    for (int s = 0; s < m; ++s) c[v][s] = embed(p[s], 2 * l, 0) * inv;
  }
  return c;
}

void fixed_point_counts() {
  require(fixed_points(wonderful("A1")).size() == 4, "A1 chamber");
  require(fixed_points(wonderful("A2")).size() == 36, "A2 chamber");
  require(fixed_points(a1xa1_split()).size() == 32, "A1xA1 split");
  require(toroidal_gkm_graph(a1xa1_split()).graph.vertex_count() == 32, "A1xA1 graph");
}

void ordinary_rank() {
  const OrdinaryK a1 = ordinary_k(wonderful("A1"));
  require(a1.rank == 4 && a1.consistent, "A1 rank");
  // P3 has one affine cell in each dimension 0..3
  require(a1.out_degree_histogram == std::vector<int>{1, 1, 1, 1}, "A1 cell count differs from P3");
  const OrdinaryK a2 = ordinary_k(wonderful("A2"));
  require(a2.rank == 36 && a2.consistent, "A2 rank");
}

void steinberg_suite() {
  std::mt19937 rng(301);
  for (const char* type : {"A1", "A2", "B2"}) {
    auto W = std::make_shared<const WeylGroup>(build_root_datum(type));
    auto S = steinberg_basis(W);
    require(S->verification().ok(), std::string(type) + " basis verification");
    require(!S->denominator().is_zero(), std::string(type) + " singular system");
    std::vector<int> seen(W->size(), 0);
    std::size_t total = 0;
    for (const auto& [mask, elems] : S->c_sets()) {
      total += elems.size();
      for (int w : elems) ++seen[w];
    }
    require(total == W->size(), std::string(type) + " C^I sizes");
    for (int s : seen) require(s == 1, std::string(type) + " C^I partition");
    const int l = W->root_datum().rank();
    for (int t = 0; t < 25; ++t) {
      const LaurentPoly g = oracle::random_poly(rng, l, 4, 2, 5);
      const auto c = steinberg_decompose(*S, g);
      for (const auto& x : c) require(is_w_invariant(*W, x), std::string(type) + " coefficient not invariant");
      require(steinberg_reconstruct(*S, c) == g, std::string(type) + " round trip");
    }
  }
}

void structure_constant_suite() {
  for (const char* type : {"A1", "A2"}) {
    auto W = std::make_shared<const WeylGroup>(build_root_datum(type));
    auto S = steinberg_basis(W);
    const int n = int(W->size());
    for (int v = 0; v < n; ++v)
      for (int vp = 0; vp < n; ++vp) {
        const auto a = structure_constants(*S, v, vp);
        LaurentPoly sum(W->root_datum().rank());
        for (int w = 0; w < n; ++w) {
          sum += a[w] * S->f()[w];
          if (!a[w].is_zero())
            require((S->c_index(w) & ~(S->c_index(v) | S->c_index(vp))) == 0, std::string(type) + " support");
        }
        require(sum == S->f()[v] * S->f()[vp], std::string(type) + " reconstruction");
      }
  }
}

void decomposition_suite() {
  std::mt19937 rng(302);
  for (const auto& X : {wonderful("A1"), a1xa1_split()}) {
    for (int t = 0; t < 10; ++t) {
      const auto c = random_coefficients(rng, X);
      require(decompose(X, compose(X, c)).coefficients == c, "coefficient recovery");
    }
    // arbitrary valid classes: products and sums of built classes
    for (int t = 0; t < 10; ++t) {
      const ReducedClass a = compose(X, random_coefficients(rng, X)), b = compose(X, random_coefficients(rng, X));
      ReducedClass s = multiply(a, b);
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += a[k];
      require(is_gg_class(X, s).ok, "ring closure");
      const DecompositionResult d = decompose(X, s);
      require(compose(X, d.coefficients) == s, "reconstruction");
    }
  }
}

void multiplication_rule() {
  for (const auto& X : {wonderful("A1"), wonderful("A2")}) {
    const int n = int(X.W->size());
    for (int v = 0; v < n; ++v)
      for (int vp = 0; vp < n; ++vp) {
        const MultstrResult r = multstr_check(X, v, vp);
        require(r.ok, r.witness);
      }
  }
}

void gkm_plp() {
  std::mt19937 rng(303);
  auto A2 = std::make_shared<const WeylGroup>(build_root_datum("A2"));
  std::vector<Fan> fans = {
      Fan::from_maximal(2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, -1}}, {{-1, -1}, {1, 0}}}),
      orbit_fan(*A2, dominant_chamber_fan(A2->root_datum())).fan,
      a2_split_plus(),
      Fan::from_maximal(2, {{{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}}),
      orbit_fan(*A2, a2_split_plus()).fan,
  };
  for (const Fan& fan : fans) {
    const GKMGraph g = toric_gkm_graph(fan);
    for (int t = 0; t < 20; ++t) {
      const GKMClass a = oracle::random_gkm_class(rng, g), b = oracle::random_gkm_class(rng, g);
      const PLPFunction p = plp_from_gkm(fan, a), q = plp_from_gkm(fan, b);
      require(is_plp(p) && gkm_from_plp(p) == a, "round trip");
      GKMClass ab = a;
      for (std::size_t k = 0; k < ab.size(); ++k) ab[k] *= b[k];
      PLPFunction pq{fan, p.values};
      for (std::size_t k = 0; k < pq.values.size(); ++k) pq.values[k] *= q.values[k];
      require(is_plp(pq) && gkm_from_plp(pq) == ab, "product");
    }
  }
}

void cellularity_checker() {
  std::mt19937 rng(304);
  std::vector<Fan> fans;
  for (const auto& f : fixtures::toric_fans()) fans.push_back(Fan::from_maximal(f.n, f.cones));
  auto A1 = std::make_shared<const WeylGroup>(build_root_datum("A1"));
  fans.push_back(orbit_fan(*A1, dominant_chamber_fan(A1->root_datum())).fan);
  int checked = 0;
  for (const Fan& fan : fans) {
    if (fan.maximal().size() > 6) continue;
    const int n = fan.ambient_rank();
    IntVec v(n);
    for (int k = 0; k < n; ++k) v[k] = 11 + 7 * k;
    require(is_generic(fan, v), "base vector not generic");
    const CellularityReport rep = cellularity_report(fan, v);
    require(rep.verdict == oracle::brute_force_report(fan, v).verdict, "verdict differs from the oracle");
    std::uniform_int_distribution<int> d(-2, 2);
    int perturbed = 0;
    for (int t = 0; t < 1000 && perturbed < 10; ++t) {
      IntVec w = v;
      for (auto& x : w) x += d(rng);
      if (!psg_perturbation(fan, v, w)) continue;
      ++perturbed;
      require(cellularity_report(fan, w).verdict == rep.verdict, "verdict changes under a bounded perturbation");
    }
    require(perturbed == 10, "too few bounded perturbations");
    ++checked;
  }
  require(checked >= 8, "fan suite too small");
}

void laurent_kernel() {
  std::mt19937 rng(305);
  for (int rank = 1; rank <= 3; ++rank)
    for (int t = 0; t < 100; ++t) {
      const LaurentPoly f = oracle::random_poly(rng, rank, 5, 3, 9);
      const IntVec chi = oracle::random_nonzero(rng, rank, 3);
      const LaurentPoly g = f * LaurentPoly::one_minus_exp(chi);
      require(divide_by_one_minus_exp(g, chi) == f, "division round trip");
      auto q = exact_divide(g, LaurentPoly::one_minus_exp(chi));
      require(q && *q == f, "exact division round trip");
      IntVec neg = chi;
      for (auto& x : neg) x = -x;
      for (const LaurentPoly* h : {&f, &g})
        require(divisible_by_one_minus_exp(*h, chi).divisible == divisible_by_one_minus_exp(*h, neg).divisible,
                "sign symmetry");
      require(divisible_by_one_minus_exp(g, chi).divisible, "product not divisible");
    }
}

void toroidal_invariants() {
  for (const auto& [type, degree] : {std::pair<const char*, int>{"A1", 3}, {"A2", 8}}) {
    const ToroidalInstance X = wonderful(type);
    const ToroidalGraph G = toroidal_gkm_graph(X);
    validate(G.graph);
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : G.graph.edges) require(pairs.insert(std::minmax(e.i, e.j)).second, "duplicate edge");
    const ToroidalPSG p = transfer_to_toroidal(X, find_generic_nu0(X));
    const OrientationReport o = orientation_check(X, G, p.nu1, p.nu2);
    require(o.acyclic && o.unique_sink && o.unique_source, std::string(type) + " orientation");
    require(o.max_out_degree == degree && o.expected_dimension == degree, std::string(type) + " source degree");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {"fixed-point counts", 1, fixed_point_counts},
      {"ordinary K rank", 5, ordinary_rank},
      {"Steinberg suite", 30, steinberg_suite},
      {"structure constants", 60, structure_constant_suite},
      {"toroidal decomposition", 60, decomposition_suite},
      {"multiplication rule", 60, multiplication_rule},
      {"GKM and PLP round trips", 30, gkm_plp},
      {"cellularity checker", 30, cellularity_checker},
      {"Laurent kernel", 10, laurent_kernel},
      {"toroidal graph invariants", 10, toroidal_invariants},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    std::string note;
    bool ok = true;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const std::exception& e) {
      ok = false;
      note = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit) {
      ok = false;
      note = "exceeded " + std::to_string(int(c.limit)) + " s";
    }
    failed += !ok;
    std::printf("%s %2zu %-26s %8.3f s%s%s\n", ok ? "PASS" : "FAIL", k + 1, c.name, secs, note.empty() ? "" : "  ",
                note.c_str());
  }
  return failed == 0 ? 0 : 1;
}
