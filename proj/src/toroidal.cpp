#include "eqk/toroidal.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eqk/errors.hpp"

namespace eqk {

namespace {

IntVec concat(const IntVec& a, const IntVec& b) {
  IntVec c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

IntVec negated(IntVec a) {
  for (auto& x : a) x = -x;
  return a;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = checked_sub(a[i], b[i]);
  return c;
}

void check_reduced(const ToroidalInstance& X, const ReducedClass& f) {
  if (f.size() != X.cone_count()) throw std::invalid_argument("reduced class needs one value per cone of F+");
  for (const auto& x : f)
    if (x.rank() != 2 * X.rank()) throw std::invalid_argument("reduced class values must have rank 2l");
}

// Simple roots whose orthogonal hyperplane contains a facet of sigma.
SubsetMask simple_facets(const WeylGroup& W, const Cone& sigma) {
  const RootDatum& rd = W.root_datum();
  SubsetMask m = 0;
  for (int i = 0; i < rd.semisimple_rank; ++i) {
    const IntVec a = rd.simple_root(i);
    for (const auto& f : sigma.facets()) {
      bool inside = true;
      for (std::size_t k = 0; k < sigma.rays().size() && inside; ++k)
        if (f.on >> k & 1) inside = dot(a, sigma.rays()[k]) == 0;
      if (inside) {
        m |= SubsetMask(1) << i;
        break;
      }
    }
  }
  return m;
}

std::string vertex_label(const WeylGroup& W, const ToroidalVertex& v) {
  return "(" + word_string(W[v.w1]) + "," + word_string(W[v.w2]) + ",sigma" + std::to_string(v.sigma) + ")";
}

}  // namespace

ToroidalInstance make_instance(const RootDatum& rd, const Fan& f_plus, Exec exec) {
  if (f_plus.ambient_rank() != rd.rank()) throw std::invalid_argument("F+ rank differs from root datum rank");
  for (const auto& c : f_plus.maximal())
    for (const auto& ray : c.rays())
      if (!rd.dominant(ray)) throw std::invalid_argument("ray " + to_string(ray) + " of F+ is outside the dominant chamber");
  ToroidalInstance X;
  X.W = std::make_shared<const WeylGroup>(rd);
  X.f_plus = f_plus;
  X.plus_graph = toric_gkm_graph(f_plus);
  X.steinberg = steinberg_basis(X.W, exec);
  return X;
}

Fan dominant_chamber_fan(const RootDatum& rd) {
  if (rd.central_rank != 0) throw std::invalid_argument("the dominant chamber is a cone only for central rank 0");
  IntMatrix adj = adjugate(rd.cartan);
  std::vector<IntVec> rays;
  for (int j = 0; j < rd.semisimple_rank; ++j) rays.push_back(primitive(adj.col(j)));
  return Fan::from_maximal(rd.rank(), {rays});
}

ToroidalInstance wonderful_ring(const RootDatum& rd, Exec exec) {
  return make_instance(rd, dominant_chamber_fan(rd), exec);
}

const char* edge_kind_name(int kind) {
  switch (kind) {
    case ClosedOrbitLeft: return "closed_orbit_left";
    case ClosedOrbitRight: return "closed_orbit_right";
    case SimpleWall: return "simple_wall";
    case InteriorWall: return "interior_wall";
  }
  return "?";
}

std::vector<ToroidalVertex> fixed_points(const ToroidalInstance& X) {
  std::vector<ToroidalVertex> v;
  const int n = int(X.W->size());
  for (int s = 0; s < int(X.cone_count()); ++s)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) v.push_back({a, b, s});
  return v;
}

int vertex_id(const ToroidalInstance& X, const ToroidalVertex& v) {
  const int n = int(X.W->size());
  return (v.sigma * n + v.w1) * n + v.w2;
}

ToroidalGraph toroidal_gkm_graph(const ToroidalInstance& X) {
  const WeylGroup& W = *X.W;
  const RootDatum& rd = W.root_datum();
  const int l = rd.rank();
  ToroidalGraph G;
  G.vertices = fixed_points(X);
  G.graph.torus_rank = 2 * l;
  for (const auto& v : G.vertices) G.graph.labels.push_back(vertex_label(W, v));
  const IntVec zero(l, 0);
  std::vector<SubsetMask> facets;
  for (const auto& c : X.f_plus.maximal()) facets.push_back(simple_facets(W, c));

  auto add = [&](const ToroidalVertex& x, const ToroidalVertex& y, IntVec chi, int kind) {
    const int a = vertex_id(X, x), b = vertex_id(X, y);
    if (a < b) G.graph.edges.push_back({a, b, std::move(chi), kind});
  };
  for (const auto& x : G.vertices) {
    for (const auto& alpha : W.positive_roots()) {
      const int s = W.reflection(alpha);
      add(x, {W.multiply(x.w1, s), x.w2, x.sigma}, concat(W.act_m(x.w1, alpha), zero), ClosedOrbitLeft);
      add(x, {x.w1, W.multiply(x.w2, s), x.sigma}, concat(zero, negated(W.act_m(x.w2, alpha))), ClosedOrbitRight);
    }
    for (int i = 0; i < rd.semisimple_rank; ++i) {
      if (!(facets[x.sigma] >> i & 1)) continue;
      const IntVec alpha = rd.simple_root(i);
      const int s = W.simple_reflection(i);
      add(x, {W.multiply(x.w1, s), W.multiply(x.w2, s), x.sigma},
          concat(W.act_m(x.w1, alpha), negated(W.act_m(x.w2, alpha))), SimpleWall);
    }
  }
  for (std::size_t e = 0; e < X.plus_graph.edges.size(); ++e) {
    const auto& edge = X.plus_graph.edges[e];
    for (int a = 0; a < int(W.size()); ++a)
      for (int b = 0; b < int(W.size()); ++b) {
        // character pointing away from (a, b, edge.i), nonnegative there on sigma_i
        IntVec chi = concat(W.act_m(a, edge.chi), negated(W.act_m(b, edge.chi)));
        const ToroidalVertex x{a, b, edge.i}, y{a, b, edge.j};
        if (vertex_id(X, x) < vertex_id(X, y)) add(x, y, chi, InteriorWall);
        else add(y, x, negated(chi), InteriorWall);
      }
  }
  std::stable_sort(G.graph.edges.begin(), G.graph.edges.end(),
                   [](const GKMEdge& p, const GKMEdge& q) { return std::pair(p.i, p.j) < std::pair(q.i, q.j); });
  validate(G.graph);
  return G;
}

Membership is_tt_class(const ToroidalGraph& G, const FullClass& a, Exec exec) { return is_gkm_class(G.graph, a, exec); }

LaurentPoly act_pair(const WeylGroup& W, int w1, int w2, const LaurentPoly& f) {
  const int l = W.root_datum().rank();
  return act_on_block(W[w2].on_m, act_on_block(W[w1].on_m, f, 0), l);
}

FullClass dot_act(const ToroidalInstance& X, int w1, int w2, const FullClass& a) {
  const WeylGroup& W = *X.W;
  const auto pts = fixed_points(X);
  if (a.size() != pts.size()) throw std::invalid_argument("full class needs one value per fixed point");
  FullClass out(a.size());
  for (const auto& x : pts)
    out[vertex_id(X, {W.multiply(w1, x.w1), W.multiply(w2, x.w2), x.sigma})] = act_pair(W, w1, w2, a[vertex_id(X, x)]);
  return out;
}

FullClass expand_invariant(const ToroidalInstance& X, const ReducedClass& f) {
  check_reduced(X, f);
  FullClass a;
  for (const auto& v : fixed_points(X)) a.push_back(act_pair(*X.W, v.w1, v.w2, f[v.sigma]));
  return a;
}

ReducedClass reduce_invariant(const ToroidalInstance& X, const FullClass& a) {
  auto pts = fixed_points(X);
  if (a.size() != pts.size()) throw std::invalid_argument("full class needs one value per fixed point");
  ReducedClass f(X.cone_count(), LaurentPoly(2 * X.rank()));
  for (const auto& v : pts)
    if (v.w1 == 0 && v.w2 == 0) f[v.sigma] = a[vertex_id(X, v)];
  for (const auto& v : pts)
    if (a[vertex_id(X, v)] != act_pair(*X.W, v.w1, v.w2, f[v.sigma]))
      throw std::invalid_argument("class is not W x W invariant at " + vertex_label(*X.W, v));
  return f;
}

LaurentPoly to_uv(const LaurentPoly& f) {
  const int l = f.rank() / 2;
  IntMatrix T = IntMatrix::identity(2 * l);
  for (int i = 0; i < l; ++i) T(l + i, i) = 1;
  return change_coordinates(T, f);
}

LaurentPoly from_uv(const LaurentPoly& f) {
  const int l = f.rank() / 2;
  IntMatrix T = IntMatrix::identity(2 * l);
  for (int i = 0; i < l; ++i) T(l + i, i) = -1;
  return change_coordinates(T, f);
}

LaurentPoly embed_antidiagonal(const LaurentPoly& p) {
  const int l = p.rank();
  IntMatrix T(2 * l, l);
  for (int i = 0; i < l; ++i) T(i, i) = 1, T(l + i, i) = -1;
  return change_coordinates(T, p);
}

GGReport is_gg_class(const ToroidalInstance& X, const ReducedClass& f, Exec exec) {
  check_reduced(X, f);
  const WeylGroup& W = *X.W;
  const RootDatum& rd = W.root_datum();
  const int l = rd.rank();
  const IntVec zero(l, 0);
  struct Item {
    std::string what;
    LaurentPoly chi_diff, uv_diff;
    IntVec chi_char, uv_char;
  };
  std::vector<Item> items;
  for (int s = 0; s < int(X.cone_count()); ++s) {
    const SubsetMask facets = simple_facets(W, X.f_plus.maximal()[s]);
    const LaurentPoly g = to_uv(f[s]);
    for (int i = 0; i < rd.semisimple_rank; ++i) {
      if (!(facets >> i & 1)) continue;
      const int r = W.simple_reflection(i);
      const IntVec a = rd.simple_root(i);
      items.push_back({"sigma" + std::to_string(s) + " simple root " + std::to_string(i + 1),
                       act_pair(W, r, r, f[s]) - f[s], act_on_block(W[r].on_m, g, l) - g, concat(a, negated(a)),
                       concat(a, zero)});
    }
  }
  for (const auto& e : X.plus_graph.edges)
    items.push_back({"wall sigma" + std::to_string(e.i) + "|sigma" + std::to_string(e.j), f[e.i] - f[e.j],
                     to_uv(f[e.i]) - to_uv(f[e.j]), concat(e.chi, negated(e.chi)), concat(e.chi, zero)});
  std::vector<char> chi_ok(items.size()), uv_ok(items.size());
  for_each_index(items.size(), exec, [&](std::size_t k) {
    chi_ok[k] = divisible_by_one_minus_exp(items[k].chi_diff, items[k].chi_char).divisible;
    uv_ok[k] = divisible_by_one_minus_exp(items[k].uv_diff, items[k].uv_char).divisible;
  });
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (chi_ok[k] != uv_ok[k])
      throw ConsistencyError("congruence forms disagree at " + items[k].what);
    if (!chi_ok[k]) return {false, items[k].what};
  }
  return {};
}

LaurentPoly u_factor(const ToroidalInstance& X, SubsetMask I) {
  const RootDatum& rd = X.W->root_datum();
  const IntVec zero(rd.rank(), 0);
  LaurentPoly p = LaurentPoly::constant(2 * rd.rank(), 1);
  for (int i = 0; i < rd.semisimple_rank; ++i)
    if (I >> i & 1) p *= LaurentPoly::one_minus_exp(concat(rd.simple_root(i), zero));
  return p;
}

DecompositionResult decompose(const ToroidalInstance& X, const ReducedClass& f, Exec exec) {
  check_reduced(X, f);
  const GGReport valid = is_gg_class(X, f, exec);
  if (!valid.ok) throw std::invalid_argument("class fails the congruence at " + valid.witness);
  const SteinbergData& S = *X.steinberg;
  const int l = X.rank(), n = int(X.W->size()), m = int(X.cone_count());
  const IntVec zero(l, 0);
  DecompositionResult out;
  out.coefficients.assign(n, std::vector<LaurentPoly>(m, LaurentPoly(2 * l)));
  for (int v = 0; v < n; ++v) out.index_set.push_back(S.c_index(v));
  for (int s = 0; s < m; ++s) {
    const LaurentPoly g = to_uv(f[s]);
    auto c = steinberg_decompose_block(S, g, l, exec);
    LaurentPoly back(2 * l);
    for (int v = 0; v < n; ++v) {
      const LaurentPoly factor = u_factor(X, S.c_index(v));
      auto q = exact_divide(c[v], factor);
      if (!q)
        throw ConsistencyError("coefficient at sigma" + std::to_string(s) + ", v=" + word_string((*X.W)[v]) +
                               " is not divisible by prod(1 - e^{alpha(u)})");
      back += factor * *q * embed(S.f()[v], 2 * l, l);
      out.coefficients[v][s] = std::move(*q);
    }
    if (back != g) throw ConsistencyError("reconstruction fails at sigma" + std::to_string(s));
  }
  for (int v = 0; v < n; ++v)
    for (const auto& e : X.plus_graph.edges) {
      auto r = divisible_by_one_minus_exp(out.coefficients[v][e.i] - out.coefficients[v][e.j], concat(e.chi, zero));
      if (!r.divisible)
        throw ConsistencyError("coefficient family of v=" + word_string((*X.W)[v]) + " fails the wall sigma" +
                               std::to_string(e.i) + "|sigma" + std::to_string(e.j) + ", residue " +
                               to_string(r.residue));
    }
  return out;
}

ReducedClass compose(const ToroidalInstance& X, const std::vector<std::vector<LaurentPoly>>& coefficients) {
  const SteinbergData& S = *X.steinberg;
  const int l = X.rank(), n = int(X.W->size()), m = int(X.cone_count());
  if (int(coefficients.size()) != n) throw std::invalid_argument("one coefficient family per Weyl group element");
  ReducedClass f(m, LaurentPoly(2 * l));
  for (int v = 0; v < n; ++v) {
    if (int(coefficients[v].size()) != m) throw std::invalid_argument("one coefficient per cone of F+");
    const LaurentPoly base = u_factor(X, S.c_index(v)) * embed(S.f()[v], 2 * l, l);
    for (int s = 0; s < m; ++s)
      if (!coefficients[v][s].is_zero()) f[s] += coefficients[v][s] * base;
  }
  for (auto& x : f) x = from_uv(x);
  return f;
}

ReducedClass basis_element(const ToroidalInstance& X, int v, const GKMClass& p) {
  const int l = X.rank(), n = int(X.W->size()), m = int(X.cone_count());
  if (v < 0 || v >= n) throw std::invalid_argument("element index out of range");
  if (int(p.size()) != m) throw std::invalid_argument("one value per cone of F+");
  std::vector<std::vector<LaurentPoly>> c(n, std::vector<LaurentPoly>(m, LaurentPoly(2 * l)));
  for (int s = 0; s < m; ++s) c[v][s] = embed(p[s], 2 * l, 0);
  return compose(X, c);
}

ReducedClass multiply(const ReducedClass& a, const ReducedClass& b) {
  if (a.size() != b.size()) throw std::invalid_argument("classes have different cone counts");
  ReducedClass c(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) c[s] = a[s] * b[s];
  return c;
}

MultstrResult multstr_check(const ToroidalInstance& X, int v, int v_prime, Exec exec) {
  const SteinbergData& S = *X.steinberg;
  const WeylGroup& W = *X.W;
  const int l = X.rank(), m = int(X.cone_count());
  const GKMClass ones(m, LaurentPoly::constant(l, 1));
  const ReducedClass prod = multiply(basis_element(X, v, ones), basis_element(X, v_prime, ones));
  const DecompositionResult d = decompose(X, prod, exec);
  const auto a = structure_constants(S, v, v_prime, exec);
  const SubsetMask I = S.c_index(v), Ip = S.c_index(v_prime);
  for (int w = 0; w < int(W.size()); ++w) {
    const SubsetMask J = S.c_index(w);
    const LaurentPoly expect = u_factor(X, I & Ip) * u_factor(X, (I | Ip) & ~J) * embed(a[w], 2 * l, l);
    for (int s = 0; s < m; ++s)
      if (d.coefficients[w][s] != expect)
        return {false, "coefficient of " + word_string(W[w]) + " at sigma" + std::to_string(s) + " is " +
                           to_string(d.coefficients[w][s]) + ", rule gives " + to_string(expect)};
  }
  return {};
}

namespace {

// Constant plus Laurent multiples of vertex Euler products on the F+ graph.
GKMClass random_plus_class(const ToroidalInstance& X, std::mt19937& rng) {
  const int l = X.rank();
  std::uniform_int_distribution<int> e(-1, 1), c(-3, 3);
  auto rnd = [&](int terms) {
    std::vector<std::pair<IntVec, Coeff>> t;
    for (int k = 0; k < terms; ++k) {
      IntVec x(l);
      for (auto& y : x) y = e(rng);
      t.emplace_back(x, c(rng));
    }
    return LaurentPoly::from_terms(l, t);
  };
  const GKMGraph& g = X.plus_graph;
  GKMClass p(g.vertex_count(), rnd(2));
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    LaurentPoly bump = LaurentPoly::constant(l, 1);
    for (std::size_t k = 0; k < g.edges.size(); ++k)
      if (g.edges[k].i == int(x) || g.edges[k].j == int(x))
        bump *= LaurentPoly::one_minus_exp(g.character_at(k, int(x)));
    p[x] += rnd(2) * bump;
  }
  return p;
}

}  // namespace

RelwondReport relwond_check(const ToroidalInstance& X, unsigned seed, Exec exec) {
  const int l = X.rank(), n = int(X.W->size()), m = int(X.cone_count());
  const WeylGroup& W = *X.W;
  std::mt19937 rng(seed);
  RelwondReport rep;
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && rep.witness.empty()) rep.witness = why;
    flag = false;
  };
  const GKMClass ones(m, LaurentPoly::constant(l, 1));
  int independent = 0;
  for (int v = 0; v < n; ++v) {
    for (int trial = 0; trial < 2; ++trial) {
      const GKMClass p = trial == 0 ? ones : random_plus_class(X, rng);
      const ReducedClass b = basis_element(X, v, p);
      if (!is_gg_class(X, b, exec).ok) {
        fail(rep.products_valid, "product with v=" + word_string(W[v]) + " is not a valid class");
        continue;
      }
      const DecompositionResult d = decompose(X, b, exec);
      bool indicator = true;
      for (int w = 0; w < n; ++w)
        for (int s = 0; s < m; ++s)
          if (d.coefficients[w][s] != (w == v ? embed(p[s], 2 * l, 0) : LaurentPoly(2 * l))) indicator = false;
      if (!indicator) fail(rep.basis_recovered, "basis element for v=" + word_string(W[v]) + " does not decompose to itself");
      else if (trial == 0) ++independent;
    }
  }
  rep.rank = independent;
  if (independent != n || int(X.steinberg->f().size()) != n) fail(rep.rank_matches, "rank differs from |W|");

  // Pulled-back products decompose cone by cone exactly as in the single-cone ring.
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int trial = 0; trial < 4; ++trial) {
    const int v = pick(rng), vp = pick(rng);
    const DecompositionResult d = decompose(X, multiply(basis_element(X, v, ones), basis_element(X, vp, ones)), exec);
    for (int w = 0; w < n; ++w)
      for (int s = 1; s < m; ++s)
        if (d.coefficients[w][s] != d.coefficients[w][0])
          fail(rep.pullback_compatible, "product of pulled-back elements varies across cones");
    if (!multstr_check(X, v, vp, exec).ok) fail(rep.pullback_compatible, "product rule fails for a pulled-back pair");
  }
  return rep;
}

IntVec default_nu2(const WeylGroup& W) {
  IntVec s(W.root_datum().rank(), 0);
  for (const auto& a : W.positive_roots()) {
    const IntVec& c = W.coroot_of(a);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = checked_sub(s[i], c[i]);
  }
  return s;
}

namespace {

bool regular_dominant(const RootDatum& rd, const IntVec& x) {
  for (int i = 0; i < rd.semisimple_rank; ++i)
    if (dot(rd.simple_root(i), x) <= 0) return false;
  return true;
}

Fan orbit_of(const ToroidalInstance& X) { return orbit_fan(*X.W, X.f_plus).fan; }

std::vector<IntVec> bound_functionals(const Cone& c) {
  if (c.is_simplicial()) return dual_generators(c);
  std::vector<IntVec> out;
  for (const auto& f : c.facets()) out.push_back(f.normal);
  return out;
}

}  // namespace

IntVec find_generic_nu0(const ToroidalInstance& X, int bound) {
  const RootDatum& rd = X.W->root_datum();
  const Fan F = orbit_of(X);
  const int l = rd.rank();
  for (int b = 1; b <= bound; ++b) {
    IntVec x(l, -b);
    while (true) {
      Int norm = 0;
      for (Int y : x) norm = std::max<Int>(norm, std::abs(y));
      if (norm == b && rd.dominant(x) && is_generic(F, x)) return x;
      int k = l - 1;
      while (k >= 0 && x[k] == b) x[k--] = -b;
      if (k < 0) break;
      ++x[k];
    }
  }
  throw NonGeneric("no generic dominant cocharacter within the search bound");
}

ToroidalPSG transfer_to_toroidal(const ToroidalInstance& X, const IntVec& nu0, const std::optional<IntVec>& nu2_in) {
  const WeylGroup& W = *X.W;
  const RootDatum& rd = W.root_datum();
  if (int(nu0.size()) != rd.rank()) throw std::invalid_argument("nu0 has the wrong rank");
  const Fan F = orbit_of(X);
  if (!rd.dominant(nu0)) throw std::invalid_argument("nu0 must be dominant");
  if (!is_generic(F, nu0)) throw NonGeneric("nu0 is not generic for the orbit fan");
  const IntVec nu2 = nu2_in ? *nu2_in : default_nu2(W);
  if (int(nu2.size()) != rd.rank() || !regular_dominant(rd, negated(nu2)))
    throw NonGeneric("nu2 must be regular anti-dominant");
  Int best = 0;
  for (const auto& c : F.maximal())
    for (const auto& mu : bound_functionals(c)) {
      const Int den = std::abs(dot(mu, nu0));
      if (den == 0) throw NonGeneric("nu0 vanishes on a dual generator");
      for (std::size_t w = 0; w < W.size(); ++w) best = std::max(best, std::abs(dot(mu, W.act_n(int(w), nu2))) / den);
    }
  ToroidalPSG out;
  out.N = best + 1;
  out.nu1 = nu0;
  for (auto& x : out.nu1) x = checked_mul(x, out.N);
  out.nu2 = nu2;
  return out;
}

ToricPSG transfer_to_toric(const ToroidalInstance& X, const IntVec& nu1, const IntVec& nu2) {
  const WeylGroup& W = *X.W;
  const RootDatum& rd = W.root_datum();
  if (int(nu1.size()) != rd.rank() || int(nu2.size()) != rd.rank()) throw std::invalid_argument("cocharacter rank");
  ToricPSG out{-1, -1, {}};
  for (std::size_t w = 0; w < W.size(); ++w) {
    if (out.w1 < 0 && regular_dominant(rd, W.act_n(int(w), nu1))) out.w1 = int(w);
    if (out.w2 < 0 && regular_dominant(rd, negated(W.act_n(int(w), nu2)))) out.w2 = int(w);
  }
  if (out.w1 < 0 || out.w2 < 0) throw NonGeneric("nu1 and nu2 must be regular");
  out.lambda = sub(W.act_n(out.w1, nu1), W.act_n(out.w2, nu2));
  return out;
}

OrientationReport orientation_check(const ToroidalInstance& X, const ToroidalGraph& G, const IntVec& nu1,
                                    const IntVec& nu2) {
  const std::vector<int> src = orientation(G.graph, concat(nu1, nu2));
  const std::size_t n = G.graph.vertex_count();
  OrientationReport rep;
  rep.expected_dimension = X.rank() + 2 * int(X.W->positive_roots().size());
  std::vector<int> out(n, 0);
  std::vector<std::vector<int>> in(n);  // in[y]: sources x of edges x -> y
  for (std::size_t e = 0; e < src.size(); ++e) {
    const auto& edge = G.graph.edges[e];
    const int x = src[e], y = x == edge.i ? edge.j : edge.i;
    ++out[x];
    in[y].push_back(x);
  }
  for (int d : out) {
    rep.max_out_degree = std::max(rep.max_out_degree, d);
    rep.out_degree_sum += std::size_t(d);
  }
  rep.histogram.assign(rep.max_out_degree + 1, 0);
  for (int d : out) ++rep.histogram[d];
  rep.unique_sink = rep.histogram[0] == 1;
  rep.unique_source = rep.histogram[rep.max_out_degree] == 1;
  // sinks first: a vertex is placed once everything it points to is placed
  std::vector<int> remaining = out, order;
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (std::size_t x = 0; x < n; ++x)
    if (remaining[x] == 0) ready.push(int(x));
  while (!ready.empty()) {
    const int y = ready.top();
    ready.pop();
    order.push_back(y);
    for (int x : in[y])
      if (--remaining[x] == 0) ready.push(x);
  }
  rep.acyclic = order.size() == n;
  if (rep.acyclic) rep.order = std::move(order);
  return rep;
}

CellularityTransfer cellularity_transfer(const ToroidalInstance& X, const IntVec& nu0) {
  const WeylGroup& W = *X.W;
  const OrbitFan orbit = orbit_fan(W, X.f_plus);
  CellularityTransfer out;
  out.psg = transfer_to_toroidal(X, nu0);
  out.toric_verdict = cellularity_report(orbit.fan, nu0).verdict;

  std::vector<int> plus_index(X.cone_count(), -1);
  for (std::size_t k = 0; k < orbit.origin.size(); ++k)
    if (orbit.origin[k].first == 0) plus_index[orbit.origin[k].second] = int(k);
  bool cells_smooth = true;
  std::map<IntVec, CellularityReport> cache;
  for (int a = 0; a < int(W.size()) && cells_smooth; ++a)
    for (int b = 0; b < int(W.size()) && cells_smooth; ++b) {
      const IntVec lambda = sub(W.act_n(W.inverse(a), out.psg.nu1), W.act_n(W.inverse(b), out.psg.nu2));
      auto it = cache.find(lambda);
      if (it == cache.end()) it = cache.emplace(lambda, cellularity_report(orbit.fan, lambda)).first;
      for (int s = 0; s < int(X.cone_count()); ++s)
        if (!it->second.cells[plus_index[s]].quotient_smooth) cells_smooth = false;
    }
  const ToroidalGraph G = toroidal_gkm_graph(X);
  out.toroidal_verdict = cells_smooth && orientation_check(X, G, out.psg.nu1, out.psg.nu2).acyclic;
  return out;
}

OrdinaryK ordinary_k(const ToroidalInstance& X) {
  const int n = int(X.W->size()), m = int(X.cone_count());
  OrdinaryK k;
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < m; ++s)
      for (int w = 0; w < n; ++w) k.generators.push_back({v, s, w});
  k.rank = (long long)k.generators.size();
  const ToroidalGraph G = toroidal_gkm_graph(X);
  k.vertex_count = G.vertices.size();
  const ToroidalPSG psg = transfer_to_toroidal(X, find_generic_nu0(X));
  const OrientationReport o = orientation_check(X, G, psg.nu1, psg.nu2);
  k.out_degree_histogram = o.histogram;
  long long cells = 0;
  for (int c : o.histogram) cells += c;
  k.consistent = k.rank == (long long)k.vertex_count && cells == k.rank && o.acyclic;
  return k;
}

}  // namespace eqk
