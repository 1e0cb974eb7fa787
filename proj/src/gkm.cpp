#include "eqk/gkm.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "eqk/errors.hpp"

namespace eqk {

IntVec GKMGraph::character_at(std::size_t e, int x) const {
  const GKMEdge& edge = edges.at(e);
  if (x == edge.i) return edge.chi;
  if (x != edge.j) throw std::invalid_argument("vertex is not an endpoint of the edge");
  IntVec c = edge.chi;
  for (auto& v : c) v = -v;
  return c;
}

std::vector<std::vector<int>> GKMGraph::incidence() const {
  std::vector<std::vector<int>> inc(vertex_count());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].i].push_back(int(e));
    inc[edges[e].j].push_back(int(e));
  }
  return inc;
}

namespace {

bool proportional(const IntVec& a, const IntVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t l = k + 1; l < a.size(); ++l)
      if (checked_mul(a[k], b[l]) != checked_mul(a[l], b[k])) return false;
  return true;
}

}  // namespace

void validate(const GKMGraph& g) {
  const int n = int(g.vertex_count());
  std::set<std::pair<int, int>> pairs;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    const std::string where = "edge " + std::to_string(e);
    if (edge.i < 0 || edge.j < 0 || edge.i >= n || edge.j >= n || edge.i == edge.j)
      throw InvalidGraph(where + " has invalid endpoints");
    if (int(edge.chi.size()) != g.torus_rank) throw InvalidGraph(where + " has a character of the wrong rank");
    if (is_zero(edge.chi)) throw InvalidGraph(where + " has a zero character");
    if (!pairs.insert(std::minmax(edge.i, edge.j)).second)
      throw InvalidGraph(where + " duplicates the pair " + g.labels[edge.i] + " -- " + g.labels[edge.j]);
  }
  auto inc = g.incidence();
  for (int x = 0; x < n; ++x)
    for (std::size_t a = 0; a < inc[x].size(); ++a)
      for (std::size_t b = a + 1; b < inc[x].size(); ++b)
        if (proportional(g.edges[inc[x][a]].chi, g.edges[inc[x][b]].chi))
          throw InvalidGraph("edges " + std::to_string(inc[x][a]) + " and " + std::to_string(inc[x][b]) +
                             " at vertex " + g.labels[x] + " have proportional characters");
}

GKMGraph toric_gkm_graph(const Fan& fan) {
  GKMGraph g;
  g.torus_rank = fan.ambient_rank();
  for (std::size_t k = 0; k < fan.maximal().size(); ++k) g.labels.push_back("sigma" + std::to_string(k));
  for (const auto& w : fan.walls()) g.edges.push_back({w.left, w.right, w.left_normal, 0});
  validate(g);
  return g;
}

Membership is_gkm_class(const GKMGraph& g, const GKMClass& a, Exec exec) {
  if (a.size() != g.vertex_count()) throw std::invalid_argument("class size differs from vertex count");
  for (const auto& x : a)
    if (x.rank() != g.torus_rank) throw std::invalid_argument("class value has the wrong rank");
  std::vector<char> ok(g.edges.size(), 1);
  std::vector<LaurentPoly> residues(g.edges.size());
  for_each_index(g.edges.size(), exec, [&](std::size_t e) {
    const auto& edge = g.edges[e];
    auto r = divisible_by_one_minus_exp(a[edge.i] - a[edge.j], edge.chi);
    if (!r.divisible) {
      ok[e] = 0;
      residues[e] = std::move(r.residue);
    }
  });
  for (std::size_t e = 0; e < ok.size(); ++e)
    if (!ok[e]) return {false, int(e), residues[e]};
  return Membership{};
}

std::vector<int> orientation(const GKMGraph& g, const IntVec& nu) {
  if (int(nu.size()) != g.torus_rank) throw std::invalid_argument("cocharacter has the wrong rank");
  std::vector<int> src;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Int p = dot(g.edges[e].chi, nu);
    if (p == 0) throw NonGeneric("cocharacter " + to_string(nu) + " is orthogonal to edge " + std::to_string(e));
    src.push_back(p < 0 ? g.edges[e].i : g.edges[e].j);
  }
  return src;
}

LaurentPoly euler_class(const GKMGraph& g, int vertex, const std::vector<int>& sources) {
  if (sources.size() != g.edges.size()) throw std::invalid_argument("orientation must cover every edge");
  LaurentPoly out = LaurentPoly::constant(g.torus_rank, 1);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (sources[e] == vertex) out *= LaurentPoly::one_minus_exp(g.character_at(e, vertex));
  return out;
}

IntMatrix face_restriction(const Cone& tau, int ambient_rank) {
  std::vector<IntVec> basis = saturation_basis(tau.rays(), ambient_rank);
  IntMatrix T(int(basis.size()), ambient_rank);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (int j = 0; j < ambient_rank; ++j) T(int(k), j) = basis[k][j];
  return T;
}

namespace {

void check_plp_shape(const PLPFunction& p) {
  if (p.values.size() != p.fan.maximal().size()) throw std::invalid_argument("one value per maximal cone required");
  for (const auto& v : p.values)
    if (v.rank() != p.fan.ambient_rank()) throw std::invalid_argument("value has the wrong rank");
}

// Empty optional when the containing maximal cones disagree.
std::optional<LaurentPoly> face_value(const PLPFunction& p, const Cone& tau) {
  const IntMatrix T = face_restriction(tau, p.fan.ambient_rank());
  std::optional<LaurentPoly> v;
  for (int k : p.fan.maximal_containing(tau)) {
    LaurentPoly img = change_coordinates(T, p.values[k]);
    if (!v) v = std::move(img);
    else if (*v != img) return std::nullopt;
  }
  if (!v) throw std::invalid_argument("cone is not in the fan");
  return v;
}

}  // namespace

bool is_plp(const PLPFunction& p) {
  check_plp_shape(p);
  for (const auto& tau : p.fan.cones())
    if (!face_value(p, tau)) return false;
  return true;
}

LaurentPoly plp_face_value(const PLPFunction& p, const Cone& tau) {
  check_plp_shape(p);
  auto v = face_value(p, tau);
  if (!v) throw std::invalid_argument("values disagree on the face");
  return *v;
}

GKMClass gkm_from_plp(const PLPFunction& p) {
  if (!is_plp(p)) throw std::invalid_argument("not a piecewise Laurent polynomial function");
  return p.values;
}

PLPFunction plp_from_gkm(const Fan& fan, const GKMClass& a) {
  PLPFunction p{fan, a};
  check_plp_shape(p);
  for (const auto& tau : fan.cones())
    if (!face_value(p, tau))
      throw ConsistencyError("projections to a face disagree; the tuple is not a congruence class of this fan");
  return p;
}

bool is_pl_compatible(const Fan& fan, const PLFunction& h) {
  if (h.h.size() != fan.maximal().size()) throw std::invalid_argument("one functional per maximal cone required");
  for (const auto& x : h.h)
    if (int(x.size()) != fan.ambient_rank()) throw std::invalid_argument("functional has the wrong rank");
  for (const auto& tau : fan.cones()) {
    auto ks = fan.maximal_containing(tau);
    for (std::size_t t = 1; t < ks.size(); ++t)
      for (const auto& ray : tau.rays())
        if (dot(h.h[ks[0]], ray) != dot(h.h[ks[t]], ray)) return false;
  }
  return true;
}

PLPFunction line_bundle_class(const Fan& fan, const PLFunction& h) {
  if (!is_pl_compatible(fan, h)) throw std::invalid_argument("piecewise linear function is not compatible on walls");
  PLPFunction p{fan, {}};
  for (const auto& x : h.h) p.values.push_back(LaurentPoly::monomial(x));
  if (!is_plp(p)) throw ConsistencyError("line bundle class fails face compatibility");
  return p;
}

Symmetrized symmetrize(const WeylGroup& W, const Fan& f_plus, const GKMClass& a_plus, Exec exec) {
  GKMGraph plus = toric_gkm_graph(f_plus);
  if (!is_gkm_class(plus, a_plus, exec).ok) throw std::invalid_argument("input is not a congruence class on the chamber fan");
  Symmetrized out{orbit_fan(W, f_plus), {}, {}};
  out.graph = toric_gkm_graph(out.orbit.fan);
  for (auto [w, s] : out.orbit.origin) out.values.push_back(act(W[w].on_m, a_plus[s]));
  auto m = is_gkm_class(out.graph, out.values, exec);
  if (!m.ok) throw ConsistencyError("symmetrized class fails the congruence at edge " + std::to_string(*m.edge));
  return out;
}

std::vector<std::vector<int>> orbit_vertex_action(const WeylGroup& W, const Fan& fan) {
  std::map<Cone, int> index;
  for (std::size_t k = 0; k < fan.maximal().size(); ++k) index[fan.maximal()[k]] = int(k);
  std::vector<std::vector<int>> perm(W.size());
  for (std::size_t w = 0; w < W.size(); ++w)
    for (const auto& c : fan.maximal()) {
      std::vector<IntVec> rays;
      for (const auto& r : c.rays()) rays.push_back(W.act_n(int(w), r));
      auto it = index.find(Cone::from_generators(fan.ambient_rank(), rays));
      if (it == index.end()) throw std::invalid_argument("fan is not W-stable");
      perm[w].push_back(it->second);
    }
  return perm;
}

GKMClass dot_act(const WeylGroup& W, int w, const GKMClass& a, const std::vector<std::vector<int>>& vertex_action) {
  const std::size_t n = a.size();
  if (vertex_action.size() != W.size()) throw std::invalid_argument("vertex action must list every group element");
  const auto& p = vertex_action.at(w);
  if (p.size() != n) throw std::invalid_argument("vertex action has the wrong size");
  std::vector<char> hit(n, 0);
  for (int x : p) {
    if (x < 0 || std::size_t(x) >= n || hit[x]) throw std::invalid_argument("vertex action is not a permutation");
    hit[x] = 1;
  }
  GKMClass out(n);
  for (std::size_t x = 0; x < n; ++x) out[p[x]] = act(W[w].on_m, a[x]);
  return out;
}

}  // namespace eqk
