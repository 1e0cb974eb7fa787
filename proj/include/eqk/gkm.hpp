#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqk/exec.hpp"
#include "eqk/fan.hpp"
#include "eqk/laurent.hpp"
#include "eqk/weyl.hpp"

namespace eqk {

struct GKMEdge {
  int i = 0;
  int j = 0;
  IntVec chi;  // character oriented away from vertex i; away from j it is -chi
  int kind = 0;
};

struct GKMGraph {
  std::vector<std::string> labels;
  std::vector<GKMEdge> edges;
  int torus_rank = 0;

  std::size_t vertex_count() const { return labels.size(); }
  // Character of edge e pointing away from vertex x (an endpoint of e).
  IntVec character_at(std::size_t e, int x) const;
  // Edge indices incident to each vertex.
  std::vector<std::vector<int>> incidence() const;
};

struct InvalidGraph : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Nonzero characters, at most one edge per vertex pair, pairwise
// non-proportional characters at each vertex. Throws InvalidGraph.
void validate(const GKMGraph& g);

using GKMClass = std::vector<LaurentPoly>;

GKMGraph toric_gkm_graph(const Fan& fan);

struct Membership {
  bool ok = true;
  std::optional<int> edge;  // lowest failing edge index
  LaurentPoly residue = LaurentPoly(0);
};

Membership is_gkm_class(const GKMGraph& g, const GKMClass& a, Exec exec = Exec::Parallel);

// For each edge, the endpoint at which it is outgoing: <chi_x, nu> < 0 for the
// character chi_x pointing away from x. Throws NonGeneric on a zero pairing.
std::vector<int> orientation(const GKMGraph& g, const IntVec& nu);
LaurentPoly euler_class(const GKMGraph& g, int vertex, const std::vector<int>& sources);

struct PLPFunction {
  Fan fan;
  std::vector<LaurentPoly> values;  // per maximal cone
};

struct PLFunction {
  std::vector<IntVec> h;  // per maximal cone
};

// Rows: a basis of span(tau) cap N. Maps Z[M] onto Z[M / (tau^perp cap M)].
IntMatrix face_restriction(const Cone& tau, int ambient_rank);

bool is_plp(const PLPFunction& p);
// Value on a face, checked against every maximal cone containing it.
LaurentPoly plp_face_value(const PLPFunction& p, const Cone& tau);
GKMClass gkm_from_plp(const PLPFunction& p);
PLPFunction plp_from_gkm(const Fan& fan, const GKMClass& a);

bool is_pl_compatible(const Fan& fan, const PLFunction& h);
PLPFunction line_bundle_class(const Fan& fan, const PLFunction& h);

struct Symmetrized {
  OrbitFan orbit;
  GKMGraph graph;
  GKMClass values;
};

// Class on the orbit fan with value w(a_sigma) at w(sigma).
Symmetrized symmetrize(const WeylGroup& W, const Fan& f_plus, const GKMClass& a_plus, Exec exec = Exec::Parallel);

// perm[w][k] = index of the maximal cone w(cone k).
std::vector<std::vector<int>> orbit_vertex_action(const WeylGroup& W, const Fan& fan);
// (w.a)_x = w(a_{w^-1 x})
GKMClass dot_act(const WeylGroup& W, int w, const GKMClass& a, const std::vector<std::vector<int>>& vertex_action);

}  // namespace eqk
