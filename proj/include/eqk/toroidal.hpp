#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqk/exec.hpp"
#include "eqk/fan.hpp"
#include "eqk/gkm.hpp"
#include "eqk/laurent.hpp"
#include "eqk/weyl.hpp"

namespace eqk {

// Toroidal embedding data: a root datum with a fan F+ in the dominant chamber.
// Classes live in Z[M + M] with the first block acted on by the left copy of
// W and the second by the right copy.
struct ToroidalInstance {
  std::shared_ptr<const WeylGroup> W;
  Fan f_plus;
  GKMGraph plus_graph;
  std::shared_ptr<const SteinbergData> steinberg;

  int rank() const { return W->root_datum().rank(); }
  std::size_t cone_count() const { return f_plus.maximal().size(); }
};

ToroidalInstance make_instance(const RootDatum& rd, const Fan& f_plus, Exec exec = Exec::Parallel);
// The dominant chamber as a single cone; requires central rank 0.
Fan dominant_chamber_fan(const RootDatum& rd);
ToroidalInstance wonderful_ring(const RootDatum& rd, Exec exec = Exec::Parallel);

struct ToroidalVertex {
  int w1 = 0;
  int w2 = 0;
  int sigma = 0;
};

enum EdgeKind : int { ClosedOrbitLeft = 0, ClosedOrbitRight = 1, SimpleWall = 2, InteriorWall = 3 };
const char* edge_kind_name(int kind);

struct ToroidalGraph {
  std::vector<ToroidalVertex> vertices;
  GKMGraph graph;  // torus rank 2l; labels "(w1,w2,sigma)"
};

// Ordered by sigma, then w1, then w2 (group order).
std::vector<ToroidalVertex> fixed_points(const ToroidalInstance& X);
int vertex_id(const ToroidalInstance& X, const ToroidalVertex& v);
ToroidalGraph toroidal_gkm_graph(const ToroidalInstance& X);

// Full classes: one value per vertex. Reduced classes: one value per cone of F+.
using FullClass = std::vector<LaurentPoly>;
using ReducedClass = std::vector<LaurentPoly>;

Membership is_tt_class(const ToroidalGraph& G, const FullClass& a, Exec exec = Exec::Parallel);
// (w1, w2) acting blockwise on exponents.
LaurentPoly act_pair(const WeylGroup& W, int w1, int w2, const LaurentPoly& f);
// (w1, w2).a at (u1, u2, sigma) is (w1, w2)(a at (w1^-1 u1, w2^-1 u2, sigma)).
FullClass dot_act(const ToroidalInstance& X, int w1, int w2, const FullClass& a);
FullClass expand_invariant(const ToroidalInstance& X, const ReducedClass& f);
// Throws std::invalid_argument naming the first vertex where invariance fails.
ReducedClass reduce_invariant(const ToroidalInstance& X, const FullClass& a);

// Exponent maps (chi1, chi2) <-> (u, v) = (chi1, chi1 + chi2).
LaurentPoly to_uv(const LaurentPoly& f);
LaurentPoly from_uv(const LaurentPoly& f);
// chi -> (chi, -chi), as a class of the right-hand torus action.
LaurentPoly embed_antidiagonal(const LaurentPoly& p);

struct GGReport {
  bool ok = true;
  std::string witness;
};
// Both congruence forms; throws ConsistencyError if they disagree.
GGReport is_gg_class(const ToroidalInstance& X, const ReducedClass& f, Exec exec = Exec::Parallel);

struct DecompositionResult {
  // coefficients[v][sigma], (u, v)-coordinates, already divided by prod_{alpha in I}(1 - e^{alpha(u)}).
  std::vector<std::vector<LaurentPoly>> coefficients;
  std::vector<SubsetMask> index_set;  // I with v in C^I
};

// prod_{alpha in I} (1 - e^{alpha(u)}) in (u, v)-coordinates.
LaurentPoly u_factor(const ToroidalInstance& X, SubsetMask I);
DecompositionResult decompose(const ToroidalInstance& X, const ReducedClass& f, Exec exec = Exec::Parallel);
ReducedClass compose(const ToroidalInstance& X, const std::vector<std::vector<LaurentPoly>>& coefficients);
// prod_{alpha in I}(1 - e^{alpha(u)}) * p_sigma(u) * f_v(v), with p a congruence class on F+.
ReducedClass basis_element(const ToroidalInstance& X, int v, const GKMClass& p);
ReducedClass multiply(const ReducedClass& a, const ReducedClass& b);

struct MultstrResult {
  bool ok = true;
  std::string witness;
};
MultstrResult multstr_check(const ToroidalInstance& X, int v, int v_prime, Exec exec = Exec::Parallel);

struct RelwondReport {
  bool products_valid = true;
  bool basis_recovered = true;
  bool rank_matches = true;
  bool pullback_compatible = true;
  int rank = 0;
  std::string witness;
  bool ok() const { return products_valid && basis_recovered && rank_matches && pullback_compatible; }
};
RelwondReport relwond_check(const ToroidalInstance& X, unsigned seed = 1, Exec exec = Exec::Parallel);

struct OrdinaryK {
  long long rank = 0;
  std::size_t vertex_count = 0;
  // (v, sigma, w): image of prod(1 - e^{alpha(u)}) f_v(v) e_sigma f_w(u)
  std::vector<std::array<int, 3>> generators;
  std::vector<int> out_degree_histogram;  // cells per dimension, from a generic orientation
  bool consistent = true;
};
OrdinaryK ordinary_k(const ToroidalInstance& X);

IntVec default_nu2(const WeylGroup& W);
// Smallest dominant cocharacter (by max norm, then lex) generic for the orbit fan.
IntVec find_generic_nu0(const ToroidalInstance& X, int bound = 12);

struct ToroidalPSG {
  Int N = 0;
  IntVec nu1;
  IntVec nu2;
};
// nu0 dominant and generic for the orbit fan; nu2 regular anti-dominant.
ToroidalPSG transfer_to_toroidal(const ToroidalInstance& X, const IntVec& nu0, const std::optional<IntVec>& nu2 = {});

struct ToricPSG {
  int w1 = 0;
  int w2 = 0;
  IntVec lambda;  // w1 nu1 - w2 nu2
};
ToricPSG transfer_to_toric(const ToroidalInstance& X, const IntVec& nu1, const IntVec& nu2);

struct OrientationReport {
  bool acyclic = false;
  bool unique_sink = false;
  bool unique_source = false;
  int max_out_degree = 0;
  int expected_dimension = 0;
  std::size_t out_degree_sum = 0;
  std::vector<int> histogram;
  std::optional<std::vector<int>> order;  // topological order, sinks first
  bool ok() const {
    return acyclic && unique_sink && unique_source && max_out_degree == expected_dimension;
  }
};
// Outgoing at x when <chi_x, (nu1, nu2)> < 0. Throws NonGeneric.
OrientationReport orientation_check(const ToroidalInstance& X, const ToroidalGraph& G, const IntVec& nu1,
                                    const IntVec& nu2);

struct CellularityTransfer {
  bool toric_verdict = false;
  bool toroidal_verdict = false;
  bool agree() const { return toric_verdict == toroidal_verdict; }
  ToroidalPSG psg;
};
CellularityTransfer cellularity_transfer(const ToroidalInstance& X, const IntVec& nu0);

}  // namespace eqk
