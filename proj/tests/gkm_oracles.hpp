#pragma once

#include <random>

#include "eqk/gkm.hpp"
#include "oracles.hpp"

namespace oracle {

// Product of (1 - e^chi) over the edges at x, characters pointing away from x.
inline eqk::LaurentPoly bump(const eqk::GKMGraph& g, int x) {
  eqk::LaurentPoly p = eqk::LaurentPoly::constant(g.torus_rank, 1);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (g.edges[e].i == x || g.edges[e].j == x) p *= eqk::LaurentPoly::one_minus_exp(g.character_at(e, x));
  return p;
}

// Constant plus Laurent multiples of bump classes: always a congruence class.
inline eqk::GKMClass random_gkm_class(std::mt19937& rng, const eqk::GKMGraph& g, int exp_bound = 1) {
  const int r = g.torus_rank;
  eqk::GKMClass a(g.vertex_count(), random_poly(rng, r, 3, exp_bound, 3));
  for (std::size_t x = 0; x < g.vertex_count(); ++x)
    if (rng() % 2) a[x] += random_poly(rng, r, 2, exp_bound, 3) * bump(g, int(x));
  return a;
}

// Congruence test through exact division instead of the residue computation.
inline bool congruent_by_division(const eqk::GKMGraph& g, const eqk::GKMClass& a) {
  for (const auto& e : g.edges) {
    eqk::LaurentPoly d = a[e.i] - a[e.j];
    auto q = eqk::exact_divide(d, eqk::LaurentPoly::one_minus_exp(e.chi));
    if (!q || *q * eqk::LaurentPoly::one_minus_exp(e.chi) != d) return false;
  }
  return true;
}

}  // namespace oracle
