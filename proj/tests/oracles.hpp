#pragma once

// Reference implementations used only by the tests. They favour obviousness
// over speed and share no code with the library kernels they check.

#include <functional>
#include <map>
#include <set>
#include <random>
#include <vector>

#include "eqk/laurent.hpp"

namespace oracle {

using Poly = std::map<std::vector<eqk::Int>, eqk::Int>;

inline Poly to_map(const eqk::LaurentPoly& f) {
  Poly m;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto e = f.exponent(i);
    m[std::vector<eqk::Int>(e.begin(), e.end())] = f.coeff(i);
  }
  return m;
}

inline eqk::LaurentPoly from_map(int rank, const Poly& m) {
  std::vector<std::pair<eqk::IntVec, eqk::Coeff>> t;
  for (auto& [e, c] : m)
    if (c != 0) t.emplace_back(eqk::IntVec(e.begin(), e.end()), c);
  return eqk::LaurentPoly::from_terms(rank, t);
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      std::vector<eqk::Int> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r[e] += ca * cb;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

inline eqk::LaurentPoly random_poly(std::mt19937& rng, int rank, int terms, int exp_bound, int coeff_bound) {
  std::uniform_int_distribution<int> e(-exp_bound, exp_bound), c(-coeff_bound, coeff_bound);
  std::vector<std::pair<eqk::IntVec, eqk::Coeff>> t;
  for (int i = 0; i < terms; ++i) {
    eqk::IntVec x(rank);
    for (auto& v : x) v = e(rng);
    t.emplace_back(x, c(rng));
  }
  return eqk::LaurentPoly::from_terms(rank, t);
}

inline eqk::IntVec random_nonzero(std::mt19937& rng, int rank, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  eqk::IntVec x(rank, 0);
  while (eqk::is_zero(x))
    for (auto& v : x) v = e(rng);
  return x;
}

}  // namespace oracle

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eqk/fan.hpp"

namespace oracle {

// Integer points of the box [-b, b]^n.
inline std::vector<std::vector<eqk::Int>> box(int n, int b) {
  std::vector<std::vector<eqk::Int>> out;
  std::vector<eqk::Int> x(n, -b);
  while (true) {
    out.push_back(x);
    int k = 0;
    while (k < n && x[k] == b) x[k++] = -b;
    if (k == n) break;
    ++x[k];
  }
  return out;
}

// Faces of a cone as sets of ray indices, found by scanning candidate
// functionals in a box rather than from the facet description.
inline std::set<std::vector<int>> faces_by_scan(const std::vector<std::vector<eqk::Int>>& rays, int n, int b) {
  std::set<std::vector<int>> faces;
  for (auto& u : box(n, b)) {
    std::vector<int> zero;
    bool ok = true;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      eqk::Int s = 0;
      for (int k = 0; k < n; ++k) s += u[k] * rays[j][k];
      if (s < 0) ok = false;
      if (s == 0) zero.push_back(int(j));
    }
    if (ok) faces.insert(zero);
  }
  return faces;
}

inline eqk::Int det_expand(std::vector<std::vector<eqk::Int>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  eqk::Int s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<eqk::Int>> m;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<eqk::Int> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      m.push_back(row);
    }
    s += ((j % 2) ? -1 : 1) * a[0][j] * det_expand(m);
  }
  return s;
}

// gcd of the k x k minors of a k x n matrix.
inline eqk::Int minor_gcd(const std::vector<std::vector<eqk::Int>>& rows, int n) {
  const int k = int(rows.size());
  if (k == 0) return 1;
  eqk::Int g = 0;
  std::vector<int> cols(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      std::vector<std::vector<eqk::Int>> m(k, std::vector<eqk::Int>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = rows[i][cols[j]];
      g = std::gcd(g, det_expand(m));
      return;
    }
    for (int c = start; c < n; ++c) cols[depth] = c, rec(c + 1, depth + 1);
  };
  rec(0, 0);
  return std::abs(g);
}

// For a simplicial full-dimensional cone: sigma / N_tau is smooth iff the
// primitivized images of the remaining rays have determinant +-1 in the
// coordinates given by a basis of tau^perp ∩ M found by scanning a box.
inline bool quotient_smooth_by_minors(const std::vector<std::vector<eqk::Int>>& rays,
                                      const std::vector<int>& tau, int n) {
  const int q = n - int(tau.size());
  if (q == 0) return true;
  std::vector<std::vector<eqk::Int>> perp;
  for (auto& m : box(n, 3)) {
    bool ok = !std::all_of(m.begin(), m.end(), [](eqk::Int x) { return x == 0; });
    for (int i : tau) {
      eqk::Int s = 0;
      for (int k = 0; k < n; ++k) s += m[k] * rays[i][k];
      ok = ok && s == 0;
    }
    if (ok) perp.push_back(m);
  }
  // a saturated basis: q vectors whose maximal minors have gcd 1
  std::vector<std::vector<eqk::Int>> basis;
  std::vector<int> pick(q);
  std::function<bool(int, int)> search = [&](int start, int depth) {
    if (depth == q) {
      std::vector<std::vector<eqk::Int>> b;
      for (int i : pick) b.push_back(perp[i]);
      if (minor_gcd(b, n) == 1) {
        basis = b;
        return true;
      }
      return false;
    }
    for (int i = start; i < int(perp.size()); ++i) {
      pick[depth] = i;
      if (search(i + 1, depth + 1)) return true;
    }
    return false;
  };
  if (!search(0, 0)) throw std::runtime_error("oracle box too small");
  std::vector<std::vector<eqk::Int>> images;
  for (int j = 0; j < int(rays.size()); ++j) {
    if (std::find(tau.begin(), tau.end(), j) != tau.end()) continue;
    std::vector<eqk::Int> y(q);
    eqk::Int g = 0;
    for (int i = 0; i < q; ++i) {
      for (int k = 0; k < n; ++k) y[i] += basis[i][k] * rays[j][k];
      g = std::gcd(g, y[i]);
    }
    for (auto& x : y) x /= g;
    images.push_back(y);
  }
  return std::abs(det_expand(images)) == 1;
}

// Whether gamma qualifies: every nonzero mu in sigma^dual ∩ gamma^perp found
// in the box pairs positively with v.
inline bool qualifies_by_scan(const std::vector<std::vector<eqk::Int>>& rays, const std::vector<int>& gamma,
                              const std::vector<eqk::Int>& v, int n, int b) {
  for (auto& mu : box(n, b)) {
    if (std::all_of(mu.begin(), mu.end(), [](eqk::Int x) { return x == 0; })) continue;
    bool in_dual = true, perp = true;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      eqk::Int s = 0;
      for (int k = 0; k < n; ++k) s += mu[k] * rays[j][k];
      if (s < 0) in_dual = false;
      if (std::find(gamma.begin(), gamma.end(), int(j)) != gamma.end() && s != 0) perp = false;
    }
    if (!in_dual || !perp) continue;
    eqk::Int p = 0;
    for (int k = 0; k < n; ++k) p += mu[k] * v[k];
    if (p <= 0) return false;
  }
  return true;
}

}  // namespace oracle
