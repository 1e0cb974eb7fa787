#include "eqk/fan.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <set>

#include "eqk/exec.hpp"

namespace eqk {

namespace {

int rank_of(const std::vector<IntVec>& vs, int n) {
  if (vs.empty()) return 0;
  return matrix_rank(IntMatrix::from_rows(vs, n));
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Supporting hyperplanes through d-1 independent generators of a d-dimensional cone.
std::vector<Facet> compute_facets(int n, const std::vector<IntVec>& gens, int d) {
  std::vector<Facet> out;
  if (d == 0) return out;
  std::set<std::uint64_t> seen;
  for_each_subset(int(gens.size()), d - 1, [&](const std::vector<int>& sub) {
    std::vector<IntVec> rows;
    for (int i : sub) rows.push_back(gens[i]);
    if (rank_of(rows, n) != d - 1) return;
    std::vector<IntVec> kernel = integer_kernel(IntMatrix::from_rows(rows, n));
    for (const IntVec& k : kernel) {
      IntVec vals(gens.size());
      bool nonzero = false;
      for (std::size_t j = 0; j < gens.size(); ++j) nonzero |= (vals[j] = dot(k, gens[j])) != 0;
      if (!nonzero) continue;
      bool pos = std::all_of(vals.begin(), vals.end(), [](Int x) { return x >= 0; });
      bool neg = std::all_of(vals.begin(), vals.end(), [](Int x) { return x <= 0; });
      if (!pos && !neg) break;
      Facet f;
      f.normal = primitive(k);
      if (neg) for (Int& x : f.normal) x = -x;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (vals[j] == 0) f.on |= std::uint64_t(1) << j;
      if (seen.insert(f.on).second) out.push_back(f);
      break;
    }
  });
  return out;
}

std::uint64_t full_mask(std::size_t k) { return k == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << k) - 1; }

}  // namespace

Cone Cone::from_generators(int n, const std::vector<IntVec>& generators) {
  std::vector<IntVec> gens;
  for (const IntVec& g : generators) {
    if (int(g.size()) != n) throw std::invalid_argument("generator rank mismatch");
    gens.push_back(primitive(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() > 63) throw std::invalid_argument("too many generators");
  const int d = rank_of(gens, n);
  std::vector<Facet> fs = compute_facets(n, gens, d);
  std::uint64_t all = full_mask(gens.size());
  std::uint64_t common = all;
  for (const Facet& f : fs) common &= f.on;
  if (d > 0 && common != 0) throw std::invalid_argument("cone contains a line");

  std::vector<IntVec> rays;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::uint64_t face = all;
    for (const Facet& f : fs)
      if (f.on >> j & 1) face &= f.on;
    if (std::popcount(face) == 1) rays.push_back(gens[j]);
  }
  Cone c;
  c.n_ = n;
  c.dim_ = d;
  c.rays_ = rays;
  c.facets_ = rays.size() == gens.size() ? fs : compute_facets(n, rays, d);
  return c;
}

bool Cone::operator<(const Cone& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (dim_ != o.dim_) return dim_ < o.dim_;
  return rays_ < o.rays_;
}

bool Cone::contains(const IntVec& x) const {
  if (int(x.size()) != n_) throw std::invalid_argument("rank mismatch in containment");
  if (dim_ == 0) return is_zero(x);
  std::vector<IntVec> rows = rays_;
  rows.push_back(x);
  if (rank_of(rows, n_) != dim_) return false;
  for (const Facet& f : facets_)
    if (dot(f.normal, x) < 0) return false;
  return true;
}

std::vector<std::uint64_t> Cone::face_masks() const {
  std::set<std::uint64_t> found{full_mask(rays_.size())};
  std::vector<std::uint64_t> todo{full_mask(rays_.size())};
  while (!todo.empty()) {
    std::uint64_t m = todo.back();
    todo.pop_back();
    for (const Facet& f : facets_)
      if (found.insert(m & f.on).second) todo.push_back(m & f.on);
  }
  return {found.begin(), found.end()};
}

Cone Cone::face(std::uint64_t mask) const {
  std::vector<IntVec> rs;
  for (std::size_t j = 0; j < rays_.size(); ++j)
    if (mask >> j & 1) rs.push_back(rays_[j]);
  return from_generators(n_, rs);
}

bool Cone::has_face(const Cone& tau) const {
  if (tau.n_ != n_) return false;
  std::uint64_t mask = 0;
  for (const IntVec& r : tau.rays_) {
    auto it = std::find(rays_.begin(), rays_.end(), r);
    if (it == rays_.end()) return false;
    mask |= std::uint64_t(1) << (it - rays_.begin());
  }
  auto masks = face_masks();
  return std::find(masks.begin(), masks.end(), mask) != masks.end();
}

std::vector<Cone> faces(const Cone& sigma) {
  std::vector<Cone> out;
  for (std::uint64_t m : sigma.face_masks()) out.push_back(sigma.face(m));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_smooth_cone(const Cone& sigma) {
  if (!sigma.is_simplicial()) return false;
  if (sigma.dim() == 0) return true;
  SmithForm s = smith_normal_form(IntMatrix::from_rows(sigma.rays(), sigma.ambient_rank()));
  return std::all_of(s.invariant_factors.begin(), s.invariant_factors.end(), [](Int d) { return d == 1; });
}

IntVec oriented_normal(const Wall& wall, int side_index) {
  if (side_index == wall.left) return wall.left_normal;
  if (side_index == wall.right) {
    IntVec v = wall.left_normal;
    for (Int& x : v) x = -x;
    return v;
  }
  throw std::invalid_argument("cone is not adjacent to this wall");
}

namespace {

IntVec lex_positive(IntVec v) {
  for (Int x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  return v;
}

// Extremal rays of the intersection of two full-dimensional cones.
std::vector<IntVec> intersection_rays(const Cone& a, const Cone& b) {
  const int n = a.ambient_rank();
  std::vector<IntVec> H;
  for (const Facet& f : a.facets()) H.push_back(f.normal);
  for (const Facet& f : b.facets()) H.push_back(f.normal);
  std::set<IntVec> rays;
  for_each_subset(int(H.size()), n - 1, [&](const std::vector<int>& sub) {
    std::vector<IntVec> rows;
    for (int i : sub) rows.push_back(H[i]);
    if (rank_of(rows, n) != n - 1) return;
    std::vector<IntVec> k = integer_kernel(IntMatrix::from_rows(rows, n));
    if (k.size() != 1) return;
    for (int sign : {1, -1}) {
      IntVec r = k[0];
      for (Int& x : r) x *= sign;
      if (std::all_of(H.begin(), H.end(), [&](const IntVec& h) { return dot(h, r) >= 0; })) rays.insert(primitive(r));
    }
  });
  return {rays.begin(), rays.end()};
}

std::uint64_t mask_in(const Cone& c, const std::vector<IntVec>& rs, bool& ok) {
  std::uint64_t m = 0;
  ok = true;
  for (const IntVec& r : rs) {
    auto it = std::find(c.rays().begin(), c.rays().end(), r);
    if (it == c.rays().end()) {
      ok = false;
      return 0;
    }
    m |= std::uint64_t(1) << (it - c.rays().begin());
  }
  auto masks = c.face_masks();
  ok = std::find(masks.begin(), masks.end(), m) != masks.end();
  return m;
}

}  // namespace

Fan Fan::from_cones(int n, const std::vector<Cone>& maximal) {
  Fan f;
  f.n_ = n;
  f.maximal_ = maximal;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    if (maximal[i].ambient_rank() != n) throw std::invalid_argument("cone rank mismatch");
    if (maximal[i].dim() != n) throw std::invalid_argument("maximal cone " + std::to_string(i) + " is not full-dimensional");
  }
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      if (maximal[i] == maximal[j]) throw std::invalid_argument("duplicate maximal cone");
      std::vector<IntVec> common = intersection_rays(maximal[i], maximal[j]);
      bool ok_i = false, ok_j = false;
      mask_in(maximal[i], common, ok_i);
      mask_in(maximal[j], common, ok_j);
      if (!ok_i || !ok_j)
        throw std::invalid_argument("cones " + std::to_string(i) + " and " + std::to_string(j) +
                                    " do not meet in a common face");
      if (rank_of(common, n) == n - 1) {
        std::vector<IntVec> k = integer_kernel(IntMatrix::from_rows(common, n));
        IntVec normal = lex_positive(primitive(k.at(0)));
        IntVec left = normal;
        for (const IntVec& r : maximal[i].rays())
          if (dot(normal, r) < 0) {
            for (Int& x : left) x = -x;
            break;
          }
        f.walls_.push_back({int(i), int(j), normal, left, Cone::from_generators(n, common)});
      }
    }
  std::set<Cone> all;
  for (const Cone& c : maximal)
    for (const Cone& g : faces(c)) all.insert(g);
  f.cones_.assign(all.begin(), all.end());
  return f;
}

Fan Fan::from_maximal(int n, const std::vector<std::vector<IntVec>>& cones) {
  std::vector<Cone> cs;
  for (const auto& rays : cones) cs.push_back(Cone::from_generators(n, rays));
  return from_cones(n, cs);
}

std::optional<int> Fan::find(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
  if (it != cones_.end() && *it == c) return int(it - cones_.begin());
  return std::nullopt;
}

std::vector<int> Fan::maximal_containing(const Cone& tau) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < maximal_.size(); ++i)
    if (maximal_[i].has_face(tau)) out.push_back(int(i));
  return out;
}

std::vector<Wall> walls(const Fan& fan) { return fan.walls(); }

Cone quotient_cone(const Cone& sigma, const Cone& tau) {
  const int n = sigma.ambient_rank();
  QuotientLattice q = quotient_lattice(n, saturation_basis(tau.rays(), n));
  if (!q.torsion.empty()) throw std::logic_error("saturated sublattice has torsion quotient");
  std::vector<IntVec> images;
  for (const IntVec& r : sigma.rays()) {
    IntVec y = q.project(r);
    if (!is_zero(y)) images.push_back(y);
  }
  return Cone::from_generators(q.free_rank, images);
}

Fan star_quotient(const Fan& fan, const Cone& tau) {
  if (!fan.contains_cone(tau)) throw std::invalid_argument("cone is not in the fan");
  std::vector<Cone> cs;
  for (int i : fan.maximal_containing(tau)) cs.push_back(quotient_cone(fan.maximal()[i], tau));
  return Fan::from_cones(fan.ambient_rank() - tau.dim(), cs);
}

Cone minimal_face(const Cone& sigma, const IntVec& v) {
  if (int(v.size()) != sigma.ambient_rank()) throw std::invalid_argument("rank mismatch");
  std::vector<IntVec> rows = sigma.rays();
  rows.push_back(v);
  if (rank_of(rows, sigma.ambient_rank()) != sigma.dim())
    throw std::invalid_argument("no qualifying face: vector outside the span of the cone");
  std::vector<std::uint64_t> masks = sigma.face_masks();
  std::stable_sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
    return sigma.face(a).dim() < sigma.face(b).dim();
  });
  for (std::uint64_t m : masks) {
    bool ok = true;
    for (const Facet& f : sigma.facets())
      if ((m & f.on) == m && dot(f.normal, v) <= 0) {
        ok = false;
        break;
      }
    if (ok) return sigma.face(m);
  }
  throw std::invalid_argument("no qualifying face");
}

bool avoids_wall_hyperplanes(const Fan& fan, const IntVec& v) {
  const int n = fan.ambient_rank();
  if (int(v.size()) != n) throw std::invalid_argument("rank mismatch");
  for (const Cone& c : fan.cones()) {
    if (c.dim() != n - 1) continue;
    std::vector<IntVec> k = integer_kernel(IntMatrix::from_rows(c.rays(), n));
    if (dot(k.at(0), v) == 0) return false;
  }
  return true;
}

std::vector<IntVec> dual_generators(const Cone& sigma) {
  const int n = sigma.ambient_rank();
  if (!sigma.is_simplicial() || !sigma.is_full_dimensional())
    throw std::invalid_argument("dual generators need a simplicial full-dimensional cone");
  IntMatrix R = IntMatrix::from_rows(sigma.rays(), n);
  Int det = determinant(R);
  IntMatrix adj = adjugate(R);
  std::vector<IntVec> duals;
  for (int i = 0; i < n; ++i) {
    IntVec u = adj.col(i);
    if (det < 0)
      for (Int& x : u) x = -x;
    duals.push_back(primitive(u));
  }
  // lattice points of the half-open parallelepiped spanned by the duals
  IntMatrix U(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) U(j, i) = duals[i][j];
  Int detU = determinant(U);
  IntMatrix adjU = adjugate(U);
  SmithForm s = smith_normal_form(U);
  IntMatrix Pinv = unimodular_inverse(s.U);
  std::set<IntVec> points;
  IntVec y(n, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      IntVec x = Pinv * y;
      IntVec t = adjU * x;
      IntVec m = x;
      for (int i = 0; i < n; ++i) {
        Int fl = floor_div(t[i], detU);
        for (int j = 0; j < n; ++j) m[j] -= fl * duals[i][j];
      }
      if (!is_zero(m)) points.insert(m);
      return;
    }
    for (Int a = 0; a < s.D(k, k); ++a) {
      y[k] = a;
      rec(k + 1);
    }
  };
  rec(0);
  std::vector<IntVec> out = duals;
  for (const IntVec& p : points)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

namespace {

bool all_simplicial(const Fan& fan) {
  return std::all_of(fan.maximal().begin(), fan.maximal().end(), [](const Cone& c) { return c.is_simplicial(); });
}

}  // namespace

bool dual_generators_nonvanishing(const Fan& fan, const IntVec& v) {
  for (const Cone& c : fan.maximal())
    for (const IntVec& mu : dual_generators(c))
      if (dot(mu, v) == 0) return false;
  return true;
}

bool is_generic(const Fan& fan, const IntVec& v) {
  if (!avoids_wall_hyperplanes(fan, v)) return false;
  return !all_simplicial(fan) || dual_generators_nonvanishing(fan, v);
}

bool psg_perturbation(const Fan& fan, const IntVec& lambda, const IntVec& lambda_prime) {
  IntVec diff(lambda.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = lambda[i] - lambda_prime[i];
  for (const Cone& c : fan.maximal())
    for (const IntVec& mu : dual_generators(c))
      if (std::abs(dot(mu, diff)) >= std::abs(dot(mu, lambda))) return false;
  return true;
}

CellularityReport cellularity_report(const Fan& fan, const IntVec& v) {
  if (!is_generic(fan, v)) throw NonGeneric("one-parameter subgroup is not generic for this fan");
  const std::size_t m = fan.maximal().size();
  const int n = fan.ambient_rank();
  CellularityReport rep;
  rep.cells.resize(m);
  for_each_index(m, Exec::Parallel, [&](std::size_t i) {
    const Cone& sigma = fan.maximal()[i];
    CellInfo& c = rep.cells[i];
    c.tau = minimal_face(sigma, v);
    c.quotient_smooth = is_smooth_cone(quotient_cone(sigma, c.tau));
    c.cell_dim = n - c.tau.dim();
  });
  // i -> j whenever tau_i is a face of sigma_j; an order exists iff acyclic
  std::vector<std::vector<int>> out(m);
  std::vector<int> indeg(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && fan.maximal()[j].has_face(rep.cells[i].tau)) {
        out[i].push_back(int(j));
        ++indeg[j];
      }
  std::set<int> ready;
  for (std::size_t i = 0; i < m; ++i)
    if (indeg[i] == 0) ready.insert(int(i));
  std::vector<int> order;
  while (!ready.empty()) {
    int i = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(i);
    for (int j : out[i])
      if (--indeg[j] == 0) ready.insert(j);
  }
  if (order.size() == m) rep.order = order;
  rep.verdict = rep.order.has_value() &&
                std::all_of(rep.cells.begin(), rep.cells.end(), [](const CellInfo& c) { return c.quotient_smooth; });
  return rep;
}

}  // namespace eqk
