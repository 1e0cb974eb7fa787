#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqk/lattice.hpp"

namespace eqk {

// Supporting hyperplane of a cone: normal is nonnegative on every ray and
// vanishes exactly on the rays flagged in `on`.
struct Facet {
  IntVec normal;
  std::uint64_t on = 0;
};

// Strongly convex rational polyhedral cone given by primitive extremal rays,
// stored in sorted order.
class Cone {
 public:
  Cone() = default;
  // Primitivizes, deduplicates and drops non-extremal generators.
  // Throws if the generators span a cone containing a line.
  static Cone from_generators(int ambient_rank, const std::vector<IntVec>& generators);

  int ambient_rank() const { return n_; }
  int dim() const { return dim_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<Facet>& facets() const { return facets_; }
  bool is_simplicial() const { return int(rays_.size()) == dim_; }
  bool is_full_dimensional() const { return dim_ == n_; }

  bool contains(const IntVec& x) const;
  bool has_face(const Cone& tau) const;
  // Ray masks of all faces, {0} (mask 0) included.
  std::vector<std::uint64_t> face_masks() const;
  Cone face(std::uint64_t mask) const;

  bool operator==(const Cone& o) const { return n_ == o.n_ && rays_ == o.rays_; }
  bool operator<(const Cone& o) const;

 private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<Facet> facets_;
};

std::vector<Cone> faces(const Cone& sigma);
bool is_smooth_cone(const Cone& sigma);

struct Wall {
  int left = 0;   // index into Fan::maximal
  int right = 0;
  IntVec normal;       // primitive, lexicographically positive
  IntVec left_normal;  // +-normal, nonnegative on the left cone
  Cone cone;           // the common facet
};

// Normal of the wall oriented to be nonnegative on the given side.
IntVec oriented_normal(const Wall& wall, int side_index);

class Fan {
 public:
  Fan() = default;
  // Validates strong convexity, purity, full dimension of maximal cones and
  // the face-intersection property. Maximal cones keep input order.
  static Fan from_maximal(int ambient_rank, const std::vector<std::vector<IntVec>>& cones);
  static Fan from_cones(int ambient_rank, const std::vector<Cone>& maximal);

  int ambient_rank() const { return n_; }
  const std::vector<Cone>& maximal() const { return maximal_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<Wall>& walls() const { return walls_; }
  std::optional<int> find(const Cone& c) const;
  bool contains_cone(const Cone& c) const { return find(c).has_value(); }
  // Indices of the maximal cones having tau as a face.
  std::vector<int> maximal_containing(const Cone& tau) const;

 private:
  int n_ = 0;
  std::vector<Cone> maximal_;
  std::vector<Cone> cones_;  // all cones, sorted
  std::vector<Wall> walls_;
};

std::vector<Wall> walls(const Fan& fan);

// Fan of the cones containing tau, projected to N / N_tau.
Fan star_quotient(const Fan& fan, const Cone& tau);
// The image of sigma in N / N_tau as a cone.
Cone quotient_cone(const Cone& sigma, const Cone& tau);

// Minimal face tau of sigma with v in int(sigma) + R tau.
Cone minimal_face(const Cone& sigma, const IntVec& v);

bool avoids_wall_hyperplanes(const Fan& fan, const IntVec& v);
// Dual-basis rays plus the lattice points of their fundamental parallelepiped.
std::vector<IntVec> dual_generators(const Cone& sigma);
bool dual_generators_nonvanishing(const Fan& fan, const IntVec& v);
// Both genericity notions; the second only applies when every maximal cone is simplicial.
bool is_generic(const Fan& fan, const IntVec& v);
bool psg_perturbation(const Fan& fan, const IntVec& lambda, const IntVec& lambda_prime);

struct CellInfo {
  Cone tau;
  bool quotient_smooth = false;
  int cell_dim = 0;
};

struct CellularityReport {
  std::vector<CellInfo> cells;   // per maximal cone
  std::optional<std::vector<int>> order;
  bool verdict = false;
};

struct NonGeneric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

CellularityReport cellularity_report(const Fan& fan, const IntVec& v);

}  // namespace eqk
