#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "eqk/exec.hpp"
#include "eqk/fan.hpp"
#include "eqk/laurent.hpp"

namespace eqk {

// Coordinates: N has basis simple coroots then central basis vectors, M has
// basis fundamental weights then central duals; the pairing is the dot product.
struct RootDatum {
  std::string name;
  int semisimple_rank = 0;
  int central_rank = 0;
  IntMatrix cartan;  // cartan(i, j) = <alpha_i, alpha_j^vee>

  int rank() const { return semisimple_rank + central_rank; }
  IntVec simple_root(int i) const;
  IntVec simple_coroot(int i) const;
  IntVec fundamental_weight(int i) const;
  // Cocharacters in the closed dominant chamber.
  bool dominant(const IntVec& x) const;
};

RootDatum build_root_datum(const std::string& type, int central_rank = 0);
RootDatum build_root_datum(const IntMatrix& cartan, int central_rank = 0, const std::string& name = "custom");

using SubsetMask = std::uint32_t;

struct WeylElement {
  IntMatrix on_m;  // acts on characters
  IntMatrix on_n;  // inverse transpose, acts on cocharacters
  int length = 0;
  std::vector<int> reduced_word;
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& rd, std::size_t bound = 10000);

  const RootDatum& root_datum() const { return rd_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  int identity() const { return 0; }
  int longest() const { return int(size()) - 1; }
  int simple_reflection(int i) const { return simple_[i]; }
  int multiply(int a, int b) const;
  int inverse(int a) const { return inverse_[a]; }
  int index_of(const IntMatrix& on_m) const;

  const std::vector<IntVec>& roots() const { return roots_; }
  const std::vector<IntVec>& positive_roots() const { return positive_; }
  const IntVec& coroot_of(const IntVec& root) const { return coroots_.at(root); }
  bool is_positive(const IntVec& root) const;
  // Element index of the reflection in a root.
  int reflection(const IntVec& root) const;

  IntVec act_m(int w, const IntVec& chi) const { return elements_[w].on_m * chi; }
  IntVec act_n(int w, const IntVec& x) const { return elements_[w].on_n * x; }
  // Right descent set {i : w(alpha_i) < 0}.
  SubsetMask right_descent(int w) const;
  SubsetMask left_descent(int w) const { return right_descent(inverse(w)); }
  int inversion_count(int w) const;

 private:
  RootDatum rd_;
  std::vector<WeylElement> elements_;
  std::map<IntMatrix, int> index_;
  std::vector<int> simple_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> table_;
  std::vector<IntVec> roots_;
  std::vector<IntVec> positive_;
  std::map<IntVec, IntVec> coroots_;
  IntVec height_;
};

struct OrbitFan {
  Fan fan;
  // For each maximal cone of fan: (w, sigma) with cone = w(F_plus[sigma]).
  std::vector<std::pair<int, int>> origin;
};

OrbitFan orbit_fan(const WeylGroup& W, const Fan& f_plus);

// W^I = {w : w(alpha) > 0 for alpha in I}, in group order.
std::vector<int> minimal_coset_reps(const WeylGroup& W, SubsetMask I);
// C^I for every subset I of the simple roots, from the defining set difference.
std::map<SubsetMask, std::vector<int>> c_sets(const WeylGroup& W);

// Orbit sums over the parabolic subgroup fixing the descents of v are the
// primary convention; the monomial variants are kept as fallbacks.
enum class SteinbergConvention { ParabolicOrbitSum, Monomial, MonomialInverse, MonomialNegated, MonomialRightDescent };
const char* to_string(SteinbergConvention c);

std::vector<LaurentPoly> steinberg_candidates(const WeylGroup& W, SteinbergConvention c);

struct BasisVerification {
  bool invariance = false;    // f_v fixed by W_{Delta \ D_R(v)}
  bool unit_ratio = false;    // det^2 / prod_{alpha}(1 - e^alpha)^{|W|/2} is a unit
  bool ok() const { return invariance && unit_ratio; }
};

class SteinbergData {
 public:
  SteinbergData(std::shared_ptr<const WeylGroup> W, SteinbergConvention c, Exec exec = Exec::Parallel);

  const WeylGroup& group() const { return *W_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return W_; }
  SteinbergConvention convention() const { return convention_; }
  const std::vector<LaurentPoly>& f() const { return f_; }
  const std::map<SubsetMask, std::vector<int>>& c_sets() const { return c_sets_; }
  SubsetMask c_index(int v) const { return descent_[v]; }
  const BasisVerification& verification() const { return verification_; }
  // u(f_v) matrix: c = numerators * (u(g))_u / denominator
  const LaurentMatrix& numerators() const { return numerators_; }
  const LaurentPoly& denominator() const { return denominator_; }

 private:
  std::shared_ptr<const WeylGroup> W_;
  SteinbergConvention convention_;
  std::vector<LaurentPoly> f_;
  std::map<SubsetMask, std::vector<int>> c_sets_;
  std::vector<SubsetMask> descent_;
  LaurentMatrix numerators_;
  LaurentPoly denominator_;
  BasisVerification verification_;
};

// First convention in declaration order that passes verification; throws
// ConsistencyError when none does.
std::shared_ptr<const SteinbergData> steinberg_basis(std::shared_ptr<const WeylGroup> W, Exec exec = Exec::Parallel);

// Coefficients c_v, W-invariant, with g = sum_v c_v f_v.
std::vector<LaurentPoly> steinberg_decompose(const SteinbergData& S, const LaurentPoly& g, Exec exec = Exec::Parallel);
// Same, with g of larger rank and W acting on coordinates [offset, offset + l).
std::vector<LaurentPoly> steinberg_decompose_block(const SteinbergData& S, const LaurentPoly& g, int offset,
                                                   Exec exec = Exec::Parallel);
LaurentPoly steinberg_reconstruct(const SteinbergData& S, const std::vector<LaurentPoly>& c, int offset = 0);

// a^w_{v,v'}, with the support restriction enforced.
std::vector<LaurentPoly> structure_constants(const SteinbergData& S, int v, int v_prime, Exec exec = Exec::Parallel);

bool is_w_invariant(const WeylGroup& W, const LaurentPoly& f, int offset = 0);
std::string word_string(const WeylElement& w);

}  // namespace eqk
