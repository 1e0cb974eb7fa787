#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqk/exec.hpp"
#include "eqk/lattice.hpp"

namespace eqk {

using Coeff = Int;
using Exp = std::int32_t;

// Element of Z[M] for M = Z^rank. Terms are kept sorted by ascending
// lexicographic exponent with nonzero coefficients, so equality is structural.
class LaurentPoly {
 public:
  explicit LaurentPoly(int rank = 0) : rank_(rank) {}
  static LaurentPoly constant(int rank, Coeff c);
  static LaurentPoly monomial(const IntVec& exponent, Coeff c = 1);
  // 1 - e^chi
  static LaurentPoly one_minus_exp(const IntVec& chi);
  static LaurentPoly from_terms(int rank, const std::vector<std::pair<IntVec, Coeff>>& terms);

  int rank() const { return rank_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Exp> exponent(std::size_t i) const {
    return {exps_.data() + i * rank_, std::size_t(rank_)};
  }
  IntVec exponent_vec(std::size_t i) const;
  Coeff coeff(std::size_t i) const { return coeffs_[i]; }
  Coeff coefficient_of(const IntVec& exponent) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly scaled(Coeff c) const;
  LaurentPoly shifted(const IntVec& exponent) const;
  // Coordinatewise minimum and maximum of the exponents; requires nonzero.
  IntVec min_exponent() const;
  IntVec max_exponent() const;

  // Builder interface used by the kernels: append in any order, then canonicalize.
  void push_term(std::span<const Exp> e, Coeff c);
  void canonicalize();

 private:
  int rank_ = 0;
  std::vector<Exp> exps_;
  std::vector<Coeff> coeffs_;
};

Coeff augmentation(const LaurentPoly& f);

// e^m -> e^{A m} on the whole exponent.
LaurentPoly act(const IntMatrix& A, const LaurentPoly& f);
// e^m -> e^{A m restricted to coordinates [offset, offset + A.rows())}.
LaurentPoly act_on_block(const IntMatrix& A, const LaurentPoly& f, int offset);
// Reads f (rank r) as a polynomial in coordinates [offset, offset + r) of rank `total`.
LaurentPoly embed(const LaurentPoly& f, int total, int offset);
// Maps each exponent m to T m for a (rows x rank) matrix T.
LaurentPoly change_coordinates(const IntMatrix& T, const LaurentPoly& f);

struct DivisibilityResult {
  bool divisible = false;
  // Image of f in Z[M]/(1 - e^chi), written in coordinates where chi = d e_1
  // and the first coordinate is reduced mod d. Zero iff divisible.
  LaurentPoly residue;
};
DivisibilityResult divisible_by_one_minus_exp(const LaurentPoly& f, const IntVec& chi);
// Exact quotient f / (1 - e^chi); throws NotDivisible.
LaurentPoly divide_by_one_minus_exp(const LaurentPoly& f, const IntVec& chi);

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact quotient f / g if it exists in Z[M].
std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g);
// Greatest common divisor, normalized to a polynomial with nonnegative
// exponents, minimal exponent zero in each coordinate and positive leading term.
LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g);

struct LaurentFraction {
  LaurentPoly num;
  LaurentPoly den;
  bool operator==(const LaurentFraction&) const = default;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

// Fraction-free Gauss-Jordan elimination of [A | B] for square nonsingular A.
// Returns d and X with A X = B / d, where d = +-det(A).
struct FractionFreeSolution {
  LaurentPoly denominator;
  LaurentMatrix numerators;  // one row per unknown, one column per right-hand side
};
FractionFreeSolution solve_fraction_free(const LaurentMatrix& A, const LaurentMatrix& B,
                                         Exec exec = Exec::Parallel);

struct SingularSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solves A x = b over Frac(Z[M]); each entry reduced by gcd with a
// normalized denominator.
std::vector<LaurentFraction> solve_linear(const LaurentMatrix& A, const std::vector<LaurentPoly>& b);

// Text format: "c*e[(a1,...,an)]" terms joined by " + " / " - ", or "0".
std::string to_string(const LaurentPoly& f);
LaurentPoly parse_laurent(const std::string& text, int rank);

}  // namespace eqk
