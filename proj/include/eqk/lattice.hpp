#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqk {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

// Thrown when an arithmetic result does not fit in 64 bits.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int gcd(Int a, Int b);
Int floor_div(Int a, Int b);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  Int operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec col(int j) const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVec operator*(const IntVec& v) const;
  bool operator==(const IntMatrix& other) const = default;
  auto operator<=>(const IntMatrix& other) const {
    if (auto c = rows_ <=> other.rows_; c != 0) return c;
    if (auto c = cols_ <=> other.cols_; c != 0) return c;
    return data_ <=> other.data_;
  }
  const std::vector<Int>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

enum class Side { N, M };

struct LatticeVector {
  IntVec coords;
  Side side = Side::N;
  int rank() const { return int(coords.size()); }
  bool operator==(const LatticeVector&) const = default;
};

// Pairing between a character (M side) and a cocharacter (N side).
Int pairing(const LatticeVector& chi, const LatticeVector& lambda);
Int dot(const IntVec& a, const IntVec& b);

IntVec primitive(const IntVec& v);
bool is_zero(const IntVec& v);

// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  int rank = 0;
  IntVec invariant_factors;  // the nonzero diagonal entries
};
SmithForm smith_normal_form(const IntMatrix& A);

int matrix_rank(const IntMatrix& A);
Int determinant(const IntMatrix& A);
// Adjugate of a square matrix: A * adj(A) = det(A) * I.
IntMatrix adjugate(const IntMatrix& A);
// Inverse of a unimodular matrix; throws otherwise.
IntMatrix unimodular_inverse(const IntMatrix& A);

// Basis of the integer kernel {x : A x = 0}, returned as columns-as-vectors.
std::vector<IntVec> integer_kernel(const IntMatrix& A);
// Primitive lattice basis of (span of rows) ∩ Z^n.
std::vector<IntVec> saturation_basis(const std::vector<IntVec>& rows, int n);

// Z^n / <generators> ≅ (⊕ Z/d_i) ⊕ Z^f with a canonical projection.
struct QuotientLattice {
  int ambient_rank = 0;
  IntVec torsion;          // moduli d_i >= 2
  int free_rank = 0;
  IntMatrix projection;    // (torsion.size() + free_rank) x ambient_rank

  IntVec project(const IntVec& x) const;
};
QuotientLattice quotient_lattice(int ambient_rank, const std::vector<IntVec>& generators);

std::string to_string(const IntVec& v);

}  // namespace eqk
