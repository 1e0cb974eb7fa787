#include "eqk/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace eqk {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : int(rows[0].size());
  IntMatrix m(int(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(int i) const {
  return IntVec(data_.begin() + std::size_t(i) * cols_, data_.begin() + std::size_t(i + 1) * cols_);
}

IntVec IntMatrix::col(int j) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) = checked_add(r(i, j), checked_mul(a, o(k, j)));
    }
  return r;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVec r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] = checked_add(r[i], checked_mul((*this)(i, j), v[j]));
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch in pairing");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Int pairing(const LatticeVector& chi, const LatticeVector& lambda) {
  if (chi.side != Side::M || lambda.side != Side::N)
    throw std::invalid_argument("pairing expects (M, N) arguments");
  return dot(chi.coords, lambda.coords);
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  if (g == 0) throw std::invalid_argument("primitive of the zero vector");
  IntVec r(v);
  for (Int& x : r) x /= g;
  return r;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row a += k * row b
void add_row(IntMatrix& m, int a, int b, Int k) {
  if (k == 0) return;
  for (int j = 0; j < m.cols(); ++j) m(a, j) = checked_add(m(a, j), checked_mul(k, m(b, j)));
}

void add_col(IntMatrix& m, int a, int b, Int k) {
  if (k == 0) return;
  for (int i = 0; i < m.rows(); ++i) m(i, a) = checked_add(m(i, a), checked_mul(k, m(i, b)));
}

void negate_row(IntMatrix& m, int a) {
  for (int j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  const int m = A.rows(), n = A.cols();
  IntMatrix D = A, U = IntMatrix::identity(m), V = IntMatrix::identity(n);
  int t = 0;
  for (; t < std::min(m, n); ++t) {
    // smallest nonzero entry in the remaining block becomes the pivot
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi < 0 || std::abs(D(i, j)) < std::abs(D(pi, pj)))) pi = i, pj = j;
      if (pi < 0) goto done;
      swap_rows(D, t, pi), swap_rows(U, t, pi);
      swap_cols(D, t, pj), swap_cols(V, t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        Int q = floor_div(D(i, t), D(t, t));
        add_row(D, i, t, -q), add_row(U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        Int q = floor_div(D(t, j), D(t, t));
        add_col(D, j, t, -q), add_col(V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility of the rest of the block by the pivot
      int bad_i = -1;
      for (int i = t + 1; i < m && bad_i < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) { bad_i = i; break; }
      if (bad_i < 0) break;
      add_row(D, t, bad_i, 1), add_row(U, t, bad_i, 1);
    }
    if (D(t, t) < 0) negate_row(D, t), negate_row(U, t);
  }
done:
  SmithForm s{U, V, D, 0, {}};
  for (int i = 0; i < std::min(m, n); ++i)
    if (D(i, i) != 0) s.invariant_factors.push_back(D(i, i)), ++s.rank;
  return s;
}

int matrix_rank(const IntMatrix& A) { return smith_normal_form(A).rank; }

Int determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M(k, k) == 0) {
      int p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(M, k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        M(i, j) = checked_sub(checked_mul(M(k, k), M(i, j)), checked_mul(M(i, k), M(k, j))) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& A) {
  const int n = A.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = A(r, c);
        }
        ++rr;
      }
      Int d = determinant(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& A) {
  Int d = determinant(A);
  if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
  IntMatrix adj = adjugate(A);
  if (d == -1)
    for (int i = 0; i < adj.rows(); ++i)
      for (int j = 0; j < adj.cols(); ++j) adj(i, j) = -adj(i, j);
  return adj;
}

std::vector<IntVec> integer_kernel(const IntMatrix& A) {
  SmithForm s = smith_normal_form(A);
  std::vector<IntVec> basis;
  for (int j = s.rank; j < A.cols(); ++j) basis.push_back(s.V.col(j));
  return basis;
}

std::vector<IntVec> saturation_basis(const std::vector<IntVec>& rows, int n) {
  if (rows.empty()) return {};
  // the saturation is the annihilator of the annihilator
  IntMatrix R = IntMatrix::from_rows(rows, n);
  std::vector<IntVec> ann = integer_kernel(R);
  if (ann.empty()) {
    std::vector<IntVec> e;
    for (int i = 0; i < n; ++i) {
      IntVec v(n, 0);
      v[i] = 1;
      e.push_back(v);
    }
    return e;
  }
  return integer_kernel(IntMatrix::from_rows(ann, n));
}

IntVec QuotientLattice::project(const IntVec& x) const {
  if (int(x.size()) != ambient_rank) throw std::invalid_argument("rank mismatch in projection");
  IntVec y = projection * x;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    y[i] %= torsion[i];
    if (y[i] < 0) y[i] += torsion[i];
  }
  return y;
}

QuotientLattice quotient_lattice(int n, const std::vector<IntVec>& generators) {
  QuotientLattice q;
  q.ambient_rank = n;
  IntMatrix A(n, int(generators.size()));
  for (int j = 0; j < A.cols(); ++j) {
    if (int(generators[j].size()) != n) throw std::invalid_argument("generator rank mismatch");
    for (int i = 0; i < n; ++i) A(i, j) = generators[j][i];
  }
  SmithForm s = smith_normal_form(A);
  std::vector<IntVec> proj_rows;
  for (int i = 0; i < s.rank; ++i)
    if (s.invariant_factors[i] > 1) {
      q.torsion.push_back(s.invariant_factors[i]);
      proj_rows.push_back(s.U.row(i));
    }
  for (int i = s.rank; i < n; ++i) proj_rows.push_back(s.U.row(i));
  q.free_rank = n - s.rank;
  q.projection = IntMatrix::from_rows(proj_rows, n);
  if (proj_rows.empty()) q.projection = IntMatrix(0, n);
  return q;
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace eqk
