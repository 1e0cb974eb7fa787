#include "eqk/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>

namespace eqk {

namespace {

bool lex_less(std::span<const Exp> a, std::span<const Exp> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Exp to_exp(Int x) {
  if (x > INT32_MAX || x < INT32_MIN) throw OverflowError("exponent out of range");
  return Exp(x);
}

void require_same_rank(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("Laurent polynomial rank mismatch");
}

// Row-major grid over an exponent box; ascending index is ascending lex order.
struct DenseBox {
  std::vector<Int> lo;
  std::vector<std::size_t> ext, stride;
  std::size_t cells = 0;

  // False when the box would exceed `limit` cells.
  static bool make(const IntVec& lo, const IntVec& hi, std::size_t limit, DenseBox& out) {
    const int r = int(lo.size());
    out.lo = lo;
    out.ext.assign(r, 0);
    out.stride.assign(r, 1);
    std::size_t cells = 1;
    for (int k = r - 1; k >= 0; --k) {
      const Int e = hi[k] - lo[k] + 1;
      if (e <= 0 || std::size_t(e) > limit / cells) return false;
      out.ext[k] = std::size_t(e);
      out.stride[k] = cells;
      cells *= std::size_t(e);
    }
    out.cells = cells;
    return true;
  }

  std::size_t offset(std::span<const Exp> e, const IntVec& base) const {
    std::size_t i = 0;
    for (std::size_t k = 0; k < ext.size(); ++k) i += std::size_t(Int(e[k]) - base[k]) * stride[k];
    return i;
  }

  void decode(std::size_t i, std::vector<Exp>& e) const {
    for (std::size_t k = 0; k < ext.size(); ++k) {
      e[k] = Exp(lo[k] + Int(i / stride[k]));
      i %= stride[k];
    }
  }

  LaurentPoly collect(int rank, const std::vector<Coeff>& dense) const {
    LaurentPoly p(rank);
    std::vector<Exp> e(rank);
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (dense[i] != 0) {
        decode(i, e);
        p.push_term(e, dense[i]);
      }
    return p;
  }
};

constexpr std::size_t kDenseLimit = std::size_t(1) << 22;

Coeff mul_add(Coeff acc, Coeff a, Coeff b) {
  Coeff prod, sum;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum))
    throw OverflowError("coefficient overflow");
  return sum;
}

std::optional<LaurentPoly> dense_product(const LaurentPoly& a, const LaurentPoly& b) {
  const int r = a.rank();
  if (r == 0) return std::nullopt;
  const IntVec amin = a.min_exponent(), amax = a.max_exponent(), bmin = b.min_exponent(), bmax = b.max_exponent();
  IntVec lo(r), hi(r);
  for (int k = 0; k < r; ++k) lo[k] = amin[k] + bmin[k], hi[k] = amax[k] + bmax[k];
  DenseBox box;
  const std::size_t budget = 4 * a.size() * b.size() + 4096;
  if (!DenseBox::make(lo, hi, std::min(kDenseLimit, budget), box)) return std::nullopt;
  std::vector<std::size_t> ia(a.size()), ib(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ia[i] = box.offset(a.exponent(i), amin);
  for (std::size_t j = 0; j < b.size(); ++j) ib[j] = box.offset(b.exponent(j), bmin);
  std::vector<Coeff> out(box.cells, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Coeff c = a.coeff(i);
    Coeff* base = out.data() + ia[i];
    for (std::size_t j = 0; j < b.size(); ++j) base[ib[j]] = mul_add(base[ib[j]], c, b.coeff(j));
  }
  return box.collect(r, out);
}

// Dense long division; nullopt in the outer optional means "box too large".
std::optional<std::optional<LaurentPoly>> dense_quotient(const LaurentPoly& f, const LaurentPoly& g, const IntVec& fmin,
                                                         const IntVec& fmax, const IntVec& gmin, const IntVec& qlo,
                                                         const IntVec& qhi) {
  const int r = f.rank();
  if (r == 0) return std::nullopt;
  DenseBox box;
  if (!DenseBox::make(fmin, fmax, std::min(kDenseLimit, 16 * f.size() + 4096), box)) return std::nullopt;
  std::vector<Coeff> rem(box.cells, 0);
  for (std::size_t t = 0; t < f.size(); ++t) rem[box.offset(f.exponent(t), fmin)] = f.coeff(t);
  std::vector<std::size_t> ig(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) ig[j] = box.offset(g.exponent(j), gmin);
  const std::size_t top = g.size() - 1;
  const Coeff lc = g.coeff(top);
  const auto lt = g.exponent(top);
  std::vector<Coeff> q(box.cells, 0);
  std::vector<Exp> e(r);
  for (std::size_t p = box.cells; p-- > 0;) {
    const Coeff c = rem[p];
    if (c == 0) continue;
    if (c % lc != 0) return std::optional<LaurentPoly>();
    box.decode(p, e);
    for (int k = 0; k < r; ++k) {
      const Int x = Int(e[k]) - lt[k];
      if (x < qlo[k] || x > qhi[k]) return std::optional<LaurentPoly>();
    }
    const Coeff qc = c / lc;
    const std::size_t qbase = p - ig[top];
    for (std::size_t j = 0; j < g.size(); ++j) rem[qbase + ig[j]] = mul_add(rem[qbase + ig[j]], -qc, g.coeff(j));
    q[qbase] = qc;
  }
  // q is indexed on the f-box grid shifted by gmin; rebase to the quotient box
  LaurentPoly out(r);
  std::vector<Exp> qe(r);
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] != 0) {
      box.decode(i, e);
      for (int k = 0; k < r; ++k) qe[k] = Exp(Int(e[k]) - fmin[k] + qlo[k]);
      out.push_term(qe, q[i]);
    }
  return std::optional<LaurentPoly>(std::move(out));
}

}  // namespace

LaurentPoly LaurentPoly::constant(int rank, Coeff c) {
  LaurentPoly p(rank);
  if (c != 0) {
    p.exps_.assign(rank, 0);
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::monomial(const IntVec& e, Coeff c) {
  LaurentPoly p(int(e.size()));
  if (c != 0) {
    for (Int x : e) p.exps_.push_back(to_exp(x));
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::one_minus_exp(const IntVec& chi) {
  return constant(int(chi.size()), 1) - monomial(chi);
}

LaurentPoly LaurentPoly::from_terms(int rank, const std::vector<std::pair<IntVec, Coeff>>& terms) {
  LaurentPoly p(rank);
  std::vector<Exp> e(rank);
  for (const auto& [x, c] : terms) {
    if (int(x.size()) != rank) throw std::invalid_argument("term rank mismatch");
    for (int i = 0; i < rank; ++i) e[i] = to_exp(x[i]);
    p.push_term(e, c);
  }
  p.canonicalize();
  return p;
}

IntVec LaurentPoly::exponent_vec(std::size_t i) const {
  auto e = exponent(i);
  return IntVec(e.begin(), e.end());
}

Coeff LaurentPoly::coefficient_of(const IntVec& x) const {
  std::vector<Exp> key(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) key[i] = to_exp(x[i]);
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (lex_less(exponent(mid), key)) lo = mid + 1;
    else hi = mid;
  }
  if (lo < size() && std::equal(key.begin(), key.end(), exponent(lo).begin())) return coeffs_[lo];
  return 0;
}

void LaurentPoly::push_term(std::span<const Exp> e, Coeff c) {
  if (c == 0) return;
  exps_.insert(exps_.end(), e.begin(), e.end());
  coeffs_.push_back(c);
}

void LaurentPoly::canonicalize() {
  const std::size_t n = coeffs_.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lex_less(exponent(a), exponent(b)); });
  std::vector<Exp> exps;
  std::vector<Coeff> coeffs;
  exps.reserve(exps_.size());
  coeffs.reserve(n);
  for (std::size_t k = 0; k < n;) {
    auto e = exponent(idx[k]);
    Coeff c = 0;
    std::size_t j = k;
    while (j < n && std::equal(e.begin(), e.end(), exponent(idx[j]).begin())) c = checked_add(c, coeffs_[idx[j++]]);
    if (c != 0) {
      exps.insert(exps.end(), e.begin(), e.end());
      coeffs.push_back(c);
    }
    k = j;
  }
  exps_ = std::move(exps);
  coeffs_ = std::move(coeffs);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (Coeff& c : r.coeffs_) c = checked_sub(0, c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  require_same_rank(*this, o);
  LaurentPoly r(rank_);
  r.exps_.reserve(exps_.size() + o.exps_.size());
  r.coeffs_.reserve(size() + o.size());
  std::size_t i = 0, j = 0;
  while (i < size() || j < o.size()) {
    if (j == o.size() || (i < size() && lex_less(exponent(i), o.exponent(j)))) {
      r.push_term(exponent(i), coeffs_[i]);
      ++i;
    } else if (i == size() || lex_less(o.exponent(j), exponent(i))) {
      r.push_term(o.exponent(j), o.coeffs_[j]);
      ++j;
    } else {
      r.push_term(exponent(i), checked_add(coeffs_[i], o.coeffs_[j]));
      ++i, ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_same_rank(*this, o);
  if (is_zero() || o.is_zero()) return LaurentPoly(rank_);
  const LaurentPoly& a = size() <= o.size() ? *this : o;
  const LaurentPoly& b = size() <= o.size() ? o : *this;
  if (a.size() == 1) return b.shifted(a.exponent_vec(0)).scaled(a.coeffs_[0]);
  if (auto d = dense_product(a, b)) return std::move(*d);

  // k-way merge of the sorted rows a_i * b
  const int r = rank_;
  const std::size_t n = a.size();
  std::vector<std::size_t> col(n, 0);
  std::vector<Exp> key(n * r);
  auto set_key = [&](std::size_t i) {
    auto ea = a.exponent(i), eb = b.exponent(col[i]);
    for (int k = 0; k < r; ++k) key[i * r + k] = ea[k] + eb[k];
  };
  auto key_of = [&](std::size_t i) { return std::span<const Exp>(key.data() + i * r, r); };
  auto heap_cmp = [&](std::size_t x, std::size_t y) { return lex_less(key_of(y), key_of(x)); };
  std::vector<std::size_t> heap(n);
  for (std::size_t i = 0; i < n; ++i) set_key(i), heap[i] = i;
  std::make_heap(heap.begin(), heap.end(), heap_cmp);

  LaurentPoly out(r);
  out.exps_.reserve(std::min(a.size() * b.size(), std::size_t(1) << 20) * r);
  std::vector<Exp> cur(r);
  Coeff acc = 0;
  bool have = false;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), heap_cmp);
    std::size_t i = heap.back();
    auto e = key_of(i);
    Coeff c = checked_mul(a.coeffs_[i], b.coeffs_[col[i]]);
    if (have && std::equal(cur.begin(), cur.end(), e.begin())) {
      acc = checked_add(acc, c);
    } else {
      if (have) out.push_term(cur, acc);
      std::copy(e.begin(), e.end(), cur.begin());
      acc = c;
      have = true;
    }
    if (++col[i] < b.size()) {
      set_key(i);
      std::push_heap(heap.begin(), heap.end(), heap_cmp);
    } else {
      heap.pop_back();
    }
  }
  if (have) out.push_term(cur, acc);
  return out;
}

LaurentPoly LaurentPoly::scaled(Coeff c) const {
  if (c == 0) return LaurentPoly(rank_);
  LaurentPoly r = *this;
  for (Coeff& x : r.coeffs_) x = checked_mul(x, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const IntVec& e) const {
  if (int(e.size()) != rank_) throw std::invalid_argument("shift rank mismatch");
  LaurentPoly r = *this;
  for (std::size_t t = 0; t < size(); ++t)
    for (int k = 0; k < rank_; ++k) r.exps_[t * rank_ + k] = to_exp(Int(r.exps_[t * rank_ + k]) + e[k]);
  return r;
}

IntVec LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::invalid_argument("exponent bounds of zero");
  IntVec m(exponent(0).begin(), exponent(0).end());
  for (std::size_t t = 1; t < size(); ++t)
    for (int k = 0; k < rank_; ++k) m[k] = std::min<Int>(m[k], exponent(t)[k]);
  return m;
}

IntVec LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::invalid_argument("exponent bounds of zero");
  IntVec m(exponent(0).begin(), exponent(0).end());
  for (std::size_t t = 1; t < size(); ++t)
    for (int k = 0; k < rank_; ++k) m[k] = std::max<Int>(m[k], exponent(t)[k]);
  return m;
}

Coeff augmentation(const LaurentPoly& f) {
  Coeff s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s = checked_add(s, f.coeff(i));
  return s;
}

LaurentPoly change_coordinates(const IntMatrix& T, const LaurentPoly& f) {
  if (T.cols() != f.rank()) throw std::invalid_argument("coordinate change rank mismatch");
  LaurentPoly r(T.rows());
  std::vector<Exp> e(T.rows());
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto x = f.exponent(t);
    for (int i = 0; i < T.rows(); ++i) {
      Int s = 0;
      for (int j = 0; j < T.cols(); ++j) s += T(i, j) * Int(x[j]);
      e[i] = to_exp(s);
    }
    r.push_term(e, f.coeff(t));
  }
  r.canonicalize();
  return r;
}

LaurentPoly act(const IntMatrix& A, const LaurentPoly& f) {
  if (A.rows() != f.rank()) throw std::invalid_argument("action rank mismatch");
  return change_coordinates(A, f);
}

LaurentPoly act_on_block(const IntMatrix& A, const LaurentPoly& f, int offset) {
  const int b = A.rows();
  if (A.cols() != b || offset < 0 || offset + b > f.rank()) throw std::invalid_argument("block action out of range");
  LaurentPoly r(f.rank());
  std::vector<Exp> e(f.rank());
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto x = f.exponent(t);
    std::copy(x.begin(), x.end(), e.begin());
    for (int i = 0; i < b; ++i) {
      Int s = 0;
      for (int j = 0; j < b; ++j) s += A(i, j) * Int(x[offset + j]);
      e[offset + i] = to_exp(s);
    }
    r.push_term(e, f.coeff(t));
  }
  r.canonicalize();
  return r;
}

LaurentPoly embed(const LaurentPoly& f, int total, int offset) {
  if (offset < 0 || offset + f.rank() > total) throw std::invalid_argument("embedding out of range");
  LaurentPoly r(total);
  std::vector<Exp> e(total, 0);
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto x = f.exponent(t);
    std::copy(x.begin(), x.end(), e.begin() + offset);
    r.push_term(e, f.coeff(t));
  }
  r.canonicalize();
  return r;
}

namespace {

// Unimodular U with U chi = d e_1, d > 0.
IntMatrix align_to_first_axis(const IntVec& chi, Int& d) {
  const int n = int(chi.size());
  IntMatrix c(n, 1);
  for (int i = 0; i < n; ++i) c(i, 0) = chi[i];
  SmithForm s = smith_normal_form(c);
  if (s.rank == 0) throw std::invalid_argument("character must be nonzero");
  d = s.D(0, 0);
  IntMatrix U = s.U;
  if (s.V(0, 0) == -1)
    for (int j = 0; j < n; ++j) U(0, j) = -U(0, j);
  return U;
}

}  // namespace

DivisibilityResult divisible_by_one_minus_exp(const LaurentPoly& f, const IntVec& chi) {
  if (int(chi.size()) != f.rank()) throw std::invalid_argument("character rank mismatch");
  Int d = 0;
  IntMatrix U = align_to_first_axis(chi, d);
  LaurentPoly g = change_coordinates(U, f);
  LaurentPoly residue(f.rank());
  std::vector<Exp> e(f.rank());
  for (std::size_t t = 0; t < g.size(); ++t) {
    auto x = g.exponent(t);
    std::copy(x.begin(), x.end(), e.begin());
    e[0] = Exp(((Int(x[0]) % d) + d) % d);
    residue.push_term(e, g.coeff(t));
  }
  residue.canonicalize();
  return {residue.is_zero(), residue};
}

LaurentPoly divide_by_one_minus_exp(const LaurentPoly& f, const IntVec& chi) {
  if (int(chi.size()) != f.rank()) throw std::invalid_argument("character rank mismatch");
  Int d = 0;
  IntMatrix U = align_to_first_axis(chi, d);
  LaurentPoly g = change_coordinates(U, f);
  const int n = f.rank();
  // order: other coordinates, then residue of the first, then the first
  std::vector<std::size_t> idx(g.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto res = [&](std::size_t t) { return ((Int(g.exponent(t)[0]) % d) + d) % d; };
  auto same_chain = [&](std::size_t a, std::size_t b) {
    auto x = g.exponent(a), y = g.exponent(b);
    return std::equal(x.begin() + 1, x.end(), y.begin() + 1) && res(a) == res(b);
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto x = g.exponent(a), y = g.exponent(b);
    if (!std::equal(x.begin() + 1, x.end(), y.begin() + 1))
      return std::lexicographical_compare(x.begin() + 1, x.end(), y.begin() + 1, y.end());
    if (res(a) != res(b)) return res(a) < res(b);
    return x[0] < y[0];
  });
  LaurentPoly q(n);
  std::vector<Exp> e(n);
  for (std::size_t k = 0; k < idx.size();) {
    std::size_t j = k;
    while (j < idx.size() && same_chain(idx[k], idx[j])) ++j;
    // partial sums along the chain give the quotient coefficients
    Coeff partial = 0;
    for (std::size_t t = k; t < j; ++t) {
      auto x = g.exponent(idx[t]);
      partial = checked_add(partial, g.coeff(idx[t]));
      Int next = (t + 1 < j) ? Int(g.exponent(idx[t + 1])[0]) : Int(x[0]) + d;
      std::copy(x.begin(), x.end(), e.begin());
      for (Int m = x[0]; m < next && partial != 0; m += d) {
        e[0] = to_exp(m);
        q.push_term(e, partial);
      }
    }
    if (partial != 0) throw NotDivisible("polynomial is not divisible by 1 - e^chi");
    k = j;
  }
  q.canonicalize();
  return change_coordinates(unimodular_inverse(U), q);
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  require_same_rank(f, g);
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const int r = f.rank();
  if (f.is_zero()) return LaurentPoly(r);
  if (g.size() == 1) {
    Coeff c = g.coeff(0);
    for (std::size_t t = 0; t < f.size(); ++t) {
      if (f.coeff(t) % c != 0) return std::nullopt;
    }
    IntVec neg = g.exponent_vec(0);
    for (Int& x : neg) x = -x;
    LaurentPoly s = f.shifted(neg);
    LaurentPoly out(r);
    for (std::size_t t = 0; t < s.size(); ++t) out.push_term(s.exponent(t), s.coeff(t) / c);
    return out;
  }
  const IntVec fmin = f.min_exponent(), fmax = f.max_exponent();
  const IntVec gmin = g.min_exponent(), gmax = g.max_exponent();
  IntVec lo(r), hi(r);
  for (int k = 0; k < r; ++k) {
    lo[k] = fmin[k] - gmin[k];
    hi[k] = fmax[k] - gmax[k];
    if (lo[k] > hi[k]) return std::nullopt;
  }
  if (auto d = dense_quotient(f, g, fmin, fmax, gmin, lo, hi)) return std::move(*d);
  // Heap division in descending lexicographic order: quotient term i paired
  // with divisor term j (descending index), next candidate per quotient term.
  const std::size_t gn = g.size();
  auto g_exp = [&](std::size_t j) { return g.exponent(gn - 1 - j); };
  auto g_coeff = [&](std::size_t j) { return g.coeff(gn - 1 - j); };
  const Coeff lc = g_coeff(0);
  auto lt = g_exp(0);

  std::vector<Exp> q_exps;
  std::vector<Coeff> q_coeffs;
  std::vector<std::size_t> col;  // current divisor index per quotient term
  std::vector<Exp> key;          // current product exponent per quotient term
  auto key_of = [&](std::size_t i) { return std::span<const Exp>(key.data() + i * r, r); };
  auto set_key = [&](std::size_t i) {
    auto ge = g_exp(col[i]);
    for (int k = 0; k < r; ++k) key[i * r + k] = q_exps[i * r + k] + ge[k];
  };
  auto heap_cmp = [&](std::size_t x, std::size_t y) { return lex_less(key_of(x), key_of(y)); };
  std::vector<std::size_t> heap;

  std::ptrdiff_t fi = std::ptrdiff_t(f.size()) - 1;
  std::vector<Exp> cur(r);
  while (fi >= 0 || !heap.empty()) {
    // next exponent: the larger of f's next term and the heap top
    bool from_f = fi >= 0 && (heap.empty() || !lex_less(f.exponent(fi), key_of(heap.front())));
    if (from_f) {
      auto e = f.exponent(fi);
      std::copy(e.begin(), e.end(), cur.begin());
    } else {
      auto e = key_of(heap.front());
      std::copy(e.begin(), e.end(), cur.begin());
    }
    Coeff c = 0;
    if (fi >= 0 && std::equal(cur.begin(), cur.end(), f.exponent(fi).begin())) c = f.coeff(fi--);
    while (!heap.empty() && std::equal(cur.begin(), cur.end(), key_of(heap.front()).begin())) {
      std::pop_heap(heap.begin(), heap.end(), heap_cmp);
      std::size_t i = heap.back();
      c = checked_sub(c, checked_mul(q_coeffs[i], g_coeff(col[i])));
      if (++col[i] < gn) {
        set_key(i);
        std::push_heap(heap.begin(), heap.end(), heap_cmp);
      } else {
        heap.pop_back();
      }
    }
    if (c == 0) continue;
    if (c % lc != 0) return std::nullopt;
    std::size_t i = q_coeffs.size();
    for (int k = 0; k < r; ++k) {
      Int x = Int(cur[k]) - lt[k];
      if (x < lo[k] || x > hi[k]) return std::nullopt;
      q_exps.push_back(Exp(x));
    }
    q_coeffs.push_back(c / lc);
    col.push_back(1);
    key.resize(key.size() + r);
    set_key(i);
    heap.push_back(i);
    std::push_heap(heap.begin(), heap.end(), heap_cmp);
  }
  LaurentPoly q(r);
  for (std::size_t i = q_coeffs.size(); i-- > 0;) q.push_term({q_exps.data() + i * r, std::size_t(r)}, q_coeffs[i]);
  return q;
}

namespace {

LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  IntVec m = p.min_exponent();
  for (Int& x : m) x = -x;
  LaurentPoly r = p.shifted(m);
  if (r.coeff(r.size() - 1) < 0) r = -r;
  return r;
}

Int degree_in(const LaurentPoly& p, int k) {
  Int d = INT32_MIN;
  for (std::size_t t = 0; t < p.size(); ++t) d = std::max<Int>(d, p.exponent(t)[k]);
  return d;
}

// Coefficient of x_k^d, with coordinate k zeroed.
LaurentPoly coeff_in(const LaurentPoly& p, int k, Int d) {
  LaurentPoly r(p.rank());
  std::vector<Exp> e(p.rank());
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto x = p.exponent(t);
    if (x[k] != d) continue;
    std::copy(x.begin(), x.end(), e.begin());
    e[k] = 0;
    r.push_term(e, p.coeff(t));
  }
  r.canonicalize();
  return r;
}

std::vector<LaurentPoly> coeffs_in(const LaurentPoly& p, int k) {
  std::map<Int, bool> degs;
  for (std::size_t t = 0; t < p.size(); ++t) degs[p.exponent(t)[k]] = true;
  std::vector<LaurentPoly> out;
  for (auto& [d, _] : degs) out.push_back(coeff_in(p, k, d));
  return out;
}

LaurentPoly gcd_rec(const LaurentPoly& f, const LaurentPoly& g, int k);

LaurentPoly content_in(const LaurentPoly& p, int k) {
  LaurentPoly c(p.rank());
  for (const LaurentPoly& x : coeffs_in(p, k)) {
    c = c.is_zero() ? normalize_unit(x) : gcd_rec(c, x, k - 1);
    if (c.size() == 1 && c.coeff(0) == 1) break;
  }
  return c;
}

LaurentPoly primitive_in(const LaurentPoly& p, int k) {
  return normalize_unit(*exact_divide(p, content_in(p, k)));
}

LaurentPoly gcd_rec(const LaurentPoly& f0, const LaurentPoly& g0, int k) {
  if (f0.is_zero()) return normalize_unit(g0);
  if (g0.is_zero()) return normalize_unit(f0);
  LaurentPoly f = normalize_unit(f0), g = normalize_unit(g0);
  const int r = f.rank();
  if (k < 0) {
    // constants
    return LaurentPoly::constant(r, std::gcd(f.coeff(0), g.coeff(0)));
  }
  LaurentPoly c = gcd_rec(content_in(f, k), content_in(g, k), k - 1);
  LaurentPoly a = primitive_in(f, k), b = primitive_in(g, k);
  if (degree_in(a, k) < degree_in(b, k)) std::swap(a, b);
  LaurentPoly prim = LaurentPoly::constant(r, 1);
  if (degree_in(b, k) > 0) {
    while (true) {
      const Int db = degree_in(b, k);
      const LaurentPoly lcb = coeff_in(b, k, db);
      LaurentPoly rem = a;
      while (!rem.is_zero() && degree_in(rem, k) >= db) {
        const Int dr = degree_in(rem, k);
        IntVec shift(r, 0);
        shift[k] = dr - db;
        rem = lcb * rem - coeff_in(rem, k, dr) * b.shifted(shift);
      }
      if (rem.is_zero()) {
        prim = b;
        break;
      }
      a = b;
      b = primitive_in(normalize_unit(rem), k);
      if (degree_in(b, k) == 0) break;
    }
  }
  return normalize_unit(c * prim);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g) {
  require_same_rank(f, g);
  return gcd_rec(f, g, f.rank() - 1);
}

FractionFreeSolution solve_fraction_free(const LaurentMatrix& A, const LaurentMatrix& B, Exec exec) {
  const std::size_t n = A.size();
  if (B.size() != n) throw std::invalid_argument("right-hand side shape mismatch");
  const std::size_t m = n ? B[0].size() : 0;
  const int rank = n ? A[0][0].rank() : 0;
  LaurentMatrix M(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (A[i].size() != n || B[i].size() != m) throw std::invalid_argument("matrix is not square");
    M[i] = A[i];
    M[i].insert(M[i].end(), B[i].begin(), B[i].end());
  }
  const std::size_t w = n + m;
  LaurentPoly prev = LaurentPoly::constant(rank, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (!M[i][k].is_zero() && (p == n || M[i][k].size() < M[p][k].size())) p = i;
    if (p == n) throw SingularSystem("matrix is singular");
    std::swap(M[p], M[k]);
    const LaurentPoly& piv = M[k][k];
    // rows are independent within one elimination step
    for_each_index(n, exec, [&](std::size_t i) {
      if (i == k) return;
      const LaurentPoly mik = M[i][k];
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        LaurentPoly v = piv * M[i][j];
        if (!mik.is_zero() && !M[k][j].is_zero()) v -= mik * M[k][j];
        auto q = exact_divide(v, prev);
        if (!q) throw std::logic_error("fraction-free elimination produced an inexact division");
        M[i][j] = std::move(*q);
      }
      M[i][k] = LaurentPoly(rank);
    });
    prev = piv;
  }
  FractionFreeSolution out;
  out.denominator = prev;
  out.numerators.assign(n, std::vector<LaurentPoly>(m, LaurentPoly(rank)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out.numerators[i][j] = M[i][n + j];
  return out;
}

std::vector<LaurentFraction> solve_linear(const LaurentMatrix& A, const std::vector<LaurentPoly>& b) {
  LaurentMatrix B(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) B[i] = {b[i]};
  FractionFreeSolution s = solve_fraction_free(A, B);
  std::vector<LaurentFraction> x;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const LaurentPoly& num = s.numerators[i][0];
    LaurentPoly den = s.denominator;
    if (num.is_zero()) {
      x.push_back({num, LaurentPoly::constant(den.rank(), 1)});
      continue;
    }
    LaurentPoly g = gcd(num, den);
    LaurentPoly n2 = *exact_divide(num, g), d2 = *exact_divide(den, g);
    // normalize the denominator: minimal exponent zero, positive leading coefficient
    IntVec shift = d2.min_exponent();
    for (Int& v : shift) v = -v;
    Coeff sign = d2.shifted(shift).coeff(d2.size() - 1) < 0 ? -1 : 1;
    x.push_back({n2.shifted(shift).scaled(sign), d2.shifted(shift).scaled(sign)});
  }
  return x;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t t = 0; t < f.size(); ++t) {
    Coeff c = f.coeff(t);
    if (t == 0) {
      s += std::to_string(c);
    } else {
      s += c < 0 ? " - " : " + ";
      s += std::to_string(c < 0 ? -c : c);
    }
    s += "*e[(";
    auto e = f.exponent(t);
    for (int k = 0; k < f.rank(); ++k) {
      if (k) s += ",";
      s += std::to_string(e[k]);
    }
    s += ")]";
  }
  return s;
}

LaurentPoly parse_laurent(const std::string& text, int rank) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("malformed Laurent polynomial at offset " + std::to_string(pos) + ": " + what);
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  };
  auto read_int = [&]() -> Int {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) fail("expected integer");
    return std::stoll(text.substr(start, pos - start));
  };
  {
    auto b = text.find_first_not_of(" \t\n\r");
    auto e = text.find_last_not_of(" \t\n\r");
    if (b != std::string::npos && text.substr(b, e - b + 1) == "0") return LaurentPoly(rank);
  }
  std::vector<std::pair<IntVec, Coeff>> terms;
  Int sign = 1;
  bool first = true;
  while (true) {
    skip_ws();
    if (!first) {
      if (pos >= text.size()) break;
      if (text[pos] == '+') sign = 1;
      else if (text[pos] == '-') sign = -1;
      else fail("expected '+' or '-'");
      ++pos;
    }
    Int c = checked_mul(sign, read_int());
    expect('*');
    expect('e');
    expect('[');
    expect('(');
    IntVec e;
    skip_ws();
    if (pos < text.size() && text[pos] != ')') {
      e.push_back(read_int());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        e.push_back(read_int());
        skip_ws();
      }
    }
    expect(')');
    expect(']');
    if (int(e.size()) != rank) fail("exponent has rank " + std::to_string(e.size()) + ", expected " + std::to_string(rank));
    terms.emplace_back(e, c);
    first = false;
    sign = 1;
  }
  return LaurentPoly::from_terms(rank, terms);
}

}  // namespace eqk
