#include "eqk/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eqk/errors.hpp"

namespace eqk {

IntVec RootDatum::simple_root(int i) const {
  IntVec a(rank(), 0);
  for (int j = 0; j < semisimple_rank; ++j) a[j] = cartan(i, j);
  return a;
}

IntVec RootDatum::simple_coroot(int i) const {
  IntVec a(rank(), 0);
  a[i] = 1;
  return a;
}

IntVec RootDatum::fundamental_weight(int i) const {
  IntVec a(rank(), 0);
  a[i] = 1;
  return a;
}

bool RootDatum::dominant(const IntVec& x) const {
  for (int i = 0; i < semisimple_rank; ++i) {
    Int s = 0;
    for (int j = 0; j < semisimple_rank; ++j) s = checked_add(s, checked_mul(cartan(i, j), x[j]));
    if (s < 0) return false;
  }
  return true;
}

namespace {

void validate_cartan(const IntMatrix& A) {
  const int r = A.rows();
  if (A.cols() != r || r == 0) throw std::invalid_argument("Cartan matrix must be square and nonempty");
  if (r > 16) throw std::invalid_argument("Cartan matrix too large");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j && A(i, j) != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
      if (i != j && A(i, j) > 0) throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
      if (i != j && (A(i, j) == 0) != (A(j, i) == 0))
        throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
    }
  // Finite type: every principal minor is positive.
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) idx.push_back(i);
    IntMatrix sub(int(idx.size()), int(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(int(a), int(b)) = A(idx[a], idx[b]);
    if (determinant(sub) <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
  }
}

}  // namespace

RootDatum build_root_datum(const IntMatrix& cartan, int central_rank, const std::string& name) {
  if (central_rank < 0) throw std::invalid_argument("central rank must be >= 0");
  validate_cartan(cartan);
  RootDatum rd;
  rd.name = name;
  rd.semisimple_rank = cartan.rows();
  rd.central_rank = central_rank;
  rd.cartan = cartan;
  return rd;
}

RootDatum build_root_datum(const std::string& type, int central_rank) {
  std::string t = type;
  if (t == "A1×A1" || t == "A1xA1" || t == "A1*A1") t = "A1xA1";
  if (t == "A1") return build_root_datum(IntMatrix::from_rows({{2}}), central_rank, "A1");
  if (t == "A1xA1") return build_root_datum(IntMatrix::from_rows({{2, 0}, {0, 2}}), central_rank, "A1xA1");
  if (t == "A2") return build_root_datum(IntMatrix::from_rows({{2, -1}, {-1, 2}}), central_rank, "A2");
  if (t == "B2") return build_root_datum(IntMatrix::from_rows({{2, -1}, {-2, 2}}), central_rank, "B2");
  if (t == "G2") return build_root_datum(IntMatrix::from_rows({{2, -1}, {-3, 2}}), central_rank, "G2");
  throw std::invalid_argument("unknown Cartan type: " + type);
}

namespace {

// s_a(x) = x - <x, a_vee> a on M, and its transpose-inverse on N.
IntMatrix reflection_m(const IntVec& a, const IntVec& a_vee) {
  const int l = int(a.size());
  IntMatrix s = IntMatrix::identity(l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) s(i, j) = checked_sub(s(i, j), checked_mul(a[i], a_vee[j]));
  return s;
}

IntMatrix reflection_n(const IntVec& a, const IntVec& a_vee) {
  const int l = int(a.size());
  IntMatrix s = IntMatrix::identity(l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) s(i, j) = checked_sub(s(i, j), checked_mul(a_vee[i], a[j]));
  return s;
}

}  // namespace

WeylGroup::WeylGroup(const RootDatum& rd, std::size_t bound) : rd_(rd) {
  const int r = rd.semisimple_rank, l = rd.rank();
  std::vector<IntMatrix> sm, sn;
  for (int i = 0; i < r; ++i) {
    sm.push_back(reflection_m(rd.simple_root(i), rd.simple_coroot(i)));
    sn.push_back(reflection_n(rd.simple_root(i), rd.simple_coroot(i)));
  }
  elements_.push_back({IntMatrix::identity(l), IntMatrix::identity(l), 0, {}});
  index_[elements_[0].on_m] = 0;
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      IntMatrix m = elements_[head].on_m * sm[i];
      if (index_.count(m)) continue;
      if (elements_.size() >= bound) throw std::invalid_argument("Weyl group exceeds the size bound");
      WeylElement e{m, elements_[head].on_n * sn[i], elements_[head].length + 1, elements_[head].reduced_word};
      e.reduced_word.push_back(i);
      index_[e.on_m] = int(elements_.size());
      elements_.push_back(std::move(e));
    }
  }
  std::stable_sort(elements_.begin(), elements_.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.reduced_word < b.reduced_word;
  });
  index_.clear();
  for (std::size_t k = 0; k < elements_.size(); ++k) index_[elements_[k].on_m] = int(k);

  const std::size_t n = elements_.size();
  for (int i = 0; i < r; ++i) simple_.push_back(index_.at(sm[i]));
  table_.assign(n, std::vector<int>(n));
  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      table_[a][b] = index_.at(elements_[a].on_m * elements_[b].on_m);
      if (table_[a][b] == 0) inverse_[a] = int(b);
    }

  // Heights: pairing with a positive multiple of the sum of fundamental coweights.
  IntMatrix adj = adjugate(rd.cartan);
  height_.assign(l, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) height_[i] = checked_add(height_[i], adj(i, j));
  for (std::size_t w = 0; w < n; ++w)
    for (int i = 0; i < r; ++i) {
      IntVec a = elements_[w].on_m * rd.simple_root(i);
      if (coroots_.count(a)) continue;
      coroots_[a] = elements_[w].on_n * rd.simple_coroot(i);
      roots_.push_back(a);
    }
  std::sort(roots_.begin(), roots_.end());
  for (const auto& a : roots_)
    if (is_positive(a)) positive_.push_back(a);
}

int WeylGroup::multiply(int a, int b) const { return table_[a][b]; }

int WeylGroup::index_of(const IntMatrix& on_m) const {
  auto it = index_.find(on_m);
  if (it == index_.end()) throw std::invalid_argument("matrix is not a Weyl group element");
  return it->second;
}

bool WeylGroup::is_positive(const IntVec& root) const { return dot(root, height_) > 0; }

int WeylGroup::reflection(const IntVec& root) const {
  return index_of(reflection_m(root, coroot_of(root)));
}

SubsetMask WeylGroup::right_descent(int w) const {
  SubsetMask d = 0;
  for (int i = 0; i < rd_.semisimple_rank; ++i)
    if (!is_positive(act_m(w, rd_.simple_root(i)))) d |= SubsetMask(1) << i;
  return d;
}

int WeylGroup::inversion_count(int w) const {
  int c = 0;
  for (const auto& a : positive_)
    if (!is_positive(act_m(w, a))) ++c;
  return c;
}

OrbitFan orbit_fan(const WeylGroup& W, const Fan& f_plus) {
  const RootDatum& rd = W.root_datum();
  if (f_plus.ambient_rank() != rd.rank()) throw std::invalid_argument("fan rank differs from root datum rank");
  for (const auto& c : f_plus.maximal())
    for (const auto& ray : c.rays())
      if (!rd.dominant(ray)) throw std::invalid_argument("ray " + to_string(ray) + " is outside the dominant chamber");
  std::vector<Cone> cones;
  std::vector<std::pair<int, int>> origin;
  std::set<Cone> seen;
  for (std::size_t w = 0; w < W.size(); ++w)
    for (std::size_t s = 0; s < f_plus.maximal().size(); ++s) {
      std::vector<IntVec> rays;
      for (const auto& ray : f_plus.maximal()[s].rays()) rays.push_back(W.act_n(int(w), ray));
      Cone c = Cone::from_generators(rd.rank(), rays);
      if (!seen.insert(c).second) continue;
      cones.push_back(c);
      origin.emplace_back(int(w), int(s));
    }
  return {Fan::from_cones(rd.rank(), cones), origin};
}

std::vector<int> minimal_coset_reps(const WeylGroup& W, SubsetMask I) {
  const RootDatum& rd = W.root_datum();
  std::vector<int> out;
  for (std::size_t w = 0; w < W.size(); ++w) {
    bool ok = true;
    for (int i = 0; i < rd.semisimple_rank && ok; ++i)
      if (I >> i & 1) ok = W.is_positive(W.act_m(int(w), rd.simple_root(i)));
    if (ok) out.push_back(int(w));
  }
  return out;
}

std::map<SubsetMask, std::vector<int>> c_sets(const WeylGroup& W) {
  const int r = W.root_datum().semisimple_rank;
  const SubsetMask full = (SubsetMask(1) << r) - 1;
  std::map<SubsetMask, std::vector<int>> out;
  for (SubsetMask I = 0; I <= full; ++I) {
    std::vector<int> base = minimal_coset_reps(W, full & ~I);
    std::set<int> drop;
    for (SubsetMask J = 0; J <= full; ++J)
      if ((J & I) == J && J != I)
        for (int w : minimal_coset_reps(W, full & ~J)) drop.insert(w);
    std::vector<int>& cur = out[I];
    for (int w : base)
      if (!drop.count(w)) cur.push_back(w);
  }
  return out;
}

const char* to_string(SteinbergConvention c) {
  switch (c) {
    case SteinbergConvention::ParabolicOrbitSum: return "parabolic-orbit-sum";
    case SteinbergConvention::Monomial: return "monomial";
    case SteinbergConvention::MonomialInverse: return "monomial-inverse";
    case SteinbergConvention::MonomialNegated: return "monomial-negated";
    case SteinbergConvention::MonomialRightDescent: return "monomial-right-descent";
  }
  return "?";
}

namespace {

IntVec weight_sum(const RootDatum& rd, SubsetMask S) {
  IntVec m(rd.rank(), 0);
  for (int i = 0; i < rd.semisimple_rank; ++i)
    if (S >> i & 1) m[i] = 1;
  return m;
}

LaurentPoly orbit_sum(const WeylGroup& W, const IntVec& lambda, SubsetMask J) {
  const RootDatum& rd = W.root_datum();
  std::set<IntVec> orbit{lambda};
  std::deque<IntVec> queue{lambda};
  while (!queue.empty()) {
    IntVec x = queue.front();
    queue.pop_front();
    for (int j = 0; j < rd.semisimple_rank; ++j) {
      if (!(J >> j & 1)) continue;
      IntVec y = W.act_m(W.simple_reflection(j), x);
      if (orbit.insert(y).second) queue.push_back(y);
    }
  }
  std::vector<std::pair<IntVec, Coeff>> terms;
  for (const auto& e : orbit) terms.emplace_back(e, 1);
  return LaurentPoly::from_terms(rd.rank(), terms);
}

// a = +-e^m b; shifts preserve the term order, so leading terms must correspond.
bool differs_by_unit(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || a.size() != b.size()) return false;
  IntVec m = a.exponent_vec(0);
  const IntVec e = b.exponent_vec(0);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] -= e[i];
  const Coeff c = a.coeff(0) == b.coeff(0) ? 1 : -1;
  return a == b.shifted(m).scaled(c);
}

}  // namespace

std::vector<LaurentPoly> steinberg_candidates(const WeylGroup& W, SteinbergConvention c) {
  const RootDatum& rd = W.root_datum();
  const SubsetMask full = (SubsetMask(1) << rd.semisimple_rank) - 1;
  std::vector<LaurentPoly> f;
  for (std::size_t k = 0; k < W.size(); ++k) {
    const int v = int(k), vinv = W.inverse(v);
    const IntVec mu = weight_sum(rd, W.left_descent(v));
    switch (c) {
      case SteinbergConvention::ParabolicOrbitSum:
        f.push_back(orbit_sum(W, W.act_m(vinv, mu), full & ~W.right_descent(v)));
        break;
      case SteinbergConvention::Monomial: f.push_back(LaurentPoly::monomial(W.act_m(v, mu))); break;
      case SteinbergConvention::MonomialInverse: f.push_back(LaurentPoly::monomial(W.act_m(vinv, mu))); break;
      case SteinbergConvention::MonomialNegated: {
        IntVec e = W.act_m(v, mu);
        for (auto& x : e) x = -x;
        f.push_back(LaurentPoly::monomial(e));
        break;
      }
      case SteinbergConvention::MonomialRightDescent:
        f.push_back(LaurentPoly::monomial(W.act_m(v, weight_sum(rd, W.right_descent(v)))));
        break;
    }
  }
  return f;
}

SteinbergData::SteinbergData(std::shared_ptr<const WeylGroup> W, SteinbergConvention c, Exec exec)
    : W_(std::move(W)), convention_(c) {
  const WeylGroup& G = *W_;
  const RootDatum& rd = G.root_datum();
  const SubsetMask full = (SubsetMask(1) << rd.semisimple_rank) - 1;
  const std::size_t n = G.size();
  f_ = steinberg_candidates(G, c);
  c_sets_ = eqk::c_sets(G);
  descent_.resize(n);
  for (std::size_t v = 0; v < n; ++v) descent_[v] = G.right_descent(int(v));

  verification_.invariance = true;
  for (std::size_t v = 0; v < n && verification_.invariance; ++v)
    for (int j = 0; j < rd.semisimple_rank; ++j)
      if ((full & ~descent_[v]) >> j & 1)
        if (act(G[G.simple_reflection(j)].on_m, f_[v]) != f_[v]) {
          verification_.invariance = false;
          break;
        }

  LaurentMatrix M(n, std::vector<LaurentPoly>(n));
  for_each_index(n * n, exec, [&](std::size_t k) {
    const std::size_t u = k / n, v = k % n;
    M[u][v] = act(G[u].on_m, f_[v]);
  });
  LaurentMatrix I(n, std::vector<LaurentPoly>(n, LaurentPoly(rd.rank())));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = LaurentPoly::constant(rd.rank(), 1);
  try {
    FractionFreeSolution sol = solve_fraction_free(M, I, exec);
    denominator_ = std::move(sol.denominator);
    numerators_ = std::move(sol.numerators);
  } catch (const SingularSystem&) {
    verification_.unit_ratio = false;
    return;
  }
  LaurentPoly P = LaurentPoly::constant(rd.rank(), 1);
  for (const auto& a : G.roots())
    for (std::size_t k = 0; k < n / 2; ++k) P *= LaurentPoly::one_minus_exp(a);
  verification_.unit_ratio = differs_by_unit(denominator_ * denominator_, P);
}

std::shared_ptr<const SteinbergData> steinberg_basis(std::shared_ptr<const WeylGroup> W, Exec exec) {
  for (auto c : {SteinbergConvention::ParabolicOrbitSum, SteinbergConvention::Monomial,
                 SteinbergConvention::MonomialInverse, SteinbergConvention::MonomialNegated,
                 SteinbergConvention::MonomialRightDescent}) {
    auto data = std::make_shared<const SteinbergData>(W, c, exec);
    if (data->verification().ok()) return data;
  }
  throw ConsistencyError("no Steinberg convention passed basis verification for " + W->root_datum().name);
}

bool is_w_invariant(const WeylGroup& W, const LaurentPoly& f, int offset) {
  for (int j = 0; j < W.root_datum().semisimple_rank; ++j)
    if (act_on_block(W[W.simple_reflection(j)].on_m, f, offset) != f) return false;
  return true;
}

std::vector<LaurentPoly> steinberg_decompose_block(const SteinbergData& S, const LaurentPoly& g, int offset,
                                                   Exec exec) {
  const WeylGroup& W = S.group();
  const int l = W.root_datum().rank(), total = g.rank();
  if (offset < 0 || offset + l > total) throw std::invalid_argument("block outside polynomial rank");
  const std::size_t n = W.size();
  std::vector<LaurentPoly> images(n);
  for_each_index(n, exec, [&](std::size_t u) { images[u] = act_on_block(W[u].on_m, g, offset); });
  const LaurentPoly d = embed(S.denominator(), total, offset);
  std::vector<LaurentPoly> c(n);
  for_each_index(n, exec, [&](std::size_t v) {
    LaurentPoly acc(total);
    for (std::size_t u = 0; u < n; ++u)
      if (!S.numerators()[v][u].is_zero()) acc += embed(S.numerators()[v][u], total, offset) * images[u];
    auto q = exact_divide(acc, d);
    if (!q) throw ConsistencyError("Steinberg coefficient is not a Laurent polynomial");
    if (!is_w_invariant(W, *q, offset)) throw ConsistencyError("Steinberg coefficient is not W-invariant");
    c[v] = std::move(*q);
  });
  return c;
}

std::vector<LaurentPoly> steinberg_decompose(const SteinbergData& S, const LaurentPoly& g, Exec exec) {
  if (g.rank() != S.group().root_datum().rank()) throw std::invalid_argument("polynomial rank differs from root datum");
  return steinberg_decompose_block(S, g, 0, exec);
}

LaurentPoly steinberg_reconstruct(const SteinbergData& S, const std::vector<LaurentPoly>& c, int offset) {
  if (c.size() != S.f().size()) throw std::invalid_argument("coefficient count differs from |W|");
  const int total = c.empty() ? 0 : c[0].rank();
  LaurentPoly out(total);
  for (std::size_t v = 0; v < c.size(); ++v) out += c[v] * embed(S.f()[v], total, offset);
  return out;
}

std::vector<LaurentPoly> structure_constants(const SteinbergData& S, int v, int v_prime, Exec exec) {
  const std::size_t n = S.group().size();
  if (v < 0 || v_prime < 0 || std::size_t(v) >= n || std::size_t(v_prime) >= n)
    throw std::invalid_argument("element index out of range");
  auto a = steinberg_decompose(S, S.f()[v] * S.f()[v_prime], exec);
  const SubsetMask allowed = S.c_index(v) | S.c_index(v_prime);
  for (std::size_t w = 0; w < n; ++w)
    if (!a[w].is_zero() && (S.c_index(int(w)) & ~allowed))
      throw ConsistencyError("structure constant a^" + word_string(S.group()[w]) + " violates the support restriction");
  return a;
}

std::string word_string(const WeylElement& w) {
  if (w.reduced_word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.reduced_word.size(); ++k) os << (k ? "*" : "") << "s" << w.reduced_word[k] + 1;
  return os.str();
}

}  // namespace eqk
