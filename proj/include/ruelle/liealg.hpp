#pragma once

// Explicit exact realizations of so(n+1,1) and su(n+1,1) (the latter
// realified to 2N x 2N real matrices).  Everything here is computed from the
// matrices and the structure constants alone, so it serves as an independent
// check of the closed-form tables in rootdata / reps.
//
// Basis conventions (N = n + 2, indices 0-based, eta = diag(1,...,1,-1)):
//   so:  R(i,j) = E_ij - E_ji (i < j < N-1),  B(i) = E_{i,N-1} + E_{N-1,i}
//   su:  X = A + iB  ->  [[A, -B], [B, A]]; compact part spanned by
//        E_ij - E_ji, i(E_ij + E_ji) (j < N-1) and i(E_jj - E_{j+1,j+1});
//        non-compact part by E_{i,N-1} + E_{N-1,i} and i(E_{i,N-1} - E_{N-1,i}).
// The split torus a is spanned by the boost E = B(n) (coordinates n, N-1).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ruelle/errors.hpp"
#include "ruelle/exactnum.hpp"
#include "ruelle/linalg.hpp"
#include "ruelle/rootdata.hpp"

namespace ruelle::liealg {

using linalg::RatMatrix;
using linalg::SparseMatrix;
using linalg::Vec;

/// Sparse coordinate vector: (basis index, coefficient), sorted by index.
using SparseVec = std::vector<std::pair<int, Rational>>;

inline constexpr int kMaxN = 8;

/// c_ij^k stored as table[i * dim + j] = {(k, c_ij^k)}.
struct StructureConstants {
  int dim = 0;
  std::vector<SparseVec> table;

  [[nodiscard]] const SparseVec& bracket(int i, int j) const {
    return table[static_cast<std::size_t>(i * dim + j)];
  }
  [[nodiscard]] Rational coefficient(int i, int j, int k) const {
    for (const auto& [idx, c] : bracket(i, j))
      if (idx == k) return c;
    return Rational(0);
  }
};

struct RootSpaces {
  std::vector<Vec> m, a;
  std::map<int, std::vector<Vec>> by_eigenvalue;  // ad(E)-eigenvalue -> basis (non-zero eigenvalues)
  int reduced_root = 1;                           // smallest positive eigenvalue of ad(E)

  [[nodiscard]] const std::vector<Vec>& space(int eigenvalue) const {
    static const std::vector<Vec> empty;
    auto it = by_eigenvalue.find(eigenvalue);
    return it == by_eigenvalue.end() ? empty : it->second;
  }
};

class MatrixLieAlgebra {
 public:
  RankOneGroup group;
  bool realified = false;
  int matrix_size = 0;  // size of the stored matrices (N, or 2N when realified)
  std::vector<SparseMatrix> basis;
  std::vector<std::string> labels;
  StructureConstants structure;
  RatMatrix theta;    // Cartan involution X -> -X^T on coordinates
  RatMatrix killing;  // B(X_i, X_j) = tr(ad X_i ad X_j)
  RatMatrix inner;    // <X_i, X_j> = -B(X_i, theta X_j)
  std::vector<Vec> k_basis;
  std::vector<Vec> p_basis;
  RootSpaces roots;
  int boost = 0;          // basis index of E
  Rational boost_normsq;  // <E, E>
  QuadExt h0_scale;       // H0 = h0_scale * E

  [[nodiscard]] int dim() const { return static_cast<int>(basis.size()); }

  [[nodiscard]] Vec unit(int i) const {
    Vec v(basis.size());
    v[static_cast<std::size_t>(i)] = Rational(1);
    return v;
  }

  /// Coordinates of a matrix in the basis; throws if it is not in the span.
  [[nodiscard]] Vec coordinates(const SparseMatrix& y) const {
    Vec frob(basis.size());
    for (const auto& [rc, v] : y.entries()) {
      auto it = entry_index_.find(rc);
      if (it == entry_index_.end()) throw DomainError("matrix is not in the Lie algebra");
      for (const auto& [i, c] : it->second) frob[static_cast<std::size_t>(i)] += c * v;
    }
    Vec coords(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (const auto& [j, g] : gram_inverse_rows_[i])
        if (!frob[static_cast<std::size_t>(j)].is_zero()) coords[i] += g * frob[static_cast<std::size_t>(j)];
    if (!(matrix_of(coords) == y)) throw DomainError("matrix is not in the Lie algebra");
    return coords;
  }

  [[nodiscard]] SparseMatrix matrix_of(const Vec& coords) const {
    SparseMatrix m(matrix_size);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) m = m + coords[i] * basis[i];
    return m;
  }

  /// [x, y] computed from the structure constants.
  [[nodiscard]] Vec bracket(const Vec& x, const Vec& y) const {
    Vec out(basis.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        Rational f = x[i] * y[j];
        for (const auto& [k, c] : structure.bracket(static_cast<int>(i), static_cast<int>(j)))
          out[static_cast<std::size_t>(k)] += f * c;
      }
    }
    return out;
  }

  /// ad(x) as a dim x dim matrix (column j = [x, e_j]).
  [[nodiscard]] RatMatrix ad(const Vec& x) const {
    RatMatrix m(basis.size(), basis.size());
    for (int j = 0; j < dim(); ++j) m.set_column(static_cast<std::size_t>(j), bracket(x, unit(j)));
    return m;
  }

  /// Called once by the builder after `basis` is final.
  void index_basis() {
    entry_index_.clear();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (const auto& [rc, v] : basis[i].entries()) entry_index_[rc].emplace_back(static_cast<int>(i), v);
    RatMatrix gram(basis.size(), basis.size());
    for (const auto& [rc, list] : entry_index_)
      for (const auto& [i, vi] : list)
        for (const auto& [j, vj] : list) gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += vi * vj;
    RatMatrix ginv = linalg::inverse(gram);
    gram_inverse_rows_.assign(basis.size(), {});
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (!ginv(i, j).is_zero()) gram_inverse_rows_[i].emplace_back(static_cast<int>(j), ginv(i, j));
  }

 private:
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> entry_index_;
  std::vector<SparseVec> gram_inverse_rows_;
};

namespace detail {

inline SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

inline void build_so_basis(MatrixLieAlgebra& alg) {
  const int N = alg.group.matrix_size();
  alg.matrix_size = N;
  for (int i = 0; i < N - 1; ++i)
    for (int j = i + 1; j < N - 1; ++j) {
      alg.basis.push_back(SparseMatrix::unit(N, i, j) - SparseMatrix::unit(N, j, i));
      alg.labels.push_back("R(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  for (int i = 0; i < N - 1; ++i) {
    if (i == N - 2) alg.boost = static_cast<int>(alg.basis.size());
    alg.basis.push_back(SparseMatrix::unit(N, i, N - 1) + SparseMatrix::unit(N, N - 1, i));
    alg.labels.push_back("B(" + std::to_string(i + 1) + ")");
  }
}

/// A + iB -> [[A, -B], [B, A]]
inline SparseMatrix realify(int N, const SparseMatrix& re, const SparseMatrix& im) {
  SparseMatrix out(2 * N);
  for (const auto& [rc, v] : re.entries()) {
    out.add(rc.first, rc.second, v);
    out.add(rc.first + N, rc.second + N, v);
  }
  for (const auto& [rc, v] : im.entries()) {
    out.add(rc.first, rc.second + N, -v);
    out.add(rc.first + N, rc.second, v);
  }
  return out;
}

inline void build_su_basis(MatrixLieAlgebra& alg) {
  const int N = alg.group.matrix_size();
  alg.matrix_size = 2 * N;
  alg.realified = true;
  const SparseMatrix zero(N);
  auto E = [N](int r, int c) { return SparseMatrix::unit(N, r, c); };
  auto push = [&](const SparseMatrix& re, const SparseMatrix& im, std::string label) {
    alg.basis.push_back(realify(N, re, im));
    alg.labels.push_back(std::move(label));
  };
  for (int i = 0; i < N - 1; ++i)
    for (int j = i + 1; j < N - 1; ++j) {
      std::string ij = std::to_string(i + 1) + "," + std::to_string(j + 1);
      push(E(i, j) - E(j, i), zero, "R(" + ij + ")");
      push(zero, E(i, j) + E(j, i), "iS(" + ij + ")");
    }
  for (int j = 0; j < N - 1; ++j)
    push(zero, E(j, j) - E(j + 1, j + 1), "iD(" + std::to_string(j + 1) + ")");
  for (int i = 0; i < N - 1; ++i) {
    if (i == N - 2) alg.boost = static_cast<int>(alg.basis.size());
    push(E(i, N - 1) + E(N - 1, i), zero, "B(" + std::to_string(i + 1) + ")");
    push(zero, E(i, N - 1) - E(N - 1, i), "iA(" + std::to_string(i + 1) + ")");
  }
}

inline void compute_structure(MatrixLieAlgebra& alg) {
  const int d = alg.dim();
  alg.structure.dim = d;
  alg.structure.table.assign(static_cast<std::size_t>(d * d), {});
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec c = alg.coordinates(linalg::commutator(alg.basis[static_cast<std::size_t>(i)],
                                                 alg.basis[static_cast<std::size_t>(j)]));
      alg.structure.table[static_cast<std::size_t>(i * d + j)] = to_sparse(c);
      alg.structure.table[static_cast<std::size_t>(j * d + i)] = to_sparse(linalg::scaled(Rational(-1), c));
    }
}

}  // namespace detail

/// tr(ad X_i ad X_j) from the structure constants.
inline RatMatrix killing_form(const StructureConstants& sc) {
  const int d = sc.dim;
  RatMatrix b(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rational s;
      // sum_k sum_l c_ik^l c_jl^k
      for (int k = 0; k < d; ++k)
        for (const auto& [l, c] : sc.bracket(i, k)) {
          Rational other = sc.coefficient(j, l, k);
          if (!other.is_zero()) s += c * other;
        }
      b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s;
      b(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = s;
    }
  return b;
}

/// Exact ad(E)-eigenspace decomposition.  Throws GradingFailure when the
/// eigenspaces for eigenvalues -2..2 do not exhaust g or a is not a line.
inline RootSpaces compute_root_spaces(const MatrixLieAlgebra& alg) {
  const std::size_t d = static_cast<std::size_t>(alg.dim());
  RatMatrix adE = alg.ad(alg.unit(alg.boost));
  RootSpaces rs;
  std::size_t total = 0;
  for (int c = -2; c <= 2; ++c) {
    RatMatrix shifted = adE - linalg::scaled_identity(d, Rational(c));
    if (c == 0) {
      RatMatrix I = RatMatrix::identity(d);
      rs.m = linalg::nullspace(linalg::stack(adE, alg.theta - I));
      rs.a = linalg::nullspace(linalg::stack(adE, alg.theta + I));
      total += rs.m.size() + rs.a.size();
      continue;
    }
    auto space = linalg::nullspace(shifted);
    total += space.size();
    if (!space.empty()) rs.by_eigenvalue[c] = std::move(space);
  }
  if (total != d)
    throw GradingFailure("ad(E) eigenspaces have total dimension " + std::to_string(total) + " != " +
                         std::to_string(d));
  if (rs.a.size() != 1) throw GradingFailure("a is not one-dimensional");
  rs.reduced_root = rs.space(1).empty() ? 2 : 1;
  return rs;
}

inline std::shared_ptr<const MatrixLieAlgebra> build_algebra_uncached(const RankOneGroup& g) {
  if (g.n > kMaxN) throw SizeLimit("n = " + std::to_string(g.n) + " exceeds " + std::to_string(kMaxN));
  auto alg = std::make_shared<MatrixLieAlgebra>();
  alg->group = g;
  if (g.family == Family::RealHyperbolic)
    detail::build_so_basis(*alg);
  else
    detail::build_su_basis(*alg);
  alg->index_basis();
  detail::compute_structure(*alg);

  const std::size_t d = alg->basis.size();
  alg->theta = RatMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    alg->theta.set_column(i, alg->coordinates(Rational(-1) * alg->basis[i].transpose()));
  alg->killing = killing_form(alg->structure);
  alg->inner = Rational(-1) * (alg->killing * alg->theta);

  RatMatrix I = RatMatrix::identity(d);
  alg->k_basis = linalg::nullspace(alg->theta - I);
  alg->p_basis = linalg::nullspace(alg->theta + I);
  alg->roots = compute_root_spaces(*alg);

  Vec e = alg->unit(alg->boost);
  alg->boost_normsq = linalg::bilinear(alg->inner, e, e);
  alg->h0_scale = sqrt_rational(alg->boost_normsq.reciprocal());
  return alg;
}

/// Cached, immutable handle.  n is capped at kMaxN.
inline std::shared_ptr<const MatrixLieAlgebra> build_algebra(const RankOneGroup& g) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MatrixLieAlgebra>> cache;
  std::pair<int, int> key{static_cast<int>(g.family), g.n};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto alg = build_algebra_uncached(g);
  std::lock_guard lock(mu);
  return cache.try_emplace(key, alg).first->second;
}

struct GradingDims {
  int m = 0;
  int a = 0;
  int alpha = 0;
  int minus_alpha = 0;
  int two_alpha = 0;
  int minus_two_alpha = 0;

  [[nodiscard]] int total() const { return m + a + alpha + minus_alpha + two_alpha + minus_two_alpha; }
  friend bool operator==(const GradingDims&, const GradingDims&) = default;
};

inline GradingDims restricted_grading(const MatrixLieAlgebra& alg) {
  const auto& rs = alg.roots;
  const int r = rs.reduced_root;
  GradingDims g;
  g.m = static_cast<int>(rs.m.size());
  g.a = static_cast<int>(rs.a.size());
  g.alpha = static_cast<int>(rs.space(r).size());
  g.minus_alpha = static_cast<int>(rs.space(-r).size());
  g.two_alpha = static_cast<int>(rs.space(2 * r).size());
  g.minus_two_alpha = static_cast<int>(rs.space(-2 * r).size());
  if (g.total() != alg.dim()) throw GradingFailure("restricted root spaces do not sum to dim g");
  return g;
}

/// |alpha0|^2 = alpha0(H0)^2 with alpha0(E) = reduced_root and H0 = E/|E|.
inline Rational oracle_norm_alpha0_sq(const MatrixLieAlgebra& alg) {
  Rational c(alg.roots.reduced_root);
  return c * c / alg.boost_normsq;
}

struct CheckResult {
  bool ok = true;
  std::string witness;  // first offending item when !ok

  explicit operator bool() const { return ok; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

inline CheckResult verify_antisymmetry(const MatrixLieAlgebra& alg) {
  const int d = alg.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto& x = alg.structure.bracket(i, j);
      const auto& y = alg.structure.bracket(j, i);
      if (x.size() != y.size()) return CheckResult::fail("[" + alg.labels[i] + "," + alg.labels[j] + "]");
      for (std::size_t t = 0; t < x.size(); ++t)
        if (x[t].first != y[t].first || x[t].second != -y[t].second)
          return CheckResult::fail("[" + alg.labels[i] + "," + alg.labels[j] + "]");
    }
  return {};
}

inline CheckResult verify_jacobi(const MatrixLieAlgebra& alg) {
  const int d = alg.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec ei = alg.unit(i), ej = alg.unit(j), ek = alg.unit(k);
        Vec s = alg.bracket(ei, alg.bracket(ej, ek));
        Vec t = alg.bracket(ej, alg.bracket(ek, ei));
        Vec u = alg.bracket(ek, alg.bracket(ei, ej));
        for (std::size_t q = 0; q < s.size(); ++q)
          if (!(s[q] + t[q] + u[q]).is_zero())
            return CheckResult::fail("Jacobi fails on (" + alg.labels[i] + ", " + alg.labels[j] + ", " +
                                     alg.labels[k] + ")");
      }
  return {};
}

/// B(k, p) = 0, B < 0 on k, B > 0 on p, <.,.> > 0 on g.
inline CheckResult verify_cartan_decomposition(const MatrixLieAlgebra& alg) {
  for (const auto& x : alg.k_basis)
    for (const auto& y : alg.p_basis)
      if (!linalg::bilinear(alg.killing, x, y).is_zero()) return CheckResult::fail("B(k,p) != 0");
  RatMatrix neg_k = Rational(-1) * linalg::restrict_form(alg.killing, alg.k_basis);
  if (!linalg::is_positive_definite(neg_k)) return CheckResult::fail("B is not negative definite on k");
  if (!linalg::is_positive_definite(linalg::restrict_form(alg.killing, alg.p_basis)))
    return CheckResult::fail("B is not positive definite on p");
  if (!linalg::is_positive_definite(alg.inner)) return CheckResult::fail("<.,.> is not positive definite");
  return {};
}

/// [H0, X] = alpha(H0) X on every root space, [g_{-a}, g_{-2a}] = 0,
/// [g_{-2a}, g_{-2a}] = 0 and [g_{-a}, g_{-a}] in g_{-2a}, all evaluated
/// through the structure constants.
inline CheckResult verify_horocycle_brackets(const MatrixLieAlgebra& alg) {
  const Vec e = alg.unit(alg.boost);
  const int r = alg.roots.reduced_root;
  for (const auto& [c, space] : alg.roots.by_eigenvalue)
    for (const auto& x : space)
      if (!(alg.bracket(e, x) == linalg::scaled(Rational(c), x)))
        return CheckResult::fail("[E, X] != " + std::to_string(c) + " X on g_" + std::to_string(c));
  const auto& minus1 = alg.roots.space(-r);
  const auto& minus2 = alg.roots.space(-2 * r);
  for (const auto* first : {&minus1, &minus2})
    for (const auto& x : *first)
      for (const auto& y : minus2)
        if (!linalg::is_zero(alg.bracket(x, y))) return CheckResult::fail("[X_alpha, X_{-2 alpha0}] != 0");
  for (const auto& x : minus1)
    for (const auto& y : minus1) {
      Vec z = alg.bracket(x, y);
      if (!(alg.bracket(e, z) == linalg::scaled(Rational(-2 * r), z)))
        return CheckResult::fail("[g_{-alpha0}, g_{-alpha0}] not inside g_{-2 alpha0}");
    }
  return {};
}

/// Test fixture: a copy whose structure constant c_ij^k is shifted by delta
/// (and c_ji^k by -delta).
inline MatrixLieAlgebra perturb_structure(const MatrixLieAlgebra& alg, int i, int j, int k,
                                          const Rational& delta) {
  MatrixLieAlgebra out = alg;
  auto bump = [&](int a, int b, const Rational& v) {
    auto& entry = out.structure.table[static_cast<std::size_t>(a * alg.dim() + b)];
    Vec dense(static_cast<std::size_t>(alg.dim()));
    for (const auto& [idx, c] : entry) dense[static_cast<std::size_t>(idx)] = c;
    dense[static_cast<std::size_t>(k)] += v;
    entry = detail::to_sparse(dense);
  };
  bump(i, j, delta);
  bump(j, i, -delta);
  return out;
}

enum class RepKind { Trivial, Defining, Sym2Traceless };
enum class Subgroup { K, M };

namespace detail {

/// Orthogonal (not normalized) basis by Gram-Schmidt with respect to form.
inline std::vector<std::pair<Vec, Rational>> orthogonalize(const RatMatrix& form, const std::vector<Vec>& vs) {
  std::vector<std::pair<Vec, Rational>> out;
  for (const auto& v : vs) {
    Vec w = v;
    for (const auto& [u, uu] : out) w = linalg::axpy(-(linalg::bilinear(form, u, v) / uu), u, w);
    Rational ww = linalg::bilinear(form, w, w);
    if (ww.is_zero()) continue;
    out.emplace_back(std::move(w), ww);
  }
  return out;
}

inline SparseMatrix top_left_block(const SparseMatrix& x, int s) {
  SparseMatrix out(s);
  for (const auto& [rc, v] : x.entries()) {
    if (rc.first >= s || rc.second >= s) throw DomainError("generator does not preserve R^" + std::to_string(s));
    out.add(rc.first, rc.second, v);
  }
  return out;
}

inline std::vector<SparseMatrix> sym2_traceless_basis(int s) {
  std::vector<SparseMatrix> out;
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) out.push_back(SparseMatrix::unit(s, a, b) + SparseMatrix::unit(s, b, a));
  for (int a = 0; a + 1 < s; ++a) out.push_back(SparseMatrix::unit(s, a, a) - SparseMatrix::unit(s, s - 1, s - 1));
  return out;
}

}  // namespace detail

/// Casimir scalar sum_i rho(K_i)^2 of an orthonormal basis {K_i} of k (or m)
/// with respect to -B, evaluated on explicit representation matrices.  The
/// normalizing factors 1/sqrt(<v,v>) are formed in Q(sqrt d); only their
/// squares enter, and those are required to be rational.
inline Rational casimir_scalar(const MatrixLieAlgebra& alg, RepKind rep, Subgroup sub) {
  if (alg.group.family != Family::RealHyperbolic)
    throw UnsupportedFamily("casimir_scalar needs the real hyperbolic family");
  if (rep == RepKind::Trivial) return Rational(0);
  const int s = sub == Subgroup::K ? alg.group.n + 1 : alg.group.n;
  const auto& span = sub == Subgroup::K ? alg.k_basis : alg.roots.m;

  std::vector<std::pair<SparseMatrix, Rational>> gens;  // (X_i, factor_i^2)
  for (const auto& [v, vv] : detail::orthogonalize(alg.inner, span)) {
    QuadExt f = sqrt_rational(vv.reciprocal());
    QuadExt f2 = quad_mul(f, f);
    if (!f2.is_rational()) throw RadicandOverflow("normalizing factor square is irrational");
    gens.emplace_back(detail::top_left_block(alg.matrix_of(v), s), f2.a());
  }

  if (rep == RepKind::Defining) {
    SparseMatrix c(s);
    for (const auto& [x, f2] : gens) c = c + f2 * (x * x);
    Rational scalar = c.at(0, 0);
    if (!(c == scalar * SparseMatrix::identity(s)))
      throw NotScalar("sum of squares on the defining representation is not scalar");
    return scalar;
  }

  auto basis = detail::sym2_traceless_basis(s);
  if (basis.empty()) throw DomainError("Sym2Traceless of R^1 is the zero representation");
  std::optional<Rational> scalar;
  for (const auto& A : basis) {
    SparseMatrix acc(s);
    for (const auto& [x, f2] : gens) acc = acc + f2 * linalg::commutator(x, linalg::commutator(x, A));
    // read the scalar off the first non-zero entry of A
    const auto& [rc, a0] = *A.entries().begin();
    Rational c = acc.at(rc.first, rc.second) / a0;
    if (!(acc == c * A) || (scalar && *scalar != c))
      throw NotScalar("sum of squares on traceless symmetric tensors is not scalar");
    scalar = c;
  }
  return *scalar;
}

/// Conjugation by m'_{w0} = rotation by pi in the plane of coordinates
/// (n-1, n) (0-based): the last coordinate of M and the boost direction.
/// Returns the signs by which it acts on the standard torus generators
/// R(2j, 2j+1) of m.  Verifies that m'_{w0} lies in K, normalizes a and acts
/// on it by -1.
inline std::vector<int> weyl_torus_signs(const MatrixLieAlgebra& alg) {
  if (alg.realified) throw UnsupportedFamily("weyl_torus_signs needs the real hyperbolic family");
  const int N = alg.matrix_size;
  const int n = alg.group.n;
  SparseMatrix w(N);
  for (int i = 0; i < N; ++i) w.add(i, i, Rational(i == n - 1 || i == n ? -1 : 1));
  if (n < 1) throw DomainError("n must be >= 1");
  // w is an involution, so it is its own inverse
  const SparseMatrix& E = alg.basis[static_cast<std::size_t>(alg.boost)];
  if (!(w * E * w == Rational(-1) * E)) throw DomainError("m'_{w0} does not invert a");
  std::vector<int> signs;
  for (int j = 0; 2 * j + 1 < n; ++j) {
    SparseMatrix t = SparseMatrix::unit(N, 2 * j, 2 * j + 1) - SparseMatrix::unit(N, 2 * j + 1, 2 * j);
    SparseMatrix c = w * t * w;
    if (c == t)
      signs.push_back(1);
    else if (c == Rational(-1) * t)
      signs.push_back(-1);
    else
      throw DomainError("m'_{w0} does not normalize the torus of m");
  }
  return signs;
}

/// Weyl action on a highest weight of M = SO(n) via weyl_torus_signs,
/// brought back to the dominant chamber of M.
inline std::vector<std::int64_t> oracle_weyl_action(const MatrixLieAlgebra& alg,
                                                    std::vector<std::int64_t> hw) {
  auto signs = weyl_torus_signs(alg);
  if (hw.size() != signs.size()) throw DomainError("weight has wrong rank for M");
  for (std::size_t j = 0; j < hw.size(); ++j) hw[j] *= signs[j];
  const int n = alg.group.n;
  if (n <= 2) return hw;  // trivial group or circle: no Weyl group of M
  int negatives = 0;
  bool has_zero = false;
  for (auto& v : hw) {
    if (v < 0) ++negatives;
    if (v == 0) has_zero = true;
    v = std::llabs(v);
  }
  std::sort(hw.begin(), hw.end(), std::greater<>());
  // SO(2l) only allows an even number of sign changes
  if (n % 2 == 0 && negatives % 2 == 1 && !has_zero) hw.back() = -hw.back();
  return hw;
}

}  // namespace ruelle::liealg
