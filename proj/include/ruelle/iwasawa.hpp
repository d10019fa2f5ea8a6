#pragma once

// Floating-point opposite Iwasawa factorization g = k exp(t H0) n- and the
// function Phi(g) = exp(-nu0(H-(g))).  Group elements are complex N x N
// matrices in the defining representation (real for the so family).
//
// In the light-cone basis (f+, e_1, ..., e_n, f-) with
// f+- = (e_{n+1} +- e_{n+2}) / sqrt 2, the boost E is diag(1, 0, ..., 0, -1)
// and A N- is lower triangular, so the factorization is a QL decomposition.

#include <cmath>
#include <complex>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "ruelle/errors.hpp"
#include "ruelle/liealg.hpp"

namespace ruelle::iwasawa {

using Matrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTolerance = 1e-10;

struct IwasawaFactors {
  Matrix k;
  double t = 0.0;  // H-(g) = t H0
  Matrix n_minus;
  double residual = 0.0;  // max-abs entry of g - k exp(t H0) n-
};

/// Complex defining matrix of a basis combination.  Realified matrices
/// [[A, -B], [B, A]] are folded back to A + iB.
inline Matrix defining_matrix(const liealg::MatrixLieAlgebra& alg, const linalg::SparseMatrix& x) {
  const int N = alg.group.matrix_size();
  Matrix m = Matrix::Zero(N, N);
  for (const auto& [rc, v] : x.entries()) {
    auto [r, c] = rc;
    if (!alg.realified) {
      m(r, c) += v.to_double();
    } else if (r < N && c < N) {
      m(r, c) += v.to_double();
    } else if (r >= N && c < N) {
      m(r - N, c) += std::complex<double>(0.0, v.to_double());
    }
  }
  return m;
}

inline Matrix defining_matrix(const liealg::MatrixLieAlgebra& alg, const linalg::Vec& coords) {
  return defining_matrix(alg, alg.matrix_of(coords));
}

/// sqrt(<E, E>), the factor between E and the unit vector H0.
inline double boost_norm(const liealg::MatrixLieAlgebra& alg) { return std::sqrt(alg.boost_normsq.to_double()); }

inline Matrix h0_matrix(const liealg::MatrixLieAlgebra& alg) {
  return defining_matrix(alg, alg.unit(alg.boost)) / boost_norm(alg);
}

inline Matrix exp_h0(const liealg::MatrixLieAlgebra& alg, double t) {
  Matrix x = t * h0_matrix(alg);
  return x.exp();
}

/// Orthogonal change of basis to (f+, e_1, ..., e_n, f-).
inline Matrix light_cone_basis(int N) {
  const int n = N - 2;
  const double s = 1.0 / std::sqrt(2.0);
  Matrix c = Matrix::Zero(N, N);
  c(n, 0) = s;
  c(N - 1, 0) = s;
  for (int j = 0; j < n; ++j) c(j, j + 1) = 1.0;
  c(n, N - 1) = s;
  c(N - 1, N - 1) = -s;
  return c;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

/// max |g* eta g - eta| with eta = diag(1, ..., 1, -1).
inline double group_defect(const Matrix& g) {
  const auto N = g.rows();
  Matrix eta = Matrix::Identity(N, N);
  eta(N - 1, N - 1) = -1.0;
  return max_abs(g.adjoint() * eta * g - eta);
}

inline IwasawaFactors iwasawa_opposite(const liealg::MatrixLieAlgebra& alg, const Matrix& g,
                                       double tolerance = kDefaultTolerance) {
  const int N = alg.group.matrix_size();
  if (g.rows() != N || g.cols() != N) throw DomainError("g has the wrong size");
  if (!g.allFinite()) throw FactorizationDiverged("g has non-finite entries");
  const double scale = std::max(1.0, max_abs(g));
  if (group_defect(g) > tolerance * scale * scale) throw FactorizationDiverged("g does not preserve the form");

  const Matrix c = light_cone_basis(N);
  const Matrix gp = c.adjoint() * g * c;

  // QL of gp from QR of J gp J, J the reversal permutation
  const Matrix rev = gp.reverse();
  Eigen::HouseholderQR<Matrix> qr(rev);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < N; ++i) {
    std::complex<double> d = r(i, i);
    if (std::abs(d) == 0.0) throw FactorizationDiverged("singular triangular factor");
    std::complex<double> phase = d / std::abs(d);
    r.row(i) *= std::conj(phase);
    q.col(i) *= phase;
  }
  const Matrix l = r.reverse();
  const Matrix qq = q.reverse();

  IwasawaFactors f;
  const double tau = std::log(l(0, 0).real());
  f.t = tau * boost_norm(alg);
  for (int i = 1; i + 1 < N; ++i)
    if (std::abs(l(i, i) - 1.0) > std::sqrt(tolerance) * scale)
      throw FactorizationDiverged("middle diagonal of the triangular factor is not 1");
  Eigen::VectorXcd a_inv = Eigen::VectorXcd::Ones(N);
  a_inv(0) = std::exp(-tau);
  a_inv(N - 1) = std::exp(tau);
  const Matrix np = a_inv.asDiagonal() * l;
  f.k = c * qq * c.adjoint();
  f.n_minus = c * np * c.adjoint();
  f.residual = max_abs(g - f.k * exp_h0(alg, f.t) * f.n_minus);
  if (!std::isfinite(f.t) || !f.k.allFinite() || !f.n_minus.allFinite())
    throw FactorizationDiverged("non-finite factors");
  if (f.residual > tolerance * scale)
    throw FactorizationDiverged("residual " + std::to_string(f.residual) + " exceeds tolerance");
  return f;
}

inline double phi(const liealg::MatrixLieAlgebra& alg, const Matrix& g, double tolerance = kDefaultTolerance) {
  return std::exp(-iwasawa_opposite(alg, g, tolerance).t);
}

/// Random group elements built from the oracle's exact subspaces.
class FactorSampler {
 public:
  FactorSampler(std::shared_ptr<const liealg::MatrixLieAlgebra> alg, std::uint64_t seed)
      : alg_(std::move(alg)), rng_(seed) {
    for (const auto& v : alg_->k_basis) k_gens_.push_back(defining_matrix(*alg_, v));
    const int r = alg_->roots.reduced_root;
    for (int c : {-r, -2 * r})
      for (const auto& v : alg_->roots.space(c)) n_gens_.push_back(defining_matrix(*alg_, v));
  }

  Matrix random_k(double spread = 1.5) { return combine(k_gens_, spread).exp(); }
  Matrix random_n_minus(double spread = 1.0) { return combine(n_gens_, spread).exp(); }
  double random_t(double spread = 2.0) { return std::uniform_real_distribution<double>(-spread, spread)(rng_); }
  Matrix random_g() { return random_k() * exp_h0(*alg_, random_t()) * random_n_minus(); }

 private:
  Matrix combine(const std::vector<Matrix>& gens, double spread) {
    const int N = alg_->group.matrix_size();
    Matrix x = Matrix::Zero(N, N);
    std::uniform_real_distribution<double> u(-spread, spread);
    for (const auto& g : gens) x += u(rng_) * g;
    return x;
  }

  std::shared_ptr<const liealg::MatrixLieAlgebra> alg_;
  std::mt19937_64 rng_;
  std::vector<Matrix> k_gens_;
  std::vector<Matrix> n_gens_;
};

}  // namespace ruelle::iwasawa
