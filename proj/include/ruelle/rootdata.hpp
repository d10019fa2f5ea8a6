#pragma once

// Restricted-root data of the rank-one families SO(n+1,1)_0 and SU(n+1,1),
// the resonance band lines and the conversion to curvature -1 units.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ruelle/errors.hpp"
#include "ruelle/exactnum.hpp"

namespace ruelle {

enum class Family {
  RealHyperbolic,     // SO(n+1,1)_0
  ComplexHyperbolic,  // SU(n+1,1)
};

struct RankOneGroup {
  Family family = Family::RealHyperbolic;
  int n = 1;

  RankOneGroup() = default;
  RankOneGroup(Family f, int n_) : family(f), n(n_) {
    if (n_ < 1) throw DomainError("family parameter n must be >= 1, got " + std::to_string(n_));
  }

  static RankOneGroup so(int n) { return {Family::RealHyperbolic, n}; }
  static RankOneGroup su(int n) { return {Family::ComplexHyperbolic, n}; }

  /// Size of the defining matrices (n + 2).
  [[nodiscard]] int matrix_size() const { return n + 2; }

  [[nodiscard]] std::string name() const {
    return family == Family::RealHyperbolic
               ? "SO(" + std::to_string(n + 1) + ",1)"
               : "SU(" + std::to_string(n + 1) + ",1)";
  }

  friend bool operator==(const RankOneGroup&, const RankOneGroup&) = default;
};

/// Accepts "so" / "su" (case-insensitive).  "sp" and "f4" are recognized
/// rank-one families without worked data and raise UnsupportedFamily.
inline Family parse_family(std::string_view s) {
  std::string t(s);
  for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "so" || t == "real" || t == "realhyperbolic") return Family::RealHyperbolic;
  if (t == "su" || t == "complex" || t == "complexhyperbolic") return Family::ComplexHyperbolic;
  if (t == "sp" || t == "f4")
    throw UnsupportedFamily("'" + std::string(s) + "': only so and su are implemented");
  throw UnsupportedFamily("unknown family '" + std::string(s) + "'");
}

inline std::string family_token(Family f) { return f == Family::RealHyperbolic ? "so" : "su"; }

struct RestrictedRootData {
  int m_alpha = 0;    // dim g_{alpha0}
  int m_2alpha = 0;   // dim g_{2 alpha0}
  Rational norm_alpha0_sq;
  Rational rho_coeff;  // rho = rho_coeff * alpha0
  QuadExt norm_rho;
  QuadExt norm_alpha0;

  [[nodiscard]] Rational norm_rho_sq() const { return rho_coeff * rho_coeff * norm_alpha0_sq; }
  /// Radicand of Q(sqrt d) that holds |rho| and |alpha0|.
  [[nodiscard]] std::int64_t radicand() const { return QuadExt::common_radicand(norm_rho, norm_alpha0); }
};

/// Multiplicity table; the ComplexHyperbolic row is confirmed by the
/// explicit-matrix oracle in the test suite.
inline std::pair<int, int> root_multiplicities(const RankOneGroup& g) {
  if (g.family == Family::RealHyperbolic) return {g.n, 0};
  return {2 * g.n, 1};
}

inline RestrictedRootData restricted_root_data(const RankOneGroup& g) {
  RestrictedRootData r;
  std::tie(r.m_alpha, r.m_2alpha) = root_multiplicities(g);
  // B(H0,H0) = sum_alpha dim g_alpha alpha(H0)^2 = 1 with H0 a unit vector
  r.norm_alpha0_sq = Rational(1, 2 * r.m_alpha + 8 * r.m_2alpha);
  r.rho_coeff = Rational(r.m_alpha + 2 * r.m_2alpha, 2);
  r.norm_alpha0 = sqrt_rational(r.norm_alpha0_sq);
  r.norm_rho = QuadExt(r.rho_coeff) * r.norm_alpha0;
  return r;
}

struct BandStructure {
  QuadExt norm_rho;
  QuadExt norm_alpha0;
  std::vector<QuadExt> lines;  // real parts -|rho| - k |alpha0|
  std::string note;
};

inline constexpr std::string_view kRealAxisNote =
    "resonances off these lines can only lie on the real axis (Im lambda = 0)";

inline BandStructure band_lines(const RankOneGroup& g, int k_max) {
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  auto rd = restricted_root_data(g);
  BandStructure b{rd.norm_rho, rd.norm_alpha0, {}, std::string(kRealAxisNote)};
  b.lines.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) b.lines.push_back(-rd.norm_rho - QuadExt(k) * rd.norm_alpha0);
  return b;
}

/// sqrt(2n): the factor between the Killing-form metric on p and the metric
/// of sectional curvature -1 on SO(n+1,1)_0 / SO(n+1).
inline QuadExt curvature_scale(const RankOneGroup& g) {
  if (g.family != Family::RealHyperbolic)
    throw UnsupportedFamily("curvature -1 normalization is only defined for so");
  return sqrt_rational(Rational(2 * g.n));
}

/// (lambda, mu) in Killing-form units -> curvature -1 units:
/// lambda' = sqrt(2n) lambda, mu' = 2n mu.
inline std::pair<ComplexQuad, ComplexQuad> normalization_convert(const RankOneGroup& g,
                                                                   const ComplexQuad& lambda,
                                                                   const ComplexQuad& mu) {
  QuadExt s = curvature_scale(g);
  return {ComplexQuad(s) * lambda, ComplexQuad(Rational(2 * g.n)) * mu};
}

/// Inverse of normalization_convert.
inline std::pair<ComplexQuad, ComplexQuad> normalization_revert(const RankOneGroup& g,
                                                                  const ComplexQuad& lambda,
                                                                  const ComplexQuad& mu) {
  QuadExt inv = QuadExt(1) / curvature_scale(g);
  Rational inv_mu = Rational(1, 2 * g.n);
  return {ComplexQuad(inv) * lambda, ComplexQuad(inv_mu) * mu};
}

}  // namespace ruelle
