#pragma once

// Weight data of the compact groups K = SO(n+1) and M = SO(n) inside
// SO(n+1,1)_0: half-sums of positive roots, Casimir invariants, branching
// K -> M, the Weyl group action on M^ and the two assumption checks.
//
// Weights are stored in the standard coordinates e_j of the maximal torus;
// `scale_sq` converts the Euclidean norm in those coordinates to the norm
// induced by -B restricted to k (resp. m), B the Killing form of g.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ruelle/errors.hpp"
#include "ruelle/exactnum.hpp"
#include "ruelle/rootdata.hpp"

namespace ruelle {

struct WeightVector {
  std::vector<Rational> coeffs;
  Rational scale_sq{1};

  /// |i w|^2 = scale_sq * sum c_j^2
  [[nodiscard]] Rational normsq() const {
    Rational s;
    for (const auto& c : coeffs) s += c * c;
    return scale_sq * s;
  }

  friend WeightVector operator+(const WeightVector& x, const WeightVector& y) {
    if (x.coeffs.size() != y.coeffs.size() || x.scale_sq != y.scale_sq)
      throw DomainError("adding weights of different groups");
    WeightVector r = x;
    for (std::size_t j = 0; j < r.coeffs.size(); ++j) r.coeffs[j] += y.coeffs[j];
    return r;
  }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

enum class CompactKind { SpecialOrthogonal, Circle, Trivial };

struct CompactGroupData {
  CompactKind kind = CompactKind::Trivial;
  int matrix_dim = 1;  // N of SO(N); 2 for the circle, 1 for the trivial group
  int rank = 0;
  WeightVector delta;
  Rational scale_sq{1};

  [[nodiscard]] std::string name() const { return "SO(" + std::to_string(matrix_dim) + ")"; }
  [[nodiscard]] bool is_odd_orthogonal() const { return kind == CompactKind::SpecialOrthogonal && matrix_dim % 2 == 1; }

  friend bool operator==(const CompactGroupData& x, const CompactGroupData& y) {
    return x.kind == y.kind && x.matrix_dim == y.matrix_dim && x.scale_sq == y.scale_sq;
  }
};

/// Half-sum of positive roots: SO(2r+1) -> (r - j + 1/2)_j, SO(2r) -> (r - j)_j,
/// zero for the abelian cases.
inline WeightVector delta_half_sum(const CompactGroupData& g) {
  WeightVector w{std::vector<Rational>(static_cast<std::size_t>(g.rank)), g.scale_sq};
  if (g.kind != CompactKind::SpecialOrthogonal) return w;
  const int r = g.rank;
  for (int j = 1; j <= r; ++j) {
    w.coeffs[static_cast<std::size_t>(j - 1)] =
        g.matrix_dim % 2 == 1 ? Rational(2 * (r - j) + 1, 2) : Rational(r - j);
  }
  return w;
}

/// SO(N) with the given norm scale; N = 2 and N = 1 give the circle and the
/// trivial group.
inline CompactGroupData special_orthogonal(int N, Rational scale_sq) {
  if (N < 1) throw UnsupportedGroup("SO(" + std::to_string(N) + ")");
  CompactGroupData g;
  g.matrix_dim = N;
  g.scale_sq = scale_sq;
  if (N == 1) {
    g.kind = CompactKind::Trivial;
    g.rank = 0;
  } else if (N == 2) {
    g.kind = CompactKind::Circle;
    g.rank = 1;
  } else {
    g.kind = CompactKind::SpecialOrthogonal;
    g.rank = N / 2;
  }
  g.delta = delta_half_sum(g);
  return g;
}

inline void require_real_hyperbolic(const RankOneGroup& g) {
  if (g.family != Family::RealHyperbolic)
    throw UnsupportedGroup("compact weight data is implemented for so(n+1,1) only, got " + g.name());
}

/// 1/(2n): on so(n+1,1), -B(X,X) = -n tr(X^2), so the rotation generators
/// E_ij - E_ji have squared norm 2n.
inline Rational compact_scale_sq(const RankOneGroup& g) {
  require_real_hyperbolic(g);
  return Rational(1, 2 * g.n);
}

inline CompactGroupData maximal_compact(const RankOneGroup& g) {
  return special_orthogonal(g.n + 1, compact_scale_sq(g));
}

inline CompactGroupData centralizer_m(const RankOneGroup& g) {
  return special_orthogonal(g.n, compact_scale_sq(g));
}

struct IrrepSpec {
  CompactGroupData group;
  std::vector<std::int64_t> highest_weight;
  std::optional<std::string> label;

  [[nodiscard]] std::string pretty() const {
    std::string s = group.name() + "[";
    for (std::size_t j = 0; j < highest_weight.size(); ++j)
      s += (j ? "," : "") + std::to_string(highest_weight[j]);
    return s + "]";
  }

  // labels are metadata; equality is group + dominant weight
  friend bool operator==(const IrrepSpec& x, const IrrepSpec& y) {
    return x.group == y.group && x.highest_weight == y.highest_weight;
  }
};

inline bool is_dominant(const CompactGroupData& g, const std::vector<std::int64_t>& w) {
  if (w.size() != static_cast<std::size_t>(g.rank)) return false;
  switch (g.kind) {
    case CompactKind::Trivial:
    case CompactKind::Circle:
      return true;
    case CompactKind::SpecialOrthogonal:
      break;
  }
  const std::size_t r = w.size();
  for (std::size_t j = 0; j + 1 < r; ++j) {
    std::int64_t next = (j + 2 == r && g.matrix_dim % 2 == 0) ? std::llabs(w[j + 1]) : w[j + 1];
    if (w[j] < next) return false;
  }
  if (g.matrix_dim % 2 == 1 && w[r - 1] < 0) return false;
  return true;
}

inline IrrepSpec make_irrep(const CompactGroupData& g, std::vector<std::int64_t> hw,
                            std::optional<std::string> label = std::nullopt) {
  if (!is_dominant(g, hw)) {
    std::string s;
    for (auto v : hw) s += std::to_string(v) + " ";
    throw UnsupportedWeight("weight [" + s + "] is not a dominant integral weight of " + g.name());
  }
  return IrrepSpec{g, std::move(hw), std::move(label)};
}

/// Spherical harmonics of degree m (highest weight m e_1).  For the circle
/// this is the character z -> z^m; the trivial group only has m = 0.
inline IrrepSpec spherical_harmonic(const CompactGroupData& g, std::int64_t m) {
  switch (g.kind) {
    case CompactKind::Trivial:
      if (m != 0) throw UnsupportedWeight("the trivial group only has the trivial representation");
      return make_irrep(g, {}, "sh:0");
    case CompactKind::Circle:
      return make_irrep(g, {m}, "sh:" + std::to_string(m));
    case CompactKind::SpecialOrthogonal:
      break;
  }
  if (m < 0) throw UnsupportedWeight("spherical harmonic degree must be >= 0");
  std::vector<std::int64_t> hw(static_cast<std::size_t>(g.rank), 0);
  hw[0] = m;
  return make_irrep(g, std::move(hw), "sh:" + std::to_string(m));
}

inline IrrepSpec circle_character(const CompactGroupData& g, std::int64_t s) {
  if (g.kind != CompactKind::Circle) throw UnsupportedGroup(g.name() + " is not SO(2)");
  return make_irrep(g, {s}, "circ:" + std::to_string(s));
}

inline IrrepSpec trivial_rep(const CompactGroupData& g) {
  return make_irrep(g, std::vector<std::int64_t>(static_cast<std::size_t>(g.rank), 0), "triv");
}

inline WeightVector weight_of(const IrrepSpec& rep) {
  WeightVector w{{}, rep.group.scale_sq};
  for (auto c : rep.highest_weight) w.coeffs.emplace_back(c);
  return w;
}

/// c = |i delta|^2 - |i omega + i delta|^2
inline Rational casimir_invariant(const IrrepSpec& rep) {
  const WeightVector& d = rep.group.delta;
  return d.normsq() - (weight_of(rep) + d).normsq();
}

/// Weyl dimension formula over the positive roots e_i -+ e_j (and e_i for
/// odd N).
inline std::int64_t rep_dimension(const IrrepSpec& rep) {
  if (rep.group.kind != CompactKind::SpecialOrthogonal) return 1;
  const auto& delta = rep.group.delta.coeffs;
  const std::size_t r = delta.size();
  std::vector<Rational> shifted(r);
  for (std::size_t j = 0; j < r; ++j) shifted[j] = delta[j] + Rational(rep.highest_weight[j]);
  Rational dim(1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      dim *= (shifted[i] - shifted[j]) / (delta[i] - delta[j]);
      dim *= (shifted[i] + shifted[j]) / (delta[i] + delta[j]);
    }
    if (rep.group.matrix_dim % 2 == 1) dim *= shifted[i] / delta[i];
  }
  if (!dim.is_integer()) throw DomainError("non-integral Weyl dimension (internal error)");
  return dim.num();
}

struct BranchingEntry {
  IrrepSpec tau;
  int multiplicity = 1;
};

struct BranchingDecomposition {
  IrrepSpec parent;
  std::vector<BranchingEntry> entries;
};

struct BranchOptions {
  /// For n = 1 (K = SO(2), M trivial) report tau_0 only inside sigma_0, the
  /// compatibility rule used alongside the closed-form eigenvalue.  The
  /// default is the literal restriction, where every character of SO(2)
  /// restricts to the trivial representation once.
  bool paper_n1_convention = false;
};

/// sigma|_M for sigma an irrep of K = SO(n+1), by the interlacing
/// (Gelfand-Tsetlin) rule.
inline BranchingDecomposition branch_to_M(const RankOneGroup& g, const IrrepSpec& sigma,
                                          const BranchOptions& opts = {}) {
  const CompactGroupData K = maximal_compact(g);
  const CompactGroupData M = centralizer_m(g);
  if (!(sigma.group == K)) throw UnsupportedGroup(sigma.group.name() + " is not K of " + g.name());
  BranchingDecomposition out{sigma, {}};

  if (K.kind == CompactKind::Circle) {
    if (!opts.paper_n1_convention || sigma.highest_weight[0] == 0)
      out.entries.push_back({trivial_rep(M), static_cast<int>(rep_dimension(sigma))});
    return out;
  }

  const auto& lam = sigma.highest_weight;
  const std::size_t r = lam.size();
  std::vector<std::pair<std::int64_t, std::int64_t>> bounds;  // [lo, hi] per coordinate of mu
  if (K.matrix_dim % 2 == 1) {
    for (std::size_t j = 0; j + 1 < r; ++j) bounds.emplace_back(lam[j + 1], lam[j]);
    bounds.emplace_back(-lam[r - 1], lam[r - 1]);
  } else {
    for (std::size_t j = 0; j + 2 < r; ++j) bounds.emplace_back(lam[j + 1], lam[j]);
    bounds.emplace_back(std::llabs(lam[r - 1]), lam[r - 2]);
  }

  std::vector<std::int64_t> mu(bounds.size());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == bounds.size()) {
      out.entries.push_back({make_irrep(M, mu), 1});
      return;
    }
    for (std::int64_t v = bounds[j].first; v <= bounds[j].second; ++v) {
      mu[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

/// [sigma|_M : tau]
inline int multiplicity(const RankOneGroup& g, const IrrepSpec& sigma, const IrrepSpec& tau,
                        const BranchOptions& opts = {}) {
  int count = 0;
  for (const auto& e : branch_to_M(g, sigma, opts).entries)
    if (e.tau == tau) count += e.multiplicity;
  return count;
}

/// w0[tau]: conjugation by a representative of the non-trivial Weyl element.
/// It acts on the maximal torus of SO(2l) by flipping the last coordinate
/// (an outer automorphism) and trivially up to inner automorphisms on SO(2l+1).
inline IrrepSpec weyl_action(const IrrepSpec& tau) {
  IrrepSpec out = tau;
  out.label.reset();
  switch (tau.group.kind) {
    case CompactKind::Trivial:
      break;
    case CompactKind::Circle:
      out.highest_weight[0] = -out.highest_weight[0];
      break;
    case CompactKind::SpecialOrthogonal:
      if (tau.group.matrix_dim % 2 == 0) out.highest_weight.back() = -out.highest_weight.back();
      break;
  }
  return out;
}

/// Assumption 1: [sigma|_M : tau] = 1.
inline bool check_assumption1(const RankOneGroup& g, const IrrepSpec& sigma, const IrrepSpec& tau,
                              const BranchOptions& opts = {}) {
  return multiplicity(g, sigma, tau, opts) == 1;
}

/// Assumption 2: [tau] is invariant under the Weyl group.
inline bool check_assumption2(const IrrepSpec& tau) { return weyl_action(tau) == tau; }

}  // namespace ruelle
