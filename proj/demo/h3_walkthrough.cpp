// Walkthrough of the hyperbolic 3-space example: G = SO(3,1)_0, K = SO(3),
// M = SO(2), sigma the defining representation of SO(3).

#include <iostream>

#include "ruelle/liealg.hpp"
#include "ruelle/reps.hpp"
#include "ruelle/rootdata.hpp"
#include "ruelle/spectrum.hpp"

using namespace ruelle;

int main() {
  const RankOneGroup g = RankOneGroup::so(2);
  const auto rd = restricted_root_data(g);
  std::cout << g.name() << ": dim g_alpha0 = " << rd.m_alpha << ", |rho| = " << rd.norm_rho
            << ", |alpha0| = " << rd.norm_alpha0 << "\n";

  const auto K = maximal_compact(g);
  const auto M = centralizer_m(g);
  const IrrepSpec sigma = spherical_harmonic(K, 1);
  std::cout << "sigma = " << sigma.pretty() << ", dim " << rep_dimension(sigma)
            << ", Casimir " << casimir_invariant(sigma) << "\n";

  auto alg = liealg::build_algebra(g);
  std::cout << "oracle Casimir on R^3: "
            << liealg::casimir_scalar(*alg, liealg::RepKind::Defining, liealg::Subgroup::K) << "\n\n";

  std::cout << "sigma|_M:\n";
  for (const auto& e : branch_to_M(g, sigma).entries) {
    const IrrepSpec& tau = e.tau;
    const std::int64_t s = tau.highest_weight[0];
    std::cout << "  tau_" << s << ": mult " << e.multiplicity << ", w0 tau = tau_" << weyl_action(tau).highest_weight[0]
              << ", A1 " << (check_assumption1(g, sigma, tau) ? "yes" : "no") << ", A2 "
              << (check_assumption2(tau) ? "yes" : "no") << "\n";
    std::cout << "    mu(lambda) = -lambda(lambda + 1) + " << weight_term(g, sigma, tau) << "\n";
    std::cout << "    D1 (curl) acts by (" << h3_reference::d1_eigenvalue(s, ComplexQuad(1)) << ") * lambda\n";
    SpectralParameter at_rho{ComplexQuad(-rd.norm_rho)};
    auto v = jordan_classify(g, tau, check_assumption1(g, sigma, tau), check_assumption2(tau), at_rho);
    std::cout << "    Jordan blocks at lambda = -|rho|: " << (v.exact ? "size " : "at most size ") << v.max_size
              << "\n";
  }

  std::cout << "\nsample: lambda = -1/2 + i, tau_1\n";
  auto r = correspondence_report(g, sigma, circle_character(M, 1),
                                 SpectralParameter{ComplexQuad(QuadExt(Rational(-1, 2)), QuadExt(1))});
  std::cout << "  mu = " << r.mu << (r.on_critical_line ? " (critical line)" : "") << "\n";
  for (const auto& c : r.caveats) std::cout << "  note: " << c << "\n";
  return 0;
}
