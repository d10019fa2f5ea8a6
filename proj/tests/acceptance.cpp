// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "ruelle/iwasawa.hpp"
#include "ruelle/liealg.hpp"
#include "ruelle/spectrum.hpp"

using namespace ruelle;

namespace {

struct Tally {
  long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 8) failures.push_back(what);
    if (!ok && failures.size() == 8) failures.push_back("...");
  }
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

bool report(int id, double limit_s, const std::function<void(Tally&)>& body) {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.failures.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = secs < limit_s;
  bool pass = t.ok() && in_time;
  std::ostringstream line;
  line << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " (" << t.checks << " checks, " << secs
       << " s, limit " << limit_s << " s)";
  std::cout << line.str() << "\n";
  for (const auto& f : t.failures) std::cout << "    " << f << "\n";
  if (!in_time) std::cout << "    over time limit\n";
  return pass;
}

ComplexQuad cq(Rational re, Rational im = Rational(0)) { return ComplexQuad(QuadExt(re), QuadExt(im)); }

std::string str(const Rational& q) { return q.pretty(); }

void criterion1(Tally& t) {
  for (int n = 1; n <= 8; ++n) {
    auto g = RankOneGroup::so(n);
    auto rd = restricted_root_data(g);
    t.expect(rd.norm_rho_sq() == Rational(n, 8), "|rho|^2 at n=" + std::to_string(n));
    t.expect(quad_mul(rd.norm_rho, rd.norm_rho) == QuadExt(Rational(n, 8)), "|rho| squared at n=" + std::to_string(n));
    t.expect(rd.m_alpha == n, "m_alpha at n=" + std::to_string(n));
    if (n <= 4) {
      auto alg = liealg::build_algebra(g);
      auto dims = liealg::restricted_grading(*alg);
      t.expect(dims.alpha == n && dims.two_alpha == 0, "oracle grading at n=" + std::to_string(n));
      // |rho|^2 = (m_alpha/2)^2 |alpha0|^2 from the oracle
      Rational half(dims.alpha, 2);
      t.expect(half * half * liealg::oracle_norm_alpha0_sq(*alg) == Rational(n, 8),
               "oracle |rho|^2 at n=" + std::to_string(n));
    }
  }
}

void criterion2(Tally& t) {
  for (int n = 2; n <= 8; ++n) {
    auto g = RankOneGroup::so(n);
    auto K = maximal_compact(g);
    auto M = centralizer_m(g);
    for (int m = 0; m <= 5; ++m)
      for (int mp = 0; mp <= m; ++mp) {
        Rational got = weight_term(g, spherical_harmonic(K, m), spherical_harmonic(M, mp));
        Rational want(mp + (m - mp) * (m + mp + n - 1), 2 * n);
        t.expect(got == want, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " m'=" + std::to_string(mp) +
                                  ": " + str(got) + " vs " + str(want));
      }
  }
  {
    auto g = RankOneGroup::so(2);
    auto K = maximal_compact(g);
    auto M = centralizer_m(g);
    for (int m = 0; m <= 3; ++m)
      for (int s = -m; s <= m; ++s) {
        int a = std::abs(s);
        Rational got = weight_term(g, spherical_harmonic(K, m), circle_character(M, s));
        Rational want(a + (m - a) * (m + a + 1), 4);
        t.expect(got == want, "n=2 m=" + std::to_string(m) + " s=" + std::to_string(s));
      }
  }
  {
    auto g = RankOneGroup::so(1);
    auto K = maximal_compact(g);
    auto M = centralizer_m(g);
    for (int m = 0; m <= 5; ++m) {
      Rational got = weight_term(g, circle_character(K, m), trivial_rep(M));
      Rational want(m * m, 4);
      t.expect(got == want, "n=1 m=" + std::to_string(m) + ": weight term " + str(got) + " vs m^2/4 = " + str(want));
    }
  }
}

void criterion3(Tally& t) {
  auto g = RankOneGroup::so(2);
  auto K = maximal_compact(g);
  auto M = centralizer_m(g);
  auto sigma = spherical_harmonic(K, 1);
  auto b = branch_to_M(g, sigma);
  t.expect(b.entries.size() == 3, "three M-types");
  for (int s = -1; s <= 1; ++s) {
    auto tau = circle_character(M, s);
    t.expect(multiplicity(g, sigma, tau) == 1, "tau_" + std::to_string(s) + " occurs once");
    t.expect(check_assumption1(g, sigma, tau), "A1 for s=" + std::to_string(s));
    t.expect(check_assumption2(tau) == (s == 0), "A2 for s=" + std::to_string(s));
    Rational w = s == 0 ? Rational(1, 2) : Rational(1, 4);
    for (Rational l : {Rational(0), Rational(1), Rational(-1), Rational(-1, 2), Rational(7, 3)}) {
      ComplexQuad lam = cq(l);
      t.expect(mu_of_lambda(g, sigma, tau, {lam}) == -(lam * (lam + ComplexQuad(1))) + ComplexQuad(w),
               "mu at lambda=" + str(l) + " s=" + std::to_string(s));
    }
    // coefficients of the quadratic from three evaluations
    QuadExt m0 = mu_of_lambda(g, sigma, tau, {cq(0)}).re();
    QuadExt p1 = mu_of_lambda(g, sigma, tau, {cq(1)}).re();
    QuadExt n1 = mu_of_lambda(g, sigma, tau, {cq(-1)}).re();
    QuadExt c1 = (p1 - n1) / QuadExt(2);
    QuadExt c2 = (p1 + n1) / QuadExt(2) - m0;
    t.expect(c2 == QuadExt(-1) && c1 == QuadExt(-1) && m0 == QuadExt(w), "coefficients for s=" + std::to_string(s));
  }
}

void criterion4(Tally& t) {
  for (int n = 2; n <= 6; ++n) {
    auto g = RankOneGroup::so(n);
    auto K = maximal_compact(g);
    auto M = centralizer_m(g);
    for (int m = 0; m <= 4; ++m)
      for (Rational l : {Rational(0), Rational(-1, 2), Rational(2, 3), Rational(-3)}) {
        for (Rational im : {Rational(0), Rational(1, 5)}) {
          ComplexQuad lam = cq(l, im);
          auto mu = mu_of_lambda(g, spherical_harmonic(K, m), spherical_harmonic(M, m), {lam});
          auto [ld, md] = normalization_convert(g, lam, mu);
          t.expect(md == -(ld * (ld + ComplexQuad(n))) + ComplexQuad(m),
                   "n=" + std::to_string(n) + " m=" + std::to_string(m) + " lambda=" + lam.pretty());
        }
      }
  }
}

void criterion5(Tally& t) {
  using liealg::RepKind;
  using liealg::Subgroup;
  for (int n = 2; n <= 5; ++n) {
    auto g = RankOneGroup::so(n);
    auto alg = liealg::build_algebra(g);
    auto K = maximal_compact(g);
    auto M = centralizer_m(g);
    for (int deg : {1, 2}) {
      RepKind rep = deg == 1 ? RepKind::Defining : RepKind::Sym2Traceless;
      t.expect(liealg::casimir_scalar(*alg, rep, Subgroup::K) == casimir_invariant(spherical_harmonic(K, deg)),
               "K degree " + std::to_string(deg) + " n=" + std::to_string(n));
      t.expect(liealg::casimir_scalar(*alg, rep, Subgroup::M) == casimir_invariant(spherical_harmonic(M, deg)),
               "M degree " + std::to_string(deg) + " n=" + std::to_string(n));
    }
  }
  auto g = RankOneGroup::so(2);
  t.expect(casimir_invariant(spherical_harmonic(maximal_compact(g), 1)) == Rational(-1, 2), "c(sigma_1) = -1/2");
  for (int s = -3; s <= 3; ++s)
    t.expect(casimir_invariant(circle_character(centralizer_m(g), s)) == Rational(-s * s, 4),
             "c(tau_" + std::to_string(s) + ")");
}

void criterion6(Tally& t) {
  for (auto f : {Family::RealHyperbolic, Family::ComplexHyperbolic})
    for (int n = 1; n <= 4; ++n) {
      RankOneGroup g(f, n);
      auto alg = liealg::build_algebra(g);
      const std::string tag = g.name() + ": ";
      for (const auto& [name, r] : std::vector<std::pair<std::string, liealg::CheckResult>>{
               {"antisymmetry", liealg::verify_antisymmetry(*alg)},
               {"jacobi", liealg::verify_jacobi(*alg)},
               {"cartan", liealg::verify_cartan_decomposition(*alg)},
               {"horocycle", liealg::verify_horocycle_brackets(*alg)}})
        t.expect(r.ok, tag + name + " " + r.witness);
      t.expect(linalg::is_positive_definite(alg->inner), tag + "inner product");
      auto dims = liealg::restricted_grading(*alg);
      auto rd = restricted_root_data(g);
      t.expect(dims.alpha == rd.m_alpha && dims.two_alpha == rd.m_2alpha && dims.minus_alpha == rd.m_alpha &&
                   dims.minus_two_alpha == rd.m_2alpha && dims.a == 1,
               tag + "grading");
      if (f == Family::ComplexHyperbolic) t.expect(dims.alpha == 2 * n && dims.two_alpha == 1, tag + "(2n, 1)");
    }
  auto su21 = liealg::restricted_grading(*liealg::build_algebra(RankOneGroup::su(1)));
  t.expect(su21.alpha == 2 && su21.two_alpha == 1, "su(2,1) grading (2, 1)");
}

void criterion7(Tally& t) {
  std::vector<std::shared_ptr<const liealg::MatrixLieAlgebra>> algs;
  for (auto f : {Family::RealHyperbolic, Family::ComplexHyperbolic})
    for (int n = 1; n <= 4; ++n) algs.push_back(liealg::build_algebra(RankOneGroup(f, n)));

  int round_trips = 0;
  for (std::size_t a = 0; a < algs.size(); ++a) {
    iwasawa::FactorSampler s(algs[a], 1000 + a);
    for (int i = 0; i < 125; ++i, ++round_trips) {
      double tt = s.random_t();
      iwasawa::Matrix g = s.random_k() * iwasawa::exp_h0(*algs[a], tt) * s.random_n_minus();
      auto f = iwasawa::iwasawa_opposite(*algs[a], g);
      t.expect(f.residual <= 1e-10, algs[a]->group.name() + " residual " + std::to_string(f.residual));
      t.expect(std::abs(f.t - tt) <= 1e-9, algs[a]->group.name() + " t");
    }
  }
  t.expect(round_trips == 1000, "1000 round trips");

  for (int i = 0; i < 100; ++i) {
    const auto& alg = algs[static_cast<std::size_t>(i) % algs.size()];
    iwasawa::FactorSampler s(alg, 5000 + i);
    double v = iwasawa::phi(*alg, s.random_k());
    t.expect(std::abs(v - 1.0) <= 1e-12, alg->group.name() + " Phi(k) = " + std::to_string(v));
  }

  // X_{H0} Phi = -Phi and X_- Phi = 0 by central differences
  const double h = 1e-5;
  for (int i = 0; i < 100; ++i) {
    const auto& alg = algs[static_cast<std::size_t>(i) % algs.size()];
    iwasawa::FactorSampler s(alg, 9000 + i);
    iwasawa::Matrix g = s.random_k() * iwasawa::exp_h0(*alg, s.random_t(1.0)) * s.random_n_minus(0.5);
    double base = iwasawa::phi(*alg, g);
    double dh = (iwasawa::phi(*alg, g * iwasawa::exp_h0(*alg, h)) - iwasawa::phi(*alg, g * iwasawa::exp_h0(*alg, -h))) /
                (2 * h);
    t.expect(std::abs(dh + base) <= 1e-6 * std::max(1.0, base), alg->group.name() + " X_H0 Phi");
    const int r = alg->roots.reduced_root;
    for (int c : {-r, -2 * r})
      for (const auto& v : alg->roots.space(c)) {
        iwasawa::Matrix X = iwasawa::defining_matrix(*alg, v);
        double dn = (iwasawa::phi(*alg, g * (h * X).exp()) - iwasawa::phi(*alg, g * (-h * X).exp())) / (2 * h);
        t.expect(std::abs(dn) <= 1e-6 * std::max(1.0, base), alg->group.name() + " X_- Phi");
      }
  }
}

void criterion8(Tally& t) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> small(-12, 12), den(1, 9), pick_n(1, 8), pick_m(0, 4);
  auto rnd = [&] { return Rational(small(rng), den(rng)); };
  for (int iter = 0; iter < 2000; ++iter) {
    const int n = pick_n(rng);
    auto g = RankOneGroup::so(n);
    auto rd = restricted_root_data(g);
    auto K = maximal_compact(g);
    const int m = pick_m(rng);
    IrrepSpec sigma = n == 1 ? circle_character(K, m) : spherical_harmonic(K, m);
    auto entries = branch_to_M(g, sigma).entries;
    const auto& tau = entries[static_cast<std::size_t>(rng() % entries.size())].tau;
    const std::string tag = "n=" + std::to_string(n) + " " + sigma.pretty() + " " + tau.pretty();

    ComplexQuad lam = cq(rnd(), rnd());
    ComplexQuad refl = ComplexQuad(QuadExt(-2) * rd.norm_rho) - lam;
    auto mu = mu_of_lambda(g, sigma, tau, {lam});
    t.expect(mu == mu_of_lambda(g, sigma, tau, {refl}), tag + " reflection");

    ComplexQuad crit(-rd.norm_rho, QuadExt(rnd()));
    t.expect(mu_of_lambda(g, sigma, tau, {crit}).is_real(), tag + " critical line");

    Rational shift = rnd();
    ComplexQuad real_lam(-rd.norm_rho + QuadExt(shift));
    ComplexQuad imag_lam(-rd.norm_rho, QuadExt(shift));
    for (const auto& l : {real_lam, imag_lam}) {
      auto mr = mu_of_lambda(g, sigma, tau, {l});
      auto [x, y] = lambda_of_mu(g, sigma, tau, mr.re());
      t.expect(x.value == l || y.value == l, tag + " lambda_of_mu round trip");
    }

    bool shift_ok = true;
    for (const auto& c : smb_I_delta(g, sigma, {lam + ComplexQuad(rd.norm_rho)}))
      shift_ok = shift_ok && c.scalar == mu_of_lambda(g, sigma, c.tau, {lam});
    t.expect(shift_ok, tag + " smb shift");

    const int kmax = pick_m(rng) + 1;
    auto b = band_lines(g, kmax);
    bool bands_ok = b.lines.front() == -rd.norm_rho;
    for (int k = 1; k <= kmax; ++k)
      bands_ok = bands_ok && b.lines[static_cast<std::size_t>(k)] == -rd.norm_rho - QuadExt(k) * rd.norm_alpha0 &&
                 quad_compare_real(b.lines[static_cast<std::size_t>(k)], b.lines[static_cast<std::size_t>(k - 1)]) < 0;
    t.expect(bands_ok, tag + " band lines");
  }
}

void criterion9(Tally& t) {
  auto g = RankOneGroup::so(3);
  auto rd = restricted_root_data(g);
  auto tau = trivial_rep(centralizer_m(g));
  SpectralParameter at{ComplexQuad(-rd.norm_rho)};
  SpectralParameter away{cq(Rational(-1, 5), Rational(1))};
  struct Cell {
    SpectralParameter lambda;
    bool a1, a2;
    int size;
    bool exact;
    const char* name;
  };
  for (const auto& c : std::vector<Cell>{{at, true, true, 2, true, "-|rho|, A1, A2: exactly 2"},
                                         {at, true, false, 1, true, "-|rho|, A1, not A2: none"},
                                         {at, false, true, 2, false, "-|rho|, not A1, A2: at most 2"},
                                         {at, false, false, 2, false, "-|rho|, not A1, not A2: at most 2"},
                                         {away, true, true, 1, true, "other lambda, A1, A2: none"},
                                         {away, false, false, 1, true, "other lambda, no assumptions: none"}}) {
    auto v = jordan_classify(g, tau, c.a1, c.a2, c.lambda);
    t.expect(v.max_size == c.size && v.exact == c.exact, c.name);
  }
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(3);
  bool all = true;
  all &= report(1, 5, criterion1);
  all &= report(2, 10, criterion2);
  all &= report(3, 1, criterion3);
  all &= report(4, 5, criterion4);
  all &= report(5, 30, criterion5);
  all &= report(6, 60, criterion6);
  all &= report(7, 30, criterion7);
  all &= report(8, 10, criterion8);
  all &= report(9, 1, criterion9);
  std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << "\n";
  return all ? 0 : 1;
}
