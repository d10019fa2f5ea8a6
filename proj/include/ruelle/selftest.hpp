#pragma once

// Cross-module verification gates: the closed-form tables of rootdata and
// reps against the explicit matrix algebras of liealg.

#include <functional>
#include <string>
#include <vector>

#include "ruelle/iwasawa.hpp"
#include "ruelle/liealg.hpp"
#include "ruelle/reps.hpp"
#include "ruelle/rootdata.hpp"

namespace ruelle::selftest {

enum class Profile { Fast, Full };

struct CheckRecord {
  std::string check_name;
  bool passed = false;
  std::string witness;
};

struct SelftestOptions {
  Profile profile = Profile::Fast;
  bool inject_fault = false;  // corrupt one structure constant (negative control)
};

inline int max_n(Profile p) { return p == Profile::Fast ? 3 : 5; }

namespace detail {

inline std::string tag(const RankOneGroup& g) { return family_token(g.family) + "(n=" + std::to_string(g.n) + ")"; }

inline CheckRecord from(const std::string& name, const liealg::CheckResult& r) { return {name, r.ok, r.witness}; }

inline CheckRecord compare(const std::string& name, const Rational& got, const Rational& want) {
  if (got == want) return {name, true, ""};
  return {name, false, "oracle " + got.pretty() + " != table " + want.pretty()};
}

inline CheckRecord guarded(const std::string& name, const std::function<CheckRecord()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

inline void structure_checks(const liealg::MatrixLieAlgebra& alg, std::vector<CheckRecord>& out) {
  const std::string t = tag(alg.group);
  out.push_back(from("antisymmetry " + t, liealg::verify_antisymmetry(alg)));
  out.push_back(from("jacobi " + t, liealg::verify_jacobi(alg)));
  out.push_back(from("cartan_decomposition " + t, liealg::verify_cartan_decomposition(alg)));
  out.push_back(from("horocycle_brackets " + t, liealg::verify_horocycle_brackets(alg)));
}

inline void table_checks(const liealg::MatrixLieAlgebra& alg, std::vector<CheckRecord>& out) {
  const std::string t = tag(alg.group);
  const std::string grading = "restricted_grading " + t;
  out.push_back(guarded(grading, [&] {
    auto dims = liealg::restricted_grading(alg);
    auto rd = restricted_root_data(alg.group);
    if (dims.alpha != rd.m_alpha || dims.two_alpha != rd.m_2alpha || dims.minus_alpha != rd.m_alpha ||
        dims.minus_two_alpha != rd.m_2alpha || dims.a != 1)
      return CheckRecord{grading, false,
                         "oracle (" + std::to_string(dims.alpha) + "," + std::to_string(dims.two_alpha) +
                             ") != table (" + std::to_string(rd.m_alpha) + "," + std::to_string(rd.m_2alpha) + ")"};
    if (2 * rd.m_alpha + 2 * rd.m_2alpha + dims.m + 1 != alg.dim())
      return CheckRecord{grading, false, "dim g mismatch"};
    return CheckRecord{grading, true, ""};
  }));
  out.push_back(guarded("norm_alpha0_sq " + t, [&] {
    return compare("norm_alpha0_sq " + t, liealg::oracle_norm_alpha0_sq(alg),
                   restricted_root_data(alg.group).norm_alpha0_sq);
  }));
}

inline void casimir_checks(const liealg::MatrixLieAlgebra& alg, Profile p, std::vector<CheckRecord>& out) {
  const RankOneGroup& g = alg.group;
  const std::string t = tag(g);
  using liealg::RepKind;
  using liealg::Subgroup;
  auto K = maximal_compact(g);
  auto M = centralizer_m(g);
  auto gate = [&](const std::string& name, RepKind rep, Subgroup sub, const IrrepSpec& irrep) {
    out.push_back(guarded(name, [&] {
      return compare(name, liealg::casimir_scalar(alg, rep, sub), casimir_invariant(irrep));
    }));
  };
  gate("casimir defining K " + t, RepKind::Defining, Subgroup::K, spherical_harmonic(K, 1));
  if (g.n >= 2) gate("casimir defining M " + t, RepKind::Defining, Subgroup::M, spherical_harmonic(M, 1));
  if (p == Profile::Full) {
    gate("casimir sym2 K " + t, RepKind::Sym2Traceless, Subgroup::K, spherical_harmonic(K, 2));
    if (g.n >= 2) gate("casimir sym2 M " + t, RepKind::Sym2Traceless, Subgroup::M, spherical_harmonic(M, 2));
  }
}

inline void weyl_checks(const liealg::MatrixLieAlgebra& alg, std::vector<CheckRecord>& out) {
  const std::string name = "weyl_action " + tag(alg.group);
  out.push_back(guarded(name, [&] {
    auto M = centralizer_m(alg.group);
    // every dominant weight with entries in [-2, 2]
    std::vector<std::int64_t> w(static_cast<std::size_t>(M.rank));
    std::string bad;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
      if (!bad.empty()) return;
      if (j == w.size()) {
        if (!is_dominant(M, w)) return;
        auto tau = make_irrep(M, w);
        auto want = weyl_action(tau).highest_weight;
        auto got = liealg::oracle_weyl_action(alg, w);
        if (got != want) bad = tau.pretty();
        return;
      }
      for (std::int64_t v = -2; v <= 2; ++v) {
        w[j] = v;
        rec(j + 1);
      }
    };
    rec(0);
    return CheckRecord{name, bad.empty(), bad.empty() ? "" : "mismatch at " + bad};
  }));
}

inline void iwasawa_checks(const std::shared_ptr<const liealg::MatrixLieAlgebra>& alg, int samples,
                           std::vector<CheckRecord>& out) {
  const std::string name = "iwasawa_round_trip " + tag(alg->group);
  out.push_back(guarded(name, [&] {
    iwasawa::FactorSampler s(alg, 7);
    for (int i = 0; i < samples; ++i) {
      double t = s.random_t();
      iwasawa::Matrix g = s.random_k() * iwasawa::exp_h0(*alg, t) * s.random_n_minus();
      auto f = iwasawa::iwasawa_opposite(*alg, g);
      if (std::abs(f.t - t) > 1e-9) return CheckRecord{name, false, "recovered t differs from " + std::to_string(t)};
    }
    return CheckRecord{name, true, ""};
  }));
}

}  // namespace detail

inline std::vector<CheckRecord> run(const SelftestOptions& opts) {
  std::vector<CheckRecord> out;
  const int top = max_n(opts.profile);
  for (auto fam : {Family::RealHyperbolic, Family::ComplexHyperbolic}) {
    for (int n = 1; n <= top; ++n) {
      RankOneGroup g(fam, n);
      auto handle = liealg::build_algebra(g);
      if (opts.inject_fault && n == 1 && fam == Family::RealHyperbolic) {
        auto bad = liealg::perturb_structure(*handle, 0, 1, 0, Rational(1, 7));
        detail::structure_checks(bad, out);
      } else {
        detail::structure_checks(*handle, out);
      }
      detail::table_checks(*handle, out);
      if (fam == Family::RealHyperbolic) {
        detail::casimir_checks(*handle, opts.profile, out);
        detail::weyl_checks(*handle, out);
      }
      detail::iwasawa_checks(handle, opts.profile == Profile::Fast ? 5 : 50, out);
    }
  }
  return out;
}

inline bool all_passed(const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace ruelle::selftest
