#pragma once

// ruelle-bands command line front end.  `run` is the whole program; the
// executable only forwards argv to it, so tests can drive it in-process.
//
// Exit codes: 0 success, 2 usage, 3 domain error, 4 selftest failure.

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ruelle/errors.hpp"
#include "ruelle/exactnum.hpp"
#include "ruelle/json.hpp"
#include "ruelle/reps.hpp"
#include "ruelle/rootdata.hpp"
#include "ruelle/selftest.hpp"
#include "ruelle/spectrum.hpp"

namespace ruelle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitSelftest = 4;

inline constexpr std::size_t kMaxGridPoints = 100000;

/// Malformed or unsupported command line input (exit 2).
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

enum class Normalization { Paper, CurvatureMinusOne };

// ---------------------------------------------------------------- parsing

inline std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  auto [p, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || begin == s.data() + s.size())
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

inline RankOneGroup make_group(const std::string& family, int n) {
  try {
    return RankOneGroup(parse_family(family), n);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

/// sh:<m> | hw:[a,b,...] | circ:<s> | triv
inline IrrepSpec parse_irrep(std::string_view spec, const CompactGroupData& g) {
  std::string s = trim(spec);
  if (s == "triv") return trivial_rep(g);
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("unknown representation spec '" + s + "'");
  std::string kind = s.substr(0, colon);
  std::string body = trim(std::string_view(s).substr(colon + 1));
  if (kind == "sh") return spherical_harmonic(g, parse_int(body));
  if (kind == "circ") return circle_character(g, parse_int(body));
  if (kind == "hw") {
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw ParseError("hw expects [a,b,...], got '" + body + "'");
    std::vector<std::int64_t> hw;
    std::string inner = body.substr(1, body.size() - 2);
    if (!trim(inner).empty()) {
      std::stringstream ss(inner);
      std::string item;
      while (std::getline(ss, item, ',')) {
        Rational q = Rational::parse(trim(item));
        if (!q.is_integer())
          throw UnsupportedWeight("half-integral (spin) weight " + q.pretty() + " is not supported");
        hw.push_back(q.num());
      }
    }
    return make_irrep(g, std::move(hw));
  }
  throw ParseError("unknown representation kind '" + kind + "'");
}

/// Constants available to lambda expressions, in the active normalization.
struct LambdaContext {
  QuadExt rho;
  QuadExt alpha0;
  bool alpha0_unit = false;  // plain numbers are multiples of |alpha0|
};

/// Sum of terms: [+-] ( rational [*atom] | atom ), atom = rho | alpha0 | sqrt(d).
inline QuadExt parse_real_expr(std::string_view text, const LambdaContext& ctx) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw ParseError("empty lambda component");
  std::vector<std::string> terms;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if ((s[i] == '+' || s[i] == '-') && i > start && depth == 0) {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));

  QuadExt total;
  bool symbolic = false;
  for (std::string t : terms) {
    int sign = 1;
    while (!t.empty() && (t[0] == '+' || t[0] == '-')) {
      if (t[0] == '-') sign = -sign;
      t.erase(0, 1);
    }
    if (t.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
    std::string coeff = t;
    std::string atom;
    if (auto star = t.find('*'); star != std::string::npos) {
      coeff = t.substr(0, star);
      atom = t.substr(star + 1);
    } else if (!t.empty() && std::isalpha(static_cast<unsigned char>(t[0]))) {
      coeff = "1";
      atom = t;
    }
    QuadExt value(Rational::parse(coeff));
    if (!atom.empty()) {
      symbolic = true;
      if (atom == "rho") {
        value *= ctx.rho;
      } else if (atom == "alpha0") {
        value *= ctx.alpha0;
      } else if (atom.rfind("sqrt(", 0) == 0 && atom.back() == ')') {
        std::int64_t d = parse_int(atom.substr(5, atom.size() - 6));
        if (d < 1) throw ParseError("sqrt needs a positive integer");
        value *= QuadExt::surd(Rational(1), d);
      } else {
        throw ParseError("unknown symbol '" + atom + "'");
      }
    }
    total += sign < 0 ? -value : value;
  }
  if (ctx.alpha0_unit) {
    if (symbolic) throw ParseError("symbolic terms cannot be combined with --unit alpha0");
    total *= ctx.alpha0;
  }
  return total;
}

/// "re" or "re,im".
inline ComplexQuad parse_lambda(std::string_view text, const LambdaContext& ctx) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return ComplexQuad(parse_real_expr(text, ctx));
  return ComplexQuad(parse_real_expr(text.substr(0, comma), ctx), parse_real_expr(text.substr(comma + 1), ctx));
}

struct Grid {
  Rational start, stop, step;
};

inline Grid parse_grid(std::string_view text) {
  std::vector<std::string> parts;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(trim(item));
  if (parts.size() != 3) throw ParseError("grid expects start:stop:step");
  Grid g{Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2])};
  if (g.step.sign() <= 0) throw ParseError("grid step must be > 0");
  return g;
}

inline std::vector<Rational> grid_points(const Grid& g) {
  std::vector<Rational> pts;
  for (Rational x = g.start; x <= g.stop; x += g.step) {
    pts.push_back(x);
    if (pts.size() > kMaxGridPoints) throw ParseError("grid has more than " + std::to_string(kMaxGridPoints) + " points");
  }
  return pts;
}

// ---------------------------------------------------------------- rendering

inline std::string format15(double x) {
  std::ostringstream os;
  os << std::setprecision(15) << x;
  return os.str();
}

inline bool is_dual(const json::Json& j) { return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("approx"); }

inline std::string render_scalar(const json::Json& j, bool float_display) {
  if (is_dual(j)) {
    const auto& ex = j.at("exact");
    if (float_display) {
      const auto& ap = j.at("approx");
      if (ap.is_number()) return format15(ap.get<double>());
      double re = ap.at("re").get<double>();
      double im = ap.at("im").get<double>();
      if (im == 0.0) return format15(re);
      return format15(re) + (im < 0 ? " - " : " + ") + format15(std::abs(im)) + "*i";
    }
    if (ex.is_string()) return Rational::parse(ex.get<std::string>()).pretty();
    if (ex.contains("re")) return json::complex_from_json(ex).pretty();
    return json::quad_from_json(ex).pretty();
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline void render_table(const json::Json& j, const std::string& path, bool float_display, std::ostream& out) {
  if (is_dual(j) || !(j.is_object() || j.is_array())) {
    out << std::left << std::setw(34) << path << " " << render_scalar(j, float_display) << "\n";
    return;
  }
  if (j.is_array()) {
    if (j.empty()) out << std::left << std::setw(34) << path << " []\n";
    for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], path + "[" + std::to_string(i) + "]", float_display, out);
    return;
  }
  for (const auto& [k, v] : j.items()) render_table(v, path.empty() ? k : path + "." + k, float_display, out);
}

struct OutputOptions {
  std::string format = "json";
  bool float_display = false;
};

inline void emit(const json::Json& j, const OutputOptions& o, std::ostream& out) {
  if (o.format == "table")
    render_table(j, "", o.float_display, out);
  else
    out << json::dump(j);
}

// ---------------------------------------------------------------- commands

struct GroupArgs {
  std::string family = "so";
  int n = 2;
};

inline json::Json cmd_describe_group(const GroupArgs& ga, int bands, const OutputOptions& o) {
  RankOneGroup g = make_group(ga.family, ga.n);
  if (bands < 0) throw UsageError("--bands must be >= 0");
  return json::root_data_report(g, band_lines(g, bands), {o.float_display});
}

inline json::Json cmd_bands(const GroupArgs& ga, int k_max, const OutputOptions& o) {
  RankOneGroup g = make_group(ga.family, ga.n);
  if (k_max < 0) throw UsageError("--k-max must be >= 0");
  auto b = band_lines(g, k_max);
  json::Json lines = json::Json::array();
  for (const auto& l : b.lines) lines.push_back(json::dual(l, {o.float_display}));
  return json::Json{{"group", json::to_json(g)},
                    {"norm_rho", json::dual(b.norm_rho, {o.float_display})},
                    {"norm_alpha0", json::dual(b.norm_alpha0, {o.float_display})},
                    {"lines", lines},
                    {"note", b.note}};
}

inline json::Json cmd_branch(const GroupArgs& ga, const std::string& sigma_spec, const BranchOptions& bo) {
  RankOneGroup g = make_group(ga.family, ga.n);
  IrrepSpec sigma = parse_irrep(sigma_spec, maximal_compact(g));
  auto b = branch_to_M(g, sigma, bo);
  json::Json j = json::to_json(b);
  j["group"] = json::to_json(g);
  j["paper_n1_convention"] = bo.paper_n1_convention;
  return j;
}

inline json::Json cmd_check_assumptions(const GroupArgs& ga, const std::string& sigma_spec,
                                        const std::string& tau_spec, const BranchOptions& bo) {
  RankOneGroup g = make_group(ga.family, ga.n);
  IrrepSpec sigma = parse_irrep(sigma_spec, maximal_compact(g));
  IrrepSpec tau = parse_irrep(tau_spec, centralizer_m(g));
  int mult = multiplicity(g, sigma, tau, bo);
  return json::Json{{"group", json::to_json(g)},
                    {"sigma", json::to_json(sigma)},
                    {"tau", json::to_json(tau)},
                    {"multiplicity", mult},
                    {"assumption1", mult == 1},
                    {"assumption2", check_assumption2(tau)},
                    {"weyl_image", json::to_json(weyl_action(tau))}};
}

struct LambdaArgs {
  std::vector<std::string> values;
  std::string grid;
  bool critical = false;
  std::string unit = "plain";
  std::string normalization = "paper";
};

inline Normalization parse_normalization(const std::string& s) {
  if (s == "paper") return Normalization::Paper;
  if (s == "curvature_minus_one") return Normalization::CurvatureMinusOne;
  throw UsageError("unknown normalization '" + s + "'");
}

/// Lambdas in the active normalization plus the matching context.
inline std::vector<ComplexQuad> collect_lambdas(const RankOneGroup& g, const LambdaArgs& la, Normalization norm) {
  auto rd = restricted_root_data(g);
  LambdaContext ctx{rd.norm_rho, rd.norm_alpha0, false};
  if (la.unit == "alpha0")
    ctx.alpha0_unit = true;
  else if (la.unit != "plain")
    throw UsageError("unknown unit '" + la.unit + "'");
  if (norm == Normalization::CurvatureMinusOne) {
    QuadExt s = curvature_scale(g);
    ctx.rho *= s;
    ctx.alpha0 *= s;
  }
  if (la.values.empty() == la.grid.empty()) throw UsageError("give either --lambda or --grid");
  if (la.critical && la.grid.empty()) throw UsageError("--critical needs --grid");
  std::vector<ComplexQuad> out;
  for (const auto& v : la.values) out.push_back(parse_lambda(v, ctx));
  if (!la.grid.empty()) {
    for (const auto& x : grid_points(parse_grid(la.grid))) {
      QuadExt v = ctx.alpha0_unit ? QuadExt(x) * ctx.alpha0 : QuadExt(x);
      out.push_back(la.critical ? ComplexQuad(-ctx.rho, v) : ComplexQuad(v));
    }
  }
  return out;
}

inline ComplexQuad to_native_lambda(const RankOneGroup& g, const ComplexQuad& lambda, Normalization norm) {
  if (norm == Normalization::Paper) return lambda;
  return normalization_revert(g, lambda, ComplexQuad()).first;
}

/// Evaluates f on every item, fanning out over hardware threads; results keep
/// the input order and the first failure (in input order) is rethrown.
template <class T, class F>
std::vector<json::Json> ordered_map(const std::vector<T>& items, F f) {
  std::vector<json::Json> results(items.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  if (workers == 1 || items.size() < 64) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = f(items[i]);
    return results;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (items.size() + workers - 1) / workers;
  for (std::size_t b = 0; b < items.size(); b += chunk) {
    jobs.push_back(std::async(std::launch::async, [&, b] {
      for (std::size_t i = b; i < std::min(items.size(), b + chunk); ++i) results[i] = f(items[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return results;
}

inline json::Json cmd_correspond(const GroupArgs& ga, const std::string& sigma_spec, const std::string& tau_spec,
                                 const LambdaArgs& la, const BranchOptions& bo, const OutputOptions& o) {
  RankOneGroup g = make_group(ga.family, ga.n);
  Normalization norm = parse_normalization(la.normalization);
  IrrepSpec sigma = parse_irrep(sigma_spec, maximal_compact(g));
  IrrepSpec tau = parse_irrep(tau_spec, centralizer_m(g));
  auto lambdas = collect_lambdas(g, la, norm);
  weight_term(g, sigma, tau, bo);  // fail fast on incompatible pairs
  auto reports = ordered_map(lambdas, [&](const ComplexQuad& active) {
    SpectralParameter lambda{to_native_lambda(g, active, norm)};
    CorrespondenceReport r = correspondence_report(g, sigma, tau, lambda, bo);
    json::ReportView view{&r, r.lambda.value, r.mu, r.weight_term, la.normalization};
    if (norm == Normalization::CurvatureMinusOne) {
      auto [l, m] = normalization_convert(g, r.lambda.value, r.mu);
      view.lambda = l;
      view.mu = m;
      view.weight_term = Rational(2 * g.n) * r.weight_term;
    }
    return json::to_json(view, {o.float_display});
  });
  return json::Json(reports);
}

struct JordanArgs {
  std::string sigma;
  std::string tau;
  std::string lambda;
  std::string assumption1;  // "", "true", "false"
  std::string assumption2;
};

inline bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError("expected true or false, got '" + s + "'");
}

inline json::Json cmd_jordan(const GroupArgs& ga, const JordanArgs& ja, const BranchOptions& bo) {
  RankOneGroup g = make_group(ga.family, ga.n);
  auto rd = restricted_root_data(g);
  ComplexQuad lambda = parse_lambda(ja.lambda, {rd.norm_rho, rd.norm_alpha0, false});
  json::Json j{{"group", json::to_json(g)}, {"lambda", json::dual(lambda)}};

  std::optional<IrrepSpec> tau;
  if (!ja.tau.empty()) {
    tau = parse_irrep(ja.tau, centralizer_m(g));
    j["tau"] = json::to_json(*tau);
  }
  bool a1 = false;
  if (!ja.assumption1.empty()) {
    a1 = parse_bool(ja.assumption1);
  } else {
    if (ja.sigma.empty() || !tau) throw UsageError("give --sigma and --tau, or --assumption1");
    IrrepSpec sigma = parse_irrep(ja.sigma, maximal_compact(g));
    a1 = check_assumption1(g, sigma, *tau, bo);
    j["sigma"] = json::to_json(sigma);
  }
  bool a2 = false;
  if (!ja.assumption2.empty()) {
    a2 = parse_bool(ja.assumption2);
  } else {
    if (!tau) throw UsageError("give --tau, or --assumption2");
    a2 = check_assumption2(*tau);
  }
  IrrepSpec tau_or_trivial = tau ? *tau : IrrepSpec{};
  j["assumption1"] = a1;
  j["assumption2"] = a2;
  j["at_minus_rho"] = lambda == ComplexQuad(-rd.norm_rho);
  j["verdict"] = json::to_json(jordan_classify(g, tau_or_trivial, a1, a2, SpectralParameter{lambda}));
  return j;
}

inline selftest::Profile profile_from(const std::string& explicit_profile) {
  std::string p = explicit_profile;
  if (p.empty()) {
    const char* env = std::getenv("RUELLE_BANDS_PROFILE");
    p = env ? env : "fast";
  }
  if (p == "fast") return selftest::Profile::Fast;
  if (p == "full") return selftest::Profile::Full;
  throw UsageError("unknown selftest profile '" + p + "'");
}

inline json::Json cmd_selftest(const std::string& profile, bool inject_fault, bool& passed) {
  selftest::SelftestOptions opts{profile_from(profile), inject_fault};
  auto checks = selftest::run(opts);
  passed = selftest::all_passed(checks);
  json::Json list = json::Json::array();
  for (const auto& c : checks)
    list.push_back({{"check_name", c.check_name}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
  return json::Json{{"profile", opts.profile == selftest::Profile::Fast ? "fast" : "full"},
                    {"passed", passed},
                    {"checks", list}};
}

// ---------------------------------------------------------------- entry

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact first-band resonance and Laplace eigenvalue data for rank-one symmetric spaces",
               "ruelle-bands"};
  app.require_subcommand(1);
  app.fallthrough();
  OutputOptions o;
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--float", o.float_display, "show numbers as 15 significant digit decimals");

  GroupArgs ga;
  BranchOptions bo;
  auto add_group = [&](CLI::App* sub, bool with_family) {
    if (with_family) sub->add_option("--family", ga.family, "so or su");
    sub->add_option("--n", ga.n, "family parameter n >= 1");
  };
  auto add_n1 = [&](CLI::App* sub) {
    sub->add_flag("--paper-n1-convention", bo.paper_n1_convention,
                  "for n = 1 pair sigma_m with the trivial M-type only when m = 0");
  };

  int bands = 3;
  auto* describe = app.add_subcommand("describe-group", "restricted-root data and band lines");
  add_group(describe, true);
  describe->add_option("--bands", bands, "number of band lines beyond the first");

  int k_max = 3;
  auto* bands_cmd = app.add_subcommand("bands", "band lines Re(lambda) = -|rho| - k |alpha0|");
  add_group(bands_cmd, true);
  bands_cmd->add_option("--k-max", k_max, "last k");

  std::string sigma, tau;
  auto* branch = app.add_subcommand("branch", "restriction of a K-type to M");
  add_group(branch, false);
  add_n1(branch);
  branch->add_option("--sigma", sigma, "K-type: sh:<m> | hw:[..] | circ:<s> | triv")->required();

  auto* check = app.add_subcommand("check-assumptions", "multiplicity and Weyl invariance checks");
  add_group(check, false);
  add_n1(check);
  check->add_option("--sigma", sigma)->required();
  check->add_option("--tau", tau)->required();

  LambdaArgs la;
  auto* correspond = app.add_subcommand("correspond", "Laplace eigenvalue for first-band resonances");
  add_group(correspond, true);
  add_n1(correspond);
  correspond->add_option("--sigma", sigma)->required();
  correspond->add_option("--tau", tau)->required();
  correspond->add_option("--lambda", la.values, "re[,im]; terms like -1/2, 3*sqrt(2), rho, 2*alpha0");
  correspond->add_option("--grid", la.grid, "start:stop:step (rationals) along the real axis");
  correspond->add_flag("--critical", la.critical, "put grid points on -|rho| + i t");
  correspond->add_option("--unit", la.unit, "plain or alpha0")->check(CLI::IsMember({"plain", "alpha0"}));
  correspond->add_option("--normalization", la.normalization, "paper or curvature_minus_one");

  JordanArgs ja;
  auto* jordan = app.add_subcommand("jordan", "first-band Jordan block verdict");
  add_group(jordan, true);
  add_n1(jordan);
  jordan->add_option("--sigma", ja.sigma);
  jordan->add_option("--tau", ja.tau);
  jordan->add_option("--lambda", ja.lambda)->required();
  jordan->add_option("--assumption1", ja.assumption1, "override: true or false");
  jordan->add_option("--assumption2", ja.assumption2, "override: true or false");

  std::string profile;
  bool inject_fault = false;
  auto* self = app.add_subcommand("selftest", "cross-check the tables against explicit matrix algebras");
  self->add_option("--profile", profile, "fast or full (default: $RUELLE_BANDS_PROFILE or fast)");
  self->add_flag("--inject-fault", inject_fault, "corrupt one structure constant (negative control)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    json::Json result;
    if (*describe) {
      result = cmd_describe_group(ga, bands, o);
    } else if (*bands_cmd) {
      result = cmd_bands(ga, k_max, o);
    } else if (*branch) {
      result = cmd_branch(ga, sigma, bo);
    } else if (*check) {
      result = cmd_check_assumptions(ga, sigma, tau, bo);
    } else if (*correspond) {
      result = cmd_correspond(ga, sigma, tau, la, bo, o);
    } else if (*jordan) {
      result = cmd_jordan(ga, ja, bo);
    } else if (*self) {
      bool passed = false;
      result = cmd_selftest(profile, inject_fault, passed);
      emit(result, o, out);
      if (!passed) {
        for (const auto& c : result.at("checks"))
          if (c.at("status") == "fail")
            err << "FAIL " << c.at("check_name").get<std::string>() << ": " << c.at("witness").get<std::string>()
                << "\n";
        return kExitSelftest;
      }
      return kExitOk;
    }
    emit(result, o, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace ruelle::cli
