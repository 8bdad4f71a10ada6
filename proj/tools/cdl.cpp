// cdl: exact experiments with weighted composition operators on the
// one-circuit graph over Z+ and their Cauchy duals.
//
// Exit codes: 0 success/pass, 1 a mathematical check failed, 2 input error.

#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cdl/family.hpp"
#include "cdl/io.hpp"
#include "cdl/moments.hpp"
#include "cdl/oracle.hpp"
#include "cdl/weights.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Options {
  bool decimal = false;
  std::string backend;  // resolved in main
  double tolerance = 1e-10;
};

std::string render(const cdl::Rat& v, const Options& opt) {
  return opt.decimal ? cdl::to_decimal(v) : v.str();
}

cdl::Rat parse_rat_flag(const std::string& text, const char* flag) {
  try {
    return cdl::Rat::parse(text);
  } catch (const cdl::DomainError& e) {
    throw cdl::DomainError(std::string("--") + flag + ": " + e.what());
  }
}

int wco_describe(const std::string& path, std::size_t depth, const Options& opt) {
  const cdl::SquaredWeights w = cdl::io::read_weight_spec(path);
  const cdl::OperatorReport r = cdl::operator_report(w, depth);
  std::cout << "alpha=" << render(w.alpha(), opt) << "\n";
  std::cout << "norm_sq=" << render(r.norm_sq, opt) << " lower_sq=" << render(r.lower_bound_sq, opt)
            << " bounded=" << (r.bounded ? "true" : "false")
            << " cyclic_sufficient=" << (r.cyclic_sufficient ? "true" : "false") << "\n";
  std::size_t nonzero = 0;
  std::optional<std::size_t> first;
  for (std::size_t n = 0; n < r.two_isometry_residuals.size(); ++n) {
    if (r.two_isometry_residuals[n].is_zero()) continue;
    ++nonzero;
    if (!first) first = n;
  }
  if (nonzero == 0) {
    std::cout << "residuals: all zero (depth " << depth << ")\n";
  } else {
    std::cout << "residuals: " << nonzero << " nonzero (depth " << depth << "), first at n=" << *first
              << " value=" << render(r.two_isometry_residuals[*first], opt) << "\n";
  }
  std::cout << "tail: " << (r.tail_certified ? "2-isometric by construction" : "not certified") << "\n";
  std::cout << "two_isometry=" << (r.two_isometric() ? "true" : "false") << "\n";
  return kOk;
}

int wco_dual(const std::string& path, std::size_t depth, const Options& opt) {
  const cdl::SquaredWeights w = cdl::io::read_weight_spec(path);
  if (!cdl::operator_report(w, 2).bounded_below()) {
    std::cout << "not bounded below: the Cauchy dual does not exist\n";
    return kCheckFailed;
  }
  const cdl::SquaredWeights d = cdl::dual_weights(w);
  std::cout << cdl::io::format_weight_spec(d);
  for (std::size_t n = 0; n <= depth; ++n) std::cout << "# sq'(" << n << ") = " << render(d[n], opt) << "\n";
  return kOk;
}

template <typename Scalar>
int report_verdict(const cdl::MomentVerdict<Scalar>& v) {
  std::cout << v.line() << "\n";
  return v.pass ? kOk : kCheckFailed;
}

int moments_check(const std::string& file, const std::string& from_dual, std::size_t fiber, std::size_t horizon,
                  const std::string& mode, long depth, std::optional<long> cap, const Options& opt) {
  if (file.empty() == from_dual.empty()) {
    throw cdl::DomainError("give exactly one of a sequence file or --from-dual <weight spec>");
  }
  const cdl::ExactSequence seq =
      file.empty() ? cdl::oracle::hsequence(cdl::dual_weights(cdl::io::read_weight_spec(from_dual)), fiber, horizon)
                   : cdl::io::read_sequence(file);
  const cdl::Tolerance tol{opt.tolerance};
  std::optional<Eigen::Index> j_cap;
  if (cap) j_cap = *cap;
  if (mode == "hausdorff") {
    if (opt.backend == "float") return report_verdict(cdl::hausdorff_test(cdl::to_float(seq), depth, tol, j_cap));
    return report_verdict(cdl::hausdorff_test(seq, depth, tol, j_cap));
  }
  if (opt.backend == "float") return report_verdict(cdl::stieltjes_test(cdl::to_float(seq), depth, tol));
  return report_verdict(cdl::stieltjes_test(seq, depth, tol));
}

int family_taylor(std::size_t m, unsigned order, bool coefficients, const Options& opt) {
  const auto d = cdl::family::d_taylor(m, order);
  for (unsigned l = 0; l <= order; ++l) {
    const cdl::Rat v = coefficients ? d[l] / cdl::factorial(l) : d[l];
    std::cout << (l ? " " : "") << render(v, opt);
  }
  std::cout << "\n";
  return kOk;
}

int family_scan(std::size_t m, const cdl::Rat& x_max, std::size_t steps, const Options& opt) {
  const auto scan = cdl::family::sign_scan(m, x_max, steps);
  std::cout << "m=" << m << " x_max=" << render(x_max, opt) << " steps=" << steps << "\n";
  std::cout << "pattern=" << scan.pattern() << "\n";
  if (scan.negative_prefix_end) {
    std::cout << "negative_prefix=(0, " << render(*scan.negative_prefix_end, opt) << "]\n";
  } else {
    std::cout << "negative_prefix=none\n";
  }
  if (scan.crossing) {
    std::cout << "crossing=[" << render(scan.crossing->lo, opt) << ", " << render(scan.crossing->hi, opt) << "]\n";
  } else {
    std::cout << "crossing=none\n";
  }
  return kOk;
}

int family_verdict(const cdl::Rat& x, std::size_t depth, std::size_t horizon, std::size_t iso_depth,
                   const Options& opt) {
  const auto v = cdl::family::counterexample_verdict(x, depth, horizon, iso_depth);
  const auto& r = v.report;
  std::cout << "x=" << render(x, opt) << "\n";
  std::cout << "bounded=" << (r.bounded ? "true" : "false") << " norm_sq=" << render(r.norm_sq, opt)
            << " cyclic_sufficient=" << (r.cyclic_sufficient ? "true" : "false")
            << " two_isometry=" << (r.two_isometric() ? "true" : "false") << " (residuals 0.." << iso_depth
            << (r.residuals_zero() ? " zero" : " nonzero") << ")\n";
  std::cout << "dual_moments:";
  for (Eigen::Index n = 0; n <= v.moments.last_index(); ++n) std::cout << " " << render(v.moments[n], opt);
  std::cout << "\n";
  std::cout << "hausdorff: " << v.hausdorff.line() << "\n";
  std::cout << "cross_check: closed_form=" << (v.closed_form_agrees ? "agree" : "DISAGREE")
            << " oracle=" << (v.oracle_agrees ? "agree" : "DISAGREE") << " (n<=" << horizon << ")\n";
  std::cout << "verdict: " << (v.confirmed() ? "counterexample confirmed" : "not confirmed") << "\n";
  return v.confirmed() ? kOk : kCheckFailed;
}

int family_figure(const cdl::Rat& x_max, std::size_t steps, const std::string& out, bool exact) {
  const auto table = cdl::family::figure_table({4, 5, 6}, x_max, steps);
  if (out.empty() || out == "-") {
    cdl::io::write_figure_csv(std::cout, table, exact);
    return kOk;
  }
  std::ofstream os(out);
  if (!os) throw cdl::DomainError("cannot write '" + out + "'");
  cdl::io::write_figure_csv(os, table, exact);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Cauchy-dual experiments for weighted composition operators on l^2(Z+)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  const char* env_backend = std::getenv("CDL_BACKEND");
  opt.backend = env_backend ? env_backend : "exact";
  app.add_flag("--decimal", opt.decimal, "Print rationals as 12-digit decimals");
  app.add_option("--backend", opt.backend, "exact or float (default from CDL_BACKEND, else exact)");
  app.add_option("--tol", opt.tolerance, "Float-path tolerance (ignored by the exact backend)");

  std::function<int()> action;

  // wco
  auto* wco = app.add_subcommand("wco", "Inspect a weight spec")->require_subcommand(1);
  std::string spec_path;
  std::size_t wco_depth = 10;
  auto* describe = wco->add_subcommand("describe", "Norm, lower bound, cyclicity, 2-isometry residuals");
  describe->add_option("spec", spec_path, "Weight spec file")->required();
  describe->add_option("--depth", wco_depth, "Residual depth N (>= 2)");
  describe->callback([&] { action = [&] { return wco_describe(spec_path, wco_depth, opt); }; });
  auto* dual = wco->add_subcommand("dual", "Weights of the Cauchy dual");
  dual->add_option("spec", spec_path, "Weight spec file")->required();
  dual->add_option("--depth", wco_depth, "Print sq'(0..N)");
  dual->callback([&] { action = [&] { return wco_dual(spec_path, wco_depth, opt); }; });

  // moments
  auto* moments = app.add_subcommand("moments", "Moment-sequence tests")->require_subcommand(1);
  auto* check = moments->add_subcommand("check", "Hausdorff or Stieltjes necessary conditions");
  std::string seq_path, from_dual, mode = "hausdorff";
  std::size_t fiber = 0, horizon = 12;
  long m_depth = 6;
  std::optional<long> cap;
  check->add_option("sequence", seq_path, "Sequence file (one value per line)");
  check->add_option("--from-dual", from_dual, "Use ||C'^n e_k||^2 of the Cauchy dual of this weight spec");
  check->add_option("--fiber", fiber, "Basis index k for --from-dual");
  check->add_option("--horizon", horizon, "Last power n for --from-dual");
  check->add_option("--mode", mode, "hausdorff or stieltjes")->check(CLI::IsMember({"hausdorff", "stieltjes"}));
  check->add_option("--depth", m_depth, "Hausdorff depth M or Hankel order K");
  check->add_option("--cap", cap, "Largest shift j tested (Hausdorff)");
  check->callback([&] { action = [&] { return moments_check(seq_path, from_dual, fiber, horizon, mode, m_depth, cap, opt); }; });

  // family
  auto* fam = app.add_subcommand("family", "The parametric counterexample family")->require_subcommand(1);
  std::size_t m = 5, steps = 100, depth = 5, iso_depth = 50;
  unsigned order = 4;
  bool coefficients = false, exact_csv = false;
  std::string x_text, xmax_text, out;
  auto* taylor = fam->add_subcommand("taylor", "D_m^(l)(0) for l = 0..order");
  taylor->add_option("--m", m, "Index m")->required();
  taylor->add_option("--order", order, "Highest derivative order");
  taylor->add_flag("--coefficients", coefficients, "Print Taylor coefficients D_m^(l)(0)/l! instead");
  taylor->callback([&] { action = [&] { return family_taylor(m, order, coefficients, opt); }; });
  auto* scan = fam->add_subcommand("scan", "Exact sign scan of D_m on (0, xmax]");
  scan->add_option("--m", m, "Index m")->required();
  scan->add_option("--xmax", xmax_text, "Right end of the scan (default 1/10)");
  scan->add_option("--steps", steps, "Number of samples");
  scan->callback([&] {
    action = [&] {
      return family_scan(m, xmax_text.empty() ? cdl::Rat(1, 10) : parse_rat_flag(xmax_text, "xmax"), steps, opt);
    };
  });
  auto* verdict = fam->add_subcommand("verdict", "Counterexample pipeline at parameter x");
  verdict->add_option("--x", x_text, "Parameter x > 0")->required();
  verdict->add_option("--depth", depth, "Hausdorff depth M");
  verdict->add_option("--horizon", horizon, "Moment prefix length N");
  verdict->add_option("--isometry-depth", iso_depth, "2-isometry residual depth");
  verdict->callback([&] { action = [&] { return family_verdict(parse_rat_flag(x_text, "x"), depth, horizon, iso_depth, opt); }; });
  auto* figure = fam->add_subcommand("figure", "CSV of D4, D5, D6 on (0, xmax]");
  figure->add_option("--xmax", xmax_text, "Right end (default 3/5)");
  figure->add_option("--steps", steps, "Number of samples (default 120)");
  figure->add_option("--out", out, "Output path (default stdout)");
  figure->add_flag("--exact", exact_csv, "Write exact p/q values");
  figure->callback([&] {
    action = [&] {
      const std::size_t n = figure->count("--steps") ? steps : 120;
      return family_figure(xmax_text.empty() ? cdl::Rat(3, 5) : parse_rat_flag(xmax_text, "xmax"), n, out, exact_csv);
    };
  });

  try {
    app.parse(argc, argv);
    if (opt.backend != "exact" && opt.backend != "float") {
      throw cdl::DomainError("backend must be exact or float, got '" + opt.backend + "'");
    }
    if (!(opt.tolerance > 0)) throw cdl::DomainError("--tol must be positive");
    return action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
