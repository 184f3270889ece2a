#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fdzeros/asymptotics.hpp"
#include "fdzeros/debruijn.hpp"
#include "fdzeros/fd_operator.hpp"
#include "fdzeros/harness.hpp"
#include "fdzeros/json_io.hpp"
#include "fdzeros/rootfind.hpp"
#include "fdzeros/walsh.hpp"

namespace fdzeros::cli {

namespace {

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Json read_json(const std::string& path) {
    last_source_ = path;
    std::string text;
    if (path == "-") {
      if (stdin_used_) throw ParseError(path, "standard input can be read only once");
      stdin_used_ = true;
      std::ostringstream buf;
      buf << in_.rdbuf();
      text = buf.str();
    } else {
      std::ifstream f(path);
      if (!f) throw ParseError(path, "cannot open file");
      std::ostringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    }
    return parse_json_text(text, path);
  }

  Polynomial read_poly(const std::string& path) { return polynomial_from_json(read_json(path)); }
  FDOperator read_op(const std::string& path) { return operator_from_json(read_json(path)); }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }
  const std::string& last_source() const { return last_source_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
  std::string last_source_;
};

struct ThetaArg {
  std::optional<double> radians;
  std::optional<double> pi_multiple;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--theta", radians, "angle in radians");
    auto* b = cmd->add_option("--theta-pi", pi_multiple, "angle as a multiple q of pi");
    a->excludes(b);
  }

  double value() const {
    if (radians) return *radians;
    if (pi_multiple) return *pi_multiple * std::numbers::pi;
    throw ParseError("--theta", "one of --theta or --theta-pi is required");
  }
};

Json image_json(const Polynomial& image, double tol) {
  Json j{{"image", to_json(image)}};
  if (image.degree() && *image.degree() >= 1) {
    const RootSet rs = roots(image);
    j["roots"] = to_json(rs);
    j["realness"] = to_json(classify_real(rs, tol));
  } else {
    j["roots"] = to_json(RootSet{});
    j["realness"] = nullptr;
  }
  return j;
}

void warn_theta(double theta, std::ostream& err) {
  if (near_degenerate(theta))
    err << "warning: |sin theta| is below 1e-6; leading coefficients nearly cancel\n";
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-difference operators on polynomials: zero location, mesh and asymptotics", "fdzeros"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Io io(in, out);

  double tol = kDefaultRealTol;
  std::string op_path, p_path, q_path;
  int frame = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Check the four preserver conditions of an operator");
  analyze_cmd->add_option("op", op_path, "operator JSON file or -")->required();
  analyze_cmd->add_option("--tol", tol, "realness / modulus tolerance")->check(CLI::PositiveNumber);

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a polynomial");
  apply_cmd->add_option("op", op_path, "operator JSON file or -")->required();
  apply_cmd->add_option("poly", p_path, "polynomial JSON file or -")->required();
  apply_cmd->add_option("--tol", tol, "realness tolerance")->check(CLI::PositiveNumber);

  ThetaArg tb_theta;
  double h = 1.0;
  auto* tb_cmd = app.add_subcommand("tb", "Apply the two-point operator T_{theta,h}");
  tb_cmd->add_option("poly", p_path, "polynomial JSON file or -")->required();
  tb_theta.attach(tb_cmd);
  tb_cmd->add_option("--h", h, "shift h > 0")->required()->check(CLI::PositiveNumber);
  tb_cmd->add_option("--tol", tol, "realness tolerance")->check(CLI::PositiveNumber);

  ThetaArg zeros_theta;
  int n = 0;
  auto* zeros_cmd = app.add_subcommand("zeros", "Closed-form zeros of Q_n(x, theta)");
  zeros_cmd->add_option("--n", n, "degree n >= 0")->required()->check(CLI::NonNegativeNumber);
  zeros_theta.attach(zeros_cmd);
  zeros_cmd->add_option("--h", h, "scale h > 0 for the cross-check")->check(CLI::PositiveNumber);

  auto* mesh_cmd = app.add_subcommand("mesh", "Minimal gap between consecutive real roots");
  mesh_cmd->add_option("poly", p_path, "polynomial JSON file or -")->required();
  mesh_cmd->add_option("--tol", tol, "realness tolerance")->check(CLI::PositiveNumber);

  auto* walsh_cmd = app.add_subcommand("walsh", "Walsh convolution of two polynomials in a degree-n frame");
  walsh_cmd->add_option("p", p_path, "polynomial JSON file or -")->required();
  walsh_cmd->add_option("q", q_path, "polynomial JSON file or -")->required();
  walsh_cmd->add_option("--frame", frame, "frame degree n")->required()->check(CLI::NonNegativeNumber);

  double apolar_tol = 1e-8;
  auto* apolar_cmd = app.add_subcommand("apolar", "Apolarity test in a degree-n frame");
  apolar_cmd->add_option("p", p_path, "polynomial JSON file or -")->required();
  apolar_cmd->add_option("q", q_path, "polynomial JSON file or -")->required();
  apolar_cmd->add_option("--frame", frame, "frame degree n")->required()->check(CLI::NonNegativeNumber);
  apolar_cmd->add_option("--tol", apolar_tol, "relative tolerance on the pairing")->check(CLI::PositiveNumber);

  ThetaArg asym_theta;
  SweepConfig sweep;
  std::string summary_path;
  bool no_floor = false;
  auto* asym_cmd = app.add_subcommand("asymptotics", "Residuals of the large-h zero expansion over an h-grid");
  asym_cmd->add_option("poly", p_path, "polynomial JSON file or -")->required();
  asym_theta.attach(asym_cmd);
  asym_cmd->add_option("--h-min", sweep.h_min, "smallest h")->check(CLI::PositiveNumber);
  asym_cmd->add_option("--h-max", sweep.h_max, "largest h")->check(CLI::PositiveNumber);
  asym_cmd->add_option("--steps", sweep.steps, "grid points")->check(CLI::PositiveNumber);
  asym_cmd->add_option("--order", sweep.order, "expansion order")->check(CLI::Range(0, 2));
  asym_cmd->add_option("--summary", summary_path, "write summary JSON to this path (- for stdout after the CSV)");
  asym_cmd->add_flag("--no-floor", no_floor, "allow h-min below the matching floor");

  WitnessBudget budget;
  std::optional<double> strip_b;
  auto* witness_cmd = app.add_subcommand("witness", "Search for an input whose image breaks real-rootedness");
  witness_cmd->add_option("op", op_path, "operator JSON file or -")->required();
  witness_cmd->add_option("--max-degree", budget.max_degree, "largest input degree")->check(CLI::PositiveNumber);
  witness_cmd->add_option("--strip", strip_b, "search for strip violations of |Im z| <= b")->check(CLI::PositiveNumber);
  witness_cmd->add_option("--tol", tol, "realness tolerance")->check(CLI::PositiveNumber);

  SuiteConfig suite;
  std::string replay_path;
  bool broken = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the seeded property suite");
  verify_cmd->add_option("--seed", suite.seed, "master seed");
  verify_cmd->add_option("--trials", suite.trials, "trials per property")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--degree-max", suite.degree_max, "largest random degree")->check(CLI::Range(2, 40));
  verify_cmd->add_option("--tol", suite.tol_real, "realness tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--replay", replay_path, "re-run one failure record (JSON file or -)");
  verify_cmd->add_flag("--inject-broken-operator", broken, "self-test: run a non-preserver as a preserver");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*analyze_cmd) {
      io.emit(to_json(analyze(io.read_op(op_path), tol)));
    } else if (*apply_cmd) {
      const FDOperator op = io.read_op(op_path);
      io.emit(image_json(apply(op, io.read_poly(p_path)), tol));
    } else if (*tb_cmd) {
      const double theta = tb_theta.value();
      warn_theta(theta, err);
      io.emit(image_json(apply_tb(DeBruijnOp(theta, h), io.read_poly(p_path)), tol));
    } else if (*zeros_cmd) {
      const double theta = zeros_theta.value();
      warn_theta(theta, err);
      const CotangentZeros z = qn_zeros(n, theta);
      Json j = to_json(z);
      j["check"] = to_json(check_zeros(z, h));
      io.emit(j);
    } else if (*mesh_cmd) {
      out << g17(mesh(roots(io.read_poly(p_path)), tol)) << '\n';
    } else if (*walsh_cmd) {
      const Polynomial p = io.read_poly(p_path);
      io.emit(to_json(walsh_convolve(p, io.read_poly(q_path), frame)));
    } else if (*apolar_cmd) {
      const Polynomial p = io.read_poly(p_path);
      io.emit(to_json(apolarity(p, io.read_poly(q_path), frame, apolar_tol)));
    } else if (*asym_cmd) {
      const double theta = asym_theta.value();
      warn_theta(theta, err);
      sweep.enforce_floor = !no_floor;
      const AsymptoticReport rep = residual_sweep(io.read_poly(p_path), theta, sweep);
      write_csv(out, rep);
      if (summary_path == "-") {
        io.emit(summary_json(rep));
      } else if (!summary_path.empty()) {
        std::ofstream f(summary_path);
        if (!f) throw ParseError("--summary", "cannot write " + summary_path);
        f << summary_json(rep).dump(2) << '\n';
      }
    } else if (*witness_cmd) {
      budget.strip_b = strip_b;
      budget.tol = tol;
      const auto w = witness_search(io.read_op(op_path), budget);
      if (w)
        io.emit(to_json(*w));
      else
        out << "inconclusive\n";
    } else if (*verify_cmd) {
      if (broken) suite.fault = Fault::kBrokenOperator;
      validate(suite);
      if (!replay_path.empty()) {
        const TrialOutcome o = replay(io.read_json(replay_path), suite);
        io.emit(Json{{"failed", o.failed},
                     {"violation", std::isfinite(o.violation) ? Json(o.violation) : Json(nullptr)},
                     {"instance", o.instance}});
        return o.failed ? kPropertyFailure : kOk;
      }
      const SuiteReport report = run_suite(suite);
      io.emit(to_json(report));
      return report.passed() ? kOk : kPropertyFailure;
    }
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const ParseError& e) {
    err << "error: ";
    if (!io.last_source().empty() && e.field() != io.last_source()) err << "in " << io.last_source() << ": ";
    err << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace fdzeros::cli
