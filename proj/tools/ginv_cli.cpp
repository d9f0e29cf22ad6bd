// ginv: compute, verify and fuzz m-weak group inverses from the command line.
//
// Exit codes: 0 success / all checks pass, 1 some check failed, 2 bad input.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ginv/classical.hpp"
#include "ginv/eqsolve.hpp"
#include "ginv/fuzz.hpp"
#include "ginv/io.hpp"
#include "ginv/oracle.hpp"
#include "ginv/shiftlab.hpp"
#include "ginv/wgi.hpp"

namespace {

using nlohmann::json;
using namespace ginv;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input, candidate, b, y, output;
  std::string inverse = "mwgi";
  std::string route = "core-ep";
  unsigned m = 1;
  std::optional<double> tol_rank, tol_eq, tol_nil;
  std::size_t window = 8;
  std::optional<std::size_t> dim, index;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  bool pretty = false;
};

TolerancePolicy tolerances(const Options& o) {
  TolerancePolicy t;
  if (const char* env = std::getenv("GINV_TOL_EQ")) {
    try {
      std::size_t used = 0;
      t.eq_rtol = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw InputError(std::string("GINV_TOL_EQ: not a number: '") + env + "'");
    }
  }
  if (o.tol_rank) t.rank_rtol = *o.tol_rank;
  if (o.tol_eq) t.eq_rtol = *o.tol_eq;
  if (o.tol_nil) t.nil_atol = *o.tol_nil;
  try {
    t.validate();
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  return t;
}

ComplexMatrix load_matrix(const std::string& path, const char* flag) {
  if (path.empty()) throw InputError(std::string("missing required option ") + flag);
  const auto j = io::read_file(path);
  try {
    return io::matrix_from_json(j);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

exact::RationalMatrix load_rational(const std::string& path) {
  const auto j = io::read_file(path);
  try {
    return io::rational_from_json(j);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void require_square(const ComplexMatrix& a, const std::string& what) {
  if (!a.square())
    throw InputError(what + " must be square, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

std::string fmt_residual(double r) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << r;
  return os.str();
}

std::string report_table(const VerificationReport& r) {
  std::size_t width = 5;
  for (const auto& [name, _] : r.checks) width = std::max(width, name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(10) << "residual"
     << "  pass\n";
  for (const auto& [name, c] : r.checks)
    os << std::left << std::setw(static_cast<int>(width)) << name << "  " << std::setw(10) << fmt_residual(c.residual)
       << "  " << (c.pass ? "yes" : "NO") << '\n';
  os << "overall: " << (r.overall ? "pass" : "FAIL") << '\n';
  return os.str();
}

class Sink {
 public:
  explicit Sink(const Options& o) : o_(o) {}
  void emit(const json& j, const std::string& pretty_text) {
    const std::string text = o_.pretty ? pretty_text : j.dump() + "\n";
    if (o_.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(o_.output);
    if (!out) throw InputError(o_.output + ": cannot write file");
    out << text;
  }

 private:
  const Options& o_;
};

int cmd_compute(const Options& o) {
  const auto tol = tolerances(o);
  const auto a = load_matrix(o.input, "--input");
  if (o.inverse != "mp") require_square(a, "--input");
  ComplexMatrix x;
  if (o.inverse == "mp") {
    x = moore_penrose(a, tol);
  } else if (o.inverse == "group") {
    x = group_inverse(a, tol);
  } else if (o.inverse == "drazin") {
    x = drazin(a, tol);
  } else if (o.inverse == "core") {
    x = core_inverse(a, tol);
  } else if (o.inverse == "core-ep") {
    x = core_ep(a, tol);
  } else {
    x = mwgi_by_route(a, o.m, parse_route(o.route), tol);
  }
  Sink(o).emit(io::matrix_to_json(x), to_string(x) + "\n");
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto tol = tolerances(o);
  const auto a = load_matrix(o.input, "--input");
  const auto z = load_matrix(o.candidate, "--candidate");
  require_square(a, "--input");
  if (z.rows() != a.rows() || z.cols() != a.cols()) throw InputError("--candidate shape differs from --input");
  const auto rep = verify_definition(a, z, o.m, tol);
  Sink(o).emit(io::report_to_json(rep), report_table(rep));
  return rep.overall ? kOk : kFailed;
}

int cmd_decompose(const Options& o) {
  const auto tol = tolerances(o);
  const auto a = load_matrix(o.input, "--input");
  require_square(a, "--input");
  const auto d = group_decomposition(a, o.m, tol);
  const auto rep = decomposition_report(a, o.m, d, tol);
  const json j = {{"x", io::matrix_to_json(d.x)}, {"y", io::matrix_to_json(d.y)}, {"report", io::report_to_json(rep)}};
  Sink(o).emit(j, "X =\n" + to_string(d.x) + "\nY =\n" + to_string(d.y) + "\n" + report_table(rep));
  return rep.overall ? kOk : kFailed;
}

int cmd_solve(const Options& o) {
  const auto tol = tolerances(o);
  const auto a = load_matrix(o.input, "--input");
  const auto b = load_matrix(o.b, "--b");
  require_square(a, "--input");
  if (b.rows() != a.rows()) throw InputError("--b must have as many rows as --input");
  const auto y = o.y.empty() ? ComplexMatrix::zero(a.rows(), b.cols()) : load_matrix(o.y, "--y");
  if (y.rows() != a.rows() || y.cols() != b.cols()) throw InputError("--y must have the shape of --b");
  const auto sol = solve_general(a, b, o.m, y, tol);
  VerificationReport rep;
  rep.add_bounded("residual", residual(a, b, o.m, sol.x, tol), tol.eq_rtol);
  const json j = {{"x", io::matrix_to_json(sol.x)}, {"report", io::report_to_json(rep)}};
  Sink(o).emit(j, "X =\n" + to_string(sol.x) + "\n" + report_table(rep));
  return rep.overall ? kOk : kFailed;
}

int cmd_shift(const Options& o) {
  const auto word = o.candidate.empty() ? shift::mwgi_shift(o.m) : shift::parse_word(o.candidate);
  const auto rep = shift::verify_shift_identities(o.m, o.window, word);
  const auto z = shift::to_string(shift::normalize(word));
  const json j = {{"z", z}, {"m", o.m}, {"window", o.window}, {"report", io::report_to_json(rep)}};
  Sink(o).emit(j, z + "\n" + report_table(rep));
  return rep.overall ? kOk : kFailed;
}

void merge_worst(VerificationReport& acc, const VerificationReport& r, const std::string& prefix) {
  for (const auto& [name, c] : r.checks) {
    const auto key = prefix + name;
    auto it = acc.checks.find(key);
    if (it == acc.checks.end()) {
      acc.add(key, c.residual, c.pass);
    } else {
      acc.add(key, std::max(it->second.residual, c.residual), it->second.pass && c.pass);
    }
  }
}

int cmd_fuzz(const Options& o) {
  const auto tol = tolerances(o);
  fuzz::GeneratorConfig cfg;
  if (o.dim && (*o.dim == 0 || *o.dim > 12)) throw InputError("--dim must be in 1..12");
  if (o.dim && o.index && *o.index > *o.dim) throw InputError("--index cannot exceed --dim");
  fuzz::Rng rng(o.seed);
  VerificationReport acc;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const std::size_t n = o.dim ? *o.dim : static_cast<std::size_t>(rng.integer(1, static_cast<long>(cfg.max_dim)));
    const std::size_t k =
        o.index ? std::min(*o.index, n)
                : static_cast<std::size_t>(rng.integer(0, static_cast<long>(std::min(cfg.max_index, n))));
    const auto c = fuzz::make_case(rng, n, k, cfg);
    merge_worst(acc, route_agreement(c.a, o.m, tol), "route:");
    merge_worst(acc, verify_definition(c.a, mwgi(c.a, o.m, tol).z, o.m, tol), "def:");
    merge_worst(acc, decomposition_report(c.a, o.m, group_decomposition(c.a, o.m, tol), tol), "decomp:");
    merge_worst(acc, polar_report(c.a, o.m, polar_idempotent(c.a, o.m, tol), tol), "polar:");
    merge_worst(acc, b_characterization(c.a, o.m, tol), "b:");
    merge_worst(acc, bc_inverse_check(c.a, o.m, tol), "bc:");
    merge_worst(acc, outer_inverse_subspaces(c.a, o.m, tol), "outer:");
    const auto b = fuzz::random_matrix(rng, n, 2);
    const auto y = fuzz::random_matrix(rng, n, 2);
    VerificationReport eq;
    eq.add_bounded("general", residual(c.a, b, o.m, solve_general(c.a, b, o.m, y, tol).x, tol), tol.eq_rtol);
    merge_worst(acc, eq, "solve:");
  }
  const json j = {{"seed", o.seed}, {"trials", o.trials}, {"m", o.m}, {"overall", acc.overall},
                  {"report", io::report_to_json(acc)}};
  Sink(o).emit(j, report_table(acc));
  return acc.overall ? kOk : kFailed;
}

int cmd_certify(const Options& o) {
  if (o.input.empty()) throw InputError("missing required option --input");
  const auto a = load_rational(o.input);
  if (!a.square()) throw InputError("--input must be square");
  VerificationReport rep;
  if (o.candidate.empty()) {
    rep = exact::certify(a, o.m);
  } else {
    const auto z = load_rational(o.candidate);
    if (z.rows() != a.rows() || z.cols() != a.cols()) throw InputError("--candidate shape differs from --input");
    rep = exact::certify(a, o.m, z);
  }
  const json j = {{"z", io::rational_to_json(exact::exact_mwgi(a, o.m))}, {"report", io::report_to_json(rep)}};
  Sink(o).emit(j, report_table(rep));
  return rep.overall ? kOk : kFailed;
}

void add_tolerance_flags(CLI::App* sub, Options& o) {
  sub->add_option("--tol-rank", o.tol_rank, "relative rank threshold");
  sub->add_option("--tol-eq", o.tol_eq, "relative equality tolerance (overrides GINV_TOL_EQ)");
  sub->add_option("--tol-nil", o.tol_nil, "absolute nilpotency/rank floor");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m, "order m >= 1")->check(CLI::PositiveNumber);
  sub->add_option("--output", o.output, "write result here instead of stdout");
  sub->add_flag("--pretty", o.pretty, "human-readable table instead of JSON");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"m-weak group inverse toolkit"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute a generalized inverse");
  compute->add_option("--input", o.input, "matrix JSON")->required();
  compute->add_option("--inverse", o.inverse, "which inverse")
      ->check(CLI::IsMember({"mp", "group", "drazin", "core", "core-ep", "mwgi"}));
  compute->add_option("--route", o.route, "route for --inverse mwgi")
      ->check(CLI::IsMember({"core-ep", "power", "normal", "drazin-solve", "recursive", "core-of-drazin", "core-chain",
                             "regular-lift"}));
  add_common(compute, o);
  add_tolerance_flags(compute, o);

  auto* verify = app.add_subcommand("verify", "check a candidate against the defining equations");
  verify->add_option("--input", o.input, "matrix JSON")->required();
  verify->add_option("--candidate", o.candidate, "candidate inverse JSON")->required();
  add_common(verify, o);
  add_tolerance_flags(verify, o);

  auto* decompose = app.add_subcommand("decompose", "A = X + Y with X group invertible, Y nilpotent");
  decompose->add_option("--input", o.input, "matrix JSON")->required();
  add_common(decompose, o);
  add_tolerance_flags(decompose, o);

  auto* solve = app.add_subcommand("solve", "solve (AA^D)* A^{m+1} X = (AA^D)* A^m B");
  solve->add_option("--input", o.input, "matrix JSON")->required();
  solve->add_option("--b", o.b, "right-hand side B")->required();
  solve->add_option("--y", o.y, "free parameter Y (default zero)");
  add_common(solve, o);
  add_tolerance_flags(solve, o);

  auto* shift_cmd = app.add_subcommand("shift", "exact one-sided shift example");
  shift_cmd->add_option("--window", o.window, "number of basis vectors checked");
  shift_cmd->add_option("--candidate", o.candidate, "shift word such as S3*L2");
  add_common(shift_cmd, o);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "random cross-checks");
  fuzz_cmd->add_option("--dim", o.dim, "fix the dimension");
  fuzz_cmd->add_option("--index", o.index, "fix the constructed index");
  fuzz_cmd->add_option("--trials", o.trials, "number of matrices");
  fuzz_cmd->add_option("--seed", o.seed, "64-bit seed");
  add_common(fuzz_cmd, o);
  add_tolerance_flags(fuzz_cmd, o);

  auto* certify = app.add_subcommand("certify", "exact rational certification");
  certify->add_option("--input", o.input, "rational matrix JSON")->required();
  certify->add_option("--candidate", o.candidate, "rational candidate JSON");
  add_common(certify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ginv: error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*compute) return cmd_compute(o);
    if (*verify) return cmd_verify(o);
    if (*decompose) return cmd_decompose(o);
    if (*solve) return cmd_solve(o);
    if (*shift_cmd) return cmd_shift(o);
    if (*fuzz_cmd) return cmd_fuzz(o);
    if (*certify) return cmd_certify(o);
  } catch (const std::exception& e) {
    // bad files, shape mismatches, matrices outside an inverse's domain
    std::cerr << "ginv: error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
