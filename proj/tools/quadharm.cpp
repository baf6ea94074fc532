// Command-line front end: solve / decompose / verify / bench.
//
// Exit codes: 0 success, 2 parse or input error, 3 verification failure,
// 4 float-mode ill-conditioning.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quadharm/bench.hpp"
#include "quadharm/fischer.hpp"
#include "quadharm/parse.hpp"
#include "quadharm/serialize.hpp"
#include "quadharm/verify.hpp"

using namespace quadharm;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitIllConditioned = 4;

std::string read_if_file(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

struct Problem {
  Poly<Rational> p;
  NonhyperbolicQuadratic q;
  std::string boundary_text;
  std::string surface_text;
};

Problem load_problem(const std::string& boundary, const std::string& surface, std::size_t dim) {
  const std::string surface_text = read_if_file(surface);
  NonhyperbolicQuadratic q = parse_surface(surface_text, dim);
  Poly<Rational> p = parse_polynomial(boundary, dim);
  const std::size_t n = std::max({q.dim(), p.dim(), dim});
  return {p.lifted(n), q.lifted(n), boundary, surface_text};
}

struct SolveArgs {
  std::string boundary;
  std::string surface;
  std::string mode = "exact";
  std::string format = "text";
  bool verify = false;
  bool oracle = false;
  bool show_f = false;
  bool parallel = false;
  std::size_t dim = 0;
};

template <typename S>
int run_solve(const Problem& prob, const SolveArgs& args) {
  const Poly<S> p = convert<S>(prob.p);
  SolveOptions opts;
  opts.parallel = args.parallel;

  const auto t0 = std::chrono::steady_clock::now();
  FischerDecomposition<S> dec = solve_dirichlet(p, prob.q, opts);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  SolutionDocument<S> doc;
  doc.n = prob.q.dim();
  doc.boundary = prob.boundary_text;
  doc.surface = to_string(prob.q.to_polynomial<Rational>());
  doc.surface_kind = to_string(classify(prob.q));
  doc.decomposition = dec;
  doc.timing_ms = ms;

  if (!is_nondegenerate_zero_set(prob.q)) {
    std::cerr << "warning: the zero set of the surface may be empty or degenerate\n";
  }

  if (args.verify || args.oracle) {
    auto report = verify_solution(p, prob.q, dec);
    if (args.oracle) {
      const auto ref = oracle_L_matrix(prob.p, prob.q);
      if constexpr (ScalarTraits<S>::exact) {
        report.oracle_match = ref.h == dec.h && ref.f == dec.f;
      } else {
        double worst = 0.0, scale = 1.0;
        for (const auto& [e, c] : (convert<S>(ref.h) - dec.h).terms()) worst = std::max(worst, std::fabs(c));
        for (const auto& [e, c] : ref.h.terms()) scale = std::max(scale, std::fabs(c.get_d()));
        report.oracle_match = worst / scale <= kFloatResidualTolerance;
      }
    }
    doc.report = report;
  }

  if (args.format == "json") {
    std::cout << to_json(doc).dump(2) << '\n';
  } else {
    std::cout << "surface: " << doc.surface << " (" << doc.surface_kind << ")\n";
    std::cout << "h = " << to_string(dec.h) << '\n';
    if (args.show_f) std::cout << "f = " << to_string(dec.f) << '\n';
    if (doc.report) {
      std::cout << "verify: harmonic=" << (doc.report->harmonic_ok ? "yes" : "no")
                << " residual_zero=" << (doc.report->residual_ok ? "yes" : "no");
      if (doc.report->oracle_match) {
        std::cout << " oracle_match=" << (*doc.report->oracle_match ? "yes" : "no");
      }
      std::cout << '\n';
      for (const auto& note : doc.report->notes) std::cout << "note: " << note << '\n';
    }
  }
  return doc.report && !doc.report->ok() ? kExitVerify : 0;
}

int cmd_solve(const SolveArgs& args) {
  const Problem prob = load_problem(args.boundary, args.surface, args.dim);
  if (args.mode == "float") return run_solve<double>(prob, args);
  return run_solve<Rational>(prob, args);
}

struct VerifyArgs {
  std::string boundary;
  std::string surface;
  std::string solution;
  std::string h;
  std::string f = "0";
  std::size_t dim = 0;
};

int cmd_verify(const VerifyArgs& args) {
  Problem prob = load_problem(args.boundary, args.surface, args.dim);
  std::size_t n = prob.q.dim();
  FischerDecomposition<Rational> dec;
  if (!args.solution.empty()) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_if_file(args.solution));
      dec = decomposition_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("solution document: ") + e.what(), 0);
    }
  } else {
    dec.h = parse_polynomial(args.h, n);
    dec.f = parse_polynomial(args.f, n);
  }
  n = std::max({n, dec.h.dim(), dec.f.dim()});
  prob.p = prob.p.lifted(n);
  prob.q = prob.q.lifted(n);
  dec.h = dec.h.lifted(n);
  dec.f = dec.f.lifted(n);

  const auto report = verify_solution(prob.p, prob.q, dec);
  std::cout << "harmonic: " << (report.harmonic_ok ? "yes" : "no") << '\n';
  std::cout << "residual_zero: " << (report.residual_ok ? "yes" : "no") << '\n';
  if (!report.residual_ok) std::cout << "residual = " << to_string(report.residual) << '\n';
  for (const auto& note : report.notes) std::cout << "note: " << note << '\n';
  return report.ok() ? 0 : kExitVerify;
}

struct BenchArgs {
  std::size_t dim = 3;
  unsigned degree = 4;
  std::string surface;
  std::string kind = "dense";
  std::string format = "text";
  std::string mode = "exact";
  bool compare_full = false;
  bool parallel = false;
  int repetitions = 5;
};

int cmd_bench(const BenchArgs& args) {
  NonhyperbolicQuadratic q = [&] {
    if (!args.surface.empty()) return parse_surface(read_if_file(args.surface), args.dim).lifted(args.dim);
    std::vector<Rational> a, c(args.dim, Rational(0));
    for (std::size_t j = 0; j < args.dim; ++j) a.emplace_back(static_cast<long>(j + 2));
    return make_quadric(std::move(a), std::move(c), Rational(-1));
  }();
  const BoundaryKind kind = args.kind == "monomial" ? BoundaryKind::Monomial : BoundaryKind::Dense;
  const Poly<Rational> p = make_boundary(kind, q.dim(), args.degree + 2);

  BenchOptions opts;
  opts.repetitions = args.repetitions;
  opts.compare_full = args.compare_full;
  opts.parallel = args.parallel;
  opts.exact = args.mode != "float";
  opts.kind = to_string(kind);
  const BenchRecord rec = run_comparison(p, q, opts);

  if (args.format == "csv") {
    std::cout << csv_header() << '\n' << to_csv_row(rec) << '\n';
  } else {
    std::cout << "boundary: " << to_string(p) << '\n';
    std::cout << to_text(rec);
  }
  return 0;
}

void add_solve_options(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("--boundary", args.boundary, "boundary polynomial, e.g. \"x1^4*x2^3\"")->required();
  cmd->add_option("--surface", args.surface,
                  "surface polynomial, JSON {\"a\":[..],\"c\":[..],\"d\":..}, or a file holding either")
      ->required();
  cmd->add_option("--mode", args.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--format", args.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--verify", args.verify, "check harmonicity and the residual p - h - q f");
  cmd->add_flag("--oracle", args.oracle, "also solve via the L-operator matrix and compare");
  cmd->add_flag("--show-f", args.show_f, "print the cofactor f");
  cmd->add_flag("--parallel", args.parallel, "solve parity classes concurrently");
  cmd->add_option("--dim", args.dim, "raise the dimension n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact harmonic extension of polynomial data from nonhyperbolic quadratic surfaces"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "harmonic h equal to the boundary polynomial on {q = 0}");
  add_solve_options(solve, solve_args);

  SolveArgs decompose_args;
  decompose_args.show_f = true;
  auto* decompose = app.add_subcommand("decompose", "alias of solve --show-f");
  add_solve_options(decompose, decompose_args);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a candidate (h, f) against p = h + q f, Δh = 0");
  verify->add_option("--boundary", verify_args.boundary)->required();
  verify->add_option("--surface", verify_args.surface)->required();
  auto* sol = verify->add_option("--solution", verify_args.solution, "JSON document from solve --format json");
  auto* hopt = verify->add_option("--harmonic", verify_args.h, "candidate harmonic part");
  verify->add_option("--cofactor", verify_args.f, "candidate cofactor (default 0)");
  verify->add_option("--dim", verify_args.dim);
  sol->excludes(hopt);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "partitioned vs full system census and timings");
  bench->add_option("--dim", bench_args.dim, "dimension n")->check(CLI::Range(2, 32));
  bench->add_option("--degree", bench_args.degree, "order m of the top-level unknowns (boundary degree m+2)");
  bench->add_option("--surface", bench_args.surface, "default: sum (j+1) x_j^2 - 1");
  bench->add_option("--boundary-kind", bench_args.kind)->check(CLI::IsMember({"monomial", "dense"}));
  bench->add_option("--format", bench_args.format)->check(CLI::IsMember({"text", "csv"}));
  bench->add_option("--mode", bench_args.mode)->check(CLI::IsMember({"exact", "float"}));
  bench->add_option("--repetitions", bench_args.repetitions)->check(CLI::PositiveNumber);
  bench->add_flag("--compare-full", bench_args.compare_full, "also time the unpartitioned system");
  bench->add_flag("--parallel", bench_args.parallel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*decompose) return cmd_solve(decompose_args);
    if (*verify) {
      if (verify_args.solution.empty() && verify_args.h.empty()) {
        std::cerr << "error: verify needs --solution or --harmonic\n";
        return kExitParse;
      }
      return cmd_verify(verify_args);
    }
    if (*bench) return cmd_bench(bench_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IllConditioned& e) {
    std::cerr << "ill-conditioned: " << e.what() << '\n';
    return kExitIllConditioned;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
