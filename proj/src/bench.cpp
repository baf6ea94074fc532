#include "quadharm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "quadharm/fischer.hpp"
#include "quadharm/verify.hpp"

namespace quadharm {

namespace {

mpz_class binomial(unsigned long top, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), top, k);
  return r;
}

mpz_class pow2(unsigned long e) {
  mpz_class r = 1;
  r <<= e;
  return r;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string fmt_rational(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

template <typename S>
struct Paths {
  FischerDecomposition<S> partitioned;
  std::optional<FischerDecomposition<S>> full;
};

template <typename S>
void check_agreement(const FischerDecomposition<S>& a, const FischerDecomposition<S>& b) {
  if constexpr (ScalarTraits<S>::exact) {
    if (!(a.h == b.h) || !(a.f == b.f)) {
      throw std::logic_error("run_comparison: partitioned and full solutions differ");
    }
  } else {
    auto worst = [](const Poly<S>& x, const Poly<S>& y) {
      double diff = 0.0, scale = 1.0;
      for (const auto& [e, c] : (x - y).terms()) diff = std::max(diff, std::fabs(c));
      for (const auto& [e, c] : x.terms()) scale = std::max(scale, std::fabs(c));
      return diff / scale;
    };
    if (worst(a.h, b.h) > 1e-9 || worst(a.f, b.f) > 1e-9) {
      throw std::logic_error("run_comparison: partitioned and full float solutions differ beyond 1e-9");
    }
  }
}

template <typename S>
void measure(const Poly<Rational>& p_exact, const NonhyperbolicQuadratic& q, const BenchOptions& opts,
             BenchRecord& rec) {
  const Poly<S> p = convert<S>(p_exact);
  const int reps = std::max(1, opts.repetitions);

  SolveTrace trace;
  FischerDecomposition<S> part;
  std::vector<double> part_times;
  for (int r = 0; r < reps; ++r) {
    SolveOptions so;
    so.parallel = opts.parallel;
    so.trace = r == 0 ? &trace : nullptr;
    part_times.push_back(time_ms([&] { part = solve_dirichlet(p, q, so); }));
  }
  rec.measured_partitioned_ms = median(part_times);
  for (const auto& level : trace.levels) {
    rec.assembly_ms += level.assembly_ms;
    rec.solve_ms += level.solve_ms;
    rec.nonzero_rhs_per_level.push_back(level.nonzero_rhs_classes);
  }
  if (!trace.levels.empty()) rec.nonzero_rhs_classes = trace.levels.front().nonzero_rhs_classes;

  if (opts.compare_full) {
    FischerDecomposition<S> full;
    std::vector<double> full_times;
    for (int r = 0; r < reps; ++r) {
      full_times.push_back(time_ms([&] { full = solve_dirichlet_full(p, q); }));
    }
    rec.measured_full_ms = median(full_times);
    check_agreement(part, full);
  }
}

}  // namespace

Rational predicted_full_ops(unsigned m, unsigned n) {
  const mpz_class s = binomial(m + n - 1, m);
  Rational r(2 * s * s * s, 3);
  r.canonicalize();
  return r;
}

Rational predicted_partitioned_ops(unsigned m, unsigned n) {
  const mpz_class s = binomial(m + n - 1, m);
  const mpz_class classes = pow2(n - 1);
  Rational r(classes * 2 * s * s * s, 3 * classes * classes * classes);
  r.canonicalize();
  return r;
}

Rational predicted_monomial_ops(unsigned m, unsigned n) {
  Rational r = predicted_partitioned_ops(m, n) / Rational(pow2(n - 1));
  return r;
}

std::vector<std::size_t> class_census(std::size_t n, unsigned m) {
  std::map<MultiIndex, std::size_t, GradedLex> counts;
  for (const auto& alpha : multi_indices_of_order(n, m)) ++counts[alpha.parity()];
  std::vector<std::size_t> sizes;
  for (const auto& [key, count] : counts) sizes.push_back(count);
  return sizes;
}

std::string to_string(BoundaryKind kind) {
  return kind == BoundaryKind::Monomial ? "monomial" : "dense";
}

Poly<Rational> make_boundary(BoundaryKind kind, std::size_t n, unsigned degree, std::uint32_t seed) {
  if (kind == BoundaryKind::Monomial) {
    MultiIndex e(n);
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = static_cast<unsigned>(degree / n + (j < degree % n ? 1 : 0));
    }
    return Poly<Rational>::monomial(e, Rational(1));
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(1, 9);
  Poly<Rational> p(n);
  for (const auto& alpha : multi_indices_of_order(n, degree)) p.add_term(alpha, Rational(coeff(rng)));
  return p;
}

BenchRecord run_comparison(const Poly<Rational>& p, const NonhyperbolicQuadratic& q,
                           const BenchOptions& opts) {
  BenchRecord rec;
  rec.n = q.dim();
  rec.m = p.degree() >= 2 ? static_cast<unsigned>(p.degree() - 2) : 0;
  rec.kind = opts.kind;
  rec.mode = opts.exact ? "exact" : "float";
  rec.class_sizes = class_census(rec.n, rec.m);
  rec.class_count = rec.class_sizes.size();
  rec.predicted_full_ops = predicted_full_ops(rec.m, static_cast<unsigned>(rec.n));
  rec.predicted_partitioned_ops = predicted_partitioned_ops(rec.m, static_cast<unsigned>(rec.n));
  rec.predicted_ratio = rec.predicted_full_ops / rec.predicted_partitioned_ops;

  if (opts.exact) {
    measure<Rational>(p, q, opts, rec);
  } else {
    measure<double>(p, q, opts, rec);
  }
  return rec;
}

std::string csv_header() {
  return "n,m,kind,classes,full_ms,part_ms,ratio_pred,ratio_meas,nonzero_rhs_classes";
}

std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.m << ',' << r.kind << ',' << r.class_count << ',';
  if (r.measured_full_ms) os << fmt_double(*r.measured_full_ms);
  os << ',' << fmt_double(r.measured_partitioned_ms) << ',' << fmt_rational(r.predicted_ratio) << ',';
  if (r.measured_full_ms && r.measured_partitioned_ms > 0.0) {
    os << fmt_double(*r.measured_full_ms / r.measured_partitioned_ms);
  }
  os << ',' << r.nonzero_rhs_classes;
  return os.str();
}

std::string to_text(const BenchRecord& r) {
  std::ostringstream os;
  os << "n = " << r.n << ", m = " << r.m << ", boundary = " << r.kind << ", mode = " << r.mode << '\n';
  os << "classes: " << r.class_count << ", sizes {";
  for (std::size_t i = 0; i < r.class_sizes.size(); ++i) os << (i ? "," : "") << r.class_sizes[i];
  os << "} of " << count_of_order(r.n, r.m) << " multi-indices\n";
  os << "predicted ops: full " << fmt_rational(r.predicted_full_ops) << ", partitioned "
     << fmt_rational(r.predicted_partitioned_ops) << ", ratio " << fmt_rational(r.predicted_ratio)
     << '\n';
  os << "monomial factor (q1 = 0): " << (pow2(3 * r.n - 3)).get_str() << '\n';
  os << "partitioned: " << fmt_double(r.measured_partitioned_ms) << " ms (assembly "
     << fmt_double(r.assembly_ms) << " ms, solve " << fmt_double(r.solve_ms) << " ms)\n";
  if (r.measured_full_ms) {
    os << "full:        " << fmt_double(*r.measured_full_ms) << " ms, measured ratio "
       << fmt_double(*r.measured_full_ms / std::max(r.measured_partitioned_ms, 1e-9)) << '\n';
  }
  os << "nonzero-rhs classes per level: [";
  for (std::size_t i = 0; i < r.nonzero_rhs_per_level.size(); ++i) {
    os << (i ? "," : "") << r.nonzero_rhs_per_level[i];
  }
  os << "]\n";
  return os.str();
}

}  // namespace quadharm
