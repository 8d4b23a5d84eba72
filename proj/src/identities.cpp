#include "qsym/identities.hpp"

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "qsym/errors.hpp"
#include "qsym/lfun.hpp"
#include "qsym/qeuler.hpp"

namespace qsym {

namespace {

using Clock = std::chrono::steady_clock;

void check_parity(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::DomainError, "a and b must be positive");
  if (a % 2 == 0) throw Error(ErrorKind::ParityViolation, "a must be odd, got " + std::to_string(a));
  if (b % 2 == 0) throw Error(ErrorKind::ParityViolation, "b must be odd, got " + std::to_string(b));
}

void check_budget(std::int64_t upper, int r) {
  if (std::pow(static_cast<double>(upper), r) > 1e8) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(upper) + "^" + std::to_string(r) +
                                               " index tuples exceed the enumeration budget");
  }
}

// sum over j in [0, upper)^r of (-1)^{sum j} prod chi(j_l) * by_total[sum j],
// walked with an odometer in lexicographic order (last index fastest).
Complex alternating_tuple_sum(const DirichletCharacter& chi, int r, std::int64_t upper,
                              const std::vector<Complex>& by_total) {
  check_budget(upper, r);
  const std::size_t len = static_cast<std::size_t>(r);
  std::vector<std::int64_t> digits(len, 0);
  std::vector<Complex> values(static_cast<std::size_t>(upper));
  for (std::int64_t j = 0; j < upper; ++j) values[static_cast<std::size_t>(j)] = chi(j);

  std::int64_t total = 0;
  Complex acc{0.0, 0.0};
  while (true) {
    Complex chi_prod{1.0, 0.0};
    for (const auto j : digits) chi_prod *= values[static_cast<std::size_t>(j)];
    if (chi_prod != Complex{0.0, 0.0}) {
      const Complex term = chi_prod * by_total[static_cast<std::size_t>(total)];
      acc += total % 2 == 0 ? term : -term;
    }
    std::size_t pos = len;
    while (pos-- > 0) {
      if (++digits[pos] < upper) {
        ++total;
        break;
      }
      total -= upper - 1;
      digits[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  return acc;
}

std::size_t total_count(int r, std::int64_t upper) {
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(upper - 1) + 1;
}

InstanceParams params_of(const SymmetryInstance& inst) {
  InstanceParams p;
  p.a = inst.a;
  p.b = inst.b;
  p.d = inst.chi.modulus();
  p.chi = inst.chi.label();
  p.r = inst.r;
  p.x = inst.x;
  p.q = inst.ctx.q();
  return p;
}

InstanceParams params_of(const DirichletCharacter& chi, int r, double x, const QContext& ctx) {
  InstanceParams p;
  p.d = chi.modulus();
  p.chi = chi.label();
  p.r = r;
  p.x = x;
  p.q = ctx.q();
  return p;
}

// Shifted argument b x + (b/a) S, rounded to double once.
double shifted_argument(double x, int a, int b, std::int64_t total) {
  return b * x + static_cast<double>(static_cast<std::int64_t>(b) * total) / a;
}

}  // namespace

Complex power_sum(const DirichletCharacter& chi, int r, int n, int i, std::int64_t upper,
                  const QContext& ctx) {
  if (r < 1) throw Error(ErrorKind::DomainError, "order r must be >= 1");
  if (i < 0 || i > n) throw Error(ErrorKind::DomainError, "power sum needs 0 <= i <= n");
  if (upper < 1) throw Error(ErrorKind::DomainError, "upper limit must be >= 1");
  check_budget(upper, r);

  std::vector<Complex> by_total(total_count(r, upper));
  for (std::size_t t = 0; t < by_total.size(); ++t) {
    const double total = static_cast<double>(t);
    by_total[t] = std::pow(ctx.q(), (n - i + 1) * total) * ipow(q_number(total, ctx), i);
  }
  return alternating_tuple_sum(chi, r, upper, by_total);
}

Complex theorem1_side(const SymmetryInstance& inst, int a, int b, const SeriesOptions& opts) {
  check_parity(a, b);
  const std::int64_t upper = inst.chi.modulus() * a;
  check_budget(upper, inst.r);
  const QContext ctx_a = inst.ctx.with_power(a);
  const QContext ctx_b = inst.ctx.with_power(b);
  const LfunEvaluator lfun(inst.chi, inst.r, inst.s, ctx_a, opts, b * inst.x);

  std::vector<Complex> by_total(total_count(inst.r, upper));
  for (std::size_t t = 0; t < by_total.size(); ++t) {
    const auto total = static_cast<std::int64_t>(t);
    by_total[t] = std::pow(inst.ctx.q(), static_cast<double>(b * total)) *
                  lfun(shifted_argument(inst.x, a, b, total));
  }
  const Complex bracket_b_pow_s = std::exp(inst.s * std::log(q_number(b, inst.ctx)));
  return q_bracket_two_pow(inst.r, ctx_b) * bracket_b_pow_s *
         alternating_tuple_sum(inst.chi, inst.r, upper, by_total);
}

Complex theorem2_side(const SymmetryInstance& inst, int a, int b, const SeriesOptions& opts) {
  check_parity(a, b);
  const std::int64_t upper = inst.chi.modulus() * a;
  check_budget(upper, inst.r);
  const QContext ctx_a = inst.ctx.with_power(a);
  const QContext ctx_b = inst.ctx.with_power(b);
  const QEulerEvaluator euler(inst.chi, inst.r, ctx_a, opts, inst.n);

  std::vector<Complex> by_total(total_count(inst.r, upper));
  for (std::size_t t = 0; t < by_total.size(); ++t) {
    const auto total = static_cast<std::int64_t>(t);
    by_total[t] = std::pow(inst.ctx.q(), static_cast<double>(b * total)) *
                  euler(inst.n, shifted_argument(inst.x, a, b, total));
  }
  return q_bracket_two_pow(inst.r, ctx_b) * ipow(q_number(a, inst.ctx), inst.n) *
         alternating_tuple_sum(inst.chi, inst.r, upper, by_total);
}

Complex theorem3_side(const SymmetryInstance& inst, int a, int b, const SeriesOptions& opts) {
  check_parity(a, b);
  const std::int64_t upper = inst.chi.modulus() * a;
  const QContext ctx_a = inst.ctx.with_power(a);
  const QContext ctx_b = inst.ctx.with_power(b);
  const QEulerEvaluator euler(inst.chi, inst.r, ctx_a, opts, inst.n);
  const double bracket_a = q_number(a, inst.ctx);
  const double bracket_b = q_number(b, inst.ctx);

  Complex acc{0.0, 0.0};
  for (int i = 0; i <= inst.n; ++i) {
    const double weight =
        binomial(inst.n, i) * ipow(bracket_a, inst.n - i) * ipow(bracket_b, i);
    acc += weight * euler(inst.n - i, b * inst.x) *
           power_sum(inst.chi, inst.r, inst.n, i, upper, ctx_b);
  }
  return q_bracket_two_pow(inst.r, ctx_b) * acc;
}

namespace {

template <typename Side>
IdentityReport mirrored(IdentityId id, const SymmetryInstance& inst, Side side, double rel_tol) {
  const auto start = Clock::now();
  IdentityReport report;
  report.id = id;
  report.instance = params_of(inst);
  report.lhs = side(inst.a, inst.b);
  report.rhs = side(inst.b, inst.a);
  finalize_relative(report, rel_tol);
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace

IdentityReport theorem1_sides(const SymmetryInstance& inst, const SeriesOptions& opts,
                              double rel_tol) {
  auto side = [&](int a, int b) { return theorem1_side(inst, a, b, opts); };
  IdentityReport report = mirrored(IdentityId::T1, inst, side, rel_tol);
  report.instance.s = inst.s;
  return report;
}

IdentityReport theorem2_sides(const SymmetryInstance& inst, const SeriesOptions& opts,
                              double rel_tol) {
  auto side = [&](int a, int b) { return theorem2_side(inst, a, b, opts); };
  IdentityReport report = mirrored(IdentityId::T2, inst, side, rel_tol);
  report.instance.n = inst.n;
  return report;
}

IdentityReport theorem3_sides(const SymmetryInstance& inst, const SeriesOptions& opts,
                              double rel_tol) {
  auto side = [&](int a, int b) { return theorem3_side(inst, a, b, opts); };
  IdentityReport report = mirrored(IdentityId::T3, inst, side, rel_tol);
  report.instance.n = inst.n;
  return report;
}

namespace {

IdentityReport bridge(IdentityId id, const SymmetryInstance& inst, int a, int b,
                      const SeriesOptions& opts, double rel_tol) {
  const auto start = Clock::now();
  IdentityReport report;
  report.id = id;
  report.instance = params_of(inst);
  report.instance.n = inst.n;
  report.lhs = theorem2_side(inst, a, b, opts);
  report.rhs = theorem3_side(inst, a, b, opts);
  finalize_relative(report, rel_tol);
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace

IdentityReport eq12_bridge(const SymmetryInstance& inst, const SeriesOptions& opts,
                           double rel_tol) {
  return bridge(IdentityId::EQ12, inst, inst.a, inst.b, opts, rel_tol);
}

IdentityReport eq13_bridge(const SymmetryInstance& inst, const SeriesOptions& opts,
                           double rel_tol) {
  return bridge(IdentityId::EQ13, inst, inst.b, inst.a, opts, rel_tol);
}

IdentityReport addition_sides(const DirichletCharacter& chi, int r, int n, double x, double y,
                              const QContext& ctx, const SeriesOptions& opts, double rel_tol) {
  const auto start = Clock::now();
  IdentityReport report;
  report.id = y == 0.0 ? IdentityId::EQ5 : IdentityId::EQ9;
  report.instance = params_of(chi, r, x, ctx);
  report.instance.n = n;
  report.instance.y = y;

  const QEulerEvaluator euler(chi, r, ctx, opts, n);
  report.lhs = qeuler_addition(euler, n, x, y);
  report.rhs = euler(n, x + y);
  if (x == 0.0) {
    finalize_absolute(report, kDegenerateAbsTol);
  } else {
    finalize_relative(report, rel_tol);
  }
  report.elapsed = Clock::now() - start;
  return report;
}

IdentityReport eq15_sides(const DirichletCharacter& chi, int r, int m, int n, double x, double y,
                          const QContext& ctx, const SeriesOptions& opts, double rel_tol) {
  if (m < 0 || n < 0) throw Error(ErrorKind::DomainError, "degrees m, n must be >= 0");
  if (!(x >= 0.0) || !(y >= 0.0)) throw Error(ErrorKind::DomainError, "x, y must be >= 0");
  const auto start = Clock::now();
  IdentityReport report;
  report.id = IdentityId::EQ15;
  report.instance = params_of(chi, r, x, ctx);
  report.instance.m = m;
  report.instance.n = n;
  report.instance.y = y;

  const QEulerEvaluator euler(chi, r, ctx, opts, m + n);
  const double q = ctx.q();
  const double bracket_x = q_number(x, ctx);
  const double bracket_neg_x = q_number(-x, ctx);

  Complex lhs{0.0, 0.0};
  for (int k = 0; k <= m; ++k) {
    const double weight = binomial(m, k) * std::pow(q, k * x) * ipow(bracket_x, m - k);
    lhs += weight * euler(n + k, y);
  }
  Complex rhs{0.0, 0.0};
  for (int k = 0; k <= n; ++k) {
    const double weight = binomial(n, k) * std::pow(q, -k * x) * ipow(bracket_neg_x, n - k);
    rhs += weight * euler(m + k, x + y);
  }
  report.lhs = lhs;
  report.rhs = rhs;
  if (x == 0.0) {
    finalize_absolute(report, kDegenerateAbsTol);
  } else {
    finalize_relative(report, rel_tol);
  }
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace qsym
