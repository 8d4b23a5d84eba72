#include "qsym/qeuler.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qsym/errors.hpp"

namespace qsym {

namespace detail {

Complex qeuler_series(const CharConvSeq& coeffs, const QContext& ctx, int n, double x,
                      std::size_t M) {
  const double q = ctx.q();
  const double qx = std::pow(q, x);
  const double one_minus_q = 1.0 - q;
  Complex acc{0.0, 0.0};
  double qm = 1.0;  // q^m
  for (std::size_t m = 0; m < M; ++m) {
    const Complex& c = coeffs.coeffs[m];
    if (c.real() != 0.0 || c.imag() != 0.0) {
      const double bracket = (1.0 - qm * qx) / one_minus_q;
      const double weight = (m % 2 == 0 ? qm : -qm) * ipow(bracket, n);
      acc += weight * c;
    }
    qm *= q;
  }
  return q_bracket_two_pow(coeffs.r, ctx) * acc;
}

}  // namespace detail

namespace {

void validate(int r, int n, double x) {
  if (r < 1) throw Error(ErrorKind::DomainError, "order r must be >= 1");
  if (n < 0) throw Error(ErrorKind::DomainError, "degree n must be >= 0");
  if (!(x >= 0.0)) throw Error(ErrorKind::DomainError, "argument x must be >= 0");
}

}  // namespace

QEulerSpec make_qeuler_spec(const DirichletCharacter& chi, int r, int n, double x,
                            const QContext& ctx, const SeriesOptions& opts) {
  validate(r, n, x);
  return QEulerSpec{chi, r, n, x, ctx, plan_truncation(ctx, x, n, r, opts)};
}

Complex qeuler_poly(const QEulerSpec& spec) {
  validate(spec.r, spec.n, spec.x);
  const std::size_t M = spec.plan.cutoff;
  const CharConvSeq coeffs = conv_power(spec.chi, spec.r, std::max<std::size_t>(M, 1));
  return detail::qeuler_series(coeffs, spec.ctx, spec.n, spec.x, M);
}

Complex qeuler_poly_naive(const QEulerSpec& spec, std::size_t M) {
  validate(spec.r, spec.n, spec.x);
  if (std::pow(static_cast<double>(M), spec.r) > kEnumerationBudget) {
    throw Error(ErrorKind::BudgetExceeded,
                "naive enumeration of " + std::to_string(M) + "^" + std::to_string(spec.r) +
                    " tuples exceeds budget");
  }
  if (M == 0) return {0.0, 0.0};

  const std::size_t r = static_cast<std::size_t>(spec.r);
  const double q = spec.ctx.q();
  std::vector<std::size_t> digits(r, 0);
  std::size_t total = 0;
  // Neumaier-compensated sums: hundreds of thousands of alternating terms.
  double sum[2] = {0.0, 0.0};
  double carry[2] = {0.0, 0.0};
  auto add = [&](int part, double v) {
    const double t = sum[part] + v;
    carry[part] += std::abs(sum[part]) >= std::abs(v) ? (sum[part] - t) + v : (v - t) + sum[part];
    sum[part] = t;
  };
  while (true) {
    Complex chi_prod{1.0, 0.0};
    for (std::size_t l = 0; l < r; ++l) chi_prod *= spec.chi(static_cast<std::int64_t>(digits[l]));
    if (chi_prod != Complex{0.0, 0.0}) {
      const double sign = total % 2 == 0 ? 1.0 : -1.0;
      const double bracket = q_number(static_cast<double>(total) + spec.x, spec.ctx);
      const Complex term =
          sign * std::pow(q, static_cast<double>(total)) * ipow(bracket, spec.n) * chi_prod;
      add(0, term.real());
      add(1, term.imag());
    }
    // Advance the odometer, carrying whenever the digit sum reaches M.
    std::size_t pos = 0;
    for (; pos < r; ++pos) {
      ++digits[pos];
      ++total;
      if (total < M) break;
      total -= digits[pos];
      digits[pos] = 0;
    }
    if (pos == r) break;
  }
  return q_bracket_two_pow(spec.r, spec.ctx) * Complex{sum[0] + carry[0], sum[1] + carry[1]};
}

QEulerEvaluator::QEulerEvaluator(DirichletCharacter chi, int r, QContext ctx,
                                 SeriesOptions opts, int max_degree)
    : chi_(std::move(chi)), r_(r), ctx_(ctx), opts_(opts), max_degree_(max_degree) {
  validate(r, max_degree, 0.0);
  // x = 0 maximizes the per-term bound, so this cutoff covers every x >= 0.
  const TruncationPlan widest = plan_truncation(ctx_, 0.0, max_degree_, r_, opts_);
  coeffs_ = conv_power(chi_, r_, std::max<std::size_t>(widest.cutoff, 1));
}

TruncationPlan QEulerEvaluator::plan(int n, double x) const {
  validate(r_, n, x);
  if (n > max_degree_) {
    throw Error(ErrorKind::DomainError, "degree " + std::to_string(n) +
                                            " exceeds evaluator max degree " +
                                            std::to_string(max_degree_));
  }
  return plan_truncation(ctx_, x, n, r_, opts_);
}

Complex QEulerEvaluator::operator()(int n, double x) const {
  const TruncationPlan p = plan(n, x);
  return detail::qeuler_series(coeffs_, ctx_, n, x, p.cutoff);
}

Complex qeuler_addition(const QEulerEvaluator& eval, int n, double x, double y) {
  if (!(x >= 0.0) || !(y >= 0.0)) {
    throw Error(ErrorKind::DomainError, "addition formula needs x, y >= 0");
  }
  const QContext& ctx = eval.context();
  const double bracket_x = q_number(x, ctx);
  Complex acc{0.0, 0.0};
  for (int i = 0; i <= n; ++i) {
    const double weight =
        binomial(n, i) * std::pow(ctx.q(), x * i) * ipow(bracket_x, n - i);
    acc += weight * eval(i, y);
  }
  return acc;
}

Complex qeuler_addition(const DirichletCharacter& chi, int r, int n, const QContext& ctx,
                        double x, double y, const SeriesOptions& opts) {
  const QEulerEvaluator eval(chi, r, ctx, opts, n);
  return qeuler_addition(eval, n, x, y);
}

}  // namespace qsym
