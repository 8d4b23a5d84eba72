#include "qsym/lfun.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <utility>

#include "qsym/errors.hpp"
#include "qsym/qeuler.hpp"

namespace qsym {

namespace {

void validate(int r, double x) {
  if (r < 1) throw Error(ErrorKind::DomainError, "order r must be >= 1");
  if (!(x > 0.0)) throw Error(ErrorKind::DomainError, "l-function argument x must be > 0");
}

Complex lfun_series(const CharConvSeq& coeffs, const QContext& ctx, Complex s, double x,
                    std::size_t M) {
  const double q = ctx.q();
  const double qx = std::pow(q, x);
  const double one_minus_q = 1.0 - q;
  Complex acc{0.0, 0.0};
  double qm = 1.0;
  for (std::size_t m = 0; m < M; ++m) {
    const Complex& c = coeffs.coeffs[m];
    if (c.real() != 0.0 || c.imag() != 0.0) {
      const double bracket = (1.0 - qm * qx) / one_minus_q;
      const Complex power = std::exp(-s * std::log(bracket));
      acc += (m % 2 == 0 ? qm : -qm) * power * c;
    }
    qm *= q;
  }
  return q_bracket_two_pow(coeffs.r, ctx) * acc;
}

}  // namespace

double lfun_term_bound(Complex s, double x, const QContext& ctx) {
  const double log_low = std::abs(std::log(q_number(x, ctx)));
  const double log_high = std::log(1.0 / (1.0 - ctx.q()));
  const double spread = std::max(log_low, log_high);
  return std::exp(std::abs(s.real()) * spread + std::abs(s.imag()) * std::numbers::pi);
}

LfunSpec make_lfun_spec(const DirichletCharacter& chi, int r, Complex s, double x,
                        const QContext& ctx, const SeriesOptions& opts) {
  validate(r, x);
  const TruncationPlan plan = plan_truncation_bounded(ctx, r, lfun_term_bound(s, x, ctx),
                                                      opts.epsilon, opts.max_terms);
  return LfunSpec{chi, r, s, x, ctx, plan};
}

Complex lfun_eval(const LfunSpec& spec) {
  validate(spec.r, spec.x);
  const std::size_t M = spec.plan.cutoff;
  const CharConvSeq coeffs = conv_power(spec.chi, spec.r, std::max<std::size_t>(M, 1));
  return lfun_series(coeffs, spec.ctx, spec.s, spec.x, M);
}

LfunEvaluator::LfunEvaluator(DirichletCharacter chi, int r, Complex s, QContext ctx,
                             SeriesOptions opts, double min_x)
    : chi_(std::move(chi)), r_(r), s_(s), ctx_(ctx), opts_(opts), min_x_(min_x) {
  validate(r_, min_x_);
  const TruncationPlan widest = plan(min_x_);
  coeffs_ = conv_power(chi_, r_, std::max<std::size_t>(widest.cutoff, 1));
}

TruncationPlan LfunEvaluator::plan(double x) const {
  validate(r_, x);
  if (x < min_x_) throw Error(ErrorKind::DomainError, "argument below evaluator minimum");
  return plan_truncation_bounded(ctx_, r_, lfun_term_bound(s_, x, ctx_), opts_.epsilon,
                                 opts_.max_terms);
}

Complex LfunEvaluator::operator()(double x) const {
  return lfun_series(coeffs_, ctx_, s_, x, plan(x).cutoff);
}

IdentityReport verify_interpolation(const DirichletCharacter& chi, int r, int n, double x,
                                    const QContext& ctx, const SeriesOptions& opts,
                                    double tolerance) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  report.id = IdentityId::EQ4;
  report.instance.d = chi.modulus();
  report.instance.chi = chi.label();
  report.instance.r = r;
  report.instance.n = n;
  report.instance.x = x;
  report.instance.q = ctx.q();
  if (n < 0) throw Error(ErrorKind::DomainError, "degree n must be >= 0");

  report.lhs = lfun_eval(make_lfun_spec(chi, r, Complex(-n, 0.0), x, ctx, opts));
  report.rhs = qeuler_poly(make_qeuler_spec(chi, r, n, x, ctx, opts));
  finalize_absolute(report, tolerance);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace qsym
