#include "qsym/qnum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

QContext::QContext(double q, double tol) : q_(q), tol_(tol) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::DomainError, "q must lie in (0,1), got " + std::to_string(q));
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::DomainError, "tol must be positive");
  }
}

QContext QContext::with_power(int k) const {
  if (k < 1) throw Error(ErrorKind::DomainError, "deformation power must be >= 1");
  return QContext(std::pow(q_, k), tol_);
}

double q_number(double x, const QContext& ctx) {
  const double q = ctx.q();
  return (1.0 - std::pow(q, x)) / (1.0 - q);
}

double q_bracket_two_pow(int r, const QContext& ctx) {
  if (r < 1) throw Error(ErrorKind::DomainError, "order r must be >= 1");
  return ipow(1.0 + ctx.q(), r);
}

double ipow(double base, int exp) {
  double out = 1.0;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

Complex ipow(Complex base, int exp) {
  Complex out{1.0, 0.0};
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

double binomial(int n, int k) {
  if (n > 64) throw Error(ErrorKind::DomainError, "binomial guard: n must be <= 64");
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  unsigned long long c = 1;
  for (int j = 1; j <= k; ++j) {
    // c * (n-k+j) / j stays integral at every step
    c = c / j * (n - k + j) + c % j * (n - k + j) / j;
  }
  return static_cast<double>(c);
}

TruncationPlan plan_truncation_bounded(const QContext& ctx, int r, double term_bound,
                                       double epsilon, std::size_t max_terms) {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::DomainError, "epsilon must be positive");
  if (r < 1) throw Error(ErrorKind::DomainError, "order r must be >= 1");
  const double q = ctx.q();

  // t_M = (1+q)^r binom(M+r-1, r-1) q^M term_bound; the ratio
  // t_{M+1}/t_M = q (M+r)/(M+1) is non-increasing, so once it drops below
  // one the remainder is dominated by a geometric series.
  double term = q_bracket_two_pow(r, ctx) * term_bound;
  if (!std::isfinite(term)) {
    throw Error(ErrorKind::PlanInfeasible, "per-term bound is not finite");
  }
  for (std::size_t m = 0; m <= max_terms; ++m) {
    const double ratio = q * static_cast<double>(m + r) / static_cast<double>(m + 1);
    if (ratio < 1.0) {
      const double bound = term / (1.0 - ratio);
      if (bound <= epsilon) return TruncationPlan{epsilon, m, bound, max_terms};
    }
    term *= ratio;
  }
  throw Error(ErrorKind::PlanInfeasible,
              "no cutoff <= " + std::to_string(max_terms) + " reaches epsilon " +
                  std::to_string(epsilon) + " at q=" + std::to_string(q));
}

TruncationPlan plan_truncation(const QContext& ctx, double x, int n, int r, double epsilon,
                               std::size_t max_terms) {
  if (!(x >= 0.0)) throw Error(ErrorKind::DomainError, "argument x must be >= 0");
  if (n < 0) throw Error(ErrorKind::DomainError, "degree n must be >= 0");
  const double sup_bracket = (1.0 + std::pow(ctx.q(), x)) / (1.0 - ctx.q());
  return plan_truncation_bounded(ctx, r, ipow(sup_bracket, n), epsilon, max_terms);
}

}  // namespace qsym
