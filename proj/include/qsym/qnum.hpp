#pragma once

#include <complex>
#include <cstddef>

namespace qsym {

using Complex = std::complex<double>;

/// Deformation parameter q, restricted to the open interval (0, 1), together
/// with the absolute tolerance used for comparisons made against it.
class QContext {
 public:
  static constexpr double kDefaultTol = 1e-9;

  /// Throws Error(DomainError) unless 0 < q < 1 and tol > 0.
  explicit QContext(double q, double tol = kDefaultTol);

  double q() const noexcept { return q_; }
  double tol() const noexcept { return tol_; }

  /// Context for the deformation parameter q^k (k >= 1), same tolerance.
  QContext with_power(int k) const;

 private:
  double q_;
  double tol_;
};

/// [x]_q = (1 - q^x) / (1 - q), with q^x the principal real power.
double q_number(double x, const QContext& ctx);

/// [2]_q^r = (1 + q)^r.
double q_bracket_two_pow(int r, const QContext& ctx);

/// base^exp by repeated multiplication; 0^0 = 1.
double ipow(double base, int exp);
Complex ipow(Complex base, int exp);

/// binom(n, k) promoted to double; exact for n <= 64.
double binomial(int n, int k);

/// Series cutoff and the certified bound on what it leaves out.
struct TruncationPlan {
  double epsilon = 0.0;
  std::size_t cutoff = 0;  // first omitted index M
  double tail_bound = 0.0;
  std::size_t max_terms = 0;
};

/// Accuracy request shared by all series evaluators.
struct SeriesOptions {
  double epsilon = 1e-10;
  std::size_t max_terms = 20000;
};

/// Smallest cutoff M <= max_terms with
///   sum_{m>=M} (1+q)^r binom(m+r-1, r-1) q^m * term_bound <= epsilon,
/// where term_bound bounds the non-coefficient part of every term.
/// Throws Error(PlanInfeasible) if no such M exists.
TruncationPlan plan_truncation_bounded(const QContext& ctx, int r, double term_bound,
                                       double epsilon, std::size_t max_terms);

/// Plan for the q-Euler series of degree n at argument x >= 0, using
/// B = (1 + q^x) / (1 - q) >= sup_m |[m+x]_q| and term_bound = B^n.
TruncationPlan plan_truncation(const QContext& ctx, double x, int n, int r, double epsilon,
                               std::size_t max_terms);

inline TruncationPlan plan_truncation(const QContext& ctx, double x, int n, int r,
                                      const SeriesOptions& opts) {
  return plan_truncation(ctx, x, n, r, opts.epsilon, opts.max_terms);
}

}  // namespace qsym
