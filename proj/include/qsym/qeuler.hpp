#pragma once

#include <cstddef>

#include "qsym/characters.hpp"
#include "qsym/qnum.hpp"

namespace qsym {

/// Everything needed to evaluate E^{(r)}_{n,chi,q}(x), the generalized
/// higher-order q-Euler polynomial attached to chi:
///
///   E = [2]_q^r sum_{m_1..m_r >= 0} (-q)^{m_1+..+m_r} prod chi(m_l) [m_1+..+m_r+x]_q^n
///
/// At x = 0 these are the q-Euler numbers of order r attached to chi.
struct QEulerSpec {
  DirichletCharacter chi;
  int r;
  int n;
  double x;
  QContext ctx;
  TruncationPlan plan;
};

/// Validates (r >= 1, n >= 0, x >= 0) and attaches a truncation plan.
QEulerSpec make_qeuler_spec(const DirichletCharacter& chi, int r, int n, double x,
                            const QContext& ctx, const SeriesOptions& opts = {});

/// Fast path: the r-fold sum grouped by total index m = m_1 + ... + m_r,
///   [2]_q^r sum_{m < M} (-1)^m q^m c_m [m+x]_q^n,  M = spec.plan.cutoff,
/// with c_m from conv_power. Error against the full series <= plan.tail_bound.
Complex qeuler_poly(const QEulerSpec& spec);

inline constexpr double kEnumerationBudget = 1e8;

/// Oracle path: the literal r-fold sum, enumerated by an odometer over index
/// tuples with m_1 + ... + m_r < M (the same truncation as the fast path).
/// Throws Error(BudgetExceeded) when M^r > kEnumerationBudget.
Complex qeuler_poly_naive(const QEulerSpec& spec, std::size_t M);

/// Evaluates E^{(r)}_{n,chi,q}(x) for any n <= max_degree and x >= 0 from one
/// precomputed coefficient sequence. Results match qeuler_poly bit for bit.
/// Immutable after construction.
class QEulerEvaluator {
 public:
  QEulerEvaluator(DirichletCharacter chi, int r, QContext ctx, SeriesOptions opts,
                  int max_degree);

  Complex operator()(int n, double x) const;
  TruncationPlan plan(int n, double x) const;

  const DirichletCharacter& character() const noexcept { return chi_; }
  const QContext& context() const noexcept { return ctx_; }
  int order() const noexcept { return r_; }
  int max_degree() const noexcept { return max_degree_; }

 private:
  DirichletCharacter chi_;
  int r_;
  QContext ctx_;
  SeriesOptions opts_;
  int max_degree_;
  CharConvSeq coeffs_;
};

/// sum_{i=0}^{n} binom(n,i) q^{x i} E_i(y) [x]_q^{n-i}, which equals E_n(x+y).
/// With y = 0 this is the umbral expansion E_n(x) = (q^x E + [x]_q)^n.
Complex qeuler_addition(const QEulerEvaluator& eval, int n, double x, double y);
Complex qeuler_addition(const DirichletCharacter& chi, int r, int n, const QContext& ctx,
                        double x, double y, const SeriesOptions& opts = {});

namespace detail {
// Grouped series over the first M coefficients of `coeffs`.
Complex qeuler_series(const CharConvSeq& coeffs, const QContext& ctx, int n, double x,
                      std::size_t M);
}  // namespace detail

}  // namespace qsym
