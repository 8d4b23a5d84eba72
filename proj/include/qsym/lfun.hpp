#pragma once

#include "qsym/characters.hpp"
#include "qsym/qnum.hpp"
#include "qsym/report.hpp"

namespace qsym {

/// Dirichlet-type multiple q-l-function
///
///   l_{q,r}(s, x | chi) = [2]_q^r sum_{m_1..m_r >= 0} (-q)^{sum m} prod chi(m_l) / [sum m + x]_q^s
///
/// For 0 < q < 1 and x > 0 the bracket is bounded in [[x]_q, 1/(1-q)), so the
/// alternating series converges geometrically for every complex s.
struct LfunSpec {
  DirichletCharacter chi;
  int r;
  Complex s;
  double x;
  QContext ctx;
  TruncationPlan plan;
};

/// Bound on |[m+x]_q^{-s}| over all m >= 0:
///   exp(|Re s| * L + |Im s| * pi),  L = max(|ln [x]_q|, ln(1/(1-q))).
double lfun_term_bound(Complex s, double x, const QContext& ctx);

/// Throws Error(DomainError) for x <= 0.
LfunSpec make_lfun_spec(const DirichletCharacter& chi, int r, Complex s, double x,
                        const QContext& ctx, const SeriesOptions& opts = {});

Complex lfun_eval(const LfunSpec& spec);

/// Evaluates l_{q,r}(s, x | chi) at a fixed s for any x >= min_x from one
/// coefficient sequence; matches lfun_eval bit for bit.
class LfunEvaluator {
 public:
  LfunEvaluator(DirichletCharacter chi, int r, Complex s, QContext ctx, SeriesOptions opts,
                double min_x);

  Complex operator()(double x) const;
  TruncationPlan plan(double x) const;

  const QContext& context() const noexcept { return ctx_; }

 private:
  DirichletCharacter chi_;
  int r_;
  Complex s_;
  QContext ctx_;
  SeriesOptions opts_;
  double min_x_;
  CharConvSeq coeffs_;
};

/// Compares l_{q,r}(-n, x | chi) against E^{(r)}_{n,chi,q}(x); passes when the
/// absolute residual is at most `tolerance`.
IdentityReport verify_interpolation(const DirichletCharacter& chi, int r, int n, double x,
                                    const QContext& ctx, const SeriesOptions& opts = {},
                                    double tolerance = 1e-8);

}  // namespace qsym
