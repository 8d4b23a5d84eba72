#pragma once

#include <cstdint>

#include "qsym/characters.hpp"
#include "qsym/qnum.hpp"
#include "qsym/report.hpp"

namespace qsym {

/// One point of a two-parameter symmetry check. a and b must be odd; n is the
/// polynomial degree (T2, T3), s the l-function exponent (T1).
struct SymmetryInstance {
  int a;
  int b;
  DirichletCharacter chi;
  int r;
  int n = 0;
  Complex s{0.0, 0.0};
  double x = 0.0;
  QContext ctx;
};

inline constexpr double kSymmetryRelTol = 1e-7;
inline constexpr double kBridgeRelTol = 1e-8;
inline constexpr double kDegenerateAbsTol = 1e-12;

/// S^{(r)}_{n,i,q}(upper | chi)
///   = sum_{j_1..j_r = 0}^{upper-1} (-1)^{sum j} prod chi(j_l) q^{(n-i+1) sum j} [sum j]_q^i,
/// enumerated exactly, with 0^0 = 1. Requires 0 <= i <= n and upper^r <= 1e8.
Complex power_sum(const DirichletCharacter& chi, int r, int n, int i, std::int64_t upper,
                  const QContext& ctx);

/// Single sides. `theorem*_side(inst, a, b, ...)` evaluates the left-hand side
/// of the identity with the given roles; the right-hand side is the same call
/// with a and b swapped.
///
///   T1: [2]_{q^b}^r [b]_q^s  sum_{j in [0,da)^r} (-1)^{sum j} prod chi(j_l) q^{b sum j} l_{q^a,r}(s, bx + (b/a) sum j | chi)
///   T2: [2]_{q^b}^r [a]_q^n  sum_{j in [0,da)^r} (-1)^{sum j} prod chi(j_l) q^{b sum j} E^{(r)}_{n,chi,q^a}(bx + (b/a) sum j)
///   T3: [2]_{q^b}^r sum_i binom(n,i) [a]_q^{n-i} [b]_q^i E^{(r)}_{n-i,chi,q^a}(bx) S^{(r)}_{n,i,q^b}(da | chi)
Complex theorem1_side(const SymmetryInstance& inst, int a, int b, const SeriesOptions& opts);
Complex theorem2_side(const SymmetryInstance& inst, int a, int b, const SeriesOptions& opts);
Complex theorem3_side(const SymmetryInstance& inst, int a, int b, const SeriesOptions& opts);

IdentityReport theorem1_sides(const SymmetryInstance& inst, const SeriesOptions& opts = {},
                              double rel_tol = kSymmetryRelTol);
IdentityReport theorem2_sides(const SymmetryInstance& inst, const SeriesOptions& opts = {},
                              double rel_tol = kSymmetryRelTol);
IdentityReport theorem3_sides(const SymmetryInstance& inst, const SeriesOptions& opts = {},
                              double rel_tol = kSymmetryRelTol);

/// T2 side against T3 side with the same roles: the rearrangement through the
/// power sums. eq13_bridge is the mirrored check (roles swapped).
IdentityReport eq12_bridge(const SymmetryInstance& inst, const SeriesOptions& opts = {},
                           double rel_tol = kBridgeRelTol);
IdentityReport eq13_bridge(const SymmetryInstance& inst, const SeriesOptions& opts = {},
                           double rel_tol = kBridgeRelTol);

/// Addition formula: sum_i binom(n,i) q^{xi} E_i(y) [x]_q^{n-i} against
/// E_n(x+y). Reported as EQ5 when y == 0, EQ9 otherwise.
IdentityReport addition_sides(const DirichletCharacter& chi, int r, int n, double x, double y,
                              const QContext& ctx, const SeriesOptions& opts = {},
                              double rel_tol = kSymmetryRelTol);

/// Two-index identity
///   sum_{k=0}^{m} binom(m,k) q^{kx} E_{n+k}(y) [x]_q^{m-k}
///     = sum_{k=0}^{n} binom(n,k) q^{-kx} E_{m+k}(x+y) [-x]_q^{n-k}.
IdentityReport eq15_sides(const DirichletCharacter& chi, int r, int m, int n, double x, double y,
                          const QContext& ctx, const SeriesOptions& opts = {},
                          double rel_tol = kSymmetryRelTol);

}  // namespace qsym
