#include <cmath>

#include "doctest.h"
#include "qsym/errors.hpp"
#include "qsym/lfun.hpp"
#include "qsym/qeuler.hpp"

using namespace qsym;

namespace {

const SeriesOptions kTight{1e-13, 20000};

Complex lval(const DirichletCharacter& chi, int r, Complex s, double x, double q) {
  return lfun_eval(make_lfun_spec(chi, r, s, x, QContext(q), kTight));
}

}  // namespace

TEST_CASE("s = 0 gives the order-r q-Euler number, independent of x") {
  const auto one = build_character(1, 0);
  for (double x : {0.25, 1.0, 3.0}) CHECK(std::abs(lval(one, 1, 0.0, x, 0.5) - 1.0) <= 1e-12);

  const auto chi = build_character(5, 1);
  const Complex e0 = qeuler_poly(make_qeuler_spec(chi, 2, 0, 0.0, QContext(0.5), kTight));
  for (double x : {0.5, 2.0}) CHECK(std::abs(lval(chi, 2, 0.0, x, 0.5) - e0) <= 1e-12);
}

TEST_CASE("s = -1 interpolates the degree-one polynomial") {
  const auto one = build_character(1, 0);
  const Complex e1 = qeuler_poly(make_qeuler_spec(one, 1, 1, 1.0, QContext(0.5), kTight));
  CHECK(std::abs(lval(one, 1, -1.0, 1.0, 0.5) - e1) <= 1e-12);
}

TEST_CASE("truncation soundness against a ten-times longer series") {
  const auto quad = build_character(3, 1);
  for (Complex s : {Complex(2.0, 0.0), Complex(-3.0, 0.0), Complex(1.0, 1.0), Complex(0.5, -2.0)}) {
    auto spec = make_lfun_spec(quad, 1, s, 1.0, QContext(0.5), {1e-9, 20000});
    const Complex short_sum = lfun_eval(spec);
    spec.plan.cutoff *= 10;
    const Complex long_sum = lfun_eval(spec);
    CHECK(std::abs(short_sum - long_sum) <= spec.plan.tail_bound);
  }
}

TEST_CASE("domain errors") {
  const auto one = build_character(1, 0);
  try {
    make_lfun_spec(one, 1, 2.0, 0.0, QContext(0.5));
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
  CHECK_THROWS_AS(make_lfun_spec(one, 1, 2.0, -1.0, QContext(0.5)), Error);
}

TEST_CASE("conjugate symmetry in (s, chi)") {
  for (const auto& chi : build_character_group(7).characters) {
    const Complex s(1.5, 0.75);
    const Complex value = lval(chi, 2, s, 0.8, 0.45);
    const Complex mirrored = lval(chi.conjugate(), 2, std::conj(s), 0.8, 0.45);
    CHECK(std::abs(mirrored - std::conj(value)) <= 1e-12);
  }
}

TEST_CASE("continuity in x") {
  const auto chi = build_character(5, 1);
  for (double s : {-2.0, 0.5, 3.0}) {
    for (double x : {0.3, 1.0, 2.0}) {
      const Complex base = lval(chi, 1, s, x, 0.5);
      const double big_step = 1e-3;
      const double slope = std::abs(lval(chi, 1, s, x + big_step, 0.5) - base) / big_step;
      for (double h : {1e-4, 1e-5, 1e-6}) {
        CHECK(std::abs(lval(chi, 1, s, x + h, 0.5) - base) <= 2.0 * slope * h + 1e-12);
      }
    }
  }
}

TEST_CASE("evaluator matches lfun_eval bit for bit") {
  const auto chi = build_character(9, 2);
  const QContext ctx(0.35);
  const Complex s(2.5, -1.0);
  const LfunEvaluator eval(chi, 2, s, ctx, kTight, 0.5);
  for (double x : {0.5, 0.9, 4.0}) {
    CHECK(eval(x) == lfun_eval(make_lfun_spec(chi, 2, s, x, ctx, kTight)));
  }
  CHECK_THROWS_AS(eval(0.25), Error);
}

TEST_CASE("verify_interpolation") {
  const auto one = build_character(1, 0);
  const auto first = verify_interpolation(one, 1, 0, 0.5, QContext(0.5), kTight);
  CHECK(first.pass);
  CHECK(first.id == IdentityId::EQ4);
  CHECK(std::abs(first.lhs - 1.0) <= 1e-12);
  CHECK(std::abs(first.rhs - 1.0) <= 1e-12);

  for (const auto& chi : build_character_group(3).characters) {
    for (int r = 1; r <= 2; ++r) {
      for (int n = 0; n <= 8; ++n) {
        const auto report = verify_interpolation(chi, r, n, 1.0, QContext(0.5), kTight, 1e-8);
        CHECK(report.pass);
        CHECK(report.residual <= 1e-8);
      }
    }
  }
}
