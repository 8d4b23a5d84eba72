#include <cmath>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "qsym/characters.hpp"
#include "qsym/errors.hpp"

using namespace qsym;

namespace {

// Composition sum by explicit recursion over (m_1, ..., m_r).
Complex brute_force_coeff(const DirichletCharacter& chi, int r, int m) {
  std::function<Complex(int, int)> rec = [&](int parts, int remaining) -> Complex {
    if (parts == 1) return chi(remaining);
    Complex acc{0.0, 0.0};
    for (int first = 0; first <= remaining; ++first) {
      acc += chi(first) * rec(parts - 1, remaining - first);
    }
    return acc;
  };
  return rec(r, m);
}

}  // namespace

TEST_CASE("modulus 1 has a single character equal to 1 everywhere") {
  const auto group = build_character_group(1);
  REQUIRE(group.characters.size() == 1);
  const auto& chi = group.characters[0];
  CHECK(chi(0) == Complex(1.0, 0.0));
  CHECK(chi(17) == Complex(1.0, 0.0));
}

TEST_CASE("modulus 3: principal and quadratic") {
  const auto group = build_character_group(3);
  REQUIRE(group.characters.size() == 2);
  REQUIRE(group.structure.size() == 1);
  CHECK(group.structure[0].generator == 2);
  const auto& principal = group.characters[0].values();
  const auto& quad = group.characters[1].values();
  CHECK(principal == std::vector<Complex>{0.0, 1.0, 1.0});
  CHECK(quad == std::vector<Complex>{0.0, 1.0, -1.0});
  CHECK(group.characters[1].is_real());
}

TEST_CASE("modulus 5: order-four characters take +-i at 2") {
  const auto group = build_character_group(5);
  REQUIRE(group.characters.size() == 4);
  int quartic = 0;
  for (const auto& chi : group.characters) {
    const Complex v = chi(2);
    if (v == Complex(0.0, 1.0) || v == Complex(0.0, -1.0)) ++quartic;
  }
  CHECK(quartic == 2);
}

TEST_CASE("eval_char: periodicity, zeros and negative arguments") {
  const auto quad = build_character(3, 1);
  CHECK(eval_char(quad, 4) == Complex(1.0, 0.0));
  CHECK(eval_char(quad, 6) == Complex(0.0, 0.0));
  CHECK(eval_char(build_character(1, 0), 0) == Complex(1.0, 0.0));
  try {
    eval_char(quad, -1);
    FAIL("expected NegativeArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeArgument);
  }
}

TEST_CASE("construction errors") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::DomainError;
  };
  CHECK(kind_of([] { build_character_group(4); }) == ErrorKind::NotOdd);
  CHECK(kind_of([] { build_character_group(1'000'001); }) == ErrorKind::Overflow);
  CHECK_THROWS_AS(build_character(3, 2), Error);
  CHECK_THROWS_AS(build_character_group(0), Error);
}

TEST_CASE("group laws for odd moduli up to 45") {
  for (std::int64_t d = 1; d <= 45; d += 2) {
    CAPTURE(d);
    const auto group = build_character_group(d);
    REQUIRE(static_cast<std::int64_t>(group.characters.size()) == euler_phi(d));
    const std::int64_t phi = euler_phi(d);

    for (const auto& chi : group.characters) {
      if (d > 1) {
        CHECK(chi(1) == Complex(1.0, 0.0));
        CHECK(chi(0) == Complex(0.0, 0.0));
      }
      for (std::int64_t m = 0; m < d; ++m) {
        const bool unit = std::gcd(m, d) == 1 || d == 1;
        if (!unit) {
          CHECK(chi(m) == Complex(0.0, 0.0));
          continue;
        }
        CHECK(std::abs(std::abs(chi(m)) - 1.0) <= 1e-12);
        CHECK(std::abs(ipow(chi(m), static_cast<int>(phi)) - 1.0) <= 1e-10);
      }
    }
    // principal first
    for (std::int64_t m = 1; m < d; ++m) {
      if (std::gcd(m, d) == 1) CHECK(group.characters[0](m) == Complex(1.0, 0.0));
    }
    // closure: pointwise products stay in the group
    for (const auto& u : group.characters) {
      for (const auto& v : group.characters) {
        bool found = false;
        for (const auto& w : group.characters) {
          double diff = 0.0;
          for (std::int64_t m = 0; m < d; ++m) diff = std::max(diff, std::abs(u(m) * v(m) - w(m)));
          if (diff <= 1e-12) {
            found = true;
            break;
          }
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("conv_power small examples") {
  const auto trivial = build_character(1, 0);
  CHECK(conv_power(trivial, 2, 5).coeffs[3] == Complex(4.0, 0.0));

  const auto quad = build_character(3, 1);
  const auto r1 = conv_power(quad, 1, 5);
  CHECK(r1.coeffs == std::vector<Complex>{0.0, 1.0, -1.0, 0.0, 1.0});
  CHECK(conv_power(quad, 2, 5).coeffs[3] == Complex(-2.0, 0.0));
}

TEST_CASE("conv_power agrees with brute-force composition enumeration") {
  for (std::int64_t d : {1, 3, 5}) {
    for (const auto& chi : build_character_group(d).characters) {
      for (int r = 1; r <= 3; ++r) {
        const auto seq = conv_power(chi, r, 12);
        for (int m = 0; m < 12; ++m) {
          CAPTURE(d);
          CAPTURE(r);
          CAPTURE(m);
          CHECK(std::abs(seq.coeffs[m] - brute_force_coeff(chi, r, m)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("conv_power: bound, additivity in r, serial reference") {
  const auto group = build_character_group(15);
  for (const auto& chi : group.characters) {
    const std::size_t M = 60;
    const auto c2 = conv_power(chi, 2, M);
    const auto c3 = conv_power(chi, 3, M);
    const auto c5 = conv_power(chi, 5, M);
    for (std::size_t m = 0; m < M; ++m) {
      CHECK(std::abs(c5.coeffs[m]) <= binomial(static_cast<int>(m) + 4, 4) + 1e-9);
      Complex conv{0.0, 0.0};
      for (std::size_t k = 0; k <= m; ++k) conv += c2.coeffs[k] * c3.coeffs[m - k];
      CHECK(std::abs(conv - c5.coeffs[m]) <= 1e-9 * std::max(1.0, std::abs(conv)));
    }
  }
  // Parallel and serial kernels sum in the same order: identical bits.
  const auto chi = build_character(45, 7);
  CHECK(conv_power(chi, 4, 3000).coeffs == conv_power_serial(chi, 4, 3000).coeffs);
}
