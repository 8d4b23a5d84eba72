#include "qsym/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

// Operands stay below the modulus (<= 10^6 by default), so the product fits.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) { return (a % m) * (b % m) % m; }

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t out = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) out = mul_mod(out, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Smallest generator of the cyclic group (Z/p^e Z)^x, p odd.
std::int64_t primitive_root(std::int64_t prime_power, std::int64_t order) {
  const auto order_factors = factorize(order);
  for (std::int64_t g = 2; g < prime_power; ++g) {
    if (std::gcd(g, prime_power) != 1) continue;
    bool generates = true;
    for (const auto& [ell, unused] : order_factors) {
      if (pow_mod(g, order / ell, prime_power) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  return 1;  // trivial group (prime_power == 1 never happens for odd p)
}

// exp(2 pi i k / n), exact on the real and imaginary axes.
Complex unit_root(std::int64_t k, std::int64_t n) {
  k %= n;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == n) return {-1.0, 0.0};
  if (4 * k == n) return {0.0, 1.0};
  if (4 * k == 3 * n) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

struct GroupTables {
  std::int64_t modulus;
  std::int64_t phi;
  std::vector<CyclicFactor> structure;
  std::vector<std::vector<std::int64_t>> dlog;  // per factor, -1 off the unit group
};

GroupTables make_tables(std::int64_t d, std::int64_t max_modulus) {
  GroupTables t{d, euler_phi(d), unit_group_structure(d, max_modulus), {}};
  for (const auto& f : t.structure) {
    std::vector<std::int64_t> table(f.prime_power, -1);
    std::int64_t power = 1;
    for (std::int64_t k = 0; k < f.order; ++k) {
      table[power] = k;
      power = mul_mod(power, f.generator, f.prime_power);
    }
    t.dlog.push_back(std::move(table));
  }
  return t;
}

DirichletCharacter make_character(const GroupTables& t, int label) {
  const std::int64_t d = t.modulus;
  if (d == 1) return DirichletCharacter(1, 0, {Complex{1.0, 0.0}});

  // Mixed-radix decode, first factor most significant.
  std::vector<std::int64_t> exponents(t.structure.size());
  std::int64_t rest = label;
  for (std::size_t i = t.structure.size(); i-- > 0;) {
    exponents[i] = rest % t.structure[i].order;
    rest /= t.structure[i].order;
  }

  std::vector<Complex> values(d, Complex{0.0, 0.0});
  for (std::int64_t m = 0; m < d; ++m) {
    if (std::gcd(m, d) != 1) continue;
    // chi(m) = exp(2 pi i k / phi(d)), k = sum_i e_i log_i(m) phi / ord_i
    std::int64_t k = 0;
    for (std::size_t i = 0; i < t.structure.size(); ++i) {
      const auto& f = t.structure[i];
      const std::int64_t log = t.dlog[i][m % f.prime_power];
      const std::int64_t scaled = mul_mod(exponents[i] * log % f.order, t.phi / f.order, t.phi);
      k = (k + scaled) % t.phi;
    }
    values[m] = unit_root(k, t.phi);
  }
  return DirichletCharacter(d, label, std::move(values));
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::int64_t modulus, int label,
                                       std::vector<Complex> values)
    : modulus_(modulus), label_(label), values_(std::move(values)) {
  if (modulus_ < 1 || static_cast<std::int64_t>(values_.size()) != modulus_) {
    throw Error(ErrorKind::DomainError, "character table size must equal the modulus");
  }
}

Complex DirichletCharacter::operator()(std::int64_t m) const {
  if (m < 0) throw Error(ErrorKind::NegativeArgument, "character argument must be >= 0");
  return values_[static_cast<std::size_t>(m % modulus_)];
}

bool DirichletCharacter::is_real() const noexcept {
  for (const auto& v : values_) {
    if (v.imag() != 0.0) return false;
  }
  return true;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<Complex> conj(values_.size());
  for (std::size_t m = 0; m < values_.size(); ++m) conj[m] = std::conj(values_[m]);
  return DirichletCharacter(modulus_, label_, std::move(conj));
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi -= phi / p;
  return phi;
}

std::vector<CyclicFactor> unit_group_structure(std::int64_t d, std::int64_t max_modulus) {
  if (d < 1) throw Error(ErrorKind::DomainError, "modulus must be >= 1");
  if (d % 2 == 0) throw Error(ErrorKind::NotOdd, "modulus must be odd, got " + std::to_string(d));
  if (d > max_modulus) {
    throw Error(ErrorKind::Overflow, "modulus " + std::to_string(d) + " exceeds bound " +
                                         std::to_string(max_modulus));
  }
  std::vector<CyclicFactor> out;
  for (const auto& [p, e] : factorize(d)) {
    std::int64_t pe = 1;
    for (int k = 0; k < e; ++k) pe *= p;
    const std::int64_t order = pe / p * (p - 1);
    out.push_back(CyclicFactor{p, pe, primitive_root(pe, order), order});
  }
  return out;
}

CharacterGroup build_character_group(std::int64_t d, std::int64_t max_modulus) {
  const GroupTables t = make_tables(d, max_modulus);
  CharacterGroup group{d, t.structure, {}};
  group.characters.reserve(static_cast<std::size_t>(t.phi));
  for (std::int64_t label = 0; label < t.phi; ++label) {
    group.characters.push_back(make_character(t, static_cast<int>(label)));
  }
  return group;
}

DirichletCharacter build_character(std::int64_t d, int label, std::int64_t max_modulus) {
  const GroupTables t = make_tables(d, max_modulus);
  if (label < 0 || label >= t.phi) {
    throw Error(ErrorKind::DomainError, "character index " + std::to_string(label) +
                                            " out of range [0, " + std::to_string(t.phi) +
                                            ") for modulus " + std::to_string(d));
  }
  return make_character(t, label);
}

}  // namespace qsym
