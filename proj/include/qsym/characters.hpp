#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsym/qnum.hpp"

namespace qsym {

/// A Dirichlet character modulo an odd modulus d, stored as its table of
/// values on residues 0..d-1. For d = 1 the unique character is identically 1,
/// including at 0; for d > 1, chi(m) = 0 whenever gcd(m, d) > 1.
class DirichletCharacter {
 public:
  DirichletCharacter(std::int64_t modulus, int label, std::vector<Complex> values);

  std::int64_t modulus() const noexcept { return modulus_; }
  int label() const noexcept { return label_; }
  const std::vector<Complex>& values() const noexcept { return values_; }

  /// Periodic extension to m >= 0. Throws Error(NegativeArgument) for m < 0.
  Complex operator()(std::int64_t m) const;

  bool is_real() const noexcept;
  DirichletCharacter conjugate() const;

 private:
  std::int64_t modulus_;
  int label_;
  std::vector<Complex> values_;
};

/// One cyclic factor (Z/p^e Z)^x of the unit group, from the CRT split of d.
struct CyclicFactor {
  std::int64_t prime;
  std::int64_t prime_power;
  std::int64_t generator;
  std::int64_t order;
};

struct CharacterGroup {
  std::int64_t modulus;
  std::vector<CyclicFactor> structure;
  std::vector<DirichletCharacter> characters;
};

inline constexpr std::int64_t kDefaultMaxModulus = 1'000'000;

std::int64_t euler_phi(std::int64_t n);

/// Decomposition of (Z/dZ)^x into cyclic factors, ordered by prime.
/// Throws NotOdd for even d, DomainError for d < 1, Overflow above max_modulus.
std::vector<CyclicFactor> unit_group_structure(std::int64_t d,
                                               std::int64_t max_modulus = kDefaultMaxModulus);

/// All phi(d) characters mod d. Ordering: principal first, then lexicographic
/// in the exponent tuple (one exponent per cyclic factor, first factor most
/// significant). The label of a character is its index in this ordering.
CharacterGroup build_character_group(std::int64_t d,
                                     std::int64_t max_modulus = kDefaultMaxModulus);

/// Single member of the group with the given label, without building the rest.
DirichletCharacter build_character(std::int64_t d, int label,
                                   std::int64_t max_modulus = kDefaultMaxModulus);

inline Complex eval_char(const DirichletCharacter& chi, std::int64_t m) { return chi(m); }

/// c_m = sum over compositions m_1 + ... + m_r = m (m_i >= 0) of prod chi(m_l),
/// for m = 0..cutoff-1.
struct CharConvSeq {
  int r = 1;
  std::vector<Complex> coeffs;

  std::size_t cutoff() const noexcept { return coeffs.size(); }
};

/// r-1 successive length-M linear convolutions of chi(0..M-1) with itself.
/// Each output coefficient is accumulated in index order, so the parallel and
/// serial kernels produce bit-identical results.
CharConvSeq conv_power(const DirichletCharacter& chi, int r, std::size_t M);
CharConvSeq conv_power_serial(const DirichletCharacter& chi, int r, std::size_t M);

}  // namespace qsym
