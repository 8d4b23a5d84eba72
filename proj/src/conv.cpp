#include <cstdlib>
#include <string>

#include <omp.h>

#include "qsym/characters.hpp"
#include "qsym/errors.hpp"
#include "qsym/parallel.hpp"

namespace qsym {

int worker_threads() {
  if (const char* env = std::getenv("QEULER_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return omp_get_max_threads();
}

namespace {

std::vector<Complex> periodic_prefix(const DirichletCharacter& chi, std::size_t M) {
  std::vector<Complex> seq(M);
  for (std::size_t m = 0; m < M; ++m) seq[m] = chi(static_cast<std::int64_t>(m));
  return seq;
}

// (cur * base)_m, accumulated for k = 0..m in order.
inline Complex convolve_at(const std::vector<Complex>& cur, const std::vector<Complex>& base,
                           std::size_t m) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k <= m; ++k) {
    const Complex& b = base[m - k];
    if (b.real() == 0.0 && b.imag() == 0.0) continue;
    acc += cur[k] * b;
  }
  return acc;
}

void check_args(int r, std::size_t M) {
  if (r < 1) throw Error(ErrorKind::DomainError, "order r must be >= 1");
  if (M < 1) throw Error(ErrorKind::DomainError, "cutoff M must be >= 1");
}

}  // namespace

CharConvSeq conv_power(const DirichletCharacter& chi, int r, std::size_t M) {
  check_args(r, M);
  const std::vector<Complex> base = periodic_prefix(chi, M);
  std::vector<Complex> cur = base;
  std::vector<Complex> next(M);
  const long long n = static_cast<long long>(M);
  for (int fold = 1; fold < r; ++fold) {
#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_threads()) if (n >= 512)
    for (long long m = 0; m < n; ++m) {
      next[static_cast<std::size_t>(m)] = convolve_at(cur, base, static_cast<std::size_t>(m));
    }
    cur.swap(next);
  }
  return CharConvSeq{r, std::move(cur)};
}

CharConvSeq conv_power_serial(const DirichletCharacter& chi, int r, std::size_t M) {
  check_args(r, M);
  const std::vector<Complex> base = periodic_prefix(chi, M);
  std::vector<Complex> cur = base;
  std::vector<Complex> next(M);
  for (int fold = 1; fold < r; ++fold) {
    for (std::size_t m = 0; m < M; ++m) next[m] = convolve_at(cur, base, m);
    cur.swap(next);
  }
  return CharConvSeq{r, std::move(cur)};
}

}  // namespace qsym
