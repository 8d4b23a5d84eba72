#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qsym/qnum.hpp"
#include "qsym/report.hpp"

namespace qsym {

/// Parameter axes of a verification sweep. Each identity reads only the axes
/// it needs:
///   T1                    ab, moduli, chi, orders, s, q, x
///   T2, T3, EQ12, EQ13    ab, moduli, chi, orders, n, q, x
///   EQ4, EQ5              moduli, chi, orders, n, q, x
///   EQ9                   moduli, chi, orders, n, q, x, y
///   EQ15                  moduli, chi, orders, m, n, q, x, y
/// An empty axis that the identity reads yields an empty sweep.
struct GridSpec {
  std::vector<std::pair<int, int>> ab;
  std::vector<std::int64_t> moduli;
  std::optional<std::vector<int>> chi_labels;  // nullopt: every character mod d
  std::vector<int> orders;
  std::vector<int> n_values;
  std::vector<int> m_values;
  std::vector<Complex> s_values;
  std::vector<double> q_values;
  std::vector<double> x_values;
  std::vector<double> y_values;
};

/// Instances in deterministic enumeration order (axes nested in the order
/// listed above, outermost first). Characters that cannot be built (even
/// modulus, index out of range) still yield instances; evaluating them
/// records the error.
std::vector<InstanceParams> enumerate_instances(IdentityId id, const GridSpec& grid);

/// Evaluates one instance. Library errors are captured in the report
/// (pass = false) instead of propagating.
IdentityReport evaluate_instance(IdentityId id, const InstanceParams& params,
                                 const SeriesOptions& opts);

/// Evaluates every instance across QEULER_THREADS workers. Reports come back
/// in enumeration order regardless of completion order.
std::vector<IdentityReport> run_suite(IdentityId id, const GridSpec& grid,
                                      const SeriesOptions& opts = {});

/// Single-threaded reference for run_suite.
std::vector<IdentityReport> run_suite_serial(IdentityId id, const GridSpec& grid,
                                             const SeriesOptions& opts = {});

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t errored = 0;
  std::size_t numeric_errors = 0;
  double max_residual = 0.0;

  bool pass() const noexcept { return passed == total; }
};

SuiteSummary summarize(const std::vector<IdentityReport>& reports);

}  // namespace qsym
