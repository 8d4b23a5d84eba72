#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qsym/qnum.hpp"

namespace qsym {

enum class IdentityId { T1, T2, T3, EQ4, EQ5, EQ9, EQ12, EQ13, EQ15 };

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Parameters of one identity instance. Fields an identity does not use stay
/// empty and are omitted from serialized output.
struct InstanceParams {
  std::optional<int> a;
  std::optional<int> b;
  std::int64_t d = 1;
  int chi = 0;
  int r = 1;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<Complex> s;
  double x = 0.0;
  std::optional<double> y;
  double q = 0.5;
};

struct IdentityReport {
  IdentityId id = IdentityId::T1;
  InstanceParams instance;
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double residual = 0.0;
  double tolerance = 0.0;  // absolute threshold applied to `residual`
  bool pass = false;
  std::chrono::duration<double> elapsed{0.0};
  std::string error;  // non-empty when the instance raised instead of evaluating
  bool numeric_error = false;
};

/// Fills residual/tolerance/pass from lhs and rhs; the threshold is
/// rel_tol * max(|lhs|, 1).
void finalize_relative(IdentityReport& report, double rel_tol);
/// Same with a fixed absolute threshold.
void finalize_absolute(IdentityReport& report, double abs_tol);

}  // namespace qsym
