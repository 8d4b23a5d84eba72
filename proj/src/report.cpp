#include "qsym/report.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace qsym {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 9> kNames{{
    {IdentityId::T1, "T1"},
    {IdentityId::T2, "T2"},
    {IdentityId::T3, "T3"},
    {IdentityId::EQ4, "EQ4"},
    {IdentityId::EQ5, "EQ5"},
    {IdentityId::EQ9, "EQ9"},
    {IdentityId::EQ12, "EQ12"},
    {IdentityId::EQ13, "EQ13"},
    {IdentityId::EQ15, "EQ15"},
}};

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& [key, label] : kNames) {
    if (label == name) return key;
  }
  return std::nullopt;
}

void finalize_absolute(IdentityReport& report, double abs_tol) {
  report.residual = std::abs(report.lhs - report.rhs);
  report.tolerance = abs_tol;
  report.pass = report.residual <= report.tolerance;
}

void finalize_relative(IdentityReport& report, double rel_tol) {
  finalize_absolute(report, rel_tol * std::max(std::abs(report.lhs), 1.0));
}

}  // namespace qsym
