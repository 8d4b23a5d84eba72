#include "qsym/suite.hpp"

#include <algorithm>
#include <exception>

#include "qsym/characters.hpp"
#include "qsym/errors.hpp"
#include "qsym/identities.hpp"
#include "qsym/lfun.hpp"
#include "qsym/parallel.hpp"

namespace qsym {

namespace {

bool uses_ab(IdentityId id) {
  return id == IdentityId::T1 || id == IdentityId::T2 || id == IdentityId::T3 ||
         id == IdentityId::EQ12 || id == IdentityId::EQ13;
}

std::vector<int> labels_for(std::int64_t d, const GridSpec& grid) {
  if (grid.chi_labels) return *grid.chi_labels;
  std::vector<int> labels;
  try {
    unit_group_structure(d);  // rejects bad moduli before phi is trusted
    const auto phi = euler_phi(d);
    for (std::int64_t k = 0; k < phi; ++k) labels.push_back(static_cast<int>(k));
  } catch (const Error&) {
    labels.push_back(0);  // a placeholder instance that records the error
  }
  return labels;
}

IdentityReport evaluate_unchecked(IdentityId id, const InstanceParams& p,
                                  const SeriesOptions& opts) {
  const DirichletCharacter chi = build_character(p.d, p.chi);
  const QContext ctx(p.q);
  const int n = p.n.value_or(0);
  if (uses_ab(id)) {
    SymmetryInstance inst{p.a.value_or(1), p.b.value_or(1), chi, p.r, n,
                          p.s.value_or(Complex{0.0, 0.0}), p.x, ctx};
    switch (id) {
      case IdentityId::T1: return theorem1_sides(inst, opts);
      case IdentityId::T2: return theorem2_sides(inst, opts);
      case IdentityId::T3: return theorem3_sides(inst, opts);
      case IdentityId::EQ12: return eq12_bridge(inst, opts);
      default: return eq13_bridge(inst, opts);
    }
  }
  switch (id) {
    case IdentityId::EQ4: return verify_interpolation(chi, p.r, n, p.x, ctx, opts);
    case IdentityId::EQ5:
    case IdentityId::EQ9: {
      IdentityReport report = addition_sides(chi, p.r, n, p.x, p.y.value_or(0.0), ctx, opts);
      report.id = id;
      return report;
    }
    default: return eq15_sides(chi, p.r, p.m.value_or(0), n, p.x, p.y.value_or(0.0), ctx, opts);
  }
}

}  // namespace

std::vector<InstanceParams> enumerate_instances(IdentityId id, const GridSpec& grid) {
  std::vector<InstanceParams> out;
  const bool with_ab = uses_ab(id);
  const std::vector<std::pair<int, int>> no_ab{{0, 0}};
  const auto& ab_axis = with_ab ? grid.ab : no_ab;

  const bool with_s = id == IdentityId::T1;
  const bool with_m = id == IdentityId::EQ15;
  const bool with_y = id == IdentityId::EQ9 || id == IdentityId::EQ15;
  const std::vector<int> unit_int{0};
  const std::vector<Complex> unit_s{Complex{0.0, 0.0}};
  const std::vector<double> unit_y{0.0};
  const auto& m_axis = with_m ? grid.m_values : unit_int;
  const auto& n_axis = with_s ? unit_int : grid.n_values;
  const auto& s_axis = with_s ? grid.s_values : unit_s;
  const auto& y_axis = with_y ? grid.y_values : unit_y;

  for (const auto& [a, b] : ab_axis) {
    for (const auto d : grid.moduli) {
      for (const int label : labels_for(d, grid)) {
        for (const int r : grid.orders) {
          for (const int m : m_axis) {
            for (const int n : n_axis) {
              for (const Complex s : s_axis) {
                for (const double q : grid.q_values) {
                  for (const double x : grid.x_values) {
                    for (const double y : y_axis) {
                      InstanceParams p;
                      if (with_ab) {
                        p.a = a;
                        p.b = b;
                      }
                      p.d = d;
                      p.chi = label;
                      p.r = r;
                      if (with_m) p.m = m;
                      if (!with_s) p.n = n;
                      if (with_s) p.s = s;
                      p.q = q;
                      p.x = x;
                      if (with_y) p.y = y;
                      out.push_back(p);
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

IdentityReport evaluate_instance(IdentityId id, const InstanceParams& params,
                                 const SeriesOptions& opts) {
  try {
    return evaluate_unchecked(id, params, opts);
  } catch (const Error& e) {
    IdentityReport report;
    report.id = id;
    report.instance = params;
    report.error = e.what();
    report.numeric_error = e.is_numeric();
    report.residual = 0.0;
    report.pass = false;
    return report;
  } catch (const std::exception& e) {
    IdentityReport report;
    report.id = id;
    report.instance = params;
    report.error = e.what();
    report.pass = false;
    return report;
  }
}

std::vector<IdentityReport> run_suite(IdentityId id, const GridSpec& grid,
                                      const SeriesOptions& opts) {
  const std::vector<InstanceParams> instances = enumerate_instances(id, grid);
  std::vector<IdentityReport> reports(instances.size());
  const long long count = static_cast<long long>(instances.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_threads())
  for (long long k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    reports[idx] = evaluate_instance(id, instances[idx], opts);
  }
  return reports;
}

std::vector<IdentityReport> run_suite_serial(IdentityId id, const GridSpec& grid,
                                             const SeriesOptions& opts) {
  std::vector<IdentityReport> reports;
  for (const auto& params : enumerate_instances(id, grid)) {
    reports.push_back(evaluate_instance(id, params, opts));
  }
  return reports;
}

SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
  SuiteSummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    if (r.pass) ++s.passed;
    if (!r.error.empty()) ++s.errored;
    if (r.numeric_error) ++s.numeric_errors;
    s.max_residual = std::max(s.max_residual, r.residual);
  }
  return s;
}

}  // namespace qsym
