// Acceptance run: one line per criterion, exit status nonzero if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsym/characters.hpp"
#include "qsym/cli.hpp"
#include "qsym/qeuler.hpp"
#include "qsym/suite.hpp"

using namespace qsym;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int index, const std::string& name, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome = body();
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = elapsed < limit_seconds;
  const bool pass = outcome.pass && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line << "criterion " << index << " [" << (pass ? "PASS" : "FAIL") << "] " << name << ": "
       << outcome.detail << " (" << cli::format_double(std::round(elapsed * 1000) / 1000)
       << " s, limit " << limit_seconds << " s" << (in_time ? "" : ", TOO SLOW") << ")";
  std::cout << line.str() << std::endl;
}

const SeriesOptions kSuiteOpts{1e-12, 20000};

// Checks residual <= rel * max(|lhs|, 1) from the raw sides, independent of
// the tolerance stored in the report.
Outcome check_relative(const std::vector<IdentityReport>& reports, double rel,
                       double degenerate_abs = -1.0) {
  std::size_t ok = 0;
  double worst = 0.0;
  std::string first_bad;
  for (const auto& r : reports) {
    const double residual = std::abs(r.lhs - r.rhs);
    double threshold = rel * std::max(std::abs(r.lhs), 1.0);
    if (degenerate_abs >= 0.0 && r.instance.x == 0.0) threshold = degenerate_abs;
    const bool good = r.error.empty() && residual <= threshold;
    if (good) {
      ++ok;
    } else if (first_bad.empty()) {
      first_bad = std::string(to_string(r.id)) + " " + (r.error.empty() ? "residual" : r.error);
    }
    worst = std::max(worst, residual / std::max(std::abs(r.lhs), 1.0));
  }
  std::ostringstream os;
  os << ok << "/" << reports.size() << " instances, worst scaled residual "
     << cli::format_double(worst);
  if (!first_bad.empty()) os << ", first failure: " << first_bad;
  return {ok == reports.size() && !reports.empty(), os.str()};
}

GridSpec symmetry_grid() {
  GridSpec g;
  g.ab = {{1, 3}, {3, 5}, {1, 5}};
  g.moduli = {1, 3};
  g.orders = {1, 2};
  return g;
}

struct Process {
  int code;
  std::string out;
};

Process run_cli(const std::string& args) {
  const std::string command = std::string(QSYM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

int main() {
  criterion(1, "oracle equivalence of grouped and nested q-Euler sums", 30.0, [] {
    std::size_t total = 0;
    std::size_t ok = 0;
    double worst = 0.0;
    for (std::int64_t d : {1, 3, 5}) {
      for (const auto& chi : build_character_group(d).characters) {
        for (int r = 1; r <= 3; ++r) {
          for (int n = 0; n <= 4; ++n) {
            for (double q : {0.3, 0.5, 0.7}) {
              for (double x : {0.0, 0.5, 1.0}) {
                const auto spec = make_qeuler_spec(chi, r, n, x, QContext(q), kSuiteOpts);
                const double diff =
                    std::abs(qeuler_poly(spec) - qeuler_poly_naive(spec, spec.plan.cutoff));
                worst = std::max(worst, diff);
                ++total;
                if (diff <= 1e-10) ++ok;
              }
            }
          }
        }
      }
    }
    return Outcome{ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                                    " instances, max |fast - naive| " + cli::format_double(worst)};
  });

  criterion(2, "interpolation l(-n, x) = E_n(x)", 10.0, [] {
    GridSpec g;
    g.moduli = {1, 3};
    g.orders = {1, 2};
    for (int n = 0; n <= 8; ++n) g.n_values.push_back(n);
    g.q_values = {0.5};
    g.x_values = {0.5, 1.0};
    const auto reports = run_suite(IdentityId::EQ4, g, kSuiteOpts);
    std::size_t ok = 0;
    double worst = 0.0;
    for (const auto& r : reports) {
      const double residual = std::abs(r.lhs - r.rhs);
      worst = std::max(worst, residual);
      if (r.error.empty() && residual <= 1e-8) ++ok;
    }
    return Outcome{ok == reports.size() && !reports.empty(),
                   std::to_string(ok) + "/" + std::to_string(reports.size()) +
                       " instances, max residual " + cli::format_double(worst)};
  });

  criterion(3, "T1 symmetry of the multiple q-l-function", 60.0, [] {
    GridSpec g = symmetry_grid();
    g.s_values = {{-3.0, 0.0}, {-1.0, 0.0}, {0.5, 0.0}, {2.5, 0.0}, {1.0, 1.0}};
    g.q_values = {0.5};
    g.x_values = {1.0};
    return check_relative(run_suite(IdentityId::T1, g, kSuiteOpts), 1e-7);
  });

  auto polynomial_grid = [] {
    GridSpec g = symmetry_grid();
    for (int n = 0; n <= 6; ++n) g.n_values.push_back(n);
    g.q_values = {0.3, 0.5};
    g.x_values = {0.0, 0.5, 1.0};
    return g;
  };

  criterion(4, "T2 symmetry of q-Euler polynomials", 60.0, [&] {
    return check_relative(run_suite(IdentityId::T2, polynomial_grid(), kSuiteOpts), 1e-7);
  });

  criterion(5, "T3 power-sum symmetry and the EQ12/EQ13 bridges", 60.0, [&] {
    const GridSpec g = polynomial_grid();
    const Outcome t3 = check_relative(run_suite(IdentityId::T3, g, kSuiteOpts), 1e-7);
    const Outcome b12 = check_relative(run_suite(IdentityId::EQ12, g, kSuiteOpts), 1e-8);
    const Outcome b13 = check_relative(run_suite(IdentityId::EQ13, g, kSuiteOpts), 1e-8);
    return Outcome{t3.pass && b12.pass && b13.pass,
                   "T3 " + t3.detail + "; EQ12 " + b12.detail + "; EQ13 " + b13.detail};
  });

  criterion(6, "addition formula and two-index identity", 30.0, [] {
    GridSpec g;
    g.moduli = {1, 3};
    g.orders = {1, 2};
    for (int k = 0; k <= 5; ++k) {
      g.n_values.push_back(k);
      g.m_values.push_back(k);
    }
    g.q_values = {0.5};
    g.x_values = {0.0, 0.25, 0.5};
    g.y_values = {0.0, 0.25, 0.5};
    const Outcome eq5 = check_relative(run_suite(IdentityId::EQ5, g, kSuiteOpts), 1e-7, 1e-12);
    const Outcome eq9 = check_relative(run_suite(IdentityId::EQ9, g, kSuiteOpts), 1e-7, 1e-12);
    const Outcome eq15 = check_relative(run_suite(IdentityId::EQ15, g, kSuiteOpts), 1e-7, 1e-12);
    return Outcome{eq5.pass && eq9.pass && eq15.pass,
                   "EQ5 " + eq5.detail + "; EQ9 " + eq9.detail + "; EQ15 " + eq15.detail};
  });

  criterion(7, "truncation soundness across accuracy targets", 10.0, [] {
    std::mt19937_64 rng(20260415);
    const std::int64_t moduli[] = {1, 3, 5, 7, 9};
    std::uniform_int_distribution<int> mod_pick(0, 4);
    std::uniform_int_distribution<int> r_pick(1, 3);
    std::uniform_int_distribution<int> n_pick(0, 6);
    std::uniform_real_distribution<double> q_pick(0.1, 0.8);
    std::uniform_real_distribution<double> x_pick(0.0, 2.0);
    int ok = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::int64_t d = moduli[mod_pick(rng)];
      const auto chi = build_character(d, static_cast<int>(rng() % euler_phi(d)));
      const int r = r_pick(rng);
      const int n = n_pick(rng);
      const QContext ctx(q_pick(rng));
      const double x = x_pick(rng);
      const Complex coarse = qeuler_poly(make_qeuler_spec(chi, r, n, x, ctx, {1e-8, 20000}));
      const Complex fine = qeuler_poly(make_qeuler_spec(chi, r, n, x, ctx, {1e-12, 20000}));
      const double diff = std::abs(coarse - fine);
      worst = std::max(worst, diff);
      if (diff <= 1e-8 + 1e-12) ++ok;
    }
    return Outcome{ok == 50, std::to_string(ok) + "/50 specs, max difference " +
                                 cli::format_double(worst)};
  });

  criterion(8, "character groups for odd moduli up to 45", 5.0, [] {
    int ok = 0;
    int total = 0;
    double worst_orth = 0.0;
    double worst_mult = 0.0;
    for (std::int64_t d = 1; d <= 45; d += 2) {
      ++total;
      const auto group = build_character_group(d);
      bool good = static_cast<std::int64_t>(group.characters.size()) == euler_phi(d);
      for (std::size_t k = 0; k < group.characters.size(); ++k) {
        const auto& chi = group.characters[k];
        if (k > 0) {
          Complex sum{0.0, 0.0};
          for (std::int64_t m = 0; m < d; ++m) sum += chi(m);
          worst_orth = std::max(worst_orth, std::abs(sum));
          good = good && std::abs(sum) <= 1e-12;
        }
        for (std::int64_t m = 0; m < d; ++m) {
          for (std::int64_t n = 0; n < d; ++n) {
            const double err = std::abs(chi((m * n) % d) - chi(m) * chi(n));
            worst_mult = std::max(worst_mult, err);
            good = good && err <= 1e-12;
          }
        }
      }
      if (good) ++ok;
    }
    return Outcome{ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                                    " moduli, max orthogonality sum " +
                                    cli::format_double(worst_orth) + ", max multiplicativity error " +
                                    cli::format_double(worst_mult)};
  });

  criterion(9, "CLI exit codes and deterministic JSON", 5.0, [] {
    struct Case {
      std::string args;
      int expected;
    };
    const std::vector<Case> matrix{
        {"char-list --d 3 --output json", 0},
        {"eval-powersum --d 3 --chi 1 --r 1 --upper 3 --n 1 --i 1 --q 0.5 --output json", 0},
        {"verify --identity EQ4 --d 1 --r 1 --q 0.5 --n-max 8 --x 1 --output json", 0},
        {"verify --identity T2 --d 3 --chi 1 --r 1 --q 0.5 --a 1 --b 3 --n-max 6 --output json", 0},
        {"verify --identity T2 --d 3 --a 1 --b 3 --n-max 4 --x 0.5 --tol 1e-30 --output json", 1},
        {"eval-qeuler --q 1.5", 2},
        {"verify --identity T2 --a 2 --d 3", 2},
        {"char-list --d 4", 2},
        {"eval-qeuler --q 0.999 --epsilon 1e-12 --max-terms 10000 --output json", 3},
        {"verify --identity EQ4 --q 0.999 --x 1 --epsilon 1e-12 --max-terms 100 --output json", 3},
    };
    int ok = 0;
    std::string first_bad;
    for (const auto& c : matrix) {
      const Process first = run_cli(c.args);
      const Process second = run_cli(c.args);
      const bool good = first.code == c.expected && second.code == c.expected &&
                        first.out == second.out;
      if (good) {
        ++ok;
      } else if (first_bad.empty()) {
        first_bad = c.args + " -> " + std::to_string(first.code);
      }
    }
    std::string detail = std::to_string(ok) + "/" + std::to_string(matrix.size()) + " argv sets";
    if (!first_bad.empty()) detail += ", first mismatch: " + first_bad;
    return Outcome{ok == static_cast<int>(matrix.size()), detail};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
