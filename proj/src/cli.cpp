#include "qsym/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsym/characters.hpp"
#include "qsym/errors.hpp"
#include "qsym/identities.hpp"
#include "qsym/lfun.hpp"
#include "qsym/qeuler.hpp"
#include "qsym/suite.hpp"

namespace qsym::cli {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

const std::map<std::string, Command> kCommands{
    {"char-list", Command::CharList},       {"eval-qeuler", Command::EvalQEuler},
    {"eval-lfun", Command::EvalLfun},       {"eval-powersum", Command::EvalPowerSum},
    {"verify", Command::Verify},
};

const std::map<std::string, OutputFormat> kFormats{
    {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"pretty", OutputFormat::Pretty}};

std::string command_name(Command c) {
  for (const auto& [name, cmd] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string re_text = text.substr(0, comma);
    const std::string im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::exception&) {
    throw UsageError("--s: expected \"re,im\", got \"" + text + "\"");
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const InstanceParams& p) {
  json j = json::object();
  if (p.a) j["a"] = *p.a;
  if (p.b) j["b"] = *p.b;
  j["d"] = p.d;
  j["chi"] = p.chi;
  j["r"] = p.r;
  if (p.m) j["m"] = *p.m;
  if (p.n) j["n"] = *p.n;
  if (p.s) j["s"] = to_json(*p.s);
  j["q"] = p.q;
  j["x"] = p.x;
  if (p.y) j["y"] = *p.y;
  return j;
}

json to_json(const IdentityReport& report, bool timings) {
  json j = json::object();
  j["identity_id"] = std::string(to_string(report.id));
  j["instance"] = to_json(report.instance);
  j["lhs"] = to_json(report.lhs);
  j["rhs"] = to_json(report.rhs);
  j["residual"] = report.residual;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  if (!report.error.empty()) j["error"] = report.error;
  if (timings) j["elapsed"] = report.elapsed.count();
  return j;
}

std::string instance_text(const InstanceParams& p) {
  std::ostringstream os;
  if (p.a) os << "a=" << *p.a << ";";
  if (p.b) os << "b=" << *p.b << ";";
  os << "d=" << p.d << ";chi=" << p.chi << ";r=" << p.r;
  if (p.m) os << ";m=" << *p.m;
  if (p.n) os << ";n=" << *p.n;
  if (p.s) os << ";s=" << format_double(p.s->real()) << "," << format_double(p.s->imag());
  os << ";q=" << format_double(p.q) << ";x=" << format_double(p.x);
  if (p.y) os << ";y=" << format_double(*p.y);
  return os.str();
}

std::string complex_text(Complex z) {
  return format_double(z.real()) + (z.imag() < 0 || std::signbit(z.imag()) ? " - " : " + ") +
         format_double(std::abs(z.imag())) + "i";
}

GridSpec grid_from(const RunConfig& c) {
  GridSpec g;
  g.ab = {{c.a, c.b}};
  g.moduli = {c.d};
  if (c.chi) g.chi_labels = std::vector<int>{*c.chi};
  g.orders = {c.r};
  if (c.n_max) {
    for (int n = 0; n <= *c.n_max; ++n) g.n_values.push_back(n);
  } else {
    g.n_values = {c.n};
  }
  if (c.m_max) {
    for (int m = 0; m <= *c.m_max; ++m) g.m_values.push_back(m);
  } else {
    g.m_values = {c.m};
  }
  g.s_values = {c.s};
  g.q_values = {c.q};
  g.x_values = {c.x};
  g.y_values = {c.y};
  return g;
}

// Writes one evaluated value together with the parameters that produced it.
void emit_value(const RunConfig& c, json params, Complex value, std::ostream& out) {
  switch (c.output) {
    case OutputFormat::Json: {
      json j = json::object();
      j["command"] = command_name(c.command);
      j["params"] = std::move(params);
      j["value"] = to_json(value);
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "re,im\n" << format_double(value.real()) << "," << format_double(value.imag()) << "\n";
      break;
    case OutputFormat::Pretty:
      out << command_name(c.command) << " " << params.dump() << "\n  = " << complex_text(value)
          << "\n";
      break;
  }
}

int run_char_list(const RunConfig& c, std::ostream& out) {
  const CharacterGroup group = build_character_group(c.d);
  if (c.output == OutputFormat::Csv) out << "d,label,residue,re,im\n";
  for (const auto& chi : group.characters) {
    if (c.chi && *c.chi != chi.label()) continue;
    switch (c.output) {
      case OutputFormat::Json: {
        json values = json::array();
        for (const auto& v : chi.values()) values.push_back(to_json(v));
        json j = json::object();
        j["d"] = chi.modulus();
        j["label"] = chi.label();
        j["values"] = std::move(values);
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::Csv:
        for (std::size_t m = 0; m < chi.values().size(); ++m) {
          out << chi.modulus() << "," << chi.label() << "," << m << ","
              << format_double(chi.values()[m].real()) << ","
              << format_double(chi.values()[m].imag()) << "\n";
        }
        break;
      case OutputFormat::Pretty:
        out << "chi[" << chi.label() << "] mod " << chi.modulus() << ":";
        for (const auto& v : chi.values()) out << "  " << complex_text(v);
        out << "\n";
        break;
    }
  }
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const SeriesOptions opts{c.epsilon, c.max_terms};
  std::vector<IdentityReport> reports = run_suite(*c.identity, grid_from(c), opts);
  if (c.tolerance) {
    for (auto& report : reports) {
      if (report.error.empty()) finalize_relative(report, *c.tolerance);
    }
  }
  const SuiteSummary summary = summarize(reports);

  if (c.output == OutputFormat::Csv) out << "identity_id,instance,residual,pass\n";
  for (const auto& report : reports) {
    switch (c.output) {
      case OutputFormat::Json: out << to_json(report, c.timings).dump() << "\n"; break;
      case OutputFormat::Csv:
        out << to_string(report.id) << "," << instance_text(report.instance) << ","
            << format_double(report.residual) << "," << (report.pass ? "true" : "false") << "\n";
        break;
      case OutputFormat::Pretty:
        out << (report.pass ? "PASS " : "FAIL ") << to_string(report.id) << " "
            << instance_text(report.instance);
        if (report.error.empty()) {
          out << "  residual=" << format_double(report.residual)
              << " tol=" << format_double(report.tolerance);
        } else {
          out << "  error: " << report.error;
        }
        if (c.timings) out << " elapsed=" << format_double(report.elapsed.count()) << "s";
        out << "\n";
        break;
    }
  }
  if (c.output == OutputFormat::Pretty) {
    out << summary.passed << "/" << summary.total << " passed, max residual "
        << format_double(summary.max_residual) << "\n";
  }
  if (summary.numeric_errors > 0) return kExitNumeric;
  return summary.pass() ? kExitOk : kExitIdentityFailure;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  const SeriesOptions opts{c.epsilon, c.max_terms};
  switch (c.command) {
    case Command::CharList: return run_char_list(c, out);
    case Command::Verify: return run_verify(c, out);
    case Command::EvalQEuler: {
      const DirichletCharacter chi = build_character(c.d, c.chi.value_or(0));
      const QContext ctx(c.q);
      const Complex value = qeuler_poly(make_qeuler_spec(chi, c.r, c.n, c.x, ctx, opts));
      emit_value(c, {{"d", c.d}, {"chi", chi.label()}, {"r", c.r}, {"n", c.n}, {"q", c.q},
                     {"x", c.x}},
                 value, out);
      return kExitOk;
    }
    case Command::EvalLfun: {
      const DirichletCharacter chi = build_character(c.d, c.chi.value_or(0));
      const QContext ctx(c.q);
      const Complex value = lfun_eval(make_lfun_spec(chi, c.r, c.s, c.x, ctx, opts));
      emit_value(c, {{"d", c.d}, {"chi", chi.label()}, {"r", c.r}, {"s", to_json(c.s)},
                     {"q", c.q}, {"x", c.x}},
                 value, out);
      return kExitOk;
    }
    case Command::EvalPowerSum: {
      const DirichletCharacter chi = build_character(c.d, c.chi.value_or(0));
      const QContext ctx(c.q);
      const Complex value = power_sum(chi, c.r, c.n, c.i, c.upper, ctx);
      emit_value(c, {{"d", c.d}, {"chi", chi.label()}, {"r", c.r}, {"n", c.n}, {"i", c.i},
                     {"upper", c.upper}, {"q", c.q}},
                 value, out);
      return kExitOk;
    }
  }
  return kExitUsage;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"q-Euler polynomials attached to Dirichlet characters: evaluation and "
               "symmetry-identity verification",
               "qsym"};
  std::string command;
  std::string s_text = "0,0";
  std::string identity_text;
  std::string output_text = "pretty";
  int chi = 0;
  int n_max = 0;
  int m_max = 0;
  double tolerance = 0.0;
  std::string out_path;

  app.add_option("command", command, "char-list | eval-qeuler | eval-lfun | eval-powersum | verify")
      ->required();
  app.add_option("--d", c.d, "odd modulus of the character");
  auto* chi_opt = app.add_option("--chi", chi, "character index within the group (0 = principal)");
  app.add_option("--r", c.r, "order r >= 1");
  app.add_option("--n", c.n, "degree n >= 0");
  app.add_option("--m", c.m, "second degree for EQ15");
  app.add_option("--i", c.i, "power-sum index, 0 <= i <= n");
  auto* n_max_opt = app.add_option("--n-max", n_max, "verify degrees 0..n-max");
  auto* m_max_opt = app.add_option("--m-max", m_max, "verify EQ15 degrees m = 0..m-max");
  app.add_option("--upper", c.upper, "power-sum upper limit");
  app.add_option("--q", c.q, "deformation parameter in (0,1)");
  app.add_option("--x", c.x, "argument x");
  app.add_option("--y", c.y, "second argument y");
  app.add_option("--s", s_text, "complex exponent as \"re,im\"");
  app.add_option("--a", c.a, "odd symmetry parameter a");
  app.add_option("--b", c.b, "odd symmetry parameter b");
  app.add_option("--identity", identity_text, "T1 T2 T3 EQ4 EQ5 EQ9 EQ12 EQ13 EQ15");
  app.add_option("--epsilon", c.epsilon, "target truncation error per series");
  app.add_option("--max-terms", c.max_terms, "hard cap on series terms");
  auto* tol_opt = app.add_option("--tol", tolerance, "override identity tolerance (relative)");
  app.add_option("--output", output_text, "json | csv | pretty");
  auto* out_opt = app.add_option("--out", out_path, "write records to this file");
  app.add_flag("--timings", c.timings, "include elapsed time per identity instance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto cmd = kCommands.find(command);
  require(cmd != kCommands.end(), "unknown command \"" + command + "\"");
  c.command = cmd->second;
  const auto fmt = kFormats.find(output_text);
  require(fmt != kFormats.end(), "--output must be json, csv or pretty");
  c.output = fmt->second;
  c.s = parse_complex(s_text);
  if (chi_opt->count() > 0) c.chi = chi;
  if (n_max_opt->count() > 0) c.n_max = n_max;
  if (m_max_opt->count() > 0) c.m_max = m_max;
  if (tol_opt->count() > 0) c.tolerance = tolerance;
  if (out_opt->count() > 0) c.out_path = out_path;

  require(c.q > 0.0 && c.q < 1.0, "q must lie in (0,1)");
  require(c.d >= 1, "d must be >= 1");
  require(c.d % 2 == 1, "d must be odd");
  require(!c.chi || *c.chi >= 0, "chi must be >= 0");
  require(c.r >= 1, "r must be >= 1");
  require(c.n >= 0 && c.m >= 0, "degrees must be >= 0");
  require(!c.n_max || *c.n_max >= 0, "n-max must be >= 0");
  require(!c.m_max || *c.m_max >= 0, "m-max must be >= 0");
  require(c.x >= 0.0 && c.y >= 0.0, "x and y must be >= 0");
  require(c.epsilon > 0.0, "epsilon must be positive");
  require(!c.tolerance || *c.tolerance > 0.0, "tol must be positive");
  require(c.a >= 1 && c.b >= 1, "a and b must be positive");
  require(c.a % 2 == 1, "a must be odd");
  require(c.b % 2 == 1, "b must be odd");
  if (c.command == Command::EvalPowerSum) {
    require(c.i >= 0, "i must be >= 0");
    require(c.i <= c.n, "i must not exceed n");
    require(c.upper >= 1, "upper must be >= 1");
  }
  if (c.command == Command::EvalLfun) require(c.x > 0.0, "x must be > 0 for eval-lfun");
  if (c.command == Command::Verify) {
    require(!identity_text.empty(), "verify needs --identity");
    c.identity = parse_identity(identity_text);
    require(c.identity.has_value(), "unknown identity \"" + identity_text + "\"");
    const bool needs_positive_x = *c.identity == IdentityId::T1 || *c.identity == IdentityId::EQ4;
    if (needs_positive_x) require(c.x > 0.0, "x must be > 0 for " + identity_text);
  }
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.out_path) {
    file.open(*config.out_path);
    if (!file) {
      err << "error: cannot open " << *config.out_path << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    return dispatch(config, *sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_numeric() ? kExitNumeric : kExitUsage;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace qsym::cli
