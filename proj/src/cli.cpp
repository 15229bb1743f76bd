#include "primroot/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "primroot/dft.hpp"
#include "primroot/errors.hpp"
#include "primroot/oracle.hpp"
#include "primroot/primitivity.hpp"

namespace primroot::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::CertificateFailure:
    case ErrorKind::AmbiguousMinimizer:
    case ErrorKind::NoUpperRoot:
    case ErrorKind::NonDescent:
    case ErrorKind::StepLimit:
      return kExitNumerical;
    default:
      return kExitDomain;
  }
}

Json to_json(const Complex& z) { return Json{{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

Json to_json(const RootSet& set) {
  Json roots = Json::array();
  for (const auto& z : set.roots) roots.push_back(to_json(z));
  return Json{{"schema_version", kSchemaVersion},
              {"n", set.n},
              {"precision", set.precision},
              {"target", to_json(set.target)},
              {"residual_bound", set.residual_bound.to_string()},
              {"roots", roots}};
}

Json to_json(const Zeta& zeta) {
  return Json{{"schema_version", kSchemaVersion},
              {"n", zeta.n},
              {"precision", zeta.precision},
              {"a", zeta.a.to_string()},
              {"b", zeta.b.to_string()},
              {"r", zeta.r.to_string()}};
}

Json to_json(const ZetaCertificate& cert) {
  Json xs = Json::array();
  for (const auto& x : cert.xs) xs.push_back(x.to_string());
  Json checks = Json::object();
  for (const auto& [name, ok] : cert.checks.named()) checks[name] = ok;
  return Json{{"n", cert.n},
              {"p", cert.p},
              {"xs", xs},
              {"checks", checks},
              {"tolerance", cert.tolerance.to_string()}};
}

Complex complex_from_json(const Json& j, int precision) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    throw Error(ErrorKind::ParseError, "expected {\"re\": ..., \"im\": ...}");
  }
  auto part = [&](const char* key) {
    const Json& v = j.at(key);
    if (v.is_string()) return Real::parse(v.get<std::string>(), precision);
    if (v.is_number_integer()) return Real::from_int(v.get<long>(), precision);
    if (v.is_number()) return Real::from_double(v.get<double>(), precision);
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "' is not a number");
  };
  return {part("re"), part("im")};
}

ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Primitive roots of unity from basic arithmetic and square roots", "primroot"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "Mantissa bits (>= 32)")
        ->check(CLI::Range(Real::kMinPrecision, 1 << 20))
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json},
                                                                          {"text", Format::text}}));
    sub->add_option("--output", cfg.output_path, "Write output to this file");
    sub->add_option("--n", cfg.n, "Degree n >= 1")->required()->check(CLI::PositiveNumber);
  };

  auto* roots = app.add_subcommand("roots", "All n-th roots of unity");
  add_globals(roots);
  auto* zeta = app.add_subcommand("zeta", "The distinguished primitive root zeta(n)");
  add_globals(zeta);
  zeta->add_flag("--certificate", cfg.certificate, "Attach the descent certificate (even n >= 6)");
  auto* verify = app.add_subcommand("verify", "Run and report every check of the construction");
  add_globals(verify);
  auto* order = app.add_subcommand("order", "Order of zeta(n)^m and the gcd criterion");
  add_globals(order);
  order->add_option("--m", cfg.m, "Exponent 1 <= m <= n")->required()->check(CLI::PositiveNumber);
  auto* roots_of = app.add_subcommand("roots-of", "All n-th roots of c = c_re + i c_im");
  add_globals(roots_of);
  roots_of->add_option("--c-re", cfg.c_re, "Real part of c (decimal)")->required();
  roots_of->add_option("--c-im", cfg.c_im, "Imaginary part of c (decimal)")->required();
  auto* dft = app.add_subcommand("dft", "Reference DFT of a vector read from JSON");
  add_globals(dft);
  dft->add_option("--input", cfg.input_path, "JSON file {n, values: [{re, im}, ...]}")->required();
  dft->add_flag("--inverse", cfg.inverse, "Apply the inverse transform");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {std::nullopt, kExitOk};
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return {std::nullopt, kExitUsage};
  }

  if (roots->parsed()) cfg.command = Command::roots;
  if (zeta->parsed()) cfg.command = Command::zeta;
  if (verify->parsed()) cfg.command = Command::verify;
  if (order->parsed()) cfg.command = Command::order;
  if (roots_of->parsed()) cfg.command = Command::roots_of;
  if (dft->parsed()) cfg.command = Command::dft;
  return {cfg, kExitOk};
}

namespace {

// Text rendering is deliberately flat: one "key: value" per line.
void render_text(const Json& j, std::ostream& os, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_text(value, os, prefix.empty() ? key : prefix + "." + key);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], os, prefix + "[" + std::to_string(i) + "]");
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const Json& j, const CliConfig& cfg, std::ostream& out) {
  std::ostringstream buf;
  if (cfg.format == Format::json) {
    buf << j.dump(2) << "\n";
  } else {
    render_text(j, buf);
  }
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open output file " + *cfg.output_path);
    file << buf.str();
  } else {
    out << buf.str();
  }
}

Json command_roots(const CliConfig& cfg) {
  Json j = to_json(solve_unity(cfg.n, cfg.precision));
  j.erase("target");
  return j;
}

Json command_roots_of(const CliConfig& cfg) {
  const Complex c{Real::parse(*cfg.c_re, cfg.precision), Real::parse(*cfg.c_im, cfg.precision)};
  return to_json(roots_of(c, cfg.n, cfg.precision));
}

Json command_zeta(const CliConfig& cfg) {
  const Zeta zeta = construct_zeta(cfg.n, cfg.precision);
  Json j = to_json(zeta);
  if (cfg.certificate) {
    if (cfg.n < 6 || cfg.n % 2 != 0) {
      throw Error(ErrorKind::InvalidN, "the descent certificate needs an even n >= 6");
    }
    const ZetaCertificate cert = build_certificate(zeta, solve_unity(cfg.n, cfg.precision));
    Json c = to_json(cert);
    c.erase("n");
    j["certificate"] = c;
  }
  return j;
}

struct VerifyOutcome {
  Json payload;
  std::vector<std::string> failed;
};

VerifyOutcome command_verify(const CliConfig& cfg) {
  const int n = cfg.n;
  const int prec = cfg.precision;
  const Zeta zeta = construct_zeta(n, prec);
  Json j = to_json(zeta);
  Json checks = Json::object();

  // The descent certificate lives at an even degree >= 6: n itself, or 2n
  // for odd n (zeta(n) is the square of zeta(2n)).
  std::optional<int> certified;
  if (n >= 6 && n % 2 == 0) certified = n;
  if (n >= 3 && n % 2 == 1) certified = 2 * n;
  if (certified) {
    const RootSet set = solve_unity(*certified, prec);
    checks["simple_zero"] = simple_zero_check(set);
    const Zeta base = *certified == n ? zeta : select_zeta(set);
    const ZetaCertificate cert = build_certificate(base, set);
    j["certificate"] = to_json(cert);
    for (const auto& [name, ok] : cert.checks.named()) checks[name] = ok;
  } else {
    checks["simple_zero"] = simple_zero_check(solve_unity(n, prec));
  }
  checks["radius_identity"] = radius_identity_check(zeta);
  checks["order_equals_n"] = multiplicative_order(zeta.value(), n, order_tolerance(prec)).is_primitive;
  checks["oracle_agreement"] = oracle::assert_remark5(n, prec);
  j["oracle_distance"] = oracle::oracle_distance(n, prec).to_string();
  j["checks"] = checks;

  VerifyOutcome outcome;
  for (const auto& [name, ok] : checks.items()) {
    if (!ok.get<bool>()) outcome.failed.push_back(name);
  }
  j["passed"] = outcome.failed.empty();
  outcome.payload = std::move(j);
  return outcome;
}

Json command_order(const CliConfig& cfg) {
  const int n = cfg.n;
  const int m = *cfg.m;
  const bool gcd_ok = gcd_primitivity(m, n);
  const Zeta zeta = construct_zeta(n, cfg.precision);
  const Complex w = complex_pow(zeta.value(), static_cast<std::uint64_t>(m));
  const PrimitivityReport report = multiplicative_order(w, n, order_tolerance(cfg.precision));
  return Json{{"schema_version", kSchemaVersion},
              {"n", n},
              {"m", m},
              {"precision", cfg.precision},
              {"w", to_json(w)},
              {"order", report.order},
              {"is_primitive", report.is_primitive},
              {"gcd", gcd(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n))},
              {"gcd_criterion", gcd_ok}};
}

Json command_dft(const CliConfig& cfg) {
  std::ifstream file(*cfg.input_path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open input file " + *cfg.input_path);
  Json input;
  try {
    input = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON input: ") + e.what());
  }
  if (!input.contains("values") || !input["values"].is_array()) {
    throw Error(ErrorKind::ParseError, "input needs a 'values' array");
  }
  std::vector<Complex> values;
  for (const auto& v : input["values"]) values.push_back(complex_from_json(v, cfg.precision));
  const int n = static_cast<int>(values.size());
  if (input.contains("n") && input["n"].get<int>() != n) {
    throw Error(ErrorKind::InvalidN, "'n' does not match the number of values");
  }
  if (cfg.n != n) throw Error(ErrorKind::InvalidN, "--n does not match the input length");
  const TwiddleTable table = twiddle_table(n, cfg.precision);
  const std::vector<Complex> out = cfg.inverse ? dft_inverse(values, table) : dft_forward(values, table);

  Json vals = Json::array();
  for (const auto& z : values) vals.push_back(to_json(z));
  Json transform = Json::array();
  for (const auto& z : out) transform.push_back(to_json(z));
  return Json{{"schema_version", kSchemaVersion},
              {"n", n},
              {"precision", cfg.precision},
              {"direction", cfg.inverse ? "inverse" : "forward"},
              {"values", vals},
              {"transform", transform}};
}

Json error_payload(ErrorKind kind, const std::string& message, const std::vector<std::string>& failed) {
  Json e{{"kind", std::string(to_string(kind))}, {"message", message}};
  if (!failed.empty()) e["failed_checks"] = failed;
  return Json{{"schema_version", kSchemaVersion}, {"error", e}};
}

}  // namespace

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check_precision(cfg.precision);
    if (cfg.n < 1) throw Error(ErrorKind::InvalidN, "n must be at least 1");
    switch (cfg.command) {
      case Command::roots: emit(command_roots(cfg), cfg, out); break;
      case Command::roots_of: emit(command_roots_of(cfg), cfg, out); break;
      case Command::zeta: emit(command_zeta(cfg), cfg, out); break;
      case Command::order: emit(command_order(cfg), cfg, out); break;
      case Command::dft: emit(command_dft(cfg), cfg, out); break;
      case Command::verify: {
        VerifyOutcome outcome = command_verify(cfg);
        if (!outcome.failed.empty()) {
          std::string list;
          for (const auto& name : outcome.failed) list += (list.empty() ? "" : ", ") + name;
          outcome.payload["error"] = error_payload(ErrorKind::CertificateFailure, list, outcome.failed)["error"];
          emit(outcome.payload, cfg, out);
          err << "CertificateFailure: " << list << "\n";
          return kExitNumerical;
        }
        emit(outcome.payload, cfg, out);
        break;
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << "\n";
    try {
      emit(error_payload(e.kind(), e.what(), {}), cfg, out);
    } catch (const Error&) {
    }
    return exit_code_for(e.kind());
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParseResult parsed = parse_args(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace primroot::cli
