#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "primroot/complex.hpp"
#include "primroot/errors.hpp"
#include "primroot/phi_map.hpp"
#include "primroot/root_solver.hpp"
#include "primroot/zeta.hpp"

namespace primroot::cli {

inline constexpr const char* kSchemaVersion = "1";

enum class Command { roots, zeta, verify, order, roots_of, dft };
enum class Format { json, text };

struct CliConfig {
  Command command = Command::zeta;
  int n = 1;
  std::optional<int> m;
  std::optional<std::string> c_re;
  std::optional<std::string> c_im;
  int precision = Real::kDefaultPrecision;
  Format format = Format::json;
  bool certificate = false;
  bool inverse = false;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitUsage = 64;

struct ParseResult {
  std::optional<CliConfig> config;
  /// Set when parsing finished without a runnable config (help or bad flags).
  int exit_code = kExitOk;
};

/// Parses argv (argv[0] is the program name). Usage text and flag errors go
/// to `err`, --help output to `out`.
ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs one command. Output goes to `out` unless config.output_path is set.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// JSON encoding. Every real number is a decimal string that parses back to
// the same bits at the stated precision.
using Json = nlohmann::ordered_json;

Json to_json(const Complex& z);
Json to_json(const RootSet& set);
Json to_json(const Zeta& zeta);
Json to_json(const ZetaCertificate& cert);
Complex complex_from_json(const Json& j, int precision);

int exit_code_for(ErrorKind kind);

}  // namespace primroot::cli
