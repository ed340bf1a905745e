#pragma once

#include <json.hpp>

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace kernelforge::cli {

/// One command result. Exact results carry rationals as "p/q" strings;
/// floating-point and Monte Carlo results are tagged by provenance.
struct OutputRecord {
  std::string command;
  nlohmann::json params;
  nlohmann::json result;
  std::string provenance;  // "exact" | "float" | "monte-carlo"

  nlohmann::json to_json() const;
};

/// Parses "a", "bi", "a+bi", "a-bi" into a complex number.
std::complex<double> parse_complex(const std::string& text);

/// Dispatches one CLI invocation (argv without the program name) and writes
/// a single JSON document (or CSV table) to `out`. Exit codes: 0 success,
/// 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kernelforge::cli
