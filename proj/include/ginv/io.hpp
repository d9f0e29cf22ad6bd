#pragma once

// JSON formats:
//   complex matrix   {"rows": r, "cols": c, "entries": [[re, im], ...]}
//   rational matrix  {"rows": r, "cols": c, "entries": [["p/q", "r/s"], ...]}
//   report           {"<check>": {"residual": x, "pass": true}, ...}
// Entries are row-major.

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ginv/matcore.hpp"
#include "ginv/oracle.hpp"
#include "ginv/report.hpp"

namespace ginv::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

exact::RationalMatrix rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const exact::RationalMatrix& m);

nlohmann::json report_to_json(const VerificationReport& r);

/// Parses text, rethrowing JSON syntax errors as ParseError with line/column.
nlohmann::json parse_text(const std::string& text, const std::string& origin);

/// Reads and parses a file; ParseError on I/O or syntax failure.
nlohmann::json read_file(const std::string& path);

}  // namespace ginv::io
