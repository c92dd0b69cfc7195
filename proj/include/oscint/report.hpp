#pragma once

#include <string>
#include <vector>

#include "oscint/result.hpp"

namespace oscint {

// Top-level JSON array of result objects; precision-bearing numbers are
// decimal strings.  parse_json(render_json(r)) == r.
std::string render_json(const std::vector<IntegralResult>& results);
std::vector<IntegralResult> parse_json(const std::string& text);

// RFC-4180: fixed header row, quoted fields where needed, CRLF line ends;
// inapplicable cells (k_used for the euler method, ...) are left empty
std::string render_csv(const std::vector<IntegralResult>& results);

// one full-precision block per result plus a rounded summary table (errors
// to 3 significant digits, uppercase exponent)
std::string render_text(const std::vector<IntegralResult>& results);

}  // namespace oscint
