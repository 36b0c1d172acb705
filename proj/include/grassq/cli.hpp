// Command-line front end: products, invariants, conversions, enumeration and
// verification with stable text and JSON renderings.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grassq::cli {

// Dispatches argv (without the program name). Returns 0 on success, 2 on
// parse/validation/degree errors (one-line diagnostic on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grassq::cli
