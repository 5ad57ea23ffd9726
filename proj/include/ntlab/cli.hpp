#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ntlab::cli {

/// Exit codes: 0 every verdict PASS or SKIPPED, 1 some FAIL, 2 usage, parse,
/// budget or data error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Family name of the group that preserves a catalog code family.
std::string matching_group(const std::string& code_family);

} // namespace ntlab::cli
