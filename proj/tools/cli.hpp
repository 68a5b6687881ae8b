#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fejer::cli {

/// Runs one command line (without the program name). Exit codes: 0 when every
/// certificate is contained or every trial passed, 1 on usage or input errors,
/// 2 when a violation is detected.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fejer::cli
