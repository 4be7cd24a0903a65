#ifndef FFRT_CLI_HPP
#define FFRT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ffrt::cli {

/// Runs one command-line invocation. Returns 0 on success, 1 on a domain
/// error (with a machine-readable JSON object on err when the json format is
/// selected) and 2 on a usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ffrt::cli

#endif
