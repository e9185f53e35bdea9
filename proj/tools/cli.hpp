#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cfree::cli {

/// Runs the command line; argv[0] is the program name. Returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

struct VerifyOptions {
    std::string suite = "all";
    std::size_t order = 5;
    std::uint64_t seed = 20240611;
};

/// Runs the named randomized suites, logging one line per check.
/// Returns 0 iff every check passed.
int run_verify(const VerifyOptions &options, std::ostream &log);

} // namespace cfree::cli
