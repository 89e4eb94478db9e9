#pragma once

#include "schur/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace schur::cli {

inline constexpr const char *machine_format_tag = "schur-machine 1";

enum ExitCode { success = 0, failure = 1, usage_error = 2 };

// Hooks for tests; the shipped binary leaves them empty.
struct Hooks {
	decltype(VerifyOptions::tamper) tamper;
};

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const Hooks &hooks = {});

} // namespace schur::cli
