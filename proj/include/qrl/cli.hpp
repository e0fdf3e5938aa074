#pragma once

#include "qrl/modarith.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qrl {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    u64 sweep_max = 50'000;
    i64 bruteforce_cap = 100'000'000;
    /// 0 = let OpenMP decide.
    int threads = 0;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<std::string> output_path;
};

/// Applies `key = value` lines (sweep_max, bruteforce_cap, threads,
/// output_format, output_path) on top of `base`. '#' starts a comment.
/// Throws InvalidArgument on unknown keys or bad values.
RunConfig load_config(std::istream& in, RunConfig base = {});

/// Exit codes: 0 all checks passed, 1 mismatch or anomaly, 2 usage or
/// precondition error. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qrl
