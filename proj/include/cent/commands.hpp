// The five analyses behind the CLI subcommands.  Each returns a
// machine-readable report plus the process exit code: 0 when every
// verification passed, 1 on any verification failure.  Input problems
// (schema, ring/analysis mismatch, cap violations) throw Error and map
// to exit code 2 in the driver.
//
// Reports are deterministic: ordered keys, no timestamps, identical
// input gives identical bytes.

#pragma once

#include "cent/instance.hpp"

namespace cent {

struct Options {
    int oracle_cap = 10;     // largest n the brute-force oracle will touch
    bool no_oracle = false;  // skip oracle cross-checks entirely
    unsigned long long seed = 0;  // randomized property sampling
};

struct CommandResult {
    nlohmann::ordered_json report;
    int exit_code = 0;
};

CommandResult cmd_basis(const InstanceSpec& spec, const Options& opts);
CommandResult cmd_cell(const InstanceSpec& spec, const Options& opts);
CommandResult cmd_frobenius(const InstanceSpec& spec, const Options& opts);
CommandResult cmd_structure(const InstanceSpec& spec, const Options& opts);
CommandResult cmd_oracle(const InstanceSpec& spec, const Options& opts);

CommandResult run_command(const std::string& name, const InstanceSpec& spec, const Options& opts);

extern const char* const kToolVersion;

}  // namespace cent
