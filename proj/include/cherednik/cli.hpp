/// @file cli.hpp
/// @brief In-process command-line entry point.
///
/// Commands: check | normalize | matrices | end-dim | hecke | hom |
/// verify-all.  Flags: --n, --c, --t, --mode, --max-degree, --tol, --seed,
/// --json.  The environment variable CHEREDNIK_LOG=debug enables progress
/// logging on the error stream.
///
/// Exit codes:
///   0   every gating verdict passed
///   1   a mathematical verdict failed (parameters outside the good set,
///       endomorphism dimension above n, residual at or above tolerance,
///       map not an isomorphism)
///   2   internal consistency or numeric failure (an implementation bug or
///       numerical breakdown, never a property of the input parameters)
///   64  usage, parse, precondition, or mode errors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cherednik {

/// Run one CLI invocation; args excludes the program name.  All output goes
/// to the given streams, so tests can drive the CLI in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherednik
