#pragma once

#include <string>
#include <vector>

namespace ladder {

/// Command-line driver. `args` excludes the program name, e.g.
/// {"transform", "--input", "f.json"}. Returns the process exit code:
///
///   0  success
///   1  I/O error (unreadable/unwritable file)
///   2  validation error (bad JSON, malformed objects, failed exact check)
///   3  unsupported regime (e.g. inversion for p > 1, oscillator action of
///      an element that does not stabilize the origin)
///
/// Subcommands: transform, invert, pair, check-minors, act, demo.
int run_cli(const std::vector<std::string>& args);

int run_cli(int argc, const char* const* argv);

}  // namespace ladder
