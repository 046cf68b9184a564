#pragma once

namespace spectral::cli {

/// Parses argv and dispatches one subcommand
/// (sample | histogram | deviation | fluctuate | theory | paths).
///
/// Machine-readable output (CSV with a `# key=value` config header, or a JSON
/// mirror of the same fields) goes to --out when given, otherwise to stdout.
/// A short human-readable summary goes to stdout, or to stderr when the
/// payload already occupies stdout.
///
/// Exit codes: 0 success, 1 I/O or internal failure, 2 invalid arguments or
/// model parameters, 3 a --strict statistical band was violated.
int run(int argc, const char* const* argv);

}  // namespace spectral::cli
