#ifndef ZONOCONFORM_CLI_HPP_
#define ZONOCONFORM_CLI_HPP_

namespace zonoconform {

/// Command-line entry point. Returns the process exit status: 0 iff all
/// requested outputs were written; errors print a single line to stderr.
int run_cli(int argc, const char* const* argv);

}  // namespace zonoconform

#endif  // ZONOCONFORM_CLI_HPP_
