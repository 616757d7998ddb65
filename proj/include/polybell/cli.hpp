#ifndef POLYBELL_CLI_HPP
#define POLYBELL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polybell
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
} // namespace exit_code

/// Runs the command line (args excludes the program name). Subcommands:
/// value, table, verify, numeric, bench. Returns 0, 1 or 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polybell

#endif
