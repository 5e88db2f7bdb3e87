#ifndef QPTHETA_CLI_HPP
#define QPTHETA_CLI_HPP

#include <string>
#include <vector>

namespace qptheta
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int domain = 1;
inline constexpr int verification_failed = 2;
inline constexpr int usage = 64;
} // namespace exit_code

struct CommandResult
{
    int exit_code = exit_code::ok;
    std::string out; ///< standard output payload
    std::string err; ///< diagnostics for standard error
};

/// Parses and executes one subcommand. `args` excludes the program name.
CommandResult run_command(const std::vector<std::string> &args);

} // namespace qptheta

#endif
