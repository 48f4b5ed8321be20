/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_CLI_HH
#define POLYCHI_GUARD_CLI_HH 1

#include <ostream>
#include <string>
#include <vector>

namespace polychi
{
    /// Exit codes: 0 success, 1 a verify run found violations, 2 usage or
    /// input error (message on err).
    auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;

    /// Convenience overload; args excludes the program name.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
