#ifndef COLLATZ_CLI_HPP
#define COLLATZ_CLI_HPP

#include <iosfwd>

namespace collatz {

/// Exit codes: 0 ok, 2 bad configuration, 3 precision cap reached.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace collatz

#endif // COLLATZ_CLI_HPP
