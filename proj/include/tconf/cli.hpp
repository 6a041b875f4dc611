#ifndef TCONF_CLI_HPP
#define TCONF_CLI_HPP

namespace tconf {

// Entry point shared by the tconf binary and the CLI tests.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure.
int run_cli(int argc, const char* const* argv);

}  // namespace tconf

#endif
