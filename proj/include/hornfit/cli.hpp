#ifndef HORNFIT_CLI_HPP
#define HORNFIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hornfit {

// Entry point behind the binary. Returns the process exit code:
//   0 YES / true / entailed, 1 NO / false, 2 UNKNOWN,
//   64 usage error, 65 parse or input error, 70 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hornfit

#endif
