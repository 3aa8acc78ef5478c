#ifndef PADISC_CLI_HPP
#define PADISC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace padisc {

// Dispatch a full command line (without the program name).  Exit codes:
// 0 success, 1 domain error, 2 usage error, 3 precision exhausted.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace padisc

#endif
