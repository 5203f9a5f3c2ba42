#ifndef POLYDIAM_CLI_HPP
#define POLYDIAM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polydiam {

/**
 * Full command-line surface. `args` excludes the program name. Exit
 * status: 0 success, 1 input error (bad file, bad flag, infeasible or
 * unpointed instance), 2 violated internal invariant. Data goes to `out`;
 * the closing one-line summary and diagnostics go to `err`.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polydiam

#endif
