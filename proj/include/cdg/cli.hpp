#ifndef CDG_CLI_HPP
#define CDG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cdg {

/// Command dispatcher, separated from main() so tests can drive it.
/// Exit codes: 0 success / recognized outcome, 1 usage or failed verify
/// suite, 2 classify hit not_covered, 3 malformed descriptor, 4 unknown
/// family.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdg

#endif
