#ifndef TRISEQ_CLI_HPP
#define TRISEQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace triseq {

// Exit codes: 0 success, 2 domain or parse error, 3 interval ambiguity,
// 4 search budget exhausted, 1 internal failure. The TRISEQ_BUDGET
// environment variable overrides the maximum search prefix length.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace triseq

#endif
