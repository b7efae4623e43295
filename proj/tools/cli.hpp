#ifndef QCG_TOOLS_CLI_HPP
#define QCG_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qcg::cli {

/// Runs one subcommand. args excludes the program name. Returns 0 on success,
/// 1 when a verification fails and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcg::cli

#endif  // QCG_TOOLS_CLI_HPP
