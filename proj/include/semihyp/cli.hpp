#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semihyp::cli {

/// Run the command line tool. Exit code 0 on success (including a decided
/// NotHyperbolic verdict), 1 on input or usage errors, 2 on internal
/// inconsistency (oracle contradicting the structural verdict).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace semihyp::cli
