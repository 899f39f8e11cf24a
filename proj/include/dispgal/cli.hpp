#pragma once

#include <string>
#include <vector>

namespace dispgal {

// Exit codes: 0 ok, 1 infeasible / verification failed / domain error,
// 2 usage error, 3 internal error. DISPGAL_TIMEOUT sets the default bench
// timeout in seconds.
int cli_run(const std::vector<std::string>& args);

}  // namespace dispgal
