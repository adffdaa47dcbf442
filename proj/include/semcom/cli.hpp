#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semcom {

// Full command-line surface; returns the process exit code (0 success,
// 1 validation/computation failure, 2 usage error). Streams are injected
// so tests can capture output.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace semcom
