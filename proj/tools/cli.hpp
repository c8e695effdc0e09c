#pragma once

namespace locavg {

// Full command-line entry point (gen / run / verify / sweep / report).
// Returns the process exit code: 0 ok, 1 validation failure, 2 input error.
int cli_main(int argc, const char* const* argv);

}  // namespace locavg
