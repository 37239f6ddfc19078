#pragma once

#include <iosfwd>

namespace saferc::cli {

// Re-creations of the two "sloppy programming" test programs. Payload goes to
// `out`; violations go through whatever constraint handler and diagnostic sink
// the caller installed. Both return 0.

int run_string_demo(std::ostream& out);
int run_stdio_demo(std::ostream& out);

}  // namespace saferc::cli
