#pragma once

#include <iosfwd>

namespace dml {

/// Entry point of the `dml` tool. Returns 0 iff every requested check passes, 1 when a check
/// fails, 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dml
