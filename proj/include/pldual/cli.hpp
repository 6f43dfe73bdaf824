#pragma once

#include <iosfwd>

namespace pldual {

// Exit codes: 0 every check passed, 1 a check failed, 2 usage or domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pldual
