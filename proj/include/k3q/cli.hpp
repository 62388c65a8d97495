#pragma once

#include <ostream>

namespace k3q {

// Exit codes: 0 ok, 1 the mathematics disagrees with the shipped data, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace k3q
