#pragma once

namespace insp::cli {

// Entry point of the sphere-inspect tool. Exit codes: 0 success, 1 domain or
// input error, 2 usage error.
int run(int argc, const char* const* argv);

}  // namespace insp::cli
