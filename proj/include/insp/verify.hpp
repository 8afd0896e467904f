#pragma once

#include <cstdint>
#include <iosfwd>

namespace insp {

struct VerifyOptions {
    std::uint64_t seed = 7;
    // Base Monte Carlo sample count; the segment closed-form-vs-oracle check
    // uses ten times this.
    std::uint64_t samples = 1'000'000;
};

// Runs the full verification suite, one pass/fail line per criterion.
// Returns true when every criterion passes.
bool run_acceptance(const VerifyOptions& opt, std::ostream& out);

}  // namespace insp
