#pragma once

#include <string>
#include <vector>

#include "akb/blocks.hpp"

namespace akb {

// Sweep bounds for the property suites.  The defaults cover every modulus
// e <= 3, level r <= 2, size n <= 6 and all reduced charge vectors.
struct VerifyBounds {
    int e_max = 3;
    int r_max = 2;
    Int n_max = 6;
    Int window = 18;       // charge search radius, used by the shift searches
    unsigned seed = 20260816;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    Int checked = 0;       // number of instances examined
    std::string detail;    // first counterexample, or a note
};

// Every block for e in 2..e_max, r in 1..r_max, each reduced charge vector,
// each n in 0..n_max, computed by residue grouping (the enumeration oracle).
std::vector<Block> sweep_blocks(const VerifyBounds& bounds);

std::vector<CheckResult> verify_roundtrip(const VerifyBounds& bounds);
std::vector<CheckResult> verify_oracle(const VerifyBounds& bounds);
std::vector<CheckResult> verify_uglov(const VerifyBounds& bounds);
std::vector<CheckResult> verify_rouquier(const VerifyBounds& bounds);
std::vector<CheckResult> verify_scopes(const VerifyBounds& bounds);
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyBounds& bounds);

} // namespace akb
