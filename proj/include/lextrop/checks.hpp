#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lextrop {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::vector<std::string> failures;  // first few only

    bool ok() const noexcept { return passed == total; }
};

struct CheckOptions {
    std::uint64_t seed = 7;
    // Random instances per suite; inner sample counts scale with it.
    std::size_t samples = 20;
};

// Randomized property suites: lex order laws, Hahn valuation axioms,
// membership against the computed complex, emptiness against flattening,
// closure containment, path certificates, projection and lifting, JSON round
// trips and the skeleton valuation laws and injectivity fixtures.
std::vector<SuiteResult> run_property_suites(const CheckOptions& options);

} // namespace lextrop
