#ifndef PADISC_VERIFY_HPP
#define PADISC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace padisc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;    // counterexample echo on failure
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    int failures() const;
};

struct VerifyOptions {
    // Negative control: deliberately perturb one closed-form constant so
    // that the oracle-equality property must fail with a counterexample.
    bool inject_error = false;
};

// suite in {padic, classgroups, geometry, disc, oracle, tree, triangle,
// all}; throws UsageError on an unknown name.
VerifyReport verify_suite(const std::string& suite, std::uint64_t seed,
                          const VerifyOptions& options = {});

}  // namespace padisc

#endif
