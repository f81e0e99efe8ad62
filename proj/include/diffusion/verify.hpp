#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffusion/io.hpp"

namespace diffusion {

// Deliberate defects for exercising the failure path of the verifier.
enum class InjectedFault { None, Bijection, Recurrence };

std::optional<InjectedFault> parse_fault(std::string_view name);

struct VerifyOptions {
    std::size_t n_max_unlabelled = 7;
    std::size_t n_max_labelled = 5;
    std::size_t random_trials = 1000;
    std::uint64_t seed = 20160901;
    InjectedFault fault = InjectedFault::None;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<BigCount> table;  // a_1..a_11 by recurrence

    bool passed() const;
    io::Json to_json() const;
};

/// Runs the invariant suite: agreement of the board-pile counts across three
/// counting routes, bijection image and round trips against the brute-force
/// oracle, fire/reflect compatibility, labelled counts, asymptotics, the
/// period bound on random graphs and the fire audit. Throws InputError
/// when a cap exceeds the brute-force limits.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace diffusion
