#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lg3/json_io.hpp"

namespace lg3 {

struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string detail;  // residual, witness, or counterexample text
};

struct RunReport {
    std::string command;
    std::uint64_t seed = 0;
    unsigned precision = 0;
    std::vector<CheckRecord> checks;
    long wall_ms = 0;

    void add(std::string name, bool pass, std::string detail = "");
    [[nodiscard]] bool all_pass() const;
};

/// Report as JSON; every numeric claim inside carries its precision, and
/// wall_ms is the only field allowed to differ between identical runs.
[[nodiscard]] Json report_json(const RunReport& rep);

/// The invariant suite of one module family. `suite` is one of core,
/// incidence, projection, section; anything else throws invalid_argument.
/// trials scales the random sampling; 0 gives an empty passing report.
[[nodiscard]] RunReport verify_suite(const std::string& suite, std::uint64_t seed, long trials,
                                     unsigned digits10);

}  // namespace lg3
