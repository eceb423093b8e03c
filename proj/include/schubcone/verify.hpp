#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubcone/io.hpp"
#include "schubcone/rootsys.hpp"

namespace schubcone {

struct SuiteConfig {
    std::uint64_t seed = 20240601;
    int samples = 10;      // random reduced words per element
    int jobs = 1;
    int word_length = 6;   // demazure suite: all words up to this length
    int height_bound = 2;  // character suite
    std::optional<std::uint64_t> max_order;
};

struct Violation {
    std::string instance;  // enough to replay with the CLI
    std::string what;
};

struct SuiteReport {
    std::string suite;
    std::string type;
    std::uint64_t checked = 0;
    std::vector<Violation> violations;
    std::map<std::string, std::int64_t> counters;  // suite specific tallies
    double elapsed_ms = 0;
    SuiteConfig config;

    bool pass() const { return violations.empty(); }
};

const std::vector<std::string>& suite_names();

// Throws Error for an unknown suite and GuardExceeded when |W| is too large.
SuiteReport run_suite(const std::string& name, const RootSystemSpec& spec, const SuiteConfig& cfg = {});

json report_json(const SuiteReport& r);

}  // namespace schubcone
