#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relpos::verify {

// One registered identity check. Each id exercises exactly one documented
// law; scale knobs default to desk scale and can be raised from the CLI.
struct Scale {
    std::uint64_t n = 0;    // series horizon (0 = check default)
    std::uint64_t len = 0;  // word/search length (0 = check default)
};

struct Certificate {
    std::string id;
    bool pass = false;
    std::string detail;  // human-readable summary: scales, located thresholds, failures
};

std::vector<std::string> check_ids();
bool has_check(const std::string& id);
Certificate run_check(const std::string& id, const Scale& scale = {});  // BadInput on unknown id
std::vector<Certificate> run_all(const Scale& scale = {});

}  // namespace relpos::verify
