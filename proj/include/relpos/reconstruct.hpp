#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relpos/position.hpp"
#include "relpos/word_stream.hpp"

namespace relpos {

// A candidate relative position function: total rule n |-> r(n) for n >= 1.
struct RSpec {
    std::function<std::int64_t(std::uint64_t)> provider;
    std::string description;

    static RSpec from_values(std::vector<std::int64_t> values);  // 1-based
    static RSpec linear(std::int64_t k, std::int64_t j);         // n |-> k*n + j
    static RSpec of_word(const StreamPtr& w);                    // backed by r_w
};

// First failure while running the placement algorithm.
struct Violation {
    enum class Condition { zero_value, alpha, beta };
    Condition condition = Condition::zero_value;
    std::uint64_t index = 0;  // smallest failing n
    std::string detail;
};

// Result of reconstructing a word from r: on success a partial word that is
// fully determined on [0, determined_prefix) and raises UndeterminedRegion
// beyond the positions the placed pairs cover.
struct ReconstructionOutcome {
    StreamPtr word;  // null on violation
    std::uint64_t determined_prefix = 0;
    std::vector<std::int64_t> pa;  // placed positions, 1-based index n
    std::vector<std::int64_t> pb;
    std::optional<Violation> violation;

    bool success() const noexcept { return !violation.has_value(); }
};

// Runs the placement algorithm for n_pairs pairs: seed from the sign of
// r(1), then place each next pair at the smallest unoccupied position,
// offset by r. Placement collisions are reported as alpha/beta violations
// with the smallest failing index; r(n) = 0 is a zero-value violation.
ReconstructionOutcome reconstruct(const RSpec& r, std::uint64_t n_pairs);

// Dry run: nullopt on success over 1..n, otherwise the first violation.
std::optional<Violation> validate(const RSpec& r, std::uint64_t n);

const char* condition_name(Violation::Condition c) noexcept;

}  // namespace relpos
