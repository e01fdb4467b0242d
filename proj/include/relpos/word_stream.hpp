#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "relpos/finite_word.hpp"
#include "relpos/letter.hpp"

namespace relpos {

// Global cap on lazy expansion. Any attempt to read a letter at or beyond
// the budget throws BudgetExceeded; occurrence scans that reach it report
// OccurrenceNotFound instead of looping forever.
std::uint64_t index_budget() noexcept;
void set_index_budget(std::uint64_t budget) noexcept;

// Scoped override, mostly for tests.
class BudgetGuard {
public:
    explicit BudgetGuard(std::uint64_t budget) : saved_(index_budget()) {
        set_index_budget(budget);
    }
    ~BudgetGuard() { set_index_budget(saved_); }
    BudgetGuard(const BudgetGuard&) = delete;
    BudgetGuard& operator=(const BudgetGuard&) = delete;

private:
    std::uint64_t saved_;
};

// A one-sided infinite binary word, 0-indexed. Logically immutable:
// letter_at(i) is deterministic and stable across calls. Implementations
// memoize as needed; all mutation is internal and thread-safe, so a stream
// may be shared between threads. prefix() returns a plain FiniteWord that
// can be handed around freely as a frozen snapshot.
class WordStream {
public:
    virtual ~WordStream() = default;

    Letter letter_at(std::uint64_t i) const;

    FiniteWord prefix(std::uint64_t n) const;

    // Bulk read of [begin, end) into out. Same budget rules as letter_at.
    void fetch(std::uint64_t begin, std::uint64_t end, Letter* out) const;

    virtual std::string provenance() const = 0;

    // How far a linear scan may read. Infinite words return no limit;
    // partially determined words cap it at their determined prefix.
    virtual std::uint64_t scan_limit() const { return UINT64_MAX; }

protected:
    // Unchecked single-letter access; budget is enforced by letter_at/fetch.
    virtual Letter at(std::uint64_t i) const = 0;
    // Bulk default just loops; memoizing streams override to lock once.
    virtual void fetch_impl(std::uint64_t begin, std::uint64_t end, Letter* out) const;
};

using StreamPtr = std::shared_ptr<const WordStream>;

// Constructors for the basic stream kinds.
StreamPtr periodic(const FiniteWord& period);                 // throws BadInput if empty
StreamPtr from_function(std::function<Letter(std::uint64_t)> rule, std::string provenance);
StreamPtr reflect(const StreamPtr& w);
StreamPtr concat(const FiniteWord& head, const StreamPtr& tail, std::string provenance);

// Letterwise integer coding of a stream.
class CodedSeries {
public:
    CodedSeries(StreamPtr w, std::int64_t value_a, std::int64_t value_b)
        : w_(std::move(w)), value_a_(value_a), value_b_(value_b) {}
    std::int64_t operator()(std::uint64_t i) const {
        return w_->letter_at(i) == Letter::a ? value_a_ : value_b_;
    }

private:
    StreamPtr w_;
    std::int64_t value_a_;
    std::int64_t value_b_;
};

inline CodedSeries apply_coding(StreamPtr w, std::int64_t value_a, std::int64_t value_b) {
    return CodedSeries(std::move(w), value_a, value_b);
}

// The pair l_{2n} l_{2n+1}.
std::pair<Letter, Letter> dimer(const StreamPtr& w, std::uint64_t n);

// Finite diagnostic for membership in the class of words containing both
// letters infinitely often (only semidecidable, hence the horizon).
struct MixednessReport {
    std::uint64_t horizon = 0;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
    enum class Verdict { both_seen, only_a_seen, only_b_seen } verdict = Verdict::both_seen;
};

MixednessReport mixedness(const StreamPtr& w, std::uint64_t horizon);

}  // namespace relpos
