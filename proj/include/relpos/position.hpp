#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <vector>

#include "relpos/rational.hpp"
#include "relpos/word_stream.hpp"

namespace relpos {

// Positions of the n-th occurrence of one letter. Positions are 0-based,
// the argument n is 1-based. Strictly increasing by construction; the scan
// is memoized and thread-safe.
class PositionSeries {
public:
    PositionSeries(StreamPtr w, Letter x) : w_(std::move(w)), x_(x) {}

    // p(n), n >= 1. Throws OccurrenceNotFound once the scan hits the index
    // budget without finding the n-th occurrence (the word may not contain
    // the letter infinitely often).
    std::int64_t at(std::uint64_t n) const;

    // Delta p(n) = p(n+1) - p(n).
    std::int64_t delta(std::uint64_t n) const { return at(n + 1) - at(n); }

    // Occurrences among positions 0..m-1.
    std::uint64_t count_up_to(std::uint64_t m) const;

    Letter letter() const noexcept { return x_; }
    const StreamPtr& word() const noexcept { return w_; }

private:
    void ensure_count(std::uint64_t n) const;
    void ensure_scanned(std::uint64_t limit) const;

    StreamPtr w_;
    Letter x_;
    mutable std::mutex mutex_;
    mutable std::vector<std::int64_t> cache_;
    mutable std::uint64_t scanned_ = 0;
};

// r(n) = p_b(n) - p_a(n); never zero for words containing both letters.
class RelativeSeries {
public:
    explicit RelativeSeries(StreamPtr w)
        : pa_(std::make_shared<PositionSeries>(w, Letter::a)),
          pb_(std::make_shared<PositionSeries>(std::move(w), Letter::b)) {}

    std::int64_t at(std::uint64_t n) const { return pb_->at(n) - pa_->at(n); }
    std::int64_t delta(std::uint64_t n) const { return at(n + 1) - at(n); }

    const PositionSeries& pa() const noexcept { return *pa_; }
    const PositionSeries& pb() const noexcept { return *pb_; }

private:
    std::shared_ptr<PositionSeries> pa_;
    std::shared_ptr<PositionSeries> pb_;
};

// Convenience one-shot accessors.
std::int64_t position_of(const StreamPtr& w, Letter x, std::uint64_t n);
std::int64_t relative_position(const StreamPtr& w, std::uint64_t n);
std::uint64_t counting(const StreamPtr& w, Letter x, std::uint64_t m);

// Difference of any 1-indexed integer series.
template <typename Series>
std::int64_t delta(const Series& s, std::uint64_t n) {
    return s(n + 1) - s(n);
}

// Longest single-letter runs within a horizon. c is the run constant:
// max of both run lengths and the position of the first b (the leading
// a-run), matching the linear bounds on r.
struct RunReport {
    std::uint64_t horizon = 0;
    std::uint64_t longest_a_run = 0;
    std::uint64_t longest_b_run = 0;
    std::uint64_t c = 0;
};

RunReport runs(const StreamPtr& w, std::uint64_t horizon);

enum class RatioKind { pa_over_n, pb_over_n, r_over_n, freq_a, freq_b };

// The exact rational value at index n; no limit is taken.
Rational empirical_ratio(const StreamPtr& w, RatioKind kind, std::uint64_t n);

// Horizon-bounded check that an integer series is a valid p_a (resp. p_b):
// strictly increasing, p(1) = 0 (resp. > 0), and Delta p > 1 at least once
// within the horizon. The last condition is a finite proxy for "infinitely
// often"; when it is the only failure the verdict carries a caveat flag.
struct SeriesValidity {
    bool valid = false;
    bool infinitely_often_caveat = false;
    std::uint64_t failing_index = 0;  // 0 when valid
    std::string detail;
};

SeriesValidity is_valid_pa(const std::function<std::int64_t(std::uint64_t)>& p,
                           std::uint64_t horizon);
SeriesValidity is_valid_pb(const std::function<std::int64_t(std::uint64_t)>& p,
                           std::uint64_t horizon);

// CSV with header n,p_a,p_b,r,delta_pa,delta_pb,delta_r and one row per n.
void write_positions_csv(std::ostream& out, const StreamPtr& w, std::uint64_t n_max);

}  // namespace relpos
