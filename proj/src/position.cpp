#include "relpos/position.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "relpos/errors.hpp"

namespace relpos {

namespace {
constexpr std::uint64_t kScanChunk = 4096;
}

void PositionSeries::ensure_scanned(std::uint64_t limit) const {
    // Caller holds mutex_. Scans the word up to position limit (exclusive),
    // recording every occurrence of x_.
    std::array<Letter, kScanChunk> buffer;
    while (scanned_ < limit) {
        std::uint64_t end = std::min(limit, scanned_ + kScanChunk);
        w_->fetch(scanned_, end, buffer.data());
        for (std::uint64_t i = scanned_; i < end; ++i) {
            if (buffer[i - scanned_] == x_) cache_.push_back(static_cast<std::int64_t>(i));
        }
        scanned_ = end;
    }
}

void PositionSeries::ensure_count(std::uint64_t n) const {
    // Caller holds mutex_. Scans never run past the budget or the word's
    // own scan limit (partial words stop at their determined prefix).
    std::uint64_t cap = std::min(index_budget(), w_->scan_limit());
    while (cache_.size() < n) {
        if (scanned_ >= cap)
            throw OccurrenceNotFound(
                "occurrence " + std::to_string(n) + " of '" + std::string(1, to_char(x_)) +
                "' not found within the first " + std::to_string(cap) +
                " positions; the word may not contain it infinitely often");
        ensure_scanned(std::min(cap, std::max(scanned_ + kScanChunk, scanned_ * 2)));
    }
}

std::int64_t PositionSeries::at(std::uint64_t n) const {
    if (n == 0) throw BadInput("position series are 1-indexed");
    std::lock_guard<std::mutex> lock(mutex_);
    ensure_count(n);
    return cache_[n - 1];
}

std::uint64_t PositionSeries::count_up_to(std::uint64_t m) const {
    std::lock_guard<std::mutex> lock(mutex_);
    ensure_scanned(m);
    auto it = std::upper_bound(cache_.begin(), cache_.end(), static_cast<std::int64_t>(m) - 1);
    return static_cast<std::uint64_t>(it - cache_.begin());
}

std::int64_t position_of(const StreamPtr& w, Letter x, std::uint64_t n) {
    return PositionSeries(w, x).at(n);
}

std::int64_t relative_position(const StreamPtr& w, std::uint64_t n) {
    return RelativeSeries(w).at(n);
}

std::uint64_t counting(const StreamPtr& w, Letter x, std::uint64_t m) {
    return PositionSeries(w, x).count_up_to(m);
}

RunReport runs(const StreamPtr& w, std::uint64_t horizon) {
    if (horizon == 0) throw BadInput("runs horizon must be >= 1");
    RunReport report;
    report.horizon = horizon;
    FiniteWord p = w->prefix(horizon);
    std::uint64_t current = 1;
    std::uint64_t first_b = 0;
    bool saw_b = false;
    auto note = [&](Letter x, std::uint64_t run) {
        auto& slot = (x == Letter::a) ? report.longest_a_run : report.longest_b_run;
        slot = std::max(slot, run);
    };
    for (std::uint64_t i = 1; i < horizon; ++i) {
        if (p[i] == p[i - 1]) {
            ++current;
        } else {
            note(p[i - 1], current);
            current = 1;
        }
    }
    note(p[horizon - 1], current);
    for (std::uint64_t i = 0; i < horizon; ++i) {
        if (p[i] == Letter::b) {
            first_b = i;
            saw_b = true;
            break;
        }
    }
    report.c = std::max(report.longest_a_run, report.longest_b_run);
    if (saw_b) report.c = std::max(report.c, first_b);
    return report;
}

Rational empirical_ratio(const StreamPtr& w, RatioKind kind, std::uint64_t n) {
    if (n == 0) throw BadInput("empirical ratios are 1-indexed");
    auto nn = static_cast<std::int64_t>(n);
    switch (kind) {
        case RatioKind::pa_over_n:
            return Rational(position_of(w, Letter::a, n), nn);
        case RatioKind::pb_over_n:
            return Rational(position_of(w, Letter::b, n), nn);
        case RatioKind::r_over_n:
            return Rational(relative_position(w, n), nn);
        case RatioKind::freq_a:
            return Rational(static_cast<std::int64_t>(counting(w, Letter::a, n)), nn);
        case RatioKind::freq_b:
            return Rational(static_cast<std::int64_t>(counting(w, Letter::b, n)), nn);
    }
    throw BadInput("unknown ratio kind");
}

namespace {

SeriesValidity check_series(const std::function<std::int64_t(std::uint64_t)>& p,
                            std::uint64_t horizon, bool is_pa) {
    SeriesValidity result;
    if (horizon < 2) throw BadInput("series validity horizon must be >= 2");
    std::int64_t first = p(1);
    if (is_pa ? (first != 0) : (first <= 0)) {
        result.failing_index = 1;
        result.detail = is_pa ? "p(1) must be 0" : "p(1) must be > 0";
        return result;
    }
    bool jump_seen = false;
    std::int64_t prev = first;
    for (std::uint64_t n = 2; n <= horizon; ++n) {
        std::int64_t value = p(n);
        if (value <= prev) {
            result.failing_index = n;
            result.detail = "series is not strictly increasing at n = " + std::to_string(n);
            return result;
        }
        if (value - prev > 1) jump_seen = true;
        prev = value;
    }
    if (!jump_seen) {
        // Every step is 1 within the horizon: the complementary letter never
        // shows up, so this cannot be a position series of a mixed word.
        // Finite evidence only, hence the caveat.
        result.infinitely_often_caveat = true;
        result.detail = "Delta p = 1 throughout the horizon (horizon-bounded verdict)";
        return result;
    }
    result.valid = true;
    return result;
}

}  // namespace

SeriesValidity is_valid_pa(const std::function<std::int64_t(std::uint64_t)>& p,
                           std::uint64_t horizon) {
    return check_series(p, horizon, true);
}

SeriesValidity is_valid_pb(const std::function<std::int64_t(std::uint64_t)>& p,
                           std::uint64_t horizon) {
    return check_series(p, horizon, false);
}

void write_positions_csv(std::ostream& out, const StreamPtr& w, std::uint64_t n_max) {
    RelativeSeries r(w);
    out << "n,p_a,p_b,r,delta_pa,delta_pb,delta_r\n";
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        out << n << ',' << r.pa().at(n) << ',' << r.pb().at(n) << ',' << r.at(n) << ','
            << r.pa().delta(n) << ',' << r.pb().delta(n) << ',' << r.delta(n) << '\n';
    }
}

}  // namespace relpos
