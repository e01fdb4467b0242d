#include "relpos/reconstruct.hpp"

#include <memory>
#include <mutex>

#include "relpos/errors.hpp"

namespace relpos {

RSpec RSpec::from_values(std::vector<std::int64_t> values) {
    auto shared = std::make_shared<std::vector<std::int64_t>>(std::move(values));
    return {[shared](std::uint64_t n) {
                if (n == 0 || n > shared->size())
                    throw BadInput("relative position value list has no entry for n = " +
                                   std::to_string(n));
                return (*shared)[n - 1];
            },
            "values(" + std::to_string(shared->size()) + ")"};
}

RSpec RSpec::linear(std::int64_t k, std::int64_t j) {
    std::string desc = std::to_string(k) + "*n" +
                       (j >= 0 ? "+" + std::to_string(j) : std::to_string(j));
    return {[k, j](std::uint64_t n) { return k * static_cast<std::int64_t>(n) + j; }, desc};
}

RSpec RSpec::of_word(const StreamPtr& w) {
    auto series = std::make_shared<RelativeSeries>(w);
    return {[series](std::uint64_t n) { return series->at(n); }, "r(" + w->provenance() + ")"};
}

namespace {

// Partial word determined by placed positions; asking beyond them is an
// error rather than a guess.
class PartialWordStream final : public WordStream {
public:
    PartialWordStream(std::vector<signed char> cells, std::uint64_t determined)
        : cells_(std::move(cells)), determined_(determined) {}

    std::string provenance() const override {
        return "reconstructed(determined=" + std::to_string(determined_) + ")";
    }

    std::uint64_t scan_limit() const override { return determined_; }

protected:
    Letter at(std::uint64_t i) const override {
        if (i < cells_.size() && cells_[i] >= 0)
            return cells_[i] == 0 ? Letter::a : Letter::b;
        throw UndeterminedRegion("position " + std::to_string(i) +
                                 " is beyond the region determined by the placed pairs");
    }

private:
    std::vector<signed char> cells_;  // -1 unknown, 0 a, 1 b
    std::uint64_t determined_;
};

class Placement {
public:
    // Returns the violation, if any, after placing n_pairs pairs.
    std::optional<Violation> run(const RSpec& r, std::uint64_t n_pairs) {
        std::int64_t r1 = r.provider(1);
        if (r1 == 0) return zero_violation(1);
        if (r1 > 0) {
            place(0, Letter::a);
            place(r1, Letter::b);
            pa.push_back(0);
            pb.push_back(r1);
        } else {
            place(0, Letter::b);
            place(-r1, Letter::a);
            pb.push_back(0);
            pa.push_back(-r1);
        }
        for (std::uint64_t n = 2; n <= n_pairs; ++n) {
            std::int64_t rn = r.provider(n);
            if (rn == 0) return zero_violation(n);
            std::int64_t k = next_free();
            if (rn > 0) {
                // k is the next a; the matching b lands at k + r(n).
                std::int64_t target = k + rn;
                if (k <= pa.back())
                    return violation(Violation::Condition::alpha, n,
                                     "k = " + std::to_string(k) + " does not exceed p_a(n-1)");
                if (target <= pb.back())
                    return violation(Violation::Condition::alpha, n,
                                     "k + r(n) = " + std::to_string(target) +
                                         " does not exceed p_b(n-1)");
                if (occupied(target))
                    return violation(Violation::Condition::alpha, n,
                                     "k + r(n) = " + std::to_string(target) +
                                         " is already occupied");
                place(k, Letter::a);
                place(target, Letter::b);
                pa.push_back(k);
                pb.push_back(target);
            } else {
                std::int64_t target = k - rn;
                if (k <= pb.back())
                    return violation(Violation::Condition::beta, n,
                                     "k = " + std::to_string(k) + " does not exceed p_b(n-1)");
                if (target <= pa.back())
                    return violation(Violation::Condition::beta, n,
                                     "k - r(n) = " + std::to_string(target) +
                                         " does not exceed p_a(n-1)");
                if (occupied(target))
                    return violation(Violation::Condition::beta, n,
                                     "k - r(n) = " + std::to_string(target) +
                                         " is already occupied");
                place(k, Letter::b);
                place(target, Letter::a);
                pb.push_back(k);
                pa.push_back(target);
            }
        }
        return std::nullopt;
    }

    std::vector<std::int64_t> pa;
    std::vector<std::int64_t> pb;

    std::uint64_t determined_prefix() const {
        std::uint64_t i = 0;
        while (i < cells.size() && cells[i] >= 0) ++i;
        return i;
    }

    std::vector<signed char> take_cells() { return std::move(cells); }

private:
    static std::optional<Violation> zero_violation(std::uint64_t n) {
        return Violation{Violation::Condition::zero_value, n,
                         "r(" + std::to_string(n) + ") = 0, but a relative position never vanishes"};
    }

    static std::optional<Violation> violation(Violation::Condition c, std::uint64_t n,
                                              std::string detail) {
        return Violation{c, n, std::move(detail)};
    }

    bool occupied(std::int64_t pos) const {
        auto i = static_cast<std::uint64_t>(pos);
        return i < cells.size() && cells[i] >= 0;
    }

    void place(std::int64_t pos, Letter x) {
        auto i = static_cast<std::uint64_t>(pos);
        if (i >= index_budget())
            throw BudgetExceeded("placement at " + std::to_string(i) +
                                 " exceeds the index budget");
        if (i >= cells.size()) cells.resize(std::max<std::size_t>(i + 1, cells.size() * 2), -1);
        cells[i] = (x == Letter::a) ? 0 : 1;
    }

    std::int64_t next_free() {
        while (frontier < cells.size() && cells[frontier] >= 0) ++frontier;
        return static_cast<std::int64_t>(frontier);
    }

    std::vector<signed char> cells;
    std::uint64_t frontier = 0;
};

}  // namespace

ReconstructionOutcome reconstruct(const RSpec& r, std::uint64_t n_pairs) {
    if (n_pairs == 0) throw BadInput("reconstruction needs at least one pair");
    ReconstructionOutcome out;
    Placement placement;
    out.violation = placement.run(r, n_pairs);
    out.pa = std::move(placement.pa);
    out.pb = std::move(placement.pb);
    if (!out.violation) {
        out.determined_prefix = placement.determined_prefix();
        out.word = std::make_shared<PartialWordStream>(placement.take_cells(),
                                                       out.determined_prefix);
    }
    return out;
}

std::optional<Violation> validate(const RSpec& r, std::uint64_t n) {
    if (n == 0) throw BadInput("validation needs at least one pair");
    Placement placement;
    return placement.run(r, n);
}

const char* condition_name(Violation::Condition c) noexcept {
    switch (c) {
        case Violation::Condition::zero_value: return "zero-value";
        case Violation::Condition::alpha: return "alpha";
        case Violation::Condition::beta: return "beta";
    }
    return "?";
}

}  // namespace relpos
