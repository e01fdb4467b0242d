#include "relpos/word_stream.hpp"

#include <atomic>
#include <mutex>

#include "relpos/errors.hpp"

namespace relpos {

namespace {

std::atomic<std::uint64_t> g_index_budget{10'000'000};

void check_budget(std::uint64_t i) {
    std::uint64_t budget = g_index_budget.load(std::memory_order_relaxed);
    if (i >= budget)
        throw BudgetExceeded("index " + std::to_string(i) + " exceeds the index budget of " +
                             std::to_string(budget));
}

}  // namespace

std::uint64_t index_budget() noexcept { return g_index_budget.load(std::memory_order_relaxed); }

void set_index_budget(std::uint64_t budget) noexcept {
    g_index_budget.store(budget, std::memory_order_relaxed);
}

Letter WordStream::letter_at(std::uint64_t i) const {
    check_budget(i);
    return at(i);
}

FiniteWord WordStream::prefix(std::uint64_t n) const {
    std::vector<Letter> out(n);
    fetch(0, n, out.data());
    return FiniteWord(std::move(out));
}

void WordStream::fetch(std::uint64_t begin, std::uint64_t end, Letter* out) const {
    if (begin >= end) return;
    check_budget(end - 1);
    fetch_impl(begin, end, out);
}

void WordStream::fetch_impl(std::uint64_t begin, std::uint64_t end, Letter* out) const {
    for (std::uint64_t i = begin; i < end; ++i) out[i - begin] = at(i);
}

namespace {

class PeriodicStream final : public WordStream {
public:
    explicit PeriodicStream(FiniteWord period) : period_(std::move(period)) {}

    std::string provenance() const override { return "periodic:" + period_.str(); }

protected:
    Letter at(std::uint64_t i) const override { return period_[i % period_.size()]; }

private:
    FiniteWord period_;
};

class FunctionStream final : public WordStream {
public:
    FunctionStream(std::function<Letter(std::uint64_t)> rule, std::string provenance)
        : rule_(std::move(rule)), provenance_(std::move(provenance)) {}

    std::string provenance() const override { return provenance_; }

protected:
    Letter at(std::uint64_t i) const override { return rule_(i); }

private:
    std::function<Letter(std::uint64_t)> rule_;
    std::string provenance_;
};

class ReflectStream final : public WordStream {
public:
    explicit ReflectStream(StreamPtr source) : source_(std::move(source)) {}

    std::string provenance() const override {
        return "operator-derived:reflect(" + source_->provenance() + ")";
    }

protected:
    Letter at(std::uint64_t i) const override { return relpos::reflect(source_->letter_at(i)); }

private:
    StreamPtr source_;
};

class ConcatStream final : public WordStream {
public:
    ConcatStream(FiniteWord head, StreamPtr tail, std::string provenance)
        : head_(std::move(head)), tail_(std::move(tail)), provenance_(std::move(provenance)) {}

    std::string provenance() const override { return provenance_; }

protected:
    Letter at(std::uint64_t i) const override {
        if (i < head_.size()) return head_[i];
        return tail_->letter_at(i - head_.size());
    }

private:
    FiniteWord head_;
    StreamPtr tail_;
    std::string provenance_;
};

}  // namespace

StreamPtr periodic(const FiniteWord& period) {
    if (period.empty()) throw BadInput("periodic word needs a nonempty periodic part");
    return std::make_shared<PeriodicStream>(period);
}

StreamPtr from_function(std::function<Letter(std::uint64_t)> rule, std::string provenance) {
    return std::make_shared<FunctionStream>(std::move(rule), std::move(provenance));
}

StreamPtr reflect(const StreamPtr& w) { return std::make_shared<ReflectStream>(w); }

StreamPtr concat(const FiniteWord& head, const StreamPtr& tail, std::string provenance) {
    return std::make_shared<ConcatStream>(head, tail, std::move(provenance));
}

std::pair<Letter, Letter> dimer(const StreamPtr& w, std::uint64_t n) {
    return {w->letter_at(2 * n), w->letter_at(2 * n + 1)};
}

MixednessReport mixedness(const StreamPtr& w, std::uint64_t horizon) {
    if (horizon == 0) throw BadInput("mixedness horizon must be >= 1");
    MixednessReport report;
    report.horizon = horizon;
    FiniteWord p = w->prefix(horizon);
    report.count_a = p.count(Letter::a);
    report.count_b = p.count(Letter::b);
    if (report.count_a > 0 && report.count_b > 0)
        report.verdict = MixednessReport::Verdict::both_seen;
    else if (report.count_a > 0)
        report.verdict = MixednessReport::Verdict::only_a_seen;
    else
        report.verdict = MixednessReport::Verdict::only_b_seen;
    return report;
}

}  // namespace relpos
