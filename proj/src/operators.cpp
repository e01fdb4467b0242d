#include "relpos/operators.hpp"

#include <mutex>

#include "relpos/errors.hpp"
#include "relpos/position.hpp"

namespace relpos {

namespace {

// Index remap realizing deletion: positions before the first x are kept,
// positions from it on shift left by one.
class DeleteFirstStream final : public WordStream {
public:
    DeleteFirstStream(StreamPtr source, Letter x) : source_(std::move(source)), x_(x) {}

    std::string provenance() const override {
        return "operator-derived:delete_" + std::string(1, to_char(x_)) + "(" +
               source_->provenance() + ")";
    }

protected:
    Letter at(std::uint64_t i) const override {
        std::uint64_t pos = first_position();
        return source_->letter_at(i < pos ? i : i + 1);
    }

private:
    std::uint64_t first_position() const {
        // call_once re-runs after an exception, so a budget failure here is
        // retryable once the budget is raised.
        std::call_once(found_, [this] {
            first_ = static_cast<std::uint64_t>(position_of(source_, x_, 1));
        });
        return first_;
    }

    StreamPtr source_;
    Letter x_;
    mutable std::once_flag found_;
    mutable std::uint64_t first_ = 0;
};

}  // namespace

StreamPtr delete_first(const StreamPtr& w, Letter x) {
    return std::make_shared<DeleteFirstStream>(w, x);
}

StreamPtr delete_op(const StreamPtr& w) {
    return delete_first(delete_first(w, Letter::b), Letter::a);
}

StreamPtr delete_pow(const StreamPtr& w, std::uint64_t k) {
    StreamPtr out = w;
    for (std::uint64_t i = 0; i < k; ++i) out = delete_op(out);
    return out;
}

StreamPtr prefix_op(const FiniteWord& u, const StreamPtr& w) {
    return concat(u, w, "operator-derived:prefix_" + u.str() + "(" + w->provenance() + ")");
}

}  // namespace relpos
