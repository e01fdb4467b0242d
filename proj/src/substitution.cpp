#include "relpos/substitution.hpp"

#include <mutex>
#include <vector>

#include "relpos/errors.hpp"

namespace relpos {

bool is_primitive(const SubstitutionMatrix& m) noexcept {
    SubstitutionMatrix power = m;
    for (int t = 1; t <= 4; ++t) {
        if (power.positive()) return true;
        power = power * m;
    }
    return false;
}

FiniteWord BinarySubstitution::apply(const FiniteWord& u) const {
    FiniteWord out;
    for (Letter x : u) out.append(image(x));
    return out;
}

SubstitutionMatrix BinarySubstitution::matrix() const noexcept {
    return {static_cast<std::int64_t>(image_a_.count(Letter::a)),
            static_cast<std::int64_t>(image_b_.count(Letter::a)),
            static_cast<std::int64_t>(image_a_.count(Letter::b)),
            static_cast<std::int64_t>(image_b_.count(Letter::b))};
}

BinarySubstitution compose(const BinarySubstitution& outer, const BinarySubstitution& inner) {
    return BinarySubstitution(outer.apply(inner.image(Letter::a)),
                              outer.apply(inner.image(Letter::b)));
}

BinarySubstitution BinarySubstitution::power(unsigned t) const {
    if (t == 0) throw BadInput("substitution power needs t >= 1");
    BinarySubstitution result = *this;
    for (unsigned i = 1; i < t; ++i) result = compose(*this, result);
    return result;
}

FiniteWord BinarySubstitution::supertile(unsigned level, Letter x) const {
    FiniteWord tile;
    tile.push_back(x);
    for (unsigned i = 0; i < level; ++i) tile = apply(tile);
    return tile;
}

BinarySubstitution BinarySubstitution::conjugate_tilde() const {
    return BinarySubstitution(image(Letter::b).reflected(), image(Letter::a).reflected());
}

std::string BinarySubstitution::format() const {
    return "a->" + image_a_.str() + ";b->" + image_b_.str();
}

BinarySubstitution BinarySubstitution::parse(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw BadInput("substitution spec must look like a->WORD;b->WORD");
    std::string_view first = text.substr(0, semi);
    std::string_view second = text.substr(semi + 1);
    auto strip_arrow = [](std::string_view part, char letter) -> std::string_view {
        if (part.size() < 3 || part[0] != letter || part[1] != '-' || part[2] != '>')
            throw BadInput("substitution spec must look like a->WORD;b->WORD");
        return part.substr(3);
    };
    return BinarySubstitution(FiniteWord::parse(strip_arrow(first, 'a')),
                              FiniteWord::parse(strip_arrow(second, 'b')));
}

namespace {

// Memoized prefix of lim s^n(seed), grown by pushing images of already
// known letters: if w is the fixed point then w = s(w[0]) s(w[1]) ...
class FixedPointStream final : public WordStream {
public:
    FixedPointStream(BinarySubstitution subst, Letter seed)
        : subst_(std::move(subst)), seed_(seed) {
        const FiniteWord& head = subst_.image(seed);
        memo_.assign(head.begin(), head.end());
        next_source_ = 1;
    }

    std::string provenance() const override {
        return "substitution-fixed-point:" + subst_.format() + "@" + std::string(1, to_char(seed_));
    }

protected:
    Letter at(std::uint64_t i) const override {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure(i + 1);
        return memo_[i];
    }

    void fetch_impl(std::uint64_t begin, std::uint64_t end, Letter* out) const override {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure(end);
        std::copy(memo_.begin() + static_cast<std::ptrdiff_t>(begin),
                  memo_.begin() + static_cast<std::ptrdiff_t>(end), out);
    }

private:
    void ensure(std::uint64_t target) const {
        while (memo_.size() < target) {
            const FiniteWord& img = subst_.image(memo_[next_source_]);
            memo_.insert(memo_.end(), img.begin(), img.end());
            ++next_source_;
        }
    }

    BinarySubstitution subst_;
    Letter seed_;
    mutable std::mutex mutex_;
    mutable std::vector<Letter> memo_;
    mutable std::uint64_t next_source_ = 0;
};

// Lazy s(w) for a stream w: images of source letters are appended on demand.
class ImageStream final : public WordStream {
public:
    ImageStream(BinarySubstitution subst, StreamPtr source)
        : subst_(std::move(subst)), source_(std::move(source)) {}

    std::string provenance() const override {
        return "operator-derived:apply(" + subst_.format() + "," + source_->provenance() + ")";
    }

protected:
    Letter at(std::uint64_t i) const override {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure(i + 1);
        return memo_[i];
    }

    void fetch_impl(std::uint64_t begin, std::uint64_t end, Letter* out) const override {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure(end);
        std::copy(memo_.begin() + static_cast<std::ptrdiff_t>(begin),
                  memo_.begin() + static_cast<std::ptrdiff_t>(end), out);
    }

private:
    void ensure(std::uint64_t target) const {
        // Each round consumes one source letter; the source's own budget
        // bounds the loop even when one image is empty.
        while (memo_.size() < target) {
            const FiniteWord& img = subst_.image(source_->letter_at(next_source_));
            memo_.insert(memo_.end(), img.begin(), img.end());
            ++next_source_;
        }
    }

    BinarySubstitution subst_;
    StreamPtr source_;
    mutable std::mutex mutex_;
    mutable std::vector<Letter> memo_;
    mutable std::uint64_t next_source_ = 0;
};

// Tile-by-tile rewrite of a word decomposed into the level-2 Fibonacci
// supertiles aba and ab. {aba, ab} is uniquely decodable (the reversed set
// is a prefix code), and 4 letters of lookahead decide each tile:
// after seeing a, b the tile is aba exactly when the 4th letter is a.
class FibonacciSwitchStream final : public WordStream {
public:
    explicit FibonacciSwitchStream(StreamPtr source) : source_(std::move(source)) {}

    std::string provenance() const override {
        return "operator-derived:switch(" + source_->provenance() + ")";
    }

protected:
    Letter at(std::uint64_t i) const override {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure(i + 1);
        return memo_[i];
    }

    void fetch_impl(std::uint64_t begin, std::uint64_t end, Letter* out) const override {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure(end);
        std::copy(memo_.begin() + static_cast<std::ptrdiff_t>(begin),
                  memo_.begin() + static_cast<std::ptrdiff_t>(end), out);
    }

private:
    void ensure(std::uint64_t target) const {
        while (memo_.size() < target) {
            std::uint64_t p = source_pos_;
            if (source_->letter_at(p) != Letter::a || source_->letter_at(p + 1) != Letter::b)
                throw MalformedSupertile("no level-2 supertile (aba or ab) at position " +
                                         std::to_string(p));
            bool long_tile = source_->letter_at(p + 2) == Letter::a &&
                             source_->letter_at(p + 3) == Letter::a;
            if (long_tile) {
                // aba -> aab
                memo_.push_back(Letter::a);
                memo_.push_back(Letter::a);
                memo_.push_back(Letter::b);
                source_pos_ += 3;
            } else {
                // ab -> ab
                memo_.push_back(Letter::a);
                memo_.push_back(Letter::b);
                source_pos_ += 2;
            }
        }
    }

    StreamPtr source_;
    mutable std::mutex mutex_;
    mutable std::vector<Letter> memo_;
    mutable std::uint64_t source_pos_ = 0;
};

FiniteWord letter_power(Letter x, std::int64_t count) {
    std::vector<Letter> letters(static_cast<std::size_t>(count), x);
    return FiniteWord(std::move(letters));
}

}  // namespace

StreamPtr BinarySubstitution::apply(const StreamPtr& w) const {
    if (image_a_.empty() && image_b_.empty())
        throw BadInput("cannot apply a substitution with two empty images to a stream");
    return std::make_shared<ImageStream>(*this, w);
}

StreamPtr BinarySubstitution::fixed_point(Letter seed) const {
    if (image_a_.empty() || image_b_.empty())
        throw NoFixedPoint("fixed point needs both images nonempty");
    const FiniteWord& head = image(seed);
    if (head.size() < 2)
        throw NoFixedPoint("fixed point needs |image(seed)| >= 2");
    if (head[0] != seed)
        throw NoFixedPoint("fixed point needs image(" + std::string(1, to_char(seed)) +
                           ") to start with the seed");
    return std::make_shared<FixedPointStream>(*this, seed);
}

BinarySubstitution fibonacci() {
    return BinarySubstitution(FiniteWord::parse("ab"), FiniteWord::parse("a"));
}

BinarySubstitution iccanobif() {
    return BinarySubstitution(FiniteWord::parse("ba"), FiniteWord::parse("a"));
}

BinarySubstitution thue_morse() {
    return BinarySubstitution(FiniteWord::parse("ab"), FiniteWord::parse("ba"));
}

BinarySubstitution period_doubling() {
    return BinarySubstitution(FiniteWord::parse("ab"), FiniteWord::parse("aa"));
}

BinarySubstitution clone_subst(std::int64_t k) {
    if (k < 2) throw BadInput("clone substitution needs k >= 2");
    return BinarySubstitution(letter_power(Letter::a, k), letter_power(Letter::b, k));
}

BinarySubstitution pisa(std::int64_t k, std::int64_t l, std::int64_t m) {
    if (k < 1 || m < 1 || l < 0) throw BadInput("pisa substitution needs k >= 1, m >= 1, l >= 0");
    FiniteWord image_a = letter_power(Letter::a, k);
    image_a.push_back(Letter::b);
    image_a.append(letter_power(Letter::a, l));
    return BinarySubstitution(std::move(image_a), letter_power(Letter::a, m));
}

BinarySubstitution noble_means(std::int64_t k) { return pisa(k, 0, 1); }

BinarySubstitution golden_family(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 0) throw BadInput("golden family needs m >= 1, n >= 0");
    FiniteWord image_a = letter_power(Letter::a, m + n);
    image_a.append(letter_power(Letter::b, m));
    FiniteWord image_b = letter_power(Letter::a, m);
    image_b.append(letter_power(Letter::b, n));
    return BinarySubstitution(std::move(image_a), std::move(image_b));
}

PisotVerdict pisa_is_pisot(std::int64_t k, std::int64_t l, std::int64_t m) {
    if (k < 1 || m < 1 || l < 0) throw BadInput("pisa substitution needs k >= 1, m >= 1, l >= 0");
    return {m < k + l + 1, m == k + l + 1};
}

StreamPtr fibonacci_switch(const StreamPtr& w) {
    return std::make_shared<FibonacciSwitchStream>(w);
}

}  // namespace relpos
