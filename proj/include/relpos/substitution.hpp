#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "relpos/finite_word.hpp"
#include "relpos/word_stream.hpp"

namespace relpos {

// 2x2 nonnegative integer matrix of letter counts. Entry (i, j) counts
// letter i in the image of letter j, so column sums are image lengths and
// matrix(s o t) = matrix(s) * matrix(t).
struct SubstitutionMatrix {
    std::int64_t aa = 0;  // |s(a)|_a
    std::int64_t ab = 0;  // |s(b)|_a
    std::int64_t ba = 0;  // |s(a)|_b
    std::int64_t bb = 0;  // |s(b)|_b

    std::int64_t entry(Letter row, Letter col) const noexcept {
        if (row == Letter::a) return col == Letter::a ? aa : ab;
        return col == Letter::a ? ba : bb;
    }

    std::int64_t trace() const noexcept { return aa + bb; }
    std::int64_t det() const noexcept { return aa * bb - ab * ba; }
    bool positive() const noexcept { return aa > 0 && ab > 0 && ba > 0 && bb > 0; }

    SubstitutionMatrix operator*(const SubstitutionMatrix& rhs) const noexcept {
        return {aa * rhs.aa + ab * rhs.ba, aa * rhs.ab + ab * rhs.bb,
                ba * rhs.aa + bb * rhs.ba, ba * rhs.ab + bb * rhs.bb};
    }

    friend bool operator==(const SubstitutionMatrix&, const SubstitutionMatrix&) = default;
};

// Some power M^t (t <= 4 covers every 2x2 nonnegative case) has all
// entries positive.
bool is_primitive(const SubstitutionMatrix& m) noexcept;

// A homomorphism on binary words, determined by the images of a and b.
class BinarySubstitution {
public:
    BinarySubstitution(FiniteWord image_a, FiniteWord image_b)
        : image_a_(std::move(image_a)), image_b_(std::move(image_b)) {}

    const FiniteWord& image(Letter x) const noexcept {
        return x == Letter::a ? image_a_ : image_b_;
    }

    FiniteWord apply(const FiniteWord& u) const;
    StreamPtr apply(const StreamPtr& w) const;  // lazy image expansion

    SubstitutionMatrix matrix() const noexcept;

    BinarySubstitution power(unsigned t) const;  // t >= 1
    FiniteWord supertile(unsigned level, Letter x) const;

    // The involution s~(x) = reflect(s(reflect(x))).
    BinarySubstitution conjugate_tilde() const;

    // The unique fixed point lim s^n(seed). Requires both images nonempty,
    // image(seed) starting with seed and |image(seed)| >= 2; otherwise
    // throws NoFixedPoint.
    StreamPtr fixed_point(Letter seed) const;

    std::string format() const;  // "a->WORD;b->WORD"
    static BinarySubstitution parse(std::string_view text);

    friend bool operator==(const BinarySubstitution&, const BinarySubstitution&) = default;

private:
    FiniteWord image_a_;
    FiniteWord image_b_;
};

BinarySubstitution compose(const BinarySubstitution& outer, const BinarySubstitution& inner);

// Named families.
BinarySubstitution fibonacci();         // a->ab, b->a
BinarySubstitution iccanobif();         // a->ba, b->a
BinarySubstitution thue_morse();        // a->ab, b->ba
BinarySubstitution period_doubling();   // a->ab, b->aa
BinarySubstitution clone_subst(std::int64_t k);                                // a->a^k, b->b^k, k >= 2
BinarySubstitution pisa(std::int64_t k, std::int64_t l, std::int64_t m);       // a->a^k b a^l, b->a^m
BinarySubstitution noble_means(std::int64_t k);                                // pisa(k, 0, 1)
BinarySubstitution golden_family(std::int64_t m, std::int64_t n);              // a->a^{m+n} b^m, b->a^m b^n

// Pisot test for the pisa family: m < (k+l)+1. The inequality is strict;
// the boundary case m = (k+l)+1 (second eigenvalue -1) is flagged apart.
struct PisotVerdict {
    bool pisot = false;
    bool boundary = false;
};
PisotVerdict pisa_is_pisot(std::int64_t k, std::int64_t l, std::int64_t m);

// Splits the input into the level-2 Fibonacci supertiles aba / ab and maps
// aba -> aab, ab -> ab. The decomposition into {aba, ab} is unique whenever
// one exists; inputs that do not decompose raise MalformedSupertile lazily.
StreamPtr fibonacci_switch(const StreamPtr& w);

}  // namespace relpos
