#pragma once

#include <optional>

namespace relpos {

// The two-letter alphabet. Values double as row/column indices in
// substitution matrices, so keep them 0 and 1.
enum class Letter : unsigned char { a = 0, b = 1 };

constexpr Letter reflect(Letter x) noexcept {
    return x == Letter::a ? Letter::b : Letter::a;
}

constexpr char to_char(Letter x) noexcept {
    return x == Letter::a ? 'a' : 'b';
}

constexpr std::optional<Letter> letter_from_char(char c) noexcept {
    if (c == 'a') return Letter::a;
    if (c == 'b') return Letter::b;
    return std::nullopt;
}

}  // namespace relpos
