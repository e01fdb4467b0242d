#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "relpos/letter.hpp"

namespace relpos {

// A finite word over {a,b}. Plain value type; |w| = |w|_a + |w|_b by
// construction.
class FiniteWord {
public:
    FiniteWord() = default;
    explicit FiniteWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // Parses a string of 'a'/'b' characters. Throws BadInput on anything else.
    static FiniteWord parse(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    const std::vector<Letter>& letters() const noexcept { return letters_; }

    void push_back(Letter x) { letters_.push_back(x); }
    void append(const FiniteWord& other);

    std::size_t count(Letter x) const noexcept;
    bool balanced() const noexcept { return count(Letter::a) == count(Letter::b); }

    FiniteWord reflected() const;
    FiniteWord repeated(std::size_t times) const;

    std::string str() const;

    friend bool operator==(const FiniteWord&, const FiniteWord&) = default;

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

private:
    std::vector<Letter> letters_;
};

inline FiniteWord operator+(FiniteWord lhs, const FiniteWord& rhs) {
    lhs.append(rhs);
    return lhs;
}

}  // namespace relpos
