#include "relpos/finite_word.hpp"

#include <algorithm>

#include "relpos/errors.hpp"

namespace relpos {

FiniteWord FiniteWord::parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        auto x = letter_from_char(c);
        if (!x) throw BadInput("finite word may contain only 'a' and 'b', got '" + std::string(1, c) + "'");
        letters.push_back(*x);
    }
    return FiniteWord(std::move(letters));
}

void FiniteWord::append(const FiniteWord& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

std::size_t FiniteWord::count(Letter x) const noexcept {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
}

FiniteWord FiniteWord::reflected() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (Letter x : letters_) out.push_back(reflect(x));
    return FiniteWord(std::move(out));
}

FiniteWord FiniteWord::repeated(std::size_t times) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() * times);
    for (std::size_t i = 0; i < times; ++i)
        out.insert(out.end(), letters_.begin(), letters_.end());
    return FiniteWord(std::move(out));
}

std::string FiniteWord::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter x : letters_) out.push_back(to_char(x));
    return out;
}

}  // namespace relpos
