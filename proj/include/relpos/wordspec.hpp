#pragma once

#include <string_view>

#include "relpos/reconstruct.hpp"
#include "relpos/substitution.hpp"
#include "relpos/word_stream.hpp"

namespace relpos {

// Text grammars shared by the CLI and the C API.
//
// Substitutions: fibonacci|fib, thue_morse|tm, period_doubling|pd,
// iccanobif, pisa:k,l,m, noble:k, clone:k, golden:m,n, or a raw
// a->WORD;b->WORD over {a,b}.
BinarySubstitution parse_substitution(std::string_view spec);

// Words: a base, optionally piped through operator stages:
//   base       := periodic:LETTERS | SUBST[@a|@b]   (fixed point, seed a)
//   stage      := reflect | delete | delete_a | delete_b | delete^K
//               | prefix:LETTERS | switch | SUBST   (applies the substitution)
//   word_spec  := base (' | ' stage)*
// Examples: "fib", "periodic:aab", "tm | clone:2", "fib | delete | reflect".
StreamPtr parse_word(std::string_view spec);

// Relative position specs: fib (r(n)=n), tm (the +-1 sequence of the
// Thue-Morse word), formula:K*n+J (also plain forms like "n", "2*n-1",
// "7"), values:v1,v2,... or the bare word spec prefixed with word: to use
// r of an existing word.
RSpec parse_rspec(std::string_view spec);

}  // namespace relpos
