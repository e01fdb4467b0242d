#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "relpos/errors.hpp"
#include "relpos/substitution.hpp"
#include "relpos/word_stream.hpp"

using namespace relpos;

TEST_CASE("letters reflect as an involution") {
    CHECK(reflect(Letter::a) == Letter::b);
    CHECK(reflect(Letter::b) == Letter::a);
    CHECK(reflect(reflect(Letter::a)) == Letter::a);
    CHECK(to_char(Letter::a) == 'a');
    CHECK(letter_from_char('b') == Letter::b);
    CHECK_FALSE(letter_from_char('x').has_value());
}

TEST_CASE("finite words: parse, count, balance") {
    FiniteWord w = FiniteWord::parse("abba");
    CHECK(w.size() == 4);
    CHECK(w.count(Letter::a) == 2);
    CHECK(w.count(Letter::b) == 2);
    CHECK(w.size() == w.count(Letter::a) + w.count(Letter::b));
    CHECK(w.balanced());
    CHECK(FiniteWord::parse("abab").count(Letter::b) == 2);
    CHECK(FiniteWord::parse("aabab").count(Letter::b) == 2);
    CHECK_FALSE(FiniteWord::parse("aab").balanced());
    CHECK(FiniteWord().balanced());
    CHECK(w.reflected().str() == "baab");
    CHECK_THROWS_AS(FiniteWord::parse("abc"), BadInput);
}

TEST_CASE("letter_at on basic streams") {
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    CHECK(fib->letter_at(0) == Letter::a);
    CHECK(fib->letter_at(3) == Letter::a);
    StreamPtr ab = periodic(FiniteWord::parse("ab"));
    CHECK(ab->letter_at(17) == Letter::b);
    CHECK(ab->letter_at(4) == Letter::a);
}

TEST_CASE("prefixes match the fixed reference texts") {
    CHECK(thue_morse().fixed_point(Letter::a)->prefix(8).str() == "abbabaab");
    CHECK(fibonacci().fixed_point(Letter::a)->prefix(8).str() == "abaababa");
    CHECK(period_doubling().fixed_point(Letter::a)->prefix(12).str() == "abaaabababaa");
    CHECK(fibonacci().fixed_point(Letter::a)->prefix(0).str().empty());
}

TEST_CASE("prefix extension is letter by letter") {
    StreamPtr w = thue_morse().fixed_point(Letter::a);
    for (std::uint64_t n = 0; n < 64; ++n) {
        FiniteWord longer = w->prefix(n + 1);
        FiniteWord shorter = w->prefix(n);
        shorter.push_back(w->letter_at(n));
        CHECK(shorter == longer);
    }
}

TEST_CASE("periodic streams repeat with their period") {
    StreamPtr w = periodic(FiniteWord::parse("aab"));
    for (std::uint64_t i = 0; i < 10000; ++i) CHECK(w->letter_at(i) == w->letter_at(i + 3));
    CHECK_THROWS_AS(periodic(FiniteWord()), BadInput);
}

TEST_CASE("reflection of streams") {
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    CHECK(reflect(fib)->prefix(5).str() == "babba");
    FiniteWord back = reflect(reflect(fib))->prefix(100000);
    CHECK(back == fib->prefix(100000));
}

TEST_CASE("dimers and their reassembly") {
    StreamPtr tm = thue_morse().fixed_point(Letter::a);
    CHECK(dimer(tm, 0) == std::pair{Letter::a, Letter::b});
    CHECK(dimer(tm, 1) == std::pair{Letter::b, Letter::a});
    StreamPtr ab = periodic(FiniteWord::parse("ab"));
    for (std::uint64_t k = 0; k < 50; ++k) CHECK(dimer(ab, k) == std::pair{Letter::a, Letter::b});

    const std::uint64_t pairs = 10000;
    FiniteWord rebuilt;
    for (std::uint64_t n = 0; n < pairs; ++n) {
        auto [x, y] = dimer(tm, n);
        rebuilt.push_back(x);
        rebuilt.push_back(y);
    }
    CHECK(rebuilt == tm->prefix(2 * pairs));
}

TEST_CASE("codings relabel letterwise") {
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    CodedSeries one_two = apply_coding(fib, 1, 2);
    std::vector<std::int64_t> head;
    for (std::uint64_t i = 0; i < 8; ++i) head.push_back(one_two(i));
    CHECK(head == std::vector<std::int64_t>{1, 2, 1, 1, 2, 1, 2, 1});
    CodedSeries two_three = apply_coding(fib, 2, 3);
    CHECK(two_three(0) == 2);
    CHECK(two_three(1) == 3);
    CodedSeries zero = apply_coding(fib, 0, 0);
    for (std::uint64_t i = 0; i < 20; ++i) CHECK(zero(i) == 0);
}

TEST_CASE("mixedness diagnostics") {
    CHECK(mixedness(fibonacci().fixed_point(Letter::a), 10).verdict ==
          MixednessReport::Verdict::both_seen);
    MixednessReport pure = mixedness(periodic(FiniteWord::parse("a")), 1000);
    CHECK(pure.verdict == MixednessReport::Verdict::only_a_seen);
    CHECK(pure.count_a == 1000);
    CHECK(mixedness(periodic(FiniteWord::parse("ab")), 2).verdict ==
          MixednessReport::Verdict::both_seen);
    CHECK_THROWS_AS(mixedness(periodic(FiniteWord::parse("ab")), 0), BadInput);
}

TEST_CASE("index budget bounds lazy expansion") {
    BudgetGuard guard(1000);
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    CHECK_NOTHROW(fib->letter_at(999));
    CHECK_THROWS_AS(fib->letter_at(1000), BudgetExceeded);
    CHECK_THROWS_AS(fib->prefix(2000), BudgetExceeded);
}

TEST_CASE("streams agree with the closed-form oracles") {
    StreamPtr tm = thue_morse().fixed_point(Letter::a);
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    CHECK(tm->prefix(100000).str() == oracles::prefix(oracles::thue_morse_letter, 100000));
    CHECK(fib->prefix(100000).str() == oracles::prefix(oracles::fibonacci_letter, 100000));
}

TEST_CASE("concurrent readers see identical letters") {
    std::string reference = oracles::prefix(oracles::thue_morse_letter, 50000);
    StreamPtr fresh = thue_morse().fixed_point(Letter::a);
    std::vector<std::thread> readers;
    std::vector<int> failures(4, 0);
    for (int t = 0; t < 4; ++t) {
        readers.emplace_back([&, t] {
            // Stride so the threads race on extending the same memo.
            for (std::uint64_t i = static_cast<std::uint64_t>(t); i < 50000; i += 2) {
                if (to_char(fresh->letter_at(i)) != reference[i]) failures[t] += 1;
            }
        });
    }
    for (auto& reader : readers) reader.join();
    for (int t = 0; t < 4; ++t) CHECK(failures[t] == 0);
}

TEST_CASE("explicit rule streams carry their provenance") {
    StreamPtr w = from_function([](std::uint64_t i) { return i % 3 == 0 ? Letter::b : Letter::a; },
                                "explicit-rule:every-third-b");
    CHECK(w->provenance() == "explicit-rule:every-third-b");
    CHECK(w->prefix(6).str() == "baabaa");
    CHECK(periodic(FiniteWord::parse("aab"))->provenance() == "periodic:aab");
}
