#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "relpos/errors.hpp"
#include "relpos/operators.hpp"
#include "relpos/position.hpp"
#include "relpos/substitution.hpp"

using namespace relpos;

TEST_CASE("positions of the n-th occurrence") {
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    // Scan oracle over the frozen prefix.
    auto b_positions = oracles::scan_positions("abaababa", 'b');
    CHECK(b_positions[2] == 6);
    CHECK(position_of(fib, Letter::b, 3) == 6);
    CHECK(position_of(fib, Letter::a, 1) == 0);
    StreamPtr aabb = periodic(FiniteWord::parse("aabb"));
    CHECK(position_of(aabb, Letter::b, 2) == 3);
    CHECK_THROWS_AS(position_of(fib, Letter::a, 0), BadInput);
}

TEST_CASE("position series agree with a straight scan on a long prefix") {
    StreamPtr tm = thue_morse().fixed_point(Letter::a);
    std::string text = oracles::prefix(oracles::thue_morse_letter, 20000);
    auto a_pos = oracles::scan_positions(text, 'a');
    auto b_pos = oracles::scan_positions(text, 'b');
    PositionSeries pa(tm, Letter::a), pb(tm, Letter::b);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        CHECK(pa.at(n) == a_pos[n - 1]);
        CHECK(pb.at(n) == b_pos[n - 1]);
    }
}

TEST_CASE("relative positions of the classic words") {
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(relative_position(fib, n) == static_cast<std::int64_t>(n));
    StreamPtr ab = periodic(FiniteWord::parse("ab"));
    for (std::uint64_t n = 1; n <= 100; ++n) CHECK(relative_position(ab, n) == 1);
    for (std::int64_t j = 1; j <= 4; ++j) {
        FiniteWord period;
        for (std::int64_t i = 0; i < j; ++i) period.push_back(Letter::a);
        for (std::int64_t i = 0; i < j; ++i) period.push_back(Letter::b);
        StreamPtr w = periodic(period);
        for (std::uint64_t n = 1; n <= 100; ++n) CHECK(relative_position(w, n) == j);
    }
}

TEST_CASE("delta works on any integer series") {
    auto constant = [](std::uint64_t) { return std::int64_t{7}; };
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(delta(constant, n) == 0);
    auto squares = [](std::uint64_t n) { return static_cast<std::int64_t>(n * n); };
    CHECK(delta(squares, 3) == 7);
}

TEST_CASE("difference series of small periodic words") {
    RelativeSeries aab(periodic(FiniteWord::parse("aab")));
    std::vector<std::int64_t> dpa, dr;
    for (std::uint64_t n = 1; n <= 6; ++n) {
        dpa.push_back(aab.pa().delta(n));
        dr.push_back(aab.delta(n));
    }
    CHECK(dpa == std::vector<std::int64_t>{1, 2, 1, 2, 1, 2});
    CHECK(dr == std::vector<std::int64_t>{2, 1, 2, 1, 2, 1});

    RelativeSeries abba(periodic(FiniteWord::parse("abba")));
    std::vector<std::int64_t> dr2;
    for (std::uint64_t n = 1; n <= 6; ++n) dr2.push_back(abba.delta(n));
    CHECK(dr2 == std::vector<std::int64_t>{-2, 2, -2, 2, -2, 2});

    RelativeSeries ab(periodic(FiniteWord::parse("ab")));
    for (std::uint64_t n = 1; n <= 50; ++n) CHECK(ab.delta(n) == 0);
}

TEST_CASE("counting functions") {
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    CHECK(counting(fib, Letter::a, 8) == 5);  // abaababa
    CHECK(counting(fib, Letter::a, 0) == 0);
    StreamPtr tm = thue_morse().fixed_point(Letter::a);
    CHECK(counting(tm, Letter::b, 8) == 4);  // abbabaab
}

TEST_CASE("counting and positions are adjoint") {
    StreamPtr w = pisa(2, 1, 2).fixed_point(Letter::a);
    for (Letter x : {Letter::a, Letter::b}) {
        PositionSeries p(w, x);
        for (std::uint64_t n = 1; n <= 1000; ++n)
            CHECK(p.count_up_to(static_cast<std::uint64_t>(p.at(n)) + 1) == n);
        for (std::uint64_t m = 1; m <= 1000; ++m) {
            std::uint64_t c = p.count_up_to(m);
            if (c >= 1) CHECK(p.at(c) <= static_cast<std::int64_t>(m) - 1);
        }
    }
}

TEST_CASE("a- and b-positions partition the nonnegative integers") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        FiniteWord period;
        do {
            period = FiniteWord();
            std::size_t len = 2 + rng() % 8;
            for (std::size_t t = 0; t < len; ++t)
                period.push_back(rng() % 2 ? Letter::b : Letter::a);
        } while (period.count(Letter::a) == 0 || period.count(Letter::b) == 0);
        StreamPtr w = periodic(period);
        const std::uint64_t limit = 10000;
        std::vector<int> seen(limit, 0);
        for (Letter x : {Letter::a, Letter::b}) {
            PositionSeries p(w, x);
            for (std::uint64_t n = 1;; ++n) {
                std::int64_t pos = p.at(n);
                if (pos >= static_cast<std::int64_t>(limit)) break;
                seen[static_cast<std::uint64_t>(pos)] += 1;
            }
        }
        for (std::uint64_t pos = 0; pos < limit; ++pos) CHECK(seen[pos] == 1);
    }
}

TEST_CASE("occurrence scans stop at the budget") {
    BudgetGuard guard(2000);
    StreamPtr pure = periodic(FiniteWord::parse("a"));
    CHECK_THROWS_AS(position_of(pure, Letter::b, 1), OccurrenceNotFound);
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    CHECK_THROWS_AS(position_of(fib, Letter::b, 100000), OccurrenceNotFound);
}

TEST_CASE("run reports") {
    RunReport aabb = runs(periodic(FiniteWord::parse("aabb")), 100);
    CHECK(aabb.longest_a_run == 2);
    CHECK(aabb.longest_b_run == 2);
    CHECK(aabb.c == 2);
    RunReport fib = runs(fibonacci().fixed_point(Letter::a), 10000);
    CHECK(fib.longest_b_run == 1);
    CHECK(fib.longest_a_run == 2);
    RunReport tm = runs(thue_morse().fixed_point(Letter::a), 10000);
    CHECK(tm.longest_a_run == 2);
    CHECK(tm.longest_b_run == 2);
    // The run constant also covers the leading a-run via the first b.
    RunReport skew = runs(prefix_op(FiniteWord::parse("aaaaa"), periodic(FiniteWord::parse("ab"))),
                          1000);
    CHECK(skew.c == 6);
}

TEST_CASE("empirical ratios are exact rationals") {
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    CHECK(empirical_ratio(fib, RatioKind::r_over_n, 1000) == Rational(1));
    CHECK(empirical_ratio(periodic(FiniteWord::parse("ab")), RatioKind::freq_b, 10) ==
          Rational(1, 2));
    CHECK(empirical_ratio(fib, RatioKind::pa_over_n, 2) == Rational(2, 2));
    // Per-index value, no limit: p_a(2) = 2.
    CHECK(empirical_ratio(fib, RatioKind::pa_over_n, 2) == Rational(1));
}

TEST_CASE("series validity checks") {
    auto fib_pa = [fib = fibonacci().fixed_point(Letter::a)](std::uint64_t n) {
        return position_of(fib, Letter::a, n);
    };
    CHECK(is_valid_pa(fib_pa, 50).valid);
    auto shifted = [](std::uint64_t n) { return static_cast<std::int64_t>(n); };  // 1,2,3,...
    SeriesValidity bad = is_valid_pa(shifted, 50);
    CHECK_FALSE(bad.valid);
    CHECK(bad.failing_index == 1);
    CHECK(is_valid_pb(shifted, 50).infinitely_often_caveat);  // p(1)=1>0 but every step is 1
    auto dense = [](std::uint64_t n) { return static_cast<std::int64_t>(n) - 1; };  // 0,1,2,...
    SeriesValidity caveat = is_valid_pa(dense, 50);
    CHECK_FALSE(caveat.valid);
    CHECK(caveat.infinitely_often_caveat);
    auto decreasing = [](std::uint64_t n) { return n == 1 ? 0 : (n == 2 ? 5 : 3); };
    CHECK_FALSE(is_valid_pa(decreasing, 5).valid);
}

TEST_CASE("reflection negates the relative position") {
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    RelativeSeries r(fib), rr(reflect(fib));
    for (std::uint64_t n = 1; n <= 1000; ++n) CHECK(rr.at(n) == -r.at(n));
}

TEST_CASE("difference codings of the Fibonacci word") {
    StreamPtr fib = fibonacci().fixed_point(Letter::a);
    RelativeSeries r(fib);
    // The a-gaps take the value 2 under an a of the word itself and 1 under
    // a b; the b-gaps take 3 and 2. Cross-checked against the closed-form
    // oracle rather than the stream.
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        bool is_a = oracles::fibonacci_letter(n - 1) == Letter::a;
        CHECK(r.pa().delta(n) == (is_a ? 2 : 1));
        CHECK(r.pb().delta(n) == (is_a ? 3 : 2));
        CHECK(r.delta(n) == 1);
    }
}

TEST_CASE("thue-morse equals its own relative position sequence") {
    StreamPtr tm = thue_morse().fixed_point(Letter::a);
    RelativeSeries r(tm);
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        std::int64_t coded = oracles::thue_morse_letter(n - 1) == Letter::a ? 1 : -1;
        CHECK(r.at(n) == coded);
    }
}

TEST_CASE("periodic words have periodic difference series") {
    FiniteWord u = FiniteWord::parse("aababb");
    std::uint64_t k = u.count(Letter::a);
    std::uint64_t j = u.count(Letter::b);
    RelativeSeries r(periodic(u));
    for (std::uint64_t n = 1; n <= 500; ++n) {
        CHECK(r.pa().delta(n) == r.pa().delta(n + k));
        CHECK(r.pb().delta(n) == r.pb().delta(n + j));
        CHECK(r.delta(n) == r.delta(n + std::lcm(k, j)));
    }
}

TEST_CASE("csv export") {
    std::ostringstream out;
    write_positions_csv(out, periodic(FiniteWord::parse("aabb")), 3);
    CHECK(out.str() ==
          "n,p_a,p_b,r,delta_pa,delta_pb,delta_r\n"
          "1,0,2,2,1,1,0\n"
          "2,1,3,2,3,3,0\n"
          "3,4,6,2,1,1,0\n");
}

TEST_CASE("the block word a b aa bb aaa bbb ... has the staircase r") {
    // Increasing r, yet the word contains bb: r takes each value v exactly
    // v times.
    StreamPtr blocks = from_function(
        [](std::uint64_t i) {
            std::uint64_t block = 1;
            while (i >= 2 * block) {
                i -= 2 * block;
                block += 1;
            }
            return i < block ? Letter::a : Letter::b;
        },
        "explicit-rule:increasing-blocks");
    RelativeSeries r(blocks);
    std::vector<std::int64_t> head;
    for (std::uint64_t n = 1; n <= 10; ++n) head.push_back(r.at(n));
    CHECK(head == std::vector<std::int64_t>{1, 2, 2, 3, 3, 3, 4, 4, 4, 4});
    bool has_bb = false;
    FiniteWord p = blocks->prefix(30);
    for (std::uint64_t t = 1; t < 30; ++t)
        if (p[t] == Letter::b && p[t - 1] == Letter::b) has_bb = true;
    CHECK(has_bb);
}

TEST_CASE("letter runs are visible from both difference series") {
    // A maximal run of k b's shows up as an a-gap of k+1 and as k-1
    // consecutive ones in delta p_b; check the three views against each
    // other on words with known run structure.
    struct Case {
        const char* period;
        std::uint64_t longest_b;
    };
    for (const Case& c : {Case{"abbb", 3}, Case{"aabbab", 2}, Case{"ab", 1}, Case{"abbbba", 4}}) {
        StreamPtr w = periodic(FiniteWord::parse(c.period));
        RelativeSeries r(w);
        std::uint64_t max_gap = 0;
        std::uint64_t ones_run = 0, best_ones_run = 0;
        for (std::uint64_t n = 1; n <= 200; ++n) {
            max_gap = std::max(max_gap, static_cast<std::uint64_t>(r.pa().delta(n)));
            if (r.pb().delta(n) == 1)
                best_ones_run = std::max(best_ones_run, ++ones_run);
            else
                ones_run = 0;
        }
        CHECK(max_gap - 1 == c.longest_b);
        CHECK(best_ones_run == c.longest_b - 1);
    }
}

TEST_CASE("without bb, delta r is bounded exactly when delta p_b is") {
    // Bounded side: the Fibonacci word has delta p_b in {2, 3} and delta r = 1.
    RelativeSeries fib(fibonacci().fixed_point(Letter::a));
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        CHECK(fib.pb().delta(n) <= 3);
        CHECK(fib.delta(n) == 1);
    }
    // Unbounded side: isolated b's after doubling a-runs. The n-th b sits at
    // 2^{n+1} + n - 2, so both delta p_b and delta r blow up together.
    StreamPtr doubling = from_function(
        [](std::uint64_t i) {
            for (std::uint64_t k = 0;; ++k) {
                std::uint64_t b_pos = (2ULL << k) + k - 1;
                if (b_pos == i) return Letter::b;
                if (b_pos > i) return Letter::a;
            }
        },
        "explicit-rule:doubling-a-runs");
    RelativeSeries grow(doubling);
    for (std::uint64_t n = 2; n <= 12; ++n) {
        CHECK(grow.pb().delta(n) == (1LL << n) + 1);
        CHECK(grow.pb().delta(n) > grow.pb().delta(n - 1));
        CHECK(grow.delta(n) >= grow.pb().delta(n) - 2);  // delta p_a <= 2 without bb
    }
}

TEST_CASE("linear bounds from the run constant") {
    // The lower bound is c(1-n)+1: it is attained in spirit by (a b^c)^w,
    // where r drifts down with slope -(c-1)/... while staying above it.
    for (const char* period : {"aabab", "abb", "abbba"}) {
        StreamPtr w = periodic(FiniteWord::parse(period));
        RunReport report = runs(w, 10000);
        auto c = static_cast<std::int64_t>(report.c);
        RelativeSeries r(w);
        for (std::uint64_t n = 1; n <= 1000; ++n) {
            auto nn = static_cast<std::int64_t>(n);
            CHECK(c * (1 - nn) + 1 <= r.at(n));
            CHECK(r.at(n) <= c * nn);
            CHECK(r.pa().at(n) <= (c + 1) * (nn - 1));
            CHECK(r.pb().at(n) <= (c + 1) * nn - 1);
        }
    }
    // The position bounds are tight: (a b^c)^w attains the p_a bound and
    // (a^c b)^w attains the p_b bound.
    for (std::int64_t c = 1; c <= 4; ++c) {
        FiniteWord abc;
        abc.push_back(Letter::a);
        for (std::int64_t i = 0; i < c; ++i) abc.push_back(Letter::b);
        PositionSeries pa(periodic(abc), Letter::a);
        FiniteWord acb;
        for (std::int64_t i = 0; i < c; ++i) acb.push_back(Letter::a);
        acb.push_back(Letter::b);
        PositionSeries pb(periodic(acb), Letter::b);
        for (std::uint64_t n = 1; n <= 50; ++n) {
            auto nn = static_cast<std::int64_t>(n);
            CHECK(pa.at(n) == (c + 1) * (nn - 1));
            CHECK(pb.at(n) == (c + 1) * nn - 1);
        }
    }
}
