#include "relpos/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "relpos/errors.hpp"
#include "relpos/operators.hpp"
#include "relpos/position.hpp"
#include "relpos/reconstruct.hpp"
#include "relpos/spectral.hpp"
#include "relpos/substitution.hpp"
#include "relpos/word_stream.hpp"

namespace relpos::verify {

namespace {

using std::int64_t;
using std::uint64_t;

struct CheckContext {
    uint64_t n;
    uint64_t len;
    std::ostringstream detail;
    bool pass = true;

    void fail(const std::string& message) {
        pass = false;
        detail << "FAIL: " << message << "; ";
    }

    void expect(bool condition, const std::string& message) {
        if (!condition) fail(message);
    }

    void note(const std::string& message) { detail << message << "; "; }
};

using CheckFn = std::function<void(CheckContext&)>;

struct CheckDef {
    std::string id;
    uint64_t default_n;
    uint64_t default_len;
    CheckFn fn;
};

// ---------------------------------------------------------------------------
// Random material

FiniteWord random_finite_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    FiniteWord out;
    std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(bit(rng) == 0 ? Letter::a : Letter::b);
    return out;
}

FiniteWord random_mixed_period(std::mt19937_64& rng, std::size_t max_len = 12) {
    while (true) {
        FiniteWord u = random_finite_word(rng, 2, max_len);
        if (u.count(Letter::a) > 0 && u.count(Letter::b) > 0) return u;
    }
}

// Random primitive substitution whose fixed point with seed a exists.
BinarySubstitution random_fixed_point_subst(std::mt19937_64& rng, std::size_t max_len = 4) {
    while (true) {
        FiniteWord image_a = random_finite_word(rng, 2, max_len);
        FiniteWord image_b = random_finite_word(rng, 1, max_len);
        if (image_a[0] != Letter::a) continue;
        BinarySubstitution s(image_a, image_b);
        if (!is_primitive(s.matrix())) continue;
        return s;
    }
}

StreamPtr random_word_stream(std::mt19937_64& rng) {
    if (rng() % 2 == 0) return periodic(random_mixed_period(rng));
    return random_fixed_point_subst(rng).fixed_point(Letter::a);
}

std::string seq_str(const std::vector<int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fibonacci / Thue-Morse laws

void check_thm_fib(CheckContext& ctx) {
    StreamPtr f = fibonacci().fixed_point(Letter::a);
    RelativeSeries r(f);
    // The gap between consecutive a's is 2 under an a and 1 under a b;
    // for b's it is 3 under an a and 2 under a b; and r(n) = n.
    for (uint64_t n = 1; n <= ctx.n; ++n) {
        if (r.at(n) != static_cast<int64_t>(n)) {
            ctx.fail("r(" + std::to_string(n) + ") != n");
            return;
        }
        Letter fn = f->letter_at(n - 1);
        int64_t want_a = fn == Letter::a ? 2 : 1;
        int64_t want_b = fn == Letter::a ? 3 : 2;
        if (r.pa().delta(n) != want_a) {
            ctx.fail("delta p_a coding mismatch at n = " + std::to_string(n));
            return;
        }
        if (r.pb().delta(n) != want_b) {
            ctx.fail("delta p_b coding mismatch at n = " + std::to_string(n));
            return;
        }
    }
    ctx.note("r(n)=n and both delta codings hold for n <= " + std::to_string(ctx.n));
}

void check_tm_fixed_point(CheckContext& ctx) {
    StreamPtr tm = thue_morse().fixed_point(Letter::a);
    RelativeSeries r(tm);
    CodedSeries coded = apply_coding(tm, 1, -1);
    for (uint64_t n = 1; n <= ctx.n; ++n) {
        if (r.at(n) != coded(n - 1)) {
            ctx.fail("r(" + std::to_string(n) + ") != +-1 coding");
            return;
        }
    }
    ctx.note("+-1 coding equals its own r for n <= " + std::to_string(ctx.n));
}

void check_tm_clone(CheckContext& ctx) {
    StreamPtr tm = thue_morse().fixed_point(Letter::a);
    for (int64_t k : {2, 3}) {
        StreamPtr w = clone_subst(k).apply(tm);
        RelativeSeries r(w);
        CodedSeries coded = apply_coding(w, k, -k);
        for (uint64_t n = 1; n <= ctx.n; ++n) {
            if (r.at(n) != coded(n - 1)) {
                ctx.fail("clone k=" + std::to_string(k) + " fails at n = " + std::to_string(n));
                return;
            }
        }
    }
    ctx.note("clone(2) and clone(3) of TM equal their own r on +-k, n <= " + std::to_string(ctx.n));
}

void check_table1(CheckContext& ctx) {
    struct Row {
        const char* period;
        std::vector<int64_t> dpa, dpb, dr;
    };
    auto rep = [](std::vector<int64_t> cycle, std::size_t count) {
        std::vector<int64_t> out;
        while (out.size() < count) out.push_back(cycle[out.size() % cycle.size()]);
        return out;
    };
    const std::size_t terms = 20;
    std::vector<Row> rows = {
        {"ab", rep({2}, terms), rep({2}, terms), rep({0}, terms)},
        {"aab", rep({1, 2}, terms), rep({3}, terms), rep({2, 1}, terms)},
        {"abba", rep({3, 1}, terms), rep({1, 3}, terms), rep({-2, 2}, terms)},
        {"aabb", rep({1, 3}, terms), rep({1, 3}, terms), rep({0}, terms)},
    };
    for (const Row& row : rows) {
        RelativeSeries r(periodic(FiniteWord::parse(row.period)));
        for (std::size_t i = 0; i < terms; ++i) {
            uint64_t n = i + 1;
            if (r.pa().delta(n) != row.dpa[i] || r.pb().delta(n) != row.dpb[i] ||
                r.delta(n) != row.dr[i]) {
                ctx.fail(std::string("series mismatch for (") + row.period + ")^w at n = " +
                         std::to_string(n));
                return;
            }
        }
    }
    ctx.note("all four periodic rows match for 20 terms");
}

// ---------------------------------------------------------------------------
// Reconstruction

void check_reconstruction_roundtrip(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE01);
    const uint64_t pairs = ctx.n;
    const int words = static_cast<int>(ctx.len);
    for (int i = 0; i < words; ++i) {
        StreamPtr w = random_word_stream(rng);
        ReconstructionOutcome outcome = reconstruct(RSpec::of_word(w), pairs);
        if (!outcome.success()) {
            ctx.fail("reconstruction of a genuine word reported a violation (" +
                     w->provenance() + ")");
            return;
        }
        FiniteWord original = w->prefix(outcome.determined_prefix);
        FiniteWord rebuilt = outcome.word->prefix(outcome.determined_prefix);
        if (!(original == rebuilt)) {
            ctx.fail("roundtrip mismatch for " + w->provenance());
            return;
        }
    }
    ctx.note(std::to_string(words) + " random words, " + std::to_string(pairs) +
             " pairs each, all determined prefixes identical");
}

void check_monotone_r(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE02);
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
        // Strictly increasing positive sequence.
        std::vector<int64_t> values;
        int64_t current = static_cast<int64_t>(rng() % 5) + 1;
        for (int n = 0; n < 60; ++n) {
            values.push_back(current);
            current += 1 + static_cast<int64_t>(rng() % 4);
        }
        RSpec spec = RSpec::from_values(values);
        if (validate(spec, values.size()).has_value()) {
            ctx.fail("strictly increasing positive r failed to validate");
            return;
        }
        ReconstructionOutcome outcome = reconstruct(spec, values.size());
        if (outcome.word->letter_at(0) != Letter::a) {
            ctx.fail("word for increasing positive r does not start with a");
            return;
        }
        // r(1) = k puts the first b at position k behind an a-run of
        // length k.
        int64_t k = values[0];
        for (int64_t j = 0; j < k; ++j) {
            if (outcome.word->letter_at(static_cast<uint64_t>(j)) != Letter::a) {
                ctx.fail("expected an a-run of length r(1) at the start");
                return;
            }
        }
        if (outcome.word->letter_at(static_cast<uint64_t>(k)) != Letter::b) {
            ctx.fail("expected b right after the initial a-run");
            return;
        }
    }
    // Decreasing with r(1) < 0 works symmetrically and lands in bW.
    for (int i = 0; i < 50; ++i) {
        std::vector<int64_t> values;
        int64_t current = -(static_cast<int64_t>(rng() % 5) + 1);
        for (int n = 0; n < 40; ++n) {
            values.push_back(current);
            current -= 1 + static_cast<int64_t>(rng() % 3);
        }
        RSpec spec = RSpec::from_values(values);
        if (validate(spec, values.size()).has_value()) {
            ctx.fail("strictly decreasing negative r failed to validate");
            return;
        }
        if (reconstruct(spec, values.size()).word->letter_at(0) != Letter::b) {
            ctx.fail("word for decreasing negative r does not start with b");
            return;
        }
    }
    ctx.note("200 increasing and 50 decreasing sequences all realizable");
}

// ---------------------------------------------------------------------------
// Pisa family

void check_pisa_closed_form(CheckContext& ctx) {
    for (int64_t k = 1; k <= 3; ++k) {
        for (int64_t l = 0; l <= 2; ++l) {
            for (int64_t m = 1; m <= 3; ++m) {
                PisaClosedForm form = pisa_closed_form(k, l, m);
                RelativeSeries r(pisa(k, l, m).fixed_point(Letter::a));
                for (uint64_t n = 1; n <= ctx.n; ++n) {
                    int64_t pa = r.pa().at(n);
                    int64_t pb = r.pb().at(n);
                    if (pb != form.a * pa + form.b * static_cast<int64_t>(n) + form.c) {
                        ctx.fail("affine law fails for (" + std::to_string(k) + "," +
                                 std::to_string(l) + "," + std::to_string(m) + ") at n = " +
                                 std::to_string(n));
                        return;
                    }
                }
            }
        }
    }
    ctx.note("p_b = m p_a + (k+l+1-m) n + (m-l-1) over the whole grid, n <= " +
             std::to_string(ctx.n));
}

void check_pisa_equivalence(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE03);
    QuadraticNumber one{Rational(1)};
    for (int i = 0; i < 20; ++i) {
        int64_t k = 1 + static_cast<int64_t>(rng() % 4);
        int64_t l = static_cast<int64_t>(rng() % 3);
        int64_t m = 1 + static_cast<int64_t>(rng() % 4);
        int64_t j = k + l;
        QuadraticNumber tau = tau_jm(j, m);
        // tau^2 = j tau + m.
        if (!(tau * tau == QuadraticNumber(Rational(j)) * tau + QuadraticNumber(Rational(m)))) {
            ctx.fail("defining relation fails for tau_{j,m}");
            return;
        }
        SubstitutionMatrix mat = pisa(k, l, m).matrix();
        PFData pf = pf_data(mat);
        LimitReport limits = predicted_limits(mat);
        bool ok = pf.u == tau;
        ok = ok && limits.lim_pb_over_n == tau + one;
        ok = ok && limits.lim_pa_over_n ==
                       one + (tau - QuadraticNumber(Rational(j))) / QuadraticNumber(Rational(m));
        QuadraticNumber rlim = (QuadraticNumber(Rational(m - 1)) * tau +
                                QuadraticNumber(Rational(j))) / QuadraticNumber(Rational(m));
        ok = ok && limits.lim_r_over_n == rlim;
        ok = ok && limits.lim_r_over_n ==
                       QuadraticNumber(Rational(m - 1)) * limits.lim_pa_over_n +
                           QuadraticNumber(Rational(j + 1 - m));
        if (j + 1 != m) {
            QuadraticNumber denom{Rational(j + 1 - m)};
            ok = ok && limits.freq_a == (tau - QuadraticNumber(Rational(m))) / denom;
            ok = ok && limits.freq_b == (QuadraticNumber(Rational(j + 1)) - tau) / denom;
        }
        if (!ok) {
            ctx.fail("tau_{j,m} formula mismatch for (" + std::to_string(k) + "," +
                     std::to_string(l) + "," + std::to_string(m) + ")");
            return;
        }
    }
    ctx.note("all tau_{j,m} identities exact on 20 random parameter triples");
}

// ---------------------------------------------------------------------------
// Operators

void check_delete_positions(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE04);
    const uint64_t terms = ctx.n;
    for (int i = 0; i < 100; ++i) {
        StreamPtr w = random_word_stream(rng);
        StreamPtr wa = delete_first(w, Letter::a);
        PositionSeries pa(w, Letter::a), pb(w, Letter::b);
        PositionSeries pa2(wa, Letter::a), pb2(wa, Letter::b);
        // First index whose b lies past the first a.
        uint64_t k = 1;
        while (pb.at(k) < pa.at(1)) ++k;
        for (uint64_t n = 1; n <= terms; ++n) {
            if (pa2.at(n) != pa.at(n + 1) - 1) {
                ctx.fail("a-positions after deleting the first a are not shifted");
                return;
            }
            int64_t want = pb.at(n) - (n >= k ? 1 : 0);
            if (pb2.at(n) != want) {
                ctx.fail("b-positions after deleting the first a are wrong");
                return;
            }
        }
        // The two single-letter deletions commute.
        StreamPtr ab = delete_first(delete_first(w, Letter::a), Letter::b);
        StreamPtr ba = delete_first(delete_first(w, Letter::b), Letter::a);
        if (!(ab->prefix(300) == ba->prefix(300))) {
            ctx.fail("deletions do not commute");
            return;
        }
        // Deletion commutes with reflection.
        if (!(delete_op(reflect(w))->prefix(300) == reflect(delete_op(w))->prefix(300))) {
            ctx.fail("deletion does not commute with reflection");
            return;
        }
    }
    ctx.note("deletion position laws exact on 100 random words, n <= " + std::to_string(terms));
}

void check_delete_shift(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE05);
    const uint64_t terms = ctx.n;
    uint64_t worst_threshold = 0;
    int exact_cases = 0;
    int eventual_cases = 0;
    while (exact_cases < 100 || eventual_cases < 100) {
        StreamPtr w = random_word_stream(rng);
        RelativeSeries rw(w);
        if (exact_cases < 100 && w->letter_at(0) != w->letter_at(1)) {
            // Words starting ab or ba: the shift is exact from n = 1.
            RelativeSeries rd(delete_op(w));
            for (uint64_t n = 1; n <= terms; ++n) {
                if (rd.at(n) != rw.at(n + 1)) {
                    ctx.fail("exact shift law fails for " + w->provenance());
                    return;
                }
            }
            ++exact_cases;
        }
        if (eventual_cases < 100) {
            // General eventual shift for D^k.
            uint64_t k = 1 + rng() % 4;
            RelativeSeries rk(delete_pow(w, k));
            uint64_t threshold = 0;
            for (uint64_t start = 1; start <= 200 && threshold == 0; ++start) {
                bool stable = true;
                for (uint64_t n = start; n <= start + 10 * start + 100; ++n) {
                    if (rk.at(n) != rw.at(n + k)) {
                        stable = false;
                        break;
                    }
                }
                if (stable) threshold = start;
            }
            if (threshold == 0) {
                ctx.fail("no shift threshold <= 200 found for D^" + std::to_string(k));
                return;
            }
            worst_threshold = std::max(worst_threshold, threshold);
            ++eventual_cases;
        }
    }
    ctx.note("exact shift on 100 ab/ba words, eventual shift on 100 words; worst located "
             "threshold = " + std::to_string(worst_threshold));
}

void check_balanced_prefix(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE06);
    for (int i = 0; i < 100; ++i) {
        StreamPtr w = random_word_stream(rng);
        FiniteWord u = random_finite_word(rng, 1, 10);
        if (u.size() % 2 == 1) u.push_back(rng() % 2 ? Letter::a : Letter::b);
        uint64_t k = u.size() / 2;
        StreamPtr prefixed = prefix_op(u, w);
        bool identity = delete_pow(prefixed, k)->prefix(400) == w->prefix(400);
        if (identity != u.balanced()) {
            ctx.fail("D^k Pre_u = Id exactly for balanced u; failed for u = " + u.str());
            return;
        }
        if (u.balanced() && k > 0) {
            RelativeSeries rw(w);
            RelativeSeries rp(prefixed);
            PositionSeries pa_w(w, Letter::a), pa_p(prefixed, Letter::a);
            PositionSeries pb_w(w, Letter::b), pb_p(prefixed, Letter::b);
            for (uint64_t n = 1; n <= ctx.n; ++n) {
                if (rp.at(n + k) != rw.at(n) ||
                    pa_p.at(n + k) != pa_w.at(n) + static_cast<int64_t>(2 * k) ||
                    pb_p.at(n + k) != pb_w.at(n) + static_cast<int64_t>(2 * k)) {
                    ctx.fail("balanced prefix shift law fails for u = " + u.str());
                    return;
                }
            }
        }
    }
    // Pre_ab / Pre_ba are right inverses of D, and left inverses exactly on
    // words starting ab.
    for (int i = 0; i < 20; ++i) {
        StreamPtr w = random_word_stream(rng);
        if (!(delete_op(prefix_op(FiniteWord::parse("ab"), w))->prefix(300) == w->prefix(300)) ||
            !(delete_op(prefix_op(FiniteWord::parse("ba"), w))->prefix(300) == w->prefix(300))) {
            ctx.fail("D Pre_ab / D Pre_ba are not the identity");
            return;
        }
        bool starts_ab = w->letter_at(0) == Letter::a && w->letter_at(1) == Letter::b;
        bool recovered =
            prefix_op(FiniteWord::parse("ab"), delete_op(w))->prefix(300) == w->prefix(300);
        if (recovered != starts_ab) {
            ctx.fail("Pre_ab D = Id exactly on words starting ab");
            return;
        }
    }
    // Prepending a single a strictly raises r.
    for (int i = 0; i < 20; ++i) {
        StreamPtr w = random_word_stream(rng);
        RelativeSeries rw(w);
        RelativeSeries rp(prefix_op(FiniteWord::parse("a"), w));
        for (uint64_t n = 1; n <= 200; ++n) {
            if (!(rp.at(n) > rw.at(n))) {
                ctx.fail("Pre_a does not strictly raise r");
                return;
            }
        }
    }
    ctx.note("balanced classification, shift laws and Pre_a monotonicity all hold");
}

void check_cloning(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE07);
    for (int i = 0; i < 100; ++i) {
        StreamPtr w = random_word_stream(rng);
        int64_t k = 2 + static_cast<int64_t>(rng() % 3);
        StreamPtr cloned = clone_subst(k).apply(w);
        RelativeSeries rw(w);
        RelativeSeries rc(cloned);
        PositionSeries pa_w(w, Letter::a), pa_c(cloned, Letter::a);
        for (uint64_t m = 0; m <= ctx.n; ++m) {
            for (int64_t j = 1; j <= k; ++j) {
                uint64_t arg = static_cast<uint64_t>(m) * static_cast<uint64_t>(k) +
                               static_cast<uint64_t>(j);
                if (rc.at(arg) != k * rw.at(m + 1)) {
                    ctx.fail("cloned r law fails at mk+j = " + std::to_string(arg));
                    return;
                }
                if (pa_c.at(arg) != k * pa_w.at(m + 1) + j - 1) {
                    ctx.fail("cloned p_a law fails at mk+j = " + std::to_string(arg));
                    return;
                }
            }
        }
    }
    ctx.note("cloned position laws exact on 100 random (word, k) pairs, m <= " +
             std::to_string(ctx.n));
}

void check_fib_delete(CheckContext& ctx) {
    StreamPtr f = fibonacci().fixed_point(Letter::a);
    RelativeSeries rd(delete_op(f));
    for (uint64_t n = 1; n <= ctx.n; ++n) {
        if (rd.at(n) != static_cast<int64_t>(n) + 1) {
            ctx.fail("r of the deleted Fibonacci word is not n + 1 at n = " + std::to_string(n));
            return;
        }
    }
    std::string thresholds;
    for (uint64_t k = 1; k <= 5; ++k) {
        RelativeSeries rk(delete_pow(f, k));
        uint64_t threshold = 0;
        for (uint64_t start = 1; start <= 50 && threshold == 0; ++start) {
            bool stable = true;
            for (uint64_t n = start; n <= start + ctx.n; ++n) {
                if (rk.at(n) != static_cast<int64_t>(n + k)) {
                    stable = false;
                    break;
                }
            }
            if (stable) threshold = start;
        }
        if (threshold == 0) {
            ctx.fail("no threshold for r(n) = n + k with k = " + std::to_string(k));
            return;
        }
        thresholds += (k > 1 ? "," : "") + std::to_string(threshold);
    }
    ctx.note("r(n)=n+1 exactly; thresholds for k=1..5: " + thresholds + ", each stable for " +
             std::to_string(ctx.n) + " further terms");
}

void check_fib_iccanobif(CheckContext& ctx) {
    StreamPtr f = fibonacci().fixed_point(Letter::a);
    StreamPtr pre_ab = prefix_op(FiniteWord::parse("ab"), f);
    StreamPtr pre_ba = prefix_op(FiniteWord::parse("ba"), f);
    RelativeSeries rab(pre_ab);
    RelativeSeries rba(pre_ba);
    if (rab.at(1) != 1 || rba.at(1) != -1) {
        ctx.fail("r(1) of the prefixed words is wrong");
        return;
    }
    for (uint64_t n = 2; n <= ctx.n; ++n) {
        if (rab.at(n) != static_cast<int64_t>(n) - 1 || rba.at(n) != static_cast<int64_t>(n) - 1) {
            ctx.fail("r(n) != n - 1 at n = " + std::to_string(n));
            return;
        }
    }
    // Conjugation between the Fibonacci substitution and its reversal.
    BinarySubstitution fib = fibonacci();
    BinarySubstitution rev = iccanobif();
    FiniteWord ab = FiniteWord::parse("ab");
    FiniteWord ba = FiniteWord::parse("ba");
    FiniteWord seed_a = FiniteWord::parse("a");
    for (unsigned n = 1; n <= 8; ++n) {
        FiniteWord lhs_even = ab + fib.power(2 * n).apply(seed_a);
        FiniteWord rhs_even = rev.power(2 * n).apply(seed_a) + ba;
        FiniteWord lhs_odd = ba + fib.power(2 * n - 1).apply(seed_a);
        FiniteWord rhs_odd = rev.power(2 * n - 1).apply(seed_a) + ab;
        if (!(lhs_even == rhs_even) || !(lhs_odd == rhs_odd)) {
            ctx.fail("conjugation identity fails at level " + std::to_string(n));
            return;
        }
    }
    // The reversal has no fixed point, but its square has two, equal to the
    // prefixed Fibonacci words.
    bool threw = false;
    try {
        (void)rev.fixed_point(Letter::a);
    } catch (const NoFixedPoint&) {
        threw = true;
    }
    if (!threw) {
        ctx.fail("reversed substitution unexpectedly has a fixed point");
        return;
    }
    BinarySubstitution rev2 = rev.power(2);
    if (!(rev2.fixed_point(Letter::a)->prefix(1000) == pre_ab->prefix(1000)) ||
        !(rev2.fixed_point(Letter::b)->prefix(1000) == pre_ba->prefix(1000))) {
        ctx.fail("square fixed points do not equal the prefixed Fibonacci words");
        return;
    }
    ctx.note("prefixed-word r formulas, conjugation identities and square fixed points all hold");
}

void check_fib_switch(CheckContext& ctx) {
    StreamPtr f = fibonacci().fixed_point(Letter::a);
    StreamPtr switched = fibonacci_switch(f);
    StreamPtr deleted = delete_op(f);
    if (!(switched->prefix(ctx.n) == deleted->prefix(ctx.n))) {
        ctx.fail("switch output differs from the deleted word");
        return;
    }
    RelativeSeries r(switched);
    for (uint64_t n = 1; n <= 100; ++n) {
        if (r.at(n) != static_cast<int64_t>(n) + 1) {
            ctx.fail("switch output r(n) != n + 1");
            return;
        }
    }
    ctx.note("switch equals deletion letterwise for " + std::to_string(ctx.n) + " letters");
}

void check_eventual_linear(CheckContext& ctx) {
    // (a^j b^j)^w realizes the constant r = j.
    for (int64_t j = 1; j <= 4; ++j) {
        FiniteWord period;
        for (int64_t i = 0; i < j; ++i) period.push_back(Letter::a);
        for (int64_t i = 0; i < j; ++i) period.push_back(Letter::b);
        RelativeSeries r(periodic(period));
        for (uint64_t n = 1; n <= 300; ++n) {
            if (r.at(n) != j) {
                ctx.fail("constant r = j fails for j = " + std::to_string(j));
                return;
            }
        }
    }
    // Fixed points of pisa(k - j, j, 1) realize r(n) = k n - j exactly, and
    // deleting or prefixing slides the offset across the whole residue range.
    for (int64_t k = 1; k <= 3; ++k) {
        for (int64_t rem = 0; rem <= k - 1; ++rem) {
            StreamPtr w = pisa(k - rem, rem, 1).fixed_point(Letter::a);
            RelativeSeries rw(w);
            for (uint64_t n = 1; n <= 300; ++n) {
                if (rw.at(n) != k * static_cast<int64_t>(n) - rem) {
                    ctx.fail("exact linear law fails for k = " + std::to_string(k) +
                             ", j = " + std::to_string(rem));
                    return;
                }
            }
            for (int64_t q = -2; q <= 2; ++q) {
                int64_t target = q * k - rem;
                StreamPtr derived;
                if (q >= 0) {
                    derived = delete_pow(w, static_cast<uint64_t>(q));
                } else {
                    derived = prefix_op(FiniteWord::parse("ab").repeated(
                                            static_cast<std::size_t>(-q)),
                                        w);
                }
                RelativeSeries rd(derived);
                uint64_t threshold = 0;
                for (uint64_t start = 1; start <= 64 && threshold == 0; ++start) {
                    bool stable = true;
                    for (uint64_t n = start; n <= start + 1000; ++n) {
                        if (rd.at(n) != k * static_cast<int64_t>(n) + target) {
                            stable = false;
                            break;
                        }
                    }
                    if (stable) threshold = start;
                }
                if (threshold == 0) {
                    ctx.fail("no eventual-linear threshold for k = " + std::to_string(k) +
                             ", j = " + std::to_string(target));
                    return;
                }
            }
        }
    }
    // The D(w) form: fixed point of pisa(1, k-1, 1) gives r = k n + 1 exactly.
    for (int64_t k = 1; k <= 3; ++k) {
        RelativeSeries rd(delete_op(pisa(1, k - 1, 1).fixed_point(Letter::a)));
        for (uint64_t n = 1; n <= 300; ++n) {
            if (rd.at(n) != k * static_cast<int64_t>(n) + 1) {
                ctx.fail("r of the deleted word is not k n + 1 for k = " + std::to_string(k));
                return;
            }
        }
    }
    ctx.note("every arithmetic progression k n + j with -k < j < k is realized, "
             "eventually where exactness is impossible");
}

// ---------------------------------------------------------------------------
// Spectral

void check_spectral_eigen(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE08);
    auto eigen_ok = [](const SubstitutionMatrix& m) {
        PFData pf = pf_data(m);
        QuadraticNumber top = QuadraticNumber(Rational(m.aa)) * pf.u +
                              QuadraticNumber(Rational(m.ab));
        QuadraticNumber bottom = QuadraticNumber(Rational(m.ba)) * pf.u +
                                 QuadraticNumber(Rational(m.bb));
        bool ok = top == pf.lambda_pf * pf.u && bottom == pf.lambda_pf;
        // The eigenvalue satisfies its characteristic equation exactly.
        ok = ok && pf.lambda_pf * pf.lambda_pf ==
                       QuadraticNumber(Rational(m.trace())) * pf.lambda_pf -
                           QuadraticNumber(Rational(m.det()));
        ok = ok && pf.u.sign() > 0;
        return ok;
    };
    for (const auto& s : {fibonacci(), thue_morse(), period_doubling()}) {
        if (!eigen_ok(s.matrix())) {
            ctx.fail("eigen identity fails for a named substitution");
            return;
        }
    }
    int checked = 0;
    while (checked < 200) {
        SubstitutionMatrix m{static_cast<int64_t>(rng() % 10), static_cast<int64_t>(rng() % 10),
                             static_cast<int64_t>(rng() % 10), static_cast<int64_t>(rng() % 10)};
        if (!is_primitive(m)) continue;
        if (!eigen_ok(m)) {
            ctx.fail("eigen identity fails for a random primitive matrix");
            return;
        }
        ++checked;
    }
    ctx.note("M [u 1]^T = lambda [u 1]^T and the characteristic relation exact on 200 "
             "random primitive matrices");
}

void check_spectral_limits(CheckContext& ctx) {
    LimitReport fib_limits = predicted_limits(fibonacci().matrix());
    if (!(fib_limits.lim_r_over_n == QuadraticNumber(Rational(1)))) {
        ctx.fail("Fibonacci limit of r(n)/n is not exactly 1");
        return;
    }
    LimitReport tm_limits = predicted_limits(thue_morse().matrix());
    if (!(tm_limits.lim_r_over_n == QuadraticNumber(Rational(0)))) {
        ctx.fail("Thue-Morse limit of r(n)/n is not exactly 0");
        return;
    }
    const uint64_t horizon = ctx.n;
    double worst = 0.0;
    for (int64_t k = 1; k <= 3; ++k) {
        for (int64_t l = 0; l <= 2; ++l) {
            for (int64_t m = 1; m <= 3; ++m) {
                BinarySubstitution s = pisa(k, l, m);
                LimitReport limits = predicted_limits(s.matrix());
                Rational ratio = empirical_ratio(s.fixed_point(Letter::a),
                                                 RatioKind::r_over_n, horizon);
                double err = std::abs(ratio.to_double() - limits.lim_r_over_n.to_double());
                worst = std::max(worst, err);
                if (err >= 1e-2) {
                    ctx.fail("empirical r/n off by " + std::to_string(err) + " for (" +
                             std::to_string(k) + "," + std::to_string(l) + "," +
                             std::to_string(m) + ")");
                    return;
                }
            }
        }
    }
    std::ostringstream worst_str;
    worst_str << worst;
    ctx.note("exact limits for Fibonacci and TM; worst empirical gap over the grid at n = " +
             std::to_string(horizon) + " is " + worst_str.str());
}

void check_freq_from_r(CheckContext& ctx) {
    FreqFromLimit half = freq_from_r_limit(ExtendedQuad(QuadraticNumber(Rational(0))));
    FreqFromLimit zero = freq_from_r_limit(ExtendedQuad::plus_infinity());
    FreqFromLimit one = freq_from_r_limit(ExtendedQuad::minus_infinity());
    if (!half.exact || !(half.value == QuadraticNumber(Rational(1, 2))) || !zero.exact ||
        !(zero.value == QuadraticNumber(Rational(0))) || !one.exact ||
        !(one.value == QuadraticNumber(Rational(1)))) {
        ctx.fail("special cases of the frequency formula are wrong");
        return;
    }
    // r = 1 gives (3 - sqrt 5)/2, which is 1/(tau + 1).
    FreqFromLimit fib = freq_from_r_limit(ExtendedQuad(QuadraticNumber(Rational(1))));
    QuadraticNumber expected(Rational(3, 2), Rational(-1, 2), 5);
    if (!fib.exact || !(fib.value == expected)) {
        ctx.fail("frequency at r = 1 is not (3 - sqrt 5)/2");
        return;
    }
    // Composing the limit of r/n with the formula returns freq_b, exactly.
    std::mt19937_64 rng(0xC0FFEE09);
    std::vector<SubstitutionMatrix> mats = {fibonacci().matrix(), thue_morse().matrix(),
                                            period_doubling().matrix()};
    for (int i = 0; i < 20; ++i) {
        int64_t k = 1 + static_cast<int64_t>(rng() % 4);
        int64_t l = static_cast<int64_t>(rng() % 3);
        int64_t m = 1 + static_cast<int64_t>(rng() % 4);
        mats.push_back(pisa(k, l, m).matrix());
    }
    for (const auto& m : mats) {
        LimitReport limits = predicted_limits(m);
        FreqFromLimit back = freq_from_r_limit(ExtendedQuad(limits.lim_r_over_n));
        if (!back.exact || !(back.value == limits.freq_b)) {
            ctx.fail("frequency from the r-limit does not match freq_b exactly");
            return;
        }
    }
    ctx.note("formula special cases plus exact roundtrip through the r-limit for 23 matrices");
}

void check_pq_theorem(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE0A);
    auto [p1, q1] = pq_from_r(ExtendedQuad(QuadraticNumber(Rational(0))));
    if (!(p1.value() == QuadraticNumber(Rational(2))) ||
        !(q1.value() == QuadraticNumber(Rational(2)))) {
        ctx.fail("r = 0 should give p = q = 2");
        return;
    }
    auto [pf, qf] = pq_from_r(ExtendedQuad(QuadraticNumber(Rational(1))));
    QuadraticNumber tau = tau_k(1);
    if (!(pf.value() == tau + QuadraticNumber(Rational(1))) || !(qf.value() == tau)) {
        ctx.fail("r = 1 should give p = tau + 1 and q = tau");
        return;
    }
    QuadraticNumber one{Rational(1)};
    for (int i = 0; i < 100; ++i) {
        int64_t num = static_cast<int64_t>(rng() % 41) - 20;
        int64_t den = 1 + static_cast<int64_t>(rng() % 9);
        QuadraticNumber r{Rational(num, den)};
        auto [p, q] = pq_from_r(ExtendedQuad(r));
        if (!(one / p.value() + one / q.value() == one) || !(p.value() - q.value() == r)) {
            ctx.fail("1/p + 1/q = 1 fails for r = " + r.str());
            return;
        }
    }
    ctx.note("1/p + 1/q = 1 and p - q = r exact for 100 random rational r");
}

void check_classify(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE0B);
    auto is_eigen = [](const SubstitutionMatrix& m, const QuadraticNumber& t) {
        QuadraticNumber top = QuadraticNumber(Rational(m.aa)) * t + QuadraticNumber(Rational(m.ab));
        QuadraticNumber bottom = QuadraticNumber(Rational(m.ba)) * t +
                                 QuadraticNumber(Rational(m.bb));
        return top == t * bottom;
    };
    const int cases = static_cast<int>(ctx.len);
    for (int i = 0; i < cases; ++i) {
        SubstitutionMatrix m{static_cast<int64_t>(rng() % 10), static_cast<int64_t>(rng() % 10),
                             static_cast<int64_t>(rng() % 10), static_cast<int64_t>(rng() % 10)};
        if (classify_golden(m).has_value() != is_eigen(m, tau_k(1))) {
            ctx.fail("golden classification disagrees with the eigenvector test");
            return;
        }
        for (int64_t k = 1; k <= 3; ++k) {
            if (classify_tau_k(m, k).has_value() != is_eigen(m, tau_k(k))) {
                ctx.fail("tau_k classification disagrees for k = " + std::to_string(k));
                return;
            }
        }
        int64_t j = 1 + static_cast<int64_t>(rng() % 4);
        int64_t mm = 1 + static_cast<int64_t>(rng() % 4);
        if (classify_tau_jm(m, j, mm).matches != is_eigen(m, tau_jm(j, mm))) {
            ctx.fail("tau_{j,m} classification disagrees for j = " + std::to_string(j) +
                     ", m = " + std::to_string(mm));
            return;
        }
        if (is_primitive(m)) {
            std::optional<int64_t> direct;
            PFData pf = pf_data(m);
            if (pf.u == QuadraticNumber(Rational(1))) {
                direct = 0;
            } else {
                for (int64_t k = 1; k <= 20 && !direct; ++k) {
                    if (pf.u == tau_k(k)) direct = k;
                    if (pf.u == QuadraticNumber(Rational(1)) / tau_k(k)) direct = -k;
                }
            }
            if (classify_linear_limit(m) != direct) {
                ctx.fail("linear-limit classification disagrees with the eigen route");
                return;
            }
        }
    }
    ctx.note("all four classifiers agree with direct exact eigenvector checks on " +
             std::to_string(cases) + " random matrices");
}

void check_golden_closure(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE0C);
    for (int i = 0; i < 100; ++i) {
        auto make = [&rng]() {
            int64_t m = static_cast<int64_t>(rng() % 9);
            int64_t n = static_cast<int64_t>(rng() % 9);
            return SubstitutionMatrix{m + n, m, m, n};
        };
        SubstitutionMatrix product = make() * make();
        if (!classify_golden(product).has_value()) {
            ctx.fail("product of golden-form matrices lost the form");
            return;
        }
    }
    ctx.note("golden form closed under products for 100 random pairs");
}

void check_freq_transfer(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE0D);
    const uint64_t horizon = ctx.n;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        BinarySubstitution s = random_fixed_point_subst(rng);
        StreamPtr w = random_word_stream(rng);
        QuadraticNumber fa{empirical_ratio(w, RatioKind::freq_a, horizon)};
        QuadraticNumber fb{QuadraticNumber(Rational(1)) - fa};
        auto [ta, tb] = freq_transfer(s, fa, fb);
        Rational actual = empirical_ratio(s.apply(w), RatioKind::freq_a, horizon);
        double err = std::abs(ta.to_double() - actual.to_double());
        worst = std::max(worst, err);
        if (err >= 1e-2) {
            ctx.fail("transferred frequency off by " + std::to_string(err));
            return;
        }
        // At the image boundary |s(w[0..m))| the transfer is a counting
        // identity, exact as rationals.
        uint64_t m = 1000 + rng() % 1000;
        auto count_a = static_cast<int64_t>(counting(w, Letter::a, m));
        auto count_b = static_cast<int64_t>(counting(w, Letter::b, m));
        auto boundary = static_cast<uint64_t>(
            count_a * static_cast<int64_t>(s.image(Letter::a).size()) +
            count_b * static_cast<int64_t>(s.image(Letter::b).size()));
        auto [ea, eb] = freq_transfer(s, QuadraticNumber(Rational(count_a, static_cast<int64_t>(m))),
                                      QuadraticNumber(Rational(count_b, static_cast<int64_t>(m))));
        if (!(ea == QuadraticNumber(empirical_ratio(s.apply(w), RatioKind::freq_a, boundary))) ||
            !(eb == QuadraticNumber(empirical_ratio(s.apply(w), RatioKind::freq_b, boundary)))) {
            ctx.fail("transfer is not exact at an image boundary");
            return;
        }
    }
    // Exact roundtrip through the inverse for invertible matrices.
    int rounds = 0;
    while (rounds < 50) {
        BinarySubstitution s = random_fixed_point_subst(rng);
        if (s.matrix().det() == 0) continue;
        int64_t num = static_cast<int64_t>(rng() % 99) + 1;
        QuadraticNumber fa{Rational(num, 100)};
        QuadraticNumber fb{Rational(100 - num, 100)};
        auto [ta, tb] = freq_transfer(s, fa, fb);
        auto [ba, bb] = freq_transfer_inverse(s, ta, tb);
        if (!(ba == fa) || !(bb == fb)) {
            ctx.fail("inverse transfer does not roundtrip exactly");
            return;
        }
        ++rounds;
    }
    // Cloning leaves frequencies untouched.
    for (int64_t k : {2, 3, 5}) {
        QuadraticNumber fa{Rational(1, 3)};
        QuadraticNumber fb{Rational(2, 3)};
        auto [ta, tb] = freq_transfer(clone_subst(k), fa, fb);
        if (!(ta == fa) || !(tb == fb)) {
            ctx.fail("cloning changed the frequencies");
            return;
        }
    }
    std::ostringstream worst_str;
    worst_str << worst;
    ctx.note("20 empirical transfers within 1e-2 (worst " + worst_str.str() +
             ") and exact at image boundaries, 50 exact inverse roundtrips, cloning invariance");
}

// ---------------------------------------------------------------------------
// Structure of position series

void check_reflection(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE0E);
    for (int i = 0; i < 50; ++i) {
        StreamPtr w = random_word_stream(rng);
        StreamPtr rw = reflect(w);
        RelativeSeries r(w), rr(rw);
        for (uint64_t n = 1; n <= ctx.n; ++n) {
            if (rr.at(n) != -r.at(n)) {
                ctx.fail("r of the reflected word is not -r");
                return;
            }
        }
        if (!(reflect(rw)->prefix(500) == w->prefix(500))) {
            ctx.fail("reflection is not an involution");
            return;
        }
    }
    ctx.note("reflection negates r and is an involution on 50 random words");
}

void check_partition(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE0F);
    const uint64_t limit = ctx.n;
    for (int i = 0; i < 50; ++i) {
        StreamPtr w = random_word_stream(rng);
        std::vector<int> seen(limit, 0);
        PositionSeries pa(w, Letter::a), pb(w, Letter::b);
        for (const auto* series : {&pa, &pb}) {
            for (uint64_t n = 1;; ++n) {
                int64_t pos = series->at(n);
                if (pos >= static_cast<int64_t>(limit)) break;
                seen[static_cast<uint64_t>(pos)] += 1;
            }
        }
        for (uint64_t pos = 0; pos < limit; ++pos) {
            if (seen[pos] != 1) {
                ctx.fail("positions do not partition 0.." + std::to_string(limit - 1));
                return;
            }
        }
    }
    ctx.note("a-positions and b-positions partition the prefix for 50 random words");
}

void check_counting_adjunction(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE10);
    for (int i = 0; i < 30; ++i) {
        StreamPtr w = random_word_stream(rng);
        for (Letter x : {Letter::a, Letter::b}) {
            PositionSeries p(w, x);
            for (uint64_t n = 1; n <= ctx.n; ++n) {
                if (p.count_up_to(static_cast<uint64_t>(p.at(n)) + 1) != n) {
                    ctx.fail("counting after the n-th occurrence is not n");
                    return;
                }
            }
            for (uint64_t m = 1; m <= ctx.n; ++m) {
                uint64_t c = p.count_up_to(m);
                if (c >= 1 && p.at(c) > static_cast<int64_t>(m) - 1) {
                    ctx.fail("the c-th occurrence lies beyond the counted prefix");
                    return;
                }
            }
        }
    }
    ctx.note("counting and position functions are adjoint on 30 random words");
}

void check_periodicity(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE11);
    const uint64_t horizon = ctx.n;
    for (int i = 0; i < 50; ++i) {
        FiniteWord u = random_mixed_period(rng);
        uint64_t k = u.count(Letter::a);
        uint64_t j = u.count(Letter::b);
        RelativeSeries r(periodic(u));
        for (uint64_t n = 1; n <= horizon; ++n) {
            if (r.pa().delta(n) != r.pa().delta(n + k)) {
                ctx.fail("delta p_a is not k-periodic for u = " + u.str());
                return;
            }
            if (r.pb().delta(n) != r.pb().delta(n + j)) {
                ctx.fail("delta p_b is not j-periodic for u = " + u.str());
                return;
            }
            if (r.delta(n) != r.delta(n + std::lcm(k, j))) {
                ctx.fail("delta r is not lcm(k,j)-periodic for u = " + u.str());
                return;
            }
        }
    }
    ctx.note("periodic words have periodic difference series (50 random periods)");
}

void check_periodic_deltapb(CheckContext& ctx) {
    // Delta p_b is blind to the leading a-run: stripping p_b(1) a's from the
    // front leaves a word whose periodicity is equivalent to that of
    // Delta p_b over the horizon.
    auto window_periodic = [](const std::function<int64_t(uint64_t)>& s, uint64_t len) {
        for (uint64_t p = 1; p <= len / 3; ++p) {
            bool ok = true;
            for (uint64_t i = 1; i + p <= len; ++i) {
                if (s(i) != s(i + p)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    };
    std::mt19937_64 rng(0xC0FFEE12);
    const uint64_t len = 120;
    for (int i = 0; i < 30; ++i) {
        uint64_t run = rng() % 6;
        FiniteWord head;
        for (uint64_t t = 0; t < run; ++t) head.push_back(Letter::a);
        bool periodic_tail = rng() % 2 == 0;
        StreamPtr tail = periodic_tail
                             ? periodic(random_mixed_period(rng, 6))
                             : fibonacci().fixed_point(Letter::a);
        StreamPtr w = prefix_op(head, tail);
        PositionSeries pb(w, Letter::b);
        uint64_t strip = static_cast<uint64_t>(pb.at(1));
        StreamPtr stripped = w;
        for (uint64_t t = 0; t < strip; ++t) stripped = delete_first(stripped, Letter::a);
        bool lhs = window_periodic([&](uint64_t n) { return pb.delta(n); }, len);
        // Letter sequence of the stripped word, seen as an integer series.
        bool rhs = window_periodic(
            [&](uint64_t n) { return stripped->letter_at(n - 1) == Letter::a ? 0 : 1; }, 3 * len);
        if (lhs != rhs) {
            ctx.fail("delta p_b periodicity does not match the stripped word");
            return;
        }
    }
    ctx.note("delta p_b periodic exactly when the word minus its leading a-run is (30 cases)");
}

void check_runs_bounds(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE13);
    const uint64_t horizon = 10000;
    for (int i = 0; i < 30; ++i) {
        StreamPtr w = random_word_stream(rng);
        if (w->letter_at(0) != Letter::a) w = reflect(w);
        RunReport report = runs(w, horizon);
        auto c = static_cast<int64_t>(report.c);
        RelativeSeries r(w);
        for (uint64_t n = 1; n <= ctx.n; ++n) {
            auto nn = static_cast<int64_t>(n);
            // Lower bound c(1-n)+1 comes from p_b(n) >= n and the gap bound
            // on p_a; the upper from p_a(n) >= n-1 and the gap bound on p_b.
            if (!(c * (1 - nn) + 1 <= r.at(n) && r.at(n) <= c * nn)) {
                ctx.fail("linear bounds on r fail at n = " + std::to_string(n));
                return;
            }
            if (r.pa().at(n) > (c + 1) * (nn - 1) || r.pb().at(n) > (c + 1) * nn - 1) {
                ctx.fail("linear bounds on the position series fail at n = " + std::to_string(n));
                return;
            }
        }
        // Interior runs of b match the gap view: a maximal b-run of length
        // g sits between consecutive a's at distance g + 1.
        uint64_t longest_gap = 0;
        const PositionSeries& pa = r.pa();
        for (uint64_t n = 1; pa.at(n + 1) < static_cast<int64_t>(horizon); ++n)
            longest_gap = std::max(longest_gap,
                                   static_cast<uint64_t>(pa.delta(n)) - 1);
        uint64_t longest_interior_b = 0;
        uint64_t current = 0;
        bool after_a = false;
        FiniteWord p = w->prefix(horizon);
        for (uint64_t t = 0; t < horizon; ++t) {
            if (p[t] == Letter::b) {
                if (after_a) ++current;
            } else {
                longest_interior_b = std::max(longest_interior_b, current);
                current = 0;
                after_a = true;
            }
        }
        if (longest_gap != longest_interior_b) {
            ctx.fail("b-runs do not match the gaps of the a-position series");
            return;
        }
    }
    // Without bb the relative position is non-decreasing.
    for (const auto& w :
         {fibonacci().fixed_point(Letter::a), noble_means(2).fixed_point(Letter::a),
          periodic(FiniteWord::parse("aab"))}) {
        RelativeSeries r(w);
        for (uint64_t n = 1; n <= ctx.n; ++n) {
            if (r.delta(n) < 0) {
                ctx.fail("r decreased although the word has no bb");
                return;
            }
        }
    }
    // The block word a b a^2 b^2 a^3 b^3 ... has increasing r yet contains bb.
    StreamPtr blocks = from_function(
        [](uint64_t i) {
            uint64_t block = 1;
            uint64_t pos = i;
            while (pos >= 2 * block) {
                pos -= 2 * block;
                block += 1;
            }
            return pos < block ? Letter::a : Letter::b;
        },
        "explicit-rule:increasing-blocks");
    RelativeSeries rb(blocks);
    for (uint64_t n = 1; n <= ctx.n; ++n) {
        if (rb.delta(n) < 0) {
            ctx.fail("block word r is not increasing");
            return;
        }
    }
    bool has_bb = false;
    FiniteWord bp = blocks->prefix(50);
    for (uint64_t t = 1; t < 50 && !has_bb; ++t)
        has_bb = bp[t] == Letter::b && bp[t - 1] == Letter::b;
    if (!has_bb) {
        ctx.fail("block word should contain bb");
        return;
    }
    ctx.note("linear bounds, run/gap equivalence and monotonicity laws all hold");
}

void check_dimer_rule(CheckContext& ctx) {
    std::mt19937_64 rng(0xC0FFEE14);
    for (int i = 0; i < 30; ++i) {
        // Build a word whose dimers all lie in {ab, ba}.
        auto seed = rng();
        StreamPtr w = from_function(
            [seed](uint64_t i) {
                std::mt19937_64 local(seed ^ (i / 2));
                bool ab = local() % 2 == 0;
                bool first = i % 2 == 0;
                return (ab == first) ? Letter::a : Letter::b;
            },
            "explicit-rule:random-dimers");
        RelativeSeries r(w);
        for (uint64_t n = 1; n <= ctx.n; ++n) {
            auto [x, y] = dimer(w, n - 1);
            int64_t expected = x == Letter::a ? 1 : -1;
            if (r.at(n) != expected) {
                ctx.fail("dimer rule fails at n = " + std::to_string(n));
                return;
            }
            (void)y;
        }
    }
    ctx.note("r(n) = +-1 according to the (n-1)-th dimer on 30 random dimer words");
}

// ---------------------------------------------------------------------------
// Uniqueness searches (depth-first with constraint pruning)

// Search all words of a given length starting with a whose difference
// series Delta p_a and Delta p_b are letterwise codings of the word itself,
// as far as the window can tell. Words with fewer than two occurrences of a
// letter cannot pin their codings and are not counted.
struct CodingSearch {
    uint64_t length;
    std::vector<Letter> word;
    std::vector<uint64_t> qa, qb;
    std::optional<int64_t> code_a[2];  // Delta p_a value under a / b
    std::optional<int64_t> code_b[2];  // Delta p_b value under a / b
    std::vector<std::string> survivors;

    explicit CodingSearch(uint64_t len) : length(len) {}

    // The forced position of the next occurrence, when the coding value for
    // the gap is already pinned.
    std::optional<uint64_t> predicted_next(const std::vector<uint64_t>& q,
                                           const std::optional<int64_t>* code) const {
        if (q.empty()) return std::nullopt;
        Letter under = word[q.size() - 1];
        const auto& value = code[static_cast<int>(under)];
        if (!value) return std::nullopt;
        return q.back() + static_cast<uint64_t>(*value);
    }

    bool try_place(Letter c, uint64_t t) {
        auto pred_a = predicted_next(qa, code_a);
        auto pred_b = predicted_next(qb, code_b);
        // A pinned coding value forces the position of the next occurrence:
        // the forced cell must hold that letter, and the letter cannot show
        // up before its forced cell.
        if (pred_a && t == *pred_a && c != Letter::a) return false;
        if (pred_b && t == *pred_b && c != Letter::b) return false;
        if (c == Letter::a) {
            if (pred_a && t != *pred_a) return false;  // early or misplaced a
            if (!pred_a && !qa.empty()) {
                Letter under = word[qa.size() - 1];
                code_a[static_cast<int>(under)] = static_cast<int64_t>(t - qa.back());
            }
            qa.push_back(t);
        } else {
            if (pred_b && t != *pred_b) return false;
            if (!pred_b && !qb.empty()) {
                Letter under = word[qb.size() - 1];
                code_b[static_cast<int>(under)] = static_cast<int64_t>(t - qb.back());
            }
            qb.push_back(t);
        }
        word.push_back(c);
        return true;
    }

    void run() {
        word.clear();
        word.reserve(length);
        qa.push_back(0);
        word.push_back(Letter::a);
        dfs(1);
        qa.clear();
    }

    void dfs(uint64_t t) {
        if (t == length) {
            if (qa.size() >= 2 && qb.size() >= 2) {
                std::string s;
                for (Letter c : word) s.push_back(to_char(c));
                survivors.push_back(s);
            }
            return;
        }
        for (Letter c : {Letter::a, Letter::b}) {
            auto saved_a = code_a[0];
            auto saved_a2 = code_a[1];
            auto saved_b = code_b[0];
            auto saved_b2 = code_b[1];
            std::size_t na = qa.size();
            std::size_t nb = qb.size();
            if (try_place(c, t)) dfs(t + 1);
            code_a[0] = saved_a;
            code_a[1] = saved_a2;
            code_b[0] = saved_b;
            code_b[1] = saved_b2;
            qa.resize(na);
            qb.resize(nb);
            word.resize(t);
        }
    }
};

void check_fib_uni(CheckContext& ctx) {
    uint64_t length = ctx.len;
    CodingSearch search(length);
    search.run();
    StreamPtr f = fibonacci().fixed_point(Letter::a);
    std::string fib_prefix = f->prefix(length).str();
    std::string alternating = periodic(FiniteWord::parse("ab"))->prefix(length).str();
    std::sort(search.survivors.begin(), search.survivors.end());
    std::vector<std::string> expected = {fib_prefix, alternating};
    std::sort(expected.begin(), expected.end());
    if (search.survivors != expected) {
        ctx.fail("survivors of the coding search are not exactly the Fibonacci and "
                 "alternating prefixes (got " + std::to_string(search.survivors.size()) + ")");
        return;
    }
    ctx.note("length-" + std::to_string(length) +
             " search leaves exactly the Fibonacci prefix and (ab)^w prefix");
}

// Words on +-1 equal to their own relative position sequence, witnessed to
// depth length/2 within the window.
struct SelfRSearch {
    uint64_t length;
    std::vector<Letter> word;
    std::vector<uint64_t> qa, qb;
    std::vector<std::string> survivors;

    explicit SelfRSearch(uint64_t len) : length(len) {}

    void run() {
        word.push_back(Letter::a);
        qa.push_back(0);
        dfs(1);
    }

    bool new_pair_ok() const {
        uint64_t n = std::min(qa.size(), qb.size());
        if (n == 0) return true;
        int64_t r = static_cast<int64_t>(qb[n - 1]) - static_cast<int64_t>(qa[n - 1]);
        int64_t coded = word[n - 1] == Letter::a ? 1 : -1;
        return r == coded;
    }

    void dfs(uint64_t t) {
        if (t == length) {
            if (qa.size() == length / 2 && qb.size() == length / 2) {
                std::string s;
                for (Letter c : word) s.push_back(to_char(c));
                survivors.push_back(s);
            }
            return;
        }
        for (Letter c : {Letter::a, Letter::b}) {
            std::size_t na = qa.size();
            std::size_t nb = qb.size();
            (c == Letter::a ? qa : qb).push_back(t);
            word.push_back(c);
            // Placing a letter can complete at most the min(|qa|, |qb|)-th
            // pair; rechecking an already verified pair is harmless.
            if (new_pair_ok()) dfs(t + 1);
            qa.resize(na);
            qb.resize(nb);
            word.resize(t);
        }
    }
};

void check_tm_uni(CheckContext& ctx) {
    uint64_t length = ctx.len;
    SelfRSearch search(length);
    search.run();
    std::string tm_prefix = thue_morse().fixed_point(Letter::a)->prefix(length).str();
    if (search.survivors.size() != 1 || search.survivors[0] != tm_prefix) {
        ctx.fail("self-r search should leave exactly the Thue-Morse prefix (got " +
                 std::to_string(search.survivors.size()) + ")");
        return;
    }
    ctx.note("length-" + std::to_string(length) + " search leaves exactly the Thue-Morse prefix");
}

// ---------------------------------------------------------------------------
// Registry

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"thm-fib", 100000, 0, check_thm_fib},
        {"tm-fixed-point", 100000, 0, check_tm_fixed_point},
        {"tm-clone", 10000, 0, check_tm_clone},
        {"table1", 20, 0, check_table1},
        {"reconstruction-roundtrip", 1000, 200, check_reconstruction_roundtrip},
        {"monotone-r", 60, 0, check_monotone_r},
        {"pisa-closed-form", 10000, 0, check_pisa_closed_form},
        {"pisa-equivalence", 0, 0, check_pisa_equivalence},
        {"delete-positions", 1000, 0, check_delete_positions},
        {"delete-shift", 1000, 0, check_delete_shift},
        {"balanced-prefix", 1000, 0, check_balanced_prefix},
        {"cloning", 1000, 0, check_cloning},
        {"fib-delete", 10000, 0, check_fib_delete},
        {"fib-iccanobif", 10000, 0, check_fib_iccanobif},
        {"fib-switch", 10000, 0, check_fib_switch},
        {"eventual-linear", 1000, 0, check_eventual_linear},
        {"spectral-eigen", 0, 0, check_spectral_eigen},
        {"spectral-limits", 100000, 0, check_spectral_limits},
        {"freq-from-r", 0, 0, check_freq_from_r},
        {"pq-theorem", 0, 0, check_pq_theorem},
        {"classify", 0, 500, check_classify},
        {"golden-closure", 0, 0, check_golden_closure},
        {"freq-transfer", 100000, 0, check_freq_transfer},
        {"reflection", 1000, 0, check_reflection},
        {"partition", 10000, 0, check_partition},
        {"counting-adjunction", 1000, 0, check_counting_adjunction},
        {"periodicity", 300, 0, check_periodicity},
        {"periodic-deltapb", 0, 0, check_periodic_deltapb},
        {"runs-bounds", 1000, 0, check_runs_bounds},
        {"dimer-rule", 1000, 0, check_dimer_rule},
        {"fib-uni", 0, 30, check_fib_uni},
        {"tm-uni", 0, 20, check_tm_uni},
    };
    return defs;
}

}  // namespace

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& def : registry()) ids.push_back(def.id);
    return ids;
}

bool has_check(const std::string& id) {
    for (const auto& def : registry())
        if (def.id == id) return true;
    return false;
}

Certificate run_check(const std::string& id, const Scale& scale) {
    for (const auto& def : registry()) {
        if (def.id != id) continue;
        CheckContext ctx{scale.n != 0 ? scale.n : def.default_n,
                         scale.len != 0 ? scale.len : def.default_len,
                         {}};
        try {
            def.fn(ctx);
        } catch (const Error& e) {
            ctx.fail(std::string("unexpected error: ") + e.what());
        }
        Certificate cert;
        cert.id = id;
        cert.pass = ctx.pass;
        cert.detail = ctx.detail.str();
        if (!cert.detail.empty() && cert.detail.ends_with("; "))
            cert.detail.resize(cert.detail.size() - 2);
        return cert;
    }
    throw BadInput("unknown check id '" + id + "'");
}

std::vector<Certificate> run_all(const Scale& scale) {
    std::vector<Certificate> out;
    for (const auto& def : registry()) out.push_back(run_check(def.id, scale));
    return out;
}

}  // namespace relpos::verify
