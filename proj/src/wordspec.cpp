#include "relpos/wordspec.hpp"

#include <charconv>
#include <vector>

#include "relpos/errors.hpp"
#include "relpos/operators.hpp"

namespace relpos {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, const char* what) {
    s = trim(s);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw BadInput(std::string("expected an integer for ") + what + ", got '" +
                       std::string(s) + "'");
    return value;
}

std::vector<std::int64_t> parse_int_list(std::string_view s, const char* what) {
    std::vector<std::int64_t> out;
    while (!s.empty()) {
        auto comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma), what));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        auto pos = s.find(sep);
        parts.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return parts;
}

}  // namespace

BinarySubstitution parse_substitution(std::string_view spec) {
    spec = trim(spec);
    if (spec == "fibonacci" || spec == "fib") return fibonacci();
    if (spec == "thue_morse" || spec == "thue-morse" || spec == "tm") return thue_morse();
    if (spec == "period_doubling" || spec == "period-doubling" || spec == "pd")
        return period_doubling();
    if (spec == "iccanobif") return iccanobif();
    if (spec.starts_with("pisa:")) {
        auto args = parse_int_list(spec.substr(5), "pisa:k,l,m");
        if (args.size() != 3) throw BadInput("pisa takes three parameters: pisa:k,l,m");
        return pisa(args[0], args[1], args[2]);
    }
    if (spec.starts_with("noble:")) return noble_means(parse_int(spec.substr(6), "noble:k"));
    if (spec.starts_with("clone:")) return clone_subst(parse_int(spec.substr(6), "clone:k"));
    if (spec.starts_with("golden:")) {
        auto args = parse_int_list(spec.substr(7), "golden:m,n");
        if (args.size() != 2) throw BadInput("golden takes two parameters: golden:m,n");
        return golden_family(args[0], args[1]);
    }
    if (spec.find("->") != std::string_view::npos) return BinarySubstitution::parse(spec);
    throw BadInput("unknown substitution '" + std::string(spec) + "'");
}

namespace {

StreamPtr parse_base_word(std::string_view spec) {
    spec = trim(spec);
    if (spec.starts_with("periodic:")) return periodic(FiniteWord::parse(spec.substr(9)));
    Letter seed = Letter::a;
    if (spec.size() >= 2 && spec[spec.size() - 2] == '@') {
        auto x = letter_from_char(spec.back());
        if (!x) throw BadInput("seed must be a or b");
        seed = *x;
        spec = spec.substr(0, spec.size() - 2);
    }
    return parse_substitution(spec).fixed_point(seed);
}

StreamPtr apply_stage(std::string_view stage, StreamPtr w) {
    stage = trim(stage);
    if (stage == "reflect") return reflect(w);
    if (stage == "delete") return delete_op(w);
    if (stage == "delete_a") return delete_first(w, Letter::a);
    if (stage == "delete_b") return delete_first(w, Letter::b);
    if (stage.starts_with("delete^"))
        return delete_pow(w, static_cast<std::uint64_t>(parse_int(stage.substr(7), "delete^K")));
    if (stage.starts_with("prefix:")) return prefix_op(FiniteWord::parse(stage.substr(7)), w);
    if (stage == "switch") return fibonacci_switch(w);
    return parse_substitution(stage).apply(w);
}

}  // namespace

StreamPtr parse_word(std::string_view spec) {
    auto stages = split(spec, '|');
    if (stages.empty() || stages[0].empty()) throw BadInput("empty word spec");
    StreamPtr w = parse_base_word(stages[0]);
    for (std::size_t i = 1; i < stages.size(); ++i) w = apply_stage(stages[i], w);
    return w;
}

namespace {

// k*n+j in the forms "n", "3*n", "n+2", "2*n-1", "7".
RSpec parse_formula(std::string_view body) {
    body = trim(body);
    std::int64_t k = 0;
    std::int64_t j = 0;
    auto n_pos = body.find('n');
    if (n_pos == std::string_view::npos) {
        j = parse_int(body, "formula constant");
        return RSpec::linear(0, j);
    }
    std::string_view coeff = trim(body.substr(0, n_pos));
    if (coeff.empty()) {
        k = 1;
    } else if (coeff == "-") {
        k = -1;
    } else {
        if (coeff.back() == '*') coeff.remove_suffix(1);
        k = parse_int(coeff, "formula coefficient");
    }
    std::string_view rest = trim(body.substr(n_pos + 1));
    if (!rest.empty() && rest.front() == '+') rest = trim(rest.substr(1));
    if (!rest.empty()) j = parse_int(rest, "formula offset");
    return RSpec::linear(k, j);
}

}  // namespace

RSpec parse_rspec(std::string_view spec) {
    spec = trim(spec);
    if (spec == "fib" || spec == "fibonacci") {
        RSpec out = RSpec::linear(1, 0);
        out.description = "fib";
        return out;
    }
    if (spec == "tm" || spec == "thue_morse")
        return RSpec::of_word(thue_morse().fixed_point(Letter::a));
    if (spec.starts_with("formula:")) return parse_formula(spec.substr(8));
    if (spec.starts_with("values:")) return RSpec::from_values(parse_int_list(spec.substr(7), "values"));
    if (spec.starts_with("word:")) return RSpec::of_word(parse_word(spec.substr(5)));
    // Bare formulas are common on the command line; accept them directly.
    return parse_formula(spec);
}

}  // namespace relpos
