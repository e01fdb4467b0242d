#include "relpos.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "relpos/errors.hpp"
#include "relpos/position.hpp"
#include "relpos/quadratic.hpp"
#include "relpos/reconstruct.hpp"
#include "relpos/spectral.hpp"
#include "relpos/substitution.hpp"
#include "relpos/verify.hpp"
#include "relpos/word_stream.hpp"
#include "relpos/wordspec.hpp"

using nlohmann::json;

struct rp_word {
    relpos::StreamPtr stream;
};

struct rp_subst {
    relpos::BinarySubstitution subst;
};

namespace {

thread_local std::string t_last_error;

rp_status status_from(const relpos::Error& e) {
    t_last_error = e.what();
    switch (e.code()) {
        case relpos::ErrorCode::bad_input: return RP_ERR_BAD_INPUT;
        case relpos::ErrorCode::budget_exceeded: return RP_ERR_BUDGET_EXCEEDED;
        case relpos::ErrorCode::occurrence_not_found: return RP_ERR_OCCURRENCE_NOT_FOUND;
        case relpos::ErrorCode::no_fixed_point: return RP_ERR_NO_FIXED_POINT;
        case relpos::ErrorCode::undetermined_region: return RP_ERR_UNDETERMINED;
        case relpos::ErrorCode::malformed_supertile: return RP_ERR_MALFORMED_SUPERTILE;
        case relpos::ErrorCode::non_primitive: return RP_ERR_NON_PRIMITIVE;
        case relpos::ErrorCode::singular_matrix: return RP_ERR_SINGULAR;
        case relpos::ErrorCode::arithmetic_overflow: return RP_ERR_OVERFLOW;
        case relpos::ErrorCode::field_mismatch: return RP_ERR_BAD_INPUT;
        case relpos::ErrorCode::internal: return RP_ERR_INTERNAL;
    }
    return RP_ERR_INTERNAL;
}

template <typename Fn>
rp_status guarded(Fn&& fn) {
    try {
        fn();
        return RP_OK;
    } catch (const relpos::Error& e) {
        return status_from(e);
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return RP_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

relpos::Letter letter_arg(char c) {
    auto x = relpos::letter_from_char(c);
    if (!x) throw relpos::BadInput("letter must be 'a' or 'b'");
    return *x;
}

json quad_json(const relpos::QuadraticNumber& q) {
    return json{{"x", q.rational_part().str()},
                {"y", q.surd_coeff().str()},
                {"D", q.discriminant()},
                {"decimal", q.to_double()}};
}

}  // namespace

extern "C" {

const char* rp_status_message(rp_status status) {
    switch (status) {
        case RP_OK: return "ok";
        case RP_ERR_BAD_INPUT: return "bad input";
        case RP_ERR_BUDGET_EXCEEDED: return "index budget exceeded";
        case RP_ERR_OCCURRENCE_NOT_FOUND: return "occurrence not found within the budget";
        case RP_ERR_NO_FIXED_POINT: return "substitution has no fixed point for this seed";
        case RP_ERR_UNDETERMINED: return "position lies in the undetermined region";
        case RP_ERR_MALFORMED_SUPERTILE: return "input does not split into supertiles";
        case RP_ERR_NON_PRIMITIVE: return "matrix is not primitive";
        case RP_ERR_SINGULAR: return "matrix is singular";
        case RP_ERR_OVERFLOW: return "arithmetic overflow";
        case RP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* rp_last_error(void) { return t_last_error.c_str(); }

void rp_string_free(char* s) { std::free(s); }

void rp_set_index_budget(uint64_t budget) { relpos::set_index_budget(budget); }

uint64_t rp_index_budget(void) { return relpos::index_budget(); }

rp_status rp_word_create(const char* spec, rp_word** out) {
    if (!spec || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] { *out = new rp_word{relpos::parse_word(spec)}; });
}

void rp_word_destroy(rp_word* w) { delete w; }

rp_status rp_word_letter_at(const rp_word* w, uint64_t index, char* out) {
    if (!w || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] { *out = relpos::to_char(w->stream->letter_at(index)); });
}

rp_status rp_word_prefix(const rp_word* w, uint64_t length, char* buffer) {
    if (!w || !buffer) return RP_ERR_BAD_INPUT;
    return guarded([&] {
        std::string text = w->stream->prefix(length).str();
        std::memcpy(buffer, text.c_str(), text.size() + 1);
    });
}

rp_status rp_word_provenance(const rp_word* w, char** out) {
    if (!w || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] { *out = dup_string(w->stream->provenance()); });
}

rp_status rp_word_position(const rp_word* w, char letter, uint64_t n, int64_t* out) {
    if (!w || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] { *out = relpos::position_of(w->stream, letter_arg(letter), n); });
}

rp_status rp_word_relative(const rp_word* w, uint64_t n, int64_t* out) {
    if (!w || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] { *out = relpos::relative_position(w->stream, n); });
}

rp_status rp_word_count(const rp_word* w, char letter, uint64_t prefix_len, uint64_t* out) {
    if (!w || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] { *out = relpos::counting(w->stream, letter_arg(letter), prefix_len); });
}

rp_status rp_subst_create(const char* spec, rp_subst** out) {
    if (!spec || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] { *out = new rp_subst{relpos::parse_substitution(spec)}; });
}

void rp_subst_destroy(rp_subst* s) { delete s; }

rp_status rp_subst_format(const rp_subst* s, char** out) {
    if (!s || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] { *out = dup_string(s->subst.format()); });
}

rp_status rp_subst_matrix(const rp_subst* s, int64_t out[4]) {
    if (!s || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] {
        relpos::SubstitutionMatrix m = s->subst.matrix();
        out[0] = m.aa;
        out[1] = m.ab;
        out[2] = m.ba;
        out[3] = m.bb;
    });
}

rp_status rp_subst_apply(const rp_subst* s, const char* finite_word, char** out) {
    if (!s || !finite_word || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] {
        *out = dup_string(s->subst.apply(relpos::FiniteWord::parse(finite_word)).str());
    });
}

rp_status rp_subst_fixed_point(const rp_subst* s, char seed, rp_word** out) {
    if (!s || !out) return RP_ERR_BAD_INPUT;
    return guarded([&] { *out = new rp_word{s->subst.fixed_point(letter_arg(seed))}; });
}

rp_status rp_analyze_json(const char* subst_spec, char** out_json) {
    if (!subst_spec || !out_json) return RP_ERR_BAD_INPUT;
    return guarded([&] {
        relpos::BinarySubstitution s = relpos::parse_substitution(subst_spec);
        relpos::SubstitutionMatrix m = s.matrix();
        json doc;
        doc["substitution"] = s.format();
        doc["matrix"] = {{m.aa, m.ab}, {m.ba, m.bb}};
        bool primitive = relpos::is_primitive(m);
        doc["primitive"] = primitive;
        if (primitive) {
            relpos::PFData pf = relpos::pf_data(m);
            relpos::LimitReport limits = relpos::predicted_limits(m);
            doc["lambda_pf"] = quad_json(pf.lambda_pf);
            doc["lambda_conjugate"] = quad_json(pf.lambda_conjugate);
            doc["u"] = quad_json(pf.u);
            doc["freq_a"] = quad_json(limits.freq_a);
            doc["freq_b"] = quad_json(limits.freq_b);
            doc["lim_pa_over_n"] = quad_json(limits.lim_pa_over_n);
            doc["lim_pb_over_n"] = quad_json(limits.lim_pb_over_n);
            doc["lim_r_over_n"] = quad_json(limits.lim_r_over_n);
            auto linear = relpos::classify_linear_limit(m);
            doc["linear_limit_class"] = linear ? json(*linear) : json(nullptr);
        }
        auto golden = relpos::classify_golden(m);
        doc["golden_form"] =
            golden ? json{{"m", golden->first}, {"n", golden->second}} : json(nullptr);
        std::string spec_str(subst_spec);
        if (spec_str.rfind("pisa:", 0) == 0 || spec_str.rfind("noble:", 0) == 0 ||
            spec_str == "fib" || spec_str == "fibonacci" || spec_str == "pd" ||
            spec_str == "period_doubling") {
            // Pisa members expose the affine closed form directly.
            std::int64_t k = 0, l = 0, mm = 0;
            if (spec_str == "fib" || spec_str == "fibonacci") {
                k = 1;
                mm = 1;
            } else if (spec_str == "pd" || spec_str == "period_doubling") {
                k = 1;
                mm = 2;
            } else if (spec_str.rfind("noble:", 0) == 0) {
                k = std::stoll(spec_str.substr(6));
                mm = 1;
            } else {
                auto rest = spec_str.substr(5);
                auto c1 = rest.find(',');
                auto c2 = rest.find(',', c1 + 1);
                k = std::stoll(rest.substr(0, c1));
                l = std::stoll(rest.substr(c1 + 1, c2 - c1 - 1));
                mm = std::stoll(rest.substr(c2 + 1));
            }
            relpos::PisaClosedForm form = relpos::pisa_closed_form(k, l, mm);
            doc["pisa_closed_form"] = {{"p_b", {{"pa_coeff", form.a}, {"n_coeff", form.b},
                                                {"constant", form.c}}},
                                       {"r", {{"pa_coeff", form.r_pa_coeff}, {"n_coeff", form.b},
                                              {"constant", form.c}}}};
            relpos::PisotVerdict pisot = relpos::pisa_is_pisot(k, l, mm);
            doc["pisot"] = {{"pisot", pisot.pisot}, {"boundary", pisot.boundary}};
        }
        *out_json = dup_string(doc.dump(2));
    });
}

rp_status rp_reconstruct_json(const char* r_spec, uint64_t pairs, rp_word** out_word,
                              char** out_json) {
    if (!r_spec || !out_word || !out_json) return RP_ERR_BAD_INPUT;
    return guarded([&] {
        relpos::RSpec spec = relpos::parse_rspec(r_spec);
        relpos::ReconstructionOutcome outcome = relpos::reconstruct(spec, pairs);
        json doc;
        doc["r_spec"] = spec.description;
        doc["pairs"] = pairs;
        if (outcome.success()) {
            doc["success"] = true;
            doc["determined_prefix"] = outcome.determined_prefix;
            doc["word"] = outcome.word->prefix(outcome.determined_prefix).str();
            doc["p_a"] = outcome.pa;
            doc["p_b"] = outcome.pb;
            *out_word = new rp_word{outcome.word};
        } else {
            doc["success"] = false;
            doc["violation"] = {{"condition", relpos::condition_name(outcome.violation->condition)},
                                {"index", outcome.violation->index},
                                {"detail", outcome.violation->detail}};
            *out_word = nullptr;
        }
        *out_json = dup_string(doc.dump(2));
    });
}

rp_status rp_verify_ids(char** out) {
    if (!out) return RP_ERR_BAD_INPUT;
    return guarded([&] {
        std::string joined;
        for (const auto& id : relpos::verify::check_ids()) {
            if (!joined.empty()) joined += "\n";
            joined += id;
        }
        *out = dup_string(joined);
    });
}

rp_status rp_verify(const char* check_id, uint64_t n_scale, uint64_t len_scale, int* out_pass,
                    char** out_json) {
    if (!check_id || !out_pass || !out_json) return RP_ERR_BAD_INPUT;
    return guarded([&] {
        relpos::verify::Certificate cert =
            relpos::verify::run_check(check_id, {n_scale, len_scale});
        json doc{{"id", cert.id}, {"pass", cert.pass}, {"detail", cert.detail}};
        *out_pass = cert.pass ? 1 : 0;
        *out_json = dup_string(doc.dump(2));
    });
}

}  // extern "C"
