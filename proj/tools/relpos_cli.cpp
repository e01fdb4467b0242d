// Command-line front end. Everything goes through the C API in relpos.h;
// this file only parses arguments and formats output.

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relpos.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitBadInput = 4;

int exit_code_for(rp_status status) {
    switch (status) {
        case RP_OK: return kExitOk;
        case RP_ERR_BUDGET_EXCEEDED:
        case RP_ERR_OCCURRENCE_NOT_FOUND: return kExitBudget;
        case RP_ERR_INTERNAL: return 1;
        default: return kExitBadInput;
    }
}

int report_error(rp_status status) {
    std::cerr << "error: " << rp_status_message(status);
    const char* detail = rp_last_error();
    if (detail && *detail) std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    return exit_code_for(status);
}

struct WordHandle {
    rp_word* ptr = nullptr;
    ~WordHandle() { rp_word_destroy(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { rp_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

int cmd_generate(const std::string& spec, std::uint64_t length, const std::string& format) {
    WordHandle word;
    rp_status status = rp_word_create(spec.c_str(), &word.ptr);
    if (status != RP_OK) return report_error(status);
    std::vector<char> buffer(length + 1);
    status = rp_word_prefix(word.ptr, length, buffer.data());
    if (status != RP_OK) return report_error(status);
    if (format == "json") {
        OwnedString provenance;
        rp_word_provenance(word.ptr, &provenance.ptr);
        std::cout << "{\n  \"provenance\": \"" << provenance.str() << "\",\n  \"length\": "
                  << length << ",\n  \"prefix\": \"" << buffer.data() << "\"\n}\n";
    } else {
        std::cout << buffer.data() << "\n";
    }
    return kExitOk;
}

int cmd_positions(const std::string& spec, std::uint64_t n_max) {
    WordHandle word;
    rp_status status = rp_word_create(spec.c_str(), &word.ptr);
    if (status != RP_OK) return report_error(status);
    // One extra term so each row can carry its differences.
    std::vector<std::int64_t> pa(n_max + 1), pb(n_max + 1), r(n_max + 1);
    for (std::uint64_t n = 1; n <= n_max + 1; ++n) {
        status = rp_word_position(word.ptr, 'a', n, &pa[n - 1]);
        if (status == RP_OK) status = rp_word_position(word.ptr, 'b', n, &pb[n - 1]);
        if (status == RP_OK) status = rp_word_relative(word.ptr, n, &r[n - 1]);
        if (status != RP_OK) return report_error(status);
    }
    std::cout << "n,p_a,p_b,r,delta_pa,delta_pb,delta_r\n";
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::cout << n << ',' << pa[n - 1] << ',' << pb[n - 1] << ',' << r[n - 1] << ','
                  << pa[n] - pa[n - 1] << ',' << pb[n] - pb[n - 1] << ',' << r[n] - r[n - 1]
                  << '\n';
    }
    return kExitOk;
}

int cmd_reconstruct(const std::string& spec, std::uint64_t pairs, bool quiet_word) {
    WordHandle word;
    OwnedString json;
    rp_status status = rp_reconstruct_json(spec.c_str(), pairs, &word.ptr, &json.ptr);
    if (status != RP_OK) return report_error(status);
    std::cout << json.str() << "\n";
    (void)quiet_word;
    return word.ptr != nullptr ? kExitOk : kExitViolation;
}

int cmd_analyze(const std::string& spec) {
    OwnedString json;
    rp_status status = rp_analyze_json(spec.c_str(), &json.ptr);
    if (status != RP_OK) return report_error(status);
    std::cout << json.str() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& id, bool all, std::uint64_t n_scale, std::uint64_t len_scale,
               bool json_output) {
    std::vector<std::string> ids;
    if (all) {
        OwnedString listing;
        rp_status status = rp_verify_ids(&listing.ptr);
        if (status != RP_OK) return report_error(status);
        std::istringstream in(listing.str());
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) ids.push_back(line);
    } else {
        ids.push_back(id);
    }
    bool any_fail = false;
    bool first = true;
    if (json_output) std::cout << "[\n";
    for (const std::string& check : ids) {
        int pass = 0;
        OwnedString json;
        rp_status status = rp_verify(check.c_str(), n_scale, len_scale, &pass, &json.ptr);
        if (status != RP_OK) return report_error(status);
        if (json_output) {
            if (!first) std::cout << ",\n";
            std::cout << json.str();
        } else {
            std::cout << (pass ? "PASS " : "FAIL ") << check << "\n";
        }
        first = false;
        if (!pass) any_fail = true;
    }
    if (json_output) std::cout << "\n]\n";
    return any_fail ? kExitViolation : kExitOk;
}

std::string rspec_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(kExitBadInput);
    }
    std::string values;
    std::int64_t v;
    while (in >> v) {
        if (!values.empty()) values += ",";
        values += std::to_string(v);
    }
    return "values:" + values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative position toolkit for binary substitution words"};
    app.require_subcommand(1);

    std::uint64_t max_index = 0;
    unsigned timeout_seconds = 0;
    app.add_option("--max-index", max_index, "index budget for lazy word expansion");
    app.add_option("--timeout", timeout_seconds, "kill the process after this many seconds");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a prefix of a word");
    std::string gen_spec;
    std::uint64_t gen_length = 32;
    std::string gen_format = "text";
    generate->add_option("spec", gen_spec, "word spec, e.g. fib or 'tm | clone:2'")->required();
    generate->add_option("--length", gen_length, "prefix length");
    generate->add_option("--format", gen_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // positions
    auto* positions = app.add_subcommand("positions", "CSV of p_a, p_b, r and their differences");
    std::string pos_spec;
    std::uint64_t pos_n = 20;
    positions->add_option("spec", pos_spec, "word spec")->required();
    positions->add_option("--n", pos_n, "number of rows");

    // reconstruct
    auto* reconstruct = app.add_subcommand("reconstruct", "recover a word from r");
    std::string rec_spec;
    std::string rec_formula;
    std::string rec_file;
    std::uint64_t rec_pairs = 32;
    reconstruct->add_option("spec", rec_spec, "r spec (fib, tm, formula:.., values:..)");
    reconstruct->add_option("--formula", rec_formula, "closed form like n, 2*n-1");
    reconstruct->add_option("--file", rec_file, "file of newline-separated r values");
    reconstruct->add_option("--pairs", rec_pairs, "number of (a, b) pairs to place");

    // apply
    auto* apply = app.add_subcommand("apply", "apply an operator pipeline to a word");
    std::string apply_pipeline;
    std::string apply_to;
    std::uint64_t apply_length = 32;
    apply->add_option("pipeline", apply_pipeline, "stages, e.g. 'delete^2 | reflect'")->required();
    apply->add_option("--to", apply_to, "base word spec")->required();
    apply->add_option("--length", apply_length, "prefix length to emit");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "spectral report for a substitution");
    std::string analyze_spec;
    analyze->add_option("spec", analyze_spec, "substitution spec")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run built-in identity checks");
    std::string verify_id;
    bool verify_all = false;
    std::uint64_t verify_n = 0;
    std::uint64_t verify_len = 0;
    bool verify_json = false;
    verify->add_option("id", verify_id, "check id (see --all for the list)");
    verify->add_flag("--all", verify_all, "run every check");
    verify->add_option("--n", verify_n, "series horizon override");
    verify->add_option("--len", verify_len, "length/count override");
    verify->add_flag("--json", verify_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    if (max_index > 0) rp_set_index_budget(max_index);
    if (timeout_seconds > 0) alarm(timeout_seconds);

    if (generate->parsed()) return cmd_generate(gen_spec, gen_length, gen_format);
    if (positions->parsed()) return cmd_positions(pos_spec, pos_n);
    if (reconstruct->parsed()) {
        std::string spec = rec_spec;
        if (!rec_formula.empty()) spec = "formula:" + rec_formula;
        if (!rec_file.empty()) spec = rspec_from_file(rec_file);
        if (spec.empty()) {
            std::cerr << "error: reconstruct needs a spec, --formula or --file\n";
            return kExitBadInput;
        }
        return cmd_reconstruct(spec, rec_pairs, false);
    }
    if (apply->parsed()) return cmd_generate(apply_to + " | " + apply_pipeline, apply_length, "text");
    if (analyze->parsed()) return cmd_analyze(analyze_spec);
    if (verify->parsed()) {
        if (!verify_all && verify_id.empty()) {
            std::cerr << "error: give a check id or --all\n";
            return kExitBadInput;
        }
        return cmd_verify(verify_id, verify_all, verify_n, verify_len, verify_json);
    }
    return kExitBadInput;
}
