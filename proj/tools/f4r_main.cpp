#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "f4r/catalog.hpp"
#include "f4r/code.hpp"
#include "f4r/descriptor.hpp"
#include "f4r/dna.hpp"
#include "f4r/errors.hpp"
#include "f4r/text.hpp"
#include "f4r/verify.hpp"

using namespace f4r;

namespace {

// exit codes: 0 ok, 2 parse, 3 precondition, 4 budget, 5 verification failure
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;
constexpr int kExitVerification = 5;

uint64_t default_cap() {
    if (const char* env = std::getenv("F4R_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw ParseError("F4R_BUDGET must be an integer");
        }
    }
    return uint64_t(1) << 24;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& path, const nlohmann::ordered_json& j) {
    if (path.empty() || path == "-")
        std::cout << dump(j);
    else
        write_text_file(path, dump(j));
}

struct CommonOpts {
    uint64_t seed = 1;
    uint64_t cap = 0;  // resolved after parse so the env var is honored
};

int run(int argc, char** argv) {
    CLI::App app{"linear, cyclic and skew cyclic codes over F4, F4+vF4, and the mixed alphabet"};
    app.require_subcommand(1);
    CommonOpts common;
    app.add_option("--seed", common.seed, "seed for randomized searches and sampling");
    app.add_option("--cap", common.cap, "codeword enumeration cap (default 2^24, env F4R_BUDGET)");

    // build
    auto* cmd_build = app.add_subcommand("build", "build a code from a JSON descriptor");
    std::string build_in, build_out;
    cmd_build->add_option("descriptor", build_in, "descriptor JSON file")->required();
    cmd_build->add_option("-o,--output", build_out, "artifact output path (default stdout)");

    // analyze
    auto* cmd_analyze = app.add_subcommand("analyze", "report structure and distance of an artifact");
    std::string analyze_in, analyze_json;
    cmd_analyze->add_option("artifact", analyze_in, "artifact JSON file")->required();
    cmd_analyze->add_option("--json", analyze_json, "also write the JSON report to this path");

    // dual
    auto* cmd_dual = app.add_subcommand("dual", "compute the dual code of an artifact");
    std::string dual_in, dual_out;
    cmd_dual->add_option("artifact", dual_in)->required();
    cmd_dual->add_option("-o,--output", dual_out, "artifact output path (default stdout)");

    // gray
    auto* cmd_gray = app.add_subcommand("gray", "compute the Gray image of an artifact");
    std::string gray_in, gray_out;
    cmd_gray->add_option("artifact", gray_in)->required();
    cmd_gray->add_option("-o,--output", gray_out, "artifact output path (default stdout)");

    // dna
    auto* cmd_dna = app.add_subcommand("dna", "emit DNA strands and check DNA constraints");
    std::string dna_in, dna_out;
    bool dna_fasta = false, dna_check_rc = false;
    unsigned dna_min_distance = 0;
    cmd_dna->add_option("artifact", dna_in)->required();
    cmd_dna->add_option("-o,--output", dna_out, "output path (default stdout)");
    cmd_dna->add_flag("--fasta", dna_fasta, "FASTA output with codeword indices");
    cmd_dna->add_flag("--check-rc", dna_check_rc, "check the reversible-complement property");
    cmd_dna->add_option("--min-distance", dna_min_distance, "check pairwise DNA Hamming constraints at distance d");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list all codewords of an artifact");
    std::string enum_in;
    cmd_enum->add_option("artifact", enum_in)->required();

    // divisors
    auto* cmd_div = app.add_subcommand("divisors", "list monic right divisors of X^n - 1");
    size_t div_n = 0, div_maxdeg = 12;
    std::string div_base = "f4";
    bool div_plain = false;
    uint64_t div_budget = uint64_t(1) << 25;
    cmd_div->add_option("--n", div_n, "modulus length n")->required();
    cmd_div->add_option("--max-degree", div_maxdeg, "maximum divisor degree (default 12)");
    cmd_div->add_option("--base", div_base, "coefficient ring: f4 or r")->check(CLI::IsMember({"f4", "r"}));
    cmd_div->add_flag("--plain", div_plain, "use the commutative product instead of the twisted one");
    cmd_div->add_option("--budget", div_budget, "candidate-count budget");

    // verify-tables
    auto* cmd_verify = app.add_subcommand("verify-tables", "re-verify the built-in catalog");
    std::string verify_effort = "quick", verify_json;
    cmd_verify->add_option("--effort", verify_effort, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    cmd_verify->add_option("--json", verify_json, "write the machine-readable report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    if (common.cap == 0) common.cap = default_cap();

    if (*cmd_build) {
        const Code c = build_descriptor(descriptor_from_json(load_json_file(build_in)));
        emit(build_out, artifact_to_json(c));
        return 0;
    }

    if (*cmd_analyze) {
        const Code c = artifact_from_json(load_json_file(analyze_in));
        AnalyzeOptions opts;
        opts.cap = common.cap;
        opts.seed = common.seed;
        const auto report = analyze_code(c, opts);
        if (!analyze_json.empty()) write_text_file(analyze_json, dump(report));
        std::cout << analyze_text(report);
        return 0;
    }

    if (*cmd_dual) {
        const Code c = artifact_from_json(load_json_file(dual_in));
        emit(dual_out, artifact_to_json(dual(c)));
        return 0;
    }

    if (*cmd_gray) {
        const Code c = artifact_from_json(load_json_file(gray_in));
        emit(gray_out, artifact_to_json(gray_image(c)));
        return 0;
    }

    if (*cmd_dna) {
        const Code c = artifact_from_json(load_json_file(dna_in));
        const auto strands = dna::emit_strands(c, common.cap);
        std::string out;
        bool ok = true;
        if (dna_check_rc) {
            const bool rc = dna::is_reversible_complement(c, common.cap);
            out += std::string("reversible complement: ") + (rc ? "yes" : "no") + "\n";
            ok = ok && rc;
        }
        if (dna_min_distance > 0) {
            const auto rep = dna::check_hamming_constraints(strands, dna_min_distance);
            out += "pair distance >= " + std::to_string(dna_min_distance) + ": " +
                   (rep.pair_violations.empty() ? "yes" : "no") + "\n";
            out += "reverse-complement distance >= " + std::to_string(dna_min_distance) + ": " +
                   (rep.revcomp_violations.empty() ? "yes" : "no") + "\n";
            if (!rep.fixed_points.empty()) {
                out += "self-reverse-complement fixed points:";
                for (size_t i : rep.fixed_points) out += " " + std::to_string(i);
                out += "\n";
            }
            ok = ok && rep.pass;
        }
        if (dna_fasta)
            out += dna::to_fasta(strands);
        else if (!dna_check_rc && dna_min_distance == 0)
            for (const auto& s : strands) out += s + "\n";
        if (dna_out.empty() || dna_out == "-")
            std::cout << out;
        else
            write_text_file(dna_out, out);
        return ok ? 0 : kExitVerification;
    }

    if (*cmd_enum) {
        const Code c = artifact_from_json(load_json_file(enum_in));
        for_each_codeword(c, common.cap, [](const Word& w) { std::cout << to_string(w) << "\n"; });
        return 0;
    }

    if (*cmd_div) {
        const Twist tw = div_plain ? Twist::none : Twist::theta;
        if (div_base == "f4")
            for (const auto& d : all_monic_right_divisors<F4>(div_n, div_maxdeg, tw, div_budget))
                std::cout << to_string(d) << "\n";
        else
            for (const auto& d : all_monic_right_divisors<R>(div_n, div_maxdeg, tw, div_budget))
                std::cout << to_string(d) << "\n";
        return 0;
    }

    if (*cmd_verify) {
        VerifyOptions opts;
        opts.full = verify_effort == "full";
        opts.seed = common.seed;
        opts.cap = common.cap;
        const VerifyOutcome outcome = verify_tables(opts);
        if (!verify_json.empty()) write_text_file(verify_json, dump(outcome.report));
        for (const char* table : {"table1", "table2", "table3"})
            for (const auto& row : outcome.report.at(table))
                std::cout << table << " row " << row.at("no").get<int>() << " ["
                          << row.at("params")[0].get<int>() << "," << row.at("params")[1].get<int>() << ","
                          << row.at("params")[2].get<int>() << "]: "
                          << (row.at("pass").get<bool>() ? "pass" : "FAIL") << "\n";
        for (const auto& note : outcome.report.at("notes")) std::cout << "note: " << note.get<std::string>() << "\n";
        std::cout << (outcome.pass ? "all checks passed" : "verification FAILED") << "\n";
        return outcome.pass ? 0 : kExitVerification;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
