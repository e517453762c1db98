#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "f4r/descriptor.hpp"
#include "f4r/verify.hpp"

using namespace f4r;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = std::string(F4R_TMP_DIR) + "/cli_out.txt";
    const std::string cmd = std::string(F4R_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    return {WEXITSTATUS(rc), slurp(out_path)};
}

std::string write_tmp(const std::string& name, const std::string& content) {
    const std::string path = std::string(F4R_TMP_DIR) + "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("descriptor round trip and build") {
    nlohmann::json j = {
        {"kind", "f4_skew"}, {"alpha", 6}, {"f", "w + w^2 X + w^2 X^2 + X^3"},
    };
    const CodeDescriptor d = descriptor_from_json(j);
    const Code c = build_descriptor(d);
    CHECK(c.log2_size() == 6);
    CHECK(c.dim_f4() == size_t{3});

    // artifact round trip preserves the code and its verified flags
    const auto art = artifact_to_json(c);
    const Code c2 = artifact_from_json(art);
    CHECK(c2 == c);
    CHECK(c2.closure_flags() == c.closure_flags());
    CHECK(artifact_to_json(c2) == art);

    CHECK_THROWS_AS((void)descriptor_from_json(nlohmann::json::array()), ParseError);
    CHECK_THROWS_AS((void)descriptor_from_json(nlohmann::json{{"alpha", 2}, {"kind", "bogus"}}), ParseError);
    CHECK_THROWS_AS((void)descriptor_from_json(nlohmann::json{{"beta", 2}}), ParseError);
}

TEST_CASE("descriptor with raw generators and operator override") {
    nlohmann::json j = {
        {"kind", "f4r"},
        {"alpha", 2},
        {"beta", 1},
        {"raw_generators", {Word({F4::one(), F4::zero()}, {R::v()}).to_bits().to_hex()}},
        {"operators", {"f4_scalars"}},
    };
    const Code c = build_descriptor(descriptor_from_json(j));
    CHECK(c.log2_size() == 2);  // F4-span of one word
    CHECK(verify_closed(c, ClosureOp::f4_scalars));
}

TEST_CASE("analyze report") {
    nlohmann::json j = {{"kind", "f4r"}, {"alpha", 0}, {"beta", 4},
                        {"g1", "X^3 + X^2 + X + 1"}, {"g2", "X^3 + X^2 + X + 1"}};
    const Code c = build_descriptor(descriptor_from_json(j));
    const auto rep = analyze_code(c, {});
    CHECK(rep.at("n") == 4);
    CHECK(rep.at("gray_length") == 8);
    CHECK(rep.at("log2_size") == 4);
    CHECK(rep.at("f4_dimension") == 2);
    CHECK(rep.at("closure").at("skew_shift") == true);
    CHECK(rep.at("closure").at("r_scalars") == true);
    CHECK(rep.at("min_distance").at("exact") == true);
    CHECK(rep.at("dual_skew_cyclic") == true);  // beta even
    // deterministic: analyzing twice yields identical JSON
    CHECK(analyze_code(c, {}) == rep);
}

TEST_CASE("cli end to end") {
    const std::string descriptor = write_tmp("t1r1.json", R"({
        "kind": "f4_skew", "alpha": 6, "f": "w + w^2 X + w^2 X^2 + X^3"
    })");
    const std::string artifact = std::string(F4R_TMP_DIR) + "/t1r1_artifact.json";

    CHECK(run_cli("build " + descriptor + " -o " + artifact).exit_code == 0);
    const std::string analyze_json = std::string(F4R_TMP_DIR) + "/t1r1_analyze.json";
    const auto analyze = run_cli("analyze " + artifact + " --json " + analyze_json);
    CHECK(analyze.exit_code == 0);
    CHECK(analyze.out.substr(0, 14) == "[6,3,4] exact\n");  // leading parameter line
    const auto rep = nlohmann::json::parse(slurp(analyze_json));
    CHECK(rep.at("log2_size") == 6);
    CHECK(rep.at("f4_dimension") == 3);
    CHECK(rep.at("min_distance").at("value") == 4);
    CHECK(rep.at("min_distance").at("exact") == true);

    // gray image has length 6 here (beta = 0: phi is the identity)
    const std::string gray_out = std::string(F4R_TMP_DIR) + "/t1r1_gray.json";
    CHECK(run_cli("gray " + artifact + " -o " + gray_out).exit_code == 0);
    CHECK(nlohmann::json::parse(slurp(gray_out)).at("alpha") == 6);

    // dual of the zero code is the full ambient
    const std::string zero_desc = write_tmp("zero.json", R"({
        "kind": "f4r", "alpha": 2, "beta": 1, "f": "0", "g1": "0", "g2": "0"
    })");
    const std::string zero_art = std::string(F4R_TMP_DIR) + "/zero_artifact.json";
    CHECK(run_cli("build " + zero_desc + " -o " + zero_art).exit_code == 0);
    CHECK(nlohmann::json::parse(slurp(zero_art)).at("log2_size") == 0);
    const std::string dual_out = std::string(F4R_TMP_DIR) + "/zero_dual.json";
    CHECK(run_cli("dual " + zero_art + " -o " + dual_out).exit_code == 0);
    CHECK(nlohmann::json::parse(slurp(dual_out)).at("log2_size") == 8);  // 2*2+4*1 bits

    // enumerate prints |C| lines
    const auto en = run_cli("enumerate " + artifact);
    CHECK(en.exit_code == 0);
    CHECK(std::count(en.out.begin(), en.out.end(), '\n') == 64);

    // exit codes: parse failure 2, precondition 3
    const std::string bad_json = write_tmp("bad.json", "{ not json");
    CHECK(run_cli("build " + bad_json).exit_code == 2);
    const std::string bad_div = write_tmp("baddiv.json", R"({
        "kind": "f4r", "alpha": 0, "beta": 3, "g1": "X + w", "g2": "1"
    })");
    CHECK(run_cli("build " + bad_div).exit_code == 3);
    const std::string too_big = write_tmp("toobig.json", R"({
        "kind": "f4r", "alpha": 0, "beta": 14, "g1": "1", "g2": "1"
    })");
    const std::string big_art = std::string(F4R_TMP_DIR) + "/big_artifact.json";
    CHECK(run_cli("build " + too_big + " -o " + big_art).exit_code == 0);
    CHECK(run_cli("enumerate " + big_art).exit_code == 4);  // budget

    // dna subcommand
    const std::string rc_desc = write_tmp("rc.json", R"({
        "kind": "f4r", "alpha": 0, "beta": 4,
        "g1": "X^3 + X^2 + X + 1", "g2": "X^3 + X^2 + X + 1"
    })");
    const std::string rc_art = std::string(F4R_TMP_DIR) + "/rc_artifact.json";
    CHECK(run_cli("build " + rc_desc + " -o " + rc_art).exit_code == 0);
    const auto dna_run = run_cli("dna " + rc_art + " --check-rc");
    CHECK(dna_run.exit_code == 0);
    CHECK(dna_run.out.find("reversible complement: yes") != std::string::npos);
    const auto fasta_run = run_cli("dna " + rc_art + " --fasta");
    CHECK(fasta_run.exit_code == 0);
    CHECK(fasta_run.out.substr(0, 2) == ">0");

    // divisors subcommand
    const auto div_run = run_cli("divisors --n 2 --max-degree 1");
    CHECK(div_run.exit_code == 0);
    CHECK(div_run.out == "1\n1 + X\nw + X\nw^2 + X\n");

    // mixed build whose Gray image is the [16,7,4] product code
    const std::string prod_desc = write_tmp("t3r1.json", R"({
        "kind": "f4r", "alpha": 4, "beta": 6,
        "f": "X^3 + X^2 + X + 1", "ell": "0",
        "g1": "w + w^2 X + w^2 X^2 + X^3", "g2": "w + w^2 X + w^2 X^2 + X^3"
    })");
    const std::string prod_art = std::string(F4R_TMP_DIR) + "/t3r1_artifact.json";
    CHECK(run_cli("build " + prod_desc + " -o " + prod_art).exit_code == 0);
    const std::string prod_gray = std::string(F4R_TMP_DIR) + "/t3r1_gray.json";
    CHECK(run_cli("gray " + prod_art + " -o " + prod_gray).exit_code == 0);
    const auto gray_art = nlohmann::json::parse(slurp(prod_gray));
    CHECK(gray_art.at("alpha") == 16);
    CHECK(gray_art.at("beta") == 0);
    CHECK(gray_art.at("log2_size") == 14);  // [16,7]
    const auto gray_analysis = run_cli("analyze " + prod_gray);
    CHECK(gray_analysis.exit_code == 0);
    CHECK(gray_analysis.out.substr(0, 15) == "[16,7,4] exact\n");
}

TEST_CASE("build, serialize, reload, analyze is deterministic") {
    nlohmann::json j = {{"kind", "f4r"}, {"alpha", 3}, {"beta", 2},
                        {"f", "X + 1"}, {"g1", "X + 1"}, {"g2", "1"}};
    const Code c1 = build_descriptor(descriptor_from_json(j));
    const auto art1 = artifact_to_json(c1);
    const Code c2 = artifact_from_json(art1);
    const auto art2 = artifact_to_json(c2);
    CHECK(art1.dump() == art2.dump());
    CHECK(analyze_code(c1, {}).dump() == analyze_code(c2, {}).dump());
}

TEST_CASE("additive-only codes can be non-free") {
    // closure under the shift alone (no scalars) spans an additive group
    // whose GF(2) rank need not be even
    nlohmann::json j = {
        {"kind", "f4r"},
        {"alpha", 1},
        {"beta", 0},
        {"raw_generators", {Word({F4::one()}, {}).to_bits().to_hex()}},
        {"operators", {"skew_shift"}},
    };
    const Code c = build_descriptor(descriptor_from_json(j));
    CHECK(c.log2_size() == 1);  // {0, 1}: a group but not an F4 space
    CHECK(!c.dim_f4().has_value());
    const auto art = artifact_to_json(c);
    CHECK(art.at("non_free") == true);
    CHECK(art.at("f4_dimension").is_null());
    CHECK(artifact_from_json(art) == c);
}
