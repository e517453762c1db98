#include "f4r/descriptor.hpp"

#include <fstream>

#include "f4r/errors.hpp"
#include "f4r/text.hpp"

namespace f4r {

CodeDescriptor descriptor_from_json(const nlohmann::json& j) {
    CodeDescriptor d;
    try {
        if (!j.is_object()) throw ParseError("descriptor must be a JSON object");
        d.kind = j.value("kind", std::string("f4r"));
        if (d.kind != "f4r" && d.kind != "f4_cyclic" && d.kind != "f4_skew")
            throw ParseError("descriptor: unknown kind '" + d.kind + "'");
        if (!j.contains("alpha")) throw ParseError("descriptor: missing 'alpha'");
        d.alpha = j.at("alpha").get<size_t>();
        d.beta = j.value("beta", size_t{0});
        d.f = j.value("f", std::string("0"));
        d.ell = j.value("ell", std::string("0"));
        d.g1 = j.value("g1", std::string("0"));
        d.g2 = j.value("g2", std::string("0"));
        if (j.contains("raw_generators")) d.raw_generators = j.at("raw_generators").get<std::vector<std::string>>();
        if (j.contains("operators")) d.operators = j.at("operators").get<std::vector<std::string>>();
        if (j.contains("cap")) d.cap = j.at("cap").get<uint64_t>();
        if (j.contains("seed")) d.seed = j.at("seed").get<uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("descriptor: ") + e.what());
    }
    if (d.alpha + d.beta < 1) throw ParseError("descriptor: alpha + beta must be at least 1");
    if (d.cap && *d.cap == 0) throw ParseError("descriptor: cap must be positive");
    return d;
}

nlohmann::ordered_json descriptor_to_json(const CodeDescriptor& d) {
    nlohmann::ordered_json j;
    j["kind"] = d.kind;
    j["alpha"] = d.alpha;
    j["beta"] = d.beta;
    j["f"] = d.f;
    j["ell"] = d.ell;
    j["g1"] = d.g1;
    j["g2"] = d.g2;
    if (!d.raw_generators.empty()) j["raw_generators"] = d.raw_generators;
    if (d.operators) j["operators"] = *d.operators;
    if (d.cap) j["cap"] = *d.cap;
    if (d.seed) j["seed"] = *d.seed;
    return j;
}

Code build_descriptor(const CodeDescriptor& d) {
    const Ambient amb{d.alpha, d.beta};
    if (!amb.valid()) throw PreconditionError("descriptor: empty ambient");

    OpSet ops = 0;
    std::vector<Word> gens;

    if (d.kind == "f4_cyclic" || d.kind == "f4_skew") {
        if (d.beta != 0) throw PreconditionError("descriptor: pure F4 kinds require beta = 0");
        const bool skew = d.kind == "f4_skew";
        const Poly<F4> gen = parse_poly<F4>(d.f);
        if (!gen.is_zero()) {
            const auto dr = right_divide(Poly<F4>::xn_minus_one(amb.alpha), gen, skew ? Twist::theta : Twist::none);
            if (!dr.remainder.is_zero())
                throw PreconditionError("generator does not divide X^n-1, remainder " + to_string(dr.remainder));
            const Poly<F4> gr = mul_mod_xn(gen, Poly<F4>::one(), amb.alpha, Twist::none);
            Word w(amb);
            for (size_t i = 0; i < amb.alpha; ++i) w.set_f4(i, gr.coeff(i));
            if (!w.is_zero()) gens.push_back(std::move(w));
        }
        ops = ClosureOp::f4_scalars | (skew ? ClosureOp::frob_shift : ClosureOp::plain_shift);
    } else {
        GeneratorSpec spec;
        spec.f = parse_poly<F4>(d.f);
        spec.ell = parse_poly<F4>(d.ell);
        spec.g1 = parse_poly<F4>(d.g1);
        spec.g2 = parse_poly<F4>(d.g2);
        if (d.raw_generators.empty() && !d.operators) return build_from_spec(spec, amb);
        // raw build: start from the spec's generator words plus raw words
        const Code base = build_from_spec(spec, amb);
        for (const Word& w : base.basis_words()) gens.push_back(w);
        ops = ClosureOp::r_scalars | ClosureOp::skew_shift;
    }

    for (const std::string& hex : d.raw_generators)
        gens.push_back(Word::from_bits(amb, BitVec::from_hex(hex, amb.nbits())));
    if (d.operators) ops = op_set_from_names(*d.operators);
    return closure(amb, gens, ops);
}

nlohmann::ordered_json artifact_to_json(const Code& c) {
    nlohmann::ordered_json j;
    j["format"] = "f4r-artifact-v1";
    j["alpha"] = c.ambient().alpha;
    j["beta"] = c.ambient().beta;
    j["log2_size"] = c.log2_size();
    const auto k = c.dim_f4();
    if (k)
        j["f4_dimension"] = *k;
    else
        j["f4_dimension"] = nullptr;
    j["non_free"] = !k.has_value();
    j["closure_flags"] = op_set_names(c.closure_flags());
    std::vector<std::string> rows;
    rows.reserve(c.log2_size());
    for (const BitVec& r : c.basis().rows()) rows.push_back(r.to_hex());
    j["basis"] = rows;
    return j;
}

Code artifact_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || j.value("format", std::string()) != "f4r-artifact-v1")
            throw ParseError("not an f4r artifact");
        const Ambient amb{j.at("alpha").get<size_t>(), j.at("beta").get<size_t>()};
        std::vector<BitVec> rows;
        for (const auto& h : j.at("basis")) rows.push_back(BitVec::from_hex(h.get<std::string>(), amb.nbits()));
        Code c = Code::from_rows(amb, rows);
        if (j.contains("closure_flags")) {
            // re-verify the recorded flags instead of trusting them
            const OpSet claimed = op_set_from_names(j.at("closure_flags").get<std::vector<std::string>>());
            OpSet verified = 0;
            for (ClosureOp op : {ClosureOp::f4_scalars, ClosureOp::r_scalars, ClosureOp::skew_shift,
                                 ClosureOp::plain_shift, ClosureOp::frob_shift})
                if (has_op(claimed, op) && verify_closed(c, op)) verified |= static_cast<OpSet>(op);
            c.set_closure_flags(verified);
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("artifact: ") + e.what());
    }
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace f4r
