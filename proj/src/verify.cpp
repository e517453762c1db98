#include "f4r/verify.hpp"

#include <map>

#include "f4r/catalog.hpp"
#include "f4r/wsearch.hpp"

namespace f4r {

namespace {

using nlohmann::ordered_json;

struct DistanceCheck {
    unsigned claimed = 0;
    bool has_value = false;
    unsigned value = 0;
    bool exact = false;
    std::string method = "none";
    bool ok = false;

    ordered_json to_json() const {
        ordered_json j;
        j["claimed"] = claimed;
        if (has_value)
            j["value"] = value;
        else
            j["value"] = nullptr;
        j["exact"] = exact;
        j["method"] = method;
        j["ok"] = ok;
        return j;
    }
};

// Exact enumeration in full mode when |C| is under the cap; otherwise the
// witness pipeline (which still proves exactness for small codes and small
// claimed distances). A found weight differing from the claimed distance
// fails the check either way: above means no witness, below refutes the
// published parameters.
DistanceCheck check_distance(const Code& code, unsigned claimed, const VerifyOptions& opts) {
    DistanceCheck dc;
    dc.claimed = claimed;
    if (code.log2_size() == 0) return dc;

    if (opts.full && code.log2_size() < 63 && (uint64_t(1) << code.log2_size()) <= opts.cap) {
        DistanceOptions dopts;
        dopts.enumeration_cap = opts.cap;
        dopts.seed = opts.seed;
        const DistanceResult dr = min_distance(code, Metric::mixed, dopts);
        dc.has_value = true;
        dc.value = dr.value;
        dc.exact = true;
        dc.method = "enumeration";
        dc.ok = dr.value == claimed;
        return dc;
    }

    WitnessOptions wopts;
    wopts.seed = opts.seed;
    const WitnessResult wr = find_low_weight_codeword(code, claimed, wopts);
    dc.method = wr.method;
    dc.exact = wr.proven;
    if (wr.weight != ~0u) {
        dc.has_value = true;
        dc.value = wr.weight;
        dc.ok = wr.weight == claimed;
    }
    return dc;
}

struct GenResult {
    bool divides = false;
    bool dim_ok = false;
    size_t log2_size = 0;
    DistanceCheck dist;
    Code code{Ambient{}};
    bool pass = false;

    // verification level achieved: exact | bound | structural | fail
    const char* level() const {
        if (!divides || !dim_ok) return "fail";
        if (!dist.ok) return "structural";
        return dist.exact ? "exact" : "bound";
    }
};

GenResult verify_generator(const std::string& text, size_t n, int k, int d, Twist tw, ClosureOp shift,
                           const VerifyOptions& opts) {
    GenResult res;
    res.dist.claimed = static_cast<unsigned>(d);
    const Poly<F4> gen = parse_poly<F4>(text);
    res.divides = is_right_divisor_of_xn_minus_1(gen, n, tw);

    // build by raw closure so the observed size is reported even when the
    // divisibility check fails
    const Ambient amb{n, 0};
    const Poly<F4> gr = mul_mod_xn(gen, Poly<F4>::one(), n, Twist::none);
    Word w(amb);
    for (size_t i = 0; i < n; ++i) w.set_f4(i, gr.coeff(i));
    std::vector<Word> gens;
    if (!w.is_zero()) gens.push_back(std::move(w));
    res.code = closure(amb, gens, ClosureOp::f4_scalars | shift);

    res.log2_size = res.code.log2_size();
    res.dim_ok = res.log2_size == 2 * static_cast<size_t>(k);
    if (res.divides && res.dim_ok) res.dist = check_distance(res.code, static_cast<unsigned>(d), opts);
    res.pass = res.divides && res.dim_ok && res.dist.ok;
    return res;
}

ordered_json gen_result_json(const std::string& text, const GenResult& r) {
    ordered_json j;
    j["generator"] = text;
    j["right_divides"] = r.divides;
    j["log2_size"] = r.log2_size;
    j["dimension_ok"] = r.dim_ok;
    j["distance"] = r.dist.to_json();
    j["level"] = r.level();
    j["pass"] = r.pass;
    return j;
}

}  // namespace

VerifyOutcome verify_tables(const VerifyOptions& opts) {
    ordered_json report;
    report["format"] = "f4r-verify-v1";
    report["effort"] = opts.full ? "full" : "quick";
    report["seed"] = opts.seed;
    report["cap"] = opts.cap;

    bool all_pass = true;

    // Table 1: skew cyclic ingredients
    std::map<int, std::vector<GenResult>> skew_results;
    ordered_json t1 = ordered_json::array();
    for (const auto& row : catalog::skew_ingredients()) {
        ordered_json jrow;
        jrow["no"] = row.no;
        jrow["params"] = {row.n, row.k, row.d};
        ordered_json jgens = ordered_json::array();
        std::vector<int> matching;
        auto& results = skew_results[row.no];
        for (size_t gi = 0; gi < row.generators.size(); ++gi) {
            GenResult r = verify_generator(row.generators[gi], static_cast<size_t>(row.n), row.k, row.d, Twist::theta,
                                           ClosureOp::frob_shift, opts);
            jgens.push_back(gen_result_json(row.generators[gi], r));
            if (r.pass) matching.push_back(static_cast<int>(gi) + 1);
            results.push_back(std::move(r));
        }
        jrow["generators"] = jgens;
        jrow["matching_generators"] = matching;
        std::string level = "fail";
        for (const auto& r : results) {
            const std::string l = r.level();
            if (l == "exact" || (l == "bound" && level != "exact") ||
                (l == "structural" && level == "fail"))
                level = l;
        }
        jrow["level"] = level;
        const bool pass = !matching.empty();
        jrow["pass"] = pass;
        all_pass = all_pass && pass;
        t1.push_back(jrow);
    }
    report["table1"] = t1;

    // Table 2: cyclic ingredients
    std::map<int, GenResult> cyclic_results;
    ordered_json t2 = ordered_json::array();
    for (const auto& row : catalog::cyclic_ingredients()) {
        GenResult r = verify_generator(row.generator, static_cast<size_t>(row.n), row.k, row.d, Twist::none,
                                       ClosureOp::plain_shift, opts);
        ordered_json jrow;
        jrow["no"] = row.no;
        jrow["params"] = {row.n, row.k, row.d};
        ordered_json jg = gen_result_json(row.generator, r);
        for (auto& [key, value] : jg.items()) jrow[key] = value;
        all_pass = all_pass && r.pass;
        t2.push_back(jrow);
        cyclic_results.emplace(row.no, std::move(r));
    }
    report["table2"] = t2;

    // Table 3: Gray-image products
    ordered_json t3 = ordered_json::array();
    for (const auto& entry : catalog::product_entries()) {
        ordered_json jrow;
        jrow["no"] = entry.no;
        jrow["params"] = {entry.n, entry.k, entry.d};
        const auto res = catalog::resolve_product(entry);
        jrow["resolved"] = res.has_value();
        bool pass = res.has_value();
        if (res) {
            jrow["table2_row"] = res->cyclic_no;
            jrow["table1_row"] = res->skew_no;
            const auto& c0r = cyclic_results.at(res->cyclic_no);
            const auto& srs = skew_results.at(res->skew_no);
            // use passing ingredient generators; a two-generator row
            // supplies the two skew positions, a one-generator row is used
            // twice
            std::vector<const GenResult*> comps;
            for (const auto& r : srs)
                if (r.pass) comps.push_back(&r);
            const bool components_pass = c0r.pass && !comps.empty();
            jrow["components_pass"] = components_pass;
            const GenResult* c1r = comps.empty() ? nullptr : comps.front();
            const GenResult* c2r = comps.empty() ? nullptr : comps.back();

            const auto& skew_row = catalog::skew_ingredients()[static_cast<size_t>(res->skew_no) - 1];
            const auto& cyc_row = catalog::cyclic_ingredients()[static_cast<size_t>(res->cyclic_no) - 1];
            jrow["length_identity"] = cyc_row.n + 2 * skew_row.n == entry.n;
            jrow["dimension_identity"] = cyc_row.k + 2 * skew_row.k == entry.k;
            pass = pass && jrow["length_identity"].get<bool>() && jrow["dimension_identity"].get<bool>() &&
                   components_pass;

            if (components_pass) {
                const Code product = direct_product(c0r.code, c1r->code, c2r->code);
                const bool size_multiplies =
                    product.log2_size() == c0r.code.log2_size() + c1r->code.log2_size() + c2r->code.log2_size();
                const bool size_matches = product.log2_size() == 2 * static_cast<size_t>(entry.k);
                jrow["size_multiplies"] = size_multiplies;
                jrow["product_log2_size"] = product.log2_size();
                jrow["size_matches_dimension"] = size_matches;
                pass = pass && size_multiplies && size_matches;

                DistanceCheck dc;
                dc.claimed = static_cast<unsigned>(entry.d);
                const bool comps_exact = c0r.dist.exact && c1r->dist.exact && c2r->dist.exact;
                if (opts.full && product.log2_size() < 63 && (uint64_t(1) << product.log2_size()) <= opts.cap) {
                    DistanceOptions dopts;
                    dopts.enumeration_cap = opts.cap;
                    dopts.seed = opts.seed;
                    const DistanceResult dr = min_distance(product, Metric::mixed, dopts);
                    dc.has_value = true;
                    dc.value = dr.value;
                    dc.exact = true;
                    dc.method = "enumeration";
                    dc.ok = dr.value == dc.claimed;
                } else {
                    // the product's minimum distance is the minimum over the
                    // component codes; padded component witnesses are
                    // product codewords
                    dc.has_value = c0r.dist.has_value && c1r->dist.has_value && c2r->dist.has_value;
                    if (dc.has_value) {
                        dc.value = std::min({c0r.dist.value, c1r->dist.value, c2r->dist.value});
                        dc.exact = comps_exact;
                        dc.method = comps_exact ? "component_exact" : "component_witness";
                        dc.ok = dc.value == dc.claimed;
                    }
                }
                jrow["distance"] = dc.to_json();
                jrow["level"] = !dc.ok ? "structural" : (dc.exact ? "exact" : "bound");
                pass = pass && dc.ok;
            }
        }
        jrow["pass"] = pass;
        all_pass = all_pass && pass;
        t3.push_back(jrow);
    }
    report["table3"] = t3;

    report["notes"] = catalog::catalog_notes();
    report["pass"] = all_pass;
    return {all_pass, report};
}

nlohmann::ordered_json analyze_code(const Code& c, const AnalyzeOptions& opts) {
    ordered_json j;
    const Ambient amb = c.ambient();
    j["alpha"] = amb.alpha;
    j["beta"] = amb.beta;
    j["n"] = amb.length();
    j["gray_length"] = amb.gray_length();
    j["log2_size"] = c.log2_size();
    const auto k = c.dim_f4();
    if (k)
        j["f4_dimension"] = *k;
    else
        j["f4_dimension"] = nullptr;
    j["non_free"] = !k.has_value();

    ordered_json closure_checks;
    closure_checks["f4_scalars"] = verify_closed(c, ClosureOp::f4_scalars);
    closure_checks["r_scalars"] = verify_closed(c, ClosureOp::r_scalars);
    closure_checks["skew_shift"] = verify_closed(c, ClosureOp::skew_shift);
    closure_checks["plain_shift"] = verify_closed(c, ClosureOp::plain_shift);
    closure_checks["frob_shift"] = verify_closed(c, ClosureOp::frob_shift);
    j["closure"] = closure_checks;

    j["self_orthogonal"] = is_self_orthogonal(c);

    if (c.log2_size() == 0) {
        j["min_distance"] = nullptr;
    } else {
        DistanceOptions dopts;
        dopts.enumeration_cap = opts.cap;
        dopts.sample_budget = opts.sample_budget;
        dopts.seed = opts.seed;
        const DistanceResult dr = min_distance(c, Metric::mixed, dopts);
        ordered_json jd;
        jd["value"] = dr.value;
        jd["exact"] = dr.exact;
        jd["metric"] = "mixed";
        j["min_distance"] = jd;
    }

    if (amb.beta > 0 && amb.nbits() <= 512) {
        const bool dsc = is_dual_skew_cyclic(c);
        if (amb.beta % 2 == 0)
            j["dual_skew_cyclic"] = dsc;
        else
            j["dual_skew_cyclic_observed"] = dsc;  // theorem hypothesis not met, recorded only
    }

    const EquivalenceReport eq = check_equivalence_theorems(c);
    ordered_json je;
    je["skew_closed"] = eq.skew_closed;
    if (eq.plain_shift_closed)
        je["plain_shift_closed"] = *eq.plain_shift_closed;
    else
        je["plain_shift_closed"] = nullptr;
    if (eq.double_shift_closed)
        je["double_shift_closed"] = *eq.double_shift_closed;
    else
        je["double_shift_closed"] = nullptr;
    j["equivalence"] = je;

    return j;
}

std::string analyze_text(const nlohmann::ordered_json& report) {
    std::string out;
    const auto n = report.at("n").get<size_t>();
    std::string kpart;
    if (!report.at("f4_dimension").is_null())
        kpart = std::to_string(report.at("f4_dimension").get<size_t>());
    else
        kpart = "2^" + std::to_string(report.at("log2_size").get<size_t>()) + " words";
    if (report.at("min_distance").is_null()) {
        out += "[" + std::to_string(n) + "," + kpart + ",-] trivial\n";
    } else {
        const auto& d = report.at("min_distance");
        out += "[" + std::to_string(n) + "," + kpart + "," + std::to_string(d.at("value").get<unsigned>()) + "] " +
               (d.at("exact").get<bool>() ? "exact" : "bound") + "\n";
    }
    out += "alpha=" + std::to_string(report.at("alpha").get<size_t>()) +
           " beta=" + std::to_string(report.at("beta").get<size_t>()) +
           " gray_length=" + std::to_string(report.at("gray_length").get<size_t>()) +
           " log2|C|=" + std::to_string(report.at("log2_size").get<size_t>()) + "\n";
    const auto& cl = report.at("closure");
    out += "closure:";
    for (const auto& [key, value] : cl.items()) out += " " + key + "=" + (value.get<bool>() ? "yes" : "no");
    out += "\n";
    out += std::string("self-orthogonal: ") + (report.at("self_orthogonal").get<bool>() ? "yes" : "no") + "\n";
    if (report.contains("dual_skew_cyclic"))
        out += std::string("dual skew cyclic: ") + (report.at("dual_skew_cyclic").get<bool>() ? "yes" : "no") + "\n";
    if (report.contains("dual_skew_cyclic_observed"))
        out += std::string("dual skew cyclic (observed, odd beta): ") +
               (report.at("dual_skew_cyclic_observed").get<bool>() ? "yes" : "no") + "\n";
    const auto& eq = report.at("equivalence");
    if (!eq.at("plain_shift_closed").is_null())
        out += std::string("plain-shift closure (odd alpha, odd beta): ") +
               (eq.at("plain_shift_closed").get<bool>() ? "yes" : "no") + "\n";
    if (!eq.at("double_shift_closed").is_null())
        out += std::string("double-shift closure (even alpha, even beta): ") +
               (eq.at("double_shift_closed").get<bool>() ? "yes" : "no") + "\n";
    return out;
}

}  // namespace f4r
