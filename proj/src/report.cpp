#include "slce/report.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

#include "slce/errors.hpp"

namespace slce {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json tri_to_json(TriState t) { return std::string(to_string(t)); }

TriState tri_from_json(const ordered_json& j) {
    const std::string s = j.get<std::string>();
    if (s == "pass") return TriState::Pass;
    if (s == "fail") return TriState::Fail;
    if (s == "not_applicable") return TriState::NotApplicable;
    throw InvalidArgs("bad tri-state value: " + s);
}

template <typename T>
ordered_json opt_to_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep) {
    ordered_json j;
    j["q"] = rep.q;
    j["p"] = rep.p;
    j["m"] = rep.m;
    j["k"] = rep.k;
    j["r"] = rep.r;
    j["d"] = rep.d;
    j["f"] = rep.f;
    j["primitive_element"] = rep.primitive_element;
    j["modulus"] = opt_to_json(rep.modulus);
    ordered_json factors = ordered_json::array();
    for (const auto& [hex, mult] : rep.gcd_factors_hex)
        factors.push_back(ordered_json{{"hex", hex}, {"multiplicity", mult}});
    j["gcd_factors"] = ordered_json{{"rendered", rep.gcd_rendered}, {"factors", factors}};
    j["L"] = rep.L;
    j["lemma5_holds"] = opt_to_json(rep.lemma5_holds);
    j["eq6_holds"] = opt_to_json(rep.eq6_holds);
    j["cor4_original_holds"] = opt_to_json(rep.cor4_original_holds);
    j["s2_is_zero"] = rep.s2_is_zero;
    j["divergence"] = rep.divergence;
    j["lemma4a"] = tri_to_json(rep.lemma4a);
    j["lemma4b"] = tri_to_json(rep.lemma4b);
    if (rep.proper_rep)
        j["proper_representation"] = ordered_json{{"x", rep.proper_rep->x}, {"y", rep.proper_rep->y}};
    else
        j["proper_representation"] = nullptr;
    j["bm_L"] = rep.bm_L;
    if (rep.timings)
        j["timings"] = ordered_json{{"total_ms", rep.timings->total_ms},
                                    {"field_ms", rep.timings->field_ms},
                                    {"lc_ms", rep.timings->lc_ms},
                                    {"charsum_ms", rep.timings->charsum_ms}};
    else
        j["timings"] = nullptr;
    return j.dump();
}

AnalysisReport report_from_json(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgs(std::string("bad report JSON: ") + e.what());
    }
    AnalysisReport rep;
    rep.q = j.at("q").get<int64_t>();
    rep.p = j.at("p").get<int64_t>();
    rep.m = j.at("m").get<int64_t>();
    rep.k = j.at("k").get<int64_t>();
    rep.r = j.at("r").get<int64_t>();
    rep.d = j.at("d").get<int64_t>();
    rep.f = j.at("f").get<int64_t>();
    rep.primitive_element = j.at("primitive_element").get<int64_t>();
    if (!j.at("modulus").is_null()) rep.modulus = j.at("modulus").get<int64_t>();
    const auto& gf = j.at("gcd_factors");
    rep.gcd_rendered = gf.at("rendered").get<std::string>();
    for (const auto& item : gf.at("factors"))
        rep.gcd_factors_hex.emplace_back(item.at("hex").get<std::string>(),
                                         item.at("multiplicity").get<int64_t>());
    rep.L = j.at("L").get<int64_t>();
    if (!j.at("lemma5_holds").is_null()) rep.lemma5_holds = j.at("lemma5_holds").get<bool>();
    if (!j.at("eq6_holds").is_null()) rep.eq6_holds = j.at("eq6_holds").get<bool>();
    if (!j.at("cor4_original_holds").is_null())
        rep.cor4_original_holds = j.at("cor4_original_holds").get<bool>();
    rep.s2_is_zero = j.at("s2_is_zero").get<bool>();
    rep.divergence = j.at("divergence").get<bool>();
    rep.lemma4a = tri_from_json(j.at("lemma4a"));
    rep.lemma4b = tri_from_json(j.at("lemma4b"));
    if (!j.at("proper_representation").is_null())
        rep.proper_rep = ProperRepresentation{j.at("proper_representation").at("x").get<int64_t>(),
                                              j.at("proper_representation").at("y").get<int64_t>()};
    rep.bm_L = j.at("bm_L").get<int64_t>();
    if (!j.at("timings").is_null()) {
        const auto& t = j.at("timings");
        rep.timings = ReportTimings{t.at("total_ms").get<double>(), t.at("field_ms").get<double>(),
                                    t.at("lc_ms").get<double>(), t.at("charsum_ms").get<double>()};
    }
    return rep;
}

namespace {

std::string opt_bool_text(const std::optional<bool>& v) {
    if (!v) return "n/a";
    return *v ? "true" : "false";
}

}  // namespace

std::string report_to_text(const AnalysisReport& rep) {
    std::ostringstream os;
    os << "q                  : " << rep.q << " = " << rep.p << "^" << rep.m << "\n"
       << "q-1                : 2^" << rep.k << " * " << rep.r << "  (d=" << rep.d
       << ", f=" << rep.f << ")\n"
       << "primitive element  : " << rep.primitive_element << "\n"
       << "modulus            : "
       << (rep.modulus ? std::to_string(*rep.modulus) : std::string("(prime field)")) << "\n"
       << "gcd factorization  : " << rep.gcd_rendered << "\n"
       << "linear complexity  : " << rep.L << "  (oracle " << rep.bm_L << ")\n"
       << "lemma5 condition   : " << opt_bool_text(rep.lemma5_holds) << "\n"
       << "eq6 condition      : " << opt_bool_text(rep.eq6_holds) << "\n"
       << "eq7 condition      : " << opt_bool_text(rep.cor4_original_holds) << "\n"
       << "s2 is zero         : " << (rep.s2_is_zero ? "true" : "false") << "\n"
       << "divergence         : " << (rep.divergence ? "true" : "false") << "\n"
       << "lemma4 (a)/(b)     : " << to_string(rep.lemma4a) << " / " << to_string(rep.lemma4b)
       << "\n"
       << "proper represent.  : "
       << (rep.proper_rep ? "x=" + std::to_string(rep.proper_rep->x) +
                                ", y=" + std::to_string(rep.proper_rep->y)
                          : std::string("n/a"))
       << "\n";
    if (rep.timings) os << "total time         : " << rep.timings->total_ms << " ms\n";
    return os.str();
}

void write_jacobsthal_csv(std::ostream& out, const PrimePowerField& field,
                          const JacobsthalTable& table, bool mod4_only) {
    if (mod4_only)
        out << "a,I_d_mod4,in_subgroup\n";
    else
        out << "a,I_d,I_d_mod4,in_subgroup\n";
    for (int64_t enc = 1; enc < field.q(); ++enc) {
        const int64_t v = table.unit_sum(uint32_t(enc));
        const int mod4 = int(((v % 4) + 4) % 4);
        const int sub = table.in_subgroup(uint32_t(enc)) ? 1 : 0;
        if (mod4_only)
            out << enc << ',' << mod4 << ',' << sub << '\n';
        else
            out << enc << ',' << v << ',' << mod4 << ',' << sub << '\n';
    }
}

}  // namespace slce
