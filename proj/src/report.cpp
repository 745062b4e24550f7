#include "biquad/report.hpp"

#include <sstream>

namespace biquad {

using nlohmann::json;

namespace {

json elem_coords(const BiquadElem& e) {
    json a = json::array();
    for (const Rat& c : e.s) a.push_back(c.get_str());
    return a;
}

}  // namespace

json verdict_to_json(const Verdict& v) {
    json j;
    if (v.is_sum == Tri::Unknown)
        j["verdict"] = "unknown";
    else
        j["verdict"] = v.is_sum == Tri::Yes;
    json places = json::array();
    for (const auto& c : v.places) {
        json p;
        p["type"] = c.type;
        if (c.p) p["p"] = static_cast<long>(c.p->get_si());
        p["rule"] = c.rule;
        p["data"] = json::object();
        for (const auto& [k, val] : c.data) p["data"][k] = val;
        p["pass"] = c.pass;
        places.push_back(p);
    }
    j["places"] = places;
    if (v.witness) {
        j["witness"] = {{"x", elem_coords(v.witness->first)}, {"y", elem_coords(v.witness->second)}};
    }
    if (v.normalization) {
        j["normalization"] = {{"Q", v.normalization->Q.get_str()},
                              {"U", v.normalization->U.get_str()},
                              {"V", v.normalization->V.get_str()}};
    }
    if (v.incomplete) j["incomplete"] = true;
    return j;
}

Verdict verdict_from_json(const json& j, const BiquadField& F) {
    Verdict v;
    if (j.at("verdict").is_string())
        v.is_sum = Tri::Unknown;
    else
        v.is_sum = j.at("verdict").get<bool>() ? Tri::Yes : Tri::No;
    for (const auto& p : j.at("places")) {
        PlaceCertificate c;
        c.type = p.at("type").get<std::string>();
        if (p.contains("p")) c.p = Int(p.at("p").get<long>());
        c.rule = p.at("rule").get<std::string>();
        for (const auto& [k, val] : p.at("data").items()) c.data[k] = val.get<std::string>();
        c.pass = p.at("pass").get<bool>();
        v.places.push_back(c);
    }
    if (j.contains("witness")) {
        auto coords = [&](const json& arr) {
            BiquadElem e{F, {}};
            for (int i = 0; i < 4; ++i) e.s[i] = parse_rat(arr.at(i).get<std::string>());
            return e;
        };
        v.witness = {coords(j["witness"]["x"]), coords(j["witness"]["y"])};
    }
    if (j.contains("normalization")) {
        Normalization n{parse_rat(j["normalization"].at("Q").get<std::string>()),
                        Int(j["normalization"].at("U").get<std::string>()),
                        Int(j["normalization"].at("V").get<std::string>()),
                        {},
                        BiquadElem::rational(F, 0)};
        v.normalization = n;
    }
    if (j.contains("incomplete")) v.incomplete = j["incomplete"].get<bool>();
    return v;
}

json corpus_to_json(const CorpusReport& r) {
    json j;
    j["total"] = r.total;
    j["skipped_incomplete"] = r.skipped_incomplete;
    j["decided_true"] = r.decided_true;
    j["decided_false"] = r.decided_false;
    j["witnesses_found"] = r.witnesses_found;
    j["true_without_witness"] = r.true_without_witness;
    j["fatal_contradictions"] = r.fatal_contradictions;
    j["reciprocity_checked"] = r.reciprocity_checked;
    j["reciprocity_failures"] = r.reciprocity_failures;
    j["dyadic_shortcut_checked"] = r.dyadic_shortcut_checked;
    j["dyadic_shortcut_divergences"] = r.dyadic_shortcut_divergences;
    j["ramified_arbitration_checked"] = r.ramified_arbitration_checked;
    j["ramified_closed_form_disagreements"] = r.ramified_closed_form_disagreements;
    if (!r.ramified_disagreement_instance.empty())
        j["ramified_disagreement_instance"] = r.ramified_disagreement_instance;
    j["v_scaling_checked"] = r.v_scaling_checked;
    j["v_scaling_mismatches"] = r.v_scaling_mismatches;
    json issues = json::array();
    for (const auto& i : r.issues)
        issues.push_back({{"kind", i.kind}, {"field", i.field}, {"element", i.element}, {"detail", i.detail}});
    j["issues"] = issues;
    return j;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw Error("empty rational");
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("invalid rational: " + s);
    if (r.get_den() == 0) throw Error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::array<Rat, 4> parse_coords(const std::string& csv) {
    std::array<Rat, 4> out;
    std::stringstream ss(csv);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 4) throw Error("expected exactly four coordinates");
        // trim spaces
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error("empty coordinate");
        out[i++] = parse_rat(tok.substr(b, e - b + 1));
    }
    if (i != 4) throw Error("expected exactly four coordinates");
    return out;
}

}  // namespace biquad
