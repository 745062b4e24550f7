// biquad: decide whether elements of Q(sqrt a, sqrt b) are sums of two
// squares, via exact local checks at the infinite, odd and dyadic places,
// with a brute-force representation oracle for cross-validation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "biquad/report.hpp"

using namespace biquad;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

FactorBudget budget_from_env() {
    FactorBudget b;
    if (const char* env = std::getenv("BIQUAD_FACTOR_BUDGET")) {
        char* end = nullptr;
        unsigned long val = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && val > 0) b.rho_rounds = val;
    }
    return b;
}

int verdict_exit_code(const Verdict& v) {
    switch (v.is_sum) {
        case Tri::Yes: return kExitTrue;
        case Tri::No: return kExitFalse;
        case Tri::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

struct DecideOptions {
    long a = 0, b = 0;
    std::string coords;
    bool json_out = false;
    bool batch = false;
    bool witness = false;
    long height = 5;
    int denom = 2;
    unsigned long factor_budget = 0;
};

int run_decide_one(const BiquadField& F, const std::array<Rat, 4>& s, const DecideOptions& opt,
                   const FactorBudget& budget, std::ostream& os) {
    BiquadElem T{F, s};
    Verdict v = decide(T, budget);
    if (opt.witness && !v.witness) {
        SearchParams sp;
        sp.height = opt.height;
        sp.denominator_bound = opt.denom;
        auto w = find_witness(T, sp);
        if (w) {
            if (!verify_witness(T, w->first, w->second)) throw Error("internal: witness failed verification");
            v.witness = w;
            if (v.is_sum == Tri::No)
                os << "CONTRADICTION: witness found for an element decided negative\n";
        }
    }
    if (opt.json_out)
        os << verdict_to_json(v).dump() << "\n";
    else
        os << explain(v);
    return verdict_exit_code(v);
}

int run_decide(const DecideOptions& opt) {
    FactorBudget budget = budget_from_env();
    if (opt.factor_budget > 0) budget.rho_rounds = opt.factor_budget;

    if (opt.batch) {
        // one JSON object per line: {"a": -7, "b": 17, "s": ["-92","1","21","-1"]}
        std::string line;
        int worst = kExitTrue;
        while (std::getline(std::cin, line)) {
            if (line.empty()) continue;
            json in = json::parse(line);
            BiquadField F = make_field(Int(in.at("a").get<long>()), Int(in.at("b").get<long>()), budget);
            std::array<Rat, 4> s;
            for (int i = 0; i < 4; ++i) {
                const auto& c = in.at("s").at(i);
                s[i] = c.is_string() ? parse_rat(c.get<std::string>()) : Rat(c.get<long>());
            }
            BiquadElem T{F, s};
            Verdict v = decide(T, budget);
            std::cout << verdict_to_json(v).dump() << "\n";
            worst = std::max(worst, verdict_exit_code(v));
        }
        return worst;
    }

    BiquadField F = make_field(Int(opt.a), Int(opt.b), budget);
    return run_decide_one(F, parse_coords(opt.coords), opt, budget, std::cout);
}

std::vector<std::pair<Int, Int>> parse_fields(const std::string& spec) {
    std::vector<std::pair<Int, Int>> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw Error("fields: expected 'a,b;a,b;...'");
        out.emplace_back(Int(tok.substr(0, comma)), Int(tok.substr(comma + 1)));
    }
    if (out.empty()) throw Error("fields: empty list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-of-two-squares decisions in biquadratic fields Q(sqrt a, sqrt b)"};
    app.require_subcommand(1);

    DecideOptions dopt;
    auto* dec = app.add_subcommand("decide", "decide one element (or a batch on stdin)");
    dec->add_option("--a", dopt.a, "radicand a");
    dec->add_option("--b", dopt.b, "radicand b");
    dec->add_option("--s", dopt.coords, "coordinates s0,s1,s2,s3 (integers or n/d)");
    dec->add_flag("--json", dopt.json_out, "single-line JSON output");
    dec->add_flag("--batch", dopt.batch, "read one JSON element per line from stdin");
    dec->add_flag("--witness", dopt.witness, "search for an explicit representation");
    dec->add_option("--height", dopt.height, "witness search: max |numerator|");
    dec->add_option("--denom", dopt.denom, "witness search: denominator bound (1, 2 or 4)");
    dec->add_option("--factor-budget", dopt.factor_budget, "factorization effort override");

    struct {
        std::string fields = "2,3;-3,5;-7,17";
        long count = 100;
        long bound = 5;
        unsigned long seed = 1;
        long height = 5;
        int denom = 2;
        bool json_out = false;
    } copt;
    auto* cor = app.add_subcommand("corpus", "random cross-validation sweep over fields");
    cor->add_option("--fields", copt.fields, "semicolon-separated field list 'a,b;a,b'");
    cor->add_option("--count", copt.count, "elements per field");
    cor->add_option("--bound", copt.bound, "coordinate bound for generated elements");
    cor->add_option("--seed", copt.seed, "RNG seed");
    cor->add_option("--height", copt.height, "witness search: max |numerator|");
    cor->add_option("--denom", copt.denom, "witness search: denominator bound");
    cor->add_flag("--json", copt.json_out, "JSON report");

    struct {
        std::vector<std::string> args;
        long a = 0, b = 0;
        std::string coords;
        unsigned k = 8;
    } eopt;
    auto* ev = app.add_subcommand("eval", "evaluate one quantity (e, legendre, norm, integral)");
    ev->add_option("what", eopt.args, "e N | legendre a p | norm | integral");
    // a '--' separator before negative numbers pushes them into remaining()
    ev->allow_extras();
    app.allow_extras();
    ev->add_option("--a", eopt.a, "radicand a");
    ev->add_option("--b", eopt.b, "radicand b");
    ev->add_option("--s", eopt.coords, "coordinates s0,s1,s2,s3");
    ev->add_option("--precision", eopt.k, "2-adic working precision (bits)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!ev->parsed() && !app.remaining().empty()) {
            std::cerr << "error: unexpected argument '" << app.remaining().front() << "'\n";
            return kExitUsage;
        }
        if (dec->parsed()) return run_decide(dopt);

        if (cor->parsed()) {
            SearchParams sp;
            sp.height = copt.height;
            sp.denominator_bound = copt.denom;
            CorpusReport rep =
                corpus_crosscheck(parse_fields(copt.fields), copt.bound, copt.count, copt.seed, sp);
            json j = corpus_to_json(rep);
            if (copt.json_out)
                std::cout << j.dump() << "\n";
            else
                std::cout << j.dump(2) << "\n";
            return rep.fatal() ? kExitFalse : kExitTrue;
        }

        if (ev->parsed()) {
            auto a = eopt.args;
            for (const std::string& extra : ev->remaining())
                if (extra != "--") a.push_back(extra);
            for (const std::string& extra : app.remaining())
                if (extra != "--") a.push_back(extra);
            if (a.size() == 2 && a[0] == "e") {
                std::cout << e_approx(Int(a[1]), eopt.k).str() << "\n";
                return kExitTrue;
            }
            if (a.size() == 3 && a[0] == "legendre") {
                std::cout << legendre(Int(a[1]), Int(a[2])) << "\n";
                return kExitTrue;
            }
            if (a.size() == 1 && (a[0] == "norm" || a[0] == "integral")) {
                BiquadField F = make_field(Int(eopt.a), Int(eopt.b));
                BiquadElem S{F, parse_coords(eopt.coords)};
                if (a[0] == "norm")
                    std::cout << norm_total(S).get_str() << "\n";
                else
                    std::cout << (is_integral(S) ? "true" : "false") << "\n";
                return kExitTrue;
            }
            std::cerr << "usage: eval e N | eval legendre a p | eval norm --a --b --s | eval integral --a --b --s\n";
            return kExitUsage;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
