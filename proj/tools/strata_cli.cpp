// strata: command-line front end. All output is JSON on stdout; failures print
// {"error": "..."} and exit 1.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strata/classifier.hpp"
#include "strata/error.hpp"
#include "strata/exceptional.hpp"
#include "strata/json_io.hpp"
#include "strata/numerics.hpp"
#include "strata/splitting.hpp"
#include "strata/springer.hpp"

using namespace strata;
using Json = nlohmann::json;

namespace {

// Accepts "1,2,3", "[1,2,3]" or "[]".
std::vector<int> parse_list(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != '[' && ch != ']' && ch != ' ') s += ch;
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == item.size() && !item.empty(), "not an integer list: " + text);
        out.push_back(v);
    }
    return out;
}

ExcessPair parse_excess(const std::string& text) {
    const auto v = parse_list(text);
    require(v.size() == 2, "excess must be E,E': " + text);
    return {v[0], v[1]};
}

Json cmd_enumerate(int n, const std::string& excess) {
    Json out = Json::array();
    for (const auto& b : enumerate(n, parse_excess(excess))) out.push_back(json::to_json(b));
    return out;
}

Json cmd_classify(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    const ElementData g = json::element_data_from_json(doc);
    const Bipartition label = classify(g);
    return {{"label", json::to_json(label)},
            {"index_set_member", in_index_set(label, g.context)},
            {"orbit_dimension", stratum_orbit_dimension(label, g.context)}};
}

Json cmd_decompose(const std::string& lambda, const std::string& x, const std::string& y) {
    const auto [a, b] = decompose(Bipartition(parse_list(lambda)), parse_excess(x), parse_excess(y));
    return {{"first", json::to_json(a)}, {"second", json::to_json(b)}};
}

Json cmd_kappa(const std::string& lambda, const std::string& hat, int m, const std::string& excess, bool prime,
               bool invert) {
    const HatKind kind = prime ? HatKind::primed : HatKind::unprimed;
    const ExcessPair x = parse_excess(excess);
    if (invert) {
        require(!hat.empty(), "--invert needs --hat");
        return json::to_json(kappa_inverse(HatSequence(kind, m, x, parse_list(hat))));
    }
    const Bipartition l(parse_list(lambda));
    return json::to_json(kappa(l, m > 0 ? m : minimal_m(l, kind), x, kind));
}

Json cmd_split(const std::string& a, int gap, int c) {
    const ASequence seq(parse_list(a), gap, c);
    const Split s = split_sequence(seq);
    // rule applied at each index s >= 3
    const auto trace = split_case_trace(seq);
    const std::vector<int> rules(trace.size() > 3 ? trace.begin() + 3 : trace.end(), trace.end());
    return {{"B", s.b}, {"C", s.c}, {"rules", rules}};
}

Json verify_surjectivity_suite(int max) {
    const std::vector<std::pair<ExcessPair, ExcessPair>> maps = {
        {{1, 0}, {0, 1}}, {{1, 0}, {1, 0}}, {{0, 1}, {0, 1}},
        {{1, 1}, {1, 1}}, {{2, 0}, {0, 2}}, {{0, 2}, {0, 2}},
    };
    Json reports = Json::array();
    bool pass = true;
    for (const auto& [x, y] : maps) {
        const auto r = verify_surjectivity(x, y, max);
        pass = pass && r.ok();
        reports.push_back(json::to_json(r));
    }
    return {{"suite", "surjectivity"}, {"max", max}, {"maps", reports}, {"pass", pass}};
}

// Dimension identity and bijectivity of the Springer labels for every Jordan
// type of total size <= max.
Json verify_springer_suite(int max) {
    Json checked = Json::object();
    Json failures = Json::array();
    for (JordanKind k : {JordanKind::symplectic, JordanKind::orthogonal_odd, JordanKind::orthogonal_even}) {
        int count = 0;
        for (int total = k == JordanKind::orthogonal_odd ? 1 : 0; total <= max; total += 2) {
            const int n = total / 2;
            const auto parts = jordan_partitions(k, total);
            std::set<Bipartition> images;
            for (const auto& j : parts) {
                const Bipartition l = springer_label(j);
                images.insert(l);
                ++count;
                if (k != JordanKind::orthogonal_even && centralizer_dimension_oracle(j) != 2 * b_invariant(l) + n)
                    failures.push_back("dimension identity fails at " + to_string(j.partition));
            }
            const auto target = enumerate(n, label_excess(k));
            if (images != std::set<Bipartition>(target.begin(), target.end()) || images.size() != parts.size())
                failures.push_back("not a bijection: " + to_string(k) + " size " + std::to_string(total));
        }
        checked[to_string(k)] = count;
    }
    return {{"suite", "springer"}, {"max", max}, {"checked", checked}, {"failures", failures},
            {"pass", failures.empty()}};
}

// Stratum orbit dimensions against dim G0 minus the centralizer dimension, and
// non-negativity across the twisted families.
Json verify_dimensions_suite(int max) {
    Json checked = Json::object();
    Json failures = Json::array();
    int count = 0;
    for (int total = 0; total <= max; ++total) {
        const bool odd = total % 2 == 1;
        const JordanKind k = odd ? JordanKind::orthogonal_odd : JordanKind::symplectic;
        const FamilyContext ctx = odd ? FamilyContext::so_odd(total / 2) : FamilyContext::symplectic(total / 2);
        const int dim_g = rank_and_dimension(ctx).dim_G0;
        for (const auto& j : jordan_partitions(k, total)) {
            ++count;
            if (stratum_orbit_dimension(springer_label(j), ctx) != dim_g - centralizer_dimension_oracle(j))
                failures.push_back("orbit dimension mismatch at " + to_string(j.partition));
        }
    }
    checked["connected"] = count;
    count = 0;
    for (int N = 2; N <= max; ++N) {
        std::vector<FamilyContext> ctxs{FamilyContext::twisted_A(N)};
        if (N >= 4 && N % 2 == 0) ctxs.push_back(FamilyContext::twisted_D(N));
        for (const auto& ctx : ctxs)
            for (const auto& l : classical_index_set(ctx)) {
                ++count;
                if (stratum_orbit_dimension(l, ctx) < 0) failures.push_back("negative dimension in " + to_string(ctx));
            }
    }
    checked["twisted"] = count;
    return {{"suite", "dimensions"}, {"max", max}, {"checked", checked}, {"failures", failures},
            {"pass", failures.empty()}};
}

Json cmd_verify(const std::string& suite, int max) {
    require(max >= 0, "--max must be non-negative");
    if (suite == "surjectivity") return verify_surjectivity_suite(max);
    require(max <= kOracleSizeLimit, "--max is limited to " + std::to_string(kOracleSizeLimit) + " for " + suite);
    if (suite == "springer") return verify_springer_suite(max);
    if (suite == "dimensions") return verify_dimensions_suite(max);
    throw InvalidArgument("unknown suite " + suite);
}

Json cmd_tables(const std::string& family) {
    const Family f = family_from_string(family);
    require(f == Family::twistedE6 || f == Family::tripleD4, "no stored table for " + family);
    const ExceptionalTable& t = builtin_table(f);
    Json subsets = Json::array();
    for (const auto& s : t.one_element_subsets) {
        Json r = {{"index", s.index}, {"subsystem", s.subsystem}};
        if (s.excluded_prime) r["condition"] = "p!=" + std::to_string(*s.excluded_prime);
        subsets.push_back(r);
    }
    Json labels = Json::array();
    for (const auto& l : t.labels) {
        Json r = json::to_json(l);
        r["orbit_dimension"] = exceptional_orbit_dimension(l);
        labels.push_back(r);
    }
    return {{"family", to_string(f)}, {"weyl_group", t.weyl_group}, {"rk_D", t.rk_D}, {"dim_G0", t.dim_G0},
            {"coefficients", t.coefficients}, {"one_element_subsets", subsets}, {"labels", labels}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartition calculus for strata of disconnected reductive groups"};
    app.require_subcommand(1);

    int n = 0, m = 0, gap = 0, c = 0, max = 6;
    bool prime = false, invert = false;
    std::string excess, lambda, hat, x, y, a, input, suite, family;

    auto* en = app.add_subcommand("enumerate", "list BP^n with the given excess");
    en->add_option("--n", n, "size")->required();
    en->add_option("--excess", excess, "E,E'")->required();

    auto* cl = app.add_subcommand("classify", "stratum label of element data");
    cl->add_option("--input", input, "element data JSON file")->required();

    auto* de = app.add_subcommand("decompose", "split lambda into excess x and excess y parts");
    de->add_option("--lambda", lambda, "bipartition entries")->required();
    de->add_option("--x", x, "E,E'")->required();
    de->add_option("--y", y, "E,E'")->required();

    auto* ka = app.add_subcommand("kappa", "hat sequence of a bipartition, or the inverse");
    ka->add_option("--lambda", lambda, "bipartition entries");
    ka->add_option("--hat", hat, "hat sequence entries (with --invert)");
    ka->add_option("--m", m, "sequence parameter m (default: minimal)");
    ka->add_option("--excess", excess, "E,E'")->required();
    ka->add_flag("--prime", prime, "use kappa'");
    ka->add_flag("--invert", invert, "invert a hat sequence");

    auto* sp = app.add_subcommand("split", "split an A-sequence into B and C");
    sp->add_option("--A", a, "A-sequence entries")->required();
    sp->add_option("--N", gap, "gap N >= 2")->required();
    sp->add_option("--c", c, "second entry c")->required();

    auto* ve = app.add_subcommand("verify", "run an exhaustive check");
    ve->add_option("--suite", suite, "surjectivity|springer|dimensions")->required();
    ve->add_option("--max", max, "size bound");

    auto* ta = app.add_subcommand("tables", "stored exceptional table");
    ta->add_option("--family", family, "twistedE6|tripleD4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        Json out;
        if (*en) out = cmd_enumerate(n, excess);
        else if (*cl) out = cmd_classify(input);
        else if (*de) out = cmd_decompose(lambda, x, y);
        else if (*ka) out = cmd_kappa(lambda, hat, m, excess, prime, invert);
        else if (*sp) out = cmd_split(a, gap, c);
        else if (*ve) out = cmd_verify(suite, max);
        else out = cmd_tables(family);
        std::cout << out.dump() << "\n";
        if (*ve && !out.at("pass").get<bool>()) return 1;
    } catch (const std::exception& e) {
        std::cout << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
