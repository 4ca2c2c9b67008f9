#include "strata/exceptional.hpp"

#include <fstream>
#include <map>
#include "json.hpp"
#include <sstream>

#include "strata/error.hpp"

namespace strata {

// Generated at configure time from data/*.json.
namespace embedded {
extern const char* const twistedE6_json;
extern const char* const tripleD4_json;
} // namespace embedded

std::string to_string(const IrrLabel& label) {
    std::string s = std::to_string(label.degree) + "_" + std::to_string(label.b);
    if (label.twin) s += "#" + std::to_string(label.twin);
    if (label.disambiguator) s += " [" + *label.disambiguator + "]";
    return s;
}

namespace {

std::size_t expected_label_count(Family f) {
    switch (f) {
    case Family::twistedE6: return 17;
    case Family::tripleD4: return 5;
    default: break;
    }
    throw InvalidArgument("no exceptional table for family " + to_string(f));
}

std::optional<int> parse_condition(const std::string& cond) {
    // only "p!=<prime>" is meaningful
    const std::string prefix = "p!=";
    require(cond.rfind(prefix, 0) == 0, "unsupported subset condition '" + cond + "'");
    const int q = std::stoi(cond.substr(prefix.size()));
    require(is_prime(q), "subset condition must name a prime: '" + cond + "'");
    return q;
}

void validate(const ExceptionalTable& t) {
    require(t.schema_version == kTableSchemaVersion, "unsupported table schema version");
    require(!t.coefficients.empty() && t.coefficients.front() == 1, "coefficient n_0 must be 1");
    for (int n : t.coefficients) require(n > 0, "coefficients must be positive");
    for (const auto& s : t.one_element_subsets)
        require(s.index >= 0 && static_cast<std::size_t>(s.index) < t.coefficients.size(), "subset index out of range");

    require(t.labels.size() == expected_label_count(t.family), "unexpected number of labels for " + to_string(t.family));
    std::map<std::pair<int, int>, std::vector<const IrrLabel*>> by_db;
    for (const auto& l : t.labels) {
        require(l.degree >= 1 && l.b >= 0, "label degree must be positive and b non-negative");
        require(l.twin >= 0 && l.twin <= 2, "twin index must be 0, 1 or 2");
        by_db[{l.degree, l.b}].push_back(&l);
    }
    for (const auto& [db, group] : by_db) {
        require(group.size() <= 2, "more than two labels share degree/b " + to_string(*group.front()));
        if (group.size() == 2)
            require(group[0]->twin && group[1]->twin && group[0]->twin != group[1]->twin,
                    "labels sharing degree/b need distinct twin indices");
    }
}

} // namespace

ExceptionalTable parse_table(const std::string& json_text) {
    ExceptionalTable t;
    try {
        const auto j = nlohmann::json::parse(json_text);
        t.schema_version = j.at("schema_version").get<int>();
        t.family = family_from_string(j.at("family").get<std::string>());
        t.weyl_group = j.at("weyl_group").get<std::string>();
        t.rk_D = j.at("rk_D").get<int>();
        t.dim_G0 = j.at("dim_G0").get<int>();
        t.coefficients = j.at("coefficients").get<std::vector<int>>();
        for (const auto& s : j.at("one_element_subsets")) {
            SubsetRecord rec{s.at("index").get<int>(), s.at("subsystem").get<std::string>(), std::nullopt};
            if (s.contains("condition")) rec.excluded_prime = parse_condition(s.at("condition").get<std::string>());
            t.one_element_subsets.push_back(std::move(rec));
        }
        for (const auto& l : j.at("labels")) {
            IrrLabel label{t.family, l.at("degree").get<int>(), l.at("b").get<int>(), l.value("twin", 0), std::nullopt};
            if (l.contains("disambiguator")) label.disambiguator = l.at("disambiguator").get<std::string>();
            t.labels.push_back(std::move(label));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidArgument(std::string("malformed table: ") + ex.what());
    }
    validate(t);
    return t;
}

ExceptionalTable load_table_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open table file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str());
}

const ExceptionalTable& builtin_table(Family family) {
    static const ExceptionalTable e6 = parse_table(embedded::twistedE6_json);
    static const ExceptionalTable d4 = parse_table(embedded::tripleD4_json);
    switch (family) {
    case Family::twistedE6: return e6;
    case Family::tripleD4: return d4;
    default: break;
    }
    throw InvalidArgument("no exceptional table for family " + to_string(family));
}

std::vector<IrrLabel> table(Family family, int p) {
    require(p == 0 || is_prime(p), "characteristic must be 0 or a prime");
    return builtin_table(family).labels;
}

int exceptional_orbit_dimension(const IrrLabel& label) {
    const auto& t = builtin_table(label.family);
    return t.dim_G0 - 2 * label.b - t.rk_D;
}

} // namespace strata
