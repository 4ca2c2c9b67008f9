#include "strata/json_io.hpp"

#include "strata/error.hpp"

namespace strata::json {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
    require(j.is_array(), std::string(what) + " must be a JSON array");
    std::vector<int> v;
    for (const auto& x : j) {
        require(x.is_number_integer(), std::string(what) + " entries must be integers");
        v.push_back(x.get<int>());
    }
    return v;
}

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidArgument(std::string("malformed JSON input: ") + ex.what());
    }
}

} // namespace

json to_json(const Bipartition& lambda) {
    auto e = lambda.entries();
    return json(std::vector<int>(e.begin(), e.end()));
}

Bipartition bipartition_from_json(const json& j) { return Bipartition(int_array(j, "bipartition")); }

json to_json(const Partition& nu) {
    auto p = nu.parts();
    return json(std::vector<int>(p.begin(), p.end()));
}

Partition partition_from_json(const json& j) { return Partition(int_array(j, "partition")); }

json to_json(const HatSequence& hat) {
    auto e = hat.entries();
    json out = {{"m", hat.m()},
                {"e", hat.excess().e},
                {"e_prime", hat.excess().e_prime},
                {"entries", std::vector<int>(e.begin(), e.end())}};
    if (hat.kind() == HatKind::primed) out["primed"] = true;
    return out;
}

HatSequence hat_sequence_from_json(const json& j) {
    return guarded([&] {
        const HatKind kind = j.value("primed", false) ? HatKind::primed : HatKind::unprimed;
        return HatSequence(kind, j.at("m").get<int>(), ExcessPair{j.at("e").get<int>(), j.at("e_prime").get<int>()},
                           int_array(j.at("entries"), "entries"));
    });
}

json to_json(const JordanPartition& jp) {
    return {{"kind", to_string(jp.kind)}, {"partition", to_json(jp.partition)}};
}

JordanPartition jordan_partition_from_json(const json& j) {
    return guarded([&] {
        return JordanPartition(partition_from_json(j.at("partition")),
                               jordan_kind_from_string(j.at("kind").get<std::string>()));
    });
}

json to_json(const ElementData& g) {
    json blocks = json::array();
    for (const auto& b : g.blocks) {
        json jb = {{"eig", to_string(b.eig)}, {"partition", to_json(b.partition)}};
        if (b.eig == EigClass::pair) jb["tag"] = b.tag;
        blocks.push_back(std::move(jb));
    }
    json out = {{"family", to_string(g.context.family)}, {"N", g.context.N}, {"blocks", std::move(blocks)}};
    if (g.context.p) out["p"] = g.context.p;
    return out;
}

ElementData element_data_from_json(const json& j) {
    return guarded([&] {
        const Family f = family_from_string(j.at("family").get<std::string>());
        require(f == Family::twistedA || f == Family::twistedD, "element family must be twistedA or twistedD");
        ElementData g{FamilyContext(f, j.at("N").get<int>(), j.value("p", 0)), {}};
        for (const auto& jb : j.at("blocks")) {
            SpectralBlock b{eig_class_from_string(jb.at("eig").get<std::string>()), jb.value("tag", std::string()),
                            partition_from_json(jb.at("partition"))};
            g.blocks.push_back(std::move(b));
        }
        return g;
    });
}

json to_json(const IrrLabel& label) {
    json out = {{"family", to_string(label.family)}, {"degree", label.degree}, {"b", label.b}};
    if (label.twin) out["twin"] = label.twin;
    if (label.disambiguator) out["disambiguator"] = *label.disambiguator;
    return out;
}

json to_json(const StratumLabel& label) {
    return std::visit([](const auto& l) { return to_json(l); }, label);
}

json to_json(const SurjectivityReport& report) {
    json counts = json::object();
    for (const auto& [n, c] : report.checked) counts[std::to_string(n)] = c;
    return {{"x", {report.x.e, report.x.e_prime}},
            {"y", {report.y.e, report.y.e_prime}},
            {"checked", std::move(counts)},
            {"failures", report.failures},
            {"pass", report.ok()}};
}

} // namespace strata::json
