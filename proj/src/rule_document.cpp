#include "nestquad/rule_document.hpp"

#include <sstream>

#include "json.hpp"

namespace nestquad {

using nlohmann::ordered_json;

std::string to_json(const RuleDocument& doc)
{
    ordered_json j;
    j["description"] = doc.description;
    j["domain"] = {bound_to_string(doc.domain.lower(), false), bound_to_string(doc.domain.upper(), true)};
    j["distribution"] = doc.distribution;
    j["moments_kind"] = doc.exact ? "exact" : "approximate";
    j["precision"] = doc.precision;
    if (!doc.moments.empty())
        j["moments"] = doc.moments;

    auto levels = ordered_json::array();
    for (const auto& level : doc.levels) {
        ordered_json l;
        l["level"] = level.level;
        l["p"] = level.p ? ordered_json(*level.p) : ordered_json(nullptr);
        l["node_polynomial"] = level.node_polynomial;
        auto nodes = ordered_json::array();
        for (const auto& n : level.nodes)
            nodes.push_back({{"value", n.value}, {"first_level", n.first_level}});
        l["nodes"] = std::move(nodes);
        l["weights"] = level.weights;
        l["guaranteed_degree"] = level.guaranteed_degree;
        l["verified_degree"] = level.verified_degree;
        levels.push_back(std::move(l));
    }
    j["levels"] = std::move(levels);
    if (doc.failure)
        j["failure"] = {{"level", doc.failure->level}, {"p", doc.failure->p}, {"reason", doc.failure->reason}};
    return j.dump(2) + "\n";
}

RuleDocument parse_rule_document(std::string_view json_text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const ordered_json::exception& e) {
        throw RuleDocumentError(std::string("rule document is not valid JSON: ") + e.what());
    }

    RuleDocument doc;
    try {
        doc.description = j.value("description", std::string{});
        const auto& dom = j.at("domain");
        if (!dom.is_array() || dom.size() != 2)
            throw RuleDocumentError("\"domain\" must be a two-element array");
        doc.domain = Interval(parse_bound(dom[0].get<std::string>()), parse_bound(dom[1].get<std::string>()));
        doc.distribution = j.at("distribution").get<std::string>();
        const auto kind = j.value("moments_kind", std::string("exact"));
        if (kind != "exact" && kind != "approximate")
            throw RuleDocumentError("unknown moments_kind \"" + kind + "\"");
        doc.exact = kind == "exact";
        doc.precision = j.at("precision").get<unsigned>();
        if (j.contains("moments"))
            doc.moments = j.at("moments").get<std::vector<std::string>>();

        for (const auto& l : j.at("levels")) {
            RuleLevel level;
            level.level = l.at("level").get<int>();
            if (!l.at("p").is_null())
                level.p = l.at("p").get<int>();
            level.node_polynomial = l.at("node_polynomial").get<std::vector<std::string>>();
            for (const auto& n : l.at("nodes"))
                level.nodes.push_back({n.at("value").get<std::string>(), n.at("first_level").get<int>()});
            level.weights = l.at("weights").get<std::vector<std::string>>();
            level.guaranteed_degree = l.at("guaranteed_degree").get<int>();
            level.verified_degree = l.at("verified_degree").get<int>();
            doc.levels.push_back(std::move(level));
        }
        if (j.contains("failure")) {
            const auto& f = j.at("failure");
            doc.failure = RuleFailure{f.at("level").get<int>(), f.at("p").get<int>(), f.at("reason").get<std::string>()};
        }
    } catch (const ordered_json::exception& e) {
        throw RuleDocumentError(std::string("malformed rule document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw RuleDocumentError(std::string("malformed rule document: ") + e.what());
    }
    if (doc.levels.empty())
        throw RuleDocumentError("rule document has no levels");
    return doc;
}

std::string to_csv(const RuleDocument& doc)
{
    std::ostringstream os;
    os << "node,weight,first_level\n";
    if (doc.levels.empty())
        return os.str();
    const auto& top = doc.levels.back();
    for (std::size_t k = 0; k < top.nodes.size(); ++k)
        os << top.nodes[k].value << "," << (k < top.weights.size() ? top.weights[k] : "") << ","
           << top.nodes[k].first_level << "\n";
    return os.str();
}

} // namespace nestquad
