#ifndef NESTQUAD_RULE_DOCUMENT_HPP
#define NESTQUAD_RULE_DOCUMENT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nestquad/interval.hpp"

namespace nestquad {

struct RuleNode {
    std::string value;  ///< decimal text
    int first_level = 0;

    friend bool operator==(const RuleNode&, const RuleNode&) = default;
};

struct RuleLevel {
    int level = 0;
    /// Nodes added by the extension that produced this level; unset for a
    /// starting formula.
    std::optional<int> p;
    /// Ascending coefficients: "p/q" when exact, decimal text otherwise.
    std::vector<std::string> node_polynomial;
    std::vector<RuleNode> nodes;
    std::vector<std::string> weights;
    int guaranteed_degree = 0;
    int verified_degree = 0;

    friend bool operator==(const RuleLevel&, const RuleLevel&) = default;
};

struct RuleFailure {
    int level = 0;  ///< the level the failed step would have produced
    int p = 0;
    std::string reason;

    friend bool operator==(const RuleFailure&, const RuleFailure&) = default;
};

/// Serialized nested rule. All numbers are strings so that any precision
/// survives the round trip.
struct RuleDocument {
    std::string description;
    Interval domain;
    /// DistributionSpec text, or "custom" with the moments stored inline.
    std::string distribution = "custom";
    bool exact = true;
    unsigned precision = 50;
    std::vector<std::string> moments;  ///< only for custom distributions
    std::vector<RuleLevel> levels;
    std::optional<RuleFailure> failure;

    friend bool operator==(const RuleDocument&, const RuleDocument&) = default;
};

class RuleDocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_json(const RuleDocument& doc);
/// Throws RuleDocumentError on malformed input.
RuleDocument parse_rule_document(std::string_view json_text);

/// Top-level nodes as "node,weight,first_level" rows.
std::string to_csv(const RuleDocument& doc);

} // namespace nestquad

#endif
