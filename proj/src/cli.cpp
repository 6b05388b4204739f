#include "nestquad/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "nestquad/extension.hpp"
#include "nestquad/numerics.hpp"
#include "nestquad/sturm.hpp"

namespace nestquad::cli {

namespace {

struct LevelPlan {
    NodePolynomial polynomial;
    std::optional<int> p;
    int guaranteed_degree = 0;
};

int degree_of(const NodePolynomial& p)
{
    return std::visit([](const auto& poly) { return poly.degree(); }, p);
}

/// Moments for a built-in distribution, enough to measure the exact degree
/// of a K-node formula (< 2K) and to run every planned extension.
int moment_budget(int required_for_extensions, int top_nodes)
{
    return std::max({required_for_extensions, 2 * top_nodes + 1, 1});
}

std::vector<std::string> polynomial_text(const NodePolynomial& poly, unsigned digits10)
{
    if (const auto* exact = std::get_if<Polynomial>(&poly))
        return to_strings(*exact);
    std::vector<std::string> out;
    for (const auto& c : std::get<RealPolynomial>(poly).coefficients())
        out.push_back(format_real(c, digits10));
    return out;
}

RealPolynomial parse_real_polynomial(const std::vector<std::string>& text, unsigned digits10)
{
    std::vector<Real> c;
    for (const auto& s : text)
        c.push_back(parse_real(s, digits10));
    return RealPolynomial(std::move(c));
}

RuleDocument make_document(const std::vector<LevelPlan>& plans, const MomentSequence& mu, const Interval& domain,
                           unsigned precision, const std::string& distribution, const std::string& description)
{
    RuleDocument doc;
    doc.description = description;
    doc.domain = domain;
    doc.distribution = distribution;
    doc.exact = mu.is_exact();
    doc.precision = mu.is_exact() ? precision : std::min(precision, mu.precision());
    if (distribution == "custom")
        for (int k = 0; k <= mu.max_index(); ++k)
            doc.moments.push_back(mu.moment_text(k));

    std::vector<QuadratureFormula> formulas;
    for (const auto& plan : plans) {
        formulas.push_back(std::visit([&](const auto& poly) { return build_formula(poly, mu, domain, precision); },
                                      plan.polynomial));
    }
    const NestedRule rule = assemble_nested_rule(formulas, 1);

    for (std::size_t i = 0; i < plans.size(); ++i) {
        const auto& f = rule.formulas[i];
        RuleLevel level;
        level.level = static_cast<int>(i) + 1;
        level.p = plans[i].p;
        level.node_polynomial = polynomial_text(plans[i].polynomial, doc.precision + 10);
        for (std::size_t k = 0; k < f.size(); ++k) {
            level.nodes.push_back({format_real(f.nodes[k], f.precision), rule.first_level[i][k]});
            level.weights.push_back(format_real(f.weights[k], f.precision));
        }
        level.guaranteed_degree = plans[i].guaranteed_degree;
        level.verified_degree = f.verified_degree.value_or(-1);
        doc.levels.push_back(std::move(level));
    }
    return doc;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw std::runtime_error("cannot write " + path);
    file << text;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// "--interval a b" becomes "--interval=a,b" so that "-inf" and negative
/// bounds are not mistaken for flags.
std::vector<std::string> normalize_args(const std::vector<std::string>& args)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--interval" && i + 2 < args.size()) {
            out.push_back("--interval=" + args[i + 1] + "," + args[i + 2]);
            i += 2;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

struct SourceOptions {
    std::string dist;
    std::string moments_file;
    std::vector<std::string> interval;
};

void add_source_options(CLI::App* cmd, SourceOptions& o)
{
    cmd->add_option("--dist", o.dist, "Built-in distribution: uniform:a,b | beta:alpha,beta | gauss");
    cmd->add_option("--moments-file", o.moments_file, "Moments document (JSON)");
    cmd->add_option("--interval", o.interval, "Domain override: <a> <b> (accepts -inf/inf)")
        ->expected(2)
        ->delimiter(',');
}

std::optional<Interval> interval_override(const SourceOptions& o)
{
    if (o.interval.empty())
        return std::nullopt;
    return Interval(parse_bound(o.interval[0]), parse_bound(o.interval[1]));
}

struct Source {
    MomentSequence mu;
    Interval domain;
    std::string distribution;
};

/// Resolves --dist / --moments-file; built-in moments are generated up to
/// `max_index`.
Source resolve_source(const SourceOptions& o, int max_index)
{
    if (o.dist.empty() == o.moments_file.empty())
        throw CLI::ValidationError("exactly one of --dist and --moments-file is required");
    auto override_domain = interval_override(o);
    if (!o.dist.empty()) {
        const auto spec = DistributionSpec::parse(o.dist);
        auto mu = MomentSequence::from_distribution(spec, max_index);
        Interval domain = override_domain.value_or(spec.domain());
        return {mu.with_domain(domain), domain, spec.to_string()};
    }
    auto mu = load_moments(o.moments_file);
    Interval domain = override_domain.value_or(mu.domain());
    return {mu.with_domain(domain), domain, "custom"};
}

void check_precision(unsigned precision)
{
    if (precision < 16)
        throw CLI::ValidationError("--precision must be at least 16 digits");
}

// --- generate ---------------------------------------------------------------

struct GenerateOptions {
    SourceOptions source;
    unsigned precision = 50;
    std::vector<int> schedule;
    bool gkp = false;
    int iterations = 0;
    std::string out;
    bool csv = false;
    std::string description;
};

int run_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err)
{
    check_precision(o.precision);
    if (o.gkp == !o.schedule.empty())
        throw CLI::ValidationError("give exactly one of --schedule and --gkp");
    const ExtensionSchedule schedule =
        o.gkp ? ExtensionSchedule::successor(o.iterations) : ExtensionSchedule::fixed(o.schedule);

    const int start_degree = o.gkp ? 1 : 0;
    const int budget = moment_budget(schedule.required_max_index(start_degree), schedule.final_degree(start_degree));
    Source src = resolve_source(o.source, budget);
    const Interval& domain = src.domain;
    const Rational center = domain.center();

    std::vector<LevelPlan> plans;
    std::optional<RuleFailure> failure;

    auto record_failure = [&](std::size_t step, int p, ExtensionFailure reason) {
        failure = RuleFailure{static_cast<int>(plans.size()) + 1, p, std::string(to_string(reason))};
        err << "extension step " << step + 1 << " (p = " << p << ") failed: " << to_string(reason) << "\n";
    };

    if (src.mu.is_exact()) {
        const Polynomial start = o.gkp ? Polynomial{-center, Rational(1)} : Polynomial{Rational(1)};
        if (o.gkp)
            plans.push_back({start, std::nullopt, 0});
        const auto steps = generate_chain(start, schedule, src.mu, domain);
        int n = start.degree();
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const auto& s = steps[i];
            if (!s.outcome.succeeded()) {
                record_failure(i, s.p, s.outcome.failure_reason());
                break;
            }
            plans.push_back({s.node_polynomial, s.p, n + 2 * s.p - 1});
            n += s.p;
        }
    } else {
        const unsigned digits = src.mu.precision();
        PrecisionScope scope(digits);
        const RealPolynomial start = o.gkp ? RealPolynomial{-to_real(center, digits), Real(1)} : RealPolynomial{Real(1)};
        if (o.gkp)
            plans.push_back({start, std::nullopt, 0});
        const auto steps = generate_chain_numeric(start, schedule, src.mu, domain, digits);
        int n = start.degree();
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const auto& s = steps[i];
            if (!s.outcome.succeeded()) {
                record_failure(i, s.p, *s.outcome.failure);
                break;
            }
            plans.push_back({s.node_polynomial, s.p, n + 2 * s.p - 1});
            n += s.p;
        }
    }

    if (plans.empty()) {
        err << "no formula could be generated\n";
        return chain_stopped;
    }

    std::string description = o.description;
    if (description.empty())
        description = "nested quadrature rule for " + src.distribution + " on " + domain.to_string();
    RuleDocument doc = make_document(plans, src.mu, domain, o.precision, src.distribution, description);
    doc.failure = failure;
    write_output(o.csv ? to_csv(doc) : to_json(doc), o.out, out);
    return failure ? chain_stopped : ok;
}

// --- extend -----------------------------------------------------------------

struct ExtendOptions {
    std::string document;
    std::vector<int> p;
    std::string moments_file;
    std::string out;
    bool csv = false;
};

int run_extend(const ExtendOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.p.empty())
        throw CLI::ValidationError("--p needs at least one value");
    for (int p : o.p)
        if (p < 1)
            throw CLI::ValidationError("every p must be >= 1");

    RuleDocument doc = parse_rule_document(read_file(o.document));
    std::optional<MomentSequence> override_mu;
    if (!o.moments_file.empty())
        override_mu = load_moments(o.moments_file).with_domain(doc.domain);

    const auto& top = doc.levels.back();
    const int n = static_cast<int>(top.node_polynomial.size()) - 1;
    const int p_max = *std::max_element(o.p.begin(), o.p.end());

    MomentSequence mu = [&] {
        if (override_mu)
            return *override_mu;
        if (doc.distribution != "custom") {
            const auto spec = DistributionSpec::parse(doc.distribution);
            return MomentSequence::from_distribution(spec, moment_budget(n + 2 * p_max, n + p_max)).with_domain(doc.domain);
        }
        return document_moments(doc);
    }();

    std::vector<LevelPlan> plans;
    for (const auto& level : doc.levels) {
        NodePolynomial poly = doc.exact ? NodePolynomial(polynomial_from_strings(level.node_polynomial))
                                        : NodePolynomial(parse_real_polynomial(level.node_polynomial, doc.precision + 10));
        plans.push_back({std::move(poly), level.p, level.guaranteed_degree});
    }

    std::optional<ExtensionFailure> failed;
    int used_p = o.p.back();
    if (doc.exact) {
        const auto& f = std::get<Polynomial>(plans.back().polynomial);
        auto [p, outcome] = auto_extend(f, mu, doc.domain, o.p);
        used_p = p;
        if (outcome.succeeded())
            plans.push_back({f * outcome.extension(), p, n + 2 * p - 1});
        else
            failed = outcome.failure_reason();
    } else {
        const unsigned digits = mu.is_exact() ? doc.precision : mu.precision();
        PrecisionScope scope(digits);
        const auto& f = std::get<RealPolynomial>(plans.back().polynomial);
        auto [p, outcome] = auto_extend_numeric(f, mu, doc.domain, o.p, digits);
        used_p = p;
        if (outcome.succeeded())
            plans.push_back({f * *outcome.extension, p, n + 2 * p - 1});
        else
            failed = *outcome.failure;
    }

    RuleDocument next = make_document(plans, mu, doc.domain, doc.precision, doc.distribution, doc.description);
    if (failed) {
        next.failure = RuleFailure{static_cast<int>(plans.size()) + 1, used_p, std::string(to_string(*failed))};
        err << "extension failed: " << to_string(*failed) << "\n";
    }
    write_output(o.csv ? to_csv(next) : to_json(next), o.out, out);
    return failed ? chain_stopped : ok;
}

// --- moments ----------------------------------------------------------------

struct MomentsOptions {
    std::string dist;
    int count = -1;
    std::string out;
};

int run_moments(const MomentsOptions& o, std::ostream& out)
{
    if (o.dist.empty())
        throw CLI::ValidationError("--dist is required");
    if (o.count < 0)
        throw CLI::ValidationError("--count must be >= 0");
    const auto spec = DistributionSpec::parse(o.dist);
    write_output(moments_to_json(MomentSequence::from_distribution(spec, o.count)), o.out, out);
    return ok;
}

// --- verify -----------------------------------------------------------------

struct VerifyOptions {
    std::string document;
    std::string moments_file;
};

int run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err)
{
    RuleDocument doc = parse_rule_document(read_file(o.document));
    std::optional<MomentSequence> override_mu;
    if (!o.moments_file.empty())
        override_mu = load_moments(o.moments_file);
    const MomentSequence mu = document_moments(doc, override_mu);
    const VerifyReport report = verify_document(doc, mu);
    for (const auto& line : report.lines)
        out << line << "\n";
    if (!report.passed) {
        err << "verification failed: " << report.failed_check << ": " << report.detail << "\n";
        return verify_failed;
    }
    out << "verified " << doc.levels.size() << " level(s)\n";
    return ok;
}

} // namespace

MomentSequence document_moments(const RuleDocument& doc, const std::optional<MomentSequence>& override_moments)
{
    if (override_moments)
        return override_moments->with_domain(doc.domain);
    if (doc.distribution == "custom") {
        if (doc.moments.empty())
            throw RuleDocumentError("custom distribution without inline moments; pass --moments-file");
        nlohmann::json j;
        j["domain"] = {bound_to_string(doc.domain.lower(), false), bound_to_string(doc.domain.upper(), true)};
        j["moments"] = doc.moments;
        if (!doc.exact)
            j["precision"] = doc.precision;
        return parse_moments(j.dump());
    }
    const auto spec = DistributionSpec::parse(doc.distribution);
    int required = 0;
    int n = 0;
    for (const auto& level : doc.levels) {
        const int k = static_cast<int>(level.nodes.size());
        if (level.p)
            required = std::max(required, n + 2 * *level.p);
        n = k;
    }
    return MomentSequence::from_distribution(spec, moment_budget(required, n)).with_domain(doc.domain);
}

VerifyReport verify_document(const RuleDocument& doc, const MomentSequence& mu)
{
    VerifyReport report;
    auto fail = [&](const std::string& check, const std::string& detail) {
        report.passed = false;
        report.failed_check = check;
        report.detail = detail;
        report.lines.push_back("FAIL " + check + ": " + detail);
        return report;
    };
    auto pass = [&](const std::string& check) { report.lines.push_back("ok   " + check); };

    if (doc.levels.empty())
        return fail("structure", "no levels");
    const unsigned precision = doc.precision;
    const unsigned parse_digits = precision + 10;
    const Interval& domain = doc.domain;

    std::vector<NodePolynomial> polys;
    try {
        for (const auto& level : doc.levels) {
            if (doc.exact)
                polys.emplace_back(polynomial_from_strings(level.node_polynomial));
            else
                polys.emplace_back(parse_real_polynomial(level.node_polynomial, parse_digits));
        }
    } catch (const std::invalid_argument& e) {
        return fail("structure", e.what());
    }

    for (std::size_t i = 0; i < doc.levels.size(); ++i) {
        const auto& level = doc.levels[i];
        const int k = degree_of(polys[i]);
        if (k < 1 || static_cast<int>(level.nodes.size()) != k || static_cast<int>(level.weights.size()) != k)
            return fail("structure", "level " + std::to_string(level.level) + " has " + std::to_string(level.nodes.size())
                                         + " nodes, " + std::to_string(level.weights.size())
                                         + " weights, polynomial degree " + std::to_string(k));
        if (i > 0 && k <= degree_of(polys[i - 1]))
            return fail("structure", "node counts must increase");
    }
    pass("structure");

    // Guaranteed degrees follow from the level sizes alone.
    for (std::size_t i = 0; i < doc.levels.size(); ++i) {
        const auto& level = doc.levels[i];
        const int k = degree_of(polys[i]);
        const int n = i == 0 ? 0 : degree_of(polys[i - 1]);
        if (level.p && *level.p != k - n)
            return fail("structure", "level " + std::to_string(level.level) + " claims p = " + std::to_string(*level.p)
                                         + " but adds " + std::to_string(k - n) + " nodes");
        if (!level.p && i > 0)
            return fail("structure", "only the first level may be a starting formula");
        const int expected = level.p ? n + 2 * *level.p - 1 : k - 1;
        if (level.guaranteed_degree != expected)
            return fail("guaranteed_degree", "level " + std::to_string(level.level) + " states "
                                                 + std::to_string(level.guaranteed_degree) + ", expected "
                                                 + std::to_string(expected));
    }
    pass("guaranteed_degree");

    if (doc.exact) {
        std::vector<Polynomial> exact;
        for (const auto& p : polys)
            exact.push_back(std::get<Polynomial>(p));
        if (!polynomials_nested(exact))
            return fail("nestedness", "a node polynomial does not divide its successor");
        pass("nestedness");

        for (std::size_t i = 0; i < exact.size(); ++i) {
            const auto& level = doc.levels[i];
            const std::string name = "level " + std::to_string(level.level);
            if (!level.p) {
                if (count_real_roots(exact[i], domain) != exact[i].degree())
                    return fail("certificates", name + " starting polynomial lacks distinct roots in " + domain.to_string());
                continue;
            }
            const Polynomial prev = i == 0 ? Polynomial{Rational(1)} : exact[i - 1];
            const Polynomial g = divide(exact[i], prev).quotient;
            if (g.leading() != Rational(1))
                return fail("certificates", name + " extension factor is not monic");
            const auto outcome = classify_extension(prev, g, domain);
            if (!outcome.succeeded())
                return fail("certificates", name + ": " + std::string(to_string(outcome.failure_reason())));

            if (!mu.is_exact())
                continue;
            const int p = *level.p;
            if (prev.degree() + g.degree() + p - 1 > mu.max_index())
                return fail("orthogonality", name + " needs more moments");
            const Polynomial fg = prev * g;
            for (int j = 0; j < p; ++j) {
                Rational residual(0);
                const Polynomial term = fg * Polynomial::monomial(static_cast<std::size_t>(j));
                for (int m = 0; m <= term.degree(); ++m)
                    residual += term.coefficients()[static_cast<std::size_t>(m)] * mu.exact_moment(m);
                if (!residual.is_zero())
                    return fail("orthogonality", name + " residual " + std::to_string(j) + " = " + residual.to_string());
            }
        }
        pass("certificates");
        if (mu.is_exact())
            pass("orthogonality");
    }

    std::vector<QuadratureFormula> formulas;
    try {
        for (std::size_t i = 0; i < doc.levels.size(); ++i) {
            QuadratureFormula f;
            f.precision = precision;
            f.node_polynomial = polys[i];
            for (const auto& node : doc.levels[i].nodes)
                f.nodes.push_back(parse_real(node.value, parse_digits));
            for (const auto& w : doc.levels[i].weights)
                f.weights.push_back(parse_real(w, parse_digits));
            formulas.push_back(std::move(f));
        }
    } catch (const std::invalid_argument& e) {
        return fail("structure", e.what());
    }

    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const int k = static_cast<int>(formulas[i].size());
        if (k - 1 > mu.max_index())
            return fail("moment_reproduction", "not enough moments for level " + std::to_string(doc.levels[i].level));
        const int d = degree_of_exactness(formulas[i], mu, k - 1);
        if (d < k - 1)
            return fail("moment_reproduction", "level " + std::to_string(doc.levels[i].level) + " misses mu_"
                                                   + std::to_string(d + 1));
    }
    pass("moment_reproduction");

    {
        PrecisionScope scope(parse_digits);
        const Real tol = pow(Real(10), -static_cast<int>(precision > 5 ? precision - 5 : 1));
        for (std::size_t i = 0; i < formulas.size(); ++i) {
            std::vector<Real> roots;
            try {
                if (const auto* exact = std::get_if<Polynomial>(&polys[i])) {
                    for (const auto& r : real_roots(*exact, domain, parse_digits))
                        roots.push_back(r.value);
                } else {
                    roots = real_roots(std::get<RealPolynomial>(polys[i]), domain, parse_digits);
                }
            } catch (const std::domain_error& e) {
                return fail("node_roots", e.what());
            }
            for (std::size_t k = 0; k < roots.size(); ++k) {
                if (abs(roots[k] - formulas[i].nodes[k]) > tol * (1 + abs(roots[k])))
                    return fail("node_roots", "level " + std::to_string(doc.levels[i].level) + " node "
                                                  + std::to_string(k) + " differs from the root "
                                                  + format_real(roots[k], precision));
            }
        }
    }
    pass("node_roots");

    try {
        const NestedRule rule = assemble_nested_rule(formulas, doc.levels.front().level);
        for (std::size_t i = 0; i < formulas.size(); ++i)
            for (std::size_t k = 0; k < formulas[i].size(); ++k)
                if (rule.first_level[i][k] != doc.levels[i].nodes[k].first_level)
                    return fail("first_level", "level " + std::to_string(doc.levels[i].level) + " node "
                                                   + std::to_string(k) + " should first appear at level "
                                                   + std::to_string(rule.first_level[i][k]));
    } catch (const std::invalid_argument& e) {
        return fail("first_level", e.what());
    }
    pass("first_level");

    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const auto& level = doc.levels[i];
        const int d = degree_of_exactness(formulas[i], mu, mu.max_index());
        if (d != level.verified_degree)
            return fail("verified_degree", "level " + std::to_string(level.level) + " stores "
                                               + std::to_string(level.verified_degree) + ", measured "
                                               + std::to_string(d));
        if (d < level.guaranteed_degree)
            return fail("verified_degree", "level " + std::to_string(level.level) + " measured " + std::to_string(d)
                                               + " below the guaranteed " + std::to_string(level.guaranteed_degree));
    }
    pass("verified_degree");
    return report;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Nested quadrature rules from moment sequences", "nestquad"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Build a nested rule by repeated extension");
    add_source_options(generate, gen.source);
    generate->add_option("--precision", gen.precision, "Output digits")->capture_default_str();
    generate->add_option("--schedule", gen.schedule, "Nodes added per step, e.g. 1,2,4,6,12")->delimiter(',');
    generate->add_flag("--gkp", gen.gkp, "Start from the domain centre and add n+1 nodes per step");
    generate->add_option("--iterations", gen.iterations, "Number of --gkp steps");
    generate->add_option("--out", gen.out, "Output path (default stdout)");
    generate->add_flag("--csv", gen.csv, "Write the top level as a node,weight,first_level table");
    generate->add_option("--description", gen.description, "Free-text description stored in the document");

    ExtendOptions ext;
    auto* extend_cmd = app.add_subcommand("extend", "Add one extension step to an existing rule document");
    extend_cmd->add_option("document", ext.document, "Rule document")->required();
    extend_cmd->add_option("--p", ext.p, "Candidate p values, tried in order")->delimiter(',')->required();
    extend_cmd->add_option("--moments-file", ext.moments_file, "Moments to use instead of the document's");
    extend_cmd->add_option("--out", ext.out, "Output path (default stdout)");
    extend_cmd->add_flag("--csv", ext.csv, "Write the top level as a table");

    VerifyOptions ver;
    auto* verify = app.add_subcommand("verify", "Re-certify a rule document from scratch");
    verify->add_option("document", ver.document, "Rule document")->required();
    verify->add_option("--moments-file", ver.moments_file, "Moments for custom documents without inline moments");

    MomentsOptions mom;
    auto* moments_cmd = app.add_subcommand("moments", "Write the moments of a built-in distribution");
    moments_cmd->add_option("--dist", mom.dist, "Built-in distribution");
    moments_cmd->add_option("--count", mom.count, "Highest moment index");
    moments_cmd->add_option("--out", mom.out, "Output path (default stdout)");

    std::vector<std::string> args = normalize_args(raw_args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return usage_error;
    }

    try {
        if (*generate)
            return run_generate(gen, out, err);
        if (*extend_cmd)
            return run_extend(ext, out, err);
        if (*verify)
            return run_verify(ver, out, err);
        if (*moments_cmd)
            return run_moments(mom, out);
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return usage_error;
    } catch (const RuleDocumentError& e) {
        err << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

} // namespace nestquad::cli
