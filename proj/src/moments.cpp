#include "nestquad/moments.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "nestquad/exact_linear.hpp"

namespace nestquad {

namespace {

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

std::string lower_case(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool is_rational_text(const std::string& s)
{
    try {
        Rational::parse(s);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

unsigned mantissa_digits(const std::string& s)
{
    unsigned n = 0;
    bool leading = true;
    for (char c : s) {
        if (c == 'e' || c == 'E')
            break;
        if (!std::isdigit(static_cast<unsigned char>(c)))
            continue;
        if (leading && c == '0')
            continue;
        leading = false;
        ++n;
    }
    return n;
}

} // namespace

DistributionSpec DistributionSpec::uniform(Rational a, Rational b)
{
    if (!(a < b))
        throw std::invalid_argument("uniform distribution requires a < b");
    return {Family::uniform, std::move(a), std::move(b)};
}

DistributionSpec DistributionSpec::beta(Rational alpha, Rational beta)
{
    if (alpha.sign() <= 0 || beta.sign() <= 0)
        throw std::invalid_argument("beta distribution requires alpha, beta > 0");
    return {Family::beta, std::move(alpha), std::move(beta)};
}

DistributionSpec DistributionSpec::gaussian()
{
    return {Family::gaussian, Rational(0), Rational(1)};
}

DistributionSpec DistributionSpec::parse(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string family = lower_case(text.substr(0, colon));
    std::vector<std::string> params;
    if (colon != std::string_view::npos)
        params = split(text.substr(colon + 1), ',');

    auto two_params = [&](const char* name) {
        if (params.size() != 2)
            throw std::invalid_argument(std::string(name) + " needs two parameters, e.g. " + name + ":1/2,1/2");
        return std::pair{Rational::parse(params[0]), Rational::parse(params[1])};
    };

    if (family == "uniform") {
        auto [a, b] = two_params("uniform");
        return uniform(std::move(a), std::move(b));
    }
    if (family == "beta") {
        auto [a, b] = two_params("beta");
        return beta(std::move(a), std::move(b));
    }
    if (family == "gauss" || family == "gaussian" || family == "normal") {
        if (!params.empty() && !(params.size() == 2 && Rational::parse(params[0]) == Rational(0)
                                 && Rational::parse(params[1]) == Rational(1)))
            throw std::invalid_argument("only the standard normal gauss:0,1 is supported");
        return gaussian();
    }
    throw std::invalid_argument("unknown distribution family \"" + family + "\"");
}

std::string DistributionSpec::to_string() const
{
    switch (family) {
    case Family::uniform:
        return "uniform:" + first.to_string() + "," + second.to_string();
    case Family::beta:
        return "beta:" + first.to_string() + "," + second.to_string();
    case Family::gaussian:
        return "gauss";
    }
    return {};
}

Interval DistributionSpec::domain() const
{
    switch (family) {
    case Family::uniform:
        return Interval::closed(first, second);
    case Family::beta:
        return Interval::closed(Rational(0), Rational(1));
    case Family::gaussian:
        return Interval::real_line();
    }
    return {};
}

Rational moment(const DistributionSpec& spec, int k)
{
    if (k < 0)
        throw std::invalid_argument("moment index must be non-negative");
    switch (spec.family) {
    case DistributionSpec::Family::uniform: {
        const auto& a = spec.first;
        const auto& b = spec.second;
        const auto e = static_cast<unsigned>(k + 1);
        return (pow(b, e) - pow(a, e)) / (Rational(k + 1) * (b - a));
    }
    case DistributionSpec::Family::beta: {
        Rational m(1);
        for (int i = 0; i < k; ++i)
            m *= (spec.first + Rational(i)) / (spec.first + spec.second + Rational(i));
        return m;
    }
    case DistributionSpec::Family::gaussian: {
        if (k % 2 == 1)
            return Rational(0);
        Rational m(1);
        for (int i = k - 1; i > 1; i -= 2)
            m *= Rational(i);
        return m;
    }
    }
    return Rational(0);
}

MomentSequence MomentSequence::exact(Interval domain, std::vector<Rational> moments)
{
    if (moments.empty())
        throw std::invalid_argument("moment sequence needs at least mu_0");
    if (moments.front() != Rational(1))
        throw std::invalid_argument("mu_0 must equal 1, got " + moments.front().to_string());
    MomentSequence s;
    s.domain_ = std::move(domain);
    s.kind_ = Kind::exact;
    s.exact_ = std::move(moments);
    return s;
}

MomentSequence MomentSequence::approximate(Interval domain, std::vector<std::string> moments, unsigned precision)
{
    if (moments.empty())
        throw std::invalid_argument("moment sequence needs at least mu_0");
    if (precision == 0)
        throw std::invalid_argument("approximate moments need a positive precision");
    for (const auto& m : moments)
        parse_real(m, precision);
    const Real mu0 = parse_real(moments.front(), precision);
    if (abs(mu0 - Real(1)) > pow(Real(10), -static_cast<int>(precision) + 1))
        throw std::invalid_argument("mu_0 must equal 1, got " + moments.front());
    MomentSequence s;
    s.domain_ = std::move(domain);
    s.kind_ = Kind::approximate;
    s.text_ = std::move(moments);
    s.precision_ = precision;
    return s;
}

MomentSequence MomentSequence::from_distribution(const DistributionSpec& spec, int max_index)
{
    if (max_index < 0)
        throw std::invalid_argument("max_index must be non-negative");
    std::vector<Rational> m;
    m.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int k = 0; k <= max_index; ++k)
        m.push_back(moment(spec, k));
    return exact(spec.domain(), std::move(m));
}

int MomentSequence::max_index() const
{
    return static_cast<int>(is_exact() ? exact_.size() : text_.size()) - 1;
}

const Rational& MomentSequence::exact_moment(int k) const
{
    if (!is_exact())
        throw std::logic_error("exact moment requested from an approximate sequence");
    if (k < 0 || k > max_index())
        throw std::out_of_range("moment index " + std::to_string(k) + " beyond max_index " + std::to_string(max_index()));
    return exact_[static_cast<std::size_t>(k)];
}

Real MomentSequence::real_moment(int k, unsigned digits10) const
{
    if (k < 0 || k > max_index())
        throw std::out_of_range("moment index " + std::to_string(k) + " beyond max_index " + std::to_string(max_index()));
    if (is_exact())
        return to_real(exact_[static_cast<std::size_t>(k)], digits10);
    return parse_real(text_[static_cast<std::size_t>(k)], digits10);
}

std::vector<Real> MomentSequence::real_moments(int count, unsigned digits10) const
{
    std::vector<Real> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int k = 0; k < count; ++k)
        out.push_back(real_moment(k, digits10));
    return out;
}

std::string MomentSequence::moment_text(int k) const
{
    if (is_exact())
        return exact_moment(k).to_string();
    if (k < 0 || k > max_index())
        throw std::out_of_range("moment index out of range");
    return text_[static_cast<std::size_t>(k)];
}

MomentSequence MomentSequence::truncated(int max_index) const
{
    if (max_index < 0 || max_index > this->max_index())
        throw std::out_of_range("cannot truncate beyond the available moments");
    MomentSequence s = *this;
    if (is_exact())
        s.exact_.resize(static_cast<std::size_t>(max_index) + 1);
    else
        s.text_.resize(static_cast<std::size_t>(max_index) + 1);
    return s;
}

MomentSequence MomentSequence::with_domain(Interval domain) const
{
    MomentSequence s = *this;
    s.domain_ = std::move(domain);
    return s;
}

bool MomentSequence::hankel_positive() const
{
    const int m = max_index() / 2;
    RationalMatrix h(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            h[static_cast<std::size_t>(i)].push_back(exact_moment(i + j));
    const auto minors = leading_principal_minors(h);
    return std::all_of(minors.begin(), minors.end(), [](const Rational& d) { return d.sign() > 0; });
}

MomentSequence parse_moments(std::string_view json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("moments file is not valid JSON: ") + e.what());
    }

    try {
        if (!doc.is_object() || !doc.contains("moments") || !doc.contains("domain"))
            throw std::runtime_error("moments file needs \"domain\" and \"moments\" fields");
        const auto& dom = doc.at("domain");
        if (!dom.is_array() || dom.size() != 2)
            throw std::runtime_error("\"domain\" must be a two-element array");
        Interval domain(parse_bound(dom[0].get<std::string>()), parse_bound(dom[1].get<std::string>()));

        std::vector<std::string> entries;
        for (const auto& m : doc.at("moments")) {
            if (m.is_string())
                entries.push_back(m.get<std::string>());
            else if (m.is_number_integer())
                entries.push_back(std::to_string(m.get<long long>()));
            else
                throw std::runtime_error("moments must be strings (\"p/q\" or decimal)");
        }
        if (entries.empty())
            throw std::runtime_error("moments file lists no moments");

        const bool all_exact = std::all_of(entries.begin(), entries.end(), is_rational_text);
        if (all_exact) {
            std::vector<Rational> exact;
            exact.reserve(entries.size());
            for (const auto& e : entries)
                exact.push_back(Rational::parse(e));
            return MomentSequence::exact(std::move(domain), std::move(exact));
        }

        unsigned precision = 0;
        if (doc.contains("precision")) {
            precision = doc.at("precision").get<unsigned>();
        } else {
            for (const auto& e : entries)
                precision = std::max(precision, mantissa_digits(e));
            precision = std::max(precision, 16u);
        }
        return MomentSequence::approximate(std::move(domain), std::move(entries), precision);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed moments file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("malformed moments file: ") + e.what());
    }
}

MomentSequence load_moments(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open moments file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_moments(buffer.str());
}

std::string moments_to_json(const MomentSequence& moments)
{
    nlohmann::ordered_json doc;
    doc["domain"] = {bound_to_string(moments.domain().lower(), false),
                     bound_to_string(moments.domain().upper(), true)};
    if (!moments.is_exact())
        doc["precision"] = moments.precision();
    auto list = nlohmann::ordered_json::array();
    for (int k = 0; k <= moments.max_index(); ++k)
        list.push_back(moments.moment_text(k));
    doc["moments"] = std::move(list);
    return doc.dump(2) + "\n";
}

} // namespace nestquad
