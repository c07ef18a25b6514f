#include "signpat/json_io.hpp"

namespace signpat {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw PreconditionError(std::string("JSON document lacks field \"") + key + "\"");
    return j.at(key);
}

std::size_t order_field(const json& j)
{
    const auto& n = field(j, "n");
    if (!n.is_number_integer() || n.get<long long>() < 1)
        throw PreconditionError("\"n\" must be a positive integer");
    return n.get<std::size_t>();
}

Rational rational_from_json(const json& v)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long>());
    if (v.is_number())
        return rational_from_double(v.get<double>());
    throw PreconditionError("expected a number or a \"p/q\" string");
}

double double_from_json(const json& v)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string())
        return parse_rational(v.get<std::string>()).get_d();
    throw PreconditionError("expected a number or a \"p/q\" string");
}

template <typename Scalar, typename Convert>
std::vector<Scalar> flat_entries(const json& j, std::size_t n, Convert convert)
{
    const auto& rows = field(j, "entries");
    if (!rows.is_array() || rows.size() != n)
        throw PreconditionError("\"entries\" must hold n rows");
    std::vector<Scalar> out;
    out.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n)
            throw PreconditionError("every matrix row must hold n entries");
        for (const auto& v : row)
            out.push_back(convert(v));
    }
    return out;
}

template <typename Scalar, typename Convert>
std::vector<Scalar> coefficient_list(const json& j, Convert convert)
{
    const auto& c = field(j, "coeffs");
    if (!c.is_array() || c.empty())
        throw PreconditionError("\"coeffs\" must be a nonempty array");
    std::vector<Scalar> out;
    for (const auto& v : c)
        out.push_back(convert(v));
    return out;
}

json matrix_rows(std::size_t n, auto&& cell)
{
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(cell(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json to_json(const SignPattern& p)
{
    return {{"n", p.order()}, {"rows", p.rows()}};
}

SignPattern pattern_from_json(const json& j)
{
    const std::size_t n = order_field(j);
    const auto& rows = field(j, "rows");
    if (!rows.is_array() || rows.size() != n)
        throw PreconditionError("\"rows\" must hold n strings");
    std::vector<std::string> r;
    for (const auto& row : rows) {
        if (!row.is_string())
            throw PreconditionError("pattern rows must be strings");
        r.push_back(row.get<std::string>());
    }
    return SignPattern::from_rows(r);
}

json to_json(const FloatMatrix& m)
{
    return {{"n", m.order()}, {"entries", matrix_rows(m.order(), [&](auto i, auto j) { return m(i, j); })}};
}

json to_json(const RationalMatrix& m)
{
    return {{"n", m.order()},
            {"entries", matrix_rows(m.order(), [&](auto i, auto j) { return format_rational(m(i, j)); })}};
}

FloatMatrix float_matrix_from_json(const json& j)
{
    const std::size_t n = order_field(j);
    return FloatMatrix(n, flat_entries<double>(j, n, double_from_json));
}

RationalMatrix rational_matrix_from_json(const json& j)
{
    const std::size_t n = order_field(j);
    return RationalMatrix(n, flat_entries<Rational>(j, n, rational_from_json));
}

json to_json(const FloatPolynomial& p)
{
    return {{"coeffs", std::vector<double>(p.coeffs().begin(), p.coeffs().end())}};
}

json to_json(const RationalPolynomial& p)
{
    json c = json::array();
    for (const auto& x : p.coeffs())
        c.push_back(format_rational(x));
    return {{"coeffs", c}};
}

RationalPolynomial rational_polynomial_from_json(const json& j)
{
    return RationalPolynomial(coefficient_list<Rational>(j, rational_from_json));
}

FloatPolynomial float_polynomial_from_json(const json& j)
{
    return FloatPolynomial(coefficient_list<double>(j, double_from_json));
}

bool polynomial_json_is_rational(const json& j)
{
    for (const auto& v : field(j, "coeffs"))
        if (v.is_string())
            return true;
    return false;
}

json to_json(const RefinedInertia& nu)
{
    return {{"n_plus", nu.n_plus}, {"n_minus", nu.n_minus}, {"n_zero", nu.n_zero}, {"n_imag", nu.n_imag}};
}

json to_json(const std::vector<Quadratic<double>>& quads)
{
    json out = json::array();
    for (const auto& q : quads)
        out.push_back({{"a", q.a}, {"b", q.b}});
    return out;
}

json to_json(const RealizationPlan& plan)
{
    json layout = json::array();
    for (auto k : plan.layout)
        layout.push_back(k == BlockKind::T ? "T" : "D");
    json targets = json::array();
    for (const auto& p : plan.block_targets)
        targets.push_back(to_json(p));
    json classes = json::array();
    for (auto c : plan.triple_classes)
        classes.push_back(to_string(c));
    return {{"t", plan.t}, {"d", plan.d}, {"layout", layout}, {"block_targets", targets},
            {"triple_classes", classes}};
}

namespace {

template <typename Scalar>
json report_json(const RealizationReport<Scalar>& rep)
{
    return {{"matrix", to_json(rep.matrix)},
            {"pattern", to_json(rep.pattern)},
            {"target", to_json(rep.target)},
            {"residual", rep.residual},
            {"perturbation", rep.perturbation},
            {"exact_factors", rep.exact_factors},
            {"plan", to_json(rep.plan)}};
}

}  // namespace

json to_json(const RealizationReport<double>& rep)
{
    auto j = report_json(rep);
    j["backend"] = "float";
    return j;
}

json to_json(const RealizationReport<Rational>& rep)
{
    auto j = report_json(rep);
    j["backend"] = "rational";
    return j;
}

json to_json(const IdentityCheckReport& rep)
{
    json j = {{"pattern", to_json(rep.pattern)},
              {"samples", rep.samples},
              {"seed", rep.seed},
              {"all_passed", rep.all_passed},
              {"trace_zero_samples", rep.trace_zero_samples},
              {"first_failure", nullptr}};
    if (rep.first_failure)
        j["first_failure"] = to_json(*rep.first_failure);
    return j;
}

json to_json(const Obs12Report& rep)
{
    json factors = json::array();
    for (const auto& f : rep.factors)
        factors.push_back(to_json(f));
    json divisors = json::array();
    for (const auto& d : rep.divisors)
        divisors.push_back({{"divisor", to_json(d.divisor)},
                            {"a3", format_rational(d.divisor[3])},
                            {"a5", format_rational(d.divisor[5])},
                            {"violates", d.violates}});
    return {{"f", to_json(rep.f)}, {"factors", factors}, {"divisors", divisors},
            {"divisor_count", rep.divisors.size()}, {"passed", rep.passed}};
}

json to_json(const PartReport& rep)
{
    json evidence = json::array();
    for (const auto& e : rep.evidence)
        evidence.push_back({{"name", e.name}, {"kind", e.kind}, {"passed", e.passed}, {"detail", e.detail}});
    return {{"claim", rep.claim}, {"passed", rep.passed()}, {"evidence", evidence}};
}

json to_json(const TheoremReport& rep)
{
    return {{"part1", to_json(rep.part1)},
            {"part2", to_json(rep.part2)},
            {"part3", to_json(rep.part3)},
            {"passed", rep.passed()}};
}

json to_json(const InertiaTDRealization& rep)
{
    return {{"matrix", to_json(rep.matrix)},
            {"t_block_inertia", to_json(rep.t_part.mu)},
            {"t_block_target", to_json(rep.t_part.target)},
            {"multiplier", rep.t_part.multiplier},
            {"d_block_inertia", to_json(rep.remainder)},
            {"d_block_target", to_json(rep.d_target)}};
}

}  // namespace signpat
