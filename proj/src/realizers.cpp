#include "signpat/realizers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace signpat {

namespace {

template <typename Scalar>
Scalar larger(const Scalar& a, const Scalar& b)
{
    return a < b ? b : a;
}

template <typename Scalar>
void require_positive(const XParams<Scalar>& p, const char* who)
{
    if (!p.all_positive())
        throw std::logic_error(std::string(who) + ": parameter bound produced a nonpositive x_i");
}

}  // namespace

template <typename Scalar>
Matrix<Scalar> x_template_matrix(const XParams<Scalar>& p)
{
    const Scalar o(0);
    const Scalar i(1);
    return Matrix<Scalar>(6, {
        p(1),  i,     o,    o, o,     o,
        -p(4), -p(2), i,    o, o,     o,
        o,     o,     o,    i, o,     o,
        o,     o,     o,    o, i,     o,
        -p(6), -p(5), o,    o, o,     i,
        p(7),  p(8),  p(9), o, -p(3), o,
    });
}

template <typename Scalar>
Matrix<Scalar> realize_quadratic_D(const Scalar& p1, const Scalar& p0)
{
    const Scalar alpha = abs_value(p1) + abs_value(p0) + Scalar(2);
    const Scalar delta = alpha + p1;
    const Scalar beta(1);
    const Scalar gamma = p0 + alpha * delta;
    return Matrix<Scalar>(2, {alpha, beta, Scalar(-gamma), Scalar(-delta)});
}

template <typename Scalar>
XParams<Scalar> complete_product_params(const Scalar& b, const Scalar& c, const Scalar& d, const Scalar& x1,
                                        const Scalar& x3, const Scalar& x8, const Scalar& x9)
{
    const Scalar e1 = b + c + d;
    const Scalar e2 = b * c + b * d + c * d;
    const Scalar e3 = b * c * d;
    XParams<Scalar> p;
    p.x[0] = x1;
    p.x[1] = x1;
    p.x[2] = x3;
    p.x[3] = e1 + x1 * x1 - x3;
    p.x[4] = e2 - e1 * x3 + x3 * x3 + x9;
    p.x[5] = e2 * x1 - e1 * x1 * x3 + x1 * x3 * x3 + x8 + x1 * x9;
    p.x[6] = -e3 + x1 * x8 - e1 * x9 + x3 * x9;
    p.x[7] = x8;
    p.x[8] = x9;
    return p;
}

template <typename Scalar>
TBlockRealization<Scalar> realize_obs2(const Scalar& b, const Scalar& c, const Scalar& d)
{
    const Scalar one(1);
    const Scalar e1 = b + c + d;
    const Scalar e2 = b * c + b * d + c * d;
    const Scalar e3 = b * c * d;
    const Scalar x3 = one;
    const Scalar x1 = one + sqrt_upper(Scalar(one - e1));
    // x5 = (e2 - e1 + 1) + x9 >= 1
    const Scalar x9 = larger(one, Scalar(one - (e2 - e1 + one)));
    // x7 = -e3 + x1 x8 - e1 x9 + x9 >= 1
    const Scalar x8 = larger(one, Scalar((one + e3 + e1 * x9 - x9) / x1));
    auto params = complete_product_params(b, c, d, x1, x3, x8, x9);
    require_positive(params, "realize_obs2");
    auto m = x_template_matrix(params);
    return {std::move(params), std::move(m)};
}

template <typename Scalar>
XParams<Scalar> complete_general_params(const Polynomial<Scalar>& target, const Scalar& x1, const Scalar& x8,
                                        const Scalar& x9)
{
    if (target.degree() != 6)
        throw PreconditionError("general T realization needs a degree-6 target");
    const Scalar& a0 = target[0];
    const Scalar& a1 = target[1];
    const Scalar& a2 = target[2];
    const Scalar& a3 = target[3];
    const Scalar& a4 = target[4];
    const Scalar& a5 = target[5];
    if (a5 == 0)
        throw GateError("general T realization needs a5 != 0");
    const Scalar r = a3 / a5;
    XParams<Scalar> p;
    p.x[0] = x1;
    p.x[1] = a5 + x1;
    p.x[2] = r;
    p.x[3] = -r + a4 + a5 * x1 + x1 * x1;
    p.x[4] = r * r - r * a4 + a2 + x9;
    p.x[5] = a1 + x1 * r * r - r * a4 * x1 + a2 * x1 + x8 + a5 * x9 + x1 * x9;
    p.x[6] = -a0 + x1 * x8 + r * x9 - a4 * x9;
    p.x[7] = x8;
    p.x[8] = x9;
    return p;
}

template <typename Scalar>
bool passes_T_gate(const Polynomial<Scalar>& target)
{
    if (target.degree() != 6)
        throw PreconditionError("T gate applies to degree-6 targets");
    const Scalar& a3 = target[3];
    const Scalar& a5 = target[5];
    return a5 != 0 && sign_of(a3) * sign_of(a5) > 0;
}

template <typename Scalar>
bool satisfies_T_necessary_condition(const Polynomial<Scalar>& target)
{
    if (target.degree() != 6)
        throw PreconditionError("T realizability condition applies to degree-6 targets");
    const int s3 = sign_of(target[3]);
    const int s5 = sign_of(target[5]);
    return (s3 == 0 && s5 == 0) || s3 * s5 > 0;
}

template <typename Scalar>
TBlockRealization<Scalar> realize_obs3(const Polynomial<Scalar>& target)
{
    if (target.degree() != 6)
        throw PreconditionError("realize_obs3 needs a degree-6 target");
    if (!passes_T_gate(target))
        throw GateError("realize_obs3 needs a5 != 0 and a3/a5 > 0");
    const Scalar one(1);
    const Scalar& a0 = target[0];
    const Scalar& a1 = target[1];
    const Scalar& a2 = target[2];
    const Scalar& a4 = target[4];
    const Scalar& a5 = target[5];
    const Scalar r = target[3] / a5;

    // x4 = x1 (x1 + a5) + (a4 - r) > 0 and x2 = x1 + a5 > 0
    const Scalar x1 = one + abs_value(a5) + sqrt_upper(Scalar(r - a4));
    // x5 = (r^2 - r a4 + a2) + x9 >= 1
    const Scalar x9 = larger(one, Scalar(one - (r * r - r * a4 + a2)));
    // x6 = base6 + x8 >= 1 and x7 = x1 x8 + (r x9 - a4 x9 - a0) >= 1
    const Scalar base6 = a1 + x1 * r * r - r * a4 * x1 + a2 * x1 + a5 * x9 + x1 * x9;
    const Scalar x8 = larger(larger(one, Scalar(one - base6)), Scalar((one + a0 - r * x9 + a4 * x9) / x1));
    auto params = complete_general_params(target, x1, x8, x9);
    require_positive(params, "realize_obs3");
    auto m = x_template_matrix(params);
    return {std::move(params), std::move(m)};
}

std::string to_string(QuadraticClass c)
{
    switch (c) {
    case QuadraticClass::Zero: return "zero";
    case QuadraticClass::Positive: return "positive";
    case QuadraticClass::Negative: return "negative";
    }
    return "?";
}

template <typename Scalar>
TripleSelection<Scalar> select_T_triple(std::vector<Quadratic<Scalar>> quads, const Scalar& eps_zero)
{
    if (quads.size() < 8)
        throw PreconditionError("select_T_triple needs at least 8 quadratics");
    if (count_negative_b(quads) > 1)
        throw PreconditionError("select_T_triple allows at most one quadratic with b < 0");

    std::array<std::vector<std::size_t>, 3> classes;  // zero, positive, negative
    double snapped = 0.0;
    for (std::size_t i = 0; i < quads.size(); ++i) {
        auto& q = quads[i];
        if (q.b < 0)
            continue;
        if (abs_value(q.a) <= eps_zero) {
            snapped = std::max(snapped, to_double(abs_value(q.a)));
            q.a = Scalar(0);
            classes[0].push_back(i);
        } else if (q.a > 0) {
            classes[1].push_back(i);
        } else {
            classes[2].push_back(i);
        }
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < 3; ++c)
        if (classes[c].size() > classes[best].size())
            best = c;
    if (classes[best].size() < 3)
        throw std::logic_error("select_T_triple: pigeonhole violated");

    TripleSelection<Scalar> out;
    out.cls = static_cast<QuadraticClass>(best);
    out.snapped = snapped;
    std::vector<bool> taken(quads.size(), false);
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t idx = classes[best][k];
        out.triple[k] = quads[idx];
        taken[idx] = true;
    }
    for (std::size_t i = 0; i < quads.size(); ++i)
        if (!taken[i])
            out.rest.push_back(quads[i]);
    return out;
}

BlockLayout layout_V(int t, int d)
{
    if (t < 0 || d < 0 || t + d < 1)
        throw PreconditionError("V(t,d) needs t >= 0, d >= 0 and t + d >= 1");
    BlockLayout layout(static_cast<std::size_t>(t), BlockKind::T);
    layout.insert(layout.end(), static_cast<std::size_t>(d), BlockKind::D);
    return layout;
}

BlockLayout layout_repeat(const BlockLayout& unit, int copies)
{
    BlockLayout out;
    for (int i = 0; i < copies; ++i)
        out.insert(out.end(), unit.begin(), unit.end());
    return out;
}

SignPattern layout_pattern(const BlockLayout& layout)
{
    const auto t = builtin_pattern({PatternName::Kind::T});
    const auto d = builtin_pattern({PatternName::Kind::D});
    std::vector<SignPattern> blocks;
    for (auto k : layout)
        blocks.push_back(k == BlockKind::T ? t : d);
    return block_diag(blocks);
}

std::size_t layout_order(const BlockLayout& layout)
{
    std::size_t n = 0;
    for (auto k : layout)
        n += k == BlockKind::T ? 6 : 2;
    return n;
}

namespace {

struct BlockBuild {
    RationalMatrix matrix;
    RealizationPlan plan;
    double perturbation = 0.0;
};

Quadratic<Rational> exact_quadratic(const Quadratic<double>& q)
{
    return {rational_from_double(q.a), rational_from_double(q.b)};
}

void check_layout(std::size_t degree, const BlockLayout& layout, int& t, int& d)
{
    t = static_cast<int>(std::count(layout.begin(), layout.end(), BlockKind::T));
    d = static_cast<int>(layout.size()) - t;
    if (layout.empty())
        throw PreconditionError("block layout is empty");
    if (d < 5)
        throw PreconditionError("d must be at least 5 (got " + std::to_string(d) + ")");
    if (degree != layout_order(layout))
        throw PreconditionError("degree must equal 6t + 2d = " + std::to_string(layout_order(layout)) +
                                " (got " + std::to_string(degree) + ")");
}

// The quadratics multiply to the target (up to root-finding error); build the
// block matrices exactly.
BlockBuild build_blocks(std::vector<Quadratic<Rational>> quads, const BlockLayout& layout, const Rational& eps_zero)
{
    BlockBuild out{RationalMatrix::zero(1), {}, 0.0};
    out.plan.layout = layout;
    out.plan.t = static_cast<int>(std::count(layout.begin(), layout.end(), BlockKind::T));
    out.plan.d = static_cast<int>(layout.size()) - out.plan.t;

    std::vector<RationalMatrix> t_blocks;
    std::vector<RationalPolynomial> t_targets;
    for (int k = 0; k < out.plan.t; ++k) {
        auto sel = select_T_triple(std::move(quads), eps_zero);
        quads = std::move(sel.rest);
        out.perturbation = std::max(out.perturbation, sel.snapped);
        const auto& tr = sel.triple;
        RationalPolynomial target = poly_mul(poly_mul(to_polynomial(tr[0]), to_polynomial(tr[1])),
                                             to_polynomial(tr[2]));
        if (sel.cls == QuadraticClass::Zero)
            t_blocks.push_back(realize_obs2(tr[0].b, tr[1].b, tr[2].b).matrix);
        else
            t_blocks.push_back(realize_obs3(target).matrix);
        t_targets.push_back(std::move(target));
        out.plan.triple_classes.push_back(sel.cls);
    }

    std::vector<RationalMatrix> blocks;
    std::size_t next_t = 0;
    std::size_t next_d = 0;
    for (auto kind : layout) {
        if (kind == BlockKind::T) {
            blocks.push_back(t_blocks[next_t]);
            out.plan.block_targets.push_back(t_targets[next_t]);
            ++next_t;
        } else {
            const auto& q = quads[next_d++];
            blocks.push_back(realize_quadratic_D(q.a, q.b));
            out.plan.block_targets.push_back(to_polynomial(q));
        }
    }
    out.matrix = block_diag(blocks);
    return out;
}

Rational default_eps_zero(double max_coeff)
{
    return rational_from_double(1e-9 * (1.0 + max_coeff));
}

// Continued-fraction rounding of each coefficient; accepted only if the
// product reproduces f exactly.
std::optional<std::vector<Quadratic<Rational>>> exact_factors(const std::vector<Quadratic<double>>& quads,
                                                              const RationalPolynomial& f)
{
    constexpr long kMaxDenominator = 1L << 20;
    std::vector<Quadratic<Rational>> out;
    auto prod = RationalPolynomial::one();
    for (const auto& q : quads) {
        Quadratic<Rational> r{rationalize(q.a, kMaxDenominator), rationalize(q.b, kMaxDenominator)};
        prod = poly_mul(prod, to_polynomial(r));
        out.push_back(std::move(r));
    }
    if (prod != f)
        return std::nullopt;
    return out;
}

}  // namespace

RealizationReport<double> realize_layout(const FloatPolynomial& f, const BlockLayout& layout, double tol)
{
    int t = 0;
    int d = 0;
    check_layout(f.degree(), layout, t, d);
    const auto quads = roots_to_quadratics(find_roots(f, tol));
    std::vector<Quadratic<Rational>> exact;
    for (const auto& q : quads)
        exact.push_back(exact_quadratic(q));
    auto build = build_blocks(std::move(exact), layout, default_eps_zero(max_abs_coeff(f)));

    FloatMatrix m = to_float(build.matrix);
    SignPattern pattern = layout_pattern(layout);
    if (!conforms(m, pattern))
        throw std::logic_error("realize_layout: rounding changed an entry's sign");
    const double residual = relative_coefficient_error(exact_char_poly(m), to_rational(f));
    return {std::move(m), std::move(pattern), f, residual, build.perturbation, std::move(build.plan), false};
}

RealizationReport<Rational> realize_layout(const RationalPolynomial& f, const BlockLayout& layout, double tol)
{
    int t = 0;
    int d = 0;
    check_layout(f.degree(), layout, t, d);
    const auto quads = roots_to_quadratics(find_roots(to_float(f), tol));
    auto rational_quads = exact_factors(quads, f);
    const bool exact = rational_quads.has_value();
    if (!exact) {
        rational_quads.emplace();
        for (const auto& q : quads)
            rational_quads->push_back(exact_quadratic(q));
    }
    // Exact factors classify with eps 0 so the zero class means a == 0.
    const Rational eps = exact ? Rational(0) : default_eps_zero(max_abs_coeff(f));
    auto build = build_blocks(std::move(*rational_quads), layout, eps);

    SignPattern pattern = layout_pattern(layout);
    if (!conforms(build.matrix, pattern))
        throw std::logic_error("realize_layout: constructed matrix does not conform");
    const double residual = relative_coefficient_error(char_poly_blockwise(build.matrix), f);
    return {std::move(build.matrix), std::move(pattern), f, residual, build.perturbation, std::move(build.plan),
            exact};
}

RationalPolynomial d_block_polynomial(const RefinedInertia& rho)
{
    auto poly = [](long c0, long c1) { return RationalPolynomial({Rational(c0), Rational(c1), Rational(1)}); };
    if (rho == RefinedInertia{0, 0, 2, 0}) return poly(0, 0);    // t^2
    if (rho == RefinedInertia{0, 0, 0, 1}) return poly(1, 0);    // t^2 + 1
    if (rho == RefinedInertia{1, 1, 0, 0}) return poly(-1, 0);   // (t-1)(t+1)
    if (rho == RefinedInertia{2, 0, 0, 0}) return poly(1, -2);   // (t-1)^2
    if (rho == RefinedInertia{0, 2, 0, 0}) return poly(1, 2);    // (t+1)^2
    if (rho == RefinedInertia{1, 0, 1, 0}) return poly(0, -1);   // t(t-1)
    if (rho == RefinedInertia{0, 1, 1, 0}) return poly(0, 1);    // t(t+1)
    throw PreconditionError("no D block has refined inertia " + to_string(rho));
}

namespace {

// Remainder of total 2 left to the D block when the T block has to carry at
// least three eigenvalues off the imaginary axis.
RefinedInertia d_share(const RefinedInertia& nu)
{
    if (nu.n_imag >= 1) return {0, 0, 0, 1};
    if (nu.n_zero >= 2) return {0, 0, 2, 0};
    if (nu.n_zero == 1) return nu.n_plus >= 1 ? RefinedInertia{1, 0, 1, 0} : RefinedInertia{0, 1, 1, 0};
    if (nu.n_plus >= 1 && nu.n_minus >= 1) return {1, 1, 0, 0};
    if (nu.n_plus >= 2) return {2, 0, 0, 0};
    return {0, 2, 0, 0};
}

RationalPolynomial power(const RationalPolynomial& p, int k)
{
    auto acc = RationalPolynomial::one();
    for (int i = 0; i < k; ++i)
        acc = poly_mul(acc, p);
    return acc;
}

RationalPolynomial linear(long root)
{
    return RationalPolynomial({Rational(-root), Rational(1)});
}

}  // namespace

InertiaTRealization realize_inertia_T(const RefinedInertia& nu)
{
    if (!nu.nonnegative() || nu.total() != 8)
        throw PreconditionError("realize_inertia_T needs a nonnegative inertia with total 8, got " + to_string(nu));

    if (nu.n_zero + 2 * nu.n_imag >= 6) {
        const int mi = std::min(nu.n_imag, 3);
        const RefinedInertia mu{0, 0, 6 - 2 * mi, mi};
        std::array<Rational, 3> values{Rational(0), Rational(0), Rational(0)};
        for (int k = 0; k < mi; ++k)
            values[static_cast<std::size_t>(k)] = Rational(k + 1);
        auto block = realize_obs2(values[0], values[1], values[2]);
        RationalPolynomial target = char_poly(block.matrix);
        return {mu, std::move(block), 0, std::move(target)};
    }

    const RefinedInertia mu = nu - d_share(nu);
    // Cubic factors with roots far from the axis, in the fixed order
    // (t-N)^3, (t+N)^3, (t+3N)(t-N)^2, (t-3N)(t+N)^2.
    const std::array<RefinedInertia, 4> shifts{{{3, 0, 0, 0}, {0, 3, 0, 0}, {2, 1, 0, 0}, {1, 2, 0, 0}}};
    std::size_t choice = shifts.size();
    RefinedInertia small;
    for (std::size_t k = 0; k < shifts.size(); ++k) {
        small = mu - shifts[k];
        if (small.nonnegative()) {
            choice = k;
            break;
        }
    }
    if (choice == shifts.size())
        throw std::logic_error("realize_inertia_T: no cubic shift fits " + to_string(mu));

    const RationalPolynomial t_poly({Rational(0), Rational(1)});
    const RationalPolynomial imag_pair({Rational(1), Rational(0), Rational(1)});
    const RationalPolynomial h = poly_mul(poly_mul(power(t_poly, small.n_zero), power(imag_pair, small.n_imag)),
                                          poly_mul(power(linear(1), small.n_plus), power(linear(-1), small.n_minus)));

    constexpr int kMaxDoublings = 64;
    long n = 1;
    for (int step = 0; step < kMaxDoublings; ++step, n *= 2) {
        RationalPolynomial cubic = RationalPolynomial::one();
        switch (choice) {
        case 0: cubic = power(linear(n), 3); break;
        case 1: cubic = power(linear(-n), 3); break;
        case 2: cubic = poly_mul(linear(-3 * n), power(linear(n), 2)); break;
        default: cubic = poly_mul(linear(3 * n), power(linear(-n), 2)); break;
        }
        RationalPolynomial target = poly_mul(cubic, h);
        if (passes_T_gate(target)) {
            auto block = realize_obs3(target);
            return {mu, std::move(block), n, std::move(target)};
        }
    }
    throw std::runtime_error("realize_inertia_T: gate not reached after 64 doublings of N");
}

InertiaTDRealization realize_inertia_TD(const RefinedInertia& nu)
{
    auto t_part = realize_inertia_T(nu);
    const RefinedInertia remainder = nu - t_part.mu;
    RationalPolynomial d_target = d_block_polynomial(remainder);
    auto d_block = realize_quadratic_D(d_target[1], d_target[0]);
    RationalMatrix m = block_diag(std::vector<RationalMatrix>{t_part.block.matrix, d_block});
    return {std::move(t_part), remainder, std::move(d_target), std::move(m)};
}

#define SIGNPAT_INSTANTIATE(S)                                                                                  \
    template Matrix<S> x_template_matrix(const XParams<S>&);                                                    \
    template Matrix<S> realize_quadratic_D(const S&, const S&);                                                 \
    template XParams<S> complete_product_params(const S&, const S&, const S&, const S&, const S&, const S&,     \
                                                const S&);                                                      \
    template TBlockRealization<S> realize_obs2(const S&, const S&, const S&);                                   \
    template XParams<S> complete_general_params(const Polynomial<S>&, const S&, const S&, const S&);            \
    template bool passes_T_gate(const Polynomial<S>&);                                                          \
    template bool satisfies_T_necessary_condition(const Polynomial<S>&);                                        \
    template TBlockRealization<S> realize_obs3(const Polynomial<S>&);                                           \
    template TripleSelection<S> select_T_triple(std::vector<Quadratic<S>>, const S&);

SIGNPAT_INSTANTIATE(Rational)
SIGNPAT_INSTANTIATE(double)

#undef SIGNPAT_INSTANTIATE

}  // namespace signpat
