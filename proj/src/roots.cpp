#include "signpat/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <utility>

namespace signpat {

namespace {

using cplx = std::complex<double>;

// p(z) and p'(z) by a single Horner pass.
std::pair<cplx, cplx> eval_with_derivative(const FloatPolynomial& p, cplx z)
{
    const auto c = p.coeffs();
    cplx value(0.0);
    cplx deriv(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        deriv = deriv * z + value;
        value = value * z + *it;
    }
    return {value, deriv};
}

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t i)
    {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Newton on the (m-1)-th derivative, where an m-fold root is simple.
cplx polish_multiple_root(const FloatPolynomial& p, std::size_t m, cplx start)
{
    const auto c = p.coeffs();
    std::vector<double> d(c.size() - (m - 1));
    for (std::size_t k = 0; k < d.size(); ++k) {
        double factor = 1.0;
        for (std::size_t j = k + 1; j <= k + m - 1; ++j)
            factor *= static_cast<double>(j);
        d[k] = c[k + m - 1] * factor;
    }
    cplx z = start;
    for (int iter = 0; iter < 50; ++iter) {
        cplx value(0.0);
        cplx deriv(0.0);
        for (auto it = d.rbegin(); it != d.rend(); ++it) {
            deriv = deriv * z + value;
            value = value * z + *it;
        }
        if (deriv == cplx(0.0))
            break;
        const cplx step = value / deriv;
        z -= step;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(z)))
            break;
    }
    return z;
}

// Rounding floor of evaluating p at z by Horner.
double evaluation_floor(const FloatPolynomial& p, cplx z)
{
    const auto c = p.coeffs();
    const double r = std::abs(z);
    double magnitude = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        magnitude = magnitude * r + std::fabs(*it);
    return 4.0 * static_cast<double>(p.degree()) * std::numeric_limits<double>::epsilon() * magnitude;
}

// p^(m)(z) / m!
cplx taylor_coefficient(const FloatPolynomial& p, std::size_t m, cplx z)
{
    const auto c = p.coeffs();
    cplx sum(0.0);
    for (std::size_t k = c.size(); k-- > m;) {
        double binom = 1.0;
        for (std::size_t j = 1; j <= m; ++j)
            binom = binom * static_cast<double>(k - m + j) / static_cast<double>(j);
        sum = sum * z + c[k] * binom;
    }
    return sum;
}

// How far rounding scatters the copies of an m-fold root at z.
double multiple_root_scatter(const FloatPolynomial& p, std::size_t m, cplx z)
{
    const double lead = std::abs(taylor_coefficient(p, m, z));
    if (lead == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::pow(evaluation_floor(p, z) / lead, 1.0 / static_cast<double>(m));
}

// Roots that the working precision cannot separate are replaced by one
// polished center repeated with the cluster's multiplicity. Candidate links
// are pairs inside each other's Newton inclusion disc (radius n |p/p'|,
// doubled); near a multiple root these discs are very loose, so links are
// tried nearest first and a merge is kept only if the combined cluster is no
// wider than rounding explains and its polished center has residual <= tol.
void merge_clusters(const FloatPolynomial& p, std::vector<cplx>& z, double tol)
{
    const std::size_t n = z.size();
    const double degree = static_cast<double>(p.degree());
    std::vector<double> radius(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const auto [value, deriv] = eval_with_derivative(p, z[k]);
        // |p(z)| can round to exactly zero at a multiple root; the evaluation
        // error bound keeps the disc from collapsing.
        const double size = std::max(std::abs(value), evaluation_floor(p, z[k]));
        radius[k] = std::abs(deriv) > 0.0 ? degree * size / std::abs(deriv)
                                          : std::numeric_limits<double>::infinity();
    }

    struct Link {
        double distance;
        std::size_t a;
        std::size_t b;
    };
    std::vector<Link> links;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = k + 1; j < n; ++j) {
            const double dist = std::abs(z[k] - z[j]);
            if (dist <= 2.0 * std::max(radius[k], radius[j]))
                links.push_back({dist, k, j});
        }
    std::sort(links.begin(), links.end(), [](const Link& x, const Link& y) { return x.distance < y.distance; });

    // members[root] lists the cluster; center[root] is its accepted center.
    std::vector<std::vector<std::size_t>> members(n);
    std::vector<cplx> center(z);
    for (std::size_t k = 0; k < n; ++k)
        members[k] = {k};
    DisjointSets sets(n);

    for (const auto& link : links) {
        const std::size_t ra = sets.find(link.a);
        const std::size_t rb = sets.find(link.b);
        if (ra == rb)
            continue;
        std::vector<std::size_t> joined = members[ra];
        joined.insert(joined.end(), members[rb].begin(), members[rb].end());
        cplx mean(0.0);
        for (auto k : joined)
            mean += z[k];
        mean /= static_cast<double>(joined.size());
        double spread = 0.0;
        for (auto k : joined)
            spread = std::max(spread, std::abs(z[k] - mean));

        const cplx polished = polish_multiple_root(p, joined.size(), mean);
        // Copies of a genuine m-fold root sit at about the rounding scatter
        // from it; anything wider is several distinct roots.
        const double scatter = multiple_root_scatter(p, joined.size(), polished);
        if (spread > 10.0 * scatter)
            continue;
        cplx chosen;
        if (std::abs(polished - mean) <= std::max(2.0 * spread, scatter) && root_residual(p, polished) <= tol)
            chosen = polished;
        else if (root_residual(p, mean) <= tol)
            chosen = mean;
        else
            continue;

        sets.unite(ra, rb);
        const std::size_t root = sets.find(ra);
        members[root] = std::move(joined);
        center[root] = chosen;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t root = sets.find(k);
        if (members[root].size() > 1)
            z[k] = center[root];
    }
}

struct Pairing {
    std::vector<cplx> pairs;  // upper-half representatives
    std::vector<double> reals;
    bool ok = true;
};

// Greedy: take the root furthest from the real axis, match it with the root
// nearest its conjugate, average. Whatever is left is real.
Pairing pair_conjugates(std::vector<cplx> z, double tol)
{
    Pairing out;
    const double pair_tol = std::sqrt(tol);
    while (!z.empty()) {
        auto top = std::max_element(z.begin(), z.end(), [](cplx a, cplx b) {
            return std::fabs(a.imag()) < std::fabs(b.imag());
        });
        if (std::fabs(top->imag()) <= tol)
            break;
        const cplx target = std::conj(*top);
        const cplx chosen = *top;
        z.erase(top);
        if (z.empty()) {
            out.ok = false;
            return out;
        }
        auto mate = std::min_element(z.begin(), z.end(), [&](cplx a, cplx b) {
            return std::abs(a - target) < std::abs(b - target);
        });
        if (std::abs(*mate - target) > pair_tol * (1.0 + std::abs(chosen))) {
            out.ok = false;
            return out;
        }
        cplx avg = 0.5 * (chosen + std::conj(*mate));
        z.erase(mate);
        if (avg.imag() < 0.0)
            avg = std::conj(avg);
        if (avg.imag() <= tol) {
            out.reals.push_back(avg.real());
            out.reals.push_back(avg.real());
        } else {
            out.pairs.push_back(avg);
        }
    }
    for (const auto& w : z)
        out.reals.push_back(w.real());
    for (auto& x : out.reals)
        if (std::fabs(x) <= tol)
            x = 0.0;
    return out;
}

double max_residual(const FloatPolynomial& p, const std::vector<cplx>& z)
{
    double worst = 0.0;
    for (const auto& w : z)
        worst = std::max(worst, root_residual(p, w));
    return worst;
}

}  // namespace

double root_residual(const FloatPolynomial& p, std::complex<double> z)
{
    const double r = std::abs(z);
    double magnitude = 0.0;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        magnitude = magnitude * r + std::fabs(*it);
    return std::abs(evaluate(p, z)) / std::max(max_abs_coeff(p), magnitude);
}

RootMultiset find_roots(const FloatPolynomial& p, double tol, const AberthOptions& options)
{
    if (p.degree() < 1)
        throw PreconditionError("find_roots needs degree >= 1");
    if (!(tol > 0.0))
        throw PreconditionError("find_roots needs tol > 0");

    const std::size_t n = p.degree();
    const double radius = 1.0 + max_abs_coeff(p);
    constexpr double kAngleOffset = 0.4;

    std::vector<cplx> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + kAngleOffset;
        z[k] = std::polar(radius, angle);
    }

    int iterations = 0;
    for (; iterations < options.max_iterations; ++iterations) {
        double max_step = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const auto [value, deriv] = eval_with_derivative(p, z[k]);
            if (value == cplx(0.0))
                continue;
            cplx repulsion(0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k && z[j] != z[k])
                    repulsion += 1.0 / (z[k] - z[j]);
            const cplx denom = deriv / value - repulsion;
            if (denom == cplx(0.0))
                continue;
            const cplx step = 1.0 / denom;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step <= options.step_tolerance * radius) {
            ++iterations;
            break;
        }
    }

    merge_clusters(p, z, tol);
    const Pairing pairing = pair_conjugates(z, tol);
    if (!pairing.ok)
        throw RootFindingError("find_roots: roots are not conjugate-closed after " +
                                   std::to_string(iterations) + " iterations",
                               max_residual(p, z));

    RootMultiset out;
    out.tolerance = tol;
    out.iterations = iterations;
    auto pairs = pairing.pairs;
    std::sort(pairs.begin(), pairs.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (const auto& w : pairs) {
        out.roots.push_back(w);
        out.roots.push_back(std::conj(w));
    }
    auto reals = pairing.reals;
    std::sort(reals.begin(), reals.end());
    for (double x : reals)
        out.roots.emplace_back(x, 0.0);

    out.residual = max_residual(p, out.roots);
    if (!(out.residual <= tol))
        throw RootFindingError("find_roots: residual " + std::to_string(out.residual) +
                                   " exceeds tolerance after " + std::to_string(iterations) + " iterations",
                               out.residual);
    return out;
}

std::vector<Quadratic<double>> roots_to_quadratics(const RootMultiset& r)
{
    if (r.roots.size() % 2 != 0)
        throw ConjugacyError("roots_to_quadratics needs an even number of roots");
    const Pairing pairing = pair_conjugates(r.roots, r.tolerance);
    if (!pairing.ok)
        throw ConjugacyError("roots_to_quadratics: root multiset is not closed under conjugation");

    std::vector<Quadratic<double>> out;
    for (const auto& z : pairing.pairs)
        out.push_back({-2.0 * z.real(), z.real() * z.real() + z.imag() * z.imag()});

    std::vector<double> pos;
    std::vector<double> neg;
    std::size_t zeros = 0;
    for (double x : pairing.reals) {
        if (x > 0.0)
            pos.push_back(x);
        else if (x < 0.0)
            neg.push_back(x);
        else
            ++zeros;
    }
    std::sort(pos.begin(), pos.end(), std::greater<>());
    std::sort(neg.begin(), neg.end());

    auto pair_up = [&out](double x, double y) { out.push_back({-(x + y), x * y}); };
    for (std::size_t i = 0; i + 1 < pos.size(); i += 2)
        pair_up(pos[i], pos[i + 1]);
    for (std::size_t i = 0; i + 1 < neg.size(); i += 2)
        pair_up(neg[i], neg[i + 1]);

    const bool pos_left = pos.size() % 2 == 1;
    const bool neg_left = neg.size() % 2 == 1;
    if (pos_left && neg_left && zeros < 2) {
        pair_up(pos.back(), neg.back());
    } else {
        if (pos_left) {
            pair_up(pos.back(), 0.0);
            --zeros;
        }
        if (neg_left) {
            pair_up(neg.back(), 0.0);
            --zeros;
        }
    }
    for (; zeros >= 2; zeros -= 2)
        pair_up(0.0, 0.0);
    return out;
}

}  // namespace signpat
