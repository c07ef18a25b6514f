// signpat: realize polynomials and refined inertias over sign patterns, and
// run the exact verification suites.
//
// Exit status: 0 success, 1 verification or root-finding failure, 2 usage or
// precondition error.

#include "signpat/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using namespace signpat;

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2 };

enum class Backend { Rational, Float };

struct CliConfig {
    double tol = kDefaultTolerance;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    std::optional<Backend> backend;
    std::string out;

    std::string poly_path;
    int t = 1;
    int d = 5;
    std::vector<int> inertia;
    std::string which = "all";
    std::string pattern_name;
};

// Raised for errors that map to exit status 2 outside the library.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common_flags(CLI::App* cmd, CliConfig& cfg)
{
    cmd->add_option("--tol", cfg.tol, "Tolerance for classification and residuals")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
    cmd->add_option("--samples", cfg.samples, "Sample count for identity checks")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    cmd->add_option("--backend", cfg.backend, "rational or float")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Backend>{{"rational", Backend::Rational},
                                                                           {"float", Backend::Float}}));
    cmd->add_option("--out", cfg.out, "Write JSON here instead of stdout");
}

json read_json(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void emit(const CliConfig& cfg, const json& doc)
{
    if (cfg.out.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(cfg.out);
    if (!out)
        throw UsageError("cannot write " + cfg.out);
    out << doc.dump(2) << '\n';
}

int cmd_realize(const CliConfig& cfg)
{
    const json doc = read_json(cfg.poly_path);
    if (cfg.backend.value_or(Backend::Float) == Backend::Rational) {
        const auto f = rational_polynomial_from_json(doc);
        const auto rep = realize_V(f, cfg.t, cfg.d, cfg.tol);
        emit(cfg, to_json(rep));
        return verify_realization(rep, 10.0 * cfg.tol * static_cast<double>(f.degree())) ? kOk : kFailed;
    }
    const auto f = float_polynomial_from_json(doc);
    const auto rep = realize_V(f, cfg.t, cfg.d, cfg.tol);
    emit(cfg, to_json(rep));
    return verify_realization(rep, 10.0 * cfg.tol * static_cast<double>(f.degree())) ? kOk : kFailed;
}

int cmd_inertia(const CliConfig& cfg)
{
    if (cfg.inertia.size() != 4)
        throw UsageError("inertia needs four integers n+ n- n0 ni");
    const RefinedInertia nu{cfg.inertia[0], cfg.inertia[1], cfg.inertia[2], cfg.inertia[3]};
    if (!nu.nonnegative())
        throw UsageError("inertia entries must be nonnegative");
    if (nu.total() != 8)
        throw UsageError("n+ + n- + n0 + 2 ni must equal 8, got " + std::to_string(nu.total()));
    const auto rep = realize_inertia_TD(nu);
    const auto classified = cfg.backend.value_or(Backend::Rational) == Backend::Rational
                                ? refined_inertia_of(rep.matrix, cfg.tol)
                                : refined_inertia_of(to_float(rep.matrix), cfg.tol);
    json out = to_json(rep);
    out["requested"] = to_json(nu);
    out["classified"] = to_json(classified);
    out["pattern"] = to_json(builtin_pattern({PatternName::Kind::TD}));
    if (cfg.backend == Backend::Float)
        out["matrix"] = to_json(to_float(rep.matrix));
    emit(cfg, out);
    return classified == nu ? kOk : kFailed;
}

int cmd_verify(const CliConfig& cfg)
{
    if (cfg.backend == Backend::Float)
        throw UsageError("verify runs on the rational backend only");
    json out = json::object();
    bool passed = true;
    const bool all = cfg.which == "all";
    if (all || cfg.which == "identities") {
        const auto t = check_identity_T(cfg.samples, cfg.seed);
        const auto tp = check_identity_Tprime(cfg.samples, cfg.seed + 1);
        out["identities"] = {{"T", to_json(t)}, {"Tprime", to_json(tp)}, {"passed", t.all_passed && tp.all_passed}};
        passed = passed && t.all_passed && tp.all_passed;
    }
    if (all || cfg.which == "obs12") {
        const auto rep = check_obs12();
        out["obs12"] = to_json(rep);
        passed = passed && rep.passed;
    }
    if (all || cfg.which == "theorem") {
        TheoremConfig tc;
        tc.seed = cfg.seed;
        tc.identity_samples = cfg.samples;
        tc.tol = cfg.tol;
        const auto rep = run_theorem_suite(tc);
        out["theorem"] = to_json(rep);
        passed = passed && rep.passed();
    }
    out["passed"] = passed;
    emit(cfg, out);
    return passed ? kOk : kFailed;
}

int cmd_factor(const CliConfig& cfg)
{
    const auto f = float_polynomial_from_json(read_json(cfg.poly_path));
    if (f.degree() < 2 || f.degree() % 2 != 0)
        throw UsageError("factor needs an even degree >= 2, got degree " + std::to_string(f.degree()));
    const auto roots = find_roots(f, cfg.tol);
    const auto quads = roots_to_quadratics(roots);
    json out = {{"degree", f.degree()},
                {"quadratics", to_json(quads)},
                {"negative_b", count_negative_b(quads)},
                {"residual", roots.residual},
                {"iterations", roots.iterations}};
    if (f.degree() >= 16) {
        const double eps_zero = cfg.tol * (1.0 + max_abs_coeff(f));
        const auto s = select_T_triple(quads, eps_zero);
        out["triple"] = {{"quadratics", to_json(std::vector<Quadratic<double>>(s.triple.begin(), s.triple.end()))},
                         {"class", to_string(s.cls)},
                         {"snapped", s.snapped}};
    }
    emit(cfg, out);
    return kOk;
}

int cmd_pattern(const CliConfig& cfg)
{
    if (!cfg.pattern_name.empty()) {
        const auto name = parse_pattern_name(cfg.pattern_name);
        emit(cfg, {{"name", to_string(name)}, {"pattern", to_json(builtin_pattern(name))}});
        return kOk;
    }
    json out = json::object();
    for (const char* n : {"T", "Tprime", "D", "X", "S", "Sprime", "TD", "U1", "U2", "U3"})
        out[n] = to_json(builtin_pattern(parse_pattern_name(n)));
    emit(cfg, out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sign-pattern realization and verification"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* realize = app.add_subcommand("realize", "Realize a monic polynomial over V(t,d)");
    realize->add_option("--poly", cfg.poly_path, "Polynomial JSON file ('-' for stdin)")->required();
    realize->add_option("--t", cfg.t, "Number of T blocks")->capture_default_str();
    realize->add_option("--d", cfg.d, "Number of D blocks")->capture_default_str();
    add_common_flags(realize, cfg);

    auto* inertia = app.add_subcommand("inertia", "Realize a refined inertia over diag(T,D)");
    inertia->add_option("nu", cfg.inertia, "n+ n- n0 ni")->required()->expected(4);
    add_common_flags(inertia, cfg);

    auto* verify = app.add_subcommand("verify", "Run exact verification suites");
    verify->add_option("which", cfg.which, "identities, obs12, theorem or all")
        ->check(CLI::IsMember({"identities", "obs12", "theorem", "all"}))
        ->capture_default_str();
    add_common_flags(verify, cfg);

    auto* factor = app.add_subcommand("factor", "Group the roots of a polynomial into real quadratics");
    factor->add_option("--poly", cfg.poly_path, "Polynomial JSON file ('-' for stdin)")->required();
    add_common_flags(factor, cfg);

    auto* pattern = app.add_subcommand("pattern", "Print built-in sign patterns");
    pattern->add_option("name", cfg.pattern_name, "T, Tprime, D, X, S, Sprime, TD, U1, U2, U3 or V(t,d)");
    add_common_flags(pattern, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*realize)
            return cmd_realize(cfg);
        if (*inertia)
            return cmd_inertia(cfg);
        if (*verify)
            return cmd_verify(cfg);
        if (*factor)
            return cmd_factor(cfg);
        return cmd_pattern(cfg);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const RootFindingError& e) {
        std::cerr << "error: " << e.what() << " (best residual " << e.best_residual() << ")\n";
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
}
