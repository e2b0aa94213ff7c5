#include "cli.hpp"

#include "cayley/cayley.hpp"
#include "cayley/geometry.hpp"
#include "cayley/json.hpp"
#include "cayley/symmetry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cayley::cli {

namespace {

constexpr unsigned kDefaultMaxN = 20;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind { cayley, family, variant, file };

struct Target {
    Kind kind = Kind::cayley;
    unsigned n = 0;
    Rational b = 0;
    Polynomial poly;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Options shared by the subcommands.
struct Options {
    std::string n_text;
    std::string b_text;
    bool variant = false;
    bool force = false;
    std::string format = "plain";
    std::string checks = "all";
    std::string file;
};

unsigned max_n_without_force() {
    if (const char* env = std::getenv("CAYLEY_MAX_N")) {
        try {
            const long value = std::stol(env);
            if (value > 0) return static_cast<unsigned>(value);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("CAYLEY_MAX_N must be a positive integer, got '") + env + "'");
    }
    return kDefaultMaxN;
}

unsigned parse_n(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw UsageError("invalid --n '" + text + "': expected a positive integer");
    const unsigned long value = std::stoul(text);
    if (value == 0 || value > 100000) throw UsageError("invalid --n '" + text + "': expected a positive integer");
    return static_cast<unsigned>(value);
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned n = parse_n(text);
        return {n, n};
    }
    const unsigned lo = parse_n(text.substr(0, dots));
    const unsigned hi = parse_n(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
}

Rational parse_b(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid --b: ") + e.what());
    }
}

void guard_size(unsigned n, bool force) {
    const unsigned limit = max_n_without_force();
    if (n > limit && !force)
        throw UsageError("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(limit) +
                         "; pass --force or raise CAYLEY_MAX_N");
}

Polynomial read_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read polynomial file '" + path + "'");
    try {
        return polynomial_from_json(Json::parse(in));
    } catch (const Json::exception& e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError("'" + path + "': " + e.what());
    }
}

Target make_target(const Options& opt, std::optional<unsigned> n) {
    Target t;
    if (!opt.file.empty()) {
        if (opt.variant || !opt.b_text.empty()) throw UsageError("--file cannot be combined with --variant or --b");
        t.kind = Kind::file;
        t.poly = read_polynomial_file(opt.file);
        t.n = static_cast<unsigned>(t.poly.dimension());
        return t;
    }
    if (opt.variant) {
        if (!opt.b_text.empty()) throw UsageError("--variant cannot be combined with --b");
        if (n && *n != 4) throw UsageError("the variant surface exists only for n = 4");
        t.kind = Kind::variant;
        t.n = 4;
        t.poly = variant_surface_4();
        return t;
    }
    if (!n) throw UsageError("--n is required");
    t.n = *n;
    guard_size(t.n, opt.force);
    if (!opt.b_text.empty()) t.b = parse_b(opt.b_text);
    if (t.b == 0) {
        t.kind = Kind::cayley;
        t.poly = cayley_poly(t.n);
    } else {
        t.kind = Kind::family;
        t.poly = family_poly(t.n, t.b);
    }
    return t;
}

std::optional<unsigned> optional_n(const Options& opt) {
    if (opt.n_text.empty()) return std::nullopt;
    return parse_n(opt.n_text);
}

// ------------------------------------------------------------------ checks

Signature expected_cayley_signature(unsigned n) {
    if (n % 2 == 1) return {(n - 1) / 2, (n - 1) / 2, 0};
    return {n / 2, (n - 2) / 2, 0};
}

std::string describe(const Signature& s) {
    return "(" + std::to_string(s.positive) + ", " + std::to_string(s.negative) + ", " + std::to_string(s.zero) + ")";
}

CheckResult check_annihilation(const Target& t) {
    const auto fields = cayley_fields(t.n);
    for (std::size_t p = 0; p < fields.size(); ++p)
        if (!apply_field(fields[p], t.poly).is_zero())
            return {"annihilation", false, "X_" + std::to_string(p + 1) + " does not annihilate Phi_N"};
    return {"annihilation", true, std::to_string(fields.size()) + " fields X_p annihilate Phi_N"};
}

CheckResult check_abelian(const Target& t) {
    const auto fields = cayley_fields(t.n);
    const auto normal = AffineVectorField::coordinate(t.n, t.n);
    for (std::size_t p = 0; p < fields.size(); ++p) {
        for (std::size_t q = p + 1; q < fields.size(); ++q)
            if (!commutator(fields[p], fields[q]).is_zero())
                return {"abelian", false,
                        "[X_" + std::to_string(p + 1) + ", X_" + std::to_string(q + 1) + "] is nonzero"};
        if (!commutator(fields[p], normal).is_zero())
            return {"abelian", false, "X_" + std::to_string(p + 1) + " does not commute with d/dx_N"};
    }
    if (commutator(normal, euler_field(t.n)) != Rational(t.n) * normal)
        return {"abelian", false, "[d/dx_N, H] != N d/dx_N"};
    return {"abelian", true, "all [X_p, X_q] and [X_p, d/dx_N] vanish; [d/dx_N, H] = N d/dx_N"};
}

CheckResult check_homogeneity(const Target& t) {
    std::vector<unsigned> weights(t.n);
    for (unsigned h = 0; h < t.n; ++h) weights[h] = h + 1;
    if (!weighted_degree_check(t.poly, weights, t.n)) return {"homogeneity", false, "not weighted homogeneous"};
    if (apply_field(euler_field(t.n), t.poly) != Rational(t.n) * t.poly)
        return {"homogeneity", false, "H Phi != N Phi"};
    return {"homogeneity", true, "weighted homogeneous of weight " + std::to_string(t.n) + "; H Phi = N Phi"};
}

CheckResult check_isotropy(const Target& t) {
    const SymmetryAlgebra iso = isotropy_at_origin(t.poly);
    const std::string detail = "isotropy dimension " + std::to_string(iso.dimension());
    if (t.kind == Kind::variant) return {"isotropy", iso.dimension() == 2, detail};
    const bool ok = iso.dimension() == 1 && span_contains(iso.basis, {euler_field(t.n)});
    return {"isotropy", ok, detail + (ok ? ", spanned by H" : "")};
}

Polynomial graph_of(const Target& t) {
    auto f = as_graph(t.poly);
    if (!f) throw std::logic_error("target is not a graph");
    return *f;
}

CheckResult check_traces(const Target& t) {
    const Polynomial f = graph_of(t);
    const int degree = f.total_degree();
    const SymmetricTensor taylor_inv = metric_inverse(taylor_tensor(f, 2));
    for (int m = 3; m <= degree; ++m)
        if (!trace(taylor_tensor(f, static_cast<unsigned>(m)), taylor_inv).is_zero())
            return {"traces", false, "Taylor tensor of order " + std::to_string(m) + " is not trace-free"};
    if (t.kind == Kind::cayley) {
        const SymmetricTensor g = indicator_tensor(t.n, 2);
        const SymmetricTensor g_inv = metric_inverse(g);
        if (g_inv != g) return {"traces", false, "indicator metric is not its own inverse"};
        for (unsigned m = 3; m <= t.n; ++m)
            if (!trace(indicator_tensor(t.n, m), g_inv).is_zero())
                return {"traces", false, "indicator tensor of order " + std::to_string(m) + " is not trace-free"};
    }
    return {"traces", true, "tensors of orders 3.." + std::to_string(std::max(degree, 3)) + " are trace-free"};
}

CheckResult check_pick(const Target& t) {
    const Polynomial f = graph_of(t);
    const Rational taylor = pick_invariant(taylor_tensor(f, 2), taylor_tensor(f, 3));
    Rational indicator = 0;
    if (t.kind == Kind::cayley) indicator = pick_invariant(indicator_tensor(t.n, 2), indicator_tensor(t.n, 3));
    return {"pick", taylor == 0 && indicator == 0, "pick = " + to_fraction_string(taylor)};
}

CheckResult check_signature(const Target& t) {
    const Signature expected = expected_cayley_signature(t.n);
    const Signature taylor = signature(taylor_tensor(graph_of(t), 2));
    bool ok = taylor == expected;
    if (t.kind == Kind::cayley) ok = ok && signature(indicator_tensor(t.n, 2)) == expected;
    return {"signature", ok, "signature " + describe(taylor) + ", expected " + describe(expected)};
}

CheckResult check_ruling(const Target& t) {
    const RulingReport r = ruling_check(t.poly);
    const unsigned expected = t.n % 2 == 1 ? (t.n - 1) / 2 : (t.n - 2) / 2;
    return {"ruling", r.is_linear && r.plane_dimension == expected,
            "ruled by " + std::to_string(r.plane_dimension) + "-planes, linear = " + (r.is_linear ? "true" : "false")};
}

CheckResult check_hessian(const Target& t) {
    const Polynomial det = hessian_determinant(graph_of(t));
    if (!det.is_constant()) return {"hessian", false, "Hessian determinant is not constant: " + to_string(det)};
    return {"hessian", true, "Hessian determinant = " + to_fraction_string(det.constant_term())};
}

CheckResult check_orbit(const Target& t) {
    std::mt19937 rng(t.n);
    auto random_rational = [&rng] {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 9) + 1;
        return make_rational(num, den);
    };
    constexpr int kSamples = 20;
    for (int s = 0; s < kSamples; ++s) {
        RationalVector params(t.n - 1);
        for (auto& x : params) x = random_rational();
        const RationalVector point = orbit_point(t.n, params);
        if (evaluate(t.poly, point) != 0) return {"orbit", false, "orbit point off the hypersurface"};
        if (parameters_for_point(t.n, RationalVector(point.begin(), point.end() - 1)) != params)
            return {"orbit", false, "parameters_for_point does not invert orbit_point"};
    }
    const auto fields = cayley_fields(t.n);
    const Rational time = random_rational();
    for (const auto& x : fields)
        if (substitute_affine(t.poly, exp_field(x, time)) != t.poly)
            return {"orbit", false, "a flow of X_p does not preserve Phi_N"};
    return {"orbit", true, std::to_string(kSamples) + " orbit points on the hypersurface; flows preserve Phi_N"};
}

using CheckFn = std::function<CheckResult(const Target&)>;

struct CheckSpec {
    std::string name;
    CheckFn run;
    std::vector<Kind> kinds;
};

const std::vector<CheckSpec>& check_table() {
    static const std::vector<CheckSpec> table = {
        {"annihilation", check_annihilation, {Kind::cayley}},
        {"abelian", check_abelian, {Kind::cayley}},
        {"homogeneity", check_homogeneity, {Kind::cayley, Kind::family}},
        {"isotropy", check_isotropy, {Kind::cayley, Kind::variant}},
        {"traces", check_traces, {Kind::cayley, Kind::family, Kind::variant, Kind::file}},
        {"pick", check_pick, {Kind::cayley, Kind::family, Kind::variant, Kind::file}},
        {"signature", check_signature, {Kind::cayley, Kind::family, Kind::variant, Kind::file}},
        {"ruling", check_ruling, {Kind::cayley, Kind::family, Kind::file}},
        {"hessian", check_hessian, {Kind::cayley, Kind::variant, Kind::file}},
        {"orbit", check_orbit, {Kind::cayley}},
    };
    return table;
}

bool applies(const CheckSpec& spec, Kind kind) {
    return std::find(spec.kinds.begin(), spec.kinds.end(), kind) != spec.kinds.end();
}

std::string kind_name(Kind k) {
    switch (k) {
    case Kind::cayley: return "cayley";
    case Kind::family: return "family";
    case Kind::variant: return "variant";
    case Kind::file: return "file";
    }
    return "";
}

// Resolves the --checks list against the table; "all" keeps the pinned order
// and drops checks that do not apply to the target kind.
std::vector<const CheckSpec*> select_checks(const std::string& list, Kind kind) {
    std::vector<const CheckSpec*> selected;
    if (list == "all") {
        for (const auto& spec : check_table())
            if (applies(spec, kind)) selected.push_back(&spec);
        return selected;
    }
    std::stringstream stream(list);
    std::string name;
    std::vector<std::string> requested;
    while (std::getline(stream, name, ',')) {
        if (name.empty()) continue;
        auto it = std::find_if(check_table().begin(), check_table().end(),
                               [&](const CheckSpec& s) { return s.name == name; });
        if (it == check_table().end()) throw UsageError("unknown check '" + name + "'");
        if (!applies(*it, kind))
            throw UsageError("check '" + name + "' does not apply to a " + kind_name(kind) + " target");
        requested.push_back(name);
    }
    if (requested.empty()) throw UsageError("no checks selected");
    for (const auto& spec : check_table())
        if (std::find(requested.begin(), requested.end(), spec.name) != requested.end()) selected.push_back(&spec);
    return selected;
}

Json target_json(const Target& t) {
    Json j;
    j["n"] = t.n;
    if (t.kind == Kind::family) j["b"] = to_fraction_string(t.b);
    j["variant"] = t.kind == Kind::variant;
    return j;
}

Json run_report(const Target& t, const std::vector<const CheckSpec*>& checks) {
    Json results = Json::array();
    std::size_t passed = 0;
    for (const CheckSpec* spec : checks) {
        CheckResult r;
        try {
            r = spec->run(t);
        } catch (const std::exception& e) {
            r = {spec->name, false, std::string("error: ") + e.what()};
        }
        if (r.pass) ++passed;
        results.push_back({{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
    }
    Json report;
    report["target"] = target_json(t);
    report["checks"] = std::move(results);
    report["summary"] = {{"passed", passed},
                         {"failed", checks.size() - passed},
                         {"overall", passed == checks.size() ? "pass" : "fail"}};
    return report;
}

// -------------------------------------------------------------- commands

int cmd_generate(const Options& opt, std::ostream& out) {
    const Target t = make_target(opt, optional_n(opt));
    if (opt.format == "plain")
        out << to_plain_equation(t.poly) << '\n';
    else if (opt.format == "latex")
        out << to_latex(t.poly) << '\n';
    else
        out << polynomial_to_json(t.poly).dump() << '\n';
    return kPass;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    std::vector<unsigned> ns;
    if (!opt.file.empty()) {
        if (!opt.n_text.empty()) throw UsageError("--n cannot be combined with --file");
    } else if (opt.variant) {
        if (!opt.n_text.empty() && parse_range(opt.n_text) != std::pair<unsigned, unsigned>{4, 4})
            throw UsageError("the variant surface exists only for n = 4");
        ns.push_back(4);
    } else {
        if (opt.n_text.empty()) throw UsageError("--n is required");
        const auto [lo, hi] = parse_range(opt.n_text);
        if (lo < 3) throw UsageError("verify needs n >= 3");
        guard_size(hi, opt.force);
        for (unsigned n = lo; n <= hi; ++n) ns.push_back(n);
    }

    // Validate options and check names before any work starts.
    std::vector<Target> targets;
    if (!opt.file.empty()) {
        Target t = make_target(opt, std::nullopt);
        if (t.n < 3) throw UsageError("verify needs n >= 3");
        if (!as_graph(t.poly)) throw UsageError("the polynomial in '" + opt.file + "' is not of the form -x_n + f");
        targets.push_back(std::move(t));
    }
    for (unsigned n : ns) targets.push_back(make_target(opt, n));
    const auto checks = select_checks(opt.checks, targets.front().kind);

    std::vector<std::future<Json>> pending;
    for (const auto& t : targets)
        pending.push_back(std::async(std::launch::async, [&t, &checks] { return run_report(t, checks); }));

    Json reports = Json::array();
    bool all_pass = true;
    for (auto& f : pending) {
        Json r = f.get();
        all_pass = all_pass && r["summary"]["overall"] == "pass";
        reports.push_back(std::move(r));
    }
    Json doc;
    doc["reports"] = std::move(reports);
    doc["overall"] = all_pass ? "pass" : "fail";
    out << doc.dump(2) << '\n';
    return all_pass ? kPass : kCheckFailed;
}

int cmd_symmetries(const Options& opt, std::ostream& out) {
    const Target t = make_target(opt, optional_n(opt));
    Json doc;
    doc["source"] = kind_name(t.kind);
    doc["n"] = t.n;
    if (t.kind == Kind::family) doc["b"] = to_fraction_string(t.b);
    doc["symmetry_algebra"] = algebra_to_json(symmetry_algebra(t.poly));
    doc["isotropy"] = t.poly.constant_term() == 0 ? algebra_to_json(isotropy_at_origin(t.poly)) : Json(nullptr);
    out << doc.dump(2) << '\n';
    return kPass;
}

int cmd_invariants(const Options& opt, std::ostream& out) {
    const Target t = make_target(opt, optional_n(opt));
    if (!as_graph(t.poly)) throw UsageError("invariants need a polynomial of the form -x_N + f(x_1..x_{N-1})");
    if (t.n < 3) throw UsageError("invariants need n >= 3");
    out << invariants_to_json(compute_invariants(t.poly)).dump(2) << '\n';
    return kPass;
}

} // namespace

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& spec : check_table()) v.push_back(spec.name);
        return v;
    }();
    return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cayley hypersurfaces: generation, verification and affine symmetry computations", "cayley"};
    app.require_subcommand(1, 1);
    Options opt;

    auto* generate = app.add_subcommand("generate", "print the defining polynomial");
    auto* verify = app.add_subcommand("verify", "run property checks and print a JSON report");
    auto* symmetries = app.add_subcommand("symmetries", "print the affine symmetry algebra as JSON");
    auto* invariants = app.add_subcommand("invariants", "print the invariants bundle at the origin as JSON");

    for (auto* sub : {generate, verify, symmetries, invariants}) {
        sub->add_option("--n", opt.n_text, sub == verify ? "dimension or inclusive range a..b" : "dimension N");
        sub->add_option("--b", opt.b_text, "family parameter, p/q or integer (default 0)");
        sub->add_flag("--variant", opt.variant, "use the n = 4 variant surface");
        sub->add_flag("--force", opt.force, "allow n above the size guard");
    }
    generate->add_option("--format", opt.format, "latex, json or plain")
        ->check(CLI::IsMember({"latex", "json", "plain"}));
    verify->add_option("--checks", opt.checks, "comma-separated check names or 'all'");
    verify->add_option("--file", opt.file, "polynomial JSON file (graph form -x_n + f)");
    symmetries->add_option("--file", opt.file, "polynomial JSON file");
    invariants->add_option("--file", opt.file, "polynomial JSON file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsageError;
    }

    try {
        if (*generate) return cmd_generate(opt, out);
        if (*verify) return cmd_verify(opt, out);
        if (*symmetries) return cmd_symmetries(opt, out);
        return cmd_invariants(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

} // namespace cayley::cli
