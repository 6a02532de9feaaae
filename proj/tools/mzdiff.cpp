// mzdiff: decide the Marcinkiewicz-Zygmund property of generalized
// difference operators on geometric nodes, with root-level evidence,
// counterexample witnesses, and moment-symmetry solving.
//
// Exit codes: 0 = HOLDS / DECAYS / suite pass, 1 = FAILS, 2 = UNDECIDED,
// 64 = malformed input, 70 = internal error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mz/json_io.hpp"

namespace {

using namespace mz;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

double default_tol() {
    if (const char* env = std::getenv("MZ_TOL")) {
        try {
            double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {
            throw ParseError("MZ_TOL must be a positive number");
        }
    }
    return 1e-9;
}

std::vector<Rational> parse_rational_csv(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty entry in list: " + csv);
        out.push_back(parse_rational(item));
    }
    if (out.empty()) throw ParseError("empty list");
    return out;
}

Json load_json_arg(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open " + path);
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int verdict_exit(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return kExitHolds;
        case VerdictStatus::Fails: return kExitFails;
        default: return kExitUndecided;
    }
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
    std::string nodes_csv, poly_inline, json_path, q_str;
    int n = 0;
    bool n_set = false;
    double tol = 0.0;
    bool tol_set = false;
};

int run_classify(const ClassifyArgs& a) {
    const double tol = a.tol_set ? a.tol : default_tol();
    std::optional<Rational> q;
    if (!a.q_str.empty()) q = parse_rational(a.q_str);
    std::optional<int> n;
    if (a.n_set) n = a.n;

    std::optional<Polynomial> poly;
    std::optional<DifferenceOp> op;
    if (!a.json_path.empty()) {
        Json j = load_json_arg(a.json_path);
        if (j.contains("poly")) poly = polynomial_from_json(j.at("poly"));
        else if (j.contains("terms")) op = difference_from_json(j);
        else if (j.contains("nodes")) {
            std::vector<Rational> nodes;
            for (const auto& e : j.at("nodes")) nodes.push_back(parse_rational(e.get<std::string>()));
            op = riemann_weights(nodes);
        } else throw ParseError("classify: JSON needs \"poly\", \"terms\", or \"nodes\"");
        if (j.contains("q")) q = parse_rational(j.at("q").get<std::string>());
        if (j.contains("n")) n = j.at("n").get<int>();
    }
    if (!a.poly_inline.empty()) poly = polynomial_from_json(Json::parse(a.poly_inline, nullptr, true));
    if (!a.nodes_csv.empty()) op = riemann_weights(parse_rational_csv(a.nodes_csv));

    if (!q) throw ParseError("classify: --q is required");
    if (poly && op) throw ParseError("classify: give either a polynomial or an operator, not both");
    Verdict v;
    if (poly) {
        if (!n) throw ParseError("classify: --n is required with --poly");
        v = classify_polynomial(*poly, *q, *n, tol);
    } else if (op) {
        v = classify_difference(*op, *q, n, tol);
    } else {
        throw ParseError("classify: need --nodes, --poly, or --json");
    }
    emit(verdict_to_json(v));
    return verdict_exit(v.status);
}

// ---------------------------------------------------------------- weights

int run_weights(const std::string& nodes_csv, const std::string& json_path) {
    std::vector<Rational> nodes;
    if (!json_path.empty()) {
        Json j = load_json_arg(json_path);
        for (const auto& e : j.at("nodes")) nodes.push_back(parse_rational(e.get<std::string>()));
    }
    if (!nodes_csv.empty()) nodes = parse_rational_csv(nodes_csv);
    if (nodes.empty()) throw ParseError("weights: need --nodes or --json");
    DifferenceOp op = riemann_weights(nodes);
    Json out = difference_to_json(op);
    if (auto rep = detect_order(op)) {
        out["order"] = rep->order;
        out["moment_n"] = format_rational(rep->moment_n);
    }
    emit(out);
    return kExitHolds;
}

// ---------------------------------------------------------------- witness

int run_witness(const std::string& q_str, const std::string& a_str, int n, int k_min, int k_max) {
    const Rational q = parse_rational(q_str);
    const Rational A = parse_rational(a_str);
    GridFunction f = build_witness(q, Complex(to_double(A), 0.0), n, k_min, k_max);
    Json out = Json::object();
    out["A"] = format_rational(A);
    out["n"] = n;
    out["grid"] = grid_to_json(f);
    Json decays = Json::array();
    decays.push_back(decay_to_json(decay_report(f, n - 1)));
    decays.push_back(decay_to_json(decay_report(f, n)));
    out["decay"] = std::move(decays);
    emit(out);
    return kExitHolds;
}

// -------------------------------------------------------------- trichotomy

int run_trichotomy(const std::string& a_str, const std::string& q_str, int n) {
    const Rational A = parse_rational(a_str);
    const Rational q = parse_rational(q_str);
    const RecurrenceVerdict v = classify_recurrence(A, q, n);
    Annulus ann = annulus_for(q, n);
    Json out = Json::object();
    out["A"] = format_rational(A);
    out["q"] = format_rational(q);
    out["n"] = n;
    out["annulus"] = {{"inner", ann.inner},
                      {"outer", ann.outer},
                      {"inner_open", ann.inner_open},
                      {"outer_open", ann.outer_open}};
    out["verdict"] = to_string(v);
    emit(out);
    switch (v) {
        case RecurrenceVerdict::Decays: return kExitHolds;
        case RecurrenceVerdict::Fails: return kExitFails;
        default: return kExitUndecided;
    }
}

// --------------------------------------------------------------- momentsym

int run_momentsym(const std::string& c_csv, int s) {
    const std::vector<Rational> c = parse_rational_csv(c_csv);
    AlternatingSystem sys = solve_moment_symmetry(c, s);
    Json out = alternating_to_json(sys);
    Json res = Json::array();
    for (double r : verify_moment_system(c, sys.x, s)) res.push_back(r);
    out["residuals"] = std::move(res);
    emit(out);
    return kExitHolds;
}

// -------------------------------------------------------------- reference-suite

struct Fixture {
    std::string name;
    bool ok = true;
    std::string detail;
};

void check(Fixture& f, bool cond, const std::string& what) {
    if (!cond) {
        f.ok = false;
        if (!f.detail.empty()) f.detail += "; ";
        f.detail += what;
    }
}

// Reference worked examples frozen as a regression suite. `invert` flips the
// annulus verdict of the failing quartic as a negative control: the suite
// must then fail.
std::vector<Fixture> run_fixtures(bool invert) {
    std::vector<Fixture> out;

    {
        Fixture f{"quartic-order3-fails"};
        DifferenceOp op = riemann_weights({0, 1, 2, 16});
        auto rep = detect_order(op);
        check(f, rep && rep->order == 3, "detected order != 3");
        auto ch = to_characteristic(op, 2);
        check(f, ch.p * (Rational(1) / ch.p.leading()) == Polynomial{{224, -120, 0, 0, 1}},
              "characteristic polynomial mismatch");
        RootSet rs = find_roots(Polynomial{{224, -120, 0, 0, 1}});
        bool has2 = false, has4 = false;
        double pair_mod = -1;
        for (const auto& r : rs.roots) {
            if (r.exact && *r.exact == 2) has2 = true;
            if (r.exact && *r.exact == 4) has4 = true;
            if (std::abs(r.value.imag()) > 1e-6) pair_mod = std::abs(r.value);
        }
        check(f, has2 && has4, "rational roots {2,4} not found exactly");
        check(f, std::abs(pair_mod - std::sqrt(28.0)) < 1e-9, "conjugate pair modulus != sqrt(28)");
        Verdict v = classify_difference(op, 2);
        VerdictStatus expect_status = invert
            ? (v.status == VerdictStatus::Fails ? VerdictStatus::Holds : VerdictStatus::Fails)
            : v.status;
        check(f, expect_status == VerdictStatus::Fails, "verdict != FAILS");
        bool pair_inside = false;
        for (const auto& e : v.evidence)
            if (std::abs(e.root.value.imag()) > 1e-6 && e.membership == Membership::Inside)
                pair_inside = true;
        check(f, pair_inside, "conjugate pair not flagged inside (4, 8]");
        out.push_back(f);
    }

    {
        Fixture f{"quintic-n4-holds"};
        Polynomial p{{Rational(-23040, 7), 1984, 0, Rational(-620, 7), 0, 1}};
        auto rr = rational_roots(p);
        check(f, rr.roots.count(2) && rr.roots.count(4) && rr.roots.count(8),
              "rational roots {2,4,8} not found exactly");
        Verdict v = classify_polynomial(p, 2, 4);
        check(f, v.status == VerdictStatus::Holds, "verdict != HOLDS");
        double pair_mod = -1;
        for (const auto& e : v.evidence)
            if (std::abs(e.root.value.imag()) > 1e-6) pair_mod = std::abs(e.root.value);
        check(f, std::abs(pair_mod - std::sqrt(2520.0) / 7.0) < 1e-9,
              "conjugate pair modulus != (6/7)sqrt(70)");
        out.push_back(f);
    }

    {
        Fixture f{"two-sided-quintic-holds"};
        DifferenceOp op;
        op.terms = {{4, -1}, {-15, 0}, {20, 1}, {-10, 2}, {1, 4}};
        GeometricDifference g = from_nodes_geometric(op, 2);
        auto [rp, rm] = symmetric_split(g);
        check(f, rp == Polynomial{{24, -10, 1}}, "r+ != x^2 - 10x + 24");
        check(f, rm == Polynomial{{16, -10, 1}}, "r- != x^2 - 10x + 16");
        Verdict v = classify_difference(op, 2, 4);
        check(f, v.status == VerdictStatus::Holds, "verdict != HOLDS");
        out.push_back(f);
    }

    {
        Fixture f{"asymmetric-riemann-holds"};
        DifferenceOp op = riemann_weights({-2, 1, 2, 4, 8});
        const std::vector<Rational> expect = {Rational(1, 720), Rational(-1, 63), Rational(1, 48),
                                              Rational(-1, 144), Rational(1, 1680)};
        bool weights_ok = op.terms.size() == 5;
        for (size_t i = 0; weights_ok && i < 5; ++i)
            weights_ok = (op.terms[i].coeff == expect[i]);
        check(f, weights_ok, "published weights not reproduced exactly");
        GeometricDifference g = from_nodes_geometric(op, 2);
        auto [rp, rm] = symmetric_split(g);
        for (const Rational& r : {Rational(1), Rational(4), Rational(20, 3)})
            check(f, poly_eval(rp, r) == 0, "r+ root " + format_rational(r) + " missing");
        for (const Rational& r : {Rational(5, 3), Rational(2), Rational(8)})
            check(f, poly_eval(rm, r) == 0, "r- root " + format_rational(r) + " missing");
        check(f, rp.degree() == 3 && rm.degree() == 3, "symbol polynomials not cubic");
        Verdict v = classify_difference(op, 2);
        check(f, v.status == VerdictStatus::Holds, "verdict != HOLDS");
        out.push_back(f);
    }

    {
        Fixture f{"first-order-criterion"};
        const std::vector<std::pair<Rational, bool>> cases = {
            {Rational(1, 2), true}, {1, true}, {Rational(3, 2), false}, {2, false},
            {Rational(5, 2), true}};
        for (const auto& [a, want] : cases)
            check(f, first_order_criterion(a) == want,
                  "A = " + format_rational(a) + " criterion mismatch");
        out.push_back(f);
    }

    {
        Fixture f{"recurrence-trichotomy"};
        check(f, classify_recurrence(Rational(2), 2, 1) == RecurrenceVerdict::Fails,
              "A=2, q=2, n=1 should FAIL");
        check(f, classify_recurrence(Rational(5, 2), 2, 1) == RecurrenceVerdict::Decays,
              "A=5/2, q=2, n=1 should DECAY");
        check(f, classify_recurrence(Rational(1, 4), Rational(1, 2), 2) == RecurrenceVerdict::Fails,
              "A=1/4, q=1/2, n=2 should FAIL (inner boundary closed)");
        out.push_back(f);
    }

    {
        Fixture f{"annulus-orientation"};
        Annulus a = annulus_for(2, 3);
        check(f, a.inner == 4.0 && a.outer == 8.0 && a.inner_open && !a.outer_open,
              "q=2, n=3 annulus != (4, 8]");
        Annulus b = annulus_for(Rational(1, 2), 2);
        check(f, b.inner == 0.25 && b.outer == 0.5 && !b.inner_open && b.outer_open,
              "q=1/2, n=2 annulus != [1/4, 1/2)");
        out.push_back(f);
    }

    {
        Fixture f{"moment-symmetry"};
        AlternatingSystem s1 = solve_moment_symmetry({0, 1, 2}, 1);
        check(f, s1.x.size() == 1 && std::abs(s1.x[0] - 1.0) < 1e-12, "c=(0,1,2) -> x != (1)");
        AlternatingSystem s2 = solve_moment_symmetry({0, 1, 2, 3}, 2);
        check(f,
              s2.x.size() == 2 && std::abs(s2.x[0] - 0.5) < 1e-8 &&
                  std::abs(s2.x[1] - 2.5) < 1e-8,
              "c=(0,1,2,3) -> x != (1/2, 5/2)");
        out.push_back(f);
    }

    {
        Fixture f{"witness-decay-pair"};
        GridFunction w = build_witness(2, Complex(5.0, 0.0), 3, -60, 0);
        DecayReport lo = decay_report(w, 2);
        DecayReport hi = decay_report(w, 3);
        check(f, lo.verdict_o, "m = n-1 certificate should pass");
        check(f, !hi.verdict_o, "m = n certificate should fail");
        out.push_back(f);
    }

    return out;
}

int run_reference_suite(bool invert) {
    std::vector<Fixture> fixtures;
    try {
        fixtures = run_fixtures(invert);
    } catch (const std::exception& e) {
        std::cerr << "suite aborted: " << e.what() << "\n";
        return kExitInternal;
    }
    bool all_ok = true;
    Json summary = Json::object();
    summary["fixtures"] = Json::array();
    for (const auto& f : fixtures) {
        all_ok = all_ok && f.ok;
        std::cout << (f.ok ? "PASS " : "FAIL ") << f.name;
        if (!f.ok) std::cout << "  (" << f.detail << ")";
        std::cout << "\n";
        Json entry = Json::object();
        entry["name"] = f.name;
        entry["pass"] = f.ok;
        if (!f.ok) entry["detail"] = f.detail;
        summary["fixtures"].push_back(std::move(entry));
    }
    summary["all_pass"] = all_ok;
    emit(summary);
    return all_ok ? kExitHolds : kExitFails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MZ-property classifier for geometric difference operators"};
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Classify an operator or polynomial");
    classify->add_option("--nodes", ca.nodes_csv, "Comma-separated rational nodes");
    classify->add_option("--poly", ca.poly_inline, "Coefficients as a JSON array, ascending");
    classify->add_option("--json", ca.json_path, "JSON input file, or - for stdin");
    classify->add_option("--q", ca.q_str, "Geometric ratio");
    classify->add_option("--n", ca.n, "Annulus order")->each([&](const std::string&) { ca.n_set = true; });
    classify->add_option("--tol", ca.tol, "Root radius tolerance")
        ->each([&](const std::string&) { ca.tol_set = true; });

    std::string w_nodes, w_json;
    auto* weights = app.add_subcommand("weights", "Lagrange weights for a node set");
    weights->add_option("--nodes", w_nodes, "Comma-separated rational nodes");
    weights->add_option("--json", w_json, "JSON input file, or - for stdin");

    std::string wi_q, wi_a;
    int wi_n = 1, wi_kmin = -40, wi_kmax = 0;
    auto* witness = app.add_subcommand("witness", "Build an eigenfunction witness with decay reports");
    witness->add_option("--q", wi_q, "Geometric ratio")->required();
    witness->add_option("--A", wi_a, "Recurrence coefficient (rational)")->required();
    witness->add_option("--n", wi_n, "Annulus order")->required();
    witness->add_option("--kmin", wi_kmin, "Smallest grid exponent");
    witness->add_option("--kmax", wi_kmax, "Largest grid exponent");

    std::string tr_q, tr_a;
    int tr_n = 1;
    auto* trichotomy = app.add_subcommand("trichotomy", "Recurrence-coefficient trichotomy");
    trichotomy->add_option("--A", tr_a, "Recurrence coefficient (rational)")->required();
    trichotomy->add_option("--q", tr_q, "Geometric ratio")->required();
    trichotomy->add_option("--n", tr_n, "Annulus order")->required();

    std::string ms_c;
    int ms_s = 1;
    auto* momentsym = app.add_subcommand("momentsym", "Solve the parity power-sum system");
    momentsym->add_option("--c", ms_c, "Comma-separated increasing rationals")->required();
    momentsym->add_option("--s", ms_s, "System size")->required();

    bool suite_invert = false;
    auto* suite = app.add_subcommand("reference-suite", "Run the reference-example regression suite");
    suite->add_flag("--invert-annulus", suite_invert, "Negative control: flip the failing fixture")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify->parsed()) return run_classify(ca);
        if (weights->parsed()) return run_weights(w_nodes, w_json);
        if (witness->parsed()) return run_witness(wi_q, wi_a, wi_n, wi_kmin, wi_kmax);
        if (trichotomy->parsed()) return run_trichotomy(tr_a, tr_q, tr_n);
        if (momentsym->parsed()) return run_momentsym(ms_c, ms_s);
        if (suite->parsed()) return run_reference_suite(suite_invert);
    } catch (const mz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
