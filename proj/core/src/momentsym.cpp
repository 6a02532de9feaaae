#include "mz/momentsym.hpp"

#include <algorithm>
#include <cmath>

namespace mz {

namespace {

// Newton divided differences, exact.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const size_t n = xs.size();
    std::vector<Rational> dd(ys);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    Polynomial p = Polynomial::constant(dd[0]);
    Polynomial basis = Polynomial::constant(1);
    for (size_t i = 1; i < n; ++i) {
        basis = basis * Polynomial{{-xs[i - 1], 1}};
        p = p + basis * dd[i];
    }
    return p;
}

void require_increasing(const std::vector<Rational>& c) {
    if (c.size() < 2) throw NotIncreasing("need at least two points");
    for (size_t i = 1; i < c.size(); ++i)
        if (!(c[i - 1] < c[i])) throw NotIncreasing("points must be strictly increasing");
}

Polynomial alternating_poly(const std::vector<Rational>& c) {
    std::vector<Rational> ys(c.size());
    for (size_t i = 0; i < c.size(); ++i) ys[i] = (i % 2 == 1) ? 1 : 0;  // 1-based: 0 odd, 1 even
    return interpolate(c, ys);
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Bisection on the exact polynomial; lo carries `want` sign, hi the opposite.
double bisect(const Polynomial& g, Rational lo, Rational hi, int want) {
    for (int it = 0; it < 60; ++it) {
        Rational mid = (lo + hi) / 2;
        int s = sign_of(poly_eval(g, mid));
        if (s == 0) return to_double(mid);
        if (s == want) lo = mid; else hi = mid;
    }
    return to_double((lo + hi) / 2);
}

// Interior alternating points of the interpolant through exact nodes c.
// Constructive: around each interior node the complementary level is crossed
// once more on the overshoot side; exact ties p'(c_j) = 0 take the node
// itself.
std::vector<AltPoint> alternants_of(const std::vector<Rational>& c) {
    require_increasing(c);
    const int m = static_cast<int>(c.size()) - 1;
    std::vector<AltPoint> out;
    if (m < 2) return out;
    const Polynomial p = alternating_poly(c);
    const Polynomial dp = p.derivative();

    for (int j = 2; j <= m; ++j) {  // 1-based interior nodes
        const Rational& node = c[static_cast<size_t>(j - 1)];
        const bool even_node = (j % 2 == 0);
        const Rational target = even_node ? 1 : 0;
        const Rational dval = poly_eval(dp, node);
        if (dval == 0) {
            out.push_back({to_double(node), node});
            continue;
        }
        // Overshoot side: the extremum beyond the target level sits left or
        // right of the node depending on the derivative sign.
        const int ds = sign_of(dval);
        const int want = even_node ? +1 : -1;  // sign of p - target in the overshoot region
        bool rightward;
        if (even_node) rightward = (ds > 0);
        else rightward = (ds < 0);
        const Rational far = rightward ? c[static_cast<size_t>(j)] : c[static_cast<size_t>(j - 2)];

        const Polynomial g = p - Polynomial::constant(target);
        Rational probe;
        bool found = false;
        Rational step = (far - node) / 2;
        for (int i = 0; i < 100; ++i) {
            probe = node + step;
            if (sign_of(poly_eval(g, probe)) == want) { found = true; break; }
            step /= 2;
        }
        if (!found)
            throw BisectionFailure("interior_alternants: no overshoot bracket near node " +
                                   format_rational(node));
        out.push_back({bisect(g, probe, far, want), std::nullopt});
    }

    std::sort(out.begin(), out.end(),
              [](const AltPoint& a, const AltPoint& b) { return a.value < b.value; });
    for (size_t i = 1; i < out.size(); ++i)
        if (!(out[i - 1].value < out[i].value))
            throw BisectionFailure("interior_alternants: points failed to separate");
    return out;
}

std::vector<Rational> to_exact_points(const std::vector<AltPoint>& pts) {
    std::vector<Rational> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.exact ? *p.exact : Rational(p.value));
    return out;
}

} // namespace

Polynomial alternating_interpolant(const std::vector<Rational>& c) {
    require_increasing(c);
    return alternating_poly(c);
}

std::vector<AltPoint> interior_alternants(const std::vector<Rational>& c) {
    return alternants_of(c);
}

AlternatingSystem solve_moment_symmetry(const std::vector<Rational>& c, int s) {
    require_increasing(c);
    const int m = static_cast<int>(c.size()) - 1;
    if (s < 1 || s > m - 1 || (m - 1 - s) % 2 != 0)
        throw InvalidParity("solve_moment_symmetry: s must be in {m-1, m-3, ...} and >= 1");

    std::vector<AltPoint> pts = alternants_of(c);
    while (static_cast<int>(pts.size()) > s)
        pts = alternants_of(to_exact_points(pts));

    AlternatingSystem sys;
    sys.c = c;
    sys.s = s;
    for (const auto& p : pts) {
        sys.x.push_back(p.value);
        sys.x_exact.push_back(p.exact);
    }
    return sys;
}

std::vector<double> verify_moment_system(const std::vector<Rational>& c,
                                         const std::vector<double>& x, int s) {
    std::vector<double> residuals;
    residuals.reserve(static_cast<size_t>(s));
    for (int j = 1; j <= s; ++j) {
        double lhs = 0.0, rhs = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            const double term = std::pow(x[i], j);
            if (i % 2 == 0) lhs += term; else rhs += term;  // odd/even in 1-based indexing
        }
        for (size_t i = 0; i < c.size(); ++i) {
            const double term = std::pow(to_double(c[i]), j);
            if (i % 2 == 1) lhs += term; else rhs += term;
        }
        residuals.push_back(std::abs(lhs - rhs));
    }
    return residuals;
}

RemainingRootsReport check_remaining_roots(
    const Polynomial& r_plus, const Polynomial& r_minus,
    const std::vector<std::pair<Rational, SymbolSide>>& c_assignment) {
    if (r_plus.degree() != r_minus.degree())
        throw HypothesisViolation("check_remaining_roots: symbol polynomials must share a degree");
    if (c_assignment.empty())
        throw HypothesisViolation("check_remaining_roots: empty root assignment");

    Polynomial plus = r_plus * (Rational(1) / r_plus.leading());
    Polynomial minus = r_minus * (Rational(1) / r_minus.leading());
    Rational lo = c_assignment.front().first, hi = c_assignment.front().first;
    for (const auto& [cv, side] : c_assignment) {
        lo = std::min(lo, cv);
        hi = std::max(hi, cv);
        Polynomial& target = (side == SymbolSide::Plus) ? plus : minus;
        auto [q, rem] = poly_div_linear(target, cv);
        if (rem != 0)
            throw HypothesisViolation("check_remaining_roots: " + format_rational(cv) +
                                      " is not a root of the assigned polynomial");
        target = q;
    }

    RemainingRootsReport rep;
    auto gather = [&](const Polynomial& p, std::vector<ComplexRoot>& dst) {
        if (p.degree() < 1) return;
        for (const auto& r : find_roots(p).roots)
            for (int i = 0; i < r.multiplicity; ++i) dst.push_back(r);
    };
    gather(plus, rep.plus_remaining);
    gather(minus, rep.minus_remaining);

    std::vector<ComplexRoot> all(rep.plus_remaining);
    all.insert(all.end(), rep.minus_remaining.begin(), rep.minus_remaining.end());
    for (const auto& r : all) {
        if (std::abs(r.value.imag()) > r.radius + 1e-9) rep.all_real = false;
        if (r.exact) {
            if (!(*r.exact > lo && *r.exact < hi)) rep.all_inside = false;
        } else {
            if (!(r.value.real() - r.radius > to_double(lo) &&
                  r.value.real() + r.radius < to_double(hi)))
                rep.all_inside = false;
        }
    }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (std::abs(all[i].value - all[j].value) <= all[i].radius + all[j].radius + 1e-12)
                rep.all_distinct = false;
    return rep;
}

NodeFamilyReport verify_node_family(const std::vector<Rational>& nodes, const Rational& q) {
    NodeFamilyReport rep;
    rep.n = static_cast<int>(nodes.size()) - 1;
    DifferenceOp op = riemann_weights(nodes);
    GeometricDifference g = from_nodes_geometric(op, q);
    rep.has_zero_node = std::any_of(nodes.begin(), nodes.end(),
                                    [](const Rational& b) { return b == 0; });
    rep.l = g.neg.empty() ? -1 : g.neg.rbegin()->first;
    rep.t = g.pos.empty() ? -1 : g.pos.rbegin()->first;
    rep.counting_ok = rep.has_zero_node ? (rep.l + rep.t + 3 == rep.n + 1)
                                        : (rep.l + rep.t + 2 == rep.n + 1);

    auto [rp, rm] = symmetric_split(g);
    rep.verdict = classify_symmetric(rp, rm, q, rep.n);
    rep.verdict.detected_order = detect_order(op) ? std::optional<int>(detect_order(op)->order)
                                                  : std::nullopt;

    // Forced alternating roots q^k, k below the order, split by parity. With
    // a zero node the k = 0 root moves into the zero coefficient instead.
    const int k0 = rep.has_zero_node ? 1 : 0;
    std::vector<std::pair<Rational, SymbolSide>> assignment;
    for (int k = k0; k <= rep.n - 1; ++k) {
        ForcedRoot fr;
        fr.value = rational_pow(q, k);
        fr.side = (k % 2 == 0) ? SymbolSide::Plus : SymbolSide::Minus;
        const Polynomial& poly = (fr.side == SymbolSide::Plus) ? rp : rm;
        fr.verified = (poly_eval(poly, fr.value) == 0);
        rep.forced.push_back(fr);
        assignment.emplace_back(fr.value, fr.side);
    }
    std::sort(assignment.begin(), assignment.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rep.remaining = check_remaining_roots(rp, rm, assignment);
    return rep;
}

} // namespace mz
