#include "mz/classify.hpp"

#include <cmath>

namespace mz {

namespace {

VerdictStatus combine(const std::vector<Evidence>& evidence) {
    bool any_inside = false, any_boundary = false;
    for (const auto& e : evidence) {
        if (e.membership == Membership::Inside) any_inside = true;
        if (e.membership == Membership::BoundaryUndecided) any_boundary = true;
    }
    if (any_inside) return VerdictStatus::Fails;
    if (any_boundary) return VerdictStatus::Undecided;
    return VerdictStatus::Holds;
}

void collect(const Polynomial& p, RootSource source, const Annulus& ann, double tol,
             Verdict& out) {
    if (p.degree() < 1) return;  // constant factor contributes no roots
    try {
        RootSet rs = find_roots(p, tol);
        for (const auto& r : rs.roots)
            out.evidence.push_back({r, annulus_membership(r, ann, tol), source});
    } catch (const NoConvergence& e) {
        out.status = VerdictStatus::Undecided;
        out.note += std::string(e.what()) + "; ";
        out.evidence.push_back(
            {ComplexRoot{Complex(0, 0), std::numeric_limits<double>::infinity(), std::nullopt, p.degree()},
             Membership::BoundaryUndecided, source});
    }
}

} // namespace

Verdict classify_polynomial(const Polynomial& p, const Rational& q, int n, double tol) {
    Verdict v;
    v.n = n;
    v.annulus = annulus_for(q, n);
    collect(p, RootSource::Single, v.annulus, tol, v);
    v.status = combine(v.evidence);
    return v;
}

Verdict classify_symmetric(const Polynomial& r_plus, const Polynomial& r_minus,
                           const Rational& q, int n, double tol) {
    Verdict v;
    v.n = n;
    v.annulus = annulus_for(q, n);
    collect(r_plus, RootSource::Plus, v.annulus, tol, v);
    collect(r_minus, RootSource::Minus, v.annulus, tol, v);
    v.status = combine(v.evidence);
    return v;
}

Verdict classify_difference(const DifferenceOp& d, const Rational& q,
                            std::optional<int> n, double tol) {
    GeometricDifference g = from_nodes_geometric(d, q);
    auto order = detect_order(d);
    if (!n) {
        if (!order) throw NoOrder("classify_difference: no order detected within the search bound");
        n = order->order;
    }
    Verdict v;
    if (g.neg.empty()) {
        auto [rp, rm] = symmetric_split(g);
        v = classify_polynomial(rp, q, *n, tol);
    } else {
        auto [rp, rm] = symmetric_split(g);
        v = classify_symmetric(rp, rm, q, *n, tol);
    }
    if (order) {
        v.detected_order = order->order;
        if (order->order != *n)
            v.note += "supplied n differs from detected order " + std::to_string(order->order) + "; ";
    }
    v.shift = g.shift;
    return v;
}

RecurrenceVerdict classify_recurrence(const Rational& a, const Rational& q, int n) {
    Annulus ann = annulus_for(q, n);
    const Rational m2 = a * a;
    const Rational in2 = ann.inner_exact * ann.inner_exact;
    const Rational out2 = ann.outer_exact * ann.outer_exact;
    const bool above_inner = ann.inner_open ? (m2 > in2) : (m2 >= in2);
    const bool below_outer = ann.outer_open ? (m2 < out2) : (m2 <= out2);
    return (above_inner && below_outer) ? RecurrenceVerdict::Fails : RecurrenceVerdict::Decays;
}

RecurrenceVerdict classify_recurrence(Complex a, const Rational& q, int n, double tol) {
    Annulus ann = annulus_for(q, n);
    const double m = std::abs(a);
    if (std::abs(m - ann.inner) <= tol || std::abs(m - ann.outer) <= tol)
        return RecurrenceVerdict::BoundaryExact;
    return (m > ann.inner && m < ann.outer) ? RecurrenceVerdict::Fails : RecurrenceVerdict::Decays;
}

bool first_order_criterion(const Rational& a) {
    return a <= 1 || a > 2;
}

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "HOLDS";
        case VerdictStatus::Fails: return "FAILS";
        case VerdictStatus::Undecided: return "UNDECIDED";
    }
    return "?";
}

const char* to_string(RecurrenceVerdict v) {
    switch (v) {
        case RecurrenceVerdict::Decays: return "DECAYS";
        case RecurrenceVerdict::Fails: return "FAILS";
        case RecurrenceVerdict::BoundaryExact: return "BOUNDARY_EXACT";
    }
    return "?";
}

const char* to_string(RootSource s) {
    switch (s) {
        case RootSource::Single: return "SINGLE";
        case RootSource::Plus: return "PLUS";
        case RootSource::Minus: return "MINUS";
    }
    return "?";
}

} // namespace mz
